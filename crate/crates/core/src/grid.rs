//! Spatial probability distributions and their moments.

use crate::error::{Result, WalkError};

/// `P(x, y)` for `x, y ∈ [−L, L]`, stored `x`-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityGrid {
    half_width: usize,
    values: Vec<f64>,
}

impl ProbabilityGrid {
    pub fn from_values(half_width: usize, values: Vec<f64>) -> Result<Self> {
        let side = 2 * half_width + 1;
        if values.len() != side * side {
            return Err(WalkError::InvalidGrid(format!(
                "expected {} values for half-width {half_width}, got {}",
                side * side,
                values.len()
            )));
        }
        Ok(Self { half_width, values })
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn side(&self) -> usize {
        2 * self.half_width + 1
    }

    /// `P(x, y)`; zero outside the window.
    pub fn get(&self, x: i64, y: i64) -> f64 {
        let l = self.half_width as i64;
        if x.abs() > l || y.abs() > l {
            return 0.0;
        }
        self.values[((x + l) as usize) * self.side() + (y + l) as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn total(&self) -> f64 {
        self.values.iter().sum()
    }

    /// `(x, y, P)` for every site.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, f64)> + '_ {
        let l = self.half_width as i64;
        let side = self.side();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &p)| ((i / side) as i64 - l, (i % side) as i64 - l, p))
    }

    /// `Σ x^r1 y^r2 P(x, y)`.
    pub fn moment(&self, r1: u32, r2: u32) -> f64 {
        self.iter()
            .filter(|&(_, _, p)| p != 0.0)
            .map(|(x, y, p)| (x as f64).powi(r1 as i32) * (y as f64).powi(r2 as i32) * p)
            .sum()
    }

    /// `E[(X/t)^r1 (Y/t)^r2]`.
    pub fn scaled_moment(&self, r1: u32, r2: u32, t: usize) -> f64 {
        let scale = (t as f64).powi((r1 + r2) as i32);
        self.moment(r1, r2) / scale
    }
}

/// `max_{x,y} |P(x, y) − P'(x, y)|`.
pub fn distribution_distance(a: &ProbabilityGrid, b: &ProbabilityGrid) -> Result<f64> {
    if a.half_width != b.half_width {
        return Err(WalkError::WindowMismatch(a.half_width, b.half_width));
    }
    Ok(a
        .values
        .iter()
        .zip(&b.values)
        .fold(0.0, |m, (p, q)| m.max((p - q).abs())))
}

/// `max |P(x, y) − P'(map(x, y))|` over `a`'s window, for mirror-symmetry checks.
pub fn mapped_distance<F>(a: &ProbabilityGrid, b: &ProbabilityGrid, map: F) -> f64
where
    F: Fn(i64, i64) -> (i64, i64),
{
    a.iter().fold(0.0, |m, (x, y, p)| {
        let (u, v) = map(x, y);
        m.max((p - b.get(u, v)).abs())
    })
}
