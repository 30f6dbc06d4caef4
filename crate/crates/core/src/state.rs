//! Lattice-indexed amplitude fields.

use num_complex::Complex64;

use crate::coin::NORM_TOL;
use crate::error::{Result, WalkError};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Dense amplitude field over the window `[−L, L]² × coin`.
///
/// Storage is indexed by `((x + L)·(2L + 1) + (y + L))·d + c`. Sites off the
/// parity sublattice of the current time are stored but held at exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkerState {
    pub(crate) t: usize,
    pub(crate) coin_dim: usize,
    pub(crate) half_width: usize,
    pub(crate) amps: Vec<Complex64>,
}

impl WalkerState {
    /// Walker at the origin with coin amplitudes `coin` (length 2 or 4).
    pub fn new(coin: &[Complex64], half_width: usize) -> Result<Self> {
        let d = coin.len();
        if d != 2 && d != 4 {
            return Err(WalkError::UnsupportedCoinDim(d));
        }
        let n: f64 = coin.iter().map(|a| a.norm_sqr()).sum();
        if (n - 1.0).abs() > NORM_TOL {
            return Err(WalkError::NotNormalized(n));
        }
        let mut state = Self::zeros(d, half_width, 0);
        let base = state.index(0, 0, 0);
        state.amps[base..base + d].copy_from_slice(coin);
        Ok(state)
    }

    /// Like [`WalkerState::new`] but checks the window admits `steps` steps.
    pub fn with_capacity(coin: &[Complex64], half_width: usize, steps: usize) -> Result<Self> {
        if steps > half_width {
            return Err(WalkError::WindowOverflow {
                needed: steps,
                half_width,
            });
        }
        Self::new(coin, half_width)
    }

    pub(crate) fn zeros(coin_dim: usize, half_width: usize, t: usize) -> Self {
        let side = 2 * half_width + 1;
        Self {
            t,
            coin_dim,
            half_width,
            amps: vec![ZERO; side * side * coin_dim],
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn coin_dim(&self) -> usize {
        self.coin_dim
    }

    pub fn half_width(&self) -> usize {
        self.half_width
    }

    pub fn side(&self) -> usize {
        2 * self.half_width + 1
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    #[inline]
    pub(crate) fn index(&self, x: i64, y: i64, c: usize) -> usize {
        let l = self.half_width as i64;
        let side = self.side();
        (((x + l) as usize) * side + (y + l) as usize) * self.coin_dim + c
    }

    #[inline]
    pub fn in_window(&self, x: i64, y: i64) -> bool {
        let l = self.half_width as i64;
        x.abs() <= l && y.abs() <= l
    }

    /// Amplitude at `(x, y, c)`; zero outside the window.
    #[inline]
    pub fn amp(&self, x: i64, y: i64, c: usize) -> Complex64 {
        if self.in_window(x, y) {
            self.amps[self.index(x, y, c)]
        } else {
            ZERO
        }
    }

    /// Coin register at site `(x, y)`. Panics outside the window.
    pub fn site(&self, x: i64, y: i64) -> &[Complex64] {
        let i = self.index(x, y, 0);
        &self.amps[i..i + self.coin_dim]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Sites `−t, −t+2, …, t` reachable along one axis at the current time.
    pub fn reachable_axis(&self) -> impl Iterator<Item = i64> + Clone {
        let t = self.t as i64;
        (-t..=t).step_by(2)
    }

    /// Worst `|amp|` over sites that must be exactly zero: off the parity
    /// sublattice of time `t`, or with `max(|x|, |y|) > t`.
    pub fn forbidden_site_max(&self) -> f64 {
        let l = self.half_width as i64;
        let t = self.t as i64;
        let mut worst = 0.0f64;
        for x in -l..=l {
            for y in -l..=l {
                let reachable =
                    (x - t).rem_euclid(2) == 0 && (y - t).rem_euclid(2) == 0 && x.abs() <= t && y.abs() <= t;
                if !reachable {
                    for a in self.site(x, y) {
                        worst = worst.max(a.norm());
                    }
                }
            }
        }
        worst
    }

    /// Largest `|Im a|` over all amplitudes.
    pub fn max_imag(&self) -> f64 {
        self.amps.iter().fold(0.0, |m, a| m.max(a.im.abs()))
    }

    pub(crate) fn ensure_headroom(&self) -> Result<()> {
        if self.t + 1 > self.half_width {
            return Err(WalkError::WindowOverflow {
                needed: self.t + 1,
                half_width: self.half_width,
            });
        }
        Ok(())
    }

    pub(crate) fn ensure_dim(&self, expected: usize) -> Result<()> {
        if self.coin_dim != expected {
            return Err(WalkError::CoinDimMismatch {
                expected,
                found: self.coin_dim,
            });
        }
        Ok(())
    }

    /// Builds a state from raw parts, for tests and oracles that synthesize
    /// arbitrary fields on the parity sublattice.
    pub fn from_parts(t: usize, coin_dim: usize, half_width: usize, amps: Vec<Complex64>) -> Result<Self> {
        if coin_dim != 2 && coin_dim != 4 {
            return Err(WalkError::UnsupportedCoinDim(coin_dim));
        }
        if t > half_width {
            return Err(WalkError::WindowOverflow {
                needed: t,
                half_width,
            });
        }
        let side = 2 * half_width + 1;
        if amps.len() != side * side * coin_dim {
            return Err(WalkError::InvalidGrid(format!(
                "expected {} amplitudes, got {}",
                side * side * coin_dim,
                amps.len()
            )));
        }
        Ok(Self {
            t,
            coin_dim,
            half_width,
            amps,
        })
    }
}
