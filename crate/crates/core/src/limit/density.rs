//! Long-time limit density of the rescaled position `(X_t/t, Y_t/t)`.
//!
//! ```text
//! f(x, y) = {1 − (|ν₀|² − |ν₁|²) y − (ν₀ν₁* + ν₀*ν₁)/(2cs) [c²(x − y) + s²(x + y)]}
//!           / (π² (1 − x²)(1 − y²))   on   D = {(x+y)²/4c² + (x−y)²/4s² < 1}
//! ```
//!
//! and zero elsewhere. The numerator is linear, so every moment integral
//! `∫∫_D x^r1 y^r2 f` is done exactly in `y` for fixed `x`; only the outer
//! `x` integral is numerical. The outer integrand has `(1 − x)^{-1/2}` type
//! singularities at `x = ±1` (where `D` touches the lines `x = ±1`) and
//! logarithmic ones at `x = ±cos 2γ` (where `D` touches `y = ±1`), so it is
//! split at those points and each piece uses a tanh–sinh rule.

use std::f64::consts::PI;

use crate::coin::{CoinParams, CoinState2};
use crate::error::{Result, WalkError};
use crate::limit::quadrature::{midpoints, pairwise_sum, tanh_sinh};

/// Smallest accepted per-axis point count for density quadratures.
pub const MIN_DENSITY_POINTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitDensityParams {
    pub coin: CoinParams,
    pub init: CoinState2,
}

impl LimitDensityParams {
    pub fn new(coin: CoinParams, init: CoinState2) -> Self {
        Self { coin, init }
    }

    /// `(ν₀ν₁* + ν₀*ν₁)/(2cs)`.
    fn cross_coefficient(&self) -> f64 {
        let (c, s) = (self.coin.cos(), self.coin.sin());
        (self.init.nu0 * self.init.nu1.conj()).re / (c * s)
    }

    fn polarization(&self) -> f64 {
        self.init.nu0.norm_sqr() - self.init.nu1.norm_sqr()
    }

    /// Numerator of `f` as `a₀ + a_x x + a_y y`.
    pub fn numerator(&self) -> LinearNumerator {
        let (c2, s2) = (self.coin.cos().powi(2), self.coin.sin().powi(2));
        let k = self.cross_coefficient();
        LinearNumerator {
            constant: 1.0,
            x: -k * (c2 + s2),
            y: -self.polarization() + k * (c2 - s2),
        }
    }
}

/// `constant + x·X + y·Y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearNumerator {
    pub constant: f64,
    pub x: f64,
    pub y: f64,
}

impl LinearNumerator {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.constant + self.x * x + self.y * y
    }
}

/// Strict membership in the elliptical support `D`.
pub fn in_support(x: f64, y: f64, coin: &CoinParams) -> bool {
    let (c, s) = (coin.cos(), coin.sin());
    (x + y).powi(2) / (4.0 * c * c) + (x - y).powi(2) / (4.0 * s * s) < 1.0
}

/// `f(x, y)`; exactly zero outside `D` and on its boundary.
pub fn limit_density(x: f64, y: f64, params: &LimitDensityParams) -> f64 {
    if !in_support(x, y, &params.coin) {
        return 0.0;
    }
    params.numerator().eval(x, y) / (PI * PI * (1.0 - x * x) * (1.0 - y * y))
}

/// `y`-interval of `D` at fixed `x`, if non-empty.
fn support_slice(x: f64, coin: &CoinParams) -> Option<(f64, f64)> {
    let (c2, s2) = (coin.cos().powi(2), coin.sin().powi(2));
    let a = 1.0 / (4.0 * c2) + 1.0 / (4.0 * s2);
    let b = 2.0 * x * (1.0 / (4.0 * c2) - 1.0 / (4.0 * s2));
    let cc = x * x * a - 1.0;
    let disc = b * b - 4.0 * a * cc;
    if disc <= 0.0 {
        return None;
    }
    let root = disc.sqrt();
    let lo = ((-b - root) / (2.0 * a)).max(-1.0);
    let hi = ((-b + root) / (2.0 * a)).min(1.0);
    (lo < hi).then_some((lo, hi))
}

/// Antiderivative of `y^m / (1 − y²)`:
/// `F₀ = atanh y`, `F₁ = −½ ln(1 − y²)`, `F_m = −y^{m−1}/(m − 1) + F_{m−2}`.
fn rational_antiderivative(m: u32, y: f64) -> f64 {
    match m {
        0 => 0.5 * ((1.0 + y).ln() - (1.0 - y).ln()),
        1 => -0.5 * ((1.0 - y).ln() + (1.0 + y).ln()),
        _ => -y.powi(m as i32 - 1) / (m - 1) as f64 + rational_antiderivative(m - 2, y),
    }
}

/// `∫∫_D x^r1 y^r2 N(x, y) / (π²(1 − x²)(1 − y²)) dx dy` with `points` tanh–sinh
/// nodes on each piece of the outer `x` range.
pub fn support_integral(coin: &CoinParams, numerator: &LinearNumerator, r1: u32, r2: u32, points: usize) -> Result<f64> {
    if points < MIN_DENSITY_POINTS {
        return Err(WalkError::InvalidGrid(format!(
            "density quadrature needs at least {MIN_DENSITY_POINTS} points, got {points}"
        )));
    }
    let touch = (2.0 * coin.gamma()).cos();
    let mut breaks = vec![-1.0, -touch.abs(), touch.abs(), 1.0];
    breaks.dedup_by(|a, b| (*a - *b).abs() < 1e-15);

    let mut terms = Vec::new();
    for w in breaks.windows(2) {
        for (x, weight) in tanh_sinh(w[0], w[1], points) {
            let Some((lo, hi)) = support_slice(x, coin) else {
                continue;
            };
            let f = |m| rational_antiderivative(m, hi) - rational_antiderivative(m, lo);
            let inner = (numerator.constant + numerator.x * x) * f(r2) + numerator.y * f(r2 + 1);
            let value = x.powi(r1 as i32) * inner / (PI * PI * (1.0 - x * x));
            if value.is_finite() {
                terms.push(value * weight);
            }
        }
    }
    Ok(pairwise_sum(&terms))
}

/// `∫∫ f`, which equals one.
pub fn density_normalization(params: &LimitDensityParams, points: usize) -> Result<f64> {
    density_moment(0, 0, params, points)
}

/// `∫∫ x^r1 y^r2 f(x, y) dx dy`.
pub fn density_moment(r1: u32, r2: u32, params: &LimitDensityParams, points: usize) -> Result<f64> {
    support_integral(&params.coin, &params.numerator(), r1, r2, points)
}

/// `f` at the centres of an `n × n` lattice of cells over `[−1, 1]²`, as
/// `(x, y, f)` sorted by `(y, x)`, plus the cell area.
pub fn density_lattice(params: &LimitDensityParams, n: usize) -> (Vec<(f64, f64, f64)>, f64) {
    let (xs, h) = midpoints(-1.0, 1.0, n);
    let mut out = Vec::with_capacity(n * n);
    for &y in &xs {
        for &x in &xs {
            out.push((x, y, limit_density(x, y, params)));
        }
    }
    (out, h * h)
}
