//! Numerical certification of the alternate/Grover equivalence.
//!
//! Paired initial coins make the two walks' amplitudes related pointwise by a
//! fixed linear map, which in turn forces identical spatial distributions.
//! Each residual here is the max-abs violation of one such pointwise identity
//! over the whole lattice window, together with the site where it occurs.

use num_complex::Complex64;

use crate::coin::{grover_equivalent_init, sign_of_index, CoinParams, CoinState2};
use crate::error::{Result, WalkError};
use crate::state::WalkerState;
use crate::walk::{evolve_in_place, probability_grid, WalkKind};

/// A max-abs residual and the site attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SiteResidual {
    pub value: f64,
    pub x: i64,
    pub y: i64,
}

impl SiteResidual {
    fn zero() -> Self {
        Self {
            value: 0.0,
            x: 0,
            y: 0,
        }
    }

    fn update(&mut self, value: f64, x: i64, y: i64) {
        if value > self.value || value.is_nan() {
            *self = Self { value, x, y };
        }
    }
}

/// Residual of an amplitude mapping evaluated with the stated time sign
/// `(−1)^t` and with the opposite global sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappingResidual {
    pub stated: SiteResidual,
    pub flipped: SiteResidual,
}

/// Residual history over a paired evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub max_abs_residual: f64,
    pub per_step: Vec<(usize, f64)>,
    /// `(x, y, t)` of the worst violation.
    pub worst: (i64, i64, usize),
}

impl ResidualReport {
    fn new() -> Self {
        Self {
            max_abs_residual: 0.0,
            per_step: Vec::new(),
            worst: (0, 0, 0),
        }
    }

    fn push(&mut self, t: usize, r: SiteResidual) {
        self.per_step.push((t, r.value));
        if r.value > self.max_abs_residual || r.value.is_nan() {
            self.max_abs_residual = r.value;
            self.worst = (r.x, r.y, t);
        }
    }
}

fn cancellation_with_weights(state: &WalkerState, w_s: f64, w_c: f64) -> Result<SiteResidual> {
    state.ensure_dim(4)?;
    let l = state.half_width() as i64 + 1;
    let a = |x, y, c| state.amp(x, y, c);
    let mut worst = SiteResidual::zero();
    for x in -l..=l {
        for y in -l..=l {
            let along_x = w_s * a(x - 1, y, 0) + w_c * a(x - 1, y, 1) + w_c * a(x + 1, y, 2) + w_s * a(x + 1, y, 3);
            let along_y = w_s * a(x, y - 1, 0) + w_c * a(x, y - 1, 2) + w_c * a(x, y + 1, 1) + w_s * a(x, y + 1, 3);
            worst.update(along_x.norm().max(along_y.norm()), x, y);
        }
    }
    Ok(worst)
}

/// Max over the window of the two Grover-side cancellation identities
/// `α(x−1,y,0) + α(x−1,y,1) + α(x+1,y,2) + α(x+1,y,3) = 0` and
/// `α(x,y−1,0) + α(x,y−1,2) + α(x,y+1,1) + α(x,y+1,3) = 0`.
pub fn cancellation_residual(grover: &WalkerState) -> Result<SiteResidual> {
    cancellation_with_weights(grover, 1.0, 1.0)
}

/// The `|s|`, `|c|`-weighted identities satisfied by the generalized Grover walk.
pub fn cancellation_residual_weighted(grover: &WalkerState, params: &CoinParams) -> Result<SiteResidual> {
    cancellation_with_weights(grover, params.sin().abs(), params.cos().abs())
}

fn check_pair(alt: &WalkerState, grover: &WalkerState) -> Result<()> {
    alt.ensure_dim(2)?;
    grover.ensure_dim(4)?;
    if alt.t() != grover.t() {
        return Err(WalkError::TimeMismatch(alt.t(), grover.t()));
    }
    if alt.half_width() != grover.half_width() {
        return Err(WalkError::WindowMismatch(alt.half_width(), grover.half_width()));
    }
    Ok(())
}

fn mapping_residual_with<F>(alt: &WalkerState, grover: &WalkerState, predict: F) -> MappingResidual
where
    F: Fn(&[Complex64]) -> [Complex64; 2],
{
    let l = alt.half_width() as i64;
    let time_sign = if alt.t().is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut stated = SiteResidual::zero();
    let mut flipped = SiteResidual::zero();
    for x in -l..=l {
        for y in -l..=l {
            let beta = alt.site(x, y);
            let p = predict(grover.site(x, y));
            let r_stated = (beta[0] - time_sign * p[0]).norm().max((beta[1] - time_sign * p[1]).norm());
            let r_flipped = (beta[0] + time_sign * p[0]).norm().max((beta[1] + time_sign * p[1]).norm());
            stated.update(r_stated, x, y);
            flipped.update(r_flipped, x, y);
        }
    }
    MappingResidual { stated, flipped }
}

/// Residual of `β₀ = (−1)^t e^{iπ/4}(α₀ + iα₂)` and `β₁ = (−1)^t e^{iπ/4}(−α₁ + iα₃)`.
pub fn hadamard_mapping_residual(alt: &WalkerState, grover: &WalkerState) -> Result<MappingResidual> {
    check_pair(alt, grover)?;
    let phase = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4);
    let i = Complex64::i();
    Ok(mapping_residual_with(alt, grover, |a| {
        [phase * (a[0] + i * a[2]), phase * (-a[1] + i * a[3])]
    }))
}

/// Residual of the generalized mapping
/// `β₀ = (−1)^{t+ξ} √2 ν₀ (c + (−1)^κ i s) [sign(cs) α₀ + (−1)^κ i α₂]`,
/// `β₁ = (−1)^{t+ξ} √2 ν₀ (c + (−1)^κ i s) [−α₁ + sign(cs) (−1)^κ i α₃]`,
/// without checking that the walks were started from a paired choice.
pub fn mapping_residual(
    alt: &WalkerState,
    grover: &WalkerState,
    params: &CoinParams,
    xi: u8,
    kappa: u8,
    nu0: Complex64,
) -> Result<MappingResidual> {
    check_pair(alt, grover)?;
    let xi_sign = sign_of_index(xi)?;
    let kappa_sign = sign_of_index(kappa)?;
    let (c, s) = (params.cos(), params.sin());
    let sgn = params.sign_cs();
    let i = Complex64::i();
    let prefactor = xi_sign * 2f64.sqrt() * nu0 * Complex64::new(c, kappa_sign * s);
    Ok(mapping_residual_with(alt, grover, |a| {
        [
            prefactor * (sgn * a[0] + kappa_sign * i * a[2]),
            prefactor * (-a[1] + sgn * kappa_sign * i * a[3]),
        ]
    }))
}

/// Checks `|ν₀| = 1/√2` and `ν₁ = (−1)^κ i ν₀`.
pub fn check_paired_alternate_init(init: &CoinState2, kappa: u8) -> Result<()> {
    let kappa_sign = sign_of_index(kappa)?;
    let tol = 1e-12;
    if (init.nu0.norm() - std::f64::consts::FRAC_1_SQRT_2).abs() > tol {
        return Err(WalkError::UnpairedInit(format!("|ν₀| = {} ≠ 1/√2", init.nu0.norm())));
    }
    let expected = kappa_sign * Complex64::i() * init.nu0;
    if (init.nu1 - expected).norm() > tol {
        return Err(WalkError::UnpairedInit(format!(
            "ν₁ = {} ≠ (−1)^κ i ν₀ = {expected} for κ = {kappa}",
            init.nu1
        )));
    }
    Ok(())
}

/// [`mapping_residual`] after validating that `alt_init` is the `κ`-paired
/// alternate coin.
pub fn paired_mapping_residual(
    alt: &WalkerState,
    grover: &WalkerState,
    params: &CoinParams,
    xi: u8,
    kappa: u8,
    alt_init: &CoinState2,
) -> Result<MappingResidual> {
    check_paired_alternate_init(alt_init, kappa)?;
    mapping_residual(alt, grover, params, xi, kappa, alt_init.nu0)
}

/// Max `|ΔP|` between the two walks and the site attaining it.
pub fn distribution_residual(alt: &WalkerState, grover: &WalkerState) -> Result<SiteResidual> {
    if alt.half_width() != grover.half_width() {
        return Err(WalkError::WindowMismatch(alt.half_width(), grover.half_width()));
    }
    let pa = probability_grid(alt);
    let pb = probability_grid(grover);
    let mut worst = SiteResidual::zero();
    for ((x, y, p), (_, _, q)) in pa.iter().zip(pb.iter()) {
        worst.update((p - q).abs(), x, y);
    }
    Ok(worst)
}

/// Residual histories of a paired alternate/Grover evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    pub cancellation: ResidualReport,
    pub mapping: ResidualReport,
    pub mapping_flipped: ResidualReport,
    pub distance: ResidualReport,
}

impl EquivalenceReport {
    /// Worst of the cancellation, stated-sign mapping and distance residuals.
    pub fn max_residual(&self) -> f64 {
        self.cancellation
            .max_abs_residual
            .max(self.mapping.max_abs_residual)
            .max(self.distance.max_abs_residual)
    }
}

/// Evolves the alternate walk from `alt_init` and the generalized Grover walk
/// from its `ξ`-paired coin for `t_max` steps, recording every residual at
/// each `t ∈ 0..=t_max`. `alt_init` is not required to be paired, so a
/// mismatched start shows up as large residuals rather than an error.
pub fn verify_pairing(
    params: &CoinParams,
    xi: u8,
    kappa: u8,
    alt_init: &CoinState2,
    t_max: usize,
) -> Result<EquivalenceReport> {
    sign_of_index(kappa)?;
    let mut alt = WalkerState::new(&alt_init.amplitudes(), t_max)?;
    let mut grover = WalkerState::new(&grover_equivalent_init(params, xi)?.amplitudes(), t_max)?;
    let alt_kind = WalkKind::Alternate(*params);
    let grover_kind = WalkKind::Grover(*params);

    let mut report = EquivalenceReport {
        cancellation: ResidualReport::new(),
        mapping: ResidualReport::new(),
        mapping_flipped: ResidualReport::new(),
        distance: ResidualReport::new(),
    };
    for t in 0..=t_max {
        if t > 0 {
            evolve_in_place(&mut alt, &alt_kind, 1)?;
            evolve_in_place(&mut grover, &grover_kind, 1)?;
        }
        report.cancellation.push(t, cancellation_residual_weighted(&grover, params)?);
        let m = mapping_residual(&alt, &grover, params, xi, kappa, alt_init.nu0)?;
        report.mapping.push(t, m.stated);
        report.mapping_flipped.push(t, m.flipped);
        report.distance.push(t, distribution_residual(&alt, &grover)?);
    }
    Ok(report)
}
