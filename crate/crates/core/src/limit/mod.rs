//! Limit law of the rescaled alternate walk and its two independent
//! numerical evaluations: momentum-space moments from the eigensystem of
//! the step operator, and direct integration of the closed-form density.

mod convergence;
mod density;
mod fourier;
pub mod quadrature;

use nalgebra::Vector2;
use rayon::prelude::*;
use std::f64::consts::PI;

pub use convergence::{convergence_report, ConvergenceRow, LIMIT_DIVISION_FLOOR};
pub use density::{
    density_lattice, density_moment, density_normalization, in_support, limit_density, support_integral,
    LimitDensityParams, LinearNumerator, MIN_DENSITY_POINTS,
};
pub use fourier::{eigensystem_closed_form, step_matrix, Eigensystem, DEGENERACY_TOL};

use crate::error::{Result, WalkError};
use quadrature::{midpoints, pairwise_sum};

/// `lim E[(X_t/t)^r1 (Y_t/t)^r2]` as the `points × points` midpoint rule over
/// `[−π, π)²` of `Σ_j driftX_j^r1 driftY_j^r2 |⟨v_j|ν⟩|²` (with the `1/4π²`
/// measure). `points` must be even so that no node lands on `k = 0`.
pub fn limit_moment(r1: u32, r2: u32, params: &LimitDensityParams, points: usize) -> Result<f64> {
    if points == 0 || !points.is_multiple_of(2) {
        return Err(WalkError::InvalidGrid(format!(
            "momentum grid needs a positive even point count, got {points}"
        )));
    }
    let (ks, h) = midpoints(-PI, PI, points);
    let psi = Vector2::new(params.init.nu0, params.init.nu1);
    let coin = params.coin;
    let rows: Vec<Result<f64>> = ks
        .par_iter()
        .map(|&kx| {
            let mut row = Vec::with_capacity(ks.len());
            for &ky in &ks {
                let e = eigensystem_closed_form(kx, ky, &coin)?;
                let w = e.overlaps(&psi);
                let v = (0..2).map(|j| e.drift_x[j].powi(r1 as i32) * e.drift_y[j].powi(r2 as i32) * w[j]);
                row.push(v.sum());
            }
            Ok(pairwise_sum(&row))
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<f64>>>()?;
    Ok(pairwise_sum(&rows) * h * h / (4.0 * PI * PI))
}

/// Normalized eigenvector overlap sanity: `Σ_j |⟨v_j|ν⟩|²` at one point.
pub fn overlap_total(kx: f64, ky: f64, params: &LimitDensityParams) -> Result<f64> {
    let e = eigensystem_closed_form(kx, ky, &params.coin)?;
    let w = e.overlaps(&Vector2::new(params.init.nu0, params.init.nu1));
    Ok(w[0] + w[1])
}
