//! Simulated rescaled moments against their long-time limits.

use crate::error::{Result, WalkError};
use crate::limit::{limit_moment, LimitDensityParams};
use crate::state::WalkerState;
use crate::walk::{evolve_in_place, probability_grid, WalkKind};

/// Limits smaller than this in magnitude are treated as vanishing when
/// judging whether a gap shrinks with `t`.
pub const LIMIT_DIVISION_FLOOR: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub t: usize,
    pub r1: u32,
    pub r2: u32,
    pub simulated: f64,
    pub limit: f64,
    pub gap: f64,
}

/// One row per `(t, order)`, `t`-major in the order given. A single walk is
/// evolved to the largest `t` and sampled on the way.
pub fn convergence_report(
    params: &LimitDensityParams,
    t_list: &[usize],
    orders: &[(u32, u32)],
    momentum_points: usize,
) -> Result<Vec<ConvergenceRow>> {
    if t_list.is_empty() || t_list.windows(2).any(|w| w[0] >= w[1]) || t_list[0] == 0 {
        return Err(WalkError::InvalidGrid(format!(
            "times must be positive and strictly ascending, got {t_list:?}"
        )));
    }
    let limits = orders
        .iter()
        .map(|&(r1, r2)| limit_moment(r1, r2, params, momentum_points))
        .collect::<Result<Vec<_>>>()?;

    let t_max = *t_list.last().expect("non-empty");
    let kind = WalkKind::Alternate(params.coin);
    let mut state = WalkerState::new(&params.init.amplitudes(), t_max)?;
    let mut rows = Vec::with_capacity(t_list.len() * orders.len());
    for &t in t_list {
        let steps = t - state.t();
        evolve_in_place(&mut state, &kind, steps)?;
        let grid = probability_grid(&state);
        for (&(r1, r2), &limit) in orders.iter().zip(&limits) {
            let simulated = grid.scaled_moment(r1, r2, t);
            rows.push(ConvergenceRow {
                t,
                r1,
                r2,
                simulated,
                limit,
                gap: (simulated - limit).abs(),
            });
        }
    }
    Ok(rows)
}
