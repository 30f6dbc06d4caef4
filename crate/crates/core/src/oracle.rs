//! Single-step evolution written as direct amplitude recurrences.
//!
//! These gather each amplitude at time `t + 1` from its four source sites at
//! time `t`, independently of the pass-based steps in [`crate::walk`]. With a
//! two-level coin `U`:
//!
//! ```text
//! β₀(x, y; t+1) = U₀₀ Σⱼ U₀ⱼ βⱼ(x+1, y+1; t) + U₀₁ Σⱼ U₁ⱼ βⱼ(x−1, y+1; t)
//! β₁(x, y; t+1) = U₁₀ Σⱼ U₀ⱼ βⱼ(x+1, y−1; t) + U₁₁ Σⱼ U₁ⱼ βⱼ(x−1, y−1; t)
//! ```
//!
//! and with a four-level coin `G`, `α_k(x, y; t+1) = Σⱼ G_kj αⱼ(x − δx_k, y − δy_k; t)`.

use num_complex::Complex64;

use crate::coin::CoinOperator;
use crate::error::Result;
use crate::state::WalkerState;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn row_dot(coin: &CoinOperator, row: usize, state: &WalkerState, x: i64, y: i64) -> Complex64 {
    (0..coin.dim()).fold(ZERO, |acc, j| acc + coin.get(row, j) * state.amp(x, y, j))
}

pub fn recurrence_oracle_alternate(state: &WalkerState, coin: &CoinOperator) -> Result<WalkerState> {
    state.ensure_dim(2)?;
    coin_dim_check(coin, 2)?;
    state.ensure_headroom()?;
    let t1 = state.t + 1;
    let mut out = WalkerState::zeros(2, state.half_width, t1);
    let r = t1 as i64;
    for x in (-r..=r).step_by(2) {
        for y in (-r..=r).step_by(2) {
            let b0 = coin.get(0, 0) * row_dot(coin, 0, state, x + 1, y + 1)
                + coin.get(0, 1) * row_dot(coin, 1, state, x - 1, y + 1);
            let b1 = coin.get(1, 0) * row_dot(coin, 0, state, x + 1, y - 1)
                + coin.get(1, 1) * row_dot(coin, 1, state, x - 1, y - 1);
            let i = out.index(x, y, 0);
            out.amps[i] = b0;
            out.amps[i + 1] = b1;
        }
    }
    Ok(out)
}

/// Source offset for each Grover coin state: the state that arrives at
/// `(x, y)` in direction `k` left from `(x − δx, y − δy)`.
const GROVER_MOVES: [(i64, i64); 4] = [(-1, -1), (-1, 1), (1, -1), (1, 1)];

pub fn recurrence_oracle_grover(state: &WalkerState, coin: &CoinOperator) -> Result<WalkerState> {
    state.ensure_dim(4)?;
    coin_dim_check(coin, 4)?;
    state.ensure_headroom()?;
    let t1 = state.t + 1;
    let mut out = WalkerState::zeros(4, state.half_width, t1);
    let r = t1 as i64;
    for x in (-r..=r).step_by(2) {
        for y in (-r..=r).step_by(2) {
            let base = out.index(x, y, 0);
            for (k, (dx, dy)) in GROVER_MOVES.iter().enumerate() {
                out.amps[base + k] = row_dot(coin, k, state, x - dx, y - dy);
            }
        }
    }
    Ok(out)
}

fn coin_dim_check(coin: &CoinOperator, expected: usize) -> Result<()> {
    if coin.dim() != expected {
        return Err(crate::error::WalkError::CoinDimMismatch {
            expected,
            found: coin.dim(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coin::{alternate_coin, grover_coin, CoinParams, CoinState2, CoinState4};
    use std::f64::consts::FRAC_1_SQRT_2;

    #[test]
    fn alternate_first_step_amplitudes() {
        let s0 = WalkerState::new(&CoinState2::symmetric().amplitudes(), 1).unwrap();
        let s1 = recurrence_oracle_alternate(&s0, &alternate_coin(&CoinParams::hadamard())).unwrap();
        let k = 0.5 * FRAC_1_SQRT_2;
        assert!((s1.amp(-1, -1, 0) - Complex64::new(k, k)).norm() < 1e-15);
        assert!((s1.amp(-1, 1, 1) - Complex64::new(k, k)).norm() < 1e-15);
        assert!((s1.amp(1, -1, 0) - Complex64::new(k, -k)).norm() < 1e-15);
        assert!((s1.amp(1, 1, 1) - Complex64::new(-k, k)).norm() < 1e-15);
        assert_eq!(s1.forbidden_site_max(), 0.0);
    }

    #[test]
    fn grover_first_step_amplitudes() {
        let s0 = WalkerState::new(&CoinState4::nonlocalized().amplitudes(), 1).unwrap();
        let s1 = recurrence_oracle_grover(&s0, &grover_coin(&CoinParams::hadamard())).unwrap();
        let expected = [((-1, -1, 0), -0.5), ((-1, 1, 1), 0.5), ((1, -1, 2), 0.5), ((1, 1, 3), -0.5)];
        for ((x, y, c), v) in expected {
            assert!((s1.amp(x, y, c) - Complex64::new(v, 0.0)).norm() < 1e-15);
        }
        assert_eq!(s1.forbidden_site_max(), 0.0);
    }
}
