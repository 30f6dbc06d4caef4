//! Time evolution of the alternate and Grover walks.
//!
//! One alternate step is: coin, conditional shift in `x` (`|0⟩` left, `|1⟩`
//! right), coin, conditional shift in `y` (`|0⟩` down, `|1⟩` up). One Grover
//! step is the four-level coin followed by a diagonal shift where coin states
//! `0, 1, 2, 3` move left-down, left-up, right-down and right-up.
//!
//! Steps are applied as in-place array passes restricted to the reachable
//! parity sublattice. Sources and destinations of every shift lie on
//! opposite parity classes, so passes never read what they wrote.

use num_complex::Complex64;

use crate::coin::{alternate_coin, grover_coin, CoinOperator, CoinParams};
use crate::error::Result;
use crate::grid::ProbabilityGrid;
use crate::state::WalkerState;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WalkKind {
    Alternate(CoinParams),
    Grover(CoinParams),
}

impl WalkKind {
    pub fn coin(&self) -> CoinOperator {
        match self {
            WalkKind::Alternate(p) => alternate_coin(p),
            WalkKind::Grover(p) => grover_coin(p),
        }
    }

    pub fn coin_dim(&self) -> usize {
        match self {
            WalkKind::Alternate(_) => 2,
            WalkKind::Grover(_) => 4,
        }
    }

    pub fn params(&self) -> CoinParams {
        match self {
            WalkKind::Alternate(p) | WalkKind::Grover(p) => *p,
        }
    }
}

fn axis(t: usize) -> std::iter::StepBy<std::ops::RangeInclusive<i64>> {
    let t = t as i64;
    (-t..=t).step_by(2)
}

impl WalkerState {
    fn apply_coin_on(&mut self, coin: &CoinOperator, xs: &[i64], ys: &[i64]) {
        let d = self.coin_dim;
        let mut buf = [ZERO; 4];
        for &x in xs {
            for &y in ys {
                let i = self.index(x, y, 0);
                buf[..d].copy_from_slice(&self.amps[i..i + d]);
                coin.apply(&buf[..d], &mut self.amps[i..i + d]);
            }
        }
    }

    fn move_component(&mut self, from: (i64, i64), to: (i64, i64), c: usize) {
        let src = self.index(from.0, from.1, c);
        let dst = self.index(to.0, to.1, c);
        self.amps[dst] = self.amps[src];
        self.amps[src] = ZERO;
    }

    pub(crate) fn alternate_step_in_place(&mut self, coin: &CoinOperator) -> Result<()> {
        self.ensure_dim(2)?;
        self.ensure_headroom()?;
        let cur: Vec<i64> = axis(self.t).collect();
        let next: Vec<i64> = axis(self.t + 1).collect();

        self.apply_coin_on(coin, &cur, &cur);
        for &x in &cur {
            for &y in &cur {
                self.move_component((x, y), (x - 1, y), 0);
                self.move_component((x, y), (x + 1, y), 1);
            }
        }

        self.apply_coin_on(coin, &next, &cur);
        for &x in &next {
            for &y in &cur {
                self.move_component((x, y), (x, y - 1), 0);
                self.move_component((x, y), (x, y + 1), 1);
            }
        }
        self.t += 1;
        Ok(())
    }

    pub(crate) fn grover_step_in_place(&mut self, coin: &CoinOperator) -> Result<()> {
        self.ensure_dim(4)?;
        self.ensure_headroom()?;
        let cur: Vec<i64> = axis(self.t).collect();

        self.apply_coin_on(coin, &cur, &cur);
        for &x in &cur {
            for &y in &cur {
                self.move_component((x, y), (x - 1, y - 1), 0);
                self.move_component((x, y), (x - 1, y + 1), 1);
                self.move_component((x, y), (x + 1, y - 1), 2);
                self.move_component((x, y), (x + 1, y + 1), 3);
            }
        }
        self.t += 1;
        Ok(())
    }
}

/// One alternate-walk step with a two-level coin.
pub fn step_alternate(state: &WalkerState, coin: &CoinOperator) -> Result<WalkerState> {
    state.ensure_dim(2)?;
    let mut next = state.clone();
    next.alternate_step_in_place(coin)?;
    Ok(next)
}

/// One Grover-walk step with a four-level coin.
pub fn step_grover(state: &WalkerState, coin: &CoinOperator) -> Result<WalkerState> {
    state.ensure_dim(4)?;
    let mut next = state.clone();
    next.grover_step_in_place(coin)?;
    Ok(next)
}

/// Applies `steps` steps of `kind`.
pub fn evolve(state: &WalkerState, kind: &WalkKind, steps: usize) -> Result<WalkerState> {
    let mut out = state.clone();
    evolve_in_place(&mut out, kind, steps)?;
    Ok(out)
}

/// In-place [`evolve`]; the state is left untouched if the window is too small.
pub fn evolve_in_place(state: &mut WalkerState, kind: &WalkKind, steps: usize) -> Result<()> {
    state.ensure_dim(kind.coin_dim())?;
    if state.t + steps > state.half_width {
        return Err(crate::error::WalkError::WindowOverflow {
            needed: state.t + steps,
            half_width: state.half_width,
        });
    }
    let coin = kind.coin();
    for _ in 0..steps {
        match kind {
            WalkKind::Alternate(_) => state.alternate_step_in_place(&coin)?,
            WalkKind::Grover(_) => state.grover_step_in_place(&coin)?,
        }
    }
    Ok(())
}

/// Evolves step by step, calling `visit` on the initial state and after each step.
pub fn evolve_with<F>(state: &mut WalkerState, kind: &WalkKind, steps: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&WalkerState),
{
    visit(state);
    for _ in 0..steps {
        evolve_in_place(state, kind, 1)?;
        visit(state);
    }
    Ok(())
}

/// `P(x, y) = Σ_c |amp(x, y, c)|²` over the state's window.
pub fn probability_grid(state: &WalkerState) -> ProbabilityGrid {
    let d = state.coin_dim;
    let values = state
        .amps
        .chunks_exact(d)
        .map(|site| site.iter().map(|a| a.norm_sqr()).sum())
        .collect();
    ProbabilityGrid::from_values(state.half_width, values).expect("state window is square")
}

/// `P(0, 0)` after each of `0..=steps` steps.
pub fn origin_probability_series(init: &WalkerState, kind: &WalkKind, steps: usize) -> Result<Vec<f64>> {
    let mut state = init.clone();
    let mut out = Vec::with_capacity(steps + 1);
    evolve_with(&mut state, kind, steps, |s| {
        out.push(s.site(0, 0).iter().map(|a| a.norm_sqr()).sum());
    })?;
    Ok(out)
}
