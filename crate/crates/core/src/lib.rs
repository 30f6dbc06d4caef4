//! Two-dimensional discrete-time quantum walks on the square lattice.
//!
//! The *alternate* walk uses a two-level coin and moves along `x` and then
//! along `y` within one step; the *Grover* walk uses a four-level coin and a
//! single diagonal move. The crate simulates both, certifies numerically
//! that suitably paired initial states give identical spatial distributions,
//! measures the entanglement between the `x` and `y` position registers, and
//! evaluates the long-time limit law of the alternate walk.
//!
//! ```
//! use altwalk::{alternate_coin, evolve, probability_grid, CoinParams, CoinState2, WalkKind, WalkerState};
//!
//! let params = CoinParams::hadamard();
//! let init = WalkerState::new(&CoinState2::symmetric().amplitudes(), 10).unwrap();
//! let state = evolve(&init, &WalkKind::Alternate(params), 10).unwrap();
//! let grid = probability_grid(&state);
//! assert!((grid.total() - 1.0).abs() < 1e-12);
//! # let _ = alternate_coin(&params);
//! ```

pub mod coin;
pub mod entanglement;
pub mod equivalence;
pub mod error;
pub mod grid;
pub mod limit;
pub mod oracle;
pub mod state;
pub mod walk;

pub use coin::{
    alternate_coin, grover_coin, grover_equivalent_init, sign_of_index, CoinOperator, CoinParams, CoinState2,
    CoinState4,
};
pub use error::{Result, WalkError};
pub use grid::{distribution_distance, ProbabilityGrid};
pub use state::WalkerState;
pub use walk::{evolve, evolve_in_place, evolve_with, probability_grid, step_alternate, step_grover, WalkKind};
