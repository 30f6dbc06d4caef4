use std::f64::consts::{FRAC_1_SQRT_2, PI};

use altwalk::oracle::{recurrence_oracle_alternate, recurrence_oracle_grover};
use altwalk::walk::origin_probability_series;
use altwalk::{
    alternate_coin, evolve, evolve_in_place, grover_coin, probability_grid, step_alternate, step_grover, CoinParams,
    CoinState2, CoinState4, WalkError, WalkKind, WalkerState,
};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Normalized random field on the parity sublattice of time `t`.
fn random_state(rng: &mut impl Rng, d: usize, t: usize, half_width: usize) -> WalkerState {
    let side = 2 * half_width + 1;
    let mut amps = vec![c(0.0, 0.0); side * side * d];
    let l = half_width as i64;
    let r = t as i64;
    for x in (-r..=r).step_by(2) {
        for y in (-r..=r).step_by(2) {
            let base = (((x + l) as usize) * side + (y + l) as usize) * d;
            for a in &mut amps[base..base + d] {
                *a = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
    }
    let n = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= n);
    WalkerState::from_parts(t, d, half_width, amps).unwrap()
}

fn max_entry_diff(a: &WalkerState, b: &WalkerState) -> f64 {
    a.amplitudes()
        .iter()
        .zip(b.amplitudes())
        .fold(0.0, |m, (p, q)| m.max((p - q).norm()))
}

fn random_params(rng: &mut impl Rng) -> CoinParams {
    loop {
        if let Ok(p) = CoinParams::new(rng.gen_range(0.01..2.0 * PI - 0.01)) {
            return p;
        }
    }
}

#[test]
fn operator_steps_match_recurrence_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..50 {
        let params = random_params(&mut rng);
        let t = rng.gen_range(0..8);
        let s = random_state(&mut rng, 2, t, 9);
        let coin = alternate_coin(&params);
        let d = max_entry_diff(&step_alternate(&s, &coin).unwrap(), &recurrence_oracle_alternate(&s, &coin).unwrap());
        assert!(d <= 1e-13, "alternate oracle gap {d}");

        let g = random_state(&mut rng, 4, t, 9);
        let coin = grover_coin(&params);
        let d = max_entry_diff(&step_grover(&g, &coin).unwrap(), &recurrence_oracle_grover(&g, &coin).unwrap());
        assert!(d <= 1e-13, "grover oracle gap {d}");
    }
}

#[test]
fn first_alternate_step_corners() {
    let s0 = WalkerState::new(&CoinState2::symmetric().amplitudes(), 1).unwrap();
    let s1 = step_alternate(&s0, &alternate_coin(&CoinParams::hadamard())).unwrap();
    let k = 1.0 / (2.0 * 2f64.sqrt());
    let expected = [
        ((-1, -1, 0), c(k, k)),
        ((-1, 1, 1), c(k, k)),
        ((1, -1, 0), c(k, -k)),
        ((1, 1, 1), c(-k, k)),
    ];
    for ((x, y, cc), v) in expected {
        assert!((s1.amp(x, y, cc) - v).norm() < 1e-15, "({x},{y},{cc})");
    }
    let grid = probability_grid(&s1);
    for (x, y) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
        assert!((grid.get(x, y) - 0.25).abs() < 1e-15);
    }
    assert!(grid.moment(1, 0).abs() < 1e-15);
}

#[test]
fn grover_basis_start_spreads_to_all_corners() {
    let s0 = WalkerState::new(&CoinState4::basis(3).unwrap().amplitudes(), 1).unwrap();
    let s1 = step_grover(&s0, &grover_coin(&CoinParams::hadamard())).unwrap();
    let grid = probability_grid(&s1);
    for (x, y) in [(-1, -1), (-1, 1), (1, -1), (1, 1)] {
        assert!(grid.get(x, y) > 0.0);
    }
    assert!((grid.total() - 1.0).abs() < 1e-12);
}

#[test]
fn zero_steps_is_identity_and_overflow_is_rejected() {
    let s0 = WalkerState::new(&CoinState2::ket0().amplitudes(), 3).unwrap();
    let kind = WalkKind::Alternate(CoinParams::hadamard());
    assert_eq!(evolve(&s0, &kind, 0).unwrap(), s0);
    assert!(matches!(evolve(&s0, &kind, 4), Err(WalkError::WindowOverflow { .. })));
    assert!(matches!(
        step_grover(&s0, &grover_coin(&CoinParams::hadamard())),
        Err(WalkError::CoinDimMismatch { .. })
    ));
    let grid = probability_grid(&s0);
    assert_eq!(grid.get(0, 0), 1.0);
}

#[test]
fn norm_parity_and_support_over_long_runs() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let params = random_params(&mut rng);
        let v2 = CoinState2::bloch(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI));
        let q: Vec<Complex64> = (0..4).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let n = q.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        let v4 = CoinState4::new([q[0] / n, q[1] / n, q[2] / n, q[3] / n]).unwrap();
        for (init, kind) in [
            (v2.amplitudes().to_vec(), WalkKind::Alternate(params)),
            (v4.amplitudes().to_vec(), WalkKind::Grover(params)),
        ] {
            let mut s = WalkerState::new(&init, 100).unwrap();
            for _ in 0..100 {
                evolve_in_place(&mut s, &kind, 1).unwrap();
                assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
                assert_eq!(s.forbidden_site_max(), 0.0);
            }
        }
    }
}

#[test]
fn non_localized_grover_start_leaves_odd_sites_empty() {
    let s0 = WalkerState::new(&CoinState4::nonlocalized().amplitudes(), 50).unwrap();
    let s = evolve(&s0, &WalkKind::Grover(CoinParams::hadamard()), 50).unwrap();
    let grid = probability_grid(&s);
    for (x, y, p) in grid.iter() {
        if x.rem_euclid(2) == 1 || y.rem_euclid(2) == 1 {
            assert_eq!(p, 0.0);
        }
    }
}

#[test]
fn ket1_drifts_upward() {
    let s0 = WalkerState::new(&CoinState2::ket1().amplitudes(), 10).unwrap();
    let s = evolve(&s0, &WalkKind::Alternate(CoinParams::hadamard()), 10).unwrap();
    assert!(probability_grid(&s).moment(0, 1) > 0.0);
}

fn grid_after(init: CoinState2, t: usize) -> altwalk::ProbabilityGrid {
    let s0 = WalkerState::new(&init.amplitudes(), t).unwrap();
    probability_grid(&evolve(&s0, &WalkKind::Alternate(CoinParams::hadamard()), t).unwrap())
}

#[test]
fn mirror_symmetries() {
    let plus = CoinState2::new(c(FRAC_1_SQRT_2, 0.0), c(FRAC_1_SQRT_2, 0.0)).unwrap();
    for t in 0..=25 {
        let (k0, k1) = (grid_after(CoinState2::ket0(), t), grid_after(CoinState2::ket1(), t));
        let (m, p) = (grid_after(CoinState2::psi2(), t), grid_after(plus, t));
        let sym = grid_after(CoinState2::symmetric(), t);
        for (x, y, v) in k0.iter() {
            assert!((v - k1.get(x, -y)).abs() <= 1e-12);
            assert!((m.get(x, y) - p.get(-x, y)).abs() <= 1e-12);
            let s = sym.get(x, y);
            assert!((s - sym.get(-x, y)).abs() <= 1e-12 && (s - sym.get(x, -y)).abs() <= 1e-12);
        }
    }
}

#[test]
fn origin_series_starts_at_one() {
    let s0 = WalkerState::new(&CoinState4::basis(0).unwrap().amplitudes(), 6).unwrap();
    let series = origin_probability_series(&s0, &WalkKind::Grover(CoinParams::hadamard()), 6).unwrap();
    assert_eq!(series.len(), 7);
    assert_eq!(series[0], 1.0);
    assert_eq!(series[1], 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn alternate_step_preserves_norm_and_parity(
        gamma in 0.01f64..6.27, theta in 0.0..PI, phi in 0.0..(2.0 * PI), steps in 0usize..30,
    ) {
        prop_assume!(CoinParams::new(gamma).is_ok());
        let s0 = WalkerState::new(&CoinState2::bloch(theta, phi).amplitudes(), steps).unwrap();
        let s = evolve(&s0, &WalkKind::Alternate(CoinParams::new(gamma).unwrap()), steps).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() <= 1e-12);
        prop_assert_eq!(s.forbidden_site_max(), 0.0);
        prop_assert_eq!(s.t(), steps);
    }

    #[test]
    fn grover_oracle_agrees_on_random_fields(seed in any::<u64>(), t in 0usize..6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let params = random_params(&mut rng);
        let s = random_state(&mut rng, 4, t, 7);
        let coin = grover_coin(&params);
        let d = max_entry_diff(&step_grover(&s, &coin).unwrap(), &recurrence_oracle_grover(&s, &coin).unwrap());
        prop_assert!(d <= 1e-13);
    }
}
