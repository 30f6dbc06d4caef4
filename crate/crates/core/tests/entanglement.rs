use std::f64::consts::{FRAC_PI_2, PI};

use altwalk::entanglement::{
    alternate_negativity, calibrate_convention, entanglement_sweep, grover_walk_negativity, negativity,
    partial_transpose_x, phi_grid, reduced_density, theta_grid, NegativityConvention, CALIBRATED_CONVENTION,
    REFERENCE_T10, REFERENCE_TOL,
};
use altwalk::{evolve, CoinParams, CoinState2, CoinState4, WalkKind, WalkerState};

#[test]
fn calibration_reproduces_both_reference_values() {
    let cal = calibrate_convention().unwrap();
    assert_eq!(cal.convention, Some(CALIBRATED_CONVENTION));
    assert!((cal.symmetric.value() - REFERENCE_T10.0).abs() <= REFERENCE_TOL);
    assert!((cal.ket1.value() - REFERENCE_T10.1).abs() <= REFERENCE_TOL);
    assert!((cal.symmetric.value_in(NegativityConvention::Window) - REFERENCE_T10.0).abs() > REFERENCE_TOL);
}

#[test]
fn reduced_density_is_a_valid_state() {
    for t in [1, 4, 9] {
        let s0 = WalkerState::new(&CoinState2::ket1().amplitudes(), t).unwrap();
        let s = evolve(&s0, &WalkKind::Alternate(CoinParams::hadamard()), t).unwrap();
        let rho = reduced_density(&s);
        assert_eq!(rho.axis_len(), t + 1);
        assert!(rho.hermiticity_residual() <= 1e-12);
        assert!((rho.trace().re - 1.0).abs() <= 1e-12 && rho.trace().im.abs() <= 1e-12);
        let pt = partial_transpose_x(&rho);
        assert!((pt.trace() - rho.trace()).norm() <= 1e-12);
        let n = negativity(&s).unwrap();
        assert!((0.0..=1.0).contains(&n.value()));
    }
}

#[test]
fn grover_walk_becomes_entangled_but_less_than_alternate() {
    let p = CoinParams::hadamard();
    for t in 2..=20 {
        let alt = alternate_negativity(&CoinState2::ket1(), &p, t).unwrap().value();
        let grover = grover_walk_negativity(&CoinState4::nonlocalized(), &p, t).unwrap().value();
        assert!(grover > 0.0 && alt > grover, "t={t}: alt {alt} grover {grover}");
    }
}

#[test]
fn first_step_is_separable_for_both_walks() {
    let p = CoinParams::hadamard();
    assert_eq!(alternate_negativity(&CoinState2::ket1(), &p, 1).unwrap().value(), 0.0);
    assert_eq!(grover_walk_negativity(&CoinState4::nonlocalized(), &p, 1).unwrap().value(), 0.0);
}

#[test]
fn sweep_is_theta_major_and_phi_periodic_by_pi() {
    let thetas = theta_grid(5);
    let phis = phi_grid(6);
    assert_eq!(thetas[4], PI);
    let sweep = entanglement_sweep(&thetas, &phis, 4, &CoinParams::hadamard()).unwrap();
    assert_eq!(sweep.len(), 30);
    assert_eq!((sweep[1].theta, sweep[1].phi), (thetas[0], phis[1]));
    for i in 0..5 {
        for j in 0..3 {
            let a = sweep[i * 6 + j].negativity;
            let b = sweep[i * 6 + j + 3].negativity;
            assert!((a - b).abs() <= 1e-9);
        }
    }
    assert!(entanglement_sweep(&thetas, &[], 4, &CoinParams::hadamard()).is_err());
    assert!(entanglement_sweep(&thetas, &phis, 0, &CoinParams::hadamard()).is_err());
}

#[test]
fn sweep_is_deterministic() {
    let thetas = theta_grid(4);
    let phis = [0.0, FRAC_PI_2];
    let a = entanglement_sweep(&thetas, &phis, 6, &CoinParams::hadamard()).unwrap();
    let b = entanglement_sweep(&thetas, &phis, 6, &CoinParams::hadamard()).unwrap();
    assert_eq!(a, b);
}
