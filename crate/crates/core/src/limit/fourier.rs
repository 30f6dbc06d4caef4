//! Momentum-space step operator and its closed-form eigensystem.
//!
//! With `ψ̂(k) = Σ e^{−i(kx·x + ky·y)} ψ(x, y)`, one alternate step acts as
//! `V(kx, ky) = R(ky) U R(kx) U` with `R(k) = diag(e^{ik}, e^{−ik})`. Writing
//! `g₂ = c² cos(kx+ky) + s² cos(kx−ky)` and
//! `g₁ = −c² sin(kx+ky) + s² sin(kx−ky)`, the eigenpairs are
//! `λ_j = g₂ + i(−1)^j √(1 − g₂²)` and
//! `v_j ∝ (cs[e^{i(kx+ky)} − e^{−i(kx−ky)}], i[g₁ + (−1)^j √(1 − g₂²)])`.

use nalgebra::{Matrix2, Vector2};
use num_complex::Complex64;

use crate::coin::CoinParams;
use crate::error::{Result, WalkError};

/// Points with `1 − g₂² < DEGENERACY_TOL` are treated as degenerate.
pub const DEGENERACY_TOL: f64 = 1e-14;

fn r_matrix(k: f64) -> Matrix2<Complex64> {
    Matrix2::new(
        Complex64::from_polar(1.0, k),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::from_polar(1.0, -k),
    )
}

/// `V(kx, ky) = R(ky) U R(kx) U`.
pub fn step_matrix(kx: f64, ky: f64, params: &CoinParams) -> Matrix2<Complex64> {
    let (c, s) = (params.cos(), params.sin());
    let u = Matrix2::new(
        Complex64::new(c, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(s, 0.0),
        Complex64::new(-c, 0.0),
    );
    r_matrix(ky) * u * r_matrix(kx) * u
}

/// Eigenpairs of `V(kx, ky)`; index 0 is `j = 1`, index 1 is `j = 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigensystem {
    pub lambda: [Complex64; 2],
    pub vectors: [Vector2<Complex64>; 2],
    /// Squared norms `N_j` of the unnormalized eigenvectors.
    pub norms: [f64; 2],
    /// `D_x λ_j / λ_j` with `D_x = i ∂/∂kx`.
    pub drift_x: [f64; 2],
    /// `D_y λ_j / λ_j` with `D_y = i ∂/∂ky`.
    pub drift_y: [f64; 2],
}

impl Eigensystem {
    /// `|⟨v_j|ψ⟩|²` for both branches.
    pub fn overlaps(&self, psi: &Vector2<Complex64>) -> [f64; 2] {
        [0, 1].map(|j| self.vectors[j].dotc(psi).norm_sqr())
    }
}

/// Closed-form eigensystem at `(kx, ky)`.
pub fn eigensystem_closed_form(kx: f64, ky: f64, params: &CoinParams) -> Result<Eigensystem> {
    let (c, s) = (params.cos(), params.sin());
    let (c2, s2) = (c * c, s * s);
    let (plus, minus) = (kx + ky, kx - ky);
    let g1 = -c2 * plus.sin() + s2 * minus.sin();
    let g2 = c2 * plus.cos() + s2 * minus.cos();
    let gap = 1.0 - g2 * g2;
    if gap < DEGENERACY_TOL {
        return Err(WalkError::Degenerate { kx, ky });
    }
    let root = gap.sqrt();
    let top = Complex64::new(c * s, 0.0) * (Complex64::from_polar(1.0, plus) - Complex64::from_polar(1.0, -minus));
    let sin_sum = c2 * plus.sin() + s2 * minus.sin();
    let sin_diff = c2 * plus.sin() - s2 * minus.sin();

    let mut lambda = [Complex64::new(0.0, 0.0); 2];
    let mut vectors = [Vector2::zeros(); 2];
    let mut norms = [0.0; 2];
    let mut drift_x = [0.0; 2];
    let mut drift_y = [0.0; 2];
    for (idx, sign) in [(0usize, -1.0f64), (1, 1.0)] {
        lambda[idx] = Complex64::new(g2, sign * root);
        let bottom = Complex64::new(0.0, g1 + sign * root);
        let n = top.norm_sqr() + bottom.norm_sqr();
        if n < DEGENERACY_TOL {
            return Err(WalkError::Degenerate { kx, ky });
        }
        norms[idx] = n;
        vectors[idx] = Vector2::new(top, bottom) / Complex64::new(n.sqrt(), 0.0);
        drift_x[idx] = -sign * sin_sum / root;
        drift_y[idx] = -sign * sin_diff / root;
    }
    Ok(Eigensystem {
        lambda,
        vectors,
        norms,
        drift_x,
        drift_y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn zero_momentum_is_identity() {
        for g in [0.3, PI / 4.0, 2.0, 5.5] {
            let v = step_matrix(0.0, 0.0, &CoinParams::new(g).unwrap());
            let err = (v - Matrix2::identity()).iter().fold(0.0f64, |m, z| m.max(z.norm()));
            assert!(err < 1e-15);
        }
    }

    #[test]
    fn hadamard_quarter_turn_matrix() {
        // U R(π/2) U with U = H: R(π/2) = diag(i, −i), H diag(i, −i) H = i σx,
        // then R(0) = I.
        let v = step_matrix(FRAC_PI_2, 0.0, &CoinParams::hadamard());
        let expected = Matrix2::new(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        );
        let err = (v - expected).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        assert!(err < 1e-15, "{v}");
        let unit = (v.adjoint() * v - Matrix2::identity()).iter().fold(0.0f64, |m, z| m.max(z.norm()));
        assert!(unit < 1e-12);
    }

    #[test]
    fn eigenvalues_at_half_pi_pair() {
        let e = eigensystem_closed_form(FRAC_PI_2, FRAC_PI_2, &CoinParams::hadamard()).unwrap();
        assert!((e.lambda[0] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
        assert!((e.lambda[1] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn degenerate_points_are_rejected() {
        let p = CoinParams::hadamard();
        assert!(matches!(
            eigensystem_closed_form(0.0, 0.0, &p),
            Err(WalkError::Degenerate { .. })
        ));
        // kx = 0 collapses one eigenvector to zero
        assert!(matches!(
            eigensystem_closed_form(0.0, 0.7, &p),
            Err(WalkError::Degenerate { .. })
        ));
    }
}
