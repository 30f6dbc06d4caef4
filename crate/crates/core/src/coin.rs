//! Coin operators and initial coin states.
//!
//! The two-level coin of the alternate walk is the real reflection
//! `U(γ) = [[c, s], [s, −c]]` with `c = cos γ`, `s = sin γ`; at `γ = π/4` it is
//! the Hadamard gate. The four-level coin of the Grover walk is the
//! generalized Grover matrix `A(γ)`, which reduces to the usual Grover
//! diffusion `G` at `γ = π/4`.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{Result, WalkError};

/// Tolerance on `|ψ|² = 1` for coin states.
pub const NORM_TOL: f64 = 1e-12;

/// Distance from a forbidden angle below which `γ` is rejected.
pub const FORBIDDEN_GAMMA_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Validated coin angle `γ ∈ (0, 2π) \ {π/2, π, 3π/2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinParams {
    gamma: f64,
    c: f64,
    s: f64,
}

impl CoinParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma <= 0.0 || gamma >= 2.0 * PI {
            return Err(WalkError::GammaOutOfRange(gamma));
        }
        for forbidden in [FRAC_PI_2, PI, 3.0 * FRAC_PI_2] {
            if (gamma - forbidden).abs() <= FORBIDDEN_GAMMA_TOL {
                return Err(WalkError::ForbiddenGamma(gamma));
            }
        }
        Ok(Self {
            gamma,
            c: gamma.cos(),
            s: gamma.sin(),
        })
    }

    /// `γ = π/4`: Hadamard coin on the alternate side, `G` on the Grover side.
    pub fn hadamard() -> Self {
        Self::new(FRAC_PI_4).expect("π/4 is a valid coin angle")
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn cos(&self) -> f64 {
        self.c
    }

    pub fn sin(&self) -> f64 {
        self.s
    }

    /// `sign(c·s)`, never zero for a valid angle.
    pub fn sign_cs(&self) -> f64 {
        (self.c * self.s).signum()
    }
}

/// Dense `d×d` complex coin matrix, row-major, `d ∈ {2, 4}`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinOperator {
    dim: usize,
    entries: Vec<Complex64>,
}

impl CoinOperator {
    /// Builds a coin from row-major entries. Unitarity is not enforced here;
    /// see [`CoinOperator::unitarity_residual`].
    pub fn from_rows(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(WalkError::UnsupportedCoinDim(dim));
        }
        if entries.len() != dim * dim {
            return Err(WalkError::CoinDimMismatch {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        Ok(Self { dim, entries })
    }

    fn from_real(dim: usize, rows: &[f64]) -> Self {
        Self {
            dim,
            entries: rows.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `out = M · input` for one coin register.
    #[inline]
    pub fn apply(&self, input: &[Complex64], out: &mut [Complex64]) {
        let d = self.dim;
        for (i, o) in out.iter_mut().enumerate().take(d) {
            let row = &self.entries[i * d..(i + 1) * d];
            *o = row.iter().zip(input).fold(ZERO, |acc, (m, a)| acc + m * a);
        }
    }

    /// Max-abs entry of `M†M − I`.
    pub fn unitarity_residual(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let mut acc = ZERO;
                for k in 0..d {
                    acc += self.get(k, i).conj() * self.get(k, j);
                }
                if i == j {
                    acc -= 1.0;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }
}

/// Two-level coin `U(γ) = [[c, s], [s, −c]]`.
pub fn alternate_coin(params: &CoinParams) -> CoinOperator {
    let (c, s) = (params.cos(), params.sin());
    CoinOperator::from_real(2, &[c, s, s, -c])
}

/// Generalized Grover coin `A(γ)`:
///
/// ```text
///  −c²   |cs|  |cs|   s²
///  |cs|  −s²    c²   |cs|
///  |cs|   c²   −s²   |cs|
///   s²   |cs|  |cs|  −c²
/// ```
pub fn grover_coin(params: &CoinParams) -> CoinOperator {
    let (c2, s2) = (params.cos().powi(2), params.sin().powi(2));
    let cs = (params.cos() * params.sin()).abs();
    #[rustfmt::skip]
    let rows = [
        -c2, cs,  cs,  s2,
        cs,  -s2, c2,  cs,
        cs,  c2,  -s2, cs,
        s2,  cs,  cs,  -c2,
    ];
    CoinOperator::from_real(4, &rows)
}

fn check_sign_index(v: u8) -> Result<f64> {
    match v {
        0 => Ok(1.0),
        1 => Ok(-1.0),
        other => Err(WalkError::InvalidSignIndex(other)),
    }
}

/// `(−1)^v` for a sign index `v ∈ {0, 1}`.
pub fn sign_of_index(v: u8) -> Result<f64> {
    check_sign_index(v)
}

fn check_norm(amps: &[Complex64]) -> Result<()> {
    let n: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if (n - 1.0).abs() > NORM_TOL || !n.is_finite() {
        return Err(WalkError::NotNormalized(n));
    }
    Ok(())
}

/// Pure qubit coin state `ν₀|0⟩ + ν₁|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinState2 {
    pub nu0: Complex64,
    pub nu1: Complex64,
}

impl CoinState2 {
    pub fn new(nu0: Complex64, nu1: Complex64) -> Result<Self> {
        check_norm(&[nu0, nu1])?;
        Ok(Self { nu0, nu1 })
    }

    /// `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
    pub fn bloch(theta: f64, phi: f64) -> Self {
        Self {
            nu0: Complex64::new((theta / 2.0).cos(), 0.0),
            nu1: Complex64::from_polar((theta / 2.0).sin(), phi),
        }
    }

    /// `(|0⟩ + i|1⟩)/√2`, the state paired with the non-localized Grover walk.
    pub fn symmetric() -> Self {
        Self {
            nu0: Complex64::new(FRAC_1_SQRT_2, 0.0),
            nu1: Complex64::new(0.0, FRAC_1_SQRT_2),
        }
    }

    pub fn ket0() -> Self {
        Self {
            nu0: Complex64::new(1.0, 0.0),
            nu1: ZERO,
        }
    }

    pub fn ket1() -> Self {
        Self {
            nu0: ZERO,
            nu1: Complex64::new(1.0, 0.0),
        }
    }

    /// `(|0⟩ − |1⟩)/√2`.
    pub fn psi2() -> Self {
        Self {
            nu0: Complex64::new(FRAC_1_SQRT_2, 0.0),
            nu1: Complex64::new(-FRAC_1_SQRT_2, 0.0),
        }
    }

    /// `(|0⟩ + (−1)^κ i|1⟩)/√2`; `κ = 0` is [`CoinState2::symmetric`].
    pub fn paired(kappa: u8) -> Result<Self> {
        let sign = check_sign_index(kappa)?;
        Ok(Self {
            nu0: Complex64::new(FRAC_1_SQRT_2, 0.0),
            nu1: Complex64::new(0.0, sign * FRAC_1_SQRT_2),
        })
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [self.nu0, self.nu1]
    }

    /// Bloch angles `(θ, φ)` with `θ ∈ [0, π]`, `φ ∈ [0, 2π)`; global phase dropped.
    pub fn bloch_angles(&self) -> (f64, f64) {
        let theta = 2.0 * self.nu0.norm().clamp(0.0, 1.0).acos();
        let phi = if self.nu0.norm() < 1e-15 || self.nu1.norm() < 1e-15 {
            0.0
        } else {
            (self.nu1.arg() - self.nu0.arg()).rem_euclid(2.0 * PI)
        };
        (theta, phi)
    }
}

/// Four-level coin state `q₀|0⟩ + q₁|1⟩ + q₂|2⟩ + q₃|3⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoinState4 {
    pub q: [Complex64; 4],
}

impl CoinState4 {
    pub fn new(q: [Complex64; 4]) -> Result<Self> {
        check_norm(&q)?;
        Ok(Self { q })
    }

    /// `(|0⟩ − |1⟩ − |2⟩ + |3⟩)/2`, the only non-localizing Grover coin state.
    pub fn nonlocalized() -> Self {
        let h = Complex64::new(0.5, 0.0);
        Self { q: [h, -h, -h, h] }
    }

    pub fn basis(k: usize) -> Result<Self> {
        if k >= 4 {
            return Err(WalkError::CoinDimMismatch {
                expected: 4,
                found: k,
            });
        }
        let mut q = [ZERO; 4];
        q[k] = Complex64::new(1.0, 0.0);
        Ok(Self { q })
    }

    pub fn amplitudes(&self) -> [Complex64; 4] {
        self.q
    }
}

/// Grover-side initial coin paired with the alternate walk under `U(γ)`:
/// `q₀ = q₃ = (−1)^ξ |cs|/(√2 s)`, `q₁ = q₂ = −(−1)^ξ s/√2`.
pub fn grover_equivalent_init(params: &CoinParams, xi: u8) -> Result<CoinState4> {
    let sign = check_sign_index(xi)?;
    let (c, s) = (params.cos(), params.sin());
    let outer = Complex64::new(sign * (c * s).abs() / (2f64.sqrt() * s), 0.0);
    let inner = Complex64::new(-sign * s / 2f64.sqrt(), 0.0);
    CoinState4::new([outer, inner, inner, outer])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_PI_3;

    fn re(v: f64) -> Complex64 {
        Complex64::new(v, 0.0)
    }

    #[test]
    fn rejects_forbidden_and_out_of_range_angles() {
        for g in [FRAC_PI_2, PI, 3.0 * FRAC_PI_2, FRAC_PI_2 + 5e-13] {
            assert_eq!(CoinParams::new(g), Err(WalkError::ForbiddenGamma(g)));
        }
        for g in [0.0, -0.1, 2.0 * PI, 7.0, f64::NAN] {
            assert!(matches!(
                CoinParams::new(g),
                Err(WalkError::GammaOutOfRange(_))
            ));
        }
        assert!(CoinParams::new(FRAC_PI_2 + 1e-9).is_ok());
    }

    #[test]
    fn hadamard_from_quarter_pi() {
        let h = alternate_coin(&CoinParams::hadamard());
        let expected = [1.0, 1.0, 1.0, -1.0].map(|v| v * FRAC_1_SQRT_2);
        for (e, m) in expected.iter().zip(h.entries()) {
            assert!((m - re(*e)).norm() <= 1e-15);
        }
        assert!(h.unitarity_residual() <= 1e-15);
    }

    #[test]
    fn two_level_coin_at_third_pi() {
        let u = alternate_coin(&CoinParams::new(FRAC_PI_3).unwrap());
        let r3 = 3f64.sqrt() / 2.0;
        let expected = [0.5, r3, r3, -0.5];
        for (e, m) in expected.iter().zip(u.entries()) {
            assert_abs_diff_eq!(m.re, *e, epsilon = 1e-15);
            assert_eq!(m.im, 0.0);
        }
    }

    #[test]
    fn grover_from_quarter_pi() {
        let g = grover_coin(&CoinParams::hadamard());
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { -0.5 } else { 0.5 };
                assert!((g.get(i, j) - re(e)).norm() <= 1e-15, "({i},{j})");
            }
        }
        assert!(g.unitarity_residual() <= 1e-15);
    }

    #[test]
    fn grover_coin_third_pi_first_row() {
        let a = grover_coin(&CoinParams::new(FRAC_PI_3).unwrap());
        let r3 = 3f64.sqrt() / 4.0;
        let expected = [-0.25, r3, r3, 0.75];
        for (j, e) in expected.iter().enumerate() {
            assert_abs_diff_eq!(a.get(0, j).re, *e, epsilon = 1e-15);
        }
        assert!(a.unitarity_residual() <= 1e-12);
    }

    #[test]
    fn non_unitary_witness() {
        let m = CoinOperator::from_rows(2, vec![re(1.0), re(1.0), re(0.0), re(1.0)]).unwrap();
        assert_abs_diff_eq!(m.unitarity_residual(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn equivalent_init_quarter_pi() {
        let p = CoinParams::hadamard();
        let q0 = grover_equivalent_init(&p, 0).unwrap();
        let q1 = grover_equivalent_init(&p, 1).unwrap();
        let expected = [0.5, -0.5, -0.5, 0.5];
        for k in 0..4 {
            assert_abs_diff_eq!(q0.q[k].re, expected[k], epsilon = 1e-15);
            assert_abs_diff_eq!(q1.q[k].re, -expected[k], epsilon = 1e-15);
        }
        assert!(grover_equivalent_init(&p, 2).is_err());
    }

    #[test]
    fn equivalent_init_third_pi() {
        let q = grover_equivalent_init(&CoinParams::new(FRAC_PI_3).unwrap(), 0).unwrap();
        let outer = 1.0 / (2.0 * 2f64.sqrt());
        let inner = -(3f64.sqrt()) / (2.0 * 2f64.sqrt());
        assert_abs_diff_eq!(q.q[0].re, outer, epsilon = 1e-15);
        assert_abs_diff_eq!(q.q[3].re, outer, epsilon = 1e-15);
        assert_abs_diff_eq!(q.q[1].re, inner, epsilon = 1e-15);
        assert_abs_diff_eq!(q.q[2].re, inner, epsilon = 1e-15);
    }

    #[test]
    fn coin_states_reject_unnormalized() {
        assert!(CoinState2::new(re(1.0), re(1.0)).is_err());
        assert!(CoinState4::new([re(0.5); 4]).is_ok());
        assert!(CoinState4::new([re(0.6); 4]).is_err());
    }

    #[test]
    fn bloch_angles_round_trip() {
        let (t, p) = CoinState2::symmetric().bloch_angles();
        assert_abs_diff_eq!(t, FRAC_PI_2, epsilon = 1e-12);
        assert_abs_diff_eq!(p, FRAC_PI_2, epsilon = 1e-12);
        assert_eq!(CoinState2::ket1().bloch_angles(), (PI, 0.0));
        let s = CoinState2::bloch(1.1, 4.0);
        let (t, p) = s.bloch_angles();
        assert_abs_diff_eq!(t, 1.1, epsilon = 1e-12);
        assert_abs_diff_eq!(p, 4.0, epsilon = 1e-12);
    }
}
