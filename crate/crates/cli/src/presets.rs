//! Named initial coin states.
//!
//! Two-level (alternate walk): `symmetric`, `ket0`, `ket1`, `psi2`,
//! `psi2-perp`, `paired:<kappa>`, `bloch:<theta>:<phi>`.
//! Four-level (Grover walk): `grover-nonlocalized`, `grover-paired:<xi>`,
//! `basis:<k>`.

use anyhow::{anyhow, bail, Context, Result};
use num_complex::Complex64;

use altwalk::{grover_equivalent_init, CoinParams, CoinState2, CoinState4};

use crate::angle::parse_angle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Walk {
    Alternate,
    Grover,
}

impl Walk {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "alternate" | "alt" => Ok(Walk::Alternate),
            "grover" => Ok(Walk::Grover),
            other => bail!("unknown walk {other:?} (expected alternate or grover)"),
        }
    }

    pub fn default_init(self) -> &'static str {
        match self {
            Walk::Alternate => "symmetric",
            Walk::Grover => "grover-nonlocalized",
        }
    }
}

pub fn qubit(name: &str) -> Result<CoinState2> {
    let name = name.trim();
    let h = std::f64::consts::FRAC_1_SQRT_2;
    match name {
        "symmetric" => return Ok(CoinState2::symmetric()),
        "ket0" => return Ok(CoinState2::ket0()),
        "ket1" => return Ok(CoinState2::ket1()),
        "psi2" => return Ok(CoinState2::psi2()),
        "psi2-perp" => return Ok(CoinState2::new(Complex64::new(h, 0.0), Complex64::new(h, 0.0))?),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("paired:") {
        let kappa: u8 = rest.parse().with_context(|| format!("bad kappa in {name:?}"))?;
        return Ok(CoinState2::paired(kappa)?);
    }
    if let Some(rest) = name.strip_prefix("bloch:") {
        let (theta, phi) = rest
            .split_once(':')
            .ok_or_else(|| anyhow!("expected bloch:<theta>:<phi>, got {name:?}"))?;
        return Ok(CoinState2::bloch(parse_angle(theta)?, parse_angle(phi)?));
    }
    if is_four_level(name) {
        bail!("{name:?} is a Grover-walk coin; the alternate walk needs a two-level coin");
    }
    bail!("unknown initial coin {name:?}")
}

pub fn ququart(name: &str, params: &CoinParams) -> Result<CoinState4> {
    let name = name.trim();
    if name == "grover-nonlocalized" {
        return Ok(CoinState4::nonlocalized());
    }
    if let Some(rest) = name.strip_prefix("grover-paired:") {
        let xi: u8 = rest.parse().with_context(|| format!("bad xi in {name:?}"))?;
        return Ok(grover_equivalent_init(params, xi)?);
    }
    if let Some(rest) = name.strip_prefix("basis:") {
        let k: usize = rest.parse().with_context(|| format!("bad index in {name:?}"))?;
        return Ok(CoinState4::basis(k)?);
    }
    if qubit(name).is_ok() {
        bail!("{name:?} is an alternate-walk coin; the Grover walk needs a four-level coin");
    }
    bail!("unknown initial coin {name:?}")
}

fn is_four_level(name: &str) -> bool {
    name == "grover-nonlocalized" || name.starts_with("grover-paired:") || name.starts_with("basis:")
}

/// Initial coin amplitudes for `walk`.
pub fn amplitudes(walk: Walk, name: &str, params: &CoinParams) -> Result<Vec<Complex64>> {
    Ok(match walk {
        Walk::Alternate => qubit(name)?.amplitudes().to_vec(),
        Walk::Grover => ququart(name, params)?.amplitudes().to_vec(),
    })
}
