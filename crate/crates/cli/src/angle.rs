use std::f64::consts::PI;

use anyhow::{anyhow, Context, Result};

/// Parses an angle written as a plain number or a multiple of pi:
/// `0.3`, `pi`, `pi/4`, `3pi/2`, `3*pi/2`, `-pi/6`.
pub fn parse_angle(raw: &str) -> Result<f64> {
    let s: String = raw.trim().to_lowercase().replace('π', "pi").replace(' ', "");
    if s.is_empty() {
        return Err(anyhow!("empty angle"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s.as_str(), None),
    };
    let numerator = match num.strip_suffix("pi") {
        Some(coef) => {
            let coef = coef.strip_suffix('*').unwrap_or(coef);
            let k = match coef {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().with_context(|| format!("bad angle {raw:?}"))?,
            };
            k * PI
        }
        None => num.parse::<f64>().with_context(|| format!("bad angle {raw:?}"))?,
    };
    let value = match den {
        Some(d) => {
            let d: f64 = d.parse().with_context(|| format!("bad angle {raw:?}"))?;
            if d == 0.0 {
                return Err(anyhow!("bad angle {raw:?}: division by zero"));
            }
            numerator / d
        }
        None => numerator,
    };
    if !value.is_finite() {
        return Err(anyhow!("bad angle {raw:?}"));
    }
    Ok(value)
}
