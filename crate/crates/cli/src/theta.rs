//! Symbolic second-eigenvalue tokens.
//!
//! Exactly the constants the tables need are recognized — decimal literals,
//! `sqrt(N)`, `sqrt(N)±M`, `M*sqrt(N)`, `sqrt(k)`, `sqrt(k-1)`,
//! `sqrt(2k-1)`, and `2*sqrt(k-1)*cos(pi/D)` — rather than a general
//! expression language.

use anyhow::{anyhow, bail, Result};

/// Resolves a theta token to a float, using `k` where the token needs it.
pub fn parse_theta(token: &str, k: Option<u32>) -> Result<f64> {
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let need_k = || k.ok_or_else(|| anyhow!("token {t:?} needs -k"));

    if let Some(rest) = t
        .strip_prefix("2*sqrt(k-1)*cos(pi/")
        .and_then(|r| r.strip_suffix(')'))
    {
        let d: u32 = rest
            .parse()
            .map_err(|_| anyhow!("bad divisor in {token:?}"))?;
        if d == 0 {
            bail!("cos(pi/0) is undefined");
        }
        let k = need_k()?;
        return Ok(2.0 * ((k - 1) as f64).sqrt() * (std::f64::consts::PI / d as f64).cos());
    }

    // M*sqrt(radicand)
    if let Some((m, rest)) = t.split_once("*sqrt(") {
        let m: f64 = m.parse().map_err(|_| anyhow!("bad multiplier in {token:?}"))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| anyhow!("missing ')' in {token:?}"))?;
        return Ok(m * radicand(inner, k, need_k)?.sqrt());
    }

    // sqrt(radicand) with an optional trailing +M / -M
    if let Some(rest) = t.strip_prefix("sqrt(") {
        let close = rest
            .find(')')
            .ok_or_else(|| anyhow!("missing ')' in {token:?}"))?;
        let inner = &rest[..close];
        let suffix = &rest[close + 1..];
        let base = radicand(inner, k, need_k)?.sqrt();
        return match suffix {
            "" => Ok(base),
            _ if suffix.starts_with('-') || suffix.starts_with('+') => {
                let off: f64 = suffix
                    .parse()
                    .map_err(|_| anyhow!("bad offset in {token:?}"))?;
                Ok(base + off)
            }
            _ => Err(anyhow!("unrecognized suffix {suffix:?} in {token:?}")),
        };
    }

    bail!("unrecognized theta token {token:?} (use a decimal literal or a sqrt form)")
}

fn radicand(
    inner: &str,
    k: Option<u32>,
    need_k: impl Fn() -> Result<u32>,
) -> Result<f64> {
    match inner {
        "k" => Ok(need_k()? as f64),
        "k-1" => Ok(need_k()? as f64 - 1.0),
        "2k-1" => Ok(2.0 * need_k()? as f64 - 1.0),
        _ => {
            let v: f64 = inner
                .parse()
                .map_err(|_| anyhow!("bad radicand {inner:?}"))?;
            let _ = k;
            if v < 0.0 {
                bail!("negative radicand {inner:?}");
            }
            Ok(v)
        }
    }
}
