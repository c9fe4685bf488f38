//! `bound`: evaluate the LP bound in its eigenvalue form `M(k,θ)` or its
//! matrix form `M(k,t,c)`.

use crate::record::{Format, OutputRecord};
use crate::theta::parse_theta;
use anyhow::{bail, Result};
use spectral_moore::bounds::{m_bound, m_of_theta};
use spectral_moore::spectra::lambda2_tridiag;

#[derive(clap::Args, Debug)]
pub struct BoundArgs {
    /// Valency.
    #[arg(short)]
    k: u32,
    /// Second-eigenvalue bound; accepts symbolic tokens like "sqrt(5)-1".
    #[arg(long, conflicts_with_all = ["t", "c"])]
    theta: Option<String>,
    /// Matrix order for the (t,c) form.
    #[arg(short, requires = "c")]
    t: Option<u32>,
    /// Bottom coupling for the (t,c) form.
    #[arg(short, requires = "t", allow_hyphen_values = true)]
    c: Option<f64>,
}

pub fn run(args: &BoundArgs, format: Format) -> Result<u8> {
    let mut rec = OutputRecord::new("bound");
    rec.input("k", args.k);
    match (&args.theta, args.t, args.c) {
        (Some(token), None, None) => {
            let theta = parse_theta(token, Some(args.k))?;
            rec.input("theta", token);
            let report = m_of_theta(args.k, theta)?;
            rec.result_f64("theta", theta)
                .result("d", report.d)
                .result_f64("c_theta", report.c_theta)
                .result_f64("bound", report.bound)
                .result("floor", report.bound_floor);
        }
        (None, Some(t), Some(c)) => {
            rec.input("t", t).input("c", c);
            let bound = m_bound(args.k, t, c)?;
            let lambda2 = lambda2_tridiag(args.k, t as usize, c)?;
            rec.result_f64("bound", bound)
                .result("floor", (bound + 1e-9).floor() as i64)
                .result_f64("lambda2_T", lambda2);
        }
        _ => bail!("give either --theta or both -t and -c"),
    }
    print!("{}", rec.render(format));
    Ok(0)
}
