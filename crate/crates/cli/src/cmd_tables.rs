//! `tables`: regenerate the reference tables from first principles — LP
//! floors as upper bounds, compiled-in attainer graphs re-verified
//! spectrally as lower bounds, and the cage-refined algebraic-connectivity
//! list.

use crate::record::{sig10_string, Format, OutputRecord};
use crate::theta::parse_theta;
use anyhow::Result;
use spectral_moore::bounds::{ac_refined, m_bound, m_of_theta, KNOWN_CAGES};
use spectral_moore::graphs::{co_heawood, complete_bipartite, folded_cube, kneser};
use spectral_moore::Graph;

#[derive(clap::Args, Debug)]
pub struct TablesArgs {
    #[arg(value_enum)]
    which: TableKind,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
pub enum TableKind {
    /// Maximum order table for valency 4.
    Vk4,
    /// Maximum order table for valency 5.
    Vk5,
    /// Floors of the sqrt(2) upper bound N_k for k = 4..10.
    Nk,
    /// Cage-refined algebraic connectivity upper bounds.
    Ac,
}

struct VRow {
    theta: &'static str,
    v: u64,
    attainer: Option<(&'static str, fn() -> Graph)>,
}

fn k5_complete() -> Graph {
    kneser(5, 1).unwrap()
}
fn k6_complete() -> Graph {
    kneser(6, 1).unwrap()
}
fn k44() -> Graph {
    complete_bipartite(4, 4).unwrap()
}
fn k55() -> Graph {
    complete_bipartite(5, 5).unwrap()
}
fn folded5() -> Graph {
    folded_cube(5).unwrap()
}
fn odd4() -> Graph {
    kneser(7, 3).unwrap()
}
fn coheawood() -> Graph {
    co_heawood()
}

const VK4: &[VRow] = &[
    VRow { theta: "-1", v: 5, attainer: Some(("K_5", k5_complete)) },
    VRow { theta: "0", v: 8, attainer: Some(("K_4x4", k44)) },
    VRow { theta: "1", v: 12, attainer: None },
    VRow { theta: "sqrt(5)-1", v: 12, attainer: None },
    VRow { theta: "sqrt(2)", v: 14, attainer: Some(("co-Heawood", coheawood)) },
    VRow { theta: "sqrt(3)", v: 26, attainer: None },
    VRow { theta: "2", v: 35, attainer: Some(("Odd graph O_4", odd4)) },
    VRow { theta: "sqrt(6)", v: 80, attainer: None },
    VRow { theta: "3", v: 728, attainer: None },
];

const VK5: &[VRow] = &[
    VRow { theta: "-1", v: 6, attainer: Some(("K_6", k6_complete)) },
    VRow { theta: "0", v: 10, attainer: Some(("K_5x5", k55)) },
    VRow { theta: "1", v: 16, attainer: Some(("folded 5-cube", folded5)) },
    VRow { theta: "sqrt(5)-1", v: 16, attainer: Some(("folded 5-cube", folded5)) },
    VRow { theta: "sqrt(2)", v: 16, attainer: Some(("folded 5-cube", folded5)) },
    VRow { theta: "2", v: 42, attainer: None },
    VRow { theta: "2*sqrt(2)", v: 170, attainer: None },
    VRow { theta: "2*sqrt(3)", v: 2730, attainer: None },
];

/// The recorded AC(3,7) value that fails the defining identity
/// M(3, 3 - AC) = 24; `tables ac` recomputes the entry and flags this.
const AC37_PUBLISHED: f64 = 1.88793;

pub fn run(args: &TablesArgs, format: Format) -> Result<u8> {
    let rec = match args.which {
        TableKind::Nk => nk_table()?,
        TableKind::Vk4 => v_table("vk4", 4, VK4)?,
        TableKind::Vk5 => v_table("vk5", 5, VK5)?,
        TableKind::Ac => ac_table()?,
    };
    print!("{}", rec.render(format));
    Ok(0)
}

fn nk_table() -> Result<OutputRecord> {
    let mut rec = OutputRecord::new("tables");
    rec.input("which", "nk");
    let c_token = "(k-2)(sqrt(2)-1)";
    let mut rows = Vec::new();
    for k in 4u32..=10 {
        let c = (k as f64 - 2.0) * (2f64.sqrt() - 1.0);
        let nk = m_bound(k, 3, c)?;
        rows.push(vec![
            k.to_string(),
            sig10_string(nk),
            ((nk + 1e-9).floor() as i64).to_string(),
        ]);
    }
    rec.table = Some((
        vec!["k".into(), "N_k".into(), "floor".into()],
        rows,
    ));
    rec.footnote(format!(
        "N_k = M(k,3,{c_token}) evaluated by the (t,c)-form LP bound; lambda2(T(k,3,{c_token})) = sqrt(2)"
    ));
    Ok(rec)
}

fn v_table(which: &str, k: u32, rows_in: &[VRow]) -> Result<OutputRecord> {
    let mut rec = OutputRecord::new("tables");
    rec.input("which", which);
    let mut rows = Vec::new();
    for row in rows_in {
        let theta = parse_theta(row.theta, Some(k))?;
        let lp_floor = m_of_theta(k, theta)?.bound_floor;
        let (attainer, verified) = match &row.attainer {
            None => ("-".to_string(), "-".to_string()),
            Some((name, build)) => {
                let g = build();
                let ok = g.n() as u64 == row.v
                    && g.is_regular() == Some(k as usize)
                    && g.second_eigenvalue()? <= theta + 1e-9;
                (
                    name.to_string(),
                    if ok {
                        format!("lambda2 = {}", sig10_string(g.second_eigenvalue()?))
                    } else {
                        "FAILED".to_string()
                    },
                )
            }
        };
        rows.push(vec![
            row.theta.to_string(),
            row.v.to_string(),
            lp_floor.to_string(),
            attainer,
            verified,
        ]);
    }
    rec.table = Some((
        vec![
            "theta".into(),
            format!("v({k},theta)"),
            "lp_floor".into(),
            "attainer".into(),
            "attainer_check".into(),
        ],
        rows,
    ));
    rec.footnote("v values are the established maxima; lp_floor = floor(M(k,theta)) is the LP upper bound recomputed here");
    rec.footnote("attainer_check re-verifies the compiled-in attainer's order, valency, and lambda2 spectrally");
    Ok(rec)
}

fn ac_table() -> Result<OutputRecord> {
    let mut rec = OutputRecord::new("tables");
    rec.input("which", "ac");
    let mut rows = Vec::new();
    for cage in KNOWN_CAGES {
        let (theta, ac) = ac_refined(&cage)?;
        let note = if (cage.k, cage.g) == (3, 7) {
            format!(
                "discrepancy: recorded value {AC37_PUBLISHED} fails M(3, 3-AC) = 24; recomputed here"
            )
        } else {
            "-".to_string()
        };
        rows.push(vec![
            cage.k.to_string(),
            cage.g.to_string(),
            cage.order.to_string(),
            sig10_string(theta),
            sig10_string(ac),
            note,
        ]);
    }
    rec.table = Some((
        vec![
            "k".into(),
            "g".into(),
            "cage_order".into(),
            "theta".into(),
            "ac_upper".into(),
            "note".into(),
        ],
        rows,
    ));
    rec.footnote("theta solves M(k,theta) = cage order (bisection on the monotone LP bound); ac_upper = k - theta");
    Ok(rec)
}
