//! Named graph families: cycles, complete bipartite graphs, Kneser graphs,
//! folded cubes, circulants, the Pappus and co-Heawood graphs, bi-affine
//! planes, and the two-cliques-plus-bridge complements.

use super::{Graph, GraphError};

/// The cycle C_n.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::BadParameter(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// K_{a,b}.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(GraphError::BadParameter(
            "both parts must be nonempty".into(),
        ));
    }
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Kneser graph K(m, r): r-subsets of an m-set, adjacent when disjoint.
/// `kneser(7,3)` is the Odd graph O_4; `kneser(m,1)` is K_m.
pub fn kneser(m: usize, r: usize) -> Result<Graph, GraphError> {
    if r == 0 || r > m {
        return Err(GraphError::BadParameter(format!(
            "need 1 <= r <= m, got r={r}, m={m}"
        )));
    }
    if m > 20 {
        return Err(GraphError::BadParameter(format!(
            "ground set too large (m={m} > 20)"
        )));
    }
    let mut subsets: Vec<u32> = (0u32..1 << m)
        .filter(|s| s.count_ones() as usize == r)
        .collect();
    subsets.sort_unstable();
    let n = subsets.len();
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if subsets[i] & subsets[j] == 0 {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Folded d-cube: the (d-1)-cube with antipodal vertices joined
/// (equivalently, the d-cube with antipodal pairs identified).
pub fn folded_cube(d: usize) -> Result<Graph, GraphError> {
    if !(3..=16).contains(&d) {
        return Err(GraphError::BadParameter(format!(
            "folded cube dimension must be in 3..=16, got {d}"
        )));
    }
    let n = 1usize << (d - 1);
    let full = (n - 1) as u32;
    let mut g = Graph::new(n);
    for v in 0..n {
        for b in 0..d - 1 {
            let u = v ^ (1 << b);
            if u > v {
                g.add_edge(v, u);
            }
        }
        let u = v ^ full as usize;
        if u > v {
            g.add_edge(v, u);
        }
    }
    Ok(g)
}

/// Circulant graph Cay(Z_n, S) for a symmetric connection set S.
/// Offsets `s` and `n-s` describe the same edges.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::BadParameter(format!(
            "circulant needs at least 2 vertices, got {n}"
        )));
    }
    if connection.is_empty() {
        return Err(GraphError::BadParameter("empty connection set".into()));
    }
    let mut g = Graph::new(n);
    for &s in connection {
        if s == 0 || s >= n {
            return Err(GraphError::BadParameter(format!(
                "connection offset {s} outside 1..{n}"
            )));
        }
        for v in 0..n {
            let u = (v + s) % n;
            if u != v && !g.has_edge(v, u) {
                g.add_edge(v, u);
            }
        }
    }
    Ok(g)
}

/// The Pappus graph: 3-regular on 18 vertices, girth 6, second eigenvalue √3.
///
/// Certified edge list (LCF notation [5,7,-7,7,-7,-5]^3); the spectrum
/// {3, √3^6, 0^4, (-√3)^6, -3} is pinned by tests.
pub fn pappus() -> Graph {
    const EDGES: [(usize, usize); 27] = [
        (0, 1), (0, 5), (0, 17), (1, 2), (1, 8), (2, 3), (2, 13), (3, 4), (3, 10),
        (4, 5), (4, 15), (5, 6), (6, 7), (6, 11), (7, 8), (7, 14), (8, 9), (9, 10),
        (9, 16), (10, 11), (11, 12), (12, 13), (12, 17), (13, 14), (14, 15), (15, 16),
        (16, 17),
    ];
    Graph::from_edges(18, &EDGES).expect("certified edge list")
}

/// The co-Heawood graph: bipartite complement of the Heawood graph, i.e. the
/// point–line non-incidence graph of the Fano plane. 4-regular on 14
/// vertices with spectrum {4, √2^6, (-√2)^6, -4}.
///
/// Certified edge list (points 0..6, line i = {i, i+1, i+3} mod 7 at 7+i).
pub fn co_heawood() -> Graph {
    const EDGES: [(usize, usize); 28] = [
        (0, 8), (0, 9), (0, 10), (0, 12), (1, 9), (1, 10), (1, 11), (1, 13),
        (2, 7), (2, 10), (2, 11), (2, 12), (3, 8), (3, 11), (3, 12), (3, 13),
        (4, 7), (4, 9), (4, 12), (4, 13), (5, 7), (5, 8), (5, 10), (5, 13),
        (6, 7), (6, 8), (6, 9), (6, 11),
    ];
    Graph::from_edges(14, &EDGES).expect("certified edge list")
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Bi-affine plane: incidence graph of AG(2,q) minus one parallel class of
/// lines, for prime q. Vertices are the q² points and the q² non-vertical
/// lines `y = mx + b`; the graph is q-regular bipartite on 2q² vertices.
///
/// Prime powers (q = 9 needs GF(9)) are out of scope.
pub fn biaffine(q: u32) -> Result<Graph, GraphError> {
    if !is_prime(q) {
        return Err(GraphError::NonPrimeOrder(q));
    }
    let qq = q as usize;
    let n = 2 * qq * qq;
    let mut g = Graph::new(n);
    for m in 0..qq {
        for b in 0..qq {
            let line = qq * qq + m * qq + b;
            for x in 0..qq {
                let y = (m * x + b) % qq;
                g.add_edge(x * qq + y, line);
            }
        }
    }
    Ok(g)
}

/// How the two cliques of [`cliques_plus_cycles`] are bridged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueBridge {
    /// A perfect matching a_i ~ b_i.
    PerfectMatching,
    /// A 2-regular bipartite graph whose cycles (alternating between the
    /// cliques, hence even, length >= 4) have the given lengths.
    Cycles(Vec<usize>),
}

/// Two disjoint K_m's joined by a perfect matching or a 2-regular bipartite
/// bridge of prescribed even-cycle type. These are the complements of the
/// bipartite (m-2)- and (m-3)-regular graphs on 2m vertices.
pub fn cliques_plus_cycles(m: usize, bridge: &CliqueBridge) -> Result<Graph, GraphError> {
    if m < 2 {
        return Err(GraphError::BadParameter(format!(
            "clique order must be at least 2, got {m}"
        )));
    }
    let mut g = Graph::new(2 * m);
    for i in 0..m {
        for j in i + 1..m {
            g.add_edge(i, j);
            g.add_edge(m + i, m + j);
        }
    }
    match bridge {
        CliqueBridge::PerfectMatching => {
            for i in 0..m {
                g.add_edge(i, m + i);
            }
        }
        CliqueBridge::Cycles(lengths) => {
            if lengths.iter().any(|&l| l < 4 || l % 2 != 0) {
                return Err(GraphError::BadParameter(
                    "cycle lengths must be even and at least 4".into(),
                ));
            }
            if lengths.iter().sum::<usize>() != 2 * m {
                return Err(GraphError::BadParameter(format!(
                    "cycle lengths must sum to {}, got {}",
                    2 * m,
                    lengths.iter().sum::<usize>()
                )));
            }
            let mut next = 0usize;
            for &l in lengths {
                let h = l / 2;
                // alternate a_next, b_next, a_next+1, b_next+1, ...
                for t in 0..h {
                    let a = next + t;
                    let b = m + next + t;
                    g.add_edge(a, b);
                    let a2 = next + (t + 1) % h;
                    g.add_edge(b, a2);
                }
                next += h;
            }
        }
    }
    Ok(g)
}

/// String-keyed constructor dispatch for the command-line surface.
///
/// Recognized names: `cycle n`, `complete-bipartite a b`, `kneser m r`,
/// `folded-cube d`, `circulant n s1,s2,...`, `pappus`, `co-heawood`,
/// `biaffine q`, `cliques-plus-cycles m matching|l1,l2,...`, and a
/// `complement <name> ...` wrapper.
pub fn construct_by_name(name: &str, params: &[String]) -> Result<Graph, GraphError> {
    let want = |n: usize| -> Result<(), GraphError> {
        if params.len() != n {
            return Err(GraphError::BadParameter(format!(
                "{name} expects {n} parameter(s), got {}",
                params.len()
            )));
        }
        Ok(())
    };
    let int = |s: &String| -> Result<usize, GraphError> {
        s.parse::<usize>()
            .map_err(|_| GraphError::BadParameter(format!("not an integer: {s}")))
    };
    match name {
        "cycle" => {
            want(1)?;
            cycle(int(&params[0])?)
        }
        "complete-bipartite" => {
            want(2)?;
            complete_bipartite(int(&params[0])?, int(&params[1])?)
        }
        "kneser" => {
            want(2)?;
            kneser(int(&params[0])?, int(&params[1])?)
        }
        "folded-cube" => {
            want(1)?;
            folded_cube(int(&params[0])?)
        }
        "circulant" => {
            want(2)?;
            let set: Result<Vec<usize>, _> = params[1].split(',').map(|s| s.trim().parse()).collect();
            let set = set.map_err(|_| {
                GraphError::BadParameter(format!("bad connection set: {}", params[1]))
            })?;
            circulant(int(&params[0])?, &set)
        }
        "pappus" => {
            want(0)?;
            Ok(pappus())
        }
        "co-heawood" => {
            want(0)?;
            Ok(co_heawood())
        }
        "biaffine" => {
            want(1)?;
            let q = params[0]
                .parse::<u32>()
                .map_err(|_| GraphError::BadParameter(format!("not an integer: {}", params[0])))?;
            biaffine(q)
        }
        "cliques-plus-cycles" => {
            want(2)?;
            let m = int(&params[0])?;
            let bridge = if params[1] == "matching" {
                CliqueBridge::PerfectMatching
            } else {
                let lens: Result<Vec<usize>, _> =
                    params[1].split(',').map(|s| s.trim().parse()).collect();
                CliqueBridge::Cycles(lens.map_err(|_| {
                    GraphError::BadParameter(format!("bad cycle type: {}", params[1]))
                })?)
            };
            cliques_plus_cycles(m, &bridge)
        }
        "complement" => {
            if params.is_empty() {
                return Err(GraphError::BadParameter(
                    "complement needs an inner construction".into(),
                ));
            }
            let inner = construct_by_name(&params[0], &params[1..])?;
            Ok(inner.complement())
        }
        other => Err(GraphError::BadParameter(format!(
            "unknown construction: {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_spectrum(g: &Graph, expect: &[(f64, usize)], tol: f64) {
        let spec = g.spectrum().unwrap();
        let pairs = spec.pairs();
        assert_eq!(pairs.len(), expect.len(), "got {spec}");
        for ((v, m), (ev, em)) in pairs.iter().zip(expect) {
            assert!((v - ev).abs() < tol, "value {v} vs {ev} in {spec}");
            assert_eq!(m, em, "multiplicity of {ev} in {spec}");
        }
    }

    #[test]
    fn folded_five_cube_audit() {
        let g = folded_cube(5).unwrap();
        assert_eq!(g.n(), 16);
        assert_eq!(g.is_regular(), Some(5));
        assert_eq!(g.diameter().unwrap(), 2);
        assert_eq!(g.girth(), Some(4));
        assert_spectrum(&g, &[(5.0, 1), (1.0, 10), (-3.0, 5)], 1e-8);
    }

    #[test]
    fn co_heawood_audit() {
        let g = co_heawood();
        assert_eq!(g.n(), 14);
        assert_eq!(g.is_regular(), Some(4));
        assert_eq!(g.girth(), Some(4));
        let r2 = 2f64.sqrt();
        assert_spectrum(&g, &[(4.0, 1), (r2, 6), (-r2, 6), (-4.0, 1)], 1e-8);
    }

    #[test]
    fn pappus_audit() {
        let g = pappus();
        assert_eq!(g.n(), 18);
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.girth(), Some(6));
        let r3 = 3f64.sqrt();
        assert_spectrum(&g, &[(3.0, 1), (r3, 6), (0.0, 4), (-r3, 6), (-3.0, 1)], 1e-8);
        assert!((g.second_eigenvalue().unwrap() - r3).abs() < 1e-9);
    }

    #[test]
    fn kneser_audit() {
        let g = kneser(7, 3).unwrap();
        assert_eq!(g.n(), 35);
        assert_eq!(g.is_regular(), Some(4));
        assert_eq!(g.girth(), Some(6));
        assert_spectrum(&g, &[(4.0, 1), (2.0, 14), (-1.0, 14), (-3.0, 6)], 1e-8);
        // kneser(m,1) is the complete graph
        let k5 = kneser(5, 1).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.diameter().unwrap(), 1);
    }

    #[test]
    fn biaffine_audit() {
        let g = biaffine(5).unwrap();
        assert_eq!(g.n(), 50);
        assert_eq!(g.is_regular(), Some(5));
        let r5 = 5f64.sqrt();
        assert_spectrum(
            &g,
            &[(5.0, 1), (r5, 20), (0.0, 8), (-r5, 20), (-5.0, 1)],
            1e-8,
        );
        assert!(matches!(biaffine(9), Err(GraphError::NonPrimeOrder(9))));
        assert!(matches!(biaffine(1), Err(GraphError::NonPrimeOrder(1))));
    }

    #[test]
    fn circulant_audit() {
        // Cay(Z_10, {1,2,5,8,9}): lambda2 = sqrt(5) - 1
        let g = circulant(10, &[1, 2, 5, 8, 9]).unwrap();
        assert_eq!(g.is_regular(), Some(5));
        let l2 = g.second_eigenvalue().unwrap();
        assert!((l2 - (5f64.sqrt() - 1.0)).abs() < 1e-9, "{l2}");
        assert!(circulant(10, &[0]).is_err());
        assert!(circulant(10, &[10]).is_err());
    }

    #[test]
    fn cliques_bridge_validation() {
        assert!(cliques_plus_cycles(7, &CliqueBridge::Cycles(vec![4, 10])).is_ok());
        // odd length rejected
        assert!(cliques_plus_cycles(7, &CliqueBridge::Cycles(vec![5, 9])).is_err());
        // wrong total rejected
        assert!(cliques_plus_cycles(7, &CliqueBridge::Cycles(vec![4, 4])).is_err());
        let g = cliques_plus_cycles(6, &CliqueBridge::PerfectMatching).unwrap();
        assert_eq!(g.is_regular(), Some(6));
        // bridge degree exactly 2 in the cycles case
        let g = cliques_plus_cycles(7, &CliqueBridge::Cycles(vec![14])).unwrap();
        assert_eq!(g.is_regular(), Some(8));
        // the complement is bipartite 5-regular on 14 vertices
        let c = g.complement();
        assert_eq!(c.is_regular(), Some(5));
        assert_eq!(c.girth(), Some(4));
    }

    #[test]
    fn clique_complement_lowest_eigenvalues() {
        // exact values: the charpoly of the first three cases carries an
        // (x+3) factor; the C14 case bottoms out at a root of x^3+4x^2+3x-1
        for (lengths, want) in [
            (vec![4, 10], -3.0),
            (vec![4, 4, 6], -3.0),
            (vec![6, 8], -3.0),
            (vec![14], -2.8019377358048383),
        ] {
            let g = cliques_plus_cycles(7, &CliqueBridge::Cycles(lengths.clone())).unwrap();
            let got = g.lambda_min().unwrap();
            assert!((got - want).abs() < 1e-9, "{lengths:?}: {got}");
        }
        let g = cliques_plus_cycles(6, &CliqueBridge::PerfectMatching).unwrap();
        assert!((g.lambda_min().unwrap() + 2.0).abs() < 1e-9);
        // complement identity: lambda2 of the bipartite complement
        let g14 = cliques_plus_cycles(7, &CliqueBridge::Cycles(vec![14])).unwrap();
        let comp = g14.complement();
        let l2 = comp.second_eigenvalue().unwrap();
        assert!((l2 - (-1.0 - g14.lambda_min().unwrap())).abs() < 1e-8);
        assert!(l2 > 5f64.sqrt() - 1.0);
    }

    #[test]
    fn dispatcher() {
        let g = construct_by_name("folded-cube", &["5".into()]).unwrap();
        assert_eq!(g.n(), 16);
        let g = construct_by_name("circulant", &["10".into(), "1,2,5,8,9".into()]).unwrap();
        assert_eq!(g.is_regular(), Some(5));
        let g = construct_by_name("complement", &["cycle".into(), "5".into()]).unwrap();
        assert_eq!(g.is_regular(), Some(2));
        assert!(construct_by_name("petersen", &[]).is_err());
        assert!(construct_by_name("cycle", &[]).is_err());
    }
}
