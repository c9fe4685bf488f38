//! Quotient matrices of vertex partitions and eigenvalue-interlacing
//! certificates: λ2 of any partition quotient is a lower bound on λ2 of the
//! graph, which is how the order bounds for girth-constrained regular graphs
//! are certified on concrete graphs.

use crate::graphs::{Graph, GraphError};
use crate::spectra::{quotient_eigen, DenseMatrix, SpectraError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum InterlaceError {
    #[error("blocks must be disjoint, nonempty, and cover all vertices")]
    InvalidPartition,
    #[error("the quotient of a single-block partition has no second eigenvalue")]
    NoSecondEigenvalue,
    #[error("inconsistent closed-form parameters: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Ordered list of disjoint vertex blocks covering the whole vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, InterlaceError> {
        let mut seen = vec![false; n];
        let mut covered = 0usize;
        for b in &blocks {
            if b.is_empty() {
                return Err(InterlaceError::InvalidPartition);
            }
            for &v in b {
                if v >= n || seen[v] {
                    return Err(InterlaceError::InvalidPartition);
                }
                seen[v] = true;
                covered += 1;
            }
        }
        if covered != n {
            return Err(InterlaceError::InvalidPartition);
        }
        let blocks = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        Ok(Partition { blocks, n })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Row-averaged quotient matrix: entry `(i,j)` is the average over
/// `v ∈ block_i` of `|N(v) ∩ block_j|`, kept as exact rationals.
pub fn quotient(g: &Graph, p: &Partition) -> Result<DenseMatrix, InterlaceError> {
    if p.n() != g.n() {
        return Err(InterlaceError::InvalidPartition);
    }
    let m = p.blocks.len();
    let mut block_of = vec![0usize; g.n()];
    for (i, b) in p.blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let mut rows = vec![vec![BigRational::zero(); m]; m];
    for (i, b) in p.blocks.iter().enumerate() {
        let mut counts = vec![0i64; m];
        for &v in b {
            for u in g.neighbors(v) {
                counts[block_of[u]] += 1;
            }
        }
        let size = BigInt::from(b.len() as i64);
        for (j, &c) in counts.iter().enumerate() {
            rows[i][j] = BigRational::new(BigInt::from(c), size.clone());
        }
    }
    Ok(DenseMatrix::from_rational_rows(rows)?)
}

/// λ2 of the partition quotient. By Cauchy interlacing for row-averaged
/// quotients this never exceeds λ2 of the graph, so it certifies lower
/// bounds on the graph's second eigenvalue.
pub fn interlacing_lower_bound(g: &Graph, p: &Partition) -> Result<f64, InterlaceError> {
    if p.blocks.len() < 2 {
        return Err(InterlaceError::NoSecondEigenvalue);
    }
    let q = quotient(g, p)?;
    let spec = quotient_eigen(&q, &p.block_sizes())?;
    spec.lambda2().ok_or(InterlaceError::NoSecondEigenvalue)
}

/// The partition shapes used by the girth case analyses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessPattern {
    /// `(V(H), {v}, rest)` with `v` at distance ≥ 2 from the cycle H.
    CycleVertex,
    /// `(V(H), {u,v}, rest)` with nonadjacent `u, v` at distance ≥ 2 from H.
    CyclePair,
    /// `(V(H), Γ_1(H), Γ_{≥2}(H))`, empty layers dropped.
    GammaLayers,
    /// `(V(H), {w1,w2}, {u,v}, rest)`: nonadjacent `u,v` at distance ≥ 2 and
    /// first-layer `w1,w2` adjacent to neither of them.
    FourPart,
}

/// A found witness: the cycle, the auxiliary vertices, and the partition.
#[derive(Debug, Clone)]
pub struct Witness {
    pub cycle: Vec<usize>,
    pub witnesses: Vec<usize>,
    pub partition: Partition,
}

/// Searches for a cycle of the given length together with witness vertices
/// completing the requested pattern. Cycles are explored in lexicographic
/// order of their vertex sequence (smallest vertex first, smaller neighbor
/// direction) and witnesses are the lexicographically smallest choice, so
/// the result is deterministic and replayable.
pub fn find_witness_partition(
    g: &Graph,
    cycle_len: usize,
    pattern: WitnessPattern,
) -> Option<Witness> {
    if cycle_len < 3 || cycle_len > g.n() {
        return None;
    }
    let mut result = None;
    for_each_cycle(g, cycle_len, &mut |cycle| {
        if let Some(w) = complete_pattern(g, cycle, pattern) {
            result = Some(w);
            true
        } else {
            false
        }
    });
    result
}

/// Calls `f` on each cycle (as a vertex sequence starting at its smallest
/// vertex, oriented toward the smaller second vertex) until `f` returns true.
fn for_each_cycle(g: &Graph, len: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.n();
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; n];
    for root in 0..n {
        path.push(root);
        used[root] = true;
        if dfs_cycles(g, root, len, &mut path, &mut used, f) {
            return;
        }
        used[root] = false;
        path.pop();
    }
}

fn dfs_cycles(
    g: &Graph,
    root: usize,
    len: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == len {
        let last = *path.last().unwrap();
        if g.has_edge(last, root) && path[1] < path[len - 1] {
            if f(path) {
                return true;
            }
        }
        return false;
    }
    let last = *path.last().unwrap();
    for v in g.neighbors(last) {
        // all cycle vertices stay above the root, keeping one canonical copy
        if v <= root || used[v] {
            continue;
        }
        path.push(v);
        used[v] = true;
        if dfs_cycles(g, root, len, path, used, f) {
            return true;
        }
        used[v] = false;
        path.pop();
    }
    false
}

fn complete_pattern(g: &Graph, cycle: &[usize], pattern: WitnessPattern) -> Option<Witness> {
    let n = g.n();
    let dist = g.distances_from(cycle);
    let far: Vec<usize> = (0..n)
        .filter(|&v| dist[v].map_or(true, |d| d >= 2))
        .collect();
    let in_cycle = |v: usize| cycle.contains(&v);
    let mut sorted_cycle = cycle.to_vec();
    sorted_cycle.sort_unstable();

    let build = |blocks: Vec<Vec<usize>>, witnesses: Vec<usize>| -> Option<Witness> {
        let blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let partition = Partition::new(n, blocks).ok()?;
        Some(Witness {
            cycle: cycle.to_vec(),
            witnesses,
            partition,
        })
    };

    match pattern {
        WitnessPattern::CycleVertex => {
            let v = *far.first()?;
            let rest: Vec<usize> = (0..n).filter(|&u| !in_cycle(u) && u != v).collect();
            build(vec![sorted_cycle, vec![v], rest], vec![v])
        }
        WitnessPattern::CyclePair => {
            let (u, v) = first_nonadjacent_pair(g, &far)?;
            let rest: Vec<usize> = (0..n)
                .filter(|&w| !in_cycle(w) && w != u && w != v)
                .collect();
            build(vec![sorted_cycle, vec![u, v], rest], vec![u, v])
        }
        WitnessPattern::GammaLayers => {
            let gamma1: Vec<usize> = (0..n).filter(|&v| dist[v] == Some(1)).collect();
            let gamma2: Vec<usize> = (0..n)
                .filter(|&v| dist[v].map_or(true, |d| d >= 2))
                .collect();
            build(vec![sorted_cycle, gamma1, gamma2], vec![])
        }
        WitnessPattern::FourPart => {
            let gamma1: Vec<usize> = (0..n).filter(|&v| dist[v] == Some(1)).collect();
            let (u, v) = first_nonadjacent_pair(g, &far)?;
            let ws: Vec<usize> = gamma1
                .iter()
                .copied()
                .filter(|&w| !g.has_edge(w, u) && !g.has_edge(w, v))
                .collect();
            if ws.len() < 2 {
                return None;
            }
            let (w1, w2) = (ws[0], ws[1]);
            let rest: Vec<usize> = (0..n)
                .filter(|&x| !in_cycle(x) && ![u, v, w1, w2].contains(&x))
                .collect();
            build(
                vec![sorted_cycle, vec![w1, w2], vec![u, v], rest],
                vec![w1, w2, u, v],
            )
        }
    }
}

fn first_nonadjacent_pair(g: &Graph, candidates: &[usize]) -> Option<(usize, usize)> {
    for (i, &u) in candidates.iter().enumerate() {
        for &v in &candidates[i + 1..] {
            if !g.has_edge(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Closed-form quotient for the girth-3 pattern `(C_3, {v}, rest)` in a
/// k-regular graph of order n: rows `[2,0,k-2]`, `[0,0,k]`,
/// `[3(k-2), k, k(n-4)-3(k-2)-k]/(n-4)`. Block sizes `[3,1,n-4]`.
pub fn q_c3(k: u32, n: u32) -> Result<(DenseMatrix, Vec<usize>), InterlaceError> {
    closed_form_cycle_vertex(k, n, 3)
}

/// Same for the girth-4 pattern `(C_4, {v}, rest)`; block sizes `[4,1,n-5]`.
pub fn q_c4(k: u32, n: u32) -> Result<(DenseMatrix, Vec<usize>), InterlaceError> {
    closed_form_cycle_vertex(k, n, 4)
}

fn closed_form_cycle_vertex(
    k: u32,
    n: u32,
    c: u32,
) -> Result<(DenseMatrix, Vec<usize>), InterlaceError> {
    if k < 3 || n < c + 2 {
        return Err(InterlaceError::BadParameter(format!(
            "need k >= 3 and n >= {}, got k={k}, n={n}",
            c + 2
        )));
    }
    let (kk, nn, cc) = (k as i64, n as i64, c as i64);
    let rest = nn - cc - 1;
    let rows = vec![
        vec![rat(2), rat(0), rat(kk - 2)],
        vec![rat(0), rat(0), rat(kk)],
        vec![
            ratio(cc * (kk - 2), rest),
            ratio(kk, rest),
            ratio(kk * rest - cc * (kk - 2) - kk, rest),
        ],
    ];
    Ok((
        DenseMatrix::from_rational_rows(rows)?,
        vec![c as usize, 1, rest as usize],
    ))
}

/// Closed-form quotient for `(C_4, {u,v}, rest)` with `u,v` at distance ≥ 2
/// from the cycle; `adjacent` encodes whether `u ~ v` (the α of the case
/// analysis). Block sizes `[4,2,n-6]`.
pub fn q_c4_pair(
    k: u32,
    n: u32,
    adjacent: bool,
) -> Result<(DenseMatrix, Vec<usize>), InterlaceError> {
    if k < 3 || n < 7 {
        return Err(InterlaceError::BadParameter(format!(
            "need k >= 3 and n >= 7, got k={k}, n={n}"
        )));
    }
    let (kk, nn) = (k as i64, n as i64);
    let a = i64::from(adjacent);
    let rest = nn - 6;
    let rows = vec![
        vec![rat(2), rat(0), rat(kk - 2)],
        vec![rat(0), rat(a), rat(kk - a)],
        vec![
            ratio(4 * (kk - 2), rest),
            ratio(2 * (kk - a), rest),
            rat(kk) - ratio(4 * (kk - 2) + 2 * (kk - a), rest),
        ],
    ];
    Ok((
        DenseMatrix::from_rational_rows(rows)?,
        vec![4, 2, rest as usize],
    ))
}

/// Closed-form quotient for the 4-regular girth-5 pattern
/// `(C_5, Γ_1, Γ_{≥2})`: rows `[2,2,0]`, `[1,3-α,α]`, `[0,4-β,β]` with
/// `10α = (n-15)(4-β)` (edge-count balance). Block sizes `[5,10,n-15]`.
pub fn q_c5_girth5(
    n: u32,
    alpha: BigRational,
    beta: BigRational,
) -> Result<(DenseMatrix, Vec<usize>), InterlaceError> {
    if n < 16 {
        return Err(InterlaceError::BadParameter(format!(
            "need n >= 16, got {n}"
        )));
    }
    let rest = n as i64 - 15;
    if rat(10) * &alpha != rat(rest) * (rat(4) - &beta) {
        return Err(InterlaceError::BadParameter(format!(
            "edge balance 10*alpha = (n-15)*(4-beta) fails for alpha={alpha}, beta={beta}, n={n}"
        )));
    }
    let rows = vec![
        vec![rat(2), rat(2), rat(0)],
        vec![rat(1), rat(3) - &alpha, alpha.clone()],
        vec![rat(0), rat(4) - &beta, beta.clone()],
    ];
    Ok((
        DenseMatrix::from_rational_rows(rows)?,
        vec![5, 10, rest as usize],
    ))
}

/// The fixed four-part quotient for the 4-regular girth-5 case at n = 17
/// with an independent far pair: blocks `(C_5, middle, N(u), {u})` of sizes
/// `[5,7,4,1]`.
pub fn q_fourpart_girth5_17() -> (DenseMatrix, Vec<usize>) {
    let rows = vec![
        vec![rat(2), ratio(6, 5), ratio(4, 5), rat(0)],
        vec![ratio(6, 7), rat(2), ratio(8, 7), rat(0)],
        vec![rat(1), rat(2), rat(0), rat(1)],
        vec![rat(0), rat(0), rat(4), rat(0)],
    ];
    (
        DenseMatrix::from_rational_rows(rows).expect("square"),
        vec![5, 7, 4, 1],
    )
}

/// The four-part quotient for the 5-regular girth-4 case at n = 18:
/// blocks `(C_4, {w1,w2}, {u,v}, rest)` of sizes `[4,2,2,10]`; `adjacent`
/// encodes `w1 ~ w2`.
pub fn q_fourpart_c4_18(adjacent: bool) -> (DenseMatrix, Vec<usize>) {
    let a = i64::from(adjacent);
    let rows = vec![
        vec![rat(2), ratio(1, 2), rat(0), ratio(5, 2)],
        vec![rat(1), rat(a), rat(0), rat(4 - a)],
        vec![rat(0), rat(0), rat(0), rat(5)],
        vec![rat(1), ratio(4 - a, 5), rat(1), ratio(11 + a, 5)],
    ];
    (
        DenseMatrix::from_rational_rows(rows).expect("square"),
        vec![4, 2, 2, 10],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{circulant, co_heawood, complete_bipartite, folded_cube, kneser};

    #[test]
    fn partition_validation() {
        assert!(Partition::new(4, vec![vec![0, 1], vec![2, 3]]).is_ok());
        assert!(Partition::new(4, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(Partition::new(4, vec![vec![0, 1], vec![2]]).is_err());
        assert!(Partition::new(4, vec![vec![0, 1], vec![], vec![2, 3]]).is_err());
    }

    #[test]
    fn single_block_quotient_is_valency() {
        let g = circulant(10, &[1, 2, 5, 8, 9]).unwrap();
        let p = Partition::new(10, vec![(0..10).collect()]).unwrap();
        let q = quotient(&g, &p).unwrap();
        assert_eq!(q.n(), 1);
        assert_eq!(q.exact(0, 0).unwrap(), &rat(5));
        assert!(matches!(
            interlacing_lower_bound(&g, &p),
            Err(InterlaceError::NoSecondEigenvalue)
        ));
    }

    #[test]
    fn row_sums_preserved_for_regular_graphs() {
        let g = kneser(5, 2).unwrap(); // Petersen, 3-regular
        let p = Partition::new(
            10,
            vec![vec![0, 1, 2], vec![3, 4], (5..10).collect()],
        )
        .unwrap();
        let q = quotient(&g, &p).unwrap();
        for i in 0..q.n() {
            let sum: BigRational = (0..q.n()).map(|j| q.exact(i, j).unwrap().clone()).sum();
            assert_eq!(sum, rat(3), "row {i}");
        }
    }

    #[test]
    fn witness_quotient_matches_closed_form() {
        // 4-regular circulant of girth 3 on 12 vertices: the found
        // (C_3,{v},rest) quotient must equal q_c3(4, 12) entry for entry
        let g = circulant(12, &[1, 2]).unwrap();
        let w = find_witness_partition(&g, 3, WitnessPattern::CycleVertex).unwrap();
        assert_eq!(w.cycle.len(), 3);
        assert_eq!(w.partition.block_sizes(), vec![3, 1, 8]);
        let q = quotient(&g, &w.partition).unwrap();
        let (qf, sizes) = q_c3(4, 12).unwrap();
        assert_eq!(sizes, vec![3, 1, 8]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.exact(i, j), qf.exact(i, j), "entry ({i},{j})");
            }
        }
        // at order 10 the triangle's neighborhood covers the whole Cayley
        // graph, so the single-vertex pattern has no witness there
        let g10 = circulant(10, &[1, 2, 5, 8, 9]).unwrap();
        assert!(find_witness_partition(&g10, 3, WitnessPattern::CycleVertex).is_none());
    }

    #[test]
    fn no_witnesses_where_none_exist() {
        // K_{5,5} has girth 4: no triangle at all
        let g = complete_bipartite(5, 5).unwrap();
        assert!(find_witness_partition(&g, 3, WitnessPattern::CycleVertex).is_none());

        // every 4-cycle of the folded 5-cube covers the whole graph within
        // distance 1, so the single-vertex pattern has no witness
        let g = folded_cube(5).unwrap();
        assert!(find_witness_partition(&g, 4, WitnessPattern::CycleVertex).is_none());

        // the co-Heawood graph does admit one
        let g = co_heawood();
        let w = find_witness_partition(&g, 4, WitnessPattern::CycleVertex).unwrap();
        assert_eq!(w.partition.block_sizes(), vec![4, 1, 9]);
    }

    #[test]
    fn gamma_layers_on_petersen() {
        let g = kneser(5, 2).unwrap();
        let w = find_witness_partition(&g, 5, WitnessPattern::GammaLayers).unwrap();
        // C_5 plus its neighborhood exhausts the Petersen graph
        assert_eq!(w.partition.block_sizes(), vec![5, 5]);
        assert_eq!(w.partition.block_sizes().iter().sum::<usize>(), 10);
    }

    #[test]
    fn interlacing_on_k55_quotients() {
        // lambda2(K_{5,5}) = 0 bounds every quotient's lambda2
        let g = complete_bipartite(5, 5).unwrap();
        for blocks in [
            vec![vec![0, 1], vec![2, 3, 4], (5..10).collect::<Vec<_>>()],
            vec![(0..5).collect::<Vec<_>>(), (5..10).collect()],
            vec![vec![0], vec![1, 5, 6], vec![2, 3, 4, 7, 8, 9]],
        ] {
            let p = Partition::new(10, blocks).unwrap();
            let l2 = interlacing_lower_bound(&g, &p).unwrap();
            assert!(l2 <= 1e-9, "{l2}");
        }
    }

    #[test]
    fn closed_form_builders_validate() {
        assert!(q_c3(5, 18).is_ok());
        assert!(q_c3(5, 4).is_err());
        assert!(q_c4_pair(5, 6, true).is_err());
        // balance violated
        assert!(q_c5_girth5(18, ratio(1, 1), ratio(1, 1)).is_err());
        // n=18, one edge in the far block: (alpha, beta) = (1, 2/3)
        assert!(q_c5_girth5(18, rat(1), ratio(2, 3)).is_ok());
    }

    #[test]
    fn girth_pattern_quotient_values() {
        // girth-4 pattern at n=18, k=5: lambda2 = (9+sqrt(601))/26
        let (q, sizes) = q_c4(5, 18).unwrap();
        let spec = quotient_eigen(&q, &sizes).unwrap();
        let expect = (9.0 + 601f64.sqrt()) / 26.0;
        assert!((spec.lambda2().unwrap() - expect).abs() < 1e-10);
        assert!(expect > 5f64.sqrt() - 1.0);

        // girth-3 family: (n-11+sqrt(n^2-12n+81))/(n-4) for n >= 12
        for n in 12..=22u32 {
            let (q, sizes) = q_c3(5, n).unwrap();
            let spec = quotient_eigen(&q, &sizes).unwrap();
            let nf = n as f64;
            let expect = (nf - 11.0 + (nf * nf - 12.0 * nf + 81.0).sqrt()) / (nf - 4.0);
            assert!((spec.lambda2().unwrap() - expect).abs() < 1e-10, "n={n}");
            if n >= 12 {
                assert!(expect > 5f64.sqrt() - 1.0, "n={n}");
            }
        }
    }

    #[test]
    fn interlacing_soundness_on_fixed_graphs() {
        // quotient lambda2 never exceeds graph lambda2
        for (g, blocks) in [
            (
                kneser(5, 2).unwrap(),
                vec![vec![0, 3, 6], vec![1, 2], (4..10).filter(|&v| v != 6).collect::<Vec<_>>()],
            ),
            (
                circulant(12, &[1, 3]).unwrap(),
                vec![(0..4).collect::<Vec<_>>(), (4..12).collect()],
            ),
        ] {
            let n = g.n();
            let p = Partition::new(n, blocks).unwrap();
            let l2g = g.second_eigenvalue().unwrap();
            let l2q = interlacing_lower_bound(&g, &p).unwrap();
            assert!(l2q <= l2g + 1e-9, "{l2q} vs {l2g}");
        }
    }
}
