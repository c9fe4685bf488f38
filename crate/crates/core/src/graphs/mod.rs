//! Simple undirected graphs: bit-row adjacency, invariants (girth, diameter,
//! regularity), spectra, the graph6 codec, named constructions, canonical
//! labeling, exhaustive enumeration of small regular graphs, and catalog
//! filtering by second eigenvalue.

mod canon;
mod catalog;
mod constructions;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, canonical_relabeling};
pub use catalog::{
    filter_catalog, CatalogConstraints, CatalogMatch, CatalogReport, IntervalVerdict,
    Lambda2Interval, LAMBDA2_GUARD,
};
pub use constructions::{
    biaffine, circulant, cliques_plus_cycles, co_heawood, complete_bipartite, construct_by_name,
    cycle, folded_cube, kneser, pappus, CliqueBridge,
};
pub use enumerate::{
    enumerate_regular, EnumerateFilters, GraphCatalogEntry, ENUMERATE_MAX_K, ENUMERATE_MAX_N,
};
pub use graph6::{parse_graph6, write_graph6, Graph6Error, GRAPH6_MAX_N};

use crate::spectra::{self, DenseMatrix, Spectrum, SpectraError};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GraphError {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid construction parameter: {0}")]
    BadParameter(String),
    #[error("{0} is not prime; only prime-order affine planes are supported")]
    NonPrimeOrder(u32),
    #[error("enumeration parameters (n={n}, k={k}) exceed the caps (n<={max_n}, k<={max_k})")]
    EnumerationCap {
        n: usize,
        k: usize,
        max_n: usize,
        max_k: usize,
    },
    #[error("n*k must be even to admit a k-regular graph (n={n}, k={k})")]
    OddDegreeSum { n: usize, k: usize },
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Simple undirected graph stored as n rows of n-bit adjacency sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0u64; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / 64] |= 1u64 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1u64 << (u % 64);
    }

    /// Adds the edge `u-v`. Panics on out-of-range vertices or a self-loop;
    /// validated input should go through [`Graph::from_edges`].
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "invalid edge ({u},{v})");
        self.set_edge(u, v);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[v * self.words..(v + 1) * self.words];
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let base = wi * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Non-increasing degree list.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// `Some(k)` when every vertex has degree k.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for v in 0..self.n {
            let src = &self.bits[v * self.words..(v + 1) * self.words];
            let dst = &mut g.bits[v * self.words..(v + 1) * self.words];
            for (w, (&s, d)) in src.iter().zip(dst.iter_mut()).enumerate() {
                let mut m = !s;
                // clear the diagonal and the tail beyond n
                if v / 64 == w {
                    m &= !(1u64 << (v % 64));
                }
                let hi = (w + 1) * 64;
                if hi > self.n {
                    let keep = 64 - (hi - self.n);
                    m &= if keep == 0 { 0 } else { u64::MAX >> (64 - keep) };
                }
                *d = m;
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// BFS distances from a set of sources (`None` = unreachable).
    pub fn distances_from(&self, sources: &[usize]) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances_from(&[0]).iter().all(|d| d.is_some())
    }

    /// Length of the shortest cycle, or `None` for a forest.
    ///
    /// BFS from every vertex; a non-tree edge `(u,w)` seen from root `r`
    /// witnesses a closed walk of length `dist(u)+dist(w)+1` through an edge
    /// traversed once, so the minimum over all roots is exact.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for r in 0..self.n {
            dist.fill(u32::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[r] = 0;
            queue.push_back(r);
            while let Some(u) = queue.pop_front() {
                if let Some(b) = best {
                    // no shorter cycle through r can appear beyond this depth
                    if dist[u] > b / 2 {
                        break;
                    }
                }
                for w in self.neighbors(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let cand = dist[u] + dist[w] + 1;
                        if best.map_or(true, |b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn diameter(&self) -> Result<u32, GraphError> {
        let mut diam = 0u32;
        for r in 0..self.n {
            for d in self.distances_from(&[r]) {
                match d {
                    None => return Err(GraphError::Disconnected),
                    Some(d) => diam = diam.max(d),
                }
            }
        }
        Ok(diam)
    }

    /// 0/1 adjacency matrix, with exact rational entries attached.
    pub fn adjacency_matrix(&self) -> DenseMatrix {
        let mut rows = vec![vec![BigRational::zero(); self.n]; self.n];
        for (u, v) in self.edges() {
            rows[u][v] = BigRational::one();
            rows[v][u] = BigRational::one();
        }
        DenseMatrix::from_rational_rows(rows).expect("square by construction")
    }

    /// Full adjacency spectrum via the Jacobi eigensolver.
    pub fn spectrum(&self) -> Result<Spectrum, GraphError> {
        Ok(spectra::sym_eigen(&self.adjacency_matrix())?)
    }

    /// Second-largest adjacency eigenvalue, counted with multiplicity.
    pub fn second_eigenvalue(&self) -> Result<f64, GraphError> {
        let spec = self.spectrum()?;
        spec.lambda2()
            .ok_or_else(|| GraphError::BadParameter("graph has a single vertex".into()))
    }

    pub fn lambda_min(&self) -> Result<f64, GraphError> {
        Ok(self.spectrum()?.lambda_min())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}
