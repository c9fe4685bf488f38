//! Exhaustive enumeration of k-regular graphs on n vertices up to
//! isomorphism: vertex-by-vertex connection-set backtracking with degree
//! pruning and a prefix symmetry reduction, deduplicated by canonical form.

use super::{canonical_form, Graph};
use super::GraphError;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Desk-scale caps; configuration constants, not algorithmic limits.
pub const ENUMERATE_MAX_N: usize = 12;
pub const ENUMERATE_MAX_K: usize = 5;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateFilters {
    pub connected: bool,
    pub girth: Option<u32>,
    pub diameter: Option<u32>,
}

/// One catalog entry: the graph, where it came from (line number for parsed
/// catalogs, output index for enumeration), and its canonical key.
#[derive(Debug, Clone)]
pub struct GraphCatalogEntry {
    pub graph: Graph,
    pub source_line: usize,
    pub canonical_key: Vec<u8>,
}

#[derive(Clone)]
struct PartialGraph {
    n: usize,
    k: usize,
    rows: Vec<u64>,
    deg: Vec<u8>,
}

impl PartialGraph {
    fn new(n: usize, k: usize) -> Self {
        PartialGraph {
            n,
            k,
            rows: vec![0; n],
            deg: vec![0; n],
        }
    }

    fn add(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.deg[u] += 1;
        self.deg[v] += 1;
    }

    fn remove(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        self.deg[u] -= 1;
        self.deg[v] -= 1;
    }

    fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.rows[u] >> v & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Fills vertex `v`'s remaining degree from higher-indexed candidates,
/// calling `sink` once every vertex up to (excluding) `stop_at` is complete.
///
/// Candidates with identical adjacency to the processed prefix are
/// interchangeable, so within each such class only prefix choices are
/// explored: any other choice is a relabeling by a transposition fixing all
/// decided edges, and the canonical dedupe at the end removes what symmetry
/// still duplicates.
fn extend_until(
    state: &mut PartialGraph,
    v: usize,
    stop_at: usize,
    sink: &mut dyn FnMut(&PartialGraph),
) {
    if v == stop_at {
        sink(state);
        return;
    }
    let need = state.k - state.deg[v] as usize;
    if need == 0 {
        extend_until(state, v + 1, stop_at, sink);
        return;
    }
    let prefix_mask: u64 = (1 << v) - 1;
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut capacity = 0usize;
    for u in (v + 1)..state.n {
        if (state.deg[u] as usize) < state.k {
            classes.entry(state.rows[u] & prefix_mask).or_default().push(u);
            capacity += 1;
        }
    }
    if capacity < need {
        return;
    }
    let classes: Vec<Vec<usize>> = classes.into_values().collect();
    choose(state, v, &classes, 0, need, stop_at, sink);
}

fn choose(
    state: &mut PartialGraph,
    v: usize,
    classes: &[Vec<usize>],
    ci: usize,
    need: usize,
    stop_at: usize,
    sink: &mut dyn FnMut(&PartialGraph),
) {
    if need == 0 {
        extend_until(state, v + 1, stop_at, sink);
        return;
    }
    if ci == classes.len() {
        return;
    }
    let rest: usize = classes[ci + 1..].iter().map(|c| c.len()).sum();
    let class = &classes[ci];
    let max_take = class.len().min(need);
    let min_take = need.saturating_sub(rest);
    for take in min_take..=max_take {
        for &u in &class[..take] {
            state.add(v, u);
        }
        choose(state, v, classes, ci + 1, need - take, stop_at, sink);
        for &u in &class[..take] {
            state.remove(v, u);
        }
    }
}

fn passes(g: &Graph, filters: &EnumerateFilters) -> bool {
    if filters.connected && !g.is_connected() {
        return false;
    }
    if let Some(want) = filters.girth {
        if g.girth() != Some(want) {
            return false;
        }
    }
    if let Some(want) = filters.diameter {
        match g.diameter() {
            Ok(d) if d == want => {}
            _ => return false,
        }
    }
    true
}

/// All k-regular graphs on n vertices up to isomorphism, filtered, in
/// canonical-key order. `jobs > 1` distributes disjoint top-level branch
/// prefixes over a worker pool; the output is identical for any job count.
pub fn enumerate_regular(
    n: usize,
    k: usize,
    filters: &EnumerateFilters,
    jobs: usize,
) -> Result<Vec<GraphCatalogEntry>, GraphError> {
    if n > ENUMERATE_MAX_N || k > ENUMERATE_MAX_K {
        return Err(GraphError::EnumerationCap {
            n,
            k,
            max_n: ENUMERATE_MAX_N,
            max_k: ENUMERATE_MAX_K,
        });
    }
    if n * k % 2 != 0 {
        return Err(GraphError::OddDegreeSum { n, k });
    }
    if k >= n && !(k == 0 && n <= 1) {
        return Err(GraphError::BadParameter(format!(
            "no simple {k}-regular graph on {n} vertices"
        )));
    }

    let mut canon: BTreeMap<Vec<u8>, Graph> = BTreeMap::new();
    if jobs <= 1 {
        let mut state = PartialGraph::new(n, k);
        extend_until(&mut state, 0, n, &mut |s| {
            let g = s.to_graph();
            canon.entry(canonical_form(&g)).or_insert(g);
        });
    } else {
        // seeds: everything decided for vertices 0 and 1
        let mut seeds: Vec<PartialGraph> = Vec::new();
        {
            let mut state = PartialGraph::new(n, k);
            let cutoff = 2.min(n);
            extend_until(&mut state, 0, cutoff, &mut |s| seeds.push(s.clone()));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        let parts: Vec<Vec<(Vec<u8>, Graph)>> = pool.install(|| {
            seeds
                .par_iter()
                .map(|seed| {
                    let mut local = Vec::new();
                    let mut state = seed.clone();
                    extend_until(&mut state, 2.min(n), n, &mut |s| {
                        let g = s.to_graph();
                        local.push((canonical_form(&g), g));
                    });
                    local
                })
                .collect()
        });
        for part in parts {
            for (key, g) in part {
                canon.entry(key).or_insert(g);
            }
        }
    }

    Ok(canon
        .into_iter()
        .filter(|(_, g)| passes(g, filters))
        .enumerate()
        .map(|(i, (key, g))| GraphCatalogEntry {
            graph: g,
            source_line: i + 1,
            canonical_key: key,
        })
        .collect())
}
