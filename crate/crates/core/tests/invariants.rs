//! Randomized cross-module invariants: Perron/row-sum behaviour of the
//! tridiagonal family, polynomial-vs-eigensolver agreement, complement
//! spectral identities on random regular graphs, Sturm count consistency,
//! and codec round trips.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectral_moore::graphs::{parse_graph6, write_graph6};
use spectral_moore::interlace::{find_witness_partition, quotient, WitnessPattern};
use spectral_moore::poly::{to_f_basis, ExactPolynomial};
use spectral_moore::spectra::{lambda2_tridiag, quotient_eigen, sym_eigen, DenseMatrix};
use spectral_moore::Graph;

/// Diagonal similarity transform of T(k,t,c) with the same eigenvalues
/// (off-diagonal products are positive for c > 0).
fn symmetrized_tridiag(k: u32, t: usize, c: f64) -> DenseMatrix {
    let mut rows = vec![vec![0.0; t]; t];
    for i in 0..t - 1 {
        let upper = if i == 0 { k as f64 } else { (k - 1) as f64 };
        let lower = if i == t - 2 { c } else { 1.0 };
        let v = (upper * lower).sqrt();
        rows[i][i + 1] = v;
        rows[i + 1][i] = v;
    }
    rows[t - 1][t - 1] = k as f64 - c;
    DenseMatrix::from_rows(rows).unwrap()
}

#[test]
fn perron_row_sum_and_polynomial_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        let k = rng.random_range(3u32..=9);
        let t = rng.random_range(2usize..=7);
        let c = rng.random_range(0.05..=k as f64);
        let spec = sym_eigen(&symmetrized_tridiag(k, t, c)).unwrap();
        // constant row sum k is the Perron eigenvalue
        assert!(
            (spec.lambda1() - k as f64).abs() < 1e-9,
            "k={k} t={t} c={c}: lambda1 = {}",
            spec.lambda1()
        );
        // the polynomial route to lambda2 matches the dense solve
        let dense = spec.lambda2().unwrap();
        let viapoly = lambda2_tridiag(k, t, c).unwrap();
        assert!(
            (dense - viapoly).abs() < 1e-9,
            "k={k} t={t} c={c}: {dense} vs {viapoly}"
        );
    }
}

/// Random k-regular graph via the pairing model with rejection.
fn random_regular(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Graph {
    'outer: loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(k)).collect();
        stubs.shuffle(rng);
        let mut g = Graph::new(n);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'outer;
            }
            g.add_edge(u, v);
        }
        return g;
    }
}

#[test]
fn complement_spectral_identity_on_random_regular_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut done = 0;
    while done < 50 {
        let n = *[8usize, 10, 12, 14].choose(&mut rng).unwrap();
        let k = rng.random_range(3usize..=5);
        if n * k % 2 != 0 || k >= n {
            continue;
        }
        let g = random_regular(&mut rng, n, k);
        let l2 = g.second_eigenvalue().unwrap();
        let lmin_comp = g.complement().lambda_min().unwrap();
        assert!(
            (l2 - (-1.0 - lmin_comp)).abs() < 1e-8,
            "n={n} k={k}: lambda2 = {l2}, -1-lambda_min(comp) = {}",
            -1.0 - lmin_comp
        );
        done += 1;
    }
}

#[test]
fn witness_quotients_always_symmetrize() {
    // quotient matrices produced from real partitions are consistent with a
    // symmetric host matrix, so quotient_eigen must never reject them
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 25 {
        let n = rng.random_range(8usize..=12);
        let k = rng.random_range(3usize..=4);
        if n * k % 2 != 0 {
            continue;
        }
        let g = random_regular(&mut rng, n, k);
        let girth = match g.girth() {
            Some(girth) => girth as usize,
            None => continue,
        };
        if let Some(w) = find_witness_partition(&g, girth, WitnessPattern::GammaLayers) {
            let q = quotient(&g, &w.partition).unwrap();
            let spec = quotient_eigen(&q, &w.partition.block_sizes()).unwrap();
            assert_eq!(spec.order(), w.partition.block_sizes().len());
            // row sums give back the valency
            assert!((spec.lambda1() - k as f64).abs() < 1e-9);
            done += 1;
        }
    }
}

#[test]
fn sturm_count_matches_root_listing() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..50 {
        let deg = rng.random_range(1usize..=8);
        let coeffs: Vec<i64> = (0..=deg).map(|_| rng.random_range(-9i64..=9)).collect();
        let p = ExactPolynomial::from_integers(&coeffs);
        if p.is_zero() {
            continue;
        }
        let count = p.count_real_roots().unwrap();
        let roots = p.real_roots(1e-10).unwrap();
        assert_eq!(roots.len(), count, "{p}");
        // listed ascending
        for w in roots.windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// graph6 encode/decode is the identity on arbitrary graphs.
    #[test]
    fn graph6_round_trip(n in 1usize..40, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.3) {
                    g.add_edge(u, v);
                }
            }
        }
        let line = write_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(back, g);
    }

    /// F-basis conversion round-trips arbitrary small integer polynomials.
    #[test]
    fn f_basis_round_trip(k in 2u32..=9, coeffs in prop::collection::vec(-20i64..=20, 1..=13)) {
        let p = ExactPolynomial::from_integers(&coeffs);
        prop_assume!(!p.is_zero());
        let e = to_f_basis(&p, k).unwrap();
        prop_assert_eq!(e.to_polynomial(), p);
    }

    /// Root refinement respects the requested tolerance on shifted squares
    /// (known double roots reported once).
    #[test]
    fn double_roots_reported_once(a in -6i64..=6) {
        let lin = ExactPolynomial::from_integers(&[-a, 1]);
        let p = &lin * &lin;
        let roots = p.real_roots(1e-12).unwrap();
        prop_assert_eq!(roots.len(), 1);
        prop_assert!((roots[0] - a as f64).abs() < 1e-11);
        let with_mult = p.real_roots_with_multiplicity(1e-12).unwrap();
        prop_assert_eq!(with_mult[0].1, 2);
    }
}

#[test]
fn odd_graph_polygon_roots_match_kneser_spectrum() {
    // the feasible (4,3,2) array's polynomial roots are exactly the distinct
    // non-trivial adjacency eigenvalues of the Kneser graph K(7,3)
    let a = spectral_moore::feasibility::IntersectionArray::new(
        4,
        3,
        BigRational::from_integer(BigInt::from(2)),
    )
    .unwrap();
    let verdict = spectral_moore::feasibility::integer_eigenvalue_check(&a);
    assert!(verdict.feasible);
    let poly_roots: Vec<f64> = verdict
        .eigenvalues
        .unwrap()
        .iter()
        .map(|e| e.to_string().parse::<f64>().unwrap())
        .collect();
    let g = spectral_moore::graphs::kneser(7, 3).unwrap();
    let spec = g.spectrum().unwrap();
    assert!((spec.lambda1() - 4.0).abs() < 1e-9, "trivial eigenvalue");
    let mut graph_distinct: Vec<f64> = spec.pairs().iter().skip(1).map(|p| p.0).collect();
    graph_distinct.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(poly_roots.len(), graph_distinct.len());
    for (p, s) in poly_roots.iter().zip(&graph_distinct) {
        assert!((p - s).abs() < 1e-8, "{p} vs {s}");
    }
}

#[test]
fn quotient_entries_stay_rational_on_exact_inputs() {
    // a 1-block-per-vertex partition reproduces the adjacency matrix exactly
    let g = spectral_moore::graphs::cycle(6).unwrap();
    let p = spectral_moore::interlace::Partition::new(6, (0..6).map(|v| vec![v]).collect()).unwrap();
    let q = quotient(&g, &p).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            let want = BigRational::from_integer(BigInt::from(i64::from(g.has_edge(i, j))));
            assert_eq!(q.exact(i, j).unwrap(), &want);
        }
    }
}
