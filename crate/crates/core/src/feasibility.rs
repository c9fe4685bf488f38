//! Feasibility of Moore-polygon intersection arrays
//! `{k, k-1, …, k-1; 1, …, 1, c}`.
//!
//! A graph attaining the LP bound `M(k,t,c)` must be distance-regular with
//! such an array, its non-trivial eigenvalues are the roots of
//! `c·G_{d-1} + F_d`, and those eigenvalues are rational — hence, by the
//! rational root theorem on a monic integer polynomial, integers. The checks
//! here decide integrality exactly and scan the two parametric families with
//! `c = k - √k` (diameter 3) and `c = k - √(2k-1)` (diameter 4).

use crate::poly::{f_poly, g_poly, ExactPolynomial};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FeasibilityError {
    #[error("valency must be at least {min}, got {got}")]
    ValencyTooSmall { min: u32, got: u32 },
    #[error("diameter must be at least 1, got {0}")]
    DiameterTooSmall(usize),
    #[error("c must satisfy 0 < c <= k, got {0}")]
    COutOfRange(BigRational),
    #[error("scan bound must be at least 3, got {0}")]
    ScanBoundTooSmall(u32),
}

/// Candidate Moore-polygon parameters `{k, k-1, …, k-1; 1, …, 1, c_d}` with
/// diameter `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct IntersectionArray {
    k: u32,
    d: usize,
    c_d: BigRational,
}

impl IntersectionArray {
    pub fn new(k: u32, d: usize, c_d: BigRational) -> Result<Self, FeasibilityError> {
        if k < 2 {
            return Err(FeasibilityError::ValencyTooSmall { min: 2, got: k });
        }
        if d < 1 {
            return Err(FeasibilityError::DiameterTooSmall(d));
        }
        if !c_d.is_positive() || c_d > BigRational::from_integer(BigInt::from(k)) {
            return Err(FeasibilityError::COutOfRange(c_d));
        }
        Ok(IntersectionArray { k, d, c_d })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn c_d(&self) -> &BigRational {
        &self.c_d
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}", self.k)?;
        for _ in 1..self.d {
            write!(f, ",{}", self.k - 1)?;
        }
        write!(f, ";")?;
        for _ in 1..self.d {
            write!(f, "1,")?;
        }
        write!(f, "{}}}", self.c_d)
    }
}

/// Why an array was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InfeasibilityReason {
    /// The array itself contains a non-integer intersection number.
    NonIntegerArray,
    /// The eigenvalue polynomial is not integral after monic normalization.
    NonIntegerCoefficients,
    /// The quadratic factor's discriminant is not a perfect square.
    DiscriminantNotSquare,
    /// The eigenvalue polynomial does not factor completely over the integers.
    NonIntegerEigenvalues,
}

impl fmt::Display for InfeasibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InfeasibilityReason::NonIntegerArray => "non-integer-array",
            InfeasibilityReason::NonIntegerCoefficients => "non-integer-coefficients",
            InfeasibilityReason::DiscriminantNotSquare => "discriminant-not-square",
            InfeasibilityReason::NonIntegerEigenvalues => "non-integer-eigenvalues",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub reasons: Vec<InfeasibilityReason>,
    /// Non-trivial eigenvalues (the trivial one is `k`), present when feasible.
    pub eigenvalues: Option<Vec<BigInt>>,
}

impl FeasibilityVerdict {
    fn feasible(eigenvalues: Vec<BigInt>) -> Self {
        FeasibilityVerdict {
            feasible: true,
            reasons: Vec::new(),
            eigenvalues: Some(eigenvalues),
        }
    }

    fn infeasible(reason: InfeasibilityReason) -> Self {
        FeasibilityVerdict {
            feasible: false,
            reasons: vec![reason],
            eigenvalues: None,
        }
    }
}

/// `c_d·G_{d-1} + F_d`: its roots are exactly the non-trivial eigenvalues of
/// a graph with the given intersection array.
pub fn polygon_eigen_poly(a: &IntersectionArray) -> ExactPolynomial {
    let g = g_poly(a.k, a.d - 1).expect("valency validated on construction");
    let f = f_poly(a.k, a.d).expect("valency validated on construction");
    &g.scale(&a.c_d) + &f
}

/// Floor square root on `BigInt`, `None` for negatives.
fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let u: BigUint = n.magnitude().clone();
    Some(BigInt::from(u.sqrt()))
}

/// `Some(root)` when `n` is a perfect square.
fn perfect_square_root(n: &BigInt) -> Option<BigInt> {
    let r = exact_sqrt(n)?;
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// All positive divisors of `n != 0`, ascending, by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Divides integer coefficients by `(x - r)` in place; `true` when `r` is a
/// root (remainder zero).
fn synthetic_divide(coeffs: &mut Vec<BigInt>, r: &BigInt) -> bool {
    // coeffs low-to-high; Horner from the top
    let mut acc = BigInt::zero();
    let mut quotient = vec![BigInt::zero(); coeffs.len() - 1];
    for i in (0..coeffs.len()).rev() {
        acc = &acc * r + &coeffs[i];
        if i > 0 {
            quotient[i - 1] = acc.clone();
        }
    }
    if acc.is_zero() {
        *coeffs = quotient;
        true
    } else {
        false
    }
}

/// Peels every integer root (with multiplicity) off a monic integer
/// polynomial; returns the roots and the degree left unfactored.
fn integer_root_factorization(coeffs: &[BigInt]) -> (Vec<BigInt>, usize) {
    let mut c = coeffs.to_vec();
    let mut roots = Vec::new();
    // roots at zero first
    while c.len() > 1 && c[0].is_zero() {
        roots.push(BigInt::zero());
        c.remove(0);
    }
    'outer: while c.len() > 1 {
        for div in positive_divisors(&c[0]) {
            for cand in [div.clone(), -div] {
                if synthetic_divide(&mut c, &cand) {
                    roots.push(cand);
                    continue 'outer;
                }
            }
        }
        break;
    }
    roots.sort();
    (roots, c.len() - 1)
}

/// Integer-eigenvalue test: monic-integer normalization of the polygon
/// polynomial, then exhaustive trial division of the constant term's
/// divisors with exact synthetic division. Feasible iff the polynomial
/// factors completely over the integers.
pub fn integer_eigenvalue_check(a: &IntersectionArray) -> FeasibilityVerdict {
    if !a.c_d.is_integer() {
        // a monic polynomial with a non-integer coefficient cannot have all
        // integer roots; the array is not a valid DRG array either
        return FeasibilityVerdict::infeasible(InfeasibilityReason::NonIntegerCoefficients);
    }
    let poly = polygon_eigen_poly(a);
    let coeffs = poly
        .integer_coeffs()
        .expect("integer c_d yields integer coefficients");
    let (roots, left) = integer_root_factorization(&coeffs);
    if left == 0 {
        FeasibilityVerdict::feasible(roots)
    } else {
        FeasibilityVerdict::infeasible(InfeasibilityReason::NonIntegerEigenvalues)
    }
}

/// Family 1: `{k, k-1, k-1; 1, 1, k-√k}`.
///
/// Requires `k` to be a perfect square (else the array is not integral);
/// writing `s = √k`, the non-trivial eigenvalues are `s` and the roots of
/// `x² + s²x + s³ - s² - s + 1`, whose discriminant
/// `D = s⁴ - 4s³ + 4s² + 4s - 4` must be a perfect square of the same parity
/// as `s²`. The only feasible valency is `k = 4` (the Odd graph O_4).
pub fn family1_check(k: u32) -> Result<FeasibilityVerdict, FeasibilityError> {
    if k < 3 {
        return Err(FeasibilityError::ValencyTooSmall { min: 3, got: k });
    }
    let s = match perfect_square_root(&BigInt::from(k)) {
        Some(s) => s,
        None => {
            return Ok(FeasibilityVerdict::infeasible(
                InfeasibilityReason::NonIntegerArray,
            ))
        }
    };
    let d = s.pow(4) - 4 * s.pow(3) + 4 * s.pow(2) + 4 * &s - 4;
    let t = match perfect_square_root(&d) {
        Some(t) => t,
        None => {
            return Ok(FeasibilityVerdict::infeasible(
                InfeasibilityReason::DiscriminantNotSquare,
            ))
        }
    };
    // quadratic roots (-s^2 ± t) / 2 must be integers
    let s2 = &s * &s;
    if (&s2 + &t) % 2 != BigInt::zero() {
        return Ok(FeasibilityVerdict::infeasible(
            InfeasibilityReason::NonIntegerEigenvalues,
        ));
    }
    let r1 = (-&s2 + &t) / 2;
    let r2 = (-&s2 - &t) / 2;
    let mut eig = vec![s, r1, r2];
    eig.sort();
    Ok(FeasibilityVerdict::feasible(eig))
}

/// Family 2: `{k, k-1, k-1, k-1; 1, 1, 1, k-√(2k-1)}`.
///
/// Requires `2k-1` to be a perfect square; writing `s = √(2k-1)`, the cubic
/// factor `x³ + kx² + (k-1)(s-2)x - (k-1)` must split over the integers.
/// No valency passes (a Vieta argument on the cubic rules every k out);
/// the check verifies that computationally rather than assuming it.
pub fn family2_check(k: u32) -> Result<FeasibilityVerdict, FeasibilityError> {
    if k < 3 {
        return Err(FeasibilityError::ValencyTooSmall { min: 3, got: k });
    }
    let s = match perfect_square_root(&BigInt::from(2 * k as u64 - 1)) {
        Some(s) => s,
        None => {
            return Ok(FeasibilityVerdict::infeasible(
                InfeasibilityReason::NonIntegerArray,
            ))
        }
    };
    let kb = BigInt::from(k);
    let km1: BigInt = &kb - 1;
    let cubic = [
        -km1.clone(),
        &km1 * (&s - 2),
        kb.clone(),
        BigInt::one(),
    ];
    let (mut roots, left) = integer_root_factorization(&cubic);
    if left > 0 {
        return Ok(FeasibilityVerdict::infeasible(
            InfeasibilityReason::NonIntegerEigenvalues,
        ));
    }
    roots.push(s);
    roots.sort();
    Ok(FeasibilityVerdict::feasible(roots))
}

/// Report of an exhaustive run of both family checks over `3 ..= k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub k_max: u32,
    /// Valencies where family 1 is feasible (expected: exactly {4}).
    pub family1_hits: Vec<u32>,
    /// Valencies where family 2 is feasible (expected: empty).
    pub family2_hits: Vec<u32>,
    /// How many k had an integral family-1 array (perfect squares).
    pub family1_candidates: u64,
    /// How many k had an integral family-2 array (2k-1 square).
    pub family2_candidates: u64,
}

fn is_square_u64(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    for c in r.saturating_sub(1)..=r + 1 {
        if c * c == n {
            return true;
        }
    }
    false
}

/// Runs both family checks for every `3 <= k <= k_max` (chunked in parallel
/// when `jobs > 1`; the merged output is deterministic either way).
pub fn scan_families(k_max: u32, jobs: usize) -> Result<ScanReport, FeasibilityError> {
    if k_max < 3 {
        return Err(FeasibilityError::ScanBoundTooSmall(k_max));
    }
    let scan_range = |lo: u32, hi: u32| -> (Vec<u32>, Vec<u32>, u64, u64) {
        let mut h1 = Vec::new();
        let mut h2 = Vec::new();
        let mut c1 = 0u64;
        let mut c2 = 0u64;
        for k in lo..=hi {
            // non-square k short-circuits to the NonIntegerArray verdict
            if is_square_u64(k as u64) {
                c1 += 1;
                if family1_check(k).expect("k >= 3").feasible {
                    h1.push(k);
                }
            }
            if is_square_u64(2 * k as u64 - 1) {
                c2 += 1;
                if family2_check(k).expect("k >= 3").feasible {
                    h2.push(k);
                }
            }
        }
        (h1, h2, c1, c2)
    };

    if jobs <= 1 {
        let (h1, h2, c1, c2) = scan_range(3, k_max);
        return Ok(ScanReport {
            k_max,
            family1_hits: h1,
            family2_hits: h2,
            family1_candidates: c1,
            family2_candidates: c2,
        });
    }

    let chunk = ((k_max as u64 - 2) / (4 * jobs as u64).max(1)).max(1) as u32;
    let mut ranges = Vec::new();
    let mut lo = 3u32;
    while lo <= k_max {
        let hi = lo.saturating_add(chunk - 1).min(k_max);
        ranges.push((lo, hi));
        lo = hi + 1;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let parts: Vec<_> = pool.install(|| {
        ranges
            .par_iter()
            .map(|&(lo, hi)| scan_range(lo, hi))
            .collect()
    });
    let mut report = ScanReport {
        k_max,
        family1_hits: Vec::new(),
        family2_hits: Vec::new(),
        family1_candidates: 0,
        family2_candidates: 0,
    };
    for (h1, h2, c1, c2) in parts {
        report.family1_hits.extend(h1);
        report.family2_hits.extend(h2);
        report.family1_candidates += c1;
        report.family2_candidates += c2;
    }
    Ok(report)
}

/// The out-of-range `c` that would put the second eigenvalue of the
/// diameter-5 LP matrix `T(k,6,c)` at `√(2k-1)`:
/// `c = (k-1)²√(2k-1) / (-k² + 3k - 1 + √(2k-1))`.
///
/// For `k ≥ 4` this is negative; for `k = 3` it equals `5 + √5 > k`. Either
/// way it violates `0 < c ≤ k`, which together with the diameter-4 theorem
/// and the nonexistence of Moore polygons of diameter 6 or more rules out
/// Moore polygons with second eigenvalue `√(2k-1)` entirely.
pub fn t6_boundary_c(k: u32) -> Result<f64, FeasibilityError> {
    if k < 3 {
        return Err(FeasibilityError::ValencyTooSmall { min: 3, got: k });
    }
    let kf = k as f64;
    let s = (2.0 * kf - 1.0).sqrt();
    Ok((kf - 1.0) * (kf - 1.0) * s / (-kf * kf + 3.0 * kf - 1.0 + s))
}
