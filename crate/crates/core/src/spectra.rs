//! Dense symmetric eigenvalue machinery for the toolkit's small matrices:
//! tridiagonal LP-bound matrices `T(k,t,c)`, partition quotient matrices, and
//! graph adjacency matrices.
//!
//! The eigensolver is cyclic Jacobi: the matrices here are at most a few
//! hundred rows, and Jacobi is simple, robust and deterministic.

use crate::poly::{eval_f_f64, eval_g_f64, ExactPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Spectrum values closer than this are merged into one eigenvalue group.
pub const DEFAULT_GROUP_TOL: f64 = 1e-6;

/// Relative symmetry slack accepted by [`sym_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Hard cap for [`char_poly`] (exact arithmetic cost grows fast).
pub const CHAR_POLY_MAX_N: usize = 16;

const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Error, PartialEq)]
pub enum SpectraError {
    #[error("matrix must be square and nonempty")]
    NotSquare,
    #[error("matrix is not symmetric (max deviation {max_dev:e})")]
    NotSymmetric { max_dev: f64 },
    #[error("Jacobi sweep limit ({0}) reached before convergence")]
    NoConvergence(usize),
    #[error("block sizes do not match the quotient order")]
    BlockSizeMismatch,
    #[error("block sizes must be positive")]
    EmptyBlock,
    #[error("exact rational entries required for this operation")]
    ExactEntriesRequired,
    #[error("matrix order {n} exceeds the cap {cap}")]
    OrderCapExceeded { n: usize, cap: usize },
    #[error("valency must be at least 2, got {0}")]
    ValencyTooSmall(u32),
    #[error("tridiagonal order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("c must be positive (c = 0 disconnects the quotient), got {0}")]
    NonPositiveC(f64),
}

/// Square matrix of reals, optionally carrying exact rational entries.
///
/// Quotient matrices built from exact block data keep their rationals so
/// [`char_poly`] can certify algebraic eigenvalues exactly.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
    exact: Option<Vec<BigRational>>,
}

impl DenseMatrix {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, SpectraError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(SpectraError::NotSquare);
        }
        Ok(DenseMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
            exact: None,
        })
    }

    pub fn from_rational_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, SpectraError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(SpectraError::NotSquare);
        }
        let exact: Vec<BigRational> = rows.into_iter().flatten().collect();
        let data = exact.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
        Ok(DenseMatrix {
            n,
            data,
            exact: Some(exact),
        })
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![0.0; n * n];
        let mut exact = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = 1.0;
            exact[i * n + i] = BigRational::one();
        }
        DenseMatrix {
            n,
            data,
            exact: Some(exact),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn exact(&self, i: usize, j: usize) -> Option<&BigRational> {
        self.exact.as_ref().map(|e| &e[i * self.n + j])
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.data[i * self.n..(i + 1) * self.n].iter().sum())
            .collect()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut dev = 0.0f64;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                dev = dev.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        dev
    }

    fn frobenius(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

/// Eigenvalues grouped into `(value, multiplicity)` pairs, strictly
/// descending; multiplicities sum to the matrix order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pairs: Vec<(f64, usize)>,
    group_tol: f64,
}

impl Spectrum {
    fn from_sorted_desc(values: &[f64], group_tol: f64) -> Self {
        let mut pairs: Vec<(f64, usize)> = Vec::new();
        let mut sums: Vec<f64> = Vec::new();
        for &v in values {
            match pairs.last_mut() {
                Some((rep, mult)) if (*rep - v).abs() <= group_tol => {
                    *mult += 1;
                    let s = sums.last_mut().unwrap();
                    *s += v;
                    // representative = running mean of the group
                    *rep = *s / *mult as f64;
                }
                _ => {
                    pairs.push((v, 1));
                    sums.push(v);
                }
            }
        }
        Spectrum { pairs, group_tol }
    }

    pub fn pairs(&self) -> &[(f64, usize)] {
        &self.pairs
    }

    pub fn group_tol(&self) -> f64 {
        self.group_tol
    }

    /// Total multiplicity (the matrix order).
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    pub fn lambda1(&self) -> f64 {
        self.pairs[0].0
    }

    /// Second-largest eigenvalue counted with multiplicity.
    pub fn lambda2(&self) -> Option<f64> {
        if self.pairs[0].1 >= 2 {
            Some(self.pairs[0].0)
        } else {
            self.pairs.get(1).map(|p| p.0)
        }
    }

    pub fn lambda_min(&self) -> f64 {
        self.pairs.last().unwrap().0
    }

    /// Sum of `value^p * multiplicity` (power sums back trace identities).
    pub fn power_sum(&self, p: u32) -> f64 {
        self.pairs
            .iter()
            .map(|(v, m)| v.powi(p as i32) * *m as f64)
            .sum()
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, (v, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.6}^{}", v, m)?;
        }
        write!(f, "}}")
    }
}

/// The `t x t` tridiagonal matrix with constant row sum `k`: lower diagonal
/// `(1,…,1,c)`, upper diagonal `(k, k-1, …, k-1)`, main diagonal zero except
/// the bottom-right entry `k - c`.
pub fn tridiag(k: u32, t: usize, c: f64) -> Result<DenseMatrix, SpectraError> {
    if k < 2 {
        return Err(SpectraError::ValencyTooSmall(k));
    }
    if t < 2 {
        return Err(SpectraError::OrderTooSmall(t));
    }
    if !(c > 0.0) {
        return Err(SpectraError::NonPositiveC(c));
    }
    let mut rows = vec![vec![0.0; t]; t];
    for i in 0..t - 1 {
        rows[i][i + 1] = if i == 0 { k as f64 } else { (k - 1) as f64 };
        rows[i + 1][i] = 1.0;
    }
    rows[t - 1][t - 2] = c;
    rows[t - 1][t - 1] = k as f64 - c;
    DenseMatrix::from_rows(rows)
}

/// [`tridiag`] with an exact rational `c`, keeping exact entries.
pub fn tridiag_rational(k: u32, t: usize, c: &BigRational) -> Result<DenseMatrix, SpectraError> {
    if k < 2 {
        return Err(SpectraError::ValencyTooSmall(k));
    }
    if t < 2 {
        return Err(SpectraError::OrderTooSmall(t));
    }
    if !c.is_positive() {
        return Err(SpectraError::NonPositiveC(c.to_f64().unwrap_or(0.0)));
    }
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut rows = vec![vec![BigRational::zero(); t]; t];
    for i in 0..t - 1 {
        rows[i][i + 1] = if i == 0 { int(k as i64) } else { int(k as i64 - 1) };
        rows[i + 1][i] = BigRational::one();
    }
    rows[t - 1][t - 2] = c.clone();
    rows[t - 1][t - 1] = int(k as i64) - c;
    DenseMatrix::from_rational_rows(rows)
}

/// Second-largest eigenvalue of `T(k,t,c)`, computed as the largest real root
/// of `c·G_{t-2}(x) + F_{t-1}(x)` (the non-`k` eigenvalues of `T` are exactly
/// that polynomial's roots).
pub fn lambda2_tridiag(k: u32, t: usize, c: f64) -> Result<f64, SpectraError> {
    if k < 2 {
        return Err(SpectraError::ValencyTooSmall(k));
    }
    if t < 2 {
        return Err(SpectraError::OrderTooSmall(t));
    }
    if !(c > 0.0) {
        return Err(SpectraError::NonPositiveC(c));
    }
    let phi = |x: f64| c * eval_g_f64(k, t - 2, x) + eval_f_f64(k, t - 1, x);
    // All roots lie in [-k-|c|, 2sqrt(k-1)]; phi > 0 above its largest root.
    let hi = 2.0 * ((k - 1) as f64).sqrt() + 1e-9;
    let lo = -(k as f64) - c.abs() - 1.0;
    let steps = 4096;
    let h = (hi - lo) / steps as f64;
    let mut upper = hi;
    let mut found = None;
    for s in 1..=steps {
        let x = hi - s as f64 * h;
        if phi(x) <= 0.0 {
            found = Some(x);
            break;
        }
        upper = x;
    }
    let mut lo_b = match found {
        Some(x) => x,
        None => return Err(SpectraError::NoConvergence(steps)),
    };
    let mut hi_b = upper;
    for _ in 0..200 {
        let mid = 0.5 * (lo_b + hi_b);
        if phi(mid) <= 0.0 {
            lo_b = mid;
        } else {
            hi_b = mid;
        }
        if hi_b - lo_b < 1e-14 * hi_b.abs().max(1.0) {
            break;
        }
    }
    Ok(0.5 * (lo_b + hi_b))
}

/// Full spectrum of a symmetric matrix via cyclic Jacobi rotations, grouped
/// with the default tolerance.
pub fn sym_eigen(m: &DenseMatrix) -> Result<Spectrum, SpectraError> {
    sym_eigen_grouped(m, DEFAULT_GROUP_TOL)
}

pub fn sym_eigen_grouped(m: &DenseMatrix, group_tol: f64) -> Result<Spectrum, SpectraError> {
    let scale = m.data.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0);
    let dev = m.max_asymmetry();
    if dev > SYMMETRY_TOL * scale {
        return Err(SpectraError::NotSymmetric { max_dev: dev });
    }
    let values = jacobi_eigenvalues(m)?;
    Ok(Spectrum::from_sorted_desc(&values, group_tol))
}

fn jacobi_eigenvalues(m: &DenseMatrix) -> Result<Vec<f64>, SpectraError> {
    let n = m.n;
    let mut a = m.data.clone();
    // symmetrize fp noise so sweeps operate on an exactly symmetric copy
    for i in 0..n {
        for j in (i + 1)..n {
            let v = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = v;
            a[j * n + i] = v;
        }
    }
    let total = m.frobenius().max(f64::MIN_POSITIVE);
    let target = SYMMETRY_TOL * total;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        if off.sqrt() <= target {
            let mut vals: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
            return Ok(vals);
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for i in 0..n {
                    let api = a[p * n + i];
                    let aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
        }
    }
    Err(SpectraError::NoConvergence(JACOBI_MAX_SWEEPS))
}

/// Spectrum of a row-averaged quotient matrix.
///
/// A quotient `Q` of a symmetric matrix over blocks of sizes `s_i` satisfies
/// `s_i q_ij = s_j q_ji`, so `D^{1/2} Q D^{-1/2}` with `D = diag(s)` is
/// symmetric and shares `Q`'s (real) spectrum.
pub fn quotient_eigen(q: &DenseMatrix, block_sizes: &[usize]) -> Result<Spectrum, SpectraError> {
    if block_sizes.len() != q.n {
        return Err(SpectraError::BlockSizeMismatch);
    }
    if block_sizes.iter().any(|&s| s == 0) {
        return Err(SpectraError::EmptyBlock);
    }
    let n = q.n;
    let root: Vec<f64> = block_sizes.iter().map(|&s| (s as f64).sqrt()).collect();
    let mut rows = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            rows[i][j] = q.get(i, j) * root[i] / root[j];
        }
    }
    let b = DenseMatrix::from_rows(rows)?;
    let scale = b.data.iter().fold(0.0f64, |a, v| a.max(v.abs())).max(1.0);
    let dev = b.max_asymmetry();
    if dev > 1e-9 * scale {
        // block data inconsistent with any symmetric host matrix
        return Err(SpectraError::NotSymmetric { max_dev: dev });
    }
    sym_eigen_grouped(&b, DEFAULT_GROUP_TOL)
}

/// Exact characteristic polynomial (monic, in `x`) via the Faddeev–LeVerrier
/// recurrence over rationals. Requires exact entries and `n <= 16`.
pub fn char_poly(m: &DenseMatrix) -> Result<ExactPolynomial, SpectraError> {
    let exact = m.exact.as_ref().ok_or(SpectraError::ExactEntriesRequired)?;
    let n = m.n;
    if n > CHAR_POLY_MAX_N {
        return Err(SpectraError::OrderCapExceeded {
            n,
            cap: CHAR_POLY_MAX_N,
        });
    }
    let idx = |i: usize, j: usize| i * n + j;
    let trace = |mat: &[BigRational]| -> BigRational {
        (0..n).map(|i| mat[idx(i, i)].clone()).sum()
    };
    let mat_mul = |x: &[BigRational], y: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let a = &x[idx(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &out[idx(i, j)] + a * &y[idx(l, j)];
                    out[idx(i, j)] = v;
                }
            }
        }
        out
    };

    // coeffs[n] = 1; M_1 = A, c_1 = -tr(A); M_{k+1} = A (M_k + c_k I)
    let a = exact.clone();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = a.clone();
    for step in 1..=n {
        let ck = -trace(&mk) / BigRational::from_integer(BigInt::from(step));
        coeffs[n - step] = ck.clone();
        if step == n {
            break;
        }
        let mut shifted = mk;
        for i in 0..n {
            let v = &shifted[idx(i, i)] + &ck;
            shifted[idx(i, i)] = v;
        }
        mk = mat_mul(&a, &shifted);
    }
    Ok(ExactPolynomial::from_coeffs(coeffs))
}
