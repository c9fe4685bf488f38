//! Exact univariate polynomials over arbitrary-precision rationals, the
//! orthogonal families driving the spectral bounds, and Sturm-sequence real
//! root isolation.
//!
//! The polynomial family `F_i` is defined by `F_0 = 1`, `F_1 = x`,
//! `F_2 = x^2 - k` and the three-term recurrence
//! `F_i = x F_{i-1} - (k-1) F_{i-2}` for `i >= 3`; the partial sums
//! `G_j = F_0 + ... + F_j` satisfy the same recurrence with seeds
//! `G_0 = 1`, `G_1 = x + 1`, `G_2 = x^2 + x - (k-1)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

/// Default accuracy for root refinement.
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Error, PartialEq)]
pub enum PolyError {
    #[error("valency k must be at least {min}, got {got}")]
    ValencyTooSmall { min: u32, got: u32 },
    #[error("index must be at least {min}, got {got}")]
    IndexTooSmall { min: usize, got: usize },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error("polynomial has no real root")]
    NoRealRoot,
}

/// Dense univariate polynomial with exact rational coefficients.
///
/// `coeffs[i]` holds the coefficient of `x^i`; the top coefficient is nonzero
/// unless the polynomial is zero (empty vector).
#[derive(Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial::constant(BigRational::one())
    }

    pub fn x() -> Self {
        ExactPolynomial::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        ExactPolynomial::from_coeffs(vec![c])
    }

    /// Builds from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        ExactPolynomial::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| c.is_one())
    }

    /// All coefficients integral?
    pub fn is_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficient view, available when every coefficient is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        if !self.is_integer() {
            return None;
        }
        Some(self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn derivative(&self) -> ExactPolynomial {
        if self.coeffs.len() <= 1 {
            return ExactPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
            .collect();
        ExactPolynomial::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &BigRational) -> ExactPolynomial {
        ExactPolynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &ExactPolynomial) -> (ExactPolynomial, ExactPolynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (ExactPolynomial::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![BigRational::zero(); qlen];
        for qi in (0..qlen).rev() {
            let c = &rem[qi + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    let v = &rem[qi + j] - &c * dc;
                    rem[qi + j] = v;
                }
            }
            quot[qi] = c;
        }
        rem.truncate(dd);
        (
            ExactPolynomial::from_coeffs(quot),
            ExactPolynomial::from_coeffs(rem),
        )
    }

    /// Rescales by a positive rational so all coefficients become coprime
    /// integers. Sign-preserving, so Sturm sign patterns are unchanged.
    fn primitive_scaled(&self) -> ExactPolynomial {
        if self.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = num_integer::gcd(content, v.clone());
        }
        ExactPolynomial::from_coeffs(
            ints.into_iter()
                .map(|v| BigRational::from_integer(v / &content))
                .collect(),
        )
    }

    /// Monic gcd via the Euclidean algorithm with primitive rescaling.
    pub fn gcd(&self, other: &ExactPolynomial) -> ExactPolynomial {
        let mut a = self.primitive_scaled();
        let mut b = other.primitive_scaled();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_scaled();
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading().unwrap().clone();
        a.scale(&lead.recip())
    }

    /// `p / gcd(p, p')` — same roots, all simple.
    pub fn squarefree_part(&self) -> ExactPolynomial {
        if self.is_zero() {
            return ExactPolynomial::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Yun squarefree decomposition: pairs `(factor, multiplicity)` with each
    /// factor squarefree, pairwise coprime, and `∏ factor^mult ~ self`.
    pub fn squarefree_decomposition(&self) -> Vec<(ExactPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().map_or(true, |d| d == 0) {
            return out;
        }
        let dp = self.derivative();
        let g = self.gcd(&dp);
        if g.degree() == Some(0) {
            out.push((self.clone(), 1));
            return out;
        }
        let mut c = self.div_rem(&g).0;
        let mut d = &dp.div_rem(&g).0 - &c.derivative();
        let mut mult = 1;
        loop {
            let s = c.gcd(&d);
            if s.degree().map_or(false, |deg| deg >= 1) {
                out.push((s.clone(), mult));
            }
            c = c.div_rem(&s).0;
            if c.degree() == Some(0) {
                break;
            }
            d = &d.div_rem(&s).0 - &c.derivative();
            mult += 1;
        }
        out
    }

    /// Cauchy bound: every real root has absolute value below the result.
    fn root_bound(&self) -> BigRational {
        let lead = self.leading().expect("zero polynomial has no root bound");
        let mut m = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let v = (c / lead).abs();
            if v > m {
                m = v;
            }
        }
        m + BigRational::one()
    }

    /// All distinct real roots, ascending, each within `±tol` of the true value.
    ///
    /// Sturm-sequence isolation over rationals, then rational bisection. No
    /// root is missed or duplicated; multiple roots are reported once.
    pub fn real_roots(&self, tol: f64) -> Result<Vec<f64>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(PolyError::BadTolerance(tol));
        }
        let sf = self.squarefree_part();
        Ok(isolated_roots(&sf, tol))
    }

    /// Distinct real roots with multiplicities from the squarefree
    /// decomposition, ascending.
    pub fn real_roots_with_multiplicity(
        &self,
        tol: f64,
    ) -> Result<Vec<(f64, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !(tol > 0.0) || !tol.is_finite() {
            return Err(PolyError::BadTolerance(tol));
        }
        let mut all: Vec<(f64, usize)> = Vec::new();
        for (factor, mult) in self.squarefree_decomposition() {
            for r in isolated_roots(&factor, tol) {
                all.push((r, mult));
            }
        }
        all.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
        Ok(all)
    }

    /// The largest real root, refined to `±tol`.
    pub fn largest_real_root(&self, tol: f64) -> Result<f64, PolyError> {
        let roots = self.real_roots(tol)?;
        roots.last().copied().ok_or(PolyError::NoRealRoot)
    }

    /// Number of distinct real roots (Sturm count over the whole line).
    pub fn count_real_roots(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let sf = self.squarefree_part();
        if sf.degree() == Some(0) {
            return Ok(0);
        }
        let chain = sturm_chain(&sf);
        Ok(variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain))
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", i)?,
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        ExactPolynomial::from_coeffs(coeffs)
    }
}

impl std::ops::Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

fn sturm_chain(sf: &ExactPolynomial) -> Vec<ExactPolynomial> {
    let mut chain = vec![sf.primitive_scaled(), sf.derivative().primitive_scaled()];
    loop {
        let m = chain.len();
        if chain[m - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[m - 1].degree() == Some(0) {
            break;
        }
        let (_, r) = chain[m - 2].div_rem(&chain[m - 1]);
        if r.is_zero() {
            break;
        }
        chain.push((-&r).primitive_scaled());
    }
    chain
}

fn sign_of(r: &BigRational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut prev = 0i8;
    let mut changes = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

fn variations_at(chain: &[ExactPolynomial], x: &BigRational) -> usize {
    count_changes(chain.iter().map(|p| sign_of(&p.eval(x))))
}

fn variations_at_pos_inf(chain: &[ExactPolynomial]) -> usize {
    count_changes(chain.iter().map(|p| p.leading().map_or(0, sign_of)))
}

fn variations_at_neg_inf(chain: &[ExactPolynomial]) -> usize {
    count_changes(chain.iter().map(|p| {
        let s = p.leading().map_or(0, sign_of);
        if p.degree().map_or(false, |d| d % 2 == 1) {
            -s
        } else {
            s
        }
    }))
}

/// Isolates and refines all real roots of a squarefree polynomial.
fn isolated_roots(sf: &ExactPolynomial, tol: f64) -> Vec<f64> {
    if sf.degree().map_or(true, |d| d == 0) {
        return Vec::new();
    }
    let chain = sturm_chain(sf);
    let bound = sf.root_bound();
    let lo = -bound.clone();
    let total = {
        let va = variations_at(&chain, &lo);
        let vb = variations_at(&chain, &bound);
        va - vb
    };
    if total == 0 {
        return Vec::new();
    }
    // depth-first split of (lo, hi] until each piece holds exactly one root
    let mut isolated: Vec<(BigRational, BigRational)> = Vec::new();
    let mut stack = vec![(lo.clone(), bound.clone(), total)];
    while let Some((a, b, count)) = stack.pop() {
        if count == 0 {
            continue;
        }
        if count == 1 {
            isolated.push((a, b));
            continue;
        }
        let mid = (&a + &b) / rat(2);
        let vm = variations_at(&chain, &mid);
        let left = variations_at(&chain, &a) - vm;
        // push right first so the stack yields ascending intervals
        stack.push((mid.clone(), b, count - left));
        stack.push((a, mid, left));
    }
    isolated.sort_by(|x, y| x.0.cmp(&y.0));
    let tol_rat = BigRational::from_f64(tol).expect("finite tolerance");
    isolated
        .into_iter()
        .map(|(a, b)| refine_root(sf, a, b, &tol_rat))
        .collect()
}

/// Bisects `(a, b]` (containing exactly one simple root) to width `< tol`.
fn refine_root(sf: &ExactPolynomial, mut a: BigRational, mut b: BigRational, tol: &BigRational) -> f64 {
    let fb = sf.eval(&b);
    if fb.is_zero() {
        return b.to_f64().unwrap();
    }
    let sb = sign_of(&fb);
    while &b - &a > *tol {
        let mid = (&a + &b) / rat(2);
        let fm = sf.eval(&mid);
        if fm.is_zero() {
            return mid.to_f64().unwrap();
        }
        if sign_of(&fm) == sb {
            b = mid;
        } else {
            a = mid;
        }
    }
    ((&a + &b) / rat(2)).to_f64().unwrap()
}

/// `F_i^k`, monic of degree `i`.
pub fn f_poly(k: u32, i: usize) -> Result<ExactPolynomial, PolyError> {
    if k < 2 {
        return Err(PolyError::ValencyTooSmall { min: 2, got: k });
    }
    let x = ExactPolynomial::x();
    match i {
        0 => return Ok(ExactPolynomial::one()),
        1 => return Ok(x),
        2 => return Ok(ExactPolynomial::from_integers(&[-(k as i64), 0, 1])),
        _ => {}
    }
    let km1 = ExactPolynomial::constant(rat(k as i64 - 1));
    let mut prev = ExactPolynomial::x();
    let mut cur = ExactPolynomial::from_integers(&[-(k as i64), 0, 1]);
    for _ in 3..=i {
        let next = &(&x * &cur) - &(&km1 * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `G_j^k = F_0 + ... + F_j`, monic of degree `j`.
pub fn g_poly(k: u32, j: usize) -> Result<ExactPolynomial, PolyError> {
    if k < 2 {
        return Err(PolyError::ValencyTooSmall { min: 2, got: k });
    }
    let x = ExactPolynomial::x();
    match j {
        0 => return Ok(ExactPolynomial::one()),
        1 => return Ok(ExactPolynomial::from_integers(&[1, 1])),
        2 => return Ok(ExactPolynomial::from_integers(&[-(k as i64 - 1), 1, 1])),
        _ => {}
    }
    let km1 = ExactPolynomial::constant(rat(k as i64 - 1));
    let mut prev = ExactPolynomial::from_integers(&[1, 1]);
    let mut cur = ExactPolynomial::from_integers(&[-(k as i64 - 1), 1, 1]);
    for _ in 3..=j {
        let next = &(&x * &cur) - &(&km1 * &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `k·G_{d-1} + F_d`; its largest zero is the second eigenvalue of the
/// even-girth Moore graph of valency `k` and girth `2d`.
pub fn kappa_poly(k: u32, d: usize) -> Result<ExactPolynomial, PolyError> {
    if k < 3 {
        return Err(PolyError::ValencyTooSmall { min: 3, got: k });
    }
    if d < 1 {
        return Err(PolyError::IndexTooSmall { min: 1, got: d });
    }
    let kc = ExactPolynomial::constant(rat(k as i64));
    Ok(&(&kc * &g_poly(k, d - 1)?) + &f_poly(k, d)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremeRootKind {
    /// Largest zero `τ_j` of `G_j`.
    Tau,
    /// Largest zero `κ_d` of `k·G_{d-1} + F_d`.
    Kappa,
}

/// `τ_index` or `κ_index` to `1e-12`.
pub fn extreme_root(kind: ExtremeRootKind, k: u32, index: usize) -> Result<f64, PolyError> {
    if index < 1 {
        return Err(PolyError::IndexTooSmall { min: 1, got: index });
    }
    let p = match kind {
        ExtremeRootKind::Tau => g_poly(k, index)?,
        ExtremeRootKind::Kappa => kappa_poly(k, index)?,
    };
    p.largest_real_root(DEFAULT_ROOT_TOL)
}

/// A polynomial written in the `F`-basis: `p = Σ coeffs_f[i] · F_i^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct FBasisExpansion {
    pub k: u32,
    pub coeffs_f: Vec<BigRational>,
}

impl FBasisExpansion {
    pub fn f0(&self) -> BigRational {
        self.coeffs_f.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs_f.iter().all(|c| c.is_zero())
    }

    /// Expands back to the monomial basis (exact round trip).
    pub fn to_polynomial(&self) -> ExactPolynomial {
        let mut acc = ExactPolynomial::zero();
        for (i, c) in self.coeffs_f.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let fi = f_poly(self.k, i).expect("valency validated on construction");
            acc = &acc + &fi.scale(c);
        }
        acc
    }
}

/// Exact change of basis into the `F_i` family. Each `F_i` is monic of degree
/// `i`, so coefficients peel off triangularly from the top degree down.
pub fn to_f_basis(p: &ExactPolynomial, k: u32) -> Result<FBasisExpansion, PolyError> {
    if k < 2 {
        return Err(PolyError::ValencyTooSmall { min: 2, got: k });
    }
    let deg = match p.degree() {
        None => {
            return Ok(FBasisExpansion { k, coeffs_f: vec![] });
        }
        Some(d) => d,
    };
    let mut rem = p.clone();
    let mut coeffs_f = vec![BigRational::zero(); deg + 1];
    for i in (0..=deg).rev() {
        let ci = rem.coeff(i);
        if !ci.is_zero() {
            coeffs_f[i] = ci.clone();
            rem = &rem - &f_poly(k, i)?.scale(&ci);
        }
    }
    debug_assert!(rem.is_zero());
    Ok(FBasisExpansion { k, coeffs_f })
}

/// `F_i^k(x)` evaluated in floating point via the recurrence.
pub fn eval_f_f64(k: u32, i: usize, x: f64) -> f64 {
    match i {
        0 => return 1.0,
        1 => return x,
        _ => {}
    }
    let km1 = (k - 1) as f64;
    let mut prev = x;
    let mut cur = x * x - k as f64;
    for _ in 3..=i {
        let next = x * cur - km1 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `G_j^k(x)` evaluated in floating point via the recurrence.
pub fn eval_g_f64(k: u32, j: usize, x: f64) -> f64 {
    match j {
        0 => return 1.0,
        1 => return x + 1.0,
        _ => {}
    }
    let km1 = (k - 1) as f64;
    let mut prev = x + 1.0;
    let mut cur = x * x + x - km1;
    for _ in 3..=j {
        let next = x * cur - km1 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_integers(coeffs)
    }

    #[test]
    fn f_poly_base_cases_and_recurrence_seed() {
        assert_eq!(f_poly(3, 0).unwrap(), poly(&[1]));
        assert_eq!(f_poly(5, 1).unwrap(), poly(&[0, 1]));
        // F_2^5 = x^2 - 5
        assert_eq!(f_poly(5, 2).unwrap(), poly(&[-5, 0, 1]));
        // F_3^3 = x^3 - 5x
        assert_eq!(f_poly(3, 3).unwrap(), poly(&[0, -5, 0, 1]));
    }

    #[test]
    fn f_poly_rejects_small_valency() {
        assert_eq!(
            f_poly(1, 2).unwrap_err(),
            PolyError::ValencyTooSmall { min: 2, got: 1 }
        );
    }

    #[test]
    fn g_poly_matches_sum_and_recurrence() {
        assert_eq!(g_poly(4, 2).unwrap(), poly(&[-3, 1, 1]));
        assert_eq!(g_poly(3, 1).unwrap(), poly(&[1, 1]));
        // G_3^3 = x^3 + x^2 - 4x - 2
        assert_eq!(g_poly(3, 3).unwrap(), poly(&[-2, -4, 1, 1]));
        for k in 2..=10u32 {
            for j in 0..=12usize {
                let mut sum = ExactPolynomial::zero();
                for i in 0..=j {
                    sum = &sum + &f_poly(k, i).unwrap();
                }
                assert_eq!(g_poly(k, j).unwrap(), sum, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn f_recurrence_holds_exactly() {
        let x = ExactPolynomial::x();
        for k in 2..=10u32 {
            let km1 = ExactPolynomial::constant(rat(k as i64 - 1));
            for i in 3..=12usize {
                let lhs = f_poly(k, i).unwrap();
                let rhs = &(&x * &f_poly(k, i - 1).unwrap()) - &(&km1 * &f_poly(k, i - 2).unwrap());
                assert_eq!(lhs, rhs, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn g_recurrence_holds_exactly() {
        let x = ExactPolynomial::x();
        for k in 2..=10u32 {
            let km1 = ExactPolynomial::constant(rat(k as i64 - 1));
            for j in 3..=12usize {
                let lhs = g_poly(k, j).unwrap();
                let rhs = &(&x * &g_poly(k, j - 1).unwrap()) - &(&km1 * &g_poly(k, j - 2).unwrap());
                assert_eq!(lhs, rhs, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn evaluation_at_valency() {
        // F_0(k) = 1 and F_i(k) = k(k-1)^{i-1} for i >= 1
        for k in 3..=10u32 {
            let kk = rat(k as i64);
            assert_eq!(f_poly(k, 0).unwrap().eval(&kk), rat(1));
            for i in 1..=10usize {
                let expect = rat(k as i64) * rat(k as i64 - 1).pow(i as i32 - 1);
                assert_eq!(f_poly(k, i).unwrap().eval(&kk), expect, "k={k} i={i}");
            }
        }
    }

    #[test]
    fn kappa_poly_expands_and_factors() {
        // 3·G_3 + F_4 for k=3 is x^4 + 3x^3 - 4x^2 - 12x = x(x+3)(x-2)(x+2)
        let p = kappa_poly(3, 4).unwrap();
        assert_eq!(p, poly(&[0, -12, -4, 3, 1]));
        assert!((p.largest_real_root(1e-12).unwrap() - 2.0).abs() < 1e-12);
        assert!(kappa_poly(2, 1).is_err());
    }

    #[test]
    fn to_f_basis_examples() {
        // a basis element maps to a unit vector
        let f3 = f_poly(4, 3).unwrap();
        let e = to_f_basis(&f3, 4).unwrap();
        assert_eq!(e.coeffs_f, vec![rat(0), rat(0), rat(0), rat(1)]);

        // (G_2)^2 for k=3 has f_0 = F_0(3)+F_1(3)+F_2(3) = 1+3+6 = 10
        let g2 = g_poly(3, 2).unwrap();
        let sq = &g2 * &g2;
        let e = to_f_basis(&sq, 3).unwrap();
        assert_eq!(e.coeffs_f, vec![rat(10), rat(6), rat(4), rat(2), rat(1)]);
        assert_eq!(e.f0(), rat(10));

        let one = ExactPolynomial::one();
        assert_eq!(to_f_basis(&one, 3).unwrap().coeffs_f, vec![rat(1)]);
    }

    #[test]
    fn to_f_basis_round_trip_exact() {
        let p = poly(&[7, -3, 0, 2, -1, 5]);
        for k in 2..=8u32 {
            let e = to_f_basis(&p, k).unwrap();
            assert_eq!(e.to_polynomial(), p, "k={k}");
        }
    }

    #[test]
    fn real_roots_quadratic_and_cubic() {
        // x^2 - 5
        let r = poly(&[-5, 0, 1]).real_roots(1e-12).unwrap();
        assert_eq!(r.len(), 2);
        assert!((r[0] + 5f64.sqrt()).abs() < 1e-11);
        assert!((r[1] - 5f64.sqrt()).abs() < 1e-11);

        // G_2 for k=4: largest root (-1+sqrt(13))/2
        let r = g_poly(4, 2).unwrap().largest_real_root(1e-12).unwrap();
        assert!((r - 1.302775637731995).abs() < 1e-11);

        // x^3 - x - 1: single real root 1.3247179572...
        let r = poly(&[-1, -1, 0, 1]).real_roots(1e-12).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - 1.324717957244746).abs() < 1e-11);
    }

    #[test]
    fn real_roots_exact_integers() {
        // (x-1)(x-2)(x-3)
        let p = &(&poly(&[-1, 1]) * &poly(&[-2, 1])) * &poly(&[-3, 1]);
        let r = p.real_roots(1e-12).unwrap();
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn repeated_roots_reported_once_with_multiplicity() {
        // (x-1)^2 (x+2)^3
        let a = poly(&[-1, 1]);
        let b = poly(&[2, 1]);
        let p = &(&a * &a) * &(&(&b * &b) * &b);
        let r = p.real_roots(1e-12).unwrap();
        assert_eq!(r.len(), 2);
        let rm = p.real_roots_with_multiplicity(1e-12).unwrap();
        assert_eq!(rm.len(), 2);
        assert!((rm[0].0 + 2.0).abs() < 1e-12 && rm[0].1 == 3);
        assert!((rm[1].0 - 1.0).abs() < 1e-12 && rm[1].1 == 2);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            ExactPolynomial::zero().real_roots(1e-12).unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn extreme_roots() {
        // G_1 = x + 1
        assert!((extreme_root(ExtremeRootKind::Tau, 4, 1).unwrap() + 1.0).abs() < 1e-12);
        // largest root of x^3 + x^2 - 4x - 2
        let t = extreme_root(ExtremeRootKind::Tau, 3, 3).unwrap();
        assert!((t - 1.813606502648331).abs() < 1e-10);
        // kappa_4 for k=3 equals 2, the girth-8 Moore graph's second eigenvalue
        let kp = extreme_root(ExtremeRootKind::Kappa, 3, 4).unwrap();
        assert!((kp - 2.0).abs() < 1e-12);
        assert!(extreme_root(ExtremeRootKind::Tau, 4, 0).is_err());
    }

    #[test]
    fn trig_closed_form_for_g() {
        // G_d(2√(k-1)·cos t) = (k-1)^{(d-1)/2} (√(k-1)·sin((d+1)t) + sin(dt)) / sin t
        for k in 3..=8u32 {
            for d in 1..=6usize {
                for step in 1..=19 {
                    let t = std::f64::consts::PI * step as f64 / 20.0;
                    let s = ((k - 1) as f64).sqrt();
                    let x = 2.0 * s * t.cos();
                    let lhs = eval_g_f64(k, d, x);
                    let rhs = s.powi(d as i32 - 1)
                        * (s * ((d as f64 + 1.0) * t).sin() + (d as f64 * t).sin())
                        / t.sin();
                    assert!(
                        (lhs - rhs).abs() < 1e-8 * rhs.abs().max(1.0),
                        "k={k} d={d} t={t}: {lhs} vs {rhs}"
                    );
                }
            }
        }
    }

    #[test]
    fn f64_recurrence_matches_exact() {
        for k in 2..=7u32 {
            for i in 0..=9usize {
                let p = f_poly(k, i).unwrap();
                let g = g_poly(k, i).unwrap();
                for &x in &[-2.5, -1.0, 0.0, 0.7, 1.9, 3.0] {
                    assert!((p.eval_f64(x) - eval_f_f64(k, i, x)).abs() < 1e-9);
                    assert!((g.eval_f64(x) - eval_g_f64(k, i, x)).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn display_renders_reasonably() {
        assert_eq!(format!("{}", poly(&[-5, 0, 1])), "x^2 - 5");
        assert_eq!(format!("{}", poly(&[2, -4, 1, 1])), "x^3 + x^2 - 4x + 2");
        assert_eq!(format!("{}", ExactPolynomial::zero()), "0");
    }
}
