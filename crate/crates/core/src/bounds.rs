//! Closed-form and semi-closed-form order bounds for k-regular graphs with
//! bounded second eigenvalue: the Moore bound, the linear-programming bound
//! `M(k,t,c)` and its eigenvalue form `M(k,θ)`, the inverse map `θ(n)`,
//! cage-based algebraic-connectivity refinements, the girth LP bound, and a
//! couple of Alon–Boppana-type propositions.

use crate::poly::{eval_f_f64, eval_g_f64, FBasisExpansion, PolyError};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use thiserror::Error;

/// Guard band for branch selection at the exact zeros `τ_d`.
const BRANCH_GUARD: f64 = 1e-12;

/// Branch indices are capped here; practical inputs stay far below.
const MAX_BRANCH: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum BoundsError {
    #[error("valency must be at least {min}, got {got}")]
    ValencyTooSmall { min: u32, got: u32 },
    #[error("girth must be at least 3, got {0}")]
    GirthTooSmall(u32),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error("theta = {theta} is not below 2*sqrt(k-1) = {limit}; v(k,theta) is unbounded there")]
    ThetaUnbounded { theta: f64, limit: f64 },
    #[error("order {n} is below M({k}, -1) = {min}")]
    OrderTooSmall { k: u32, n: f64, min: f64 },
    #[error("arithmetic overflow computing the bound")]
    Overflow,
    #[error("branch index exceeded {0}; theta is too close to the spectral limit")]
    BranchOverflow(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Result record of one `M(k,θ)` evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub k: u32,
    pub theta: f64,
    /// Branch index: the unique `d ≥ 1` with `τ_{d-1} < θ ≤ τ_d`.
    pub d: usize,
    /// `c_θ = -F_d(θ) / G_{d-1}(θ)`.
    pub c_theta: f64,
    pub bound: f64,
    pub bound_floor: i64,
}

/// A known cage: a k-regular graph of girth g attaining the minimum order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CageRecord {
    pub k: u32,
    pub g: u32,
    pub order: u64,
}

/// The nine known cages that are not Moore graphs.
pub const KNOWN_CAGES: [CageRecord; 9] = [
    CageRecord { k: 3, g: 7, order: 24 },
    CageRecord { k: 3, g: 9, order: 58 },
    CageRecord { k: 3, g: 10, order: 70 },
    CageRecord { k: 3, g: 11, order: 112 },
    CageRecord { k: 4, g: 5, order: 19 },
    CageRecord { k: 4, g: 7, order: 67 },
    CageRecord { k: 5, g: 5, order: 30 },
    CageRecord { k: 6, g: 5, order: 40 },
    CageRecord { k: 7, g: 6, order: 90 },
];

/// Minimum order of a k-regular graph of girth g (Tutte's bound):
/// `1 + k·Σ_{i<d}(k-1)^i` for g = 2d+1, `2·Σ_{i<d}(k-1)^i` for g = 2d.
pub fn moore_bound(k: u32, g: u32) -> Result<u64, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    if g < 3 {
        return Err(BoundsError::GirthTooSmall(g));
    }
    let d = (g / 2) as usize;
    let km1 = (k - 1) as u64;
    let mut sum: u64 = 0;
    let mut pow: u64 = 1;
    for _ in 0..d {
        sum = sum.checked_add(pow).ok_or(BoundsError::Overflow)?;
        pow = pow.checked_mul(km1).ok_or(BoundsError::Overflow)?;
    }
    if g % 2 == 1 {
        (k as u64)
            .checked_mul(sum)
            .and_then(|v| v.checked_add(1))
            .ok_or(BoundsError::Overflow)
    } else {
        sum.checked_mul(2).ok_or(BoundsError::Overflow)
    }
}

/// The LP bound in its `(t, c)` form:
/// `M(k,t,c) = 1 + Σ_{i=0}^{t-3} k(k-1)^i + k(k-1)^{t-2}/c`.
pub fn m_bound(k: u32, t: u32, c: f64) -> Result<f64, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    if t < 3 {
        return Err(BoundsError::Domain(format!("t must be at least 3, got {t}")));
    }
    if !(c > 0.0) {
        return Err(BoundsError::Domain(format!("c must be positive, got {c}")));
    }
    let kf = k as f64;
    let km1 = kf - 1.0;
    let mut sum = 1.0;
    let mut pow = 1.0;
    for _ in 0..(t - 2) {
        sum += kf * pow;
        pow *= km1;
    }
    Ok(sum + kf * pow / c)
}

/// Largest zero of `G_d^k` in floating point, found by bisection on
/// `(τ_{d-1}, 2√(k-1))` where `G_d` changes sign. `τ_1 = -1` exactly.
fn tau_f64(k: u32, d: usize, tau_prev: f64) -> f64 {
    debug_assert!(d >= 2);
    let mut lo = tau_prev;
    let mut hi = 2.0 * ((k - 1) as f64).sqrt();
    debug_assert!(eval_g_f64(k, d, lo) < 0.0);
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if eval_g_f64(k, d, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Moore sum `1 + k·Σ_{i=0}^{d-2}(k-1)^i` (the closed part of branch d).
fn branch_base(k: u32, d: usize) -> f64 {
    let kf = k as f64;
    let km1 = kf - 1.0;
    let mut sum = 1.0;
    let mut pow = 1.0;
    for _ in 0..(d - 1) {
        sum += kf * pow;
        pow *= km1;
    }
    sum
}

/// The eigenvalue-form LP bound `M(k,θ)` with its branch data.
///
/// Selects the unique `d ≥ 1` with `τ_{d-1} < θ ≤ τ_d` (a `1e-12` guard puts
/// `θ = τ_d` on branch `d`, where `c_θ = 1`), then evaluates
/// `1 + k·Σ_{i=0}^{d-2}(k-1)^i + k(k-1)^{d-1}/c_θ`.
pub fn m_of_theta(k: u32, theta: f64) -> Result<BoundReport, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    let limit = 2.0 * ((k - 1) as f64).sqrt();
    if theta >= limit - BRANCH_GUARD {
        return Err(BoundsError::ThetaUnbounded { theta, limit });
    }
    if theta < -1.0 - BRANCH_GUARD {
        return Err(BoundsError::Domain(format!(
            "theta must be at least -1, got {theta}"
        )));
    }
    let mut d = 1usize;
    let mut tau_d = -1.0f64;
    while theta > tau_d + BRANCH_GUARD {
        d += 1;
        if d > MAX_BRANCH {
            return Err(BoundsError::BranchOverflow(MAX_BRANCH));
        }
        tau_d = tau_f64(k, d, tau_d);
    }
    let c_theta = -eval_f_f64(k, d, theta) / eval_g_f64(k, d - 1, theta);
    let kf = k as f64;
    let bound = branch_base(k, d) + kf * (kf - 1.0).powi(d as i32 - 1) / c_theta;
    Ok(BoundReport {
        k,
        theta,
        d,
        c_theta,
        bound,
        // guard against fp noise pulling an integer-valued bound below itself
        bound_floor: (bound + 1e-9).floor() as i64,
    })
}

/// Inverse of the monotone map `θ ↦ M(k,θ)`: the unique `θ` with
/// `M(k,θ) = n`, found by bisection (the branch switches are continuous).
pub fn theta_for_order(k: u32, n: f64) -> Result<f64, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    if !(n >= k as f64 + 2.0) {
        return Err(BoundsError::OrderTooSmall {
            k,
            n,
            min: k as f64 + 1.0,
        });
    }
    // find a branch cap D with M(k, tau_D) = moore(k, 2D+1) >= n
    let mut cap_d = 1usize;
    loop {
        let at_tau = branch_base(k, cap_d) + (k as f64) * ((k - 1) as f64).powi(cap_d as i32 - 1);
        if at_tau >= n {
            break;
        }
        cap_d += 1;
        if cap_d > MAX_BRANCH {
            return Err(BoundsError::BranchOverflow(MAX_BRANCH));
        }
    }
    let mut hi = -1.0;
    for d in 2..=cap_d {
        hi = tau_f64(k, d, hi);
    }
    if cap_d == 1 {
        // n <= M(k, -1) = k + 1 is excluded above, so cap_d >= 2 in practice
        return Ok(-1.0);
    }
    let mut lo = -1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let m = m_of_theta(k, mid)?.bound;
        if m < n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let theta = 0.5 * (lo + hi);
    let residual = (m_of_theta(k, theta)?.bound - n).abs();
    // 1e-8 at table scale; for very large n the fp slope of M limits what a
    // f64 theta can resolve, hence the relative term
    let residual_tol = 1e-8f64.max(n * 1e-12);
    if residual > residual_tol {
        return Err(BoundsError::Domain(format!(
            "bisection residual {residual:e} exceeds {residual_tol:e} at theta = {theta}"
        )));
    }
    Ok(theta)
}

/// Cage-refined upper bound on algebraic connectivity: solves
/// `M(k,θ) = order` and returns `(θ, k - θ)`.
pub fn ac_refined(rec: &CageRecord) -> Result<(f64, f64), BoundsError> {
    let floor = moore_bound(rec.k, rec.g)?;
    if rec.order < floor {
        return Err(BoundsError::Domain(format!(
            "cage order {} is below the Moore bound {} for (k,g) = ({},{})",
            rec.order, floor, rec.k, rec.g
        )));
    }
    let theta = theta_for_order(rec.k, rec.order as f64)?;
    Ok((theta, rec.k as f64 - theta))
}

/// One failed hypothesis of the girth LP bound.
#[derive(Debug, Clone, PartialEq)]
pub enum LpViolation {
    /// Condition (1): `f(k) > 0` fails.
    NonPositiveAtValency { value: BigRational },
    /// Condition (1): `f(λ) ≥ 0` fails at a supplied check point.
    NegativeAtCheckPoint { x: f64, value: f64 },
    /// Condition (2): `f_0 > 0` fails.
    NonPositiveF0 { f0: BigRational },
    /// Condition (2): `f_i ≤ 0` for `i ≥ g` fails.
    PositiveTailCoefficient { index: usize, value: BigRational },
}

impl LpViolation {
    /// Which numbered hypothesis of the LP theorem is violated.
    pub fn condition(&self) -> u8 {
        match self {
            LpViolation::NonPositiveAtValency { .. } | LpViolation::NegativeAtCheckPoint { .. } => 1,
            LpViolation::NonPositiveF0 { .. } | LpViolation::PositiveTailCoefficient { .. } => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpReport {
    pub valid: bool,
    /// `f(k) / f_0`, present when all conditions hold.
    pub bound: Option<BigRational>,
    pub violations: Vec<LpViolation>,
}

/// Girth LP bound: for `f = Σ f_i F_i` with `f(k) > 0`, `f ≥ 0` on the
/// non-trivial eigenvalues, `f_0 > 0` and `f_i ≤ 0` for `i ≥ g`, every
/// connected k-regular graph of girth g has at least `f(k)/f_0` vertices.
///
/// Condition (1) is verified at the supplied eigenvalue check points (with a
/// `1e-9` slack for irrational eigenvalues given in floating point);
/// condition (2) is checked exactly on the rational F-basis coefficients.
pub fn girth_lp_bound(
    k: u32,
    g: u32,
    f: &FBasisExpansion,
    eigenvalue_check_points: &[f64],
) -> Result<LpReport, BoundsError> {
    if f.k != k {
        return Err(BoundsError::Domain(format!(
            "expansion was built for valency {}, not {}",
            f.k, k
        )));
    }
    if g < 3 {
        return Err(BoundsError::GirthTooSmall(g));
    }
    if f.is_zero() {
        return Err(BoundsError::Poly(PolyError::ZeroPolynomial));
    }
    let mut violations = Vec::new();
    let f0 = f.f0();
    if !f0.is_positive() {
        violations.push(LpViolation::NonPositiveF0 { f0: f0.clone() });
    }
    for (i, c) in f.coeffs_f.iter().enumerate() {
        if i >= g as usize && c.is_positive() {
            violations.push(LpViolation::PositiveTailCoefficient {
                index: i,
                value: c.clone(),
            });
        }
    }
    let poly = f.to_polynomial();
    let fk = poly.eval(&BigRational::from_integer(BigInt::from(k)));
    if !fk.is_positive() {
        violations.push(LpViolation::NonPositiveAtValency { value: fk.clone() });
    }
    for &x in eigenvalue_check_points {
        let v = poly.eval_f64(x);
        if v < -1e-9 {
            violations.push(LpViolation::NegativeAtCheckPoint { x, value: v });
        }
    }
    let valid = violations.is_empty();
    let bound = if valid { Some(fk / f0) } else { None };
    Ok(LpReport {
        valid,
        bound,
        violations,
    })
}

/// The two certificate polynomials from the Moore-bound re-derivation, in the
/// F-basis: `(G_d)^2` for odd girth `2d+1`, and
/// `(x+k)·(Σ_i F_{d-1-2i})^2` for even girth `2d`.
pub fn girth_lp_moore_poly(k: u32, g: u32) -> Result<FBasisExpansion, BoundsError> {
    if g < 3 {
        return Err(BoundsError::GirthTooSmall(g));
    }
    let poly = if g % 2 == 1 {
        let d = ((g - 1) / 2) as usize;
        let gd = crate::poly::g_poly(k, d)?;
        &gd * &gd
    } else {
        let d = (g / 2) as usize;
        let mut sum = crate::poly::ExactPolynomial::zero();
        let mut i = 0usize;
        while 2 * i <= d - 1 {
            sum = &sum + &crate::poly::f_poly(k, d - 1 - 2 * i)?;
            i += 1;
        }
        let xk = crate::poly::ExactPolynomial::from_integers(&[k as i64, 1]);
        &xk * &(&sum * &sum)
    };
    Ok(crate::poly::to_f_basis(&poly, k)?)
}

/// `θ = 2√(k-1)·cos(π/d)` together with the exact order threshold
/// `(2(k-1)^d - 2)/(k-2)`: any connected k-regular graph of at least that
/// order has `λ2 ≥ θ` (equivalently, algebraic connectivity at most `k - θ`).
pub fn kolokolnikov(k: u32, d: u32) -> Result<(f64, BigRational), BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    if d < 2 {
        return Err(BoundsError::Domain(format!("d must be at least 2, got {d}")));
    }
    let theta = 2.0 * ((k - 1) as f64).sqrt() * (std::f64::consts::PI / d as f64).cos();
    let km1 = BigInt::from(k - 1);
    let numer = BigInt::from(2) * km1.pow(d) - BigInt::from(2);
    let threshold = BigRational::new(numer, BigInt::from(k - 2));
    Ok((theta, threshold))
}

/// Order bound `1 + k + k(k-1)(θ+1)/(k-θ²)` for `θ ∈ (0, √k)`: any k-regular
/// graph with more vertices has `λ2 > θ`.
pub fn tk3c_bound(k: u32, theta: f64) -> Result<f64, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    let sqrt_k = (k as f64).sqrt();
    if !(theta > 0.0 && theta < sqrt_k) {
        return Err(BoundsError::Domain(format!(
            "theta must lie in (0, sqrt(k)) = (0, {sqrt_k}), got {theta}"
        )));
    }
    let kf = k as f64;
    Ok(1.0 + kf + kf * (kf - 1.0) * (theta + 1.0) / (kf - theta * theta))
}

/// The `θ = α√k` form of [`tk3c_bound`]:
/// `1 + k + (k-1)(α√k + 1)/(1 - α²)` for `α ∈ (0,1)`.
pub fn tk3c_bound_alpha(k: u32, alpha: f64) -> Result<f64, BoundsError> {
    if k < 3 {
        return Err(BoundsError::ValencyTooSmall { min: 3, got: k });
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(BoundsError::Domain(format!(
            "alpha must lie in (0,1), got {alpha}"
        )));
    }
    let kf = k as f64;
    Ok(1.0 + kf + (kf - 1.0) * (alpha * kf.sqrt() + 1.0) / (1.0 - alpha * alpha))
}

/// Koledin's diameter-3 bipartite bound `2(k² - λ2²)/(k - λ2²)`,
/// valid while the right-hand side is positive (`λ2² < k`).
pub fn koledin_bipartite(k: u32, lambda2: f64) -> Result<f64, BoundsError> {
    if k < 2 {
        return Err(BoundsError::ValencyTooSmall { min: 2, got: k });
    }
    let kf = k as f64;
    let l2 = lambda2 * lambda2;
    if l2 >= kf {
        return Err(BoundsError::Domain(format!(
            "lambda2^2 = {l2} must be below k = {kf}"
        )));
    }
    Ok(2.0 * (kf * kf - l2) / (kf - l2))
}

/// The unique real root of `x³ - x - 1`, by bisection.
pub fn lambda_star_rho() -> f64 {
    let f = |x: f64| x * x * x - x - 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `λ* = ρ^{1/2} + ρ^{-1/2} ≈ 2.01980`, the spectral threshold below which
/// the smallest eigenvalue of a connected graph forces irregular structure.
pub fn lambda_star() -> f64 {
    let rho = lambda_star_rho();
    rho.sqrt() + 1.0 / rho.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{extreme_root, ExtremeRootKind};
    use num_traits::ToPrimitive;

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_bound(5, 5).unwrap(), 26);
        assert_eq!(moore_bound(3, 5).unwrap(), 10);
        assert_eq!(moore_bound(3, 6).unwrap(), 14);
        assert_eq!(moore_bound(4, 5).unwrap(), 17);
        assert_eq!(moore_bound(3, 8).unwrap(), 30);
        assert!(moore_bound(2, 5).is_err());
        assert!(moore_bound(3, 2).is_err());
    }

    #[test]
    fn m_bound_values() {
        let v = m_bound(5, 3, 2.0 - 1.0 / 5f64.sqrt()).unwrap();
        assert!((v - 18.8801).abs() < 1e-3, "{v}");
        let v = m_bound(4, 3, 2.0 * (2f64.sqrt() - 1.0)).unwrap();
        assert!((v - (11.0 + 6.0 * 2f64.sqrt())).abs() < 1e-9);
        assert_eq!((v + 1e-9).floor() as i64, 19);
        let v = m_bound(3, 3, 2.0).unwrap();
        assert!((v - 7.0).abs() < 1e-12);
        assert!(m_bound(5, 2, 1.0).is_err());
        assert!(m_bound(5, 3, 0.0).is_err());
    }

    #[test]
    fn m_of_theta_examples() {
        let r = m_of_theta(5, 5f64.sqrt() - 1.0).unwrap();
        assert_eq!(r.d, 2);
        assert!((r.bound - 18.880071555).abs() < 1e-6, "{}", r.bound);
        assert!((r.c_theta - (2.0 - 1.0 / 5f64.sqrt())).abs() < 1e-10);
        assert_eq!(r.bound_floor, 18);

        // at theta = tau_2 the bound is the odd Moore bound with c = 1
        let tau2 = extreme_root(ExtremeRootKind::Tau, 4, 2).unwrap();
        let r = m_of_theta(4, tau2).unwrap();
        assert_eq!(r.d, 2);
        assert!((r.c_theta - 1.0).abs() < 1e-9);
        assert!((r.bound - 17.0).abs() < 1e-9);
        assert_eq!(r.bound_floor, 17);

        // at theta = kappa_4 = 2 (k=3): c = k, even Moore bound 30
        let r = m_of_theta(3, 2.0).unwrap();
        assert_eq!(r.d, 4);
        assert!((r.c_theta - 3.0).abs() < 1e-9);
        assert!((r.bound - 30.0).abs() < 1e-9);
        assert_eq!(r.bound_floor, 30);

        // theta = -1 gives the complete graph
        let r = m_of_theta(4, -1.0).unwrap();
        assert!((r.bound - 5.0).abs() < 1e-12);

        assert!(matches!(
            m_of_theta(3, 2.9),
            Err(BoundsError::ThetaUnbounded { .. })
        ));
    }

    #[test]
    fn moore_point_identities() {
        for k in 3..=7u32 {
            for d in 2..=4usize {
                let tau = extreme_root(ExtremeRootKind::Tau, k, d).unwrap();
                let r = m_of_theta(k, tau).unwrap();
                assert!((r.c_theta - 1.0).abs() < 1e-6, "tau k={k} d={d}: c={}", r.c_theta);
                let want = moore_bound(k, 2 * d as u32 + 1).unwrap() as f64;
                assert!((r.bound - want).abs() < 1e-6, "tau k={k} d={d}");

                let kappa = extreme_root(ExtremeRootKind::Kappa, k, d).unwrap();
                let r = m_of_theta(k, kappa).unwrap();
                assert!((r.c_theta - k as f64).abs() < 1e-6, "kappa k={k} d={d}: c={}", r.c_theta);
                let want = moore_bound(k, 2 * d as u32).unwrap() as f64;
                assert!((r.bound - want).abs() < 1e-6, "kappa k={k} d={d}");
            }
        }
    }

    #[test]
    fn monotone_in_theta() {
        for k in 3..=8u32 {
            let limit = 2.0 * ((k - 1) as f64).sqrt() - 0.01;
            let mut prev = f64::NEG_INFINITY;
            for s in 0..200 {
                let theta = -1.0 + (limit + 1.0) * s as f64 / 199.0;
                let b = m_of_theta(k, theta).unwrap().bound;
                assert!(b > prev, "k={k} theta={theta}: {b} <= {prev}");
                prev = b;
            }
        }
    }

    #[test]
    fn continuity_across_branches() {
        for k in 3..=6u32 {
            for d in 2..=4usize {
                let tau = extreme_root(ExtremeRootKind::Tau, k, d).unwrap();
                let below = m_of_theta(k, tau - 1e-7).unwrap().bound;
                let above = m_of_theta(k, tau + 1e-7).unwrap().bound;
                assert!(
                    (below - above).abs() < 1e-3,
                    "k={k} d={d}: {below} vs {above}"
                );
            }
        }
    }

    #[test]
    fn theta_for_order_examples() {
        let th = theta_for_order(4, 19.0).unwrap();
        assert!((th - 1.4085371784).abs() < 1e-8, "{th}");
        // root of theta^3 + 18 theta^2 + 11 theta - 54
        let p = th * th * th + 18.0 * th * th + 11.0 * th - 54.0;
        assert!(p.abs() < 1e-6, "{p}");

        let th = theta_for_order(3, 58.0).unwrap();
        assert!((th - 2.2675347762).abs() < 1e-8, "{th}");

        // inverse of the Moore point
        let th = theta_for_order(4, moore_bound(4, 5).unwrap() as f64).unwrap();
        let tau2 = extreme_root(ExtremeRootKind::Tau, 4, 2).unwrap();
        assert!((th - tau2).abs() < 1e-9);

        assert!(theta_for_order(4, 4.0).is_err());
    }

    #[test]
    fn theta_for_order_round_trip() {
        // 100 deterministic samples across branches
        for k in [3u32, 5, 7] {
            let limit = 2.0 * ((k - 1) as f64).sqrt();
            for s in 0..34 {
                // start where M(k,theta) >= k+2, the inverse map's domain
                let theta = (limit - 0.15) * s as f64 / 33.0;
                let b = m_of_theta(k, theta).unwrap().bound;
                let back = theta_for_order(k, b).unwrap();
                assert!((back - theta).abs() < 1e-7, "k={k} theta={theta} back={back}");
            }
        }
    }

    #[test]
    fn ac_refined_values() {
        let cases: &[(u32, u32, u64, f64)] = &[
            (3, 9, 58, 0.732465),
            (3, 10, 70, 0.676596),
            (3, 11, 112, 0.572485),
            (4, 5, 19, 2.59146),
            (4, 7, 67, 1.63449),
            (5, 5, 30, 3.31619),
            (6, 5, 40, 4.14832),
            (7, 6, 90, 4.51037),
        ];
        for &(k, g, order, want) in cases {
            let (_, ac) = ac_refined(&CageRecord { k, g, order }).unwrap();
            assert!((ac - want).abs() < 1e-4, "({k},{g}): {ac} vs {want}");
        }
        // the (3,7) cage: the recomputed value disagrees with the published
        // 1.88793 (see `tables ac`); the method itself still satisfies M = 24
        let (theta, ac) = ac_refined(&CageRecord { k: 3, g: 7, order: 24 }).unwrap();
        assert!((m_of_theta(3, theta).unwrap().bound - 24.0).abs() < 1e-6);
        assert!((ac - 1.1334572427).abs() < 1e-6, "{ac}");
        assert!((ac - 1.88793).abs() > 0.5);
    }

    #[test]
    fn girth_lp_reproduces_moore() {
        for k in 3..=7u32 {
            for g in 5..=10u32 {
                let f = girth_lp_moore_poly(k, g).unwrap();
                let report = girth_lp_bound(k, g, &f, &[]).unwrap();
                assert!(report.valid, "k={k} g={g}: {:?}", report.violations);
                let bound = report.bound.unwrap();
                assert!(bound.is_integer(), "k={k} g={g}: {bound}");
                assert_eq!(
                    bound.to_integer().to_u64().unwrap(),
                    moore_bound(k, g).unwrap(),
                    "k={k} g={g}"
                );
            }
        }
    }

    #[test]
    fn girth_lp_examples() {
        // (G_2)^2 at (k,d)=(3,2), g=5 -> bound 10
        let f = girth_lp_moore_poly(3, 5).unwrap();
        let r = girth_lp_bound(3, 5, &f, &[1.0, -2.0]).unwrap();
        assert!(r.valid);
        assert_eq!(r.bound.unwrap(), BigRational::from_integer(BigInt::from(10)));

        // (x+k)(F_2+F_0)^2 at (k,d)=(3,3), g=6 -> bound 14
        let f = girth_lp_moore_poly(3, 6).unwrap();
        let r = girth_lp_bound(3, 6, &f, &[]).unwrap();
        assert_eq!(r.bound.unwrap(), BigRational::from_integer(BigInt::from(14)));

        // f_0 <= 0 is a condition-(2) violation
        let mut f = girth_lp_moore_poly(3, 5).unwrap();
        f.coeffs_f[0] = BigRational::from_integer(BigInt::from(-1));
        let r = girth_lp_bound(3, 5, &f, &[]).unwrap();
        assert!(!r.valid);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, LpViolation::NonPositiveF0 { .. }) && v.condition() == 2));
    }

    #[test]
    fn kolokolnikov_identity() {
        for k in 3..=8u32 {
            for d in 2..=6u32 {
                let (theta, threshold) = kolokolnikov(k, d).unwrap();
                let m = m_of_theta(k, theta).unwrap().bound;
                let t = threshold.to_f64().unwrap();
                assert!((m - t).abs() < 1e-6, "k={k} d={d}: {m} vs {t}");
            }
        }
        // spot values
        assert_eq!(
            kolokolnikov(3, 4).unwrap().1,
            BigRational::from_integer(BigInt::from(30))
        );
        assert_eq!(
            kolokolnikov(4, 3).unwrap().1,
            BigRational::from_integer(BigInt::from(26))
        );
        let (theta, t) = kolokolnikov(4, 2).unwrap();
        assert!(theta.abs() < 1e-12);
        assert_eq!(t, BigRational::from_integer(BigInt::from(8)));
        assert!(kolokolnikov(4, 1).is_err());
    }

    #[test]
    fn tk3c_values() {
        assert!((tk3c_bound(4, 1.0).unwrap() - 13.0).abs() < 1e-12);
        // alpha = 1/2 at k = 9: 1 + 9 + 2*8*(3+2)/3
        let v = tk3c_bound_alpha(9, 0.5).unwrap();
        assert!((v - (10.0 + 80.0 / 3.0)).abs() < 1e-9, "{v}");
        // matches the theta-form under theta = alpha*sqrt(k)
        let w = tk3c_bound(9, 0.5 * 3.0).unwrap();
        assert!((v - w).abs() < 1e-9);
        assert!(tk3c_bound(4, 2.0).is_err());
        assert!(tk3c_bound(4, 0.0).is_err());
    }

    #[test]
    fn koledin_values() {
        assert!((koledin_bipartite(5, 0.0).unwrap() - 10.0).abs() < 1e-12);
        assert!((koledin_bipartite(4, 1.0).unwrap() - 10.0).abs() < 1e-12);
        // bound = 16 at k = 5 happens at lambda2 = sqrt(15/7)
        let l = (15f64 / 7.0).sqrt();
        assert!((koledin_bipartite(5, l).unwrap() - 16.0).abs() < 1e-9);
        assert!(koledin_bipartite(5, 5f64.sqrt()).is_err());
    }

    #[test]
    fn lambda_star_value() {
        let rho = lambda_star_rho();
        assert!((rho * rho * rho - rho - 1.0).abs() < 1e-12);
        let l = lambda_star();
        assert!((l - 2.01980).abs() < 1e-5);
        assert!((l - 2.019800887090467).abs() < 1e-10);
        assert!((l * l - 2.0 - (rho + 1.0 / rho)).abs() < 1e-10);
    }

}
