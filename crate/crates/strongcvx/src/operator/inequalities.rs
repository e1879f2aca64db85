//! Operator inequalities for strongly convex functions.
//!
//! Throughout, `A` is a real symmetric matrix whose spectrum lies strictly
//! inside the domain of `f`, `x` is a state vector, `q = <A x, x>` and
//!
//! ```text
//! var(A, x) = <A^2 x, x> - <A x, x>^2  >=  0
//! ```
//!
//! is the variance of the spectral measure induced by `x`. Strong convexity
//! upgrades the operator Jensen inequality `f(q) <= <f(A) x, x>` by a
//! `c * var` correction, and conversely bounds `var` from above through the
//! derivative ([`theorem36_reverse`]). All bound functions only *compute*
//! both sides — deciding whether a trial passes is the harness's job, and
//! errors are reserved for inputs that break a hypothesis.

use crate::error::{Error, Result};
use crate::funcs::{FStronglyConvexFunction, Interval, StronglyConvexFunction};
use crate::operator::matrix::{apply_to_spectrum, SpectralDecomposition};
use crate::operator::{HermitianMatrix, UnitVector};

/// Shared entry: unit state, spectrum strictly inside `domain`, then
/// `(spectral, q, var)` with the variance computed through the matrix-vector
/// path `||A x||^2 - q^2`.
fn prepare<'a>(
    domain: Interval,
    a: &'a HermitianMatrix,
    x: &UnitVector,
) -> Result<(&'a SpectralDecomposition, f64, f64)> {
    x.require_unit()?;
    x.require_dim(a.dim())?;
    let spectral = a.eigh()?;
    for &ev in spectral.eigenvalues() {
        if !domain.interior_contains(ev) {
            return Err(Error::SpectrumOutsideDomain {
                eigenvalue: ev,
                domain: domain.to_string(),
            });
        }
    }
    let ax = a.matvec(x.coords())?;
    let raw_q: f64 = ax.iter().zip(x.coords()).map(|(&ai, &xi)| ai * xi).sum();
    // The Rayleigh quotient of a unit vector lies in the spectral hull; the
    // clamp removes the last-bit drift that could cross a domain endpoint.
    let lo = spectral.eigenvalues()[0];
    let hi = *spectral.eigenvalues().last().expect("spectrum is non-empty");
    let q = raw_q.clamp(lo, hi);
    let second_moment: f64 = ax.iter().map(|&v| v * v).sum();
    Ok((spectral, q, second_moment - q * q))
}

/// The refined operator Jensen chain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OperatorJensen {
    /// `f(<A x, x>)`.
    pub lhs: f64,
    /// `<f(A) x, x> - c * var`.
    pub refined_rhs: f64,
    /// `<f(A) x, x>`, the unrefined bound.
    pub plain_rhs: f64,
    pub variance: f64,
}

/// `f(q) <= <f(A) x, x> - c var <= <f(A) x, x>` for a unit state and
/// spectrum strictly inside the domain. Exact equalities throughout when `f`
/// is a quadratic, and in any case whenever `x` is an eigenvector
/// (`var = 0`).
pub fn theorem33_check(
    f: &StronglyConvexFunction,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<OperatorJensen> {
    let (spectral, q, variance) = prepare(f.domain(), a, x)?;
    let plain_rhs = spectral.quadratic_form_of(|t| f.eval(t), x.coords())?;
    Ok(OperatorJensen {
        lhs: f.eval(q),
        refined_rhs: plain_rhs - f.modulus() * variance,
        plain_rhs,
        variance,
    })
}

/// A power-mean chain `lhs <= refined <= classical`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HolderMcCarthy {
    pub lhs: f64,
    pub refined: f64,
    pub classical: f64,
    pub power: f64,
}

/// Refined power inequalities for `q = <A x, x>`.
///
/// * `r >= 2`, spectrum in `(1, inf)`:
///   `q^r <= <A^r x, x> - (r^2-r)/2 * var <= <A^r x, x>`.
/// * `0 < r < 1`, spectrum in `(0, 1)`:
///   `<A^r x, x> <= q^r + (r-r^2)/2 * (q^2 - <A^2 x, x>) <= q^r`.
///
/// Exponents in `[1, 2)` or at most `0` carry no strong-convexity constant
/// on these intervals and are rejected.
pub fn holder_mccarthy_refined(
    r: f64,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<HolderMcCarthy> {
    if !r.is_finite() || r <= 0.0 || (1.0..2.0).contains(&r) {
        return Err(Error::InvalidParameter {
            what: format!("power refinements need r >= 2 or 0 < r < 1, got {r}"),
        });
    }
    if r >= 2.0 {
        let domain = Interval::open(1.0, f64::INFINITY)?;
        let (spectral, q, variance) = prepare(domain, a, x)?;
        let classical = spectral.quadratic_form_of(|t| t.powf(r), x.coords())?;
        Ok(HolderMcCarthy {
            lhs: q.powf(r),
            refined: classical - (r * r - r) / 2.0 * variance,
            classical,
            power: r,
        })
    } else {
        let domain = Interval::open(0.0, 1.0)?;
        let (spectral, q, _) = prepare(domain, a, x)?;
        let lhs = spectral.quadratic_form_of(|t| t.powf(r), x.coords())?;
        let second_moment = spectral.quadratic_form_of(|t| t * t, x.coords())?;
        let classical = q.powf(r);
        Ok(HolderMcCarthy {
            lhs,
            refined: classical + (r - r * r) / 2.0 * (q * q - second_moment),
            classical,
            power: r,
        })
    }
}

/// The unrefined power inequality on a positive spectrum: for `r >= 1`
/// returns `(q^r, <A^r x, x>)`, for `0 < r < 1` returns `(<A^r x, x>, q^r)`;
/// in both orientations the inequality reads `lhs <= rhs`.
pub fn holder_mccarthy_baseline(
    r: f64,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<(f64, f64)> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter {
            what: format!("the power inequality needs r > 0, got {r}"),
        });
    }
    let domain = Interval::open(0.0, f64::INFINITY)?;
    let (spectral, q, _) = prepare(domain, a, x)?;
    let averaged = spectral.quadratic_form_of(|t| t.powf(r), x.coords())?;
    Ok(if r >= 1.0 { (q.powf(r), averaged) } else { (averaged, q.powf(r)) })
}

/// The seven-term interpolation chain.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theorem35Chain {
    /// In order:
    /// `f(q)`;
    /// `f(q) + c' f(q)^(1-nu) var`;
    /// `f(q)^(1-nu) <f(A)^nu x, x>`;
    /// `f(q)^(1-nu) <f(A) x, x>^nu`;
    /// `(1-nu) f(q) + nu <f(A) x, x>`;
    /// `<f(A) x, x> - c (1-nu) var`;
    /// `<f(A) x, x>`.
    pub terms: [f64; 7],
    pub variance: f64,
}

/// Interpolated refinement between `f(q)` and `<f(A) x, x>`.
///
/// Needs `f >= 0` on the spectrum and at `q`, an interpolation parameter
/// `nu` in `[0, 1]`, and `power_modulus` — the strong-convexity modulus the
/// caller claims for `f^nu` on the spectral interval (`0` is always a safe
/// claim). Each adjacent pair in [`Theorem35Chain::terms`] is one
/// inequality.
pub fn theorem35_chain(
    f: &StronglyConvexFunction,
    nu: f64,
    power_modulus: f64,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<Theorem35Chain> {
    if !(0.0..=1.0).contains(&nu) || !nu.is_finite() {
        return Err(Error::InvalidParameter {
            what: format!("interpolation parameter nu must lie in [0, 1], got {nu}"),
        });
    }
    if !(power_modulus.is_finite() && power_modulus >= 0.0) {
        return Err(Error::InvalidParameter {
            what: format!("claimed modulus for f^nu must be finite and >= 0, got {power_modulus}"),
        });
    }
    let (spectral, q, variance) = prepare(f.domain(), a, x)?;
    for &ev in spectral.eigenvalues() {
        let value = f.eval(ev);
        if value < 0.0 {
            return Err(Error::NegativeFunctionValue { id: f.id().to_string(), at: ev, value });
        }
    }
    let fq = f.eval(q);
    if fq < 0.0 {
        return Err(Error::NegativeFunctionValue { id: f.id().to_string(), at: q, value: fq });
    }

    let favg = spectral.quadratic_form_of(|t| f.eval(t), x.coords())?;
    let fnu_avg = spectral.quadratic_form_of(|t| f.eval(t).powf(nu), x.coords())?;
    let fq_pow = fq.powf(1.0 - nu);
    Ok(Theorem35Chain {
        terms: [
            fq,
            fq + power_modulus * fq_pow * variance,
            fq_pow * fnu_avg,
            fq_pow * favg.powf(nu),
            (1.0 - nu) * fq + nu * favg,
            favg - f.modulus() * (1.0 - nu) * variance,
            favg,
        ],
        variance,
    })
}

/// The reverse direction: a variance bound from the derivative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theorem36Reverse {
    /// `<A^2 x, x> - q^2`.
    pub variance: f64,
    /// `(<g(A) x, x> - q <f'(A) x, x>) / (2c)` with `g(t) = t f'(t)`.
    pub bound: f64,
}

/// `var <= (<g(A) x, x> - q <f'(A) x, x>) / (2c)`, `g(t) = t f'(t)`.
///
/// Requires a strictly positive modulus and a registered derivative; tight
/// for quadratics, where `g(t) - t f'(q)` integrates the curvature exactly.
pub fn theorem36_reverse(
    f: &StronglyConvexFunction,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<Theorem36Reverse> {
    if f.modulus() <= 0.0 {
        return Err(Error::InvalidParameter {
            what: "the reverse variance bound needs a strictly positive modulus".into(),
        });
    }
    let (spectral, q, variance) = prepare(f.domain(), a, x)?;
    let mut weighted = Vec::with_capacity(spectral.dim());
    let mut derivs = Vec::with_capacity(spectral.dim());
    for &ev in spectral.eigenvalues() {
        let d = f.deriv(ev)?;
        weighted.push(ev * d);
        derivs.push(d);
    }
    let g_avg = spectral.quadratic_form_weighted(&weighted, x.coords())?;
    let deriv_avg = spectral.quadratic_form_weighted(&derivs, x.coords())?;
    Ok(Theorem36Reverse { variance, bound: (g_avg - q * deriv_avg) / (2.0 * f.modulus()) })
}

/// Penalty form of the operator Jensen bound:
///
/// ```text
/// f(q) <= <f(A) x, x> - <F(A - q I) x, x>
/// ```
///
/// with `F(A - q I)` assembled in the eigenbasis of `A`. Returns
/// `(lhs, rhs)`. With `F(t) = c t^2` the penalty term equals `c * var`, so
/// this reproduces the refined chain through a structurally different
/// computation.
pub fn eq43_fstrong_check(
    f: &FStronglyConvexFunction,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<(f64, f64)> {
    x.require_unit()?;
    x.require_dim(a.dim())?;
    let spectral = a.eigh()?;
    for &ev in spectral.eigenvalues() {
        if !f.domain().interior_contains(ev) {
            return Err(Error::SpectrumOutsideDomain {
                eigenvalue: ev,
                domain: f.domain().to_string(),
            });
        }
    }
    let q = a
        .quadratic_form(x.coords())?
        .clamp(spectral.eigenvalues()[0], *spectral.eigenvalues().last().expect("non-empty"));
    let favg = spectral.quadratic_form_of(|t| f.eval(t), x.coords())?;
    // Deliberately assemble the shifted penalty matrix instead of staying in
    // the eigenbasis: this crosses the functional-calculus code path.
    let penalty_matrix = apply_to_spectrum(a, |t| f.penalty(t - q))?;
    let penalty_avg = penalty_matrix.quadratic_form(x.coords())?;
    Ok((f.eval(q), favg - penalty_avg))
}

/// Subunit extension of the penalty bound: for `0 < ||x|| <= 1`, `f(0) <= 0`
/// and `0` in the domain,
///
/// ```text
/// f(<A x, x>) <= <f(A) x, x> - <F(A - rho I) x, x> + (s^4 - s^2) F(rho)
/// ```
///
/// with `s^2 = ||x||^2` and `rho = <A x, x> / s^2`. Returns `(lhs, rhs)`;
/// reduces to the unit-state bound when `||x|| = 1`.
pub fn theorem41_subunit_check(
    f: &FStronglyConvexFunction,
    a: &HermitianMatrix,
    x: &UnitVector,
) -> Result<(f64, f64)> {
    x.require_dim(a.dim())?;
    if !f.domain().contains(0.0) {
        return Err(Error::HypothesisViolated {
            what: format!("the domain {} of {:?} must contain 0", f.domain(), f.id()),
        });
    }
    let at_zero = f.eval(0.0);
    if at_zero > 0.0 {
        return Err(Error::HypothesisViolated {
            what: format!("f(0) = {at_zero} must be <= 0 for {:?}", f.id()),
        });
    }
    let spectral = a.eigh()?;
    for &ev in spectral.eigenvalues() {
        if !f.domain().interior_contains(ev) {
            return Err(Error::SpectrumOutsideDomain {
                eigenvalue: ev,
                domain: f.domain().to_string(),
            });
        }
    }
    let s2 = x.norm() * x.norm();
    let raw_q = a.quadratic_form(x.coords())?;
    let lo = spectral.eigenvalues()[0];
    let hi = *spectral.eigenvalues().last().expect("non-empty");
    let rho = (raw_q / s2).clamp(lo, hi);
    // q = s^2 * rho + (1 - s^2) * 0 stays inside the (convex) domain.
    let q = raw_q.clamp(rho.min(0.0), rho.max(0.0));
    let favg = spectral.quadratic_form_of(|t| f.eval(t), x.coords())?;
    let penalty_avg =
        spectral.quadratic_form_of(|t| f.penalty(t - rho), x.coords())?;
    let rhs = favg - penalty_avg + (s2 * s2 - s2) * f.penalty(rho);
    Ok((f.eval(q), rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcs::{neg_log, neg_pow_r, pow_r, quad, quartic, shifted_quad};
    use std::f64::consts::FRAC_1_SQRT_2;

    fn diag(values: &[f64]) -> HermitianMatrix {
        HermitianMatrix::diag(values).unwrap()
    }

    fn half_half() -> UnitVector {
        UnitVector::new(vec![FRAC_1_SQRT_2, FRAC_1_SQRT_2]).unwrap()
    }

    #[test]
    fn refined_jensen_frozen_quadratic() {
        let b = theorem33_check(&quad(1.0).unwrap(), &diag(&[2.0, 3.0]), &half_half()).unwrap();
        assert!((b.lhs - 6.25).abs() < 1e-12);
        assert!((b.refined_rhs - 6.25).abs() < 1e-12);
        assert!((b.plain_rhs - 6.5).abs() < 1e-12);
        assert!((b.variance - 0.25).abs() < 1e-13);
    }

    #[test]
    fn refined_jensen_frozen_log() {
        let b =
            theorem33_check(&neg_log(), &diag(&[0.25, 0.75]), &half_half()).unwrap();
        assert!((b.lhs - std::f64::consts::LN_2).abs() < 1e-13);
        assert!((b.refined_rhs - 0.8057382167858358).abs() < 1e-13);
        assert!((b.plain_rhs - 0.8369882167858358).abs() < 1e-13);
        assert!(b.lhs <= b.refined_rhs && b.refined_rhs <= b.plain_rhs);
    }

    #[test]
    fn refined_jensen_is_tight_on_eigenvectors() {
        let x = UnitVector::new(vec![0.0, 1.0]).unwrap();
        let b = theorem33_check(&neg_log(), &diag(&[0.25, 0.75]), &x).unwrap();
        assert!((b.lhs - b.plain_rhs).abs() < 1e-14);
        assert!(b.variance.abs() < 1e-15);
    }

    #[test]
    fn refined_jensen_validates_inputs() {
        let f = neg_log();
        // Spectrum outside the domain.
        assert!(matches!(
            theorem33_check(&f, &diag(&[0.25, 2.0]), &half_half()),
            Err(Error::SpectrumOutsideDomain { .. })
        ));
        // Boundary eigenvalue: 1.0 is in (0,1] but not its interior.
        assert!(matches!(
            theorem33_check(&f, &diag(&[0.25, 1.0]), &half_half()),
            Err(Error::SpectrumOutsideDomain { .. })
        ));
        // Subunit state is rejected by the unit-state bounds.
        let sub = UnitVector::new(vec![0.5, 0.0]).unwrap();
        assert!(matches!(
            theorem33_check(&f, &diag(&[0.25, 0.75]), &sub),
            Err(Error::BadNorm { .. })
        ));
        // Dimension mismatch.
        let x3 = UnitVector::new(vec![1.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            theorem33_check(&f, &diag(&[0.25, 0.75]), &x3),
            Err(Error::DimMismatch { .. })
        ));
    }

    #[test]
    fn power_chain_frozen_cube() {
        let b = holder_mccarthy_refined(3.0, &diag(&[2.0, 3.0]), &half_half()).unwrap();
        assert!((b.lhs - 15.625).abs() < 1e-12);
        assert!((b.refined - 16.75).abs() < 1e-12);
        assert!((b.classical - 17.5).abs() < 1e-12);
        assert!(b.lhs <= b.refined && b.refined <= b.classical);
    }

    #[test]
    fn power_chain_frozen_square_root() {
        let b = holder_mccarthy_refined(0.5, &diag(&[0.25, 0.81]), &half_half()).unwrap();
        assert!((b.lhs - 0.7).abs() < 1e-13);
        assert!((b.refined - 0.7182109889280518).abs() < 1e-13);
        assert!((b.classical - 0.7280109889280518).abs() < 1e-13);
        assert!(b.lhs <= b.refined && b.refined <= b.classical);
    }

    #[test]
    fn power_chain_rejects_unsupported_exponents() {
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        for r in [0.0, -1.0, 1.0, 1.5, 1.999, f64::NAN] {
            assert!(holder_mccarthy_refined(r, &a, &x).is_err(), "r = {r}");
        }
        // And the regimes enforce their spectral windows.
        assert!(matches!(
            holder_mccarthy_refined(3.0, &diag(&[0.5, 2.0]), &half_half()),
            Err(Error::SpectrumOutsideDomain { .. })
        ));
        assert!(matches!(
            holder_mccarthy_refined(0.5, &diag(&[0.5, 2.0]), &half_half()),
            Err(Error::SpectrumOutsideDomain { .. })
        ));
    }

    #[test]
    fn power_baseline_orients_by_exponent() {
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        let (lhs, rhs) = holder_mccarthy_baseline(3.0, &a, &x).unwrap();
        assert!((lhs - 15.625).abs() < 1e-12);
        assert!((rhs - 17.5).abs() < 1e-12);
        let b = diag(&[0.25, 0.81]);
        let (lhs, rhs) = holder_mccarthy_baseline(0.5, &b, &x).unwrap();
        assert!((lhs - 0.7).abs() < 1e-13);
        assert!((rhs - 0.7280109889280518).abs() < 1e-13);
        // r = 1 degenerates to an identity.
        let (lhs, rhs) = holder_mccarthy_baseline(1.0, &a, &x).unwrap();
        assert!((lhs - rhs).abs() < 1e-13);
        assert!(holder_mccarthy_baseline(0.0, &a, &x).is_err());
    }

    #[test]
    fn interpolation_chain_frozen_square() {
        let f = pow_r(2.0).unwrap();
        let chain =
            theorem35_chain(&f, 0.5, 0.0, &diag(&[2.0, 3.0]), &half_half()).unwrap();
        let t = chain.terms;
        assert!((t[0] - 6.25).abs() < 1e-12);
        assert!((t[1] - 6.25).abs() < 1e-12);
        assert!((t[2] - 6.25).abs() < 1e-12);
        assert!((t[3] - 6.373774391990981).abs() < 1e-12);
        assert!((t[4] - 6.375).abs() < 1e-12);
        assert!((t[5] - 6.375).abs() < 1e-12);
        assert!((t[6] - 6.5).abs() < 1e-12);
        for w in t.windows(2) {
            assert!(w[0] <= w[1] + 1e-12);
        }
    }

    #[test]
    fn interpolation_chain_endpoints() {
        let f = pow_r(2.0).unwrap();
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        // nu = 1 with the honest modulus claim for f^1 collapses the middle.
        let chain = theorem35_chain(&f, 1.0, 1.0, &a, &x).unwrap();
        let t = chain.terms;
        for value in &t[1..] {
            assert!((value - 6.5).abs() < 1e-12);
        }
        // nu = 0: everything up to the final average collapses to f(q); in
        // particular the sixth term carries the full variance correction.
        let chain = theorem35_chain(&f, 0.0, 0.0, &a, &x).unwrap();
        let t = chain.terms;
        for value in &t[..6] {
            assert!((value - 6.25).abs() < 1e-12);
        }
        assert!((t[6] - 6.5).abs() < 1e-12);
    }

    #[test]
    fn interpolation_chain_validates_hypotheses() {
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        let f = pow_r(2.0).unwrap();
        assert!(matches!(
            theorem35_chain(&f, 1.5, 0.0, &a, &x),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            theorem35_chain(&f, 0.5, -1.0, &a, &x),
            Err(Error::InvalidParameter { .. })
        ));
        // Negative function values are refused.
        let g = neg_pow_r(0.5).unwrap();
        let b = diag(&[0.25, 0.81]);
        assert!(matches!(
            theorem35_chain(&g, 0.5, 0.0, &b, &x),
            Err(Error::NegativeFunctionValue { .. })
        ));
    }

    #[test]
    fn reverse_bound_frozen_cube() {
        let b = theorem36_reverse(&pow_r(3.0).unwrap(), &diag(&[2.0, 3.0]), &half_half()).unwrap();
        assert!((b.variance - 0.25).abs() < 1e-13);
        assert!((b.bound - 0.625).abs() < 1e-12);
        assert!(b.variance <= b.bound);
    }

    #[test]
    fn reverse_bound_is_tight_for_quadratics() {
        // g(t) - t f'(q) for f = c t^2 gives exactly 2 c var.
        let b = theorem36_reverse(&quad(2.0).unwrap(), &diag(&[-1.0, 4.0]), &half_half()).unwrap();
        assert!((b.variance - b.bound).abs() < 1e-12);
    }

    #[test]
    fn reverse_bound_needs_curvature_and_derivative() {
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        assert!(matches!(
            theorem36_reverse(&quad(0.0).unwrap(), &a, &x),
            Err(Error::InvalidParameter { .. })
        ));
        let no_deriv = crate::funcs::StronglyConvexFunction::new(
            "bare",
            Interval::all(),
            1.0,
            |t| t * t,
        )
        .unwrap();
        assert!(matches!(
            theorem36_reverse(&no_deriv, &a, &x),
            Err(Error::MissingDerivative { .. })
        ));
    }

    #[test]
    fn penalty_bound_equals_refined_chain_for_quadratics() {
        let f = quad(1.0).unwrap();
        let a = diag(&[2.0, 3.0]);
        let x = half_half();
        let (lhs, rhs) = eq43_fstrong_check(&f.with_quadratic_penalty(), &a, &x).unwrap();
        assert!((lhs - 6.25).abs() < 1e-12);
        assert!((rhs - 6.25).abs() < 1e-12);
        let chain = theorem33_check(&f, &a, &x).unwrap();
        assert!((rhs - chain.refined_rhs).abs() < 1e-11);
    }

    #[test]
    fn subunit_bound_frozen_example() {
        let x = UnitVector::new(vec![0.5, 0.0]).unwrap();
        let (lhs, rhs) = theorem41_subunit_check(&shifted_quad(), &diag(&[1.0, -1.0]), &x).unwrap();
        assert!((lhs + 0.9375).abs() < 1e-13);
        assert!((rhs + 0.1875).abs() < 1e-13);
        assert!(lhs <= rhs);
    }

    #[test]
    fn subunit_bound_reduces_to_unit_case() {
        let f = shifted_quad();
        let a = HermitianMatrix::new(2, vec![0.5, 0.25, 0.25, -0.75]).unwrap();
        let x = UnitVector::new(vec![0.6, 0.8]).unwrap();
        let (lhs41, rhs41) = theorem41_subunit_check(&f, &a, &x).unwrap();
        let (lhs43, rhs43) = eq43_fstrong_check(&f, &a, &x).unwrap();
        assert!((lhs41 - lhs43).abs() < 1e-12);
        assert!((rhs41 - rhs43).abs() < 1e-12);
    }

    #[test]
    fn subunit_bound_validates_hypotheses() {
        let x = UnitVector::new(vec![0.5, 0.0]).unwrap();
        // quartic's domain [1, 2] misses zero.
        assert!(matches!(
            theorem41_subunit_check(&quartic(), &diag(&[1.5, 1.75]), &x),
            Err(Error::HypothesisViolated { .. })
        ));
        // f(0) > 0 is refused.
        let lifted = FStronglyConvexFunction::new(
            "lifted_quad",
            Interval::all(),
            |t| t * t + 1.0,
            |t| t * t,
        )
        .unwrap();
        assert!(matches!(
            theorem41_subunit_check(&lifted, &diag(&[1.0, -1.0]), &x),
            Err(Error::HypothesisViolated { .. })
        ));
    }
}
