//! Mercer-type variants: Jensen's inequality for the reflected point
//! `x_min + x_max - xbar` and the refined bounds a strong-convexity modulus
//! adds to it.
//!
//! Every point is expressed through its hull coordinate
//! `lambda_i = (x_max - x_i) / (x_max - x_min)`, so that
//! `x_i = lambda_i * x_min + (1 - lambda_i) * x_max`. The refinements all
//! price the two curvature sources separately: how far each point sits from
//! the hull endpoints (`lambda_i (1 - lambda_i)`) and how spread the points
//! are around their barycenter.

use crate::error::{Error, Result};
use crate::funcs::{Interval, StronglyConvexFunction};
use crate::jensen::{PointVector, WeightVector};

/// Hull coordinates `lambda_i = (x_max - x_i) / (x_max - x_min)`.
///
/// When all points coincide the hull is a single point; every coordinate is
/// then reported as `0`, matching the limit of placing each point at the
/// upper endpoint.
pub fn lambdas_of(x: &PointVector) -> Vec<f64> {
    let (lo, hi) = (x.min(), x.max());
    let span = hi - lo;
    if span == 0.0 {
        return vec![0.0; x.len()];
    }
    x.as_slice().iter().map(|&xi| ((hi - xi) / span).clamp(0.0, 1.0)).collect()
}

fn validate_against(f: &StronglyConvexFunction, x: &PointVector) -> Result<()> {
    for &value in x.as_slice() {
        if !f.domain().contains(value) {
            return Err(Error::OutsideDomain { value, domain: f.domain().to_string() });
        }
    }
    Ok(())
}

/// Pointwise reflection bound: for `x_i` inside the hull of the points,
/// returns `(lhs, rhs)` with
///
/// ```text
/// lhs = f(x_min + x_max - x_i)
/// rhs = f(x_min) + f(x_max) - f(x_i)
///       - 2 c lambda_i (1 - lambda_i) (x_min - x_max)^2
/// ```
///
/// The reflected point lies in the same hull, so it stays inside the domain.
/// The bound is an exact identity when `f` is a quadratic.
pub fn lemma26_bound(f: &StronglyConvexFunction, x: &PointVector, i: usize) -> Result<(f64, f64)> {
    validate_against(f, x)?;
    if i >= x.len() {
        return Err(Error::InvalidParameter {
            what: format!("point index {i} out of range for {} points", x.len()),
        });
    }
    let (lo, hi) = (x.min(), x.max());
    let xi = x.as_slice()[i];
    let lambda = lambdas_of(x)[i];
    // Mathematically in [lo, hi]; the clamp only strips last-bit drift that
    // could cross an open domain endpoint.
    let reflected = (lo + hi - xi).clamp(lo, hi);
    let span2 = (lo - hi) * (lo - hi);
    let lhs = f.eval(reflected);
    let rhs =
        f.eval(lo) + f.eval(hi) - f.eval(xi) - 2.0 * f.modulus() * lambda * (1.0 - lambda) * span2;
    Ok((lhs, rhs))
}

/// Both sides of the refined Mercer-Jensen bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theorem27Bound {
    /// `f(x_min + x_max - xbar)`.
    pub lhs: f64,
    /// `plain_rhs - c * correction`.
    pub refined_rhs: f64,
    /// `f(x_min) + f(x_max) - sum p_i f(x_i)`, the unrefined bound.
    pub plain_rhs: f64,
    /// The curvature term
    /// `2 sum p_i lambda_i (1 - lambda_i) (x_min - x_max)^2 + sum p_i (x_i - xbar)^2`.
    pub correction: f64,
}

/// Refined Mercer-Jensen bound: `lhs <= refined_rhs <= plain_rhs`, with the
/// whole correction equal to the gap when `f` is a quadratic.
pub fn theorem27_bound(
    f: &StronglyConvexFunction,
    x: &PointVector,
    p: &WeightVector,
) -> Result<Theorem27Bound> {
    if x.len() != p.len() {
        return Err(Error::LengthMismatch { expected: x.len(), got: p.len() });
    }
    validate_against(f, x)?;
    let (lo, hi) = (x.min(), x.max());
    let lambdas = lambdas_of(x);
    let span2 = (lo - hi) * (lo - hi);

    let mut mean = 0.0;
    let mut avg_f = 0.0;
    for (&xi, &pi) in x.as_slice().iter().zip(p.as_slice()) {
        mean += pi * xi;
        avg_f += pi * f.eval(xi);
    }
    let mean = mean.clamp(lo, hi);
    let reflected = (lo + hi - mean).clamp(lo, hi);

    let mut correction = 0.0;
    for ((&xi, &pi), &lambda) in x.as_slice().iter().zip(p.as_slice()).zip(&lambdas) {
        correction += 2.0 * pi * lambda * (1.0 - lambda) * span2;
        correction += pi * (xi - mean) * (xi - mean);
    }

    let plain_rhs = f.eval(lo) + f.eval(hi) - avg_f;
    Ok(Theorem27Bound {
        lhs: f.eval(reflected),
        refined_rhs: plain_rhs - f.modulus() * correction,
        plain_rhs,
        correction,
    })
}

/// The refined arithmetic/geometric mean chain for points in `(0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeansChain {
    /// `x_min * x_max / G`, with `G` the weighted geometric mean.
    pub g_tilde: f64,
    /// `exp(correction / 2) * g_tilde`, the refined intermediate value.
    pub refined: f64,
    /// `x_min + x_max - A`, with `A` the weighted arithmetic mean.
    pub a_tilde: f64,
    /// The same curvature term as [`Theorem27Bound::correction`].
    pub correction: f64,
}

/// Applies the refined Mercer-Jensen bound to `-ln` on `(0, 1]` and
/// exponentiates: `g_tilde <= refined <= a_tilde`.
pub fn means_chain(x: &PointVector, p: &WeightVector) -> Result<MeansChain> {
    let unit = Interval::open_closed(0.0, 1.0)?;
    if x.len() != p.len() {
        return Err(Error::LengthMismatch { expected: x.len(), got: p.len() });
    }
    for &value in x.as_slice() {
        if !unit.contains(value) {
            return Err(Error::OutsideDomain { value, domain: unit.to_string() });
        }
    }
    let (lo, hi) = (x.min(), x.max());
    let lambdas = lambdas_of(x);
    let span2 = (lo - hi) * (lo - hi);

    let mut arithmetic = 0.0;
    let mut log_geometric = 0.0;
    let mut correction = 0.0;
    for ((&xi, &pi), &lambda) in x.as_slice().iter().zip(p.as_slice()).zip(&lambdas) {
        arithmetic += pi * xi;
        log_geometric += pi * xi.ln();
        correction += 2.0 * pi * lambda * (1.0 - lambda) * span2;
    }
    let arithmetic = arithmetic.clamp(lo, hi);
    for (&xi, &pi) in x.as_slice().iter().zip(p.as_slice()) {
        correction += pi * (xi - arithmetic) * (xi - arithmetic);
    }

    let g_tilde = lo * hi / log_geometric.exp();
    Ok(MeansChain {
        g_tilde,
        refined: (correction / 2.0).exp() * g_tilde,
        a_tilde: lo + hi - arithmetic,
        correction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::funcs::{neg_log, quad};

    fn pv(points: &[f64], f: &StronglyConvexFunction) -> PointVector {
        PointVector::new(points.to_vec(), f.domain()).unwrap()
    }

    #[test]
    fn hull_coordinates() {
        let f = neg_log();
        let x = pv(&[0.25, 0.5, 1.0], &f);
        let lambdas = lambdas_of(&x);
        assert_eq!(lambdas[0], 1.0);
        assert!((lambdas[1] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(lambdas[2], 0.0);
    }

    #[test]
    fn hull_coordinates_degenerate() {
        let f = neg_log();
        let x = pv(&[0.5, 0.5, 0.5], &f);
        assert_eq!(lambdas_of(&x), vec![0.0, 0.0, 0.0]);
    }

    #[test]
    fn reflection_bound_frozen_values() {
        let f = neg_log();
        let x = pv(&[0.25, 0.5, 1.0], &f);
        let (lhs, rhs) = lemma26_bound(&f, &x, 1).unwrap();
        assert!((lhs - 0.28768207245178093).abs() < 1e-15);
        assert!((rhs - 0.5681471805599453).abs() < 1e-15);
        assert!(lhs <= rhs);
    }

    #[test]
    fn reflection_bound_is_identity_for_quadratics() {
        let f = quad(1.5).unwrap();
        let x = pv(&[-3.0, -0.5, 1.0, 4.0], &f);
        for i in 0..4 {
            let (lhs, rhs) = lemma26_bound(&f, &x, i).unwrap();
            assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + lhs.abs()), "i={i}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn reflection_bound_rejects_bad_index() {
        let f = neg_log();
        let x = pv(&[0.25, 0.5], &f);
        assert!(matches!(
            lemma26_bound(&f, &x, 2),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn refined_bound_frozen_values() {
        let f = neg_log();
        let x = pv(&[0.25, 0.5, 1.0], &f);
        let p = WeightVector::new(vec![0.2, 0.3, 0.5]).unwrap();
        let b = theorem27_bound(&f, &x, &p).unwrap();
        assert!((b.lhs - 0.5978370007556204).abs() < 1e-15);
        assert!((b.refined_rhs - 0.8148413347279289).abs() < 1e-15);
        assert!((b.plain_rhs - 0.9010913347279289).abs() < 1e-15);
        assert!(b.lhs <= b.refined_rhs && b.refined_rhs <= b.plain_rhs);
    }

    #[test]
    fn refined_bound_is_identity_for_quadratics() {
        let f = quad(2.5).unwrap();
        let x = pv(&[-4.0, -1.0, 0.5, 3.0], &f);
        let p = WeightVector::new(vec![0.1, 0.4, 0.3, 0.2]).unwrap();
        let b = theorem27_bound(&f, &x, &p).unwrap();
        assert!((b.lhs - b.refined_rhs).abs() <= 1e-12 * (1.0 + b.lhs.abs()));
    }

    #[test]
    fn refined_bound_rejects_mismatched_lengths() {
        let f = neg_log();
        let x = pv(&[0.25, 0.5, 1.0], &f);
        let p = WeightVector::uniform(2).unwrap();
        assert!(matches!(
            theorem27_bound(&f, &x, &p),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn means_chain_frozen_values() {
        let x = PointVector::new(vec![0.5, 1.0], Interval::open_closed(0.0, 1.0).unwrap()).unwrap();
        let p = WeightVector::uniform(2).unwrap();
        let chain = means_chain(&x, &p).unwrap();
        assert!((chain.g_tilde - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((chain.refined - 0.729552759887131).abs() < 1e-15);
        assert_eq!(chain.a_tilde, 0.75);
        assert_eq!(chain.correction, 0.0625);
    }

    #[test]
    fn means_chain_rejects_points_outside_unit_interval() {
        let wide = Interval::all();
        let x = PointVector::new(vec![0.5, 2.0], wide).unwrap();
        let p = WeightVector::uniform(2).unwrap();
        assert!(matches!(means_chain(&x, &p), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn means_chain_collapses_on_equal_points() {
        let x = PointVector::new(vec![0.25; 3], Interval::open_closed(0.0, 1.0).unwrap()).unwrap();
        let p = WeightVector::uniform(3).unwrap();
        let chain = means_chain(&x, &p).unwrap();
        assert!((chain.g_tilde - 0.25).abs() < 1e-15);
        assert!((chain.refined - 0.25).abs() < 1e-15);
        assert!((chain.a_tilde - 0.25).abs() < 1e-15);
        assert_eq!(chain.correction, 0.0);
    }

    #[test]
    fn means_chain_matches_refined_bound_through_the_exponential() {
        use crate::harness::sampling::{self, sample_points, sample_weights};
        use rand::Rng;
        let f = neg_log();
        let mut rng = sampling::rng_for(23, "mercer.consistency");
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let points = sample_points(n, 1e-3, 1.0, &mut rng);
            let x = PointVector::new(points, f.domain()).unwrap();
            let p = sample_weights(n, false, &mut rng).unwrap();
            let bound = theorem27_bound(&f, &x, &p).unwrap();
            let chain = means_chain(&x, &p).unwrap();
            // -ln(a_tilde) = lhs and -ln(refined) = refined_rhs, up to rounding.
            assert!(((-chain.a_tilde.ln()) - bound.lhs).abs() < 1e-12);
            assert!(((-chain.refined.ln()) - bound.refined_rhs).abs() < 1e-12);
            assert!(chain.g_tilde <= chain.refined + 1e-12);
            assert!(chain.refined <= chain.a_tilde + 1e-12);
        }
    }
}
