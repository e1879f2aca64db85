//! The discrete Jensen gap and its strong-convexity refinements.
//!
//! For weights `p` on the simplex and points `x` in the domain of `f`, the
//! Jensen functional is
//!
//! ```text
//! J(f, x, p) = sum_i p_i f(x_i) - f(sum_i p_i x_i)
//! ```
//!
//! Convexity makes it non-negative; a strong-convexity modulus `c` pushes it
//! up to at least `c * sum_i p_i (x_i - xbar)^2` ([`lemma21_lower_bound`]),
//! and comparing two weight vectors sandwiches it from both sides
//! ([`theorem22_bounds`]).

use crate::error::{Error, Result};
use crate::funcs::{Interval, StronglyConvexFunction};

/// Non-negative weights summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    strictly_positive: bool,
}

impl WeightVector {
    /// Validates non-negativity and that the sum is `1` within `1e-12`.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        for (index, &value) in weights.iter().enumerate() {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::InvalidWeight { index, value });
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::WeightSum { sum });
        }
        let strictly_positive = weights.iter().all(|w| *w > 0.0);
        Ok(Self { weights, strictly_positive })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput);
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn strictly_positive(&self) -> bool {
        self.strictly_positive
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.weights.iter().copied()
    }

    fn require_strictly_positive(&self) -> Result<()> {
        match self.weights.iter().position(|w| *w == 0.0) {
            Some(index) => Err(Error::ZeroWeight { index }),
            None => Ok(()),
        }
    }
}

/// Evaluation points pinned to an interval.
#[derive(Clone, Debug, PartialEq)]
pub struct PointVector {
    points: Vec<f64>,
    domain: Interval,
}

impl PointVector {
    pub fn new(points: Vec<f64>, domain: Interval) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &value in &points {
            if !domain.contains(value) {
                return Err(Error::OutsideDomain { value, domain: domain.to_string() });
            }
        }
        Ok(Self { points, domain })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.points
    }

    pub fn min(&self) -> f64 {
        self.points.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.points.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

fn check_compatible(
    f: &StronglyConvexFunction,
    x: &PointVector,
    p: &WeightVector,
) -> Result<()> {
    if x.len() != p.len() {
        return Err(Error::LengthMismatch { expected: x.len(), got: p.len() });
    }
    for &value in x.as_slice() {
        if !f.domain().contains(value) {
            return Err(Error::OutsideDomain { value, domain: f.domain().to_string() });
        }
    }
    Ok(())
}

/// The barycenter, projected back onto the convex hull of the points.
///
/// Mathematically `sum p_i x_i` always lies in `[min x, max x]`; the clamp
/// only removes the last-bit drift that could push it across an open domain
/// endpoint.
fn barycenter(x: &[f64], p: &[f64]) -> f64 {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut mean = 0.0;
    for (&xi, &pi) in x.iter().zip(p) {
        mean += pi * xi;
        lo = lo.min(xi);
        hi = hi.max(xi);
    }
    mean.clamp(lo, hi)
}

/// `J(f, x, p) = sum p_i f(x_i) - f(sum p_i x_i)`.
pub fn jensen_functional(
    f: &StronglyConvexFunction,
    x: &PointVector,
    p: &WeightVector,
) -> Result<f64> {
    check_compatible(f, x, p)?;
    let mean = barycenter(x.as_slice(), p.as_slice());
    let avg: f64 = x.as_slice().iter().zip(p.as_slice()).map(|(&xi, &pi)| pi * f.eval(xi)).sum();
    Ok(avg - f.eval(mean))
}

/// The variance lower bound: returns `(c * sum p_i (x_i - xbar)^2, J)`.
/// Requires strictly positive weights; tight whenever `f` is `c*x^2` plus an
/// affine function.
pub fn lemma21_lower_bound(
    f: &StronglyConvexFunction,
    x: &PointVector,
    p: &WeightVector,
) -> Result<(f64, f64)> {
    p.require_strictly_positive()?;
    let functional = jensen_functional(f, x, p)?;
    let mean = barycenter(x.as_slice(), p.as_slice());
    let variance: f64 = x
        .as_slice()
        .iter()
        .zip(p.as_slice())
        .map(|(&xi, &pi)| pi * (xi - mean) * (xi - mean))
        .sum();
    Ok((f.modulus() * variance, functional))
}

/// The two-sided refinement of `J(f, x, p)` relative to a second, strictly
/// positive weight vector `q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Theorem22Bounds {
    pub lower: f64,
    /// `J(f, x, p)` itself.
    pub mid: f64,
    pub upper: f64,
    /// `min_i p_i / q_i`.
    pub ratio_min: f64,
    /// `max_i p_i / q_i`.
    pub ratio_max: f64,
}

/// Sandwich `J(f, x, p)` between curvature-corrected multiples of
/// `J(f, x, q)`:
///
/// ```text
/// lower = m*J(q) + c*( sum (p_i - m*q_i)(x_i - xbar_p)^2 + m*d^2 )
/// upper = M*J(q) - c*( sum (M*q_i - p_i)(x_i - xbar_q)^2 + d^2 )
/// ```
///
/// with `m`/`M` the extreme ratios `p_i/q_i` and `d = sum (p_i - q_i) x_i`.
/// Both corrections are non-negative by construction, so this always
/// tightens the classical `m*J(q) <= J(p) <= M*J(q)` sandwich.
pub fn theorem22_bounds(
    f: &StronglyConvexFunction,
    x: &PointVector,
    p: &WeightVector,
    q: &WeightVector,
) -> Result<Theorem22Bounds> {
    q.require_strictly_positive()?;
    if p.len() != q.len() {
        return Err(Error::LengthMismatch { expected: p.len(), got: q.len() });
    }
    check_compatible(f, x, p)?;
    let c = f.modulus();
    let (xs, ps, qs) = (x.as_slice(), p.as_slice(), q.as_slice());

    let mut ratio_min = f64::INFINITY;
    let mut ratio_max = f64::NEG_INFINITY;
    for (&pi, &qi) in ps.iter().zip(qs) {
        let ratio = pi / qi;
        ratio_min = ratio_min.min(ratio);
        ratio_max = ratio_max.max(ratio);
    }

    let functional_p = jensen_functional(f, x, p)?;
    let functional_q = jensen_functional(f, x, q)?;
    let mean_p = barycenter(xs, ps);
    let mean_q = barycenter(xs, qs);
    let drift: f64 = xs.iter().zip(ps.iter().zip(qs)).map(|(&xi, (&pi, &qi))| (pi - qi) * xi).sum();

    let mut lower_corr = ratio_min * drift * drift;
    let mut upper_corr = drift * drift;
    for (&xi, (&pi, &qi)) in xs.iter().zip(ps.iter().zip(qs)) {
        lower_corr += (pi - ratio_min * qi) * (xi - mean_p) * (xi - mean_p);
        upper_corr += (ratio_max * qi - pi) * (xi - mean_q) * (xi - mean_q);
    }

    Ok(Theorem22Bounds {
        lower: ratio_min * functional_q + c * lower_corr,
        mid: functional_p,
        upper: ratio_max * functional_q - c * upper_corr,
        ratio_min,
        ratio_max,
    })
}
