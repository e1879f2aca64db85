//! Young-type mean inequalities with Kantorovich-constant bounds and their
//! strongly convex refinements.
//!
//! Everything here works with two positive numbers `a, b` and an exponent
//! `lambda in [0, 1]`, comparing the arithmetic mean `lambda a + (1-lambda) b`
//! against the geometric mean `a^lambda b^(1-lambda)`. The classical sandwich
//! scales the geometric mean by powers of the Kantorovich constant
//! `K(t) = (t+1)^2 / (4t)`; the refinements multiply in an explicit
//! exponential correction derived from the strong convexity of `-ln`.
//!
//! [`remark23_bounds`] and [`corollary25_bounds`] state their sandwich on the
//! *ratio* scale (arithmetic over geometric mean, always `>= 1`), while
//! [`eq22_baseline`] states the unrefined sandwich on the native scale. All
//! exponential corrections are non-negative, so the refined bounds always
//! tighten the classical ones.

use crate::error::{Error, Result};

fn require_positive(what: &str, value: f64) -> Result<()> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Error::InvalidParameter { what: format!("{what} must be positive and finite, got {value}") });
    }
    Ok(())
}

fn require_unit(what: &str, value: f64, strict: bool) -> Result<()> {
    let inside = if strict { value > 0.0 && value < 1.0 } else { (0.0..=1.0).contains(&value) };
    if !(value.is_finite() && inside) {
        let band = if strict { "(0, 1)" } else { "[0, 1]" };
        return Err(Error::InvalidParameter { what: format!("{what} must lie in {band}, got {value}") });
    }
    Ok(())
}

/// The Kantorovich constant `K(t) = (t+1)^2 / (4t)` for `t > 0`.
///
/// `K(t) >= 1` with equality exactly at `t = 1`, and `K(t) = K(1/t)`.
pub fn kantorovich(t: f64) -> Result<f64> {
    require_positive("kantorovich argument", t)?;
    Ok((t + 1.0) * (t + 1.0) / (4.0 * t))
}

/// A lower/middle/upper sandwich together with the exponents that scale the
/// bounding quantity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct YoungBounds {
    pub lower: f64,
    pub mid: f64,
    pub upper: f64,
    /// Exponent on the bounding ratio in `lower` (`m`, or `r = min(lambda, 1-lambda)`).
    pub exponent_min: f64,
    /// Exponent on the bounding ratio in `upper` (`M`, or `R = max(lambda, 1-lambda)`).
    pub exponent_max: f64,
}

/// Refined two-parameter sandwich for the mean ratio, on the ratio scale.
///
/// Writes `Q(t) = (t a + (1-t) b) / (a^t b^(1-t))` and compares `Q(lambda)`
/// against powers of `Q(mu)`:
///
/// ```text
/// Q(mu)^m * exp(E_low) <= Q(lambda) <= Q(mu)^M / exp(E_up)
/// ```
///
/// with `m = min(lambda/mu, (1-lambda)/(1-mu))`, `M = max(...)` and
///
/// ```text
/// E_low = (b-a)^2/2 * [ (lambda - m mu)(lambda-1)^2
///                       + lambda^2 ((1-lambda) - m(1-mu)) + m (mu-lambda)^2 ]
/// E_up  = (b-a)^2/2 * [ (M mu - lambda)(mu-1)^2
///                       + mu^2 (M(1-mu) - (1-lambda)) + (mu-lambda)^2 ]
/// ```
///
/// Both corrections are non-negative by the choice of `m` and `M`. Requires
/// `mu` strictly inside `(0, 1)`; collapses to a triple equality at
/// `lambda = mu`.
///
/// The corrections encode curvature `1/2` per unit of squared gap on the
/// log scale, which is exactly the curvature available when both arguments
/// stay in `(0, 1]`; the sandwich is guaranteed there. For arguments above
/// 1 the encoded curvature overshoots the true one and the upper bound can
/// cross below the mid ratio (see `remark23_can_invert_above_one` in the
/// tests), so callers wanting a guarantee should rescale into the unit
/// interval first. The function still evaluates the formulas as written so
/// that such crossings can be observed and reported.
pub fn remark23_bounds(a: f64, b: f64, lambda: f64, mu: f64) -> Result<YoungBounds> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    require_unit("lambda", lambda, false)?;
    require_unit("mu", mu, true)?;

    let m = (lambda / mu).min((1.0 - lambda) / (1.0 - mu));
    let big_m = (lambda / mu).max((1.0 - lambda) / (1.0 - mu));
    let q_ratio = (mu * a + (1.0 - mu) * b) / (a.powf(mu) * b.powf(1.0 - mu));
    let mid = (lambda * a + (1.0 - lambda) * b) / (a.powf(lambda) * b.powf(1.0 - lambda));
    let gap2 = (b - a) * (b - a);
    let e_low = gap2 / 2.0
        * ((lambda - m * mu) * (lambda - 1.0) * (lambda - 1.0)
            + lambda * lambda * ((1.0 - lambda) - m * (1.0 - mu))
            + m * (mu - lambda) * (mu - lambda));
    let e_up = gap2 / 2.0
        * ((big_m * mu - lambda) * (mu - 1.0) * (mu - 1.0)
            + mu * mu * (big_m * (1.0 - mu) - (1.0 - lambda))
            + (mu - lambda) * (mu - lambda));

    Ok(YoungBounds {
        lower: q_ratio.powf(m) * e_low.exp(),
        mid,
        upper: q_ratio.powf(big_m) / e_up.exp(),
        exponent_min: m,
        exponent_max: big_m,
    })
}

/// Refined Kantorovich sandwich for the mean ratio, on the ratio scale.
///
/// With `r = min(lambda, 1-lambda)`, `R = max(lambda, 1-lambda)` and
/// `K = kantorovich(a/b)`:
///
/// ```text
/// K^r * exp(E_low) <= (lambda a + (1-lambda) b) / (a^lambda b^(1-lambda))
///                  <= K^R / exp(E_up)
/// E_low = (b-a)^2/2 * [ (lambda-r)(lambda-1)^2 + lambda^2((1-lambda)-r)
///                       + r/2 (1-2 lambda)^2 ]
/// E_up  = (b-a)^2/8 * [ (R-lambda) + (R-(1-lambda)) + (1-2 lambda)^2 ]
/// ```
///
/// This is exactly [`remark23_bounds`] specialised to `mu = 1/2`; the two
/// code paths agree to rounding error. Triple equality at `lambda = 1/2` or
/// `a = b`. Shares the validity region of the two-parameter form: the
/// sandwich is guaranteed for arguments in `(0, 1]` and best-effort above.
pub fn corollary25_bounds(a: f64, b: f64, lambda: f64) -> Result<YoungBounds> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    require_unit("lambda", lambda, false)?;

    let r = lambda.min(1.0 - lambda);
    let big_r = lambda.max(1.0 - lambda);
    let k = kantorovich(a / b)?;
    let mid = (lambda * a + (1.0 - lambda) * b) / (a.powf(lambda) * b.powf(1.0 - lambda));
    let gap2 = (b - a) * (b - a);
    let centered = (1.0 - 2.0 * lambda) * (1.0 - 2.0 * lambda);
    let e_low = gap2 / 2.0
        * ((lambda - r) * (lambda - 1.0) * (lambda - 1.0)
            + lambda * lambda * ((1.0 - lambda) - r)
            + r / 2.0 * centered);
    let e_up = gap2 / 8.0 * ((big_r - lambda) + (big_r - (1.0 - lambda)) + centered);

    Ok(YoungBounds {
        lower: k.powf(r) * e_low.exp(),
        mid,
        upper: k.powf(big_r) / e_up.exp(),
        exponent_min: r,
        exponent_max: big_r,
    })
}

/// Unrefined Kantorovich sandwich on the native scale:
///
/// ```text
/// K^r * a^lambda b^(1-lambda) <= lambda a + (1-lambda) b
///                             <= K^R * a^lambda b^(1-lambda)
/// ```
pub fn eq22_baseline(a: f64, b: f64, lambda: f64) -> Result<YoungBounds> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    require_unit("lambda", lambda, false)?;

    let r = lambda.min(1.0 - lambda);
    let big_r = lambda.max(1.0 - lambda);
    let k = kantorovich(a / b)?;
    let geometric = a.powf(lambda) * b.powf(1.0 - lambda);
    Ok(YoungBounds {
        lower: k.powf(r) * geometric,
        mid: lambda * a + (1.0 - lambda) * b,
        upper: k.powf(big_r) * geometric,
        exponent_min: r,
        exponent_max: big_r,
    })
}

/// How much the refined lower bound closes the classical gap, measured on a
/// common scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RefinementGain {
    /// `mid - lower` from [`corollary25_bounds`] (ratio scale).
    pub corollary_gap: f64,
    /// `(mid - lower) / (a^lambda b^(1-lambda))` from [`eq22_baseline`],
    /// i.e. the classical gap brought onto the same ratio scale.
    pub baseline_gap: f64,
}

impl RefinementGain {
    /// `baseline_gap - corollary_gap`; non-negative because the refined lower
    /// bound multiplies the classical `K^r` by `exp(E_low) >= 1`.
    pub fn gain(&self) -> f64 {
        self.baseline_gap - self.corollary_gap
    }
}

/// Compares the refined and classical lower-bound gaps at the same inputs.
///
/// Both gaps are expressed on the ratio scale so they are directly
/// comparable: the refined gap is `mid_ratio - K^r exp(E_low)` and the
/// classical one is `mid_ratio - K^r`, so the gain equals
/// `K^r (exp(E_low) - 1) >= 0`.
pub fn refinement_gain(a: f64, b: f64, lambda: f64) -> Result<RefinementGain> {
    let refined = corollary25_bounds(a, b, lambda)?;
    let baseline = eq22_baseline(a, b, lambda)?;
    let geometric = a.powf(lambda) * b.powf(1.0 - lambda);
    Ok(RefinementGain {
        corollary_gap: refined.mid - refined.lower,
        baseline_gap: (baseline.mid - baseline.lower) / geometric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kantorovich_basics() {
        assert_eq!(kantorovich(1.0).unwrap(), 1.0);
        assert_eq!(kantorovich(0.25).unwrap(), 1.5625);
        assert!((kantorovich(0.25).unwrap() - kantorovich(4.0).unwrap()).abs() < 1e-15);
        assert!(kantorovich(0.0).is_err());
        assert!(kantorovich(-2.0).is_err());
        assert!(kantorovich(f64::INFINITY).is_err());
    }

    #[test]
    fn remark23_frozen_values() {
        let b = remark23_bounds(0.25, 1.0, 0.3, 0.5).unwrap();
        assert!((b.lower - 1.162718887163938).abs() < 1e-15);
        assert!((b.mid - 1.1746803390455585).abs() < 1e-15);
        assert!((b.upper - 1.3139343696746747).abs() < 1e-15);
        assert!((b.exponent_min - 0.6).abs() < 1e-15);
        assert!((b.exponent_max - 1.4).abs() < 1e-15);
        assert!(b.lower <= b.mid && b.mid <= b.upper);
    }

    #[test]
    fn remark23_collapses_at_lambda_equals_mu() {
        let b = remark23_bounds(0.2, 0.9, 0.35, 0.35).unwrap();
        assert!((b.lower - b.mid).abs() < 1e-14);
        assert!((b.upper - b.mid).abs() < 1e-14);
        assert_eq!(b.exponent_min, 1.0);
        assert_eq!(b.exponent_max, 1.0);
    }

    #[test]
    fn remark23_validates_parameters() {
        assert!(remark23_bounds(0.0, 1.0, 0.5, 0.5).is_err());
        assert!(remark23_bounds(1.0, -1.0, 0.5, 0.5).is_err());
        assert!(remark23_bounds(1.0, 2.0, 1.5, 0.5).is_err());
        assert!(remark23_bounds(1.0, 2.0, 0.5, 0.0).is_err());
        assert!(remark23_bounds(1.0, 2.0, 0.5, 1.0).is_err());
        // lambda at the closed endpoints is allowed.
        assert!(remark23_bounds(1.0, 2.0, 0.0, 0.5).is_ok());
        assert!(remark23_bounds(1.0, 2.0, 1.0, 0.5).is_ok());
    }

    #[test]
    fn corollary25_frozen_values() {
        let b = corollary25_bounds(0.25, 1.0, 0.3).unwrap();
        assert!((b.lower - 1.162718887163938).abs() < 1e-15);
        assert!((b.mid - 1.1746803390455585).abs() < 1e-15);
        assert!((b.upper - 1.3139343696746747).abs() < 1e-15);
        assert_eq!(b.exponent_min, 0.3);
        assert_eq!(b.exponent_max, 0.7);
    }

    #[test]
    fn corollary25_matches_remark23_at_mu_half() {
        let grid_ab = [0.05, 0.25, 0.4, 0.9, 1.0, 2.5];
        let grid_lambda = [0.0, 0.1, 0.3, 0.5, 0.62, 0.9, 1.0];
        for &a in &grid_ab {
            for &b in &grid_ab {
                for &lambda in &grid_lambda {
                    let via_mu = remark23_bounds(a, b, lambda, 0.5).unwrap();
                    let direct = corollary25_bounds(a, b, lambda).unwrap();
                    let scale = 1.0 + direct.mid.abs();
                    assert!(
                        (via_mu.lower - direct.lower).abs() < 1e-12 * scale,
                        "lower mismatch at a={a} b={b} lambda={lambda}"
                    );
                    assert!(
                        (via_mu.upper - direct.upper).abs() < 1e-12 * scale,
                        "upper mismatch at a={a} b={b} lambda={lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn corollary25_collapses_at_midpoint_and_equal_arguments() {
        let b = corollary25_bounds(0.25, 1.0, 0.5).unwrap();
        assert!((b.lower - b.mid).abs() < 1e-14);
        assert!((b.upper - b.mid).abs() < 1e-14);
        let e = corollary25_bounds(0.7, 0.7, 0.3).unwrap();
        assert!((e.lower - 1.0).abs() < 1e-14);
        assert!((e.mid - 1.0).abs() < 1e-14);
        assert!((e.upper - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eq22_frozen_values() {
        let b = eq22_baseline(1.0, 4.0, 0.25).unwrap();
        assert!((b.lower - 3.162277660168379).abs() < 1e-14);
        assert_eq!(b.mid, 3.25);
        assert!((b.upper - 3.952847075210474).abs() < 1e-14);

        let m = eq22_baseline(0.25, 1.0, 0.5).unwrap();
        assert!((m.lower - 0.625).abs() < 1e-15);
        assert_eq!(m.mid, 0.625);
        assert!((m.upper - 0.625).abs() < 1e-15);
    }

    #[test]
    fn gain_is_non_negative_and_consistent() {
        let g = refinement_gain(0.25, 1.0, 0.3).unwrap();
        let refined = corollary25_bounds(0.25, 1.0, 0.3).unwrap();
        assert!((g.corollary_gap - (refined.mid - refined.lower)).abs() < 1e-15);
        assert!(g.gain() >= 0.0);
        // gain = K^r (exp(E_low) - 1), recovered from the two lower bounds.
        let k_r = eq22_baseline(0.25, 1.0, 0.3).unwrap().lower
            / (0.25f64.powf(0.3) * 1.0f64.powf(0.7));
        assert!((g.gain() - (refined.lower - k_r)).abs() < 1e-13);
    }

    #[test]
    fn remark23_can_invert_above_one() {
        // The ratio-scale corrections assume the curvature available on
        // (0, 1]. With an argument above 1 they overshoot, and the printed
        // upper bound can dip below the mid ratio. Frozen counterexample
        // found by sampling; it documents why the guarantee is stated for
        // the unit box only.
        let r = remark23_bounds(1.4451065477964233, 0.001, 0.5352814344543685, 0.6585909224617454)
            .unwrap();
        assert!(r.lower <= r.mid);
        assert!(r.mid > r.upper, "expected inversion: mid={} upper={}", r.mid, r.upper);
        // Clamping the large argument back to 1 restores the ordering.
        let ok = remark23_bounds(1.0, 0.001, 0.5352814344543685, 0.6585909224617454).unwrap();
        assert!(ok.lower <= ok.mid && ok.mid <= ok.upper);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(400))]

            #[test]
            fn sandwiches_hold_on_the_unit_box(
                // (0, 1] is the region where the ratio-scale corrections
                // are honest about the available curvature.
                a in 1e-3f64..=1.0,
                b in 1e-3f64..=1.0,
                lambda in 0.0f64..=1.0,
                mu in 1e-3f64..0.999,
            ) {
                let tol = 1e-11;
                let r23 = remark23_bounds(a, b, lambda, mu).unwrap();
                prop_assert!(r23.lower <= r23.mid + tol);
                prop_assert!(r23.mid <= r23.upper + tol);
                let c25 = corollary25_bounds(a, b, lambda).unwrap();
                prop_assert!(c25.lower <= c25.mid + tol);
                prop_assert!(c25.mid <= c25.upper + tol);
                let base = eq22_baseline(a, b, lambda).unwrap();
                prop_assert!(base.lower <= base.mid + tol);
                prop_assert!(base.mid <= base.upper + tol);
                let gain = refinement_gain(a, b, lambda).unwrap();
                prop_assert!(gain.gain() >= -tol);
            }
        }
    }
}
