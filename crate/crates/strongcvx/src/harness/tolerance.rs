//! The single comparison policy shared by every check in the crate.
//!
//! An ordered pair `lhs <= rhs` *passes* when
//! `lhs <= rhs + tol_abs + tol_rel * max(|lhs|, |rhs|)` and is a *violation*
//! otherwise. The signed slack `rhs - lhs` is what reports aggregate, and a
//! pair counts as an *equality hit* when the slack vanishes relative to the
//! magnitude of the pair.

use std::collections::BTreeMap;

/// Comparison tolerances, pinned once per run and echoed into every report.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceConfig {
    /// Absolute slack forgiven on every comparison.
    pub tol_abs: f64,
    /// Slack forgiven per unit of magnitude of the compared values.
    pub tol_rel: f64,
    /// Scale-relative threshold under which a slack counts as equality.
    pub equality_eps: f64,
}

impl ToleranceConfig {
    pub const DEFAULT: Self =
        Self { tol_abs: 1e-9, tol_rel: 1e-9, equality_eps: 1e-12 };

    /// The forgiven slack for a pair of this magnitude.
    pub fn margin(&self, lhs: f64, rhs: f64) -> f64 {
        self.tol_abs + self.tol_rel * lhs.abs().max(rhs.abs())
    }

    /// Signed slack of the claim `lhs <= rhs`; negative means the claim
    /// failed before tolerance is applied.
    pub fn slack(lhs: f64, rhs: f64) -> f64 {
        rhs - lhs
    }

    /// Does `lhs <= rhs` hold within tolerance?
    pub fn allows(&self, lhs: f64, rhs: f64) -> bool {
        !Self::slack(lhs, rhs).is_nan() && Self::slack(lhs, rhs) >= -self.margin(lhs, rhs)
    }

    /// Is the pair an equality within `equality_eps`, scaled by magnitude?
    pub fn is_equality(&self, lhs: f64, rhs: f64) -> bool {
        Self::slack(lhs, rhs).abs() <= self.equality_eps * (1.0 + lhs.abs().max(rhs.abs()))
    }

    pub(crate) fn echo_into(&self, echo: &mut BTreeMap<String, String>) {
        echo.insert("tol_abs".into(), format!("{}", self.tol_abs));
        echo.insert("tol_rel".into(), format!("{}", self.tol_rel));
        echo.insert("equality_eps".into(), format!("{}", self.equality_eps));
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self::DEFAULT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_policy_values() {
        let t = ToleranceConfig::default();
        assert_eq!(t.tol_abs, 1e-9);
        assert_eq!(t.tol_rel, 1e-9);
        assert_eq!(t.equality_eps, 1e-12);
    }

    #[test]
    fn margin_scales_with_magnitude() {
        let t = ToleranceConfig::DEFAULT;
        assert_eq!(t.margin(0.0, 0.0), 1e-9);
        assert!((t.margin(1e6, 0.0) - (1e-9 + 1e-3)).abs() < 1e-18);
        // A slack of -2e-9 fails at scale 0 but passes at scale 1e6.
        assert!(!t.allows(2e-9, 0.0));
        assert!(t.allows(1e6 + 2e-9, 1e6));
    }

    #[test]
    fn equality_is_scale_relative() {
        let t = ToleranceConfig::DEFAULT;
        assert!(t.is_equality(1.0, 1.0 + 1e-13));
        assert!(!t.is_equality(1.0, 1.0 + 1e-10));
        assert!(t.is_equality(1e6, 1e6 + 1e-7));
    }

    #[test]
    fn nan_never_passes() {
        let t = ToleranceConfig::DEFAULT;
        assert!(!t.allows(f64::NAN, 1.0));
        assert!(!t.allows(0.0, f64::NAN));
    }
}
