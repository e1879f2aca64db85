//! Scalar strongly convex functions: domains, moduli and definition checks.
//!
//! A function `f` is strongly convex with modulus `c >= 0` on an interval
//! when for all `x`, `y` in the interval and `lambda` in `[0, 1]`:
//!
//! ```text
//! f(lambda*x + (1-lambda)*y) <= lambda*f(x) + (1-lambda)*f(y)
//!                               - c*lambda*(1-lambda)*(x-y)^2
//! ```
//!
//! Two equivalent views are verified by the checks in this module: the
//! quadratic support line `c*(x-x0)^2 + f'(x0)*(x-x0) + f(x0) <= f(x)` and
//! derivative monotonicity `(f'(x) - f'(y))*(x-y) >= 2c*(x-y)^2`. The
//! generalized form replaces `c*t^2` by an arbitrary non-negative penalty
//! `F(t)`; see [`FStronglyConvexFunction`].
//!
//! A modulus attached to a function is always a *claim*. Nothing here infers
//! moduli; the checks exist precisely to falsify inflated claims.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::harness::report::{TrialRecorder, VerificationReport};
use crate::harness::sampling::{self, RNG_ALGORITHM};
use crate::harness::tolerance::ToleranceConfig;

use rand::Rng;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A real interval with independently open or closed endpoints.
///
/// Infinite endpoints are allowed and must be open.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
    lo_open: bool,
    hi_open: bool,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, lo_open: bool, hi_open: bool) -> Result<Self> {
        let ok = lo < hi
            && !lo.is_nan()
            && !hi.is_nan()
            && (lo.is_finite() || lo_open)
            && (hi.is_finite() || hi_open);
        if !ok {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi, lo_open, hi_open })
    }

    /// `(lo, hi)`.
    pub fn open(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, true, true)
    }

    /// `[lo, hi]`.
    pub fn closed(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, false, false)
    }

    /// `(lo, hi]`.
    pub fn open_closed(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, true, false)
    }

    /// `[lo, hi)`.
    pub fn closed_open(lo: f64, hi: f64) -> Result<Self> {
        Self::new(lo, hi, false, true)
    }

    /// The whole real line.
    pub fn all() -> Self {
        Self { lo: f64::NEG_INFINITY, hi: f64::INFINITY, lo_open: true, hi_open: true }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_open { x > self.lo } else { x >= self.lo };
        let below = if self.hi_open { x < self.hi } else { x <= self.hi };
        above && below && !x.is_nan()
    }

    /// Membership in the interior, i.e. both endpoints treated as open.
    pub fn interior_contains(&self, x: f64) -> bool {
        x > self.lo && x < self.hi && !x.is_nan()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' },
        )
    }
}

/// A scalar function together with its domain and a claimed strong-convexity
/// modulus.
///
/// Construction never validates the claim; run
/// [`check_strong_convexity`] (or its two equivalent siblings) to test it.
#[derive(Clone)]
pub struct StronglyConvexFunction {
    id: String,
    domain: Interval,
    modulus: f64,
    eval: RealFn,
    deriv: Option<RealFn>,
    sample_box: Option<(f64, f64)>,
}

impl StronglyConvexFunction {
    pub fn new(
        id: impl Into<String>,
        domain: Interval,
        modulus: f64,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::InvalidParameter { what: "function id must not be empty".into() });
        }
        if !(modulus >= 0.0 && modulus.is_finite()) {
            return Err(Error::InvalidParameter {
                what: format!("modulus must be finite and >= 0, got {modulus}"),
            });
        }
        Ok(Self { id, domain, modulus, eval: Arc::new(eval), deriv: None, sample_box: None })
    }

    /// Attach the exact derivative.
    pub fn with_deriv(mut self, deriv: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.deriv = Some(Arc::new(deriv));
        self
    }

    /// Override the box random instances are drawn from. Must lie inside the
    /// domain; mandatory (directly or via a bounded domain) before any
    /// sampling-based check can run.
    pub fn with_sample_box(mut self, lo: f64, hi: f64) -> Result<Self> {
        // NaN endpoints fail the domain checks, so `lo >= hi` is enough here.
        if lo >= hi || !self.domain.contains(lo) || !self.domain.contains(hi) {
            return Err(Error::InvalidParameter {
                what: format!("sample box [{lo}, {hi}] must be ordered and inside {}", self.domain),
            });
        }
        self.sample_box = Some((lo, hi));
        Ok(self)
    }

    /// Replace the claimed modulus (it stays a claim).
    pub fn with_modulus(mut self, modulus: f64) -> Result<Self> {
        if !(modulus >= 0.0 && modulus.is_finite()) {
            return Err(Error::InvalidParameter {
                what: format!("modulus must be finite and >= 0, got {modulus}"),
            });
        }
        self.modulus = modulus;
        Ok(self)
    }

    pub fn with_id(mut self, id: impl Into<String>) -> Self {
        self.id = id.into();
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    /// Evaluate `f(x)`. Domain membership is the caller's responsibility;
    /// the inequality operations validate their inputs before calling this.
    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn has_deriv(&self) -> bool {
        self.deriv.is_some()
    }

    pub fn deriv(&self, x: f64) -> Result<f64> {
        match &self.deriv {
            Some(d) => Ok(d(x)),
            None => Err(Error::MissingDerivative { id: self.id.clone() }),
        }
    }

    /// The closed box sampling draws from: the explicit override if set,
    /// otherwise a bounded domain inset by `1e-6 * span` on open ends.
    pub fn sample_box(&self) -> Result<(f64, f64)> {
        if let Some(b) = self.sample_box {
            return Ok(b);
        }
        if self.domain.is_bounded() {
            let span = self.domain.hi() - self.domain.lo();
            let inset = 1e-6 * span;
            let lo = self.domain.lo() + if self.domain.lo_open { inset } else { 0.0 };
            let hi = self.domain.hi() - if self.domain.hi_open { inset } else { 0.0 };
            return Ok((lo, hi));
        }
        Err(Error::UnboundedSampleRegion { id: self.id.clone() })
    }

    /// Pair this function with the quadratic penalty `F(t) = c*t^2` built
    /// from its own modulus.
    pub fn with_quadratic_penalty(&self) -> FStronglyConvexFunction {
        let c = self.modulus;
        FStronglyConvexFunction {
            id: self.id.clone(),
            domain: self.domain,
            eval: Arc::clone(&self.eval),
            deriv: self.deriv.clone(),
            penalty: Arc::new(move |t| c * t * t),
            sample_box: self.sample_box,
        }
    }
}

impl fmt::Debug for StronglyConvexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StronglyConvexFunction")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .field("modulus", &self.modulus)
            .finish_non_exhaustive()
    }
}

/// The generalized notion: `f` together with a penalty `F` such that
///
/// ```text
/// f(lambda*x + (1-lambda)*y) <= lambda*f(x) + (1-lambda)*f(y)
///                               - lambda*(1-lambda)*F(x-y)
/// ```
///
/// `F(t) = c*t^2` recovers plain strong convexity.
#[derive(Clone)]
pub struct FStronglyConvexFunction {
    id: String,
    domain: Interval,
    eval: RealFn,
    deriv: Option<RealFn>,
    penalty: RealFn,
    sample_box: Option<(f64, f64)>,
}

impl FStronglyConvexFunction {
    pub fn new(
        id: impl Into<String>,
        domain: Interval,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
        penalty: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::InvalidParameter { what: "function id must not be empty".into() });
        }
        Ok(Self {
            id,
            domain,
            eval: Arc::new(eval),
            deriv: None,
            penalty: Arc::new(penalty),
            sample_box: None,
        })
    }

    pub fn with_deriv(mut self, deriv: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.deriv = Some(Arc::new(deriv));
        self
    }

    pub fn with_sample_box(mut self, lo: f64, hi: f64) -> Result<Self> {
        // NaN endpoints fail the domain checks, so `lo >= hi` is enough here.
        if lo >= hi || !self.domain.contains(lo) || !self.domain.contains(hi) {
            return Err(Error::InvalidParameter {
                what: format!("sample box [{lo}, {hi}] must be ordered and inside {}", self.domain),
            });
        }
        self.sample_box = Some((lo, hi));
        Ok(self)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.eval)(x)
    }

    pub fn deriv(&self, x: f64) -> Result<f64> {
        match &self.deriv {
            Some(d) => Ok(d(x)),
            None => Err(Error::MissingDerivative { id: self.id.clone() }),
        }
    }

    /// Evaluate the penalty `F(t)`. `F` is defined by its formula on all of
    /// the reals (penalties are applied to differences and shifted spectra).
    pub fn penalty(&self, t: f64) -> f64 {
        (self.penalty)(t)
    }

    pub fn sample_box(&self) -> Result<(f64, f64)> {
        if let Some(b) = self.sample_box {
            return Ok(b);
        }
        if self.domain.is_bounded() {
            let span = self.domain.hi() - self.domain.lo();
            let inset = 1e-6 * span;
            let lo = self.domain.lo() + if self.domain.lo_open { inset } else { 0.0 };
            let hi = self.domain.hi() - if self.domain.hi_open { inset } else { 0.0 };
            return Ok((lo, hi));
        }
        Err(Error::UnboundedSampleRegion { id: self.id.clone() })
    }
}

impl fmt::Debug for FStronglyConvexFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FStronglyConvexFunction")
            .field("id", &self.id)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// `-ln(x)` on `(0, 1]`, modulus `1/2`.
///
/// On this interval `f''(x)/2 = 1/(2x^2) >= 1/2`, and the bound is attained
/// at `x = 1`, so `1/2` is the best constant.
pub fn neg_log() -> StronglyConvexFunction {
    StronglyConvexFunction::new("neg_log", Interval::open_closed(0.0, 1.0).unwrap(), 0.5, |x| {
        -x.ln()
    })
    .unwrap()
    .with_deriv(|x| -1.0 / x)
    .with_sample_box(1e-6, 1.0)
    .unwrap()
}

/// `x^r` on `(1, inf)` for `r >= 2`, modulus `(r^2 - r)/2`.
pub fn pow_r(r: f64) -> Result<StronglyConvexFunction> {
    if !(r >= 2.0 && r.is_finite()) {
        return Err(Error::InvalidParameter { what: format!("pow_r requires r >= 2, got {r}") });
    }
    StronglyConvexFunction::new(
        format!("pow_r:{r}"),
        Interval::open(1.0, f64::INFINITY)?,
        (r * r - r) / 2.0,
        move |x| x.powf(r),
    )?
    .with_deriv(move |x| r * x.powf(r - 1.0))
    .with_sample_box(1.0 + 1e-6, 100.0)
}

/// `-x^r` on `(0, 1)` for `0 < r < 1`, modulus `(r - r^2)/2`.
pub fn neg_pow_r(r: f64) -> Result<StronglyConvexFunction> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::InvalidParameter {
            what: format!("neg_pow_r requires 0 < r < 1, got {r}"),
        });
    }
    StronglyConvexFunction::new(
        format!("neg_pow_r:{r}"),
        Interval::open(0.0, 1.0)?,
        (r - r * r) / 2.0,
        move |x| -x.powf(r),
    )?
    .with_deriv(move |x| -r * x.powf(r - 1.0))
    .with_sample_box(1e-6, 1.0 - 1e-6)
}

/// `c*x^2` on the whole line, modulus exactly `c`; every inequality in this
/// crate that carries a `c`-correction is tight on these.
pub fn quad(c: f64) -> Result<StronglyConvexFunction> {
    StronglyConvexFunction::new(format!("quad:{c}"), Interval::all(), c, move |x| c * x * x)?
        .with_deriv(move |x| 2.0 * c * x)
        .with_sample_box(-5.0, 5.0)
}

/// The default catalog used by the sampling checks.
pub fn builtin_catalog() -> Vec<StronglyConvexFunction> {
    vec![
        neg_log(),
        pow_r(2.0).unwrap(),
        pow_r(3.0).unwrap(),
        neg_pow_r(0.5).unwrap(),
        quad(1.0).unwrap(),
    ]
}

/// `f(t) = t^2 - 1` on `[-2, 2]` with penalty `F(t) = t^2`. The inequality
/// holds with equality for every `x`, `y`, `lambda`.
pub fn shifted_quad() -> FStronglyConvexFunction {
    FStronglyConvexFunction::new(
        "shifted_quad",
        Interval::closed(-2.0, 2.0).unwrap(),
        |t| t * t - 1.0,
        |t| t * t,
    )
    .unwrap()
    .with_deriv(|t| 2.0 * t)
}

/// `f(t) = t^4` on `[1, 2]` with penalty `F(t) = t^2`; here `f(t) - F(t)` is
/// convex on the interval, which is exactly the generalized condition.
pub fn quartic() -> FStronglyConvexFunction {
    FStronglyConvexFunction::new(
        "quartic",
        Interval::closed(1.0, 2.0).unwrap(),
        |t| t * t * t * t,
        |t| t * t,
    )
    .unwrap()
    .with_deriv(|t| 4.0 * t * t * t)
}

/// Catalog of generalized instances exercised by the penalty checks.
pub fn builtin_f_catalog() -> Vec<FStronglyConvexFunction> {
    vec![
        shifted_quad(),
        quartic(),
        quad(1.0).unwrap().with_quadratic_penalty(),
        quad(2.5).unwrap().with_quadratic_penalty(),
    ]
}

/// Resolve a catalog id of the form `neg_log`, `neg_log:<claimed_c>`,
/// `pow_r:<r>`, `neg_pow_r:<r>` or `quad:<c>`.
///
/// The optional `neg_log` parameter *overrides the claimed modulus*, which
/// is the supported way to watch a false claim fail its checks.
pub fn parse_func(id: &str) -> Result<StronglyConvexFunction> {
    let (name, param) = match id.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (id, None),
    };
    let parse = |p: &str| -> Result<f64> {
        p.parse::<f64>().map_err(|_| Error::InvalidParameter {
            what: format!("cannot parse numeric parameter {p:?} in function id {id:?}"),
        })
    };
    match (name, param) {
        ("neg_log", None) => Ok(neg_log()),
        ("neg_log", Some(p)) => Ok(neg_log().with_modulus(parse(p)?)?.with_id(id)),
        ("pow_r", Some(p)) => pow_r(parse(p)?),
        ("neg_pow_r", Some(p)) => neg_pow_r(parse(p)?),
        ("quad", Some(p)) => quad(parse(p)?),
        ("quad", None) => quad(1.0),
        _ => Err(Error::InvalidParameter { what: format!("unknown function id {id:?}") }),
    }
}

fn echo_common(
    f_id: &str,
    box_: (f64, f64),
    trials: u64,
    tol: &ToleranceConfig,
) -> std::collections::BTreeMap<String, String> {
    let mut echo = std::collections::BTreeMap::new();
    echo.insert("function".into(), f_id.to_string());
    echo.insert("sample_box".into(), format!("[{}, {}]", box_.0, box_.1));
    echo.insert("trials".into(), trials.to_string());
    echo.insert("rng".into(), RNG_ALGORITHM.into());
    tol.echo_into(&mut echo);
    echo
}

/// Sample `(x, y, lambda)` triples and test the defining inequality against
/// the claimed modulus. Every 100th trial collapses to `y = x`, which must
/// land on equality.
pub fn check_strong_convexity(
    f: &StronglyConvexFunction,
    trials: u64,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<VerificationReport> {
    let (lo, hi) = f.sample_box()?;
    let c = f.modulus();
    let mut rng = sampling::rng_for(seed, &format!("funcs.check_strong_convexity:{}", f.id()));
    let mut rec = TrialRecorder::new(*tol);
    for trial in 0..trials {
        let x = rng.gen_range(lo..=hi);
        let y = if trial % 100 == 99 { x } else { rng.gen_range(lo..=hi) };
        let lam: f64 = rng.gen_range(0.0..=1.0);
        let lhs = f.eval(lam * x + (1.0 - lam) * y);
        let rhs = lam * f.eval(x) + (1.0 - lam) * f.eval(y) - c * lam * (1.0 - lam) * (x - y) * (x - y);
        rec.record(lhs, rhs, || format!("x={x:?} y={y:?} lambda={lam:?}"));
    }
    Ok(rec.into_report(
        "funcs.check_strong_convexity",
        seed,
        echo_common(f.id(), (lo, hi), trials, tol),
    ))
}

/// Test the quadratic support line anchored at `x0` against sampled `x`.
/// Requires the derivative; `x0` must be interior to the domain.
pub fn check_quadratic_support(
    f: &StronglyConvexFunction,
    x0: f64,
    trials: u64,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<VerificationReport> {
    if !f.domain().interior_contains(x0) {
        return Err(Error::OutsideDomain { value: x0, domain: format!("interior of {}", f.domain()) });
    }
    let slope = f.deriv(x0)?;
    let (lo, hi) = f.sample_box()?;
    let c = f.modulus();
    let f0 = f.eval(x0);
    let mut rng = sampling::rng_for(seed, &format!("funcs.check_quadratic_support:{}", f.id()));
    let mut rec = TrialRecorder::new(*tol);
    for trial in 0..trials {
        let x = if trial % 100 == 99 { x0 } else { rng.gen_range(lo..=hi) };
        let d = x - x0;
        let support = c * d * d + slope * d + f0;
        rec.record(support, f.eval(x), || format!("x0={x0:?} x={x:?}"));
    }
    let mut echo = echo_common(f.id(), (lo, hi), trials, tol);
    echo.insert("x0".into(), format!("{x0}"));
    Ok(rec.into_report("funcs.check_quadratic_support", seed, echo))
}

/// Test `(f'(x) - f'(y))*(x - y) >= 2c*(x - y)^2` on sampled pairs.
pub fn check_derivative_monotonicity(
    f: &StronglyConvexFunction,
    trials: u64,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<VerificationReport> {
    if !f.has_deriv() {
        return Err(Error::MissingDerivative { id: f.id().to_string() });
    }
    let (lo, hi) = f.sample_box()?;
    let c = f.modulus();
    let mut rng =
        sampling::rng_for(seed, &format!("funcs.check_derivative_monotonicity:{}", f.id()));
    let mut rec = TrialRecorder::new(*tol);
    for trial in 0..trials {
        let x = rng.gen_range(lo..=hi);
        let y = if trial % 100 == 99 { x } else { rng.gen_range(lo..=hi) };
        let d = x - y;
        let lhs = 2.0 * c * d * d;
        let rhs = (f.deriv(x)? - f.deriv(y)?) * d;
        rec.record(lhs, rhs, || format!("x={x:?} y={y:?}"));
    }
    Ok(rec.into_report(
        "funcs.check_derivative_monotonicity",
        seed,
        echo_common(f.id(), (lo, hi), trials, tol),
    ))
}

/// Sample the generalized inequality with penalty `F`, and confirm the
/// penalty itself stays non-negative on every sampled difference.
pub fn check_f_strong_convexity(
    f: &FStronglyConvexFunction,
    trials: u64,
    seed: u64,
    tol: &ToleranceConfig,
) -> Result<VerificationReport> {
    let (lo, hi) = f.sample_box()?;
    let mut rng = sampling::rng_for(seed, &format!("funcs.check_f_strong_convexity:{}", f.id()));
    let mut rec = TrialRecorder::new(*tol);
    for trial in 0..trials {
        let x = rng.gen_range(lo..=hi);
        let y = if trial % 100 == 99 { x } else { rng.gen_range(lo..=hi) };
        let lam: f64 = rng.gen_range(0.0..=1.0);
        let lhs = f.eval(lam * x + (1.0 - lam) * y);
        let pen = f.penalty(x - y);
        let rhs = lam * f.eval(x) + (1.0 - lam) * f.eval(y) - lam * (1.0 - lam) * pen;
        rec.record_pairs(&[(lhs, rhs), (0.0, pen)], || format!("x={x:?} y={y:?} lambda={lam:?}"));
    }
    Ok(rec.into_report(
        "funcs.check_f_strong_convexity",
        seed,
        echo_common(f.id(), (lo, hi), trials, tol),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: ToleranceConfig = ToleranceConfig::DEFAULT;

    #[test]
    fn interval_membership_and_display() {
        let i = Interval::open_closed(0.0, 1.0).unwrap();
        assert!(i.contains(1.0));
        assert!(!i.contains(0.0));
        assert!(!i.interior_contains(1.0));
        assert!(i.interior_contains(0.5));
        assert_eq!(format!("{i}"), "(0, 1]");
        assert_eq!(format!("{}", Interval::all()), "(-inf, inf)");
        assert!(Interval::new(1.0, 1.0, false, false).is_err());
        assert!(Interval::new(0.0, f64::INFINITY, true, false).is_err());
        assert!(Interval::new(f64::NAN, 1.0, true, true).is_err());
    }

    #[test]
    fn catalog_ids_and_moduli() {
        let cat = builtin_catalog();
        let ids: Vec<&str> = cat.iter().map(|f| f.id()).collect();
        assert_eq!(ids, ["neg_log", "pow_r:2", "pow_r:3", "neg_pow_r:0.5", "quad:1"]);
        assert_eq!(cat[0].modulus(), 0.5);
        assert_eq!(cat[1].modulus(), 1.0);
        assert_eq!(cat[2].modulus(), 3.0);
        assert_eq!(cat[3].modulus(), 0.125);
        assert_eq!(cat[4].modulus(), 1.0);
    }

    #[test]
    fn parse_func_grammar() {
        assert_eq!(parse_func("pow_r:2.5").unwrap().modulus(), (2.5 * 2.5 - 2.5) / 2.0);
        assert_eq!(parse_func("quad:3").unwrap().modulus(), 3.0);
        let inflated = parse_func("neg_log:5").unwrap();
        assert_eq!(inflated.modulus(), 5.0);
        assert_eq!(inflated.id(), "neg_log:5");
        assert!(parse_func("pow_r:1.5").is_err());
        assert!(parse_func("neg_pow_r:1").is_err());
        assert!(parse_func("mystery").is_err());
        assert!(parse_func("pow_r:abc").is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(pow_r(f64::NAN).is_err());
        assert!(neg_pow_r(0.0).is_err());
        assert!(quad(-1.0).is_err());
        assert!(quad(f64::INFINITY).is_err());
        let f = neg_log();
        assert!(f.clone().with_sample_box(0.5, 0.5).is_err());
        assert!(f.clone().with_sample_box(0.5, 2.0).is_err());
        assert!(f.with_modulus(-2.0).is_err());
    }

    #[test]
    fn unbounded_domain_without_box_is_a_config_error() {
        let f = StronglyConvexFunction::new("bare_quad", Interval::all(), 1.0, |x| x * x).unwrap();
        match f.sample_box() {
            Err(Error::UnboundedSampleRegion { id }) => assert_eq!(id, "bare_quad"),
            other => panic!("expected UnboundedSampleRegion, got {other:?}"),
        }
    }

    #[test]
    fn missing_derivative_is_reported() {
        let f = StronglyConvexFunction::new("noderiv", Interval::closed(0.0, 1.0).unwrap(), 0.0, |x| x)
            .unwrap();
        assert!(matches!(f.deriv(0.5), Err(Error::MissingDerivative { .. })));
        assert!(matches!(
            check_derivative_monotonicity(&f, 10, 1, &TOL),
            Err(Error::MissingDerivative { .. })
        ));
    }

    #[test]
    fn support_point_must_be_interior() {
        let f = neg_log();
        // 1.0 is in the domain (0, 1] but not in its interior.
        assert!(matches!(
            check_quadratic_support(&f, 1.0, 10, 1, &TOL),
            Err(Error::OutsideDomain { .. })
        ));
    }

    #[test]
    fn support_line_value_at_frozen_point() {
        // f = -ln on (0,1], x0 = 0.5, x = 1: the support line evaluates to
        // c*(x-x0)^2 + f'(x0)*(x-x0) + f(x0) = 1/8 - 1 + ln 2.
        let f = neg_log();
        let support = 0.5 * 0.25 + f.deriv(0.5).unwrap() * 0.5 + f.eval(0.5);
        assert!((support - (-0.18185281944005469)).abs() < 1e-15);
        assert!(support <= f.eval(1.0));
    }

    #[test]
    fn definition_checks_pass_for_catalog_claims() {
        for f in builtin_catalog() {
            let r = check_strong_convexity(&f, 2_000, 7, &TOL).unwrap();
            assert_eq!(r.violations, 0, "{} claim failed: {r:?}", f.id());
            assert!(r.equality_hits >= 20, "{} saw {} equality hits", f.id(), r.equality_hits);
            let r = check_derivative_monotonicity(&f, 2_000, 7, &TOL).unwrap();
            assert_eq!(r.violations, 0, "{} derivative condition failed", f.id());
            let (lo, hi) = f.sample_box().unwrap();
            let x0 = 0.5 * (lo + hi);
            let r = check_quadratic_support(&f, x0, 2_000, 7, &TOL).unwrap();
            assert_eq!(r.violations, 0, "{} support condition failed", f.id());
        }
    }

    #[test]
    fn quadratics_meet_the_definition_with_equality() {
        // For f = c*x^2 the defining inequality is an identity, so the
        // recorded slacks must vanish to roundoff on every draw.
        let f = quad(1.0).unwrap();
        let r = check_strong_convexity(&f, 5_000, 11, &TOL).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.min_slack.abs() <= 1e-12 && r.max_slack.abs() <= 1e-12, "{r:?}");
        assert_eq!(r.equality_hits, 5_000);
    }

    #[test]
    fn inflated_modulus_claim_is_falsified() {
        // Claiming c = 5 for -ln on (0,1] is false: at (x, y, lambda) =
        // (0.5, 1, 0.5) the defining inequality fails by ~0.2536.
        let f = neg_log().with_modulus(5.0).unwrap();
        let lhs = f.eval(0.75);
        let rhs = 0.5 * f.eval(0.5) + 0.5 * f.eval(1.0) - 5.0 * 0.25 * 0.25;
        assert!((lhs - rhs - 0.25360848217180827).abs() < 1e-14);
        let r = check_strong_convexity(&f, 2_000, 3, &TOL).unwrap();
        assert!(r.violations > 0, "expected the false claim to be caught: {r:?}");
        assert!(r.worst_violation > 0.0);
        let r = check_derivative_monotonicity(&f, 2_000, 3, &TOL).unwrap();
        assert!(r.violations > 0);
    }

    #[test]
    fn derivative_matches_centered_differences() {
        for f in builtin_catalog() {
            let (lo, hi) = f.sample_box().unwrap();
            let span = hi - lo;
            let (glo, ghi) = (lo + 0.005 * span, hi - 0.005 * span);
            for k in 0..100 {
                let x = glo + (ghi - glo) * (k as f64) / 99.0;
                let h = 1e-6 * x.abs().max(1.0);
                let fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
                let d = f.deriv(x).unwrap();
                assert!(
                    (fd - d).abs() <= 1e-6 * (1.0 + d.abs()),
                    "{}: derivative mismatch at x={x}: exact {d}, fd {fd}",
                    f.id()
                );
            }
        }
    }

    #[test]
    fn penalty_instances_pass_and_quadratic_penalty_is_tight() {
        for f in builtin_f_catalog() {
            let r = check_f_strong_convexity(&f, 2_000, 13, &TOL).unwrap();
            assert_eq!(r.violations, 0, "{} failed: {r:?}", f.id());
        }
        // f = t^2 - 1 with F = t^2 satisfies the inequality with equality.
        let r = check_f_strong_convexity(&shifted_quad(), 2_000, 13, &TOL).unwrap();
        assert_eq!(r.violations, 0);
        assert!(r.min_slack.abs() <= 1e-12, "{r:?}");
    }

    #[test]
    fn quartic_dominates_its_penalty_convexly() {
        // Independent gridded certificate that g = f - F is midpoint convex
        // on [1, 2] for the quartic instance; this is the defining property
        // rather than a consequence of the sampled check above.
        let f = quartic();
        let g = |t: f64| f.eval(t) - f.penalty(t);
        for i in 0..50 {
            for j in 0..50 {
                let x = 1.0 + (i as f64) / 49.0;
                let y = 1.0 + (j as f64) / 49.0;
                assert!(g(0.5 * (x + y)) <= 0.5 * g(x) + 0.5 * g(y) + 1e-12);
            }
        }
    }
}
