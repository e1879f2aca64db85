//! Numerical toolkit for inequalities driven by strong convexity.
//!
//! A function is *strongly convex with modulus `c`* when its chords beat the
//! function value by at least `c * lambda * (1 - lambda) * (x - y)^2`. That
//! quadratic cushion turns the classical convexity inequalities — Jensen,
//! Jensen–Mercer, Young, and their operator versions — into *quantified*
//! statements with explicit, computable correction terms. This crate
//! computes both sides of each such statement exactly and verifies the
//! claimed orderings by reproducible randomized sampling.
//!
//! The crate is organized around five inequality families:
//!
//! * [`funcs`] — strongly convex functions as first-class values: a small
//!   catalog (`-ln x`, `x^r`, `-x^r`, `c x^2`), claimed moduli, derivatives,
//!   sample boxes, and sampling checks for the defining inequalities.
//! * [`jensen`] — the Jensen gap `sum p_i f(x_i) - f(sum p_i x_i)`, its
//!   weighted-variance lower bound, and two-sided bounds that compare the
//!   gap under one weight vector against the gap under another.
//! * [`mercer`] — reflected-point ("Jensen–Mercer") bounds: endpoint
//!   coordinates, the reflected-barycenter inequality with its curvature
//!   refinement, and the induced chain between reflected arithmetic and
//!   geometric means.
//! * [`young`] — scalar two-point bounds: the Kantorovich constant
//!   `K(t) = (t + 1)^2 / (4 t)` and refined Young-type sandwiches for
//!   weighted means, on ratio and native scales.
//! * [`operator`] — finite-dimensional operator versions: real symmetric
//!   matrices, a Jacobi eigensolver, spectral functional calculus, and the
//!   variance-refined operator Jensen inequalities, including power-function
//!   refinements, a seven-term interpolation chain, an additive reverse
//!   bound, penalty-function generalizations and subunit states.
//!
//! The [`harness`] module ties the families together: every public
//! operation has a named check in [`harness::REGISTRY`], runnable from the
//! `strongcvx` binary (`strongcvx run --checks all`), with deterministic
//! per-check RNG streams, explicit tolerances, equality probes, and
//! reports in text, JSON or CSV.
//!
//! # Example
//!
//! ```
//! use strongcvx::funcs;
//! use strongcvx::jensen::{self, PointVector, WeightVector};
//!
//! // -ln x is strongly convex with modulus 1/2 on (0, 1].
//! let f = funcs::neg_log();
//! let x = PointVector::new(vec![0.5, 1.0], f.domain())?;
//! let p = WeightVector::uniform(2)?;
//!
//! // The Jensen gap dominates the weighted variance times the modulus.
//! let (lower, gap) = jensen::lemma21_lower_bound(&f, &x, &p)?;
//! assert!(lower <= gap);
//! assert_eq!(lower, 0.03125);
//! # Ok::<(), strongcvx::Error>(())
//! ```

pub mod error;
pub mod funcs;
pub mod guide;
pub mod harness;
pub mod jensen;
pub mod mercer;
pub mod operator;
pub mod young;

pub use error::{Error, Result};
