//! The named check registry behind `strongcvx run --checks ...`.
//!
//! Every public operation in the crate has one randomized verification here.
//! A check draws `cfg.trials` instances from its own deterministic RNG
//! stream (derived from the base seed and the check id), records ordered
//! `(lhs, rhs)` pairs into a [`TrialRecorder`], and returns one
//! [`VerificationReport`]. Every 100th trial is a *probe*: a deterministic
//! degenerate draw (equal points, `p = q`, eigenvector states, `t = 1`, ...)
//! whose inequality collapses to a known equality, so tightness is exercised
//! on every run, not just non-violation.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::funcs::{self, FStronglyConvexFunction, Interval, StronglyConvexFunction};
use crate::harness::config::RunConfig;
use crate::harness::report::{TrialRecorder, VerificationReport};
use crate::harness::sampling::{
    rng_for, sample_floored_weights, sample_points, sample_unit_vector, sample_weights,
    RNG_ALGORITHM,
};
use crate::jensen::{self, PointVector};
use crate::mercer;
use crate::operator::{
    self, apply_function, sample_hermitian, HermitianMatrix, SpectrumSpec, UnitVector,
};
use crate::young;

/// One registered check: a stable id (`module.operation`), a one-line
/// summary for `list-checks`, and the runner itself.
pub struct CheckDef {
    pub id: &'static str,
    pub summary: &'static str,
    pub run: fn(&RunConfig) -> Result<VerificationReport>,
}

/// Every check, in suite order.
pub const REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "funcs.builtin_catalog",
        summary: "catalog ids are unique; derivatives, moduli and penalties are consistent",
        run: run_funcs_catalog,
    },
    CheckDef {
        id: "funcs.check_strong_convexity",
        summary: "the defining chord inequality holds for every catalog function",
        run: run_funcs_strong_convexity,
    },
    CheckDef {
        id: "funcs.check_quadratic_support",
        summary: "quadratic support lines stay below every catalog function",
        run: run_funcs_quadratic_support,
    },
    CheckDef {
        id: "funcs.check_derivative_monotonicity",
        summary: "the derivative gap dominates twice the claimed modulus",
        run: run_funcs_derivative_monotonicity,
    },
    CheckDef {
        id: "funcs.check_f_strong_convexity",
        summary: "the generalized penalty inequality holds for the penalty catalog",
        run: run_funcs_f_strong_convexity,
    },
    CheckDef {
        id: "jensen.jensen_functional",
        summary: "the Jensen gap is non-negative on sampled convex combinations",
        run: run_jensen_functional,
    },
    CheckDef {
        id: "jensen.lemma21_lower_bound",
        summary: "the weighted-variance lower bound stays below the Jensen gap",
        run: run_jensen_lemma21,
    },
    CheckDef {
        id: "jensen.theorem22_bounds",
        summary: "the two-sided weight-ratio bounds sandwich the Jensen gap",
        run: run_jensen_theorem22,
    },
    CheckDef {
        id: "mercer.lambdas_of",
        summary: "endpoint coordinates reconstruct the points and stay inside [0, 1]",
        run: run_mercer_lambdas,
    },
    CheckDef {
        id: "mercer.lemma26_bound",
        summary: "reflected points obey the endpoint bound with curvature correction",
        run: run_mercer_lemma26,
    },
    CheckDef {
        id: "mercer.theorem27_bound",
        summary: "the reflected-barycenter bound and its refinement are ordered",
        run: run_mercer_theorem27,
    },
    CheckDef {
        id: "mercer.means_chain",
        summary: "the refined geometric mean sits between the reflected means",
        run: run_mercer_means_chain,
    },
    CheckDef {
        id: "young.kantorovich",
        summary: "K(t) >= 1 and K is invariant under t -> 1/t",
        run: run_young_kantorovich,
    },
    CheckDef {
        id: "young.remark23_bounds",
        summary: "the two-parameter ratio bounds sandwich the weighted-mean ratio",
        run: run_young_remark23,
    },
    CheckDef {
        id: "young.corollary25_bounds",
        summary: "the one-parameter ratio bounds hold and match the two-parameter form at mu = 1/2",
        run: run_young_corollary25,
    },
    CheckDef {
        id: "young.eq22_baseline",
        summary: "the native-scale mean sandwich holds",
        run: run_young_eq22,
    },
    CheckDef {
        id: "young.refinement_gain",
        summary: "the refined lower bound never loses to the classical one",
        run: run_young_refinement_gain,
    },
    CheckDef {
        id: "operator.eigh",
        summary: "spectral decompositions reconstruct, stay orthonormal and come sorted",
        run: run_operator_eigh,
    },
    CheckDef {
        id: "operator.apply_function",
        summary: "the functional calculus matches direct products and round-trips",
        run: run_operator_apply_function,
    },
    CheckDef {
        id: "operator.quadratic_form",
        summary: "quadratic forms agree across code paths and respect the Rayleigh bounds",
        run: run_operator_quadratic_form,
    },
    CheckDef {
        id: "operator.sample_hermitian",
        summary: "sampled matrices are exactly symmetric, spectrum-boxed and reproducible",
        run: run_operator_sample_hermitian,
    },
    CheckDef {
        id: "operator.theorem33_check",
        summary: "the variance-refined operator bound is ordered for the whole catalog",
        run: run_operator_theorem33,
    },
    CheckDef {
        id: "operator.holder_mccarthy_baseline",
        summary: "the power-mean comparison is oriented by the exponent",
        run: run_operator_hm_baseline,
    },
    CheckDef {
        id: "operator.holder_mccarthy_refined",
        summary: "the variance correction tightens the power-mean comparison",
        run: run_operator_hm_refined,
    },
    CheckDef {
        id: "operator.theorem35_chain",
        summary: "the seven-term interpolation chain is monotone",
        run: run_operator_theorem35,
    },
    CheckDef {
        id: "operator.theorem36_reverse",
        summary: "the state variance is capped by the derivative-based reverse bound",
        run: run_operator_theorem36,
    },
    CheckDef {
        id: "operator.eq43_fstrong_check",
        summary: "the penalty-matrix refinement holds and matches the variance path",
        run: run_operator_eq43,
    },
    CheckDef {
        id: "operator.theorem41_subunit_check",
        summary: "the refinement survives subunit states when f(0) <= 0",
        run: run_operator_theorem41,
    },
];

/// Look a check up by id.
pub fn find_check(id: &str) -> Result<&'static CheckDef> {
    REGISTRY
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCheck { id: id.to_string() })
}

/// Run the named checks in the order given. An empty list (or the single
/// word `all`) runs the whole registry in suite order. Unknown ids fail
/// before anything runs.
pub fn run_suite(ids: &[String], cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let defs: Vec<&CheckDef> = if ids.is_empty() || (ids.len() == 1 && ids[0] == "all") {
        REGISTRY.iter().collect()
    } else {
        ids.iter().map(|id| find_check(id)).collect::<Result<_>>()?
    };
    defs.into_iter().map(|def| (def.run)(cfg)).collect()
}

fn base_echo(cfg: &RunConfig) -> BTreeMap<String, String> {
    let mut echo = BTreeMap::new();
    echo.insert("trials".into(), cfg.trials.to_string());
    echo.insert("rng".into(), RNG_ALGORITHM.into());
    cfg.tol.echo_into(&mut echo);
    echo
}

fn catalog_echo(cfg: &RunConfig, ids: &[&str]) -> BTreeMap<String, String> {
    let mut echo = base_echo(cfg);
    echo.insert("functions".into(), ids.join(","));
    echo
}

fn dims_of(cfg: &RunConfig) -> Result<&[usize]> {
    if cfg.dims.is_empty() {
        return Err(Error::Config { what: "dims list must not be empty".into() });
    }
    Ok(&cfg.dims)
}

fn operator_echo(cfg: &RunConfig) -> BTreeMap<String, String> {
    let mut echo = base_echo(cfg);
    echo.insert(
        "dims".into(),
        cfg.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","),
    );
    echo
}

fn is_probe(trial: u64) -> bool {
    trial % 100 == 99
}

/// Spectrum box used when sampling a matrix for the given scalar function:
/// strictly inside the function's domain, with moderate magnitudes so that
/// powers stay well-conditioned.
pub fn spectrum_box_for(id: &str) -> (f64, f64) {
    if id.starts_with("neg_log") || id.starts_with("neg_pow_r") {
        (1e-3, 0.999)
    } else if id.starts_with("pow_r") {
        (1.001, 4.0)
    } else if id == "shifted_quad" {
        (-1.999, 1.999)
    } else if id == "quartic" {
        (1.001, 1.999)
    } else {
        (-4.0, 4.0)
    }
}

fn eigenvector_state(a: &HermitianMatrix, k: usize) -> Result<UnitVector> {
    let spectral = a.eigh()?;
    UnitVector::new(spectral.eigenvector(k % a.dim()).to_vec())
}

// ---------------------------------------------------------------------------
// funcs
// ---------------------------------------------------------------------------

fn run_funcs_catalog(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let f_catalog = funcs::builtin_f_catalog();
    let mut rec = TrialRecorder::new(cfg.tol);

    // Ids must be unique within each catalog.
    let mut ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    let mut f_ids: Vec<&str> = f_catalog.iter().map(|f| f.id()).collect();
    let total = ids.len() + f_ids.len();
    ids.sort_unstable();
    ids.dedup();
    f_ids.sort_unstable();
    f_ids.dedup();
    let duplicates = (total - ids.len() - f_ids.len()) as f64;
    rec.record(duplicates, 0.0, || "duplicate ids inside a builtin catalog".into());

    // Claimed moduli are non-negative (and finite, else the pair fails).
    for f in &catalog {
        rec.record(0.0, f.modulus(), || format!("modulus of {}", f.id()));
    }

    // Closed-form derivatives agree with central differences on an interior
    // grid of each sample box.
    let per_fn = (cfg.trials / total.max(1) as u64).clamp(8, 256) as usize;
    let grid = |lo: f64, hi: f64, k: usize| {
        lo + (hi - lo) * (0.005 + 0.99 * k as f64 / (per_fn - 1) as f64)
    };
    for f in &catalog {
        let (lo, hi) = f.sample_box()?;
        for k in 0..per_fn {
            let x = grid(lo, hi, k);
            let d = f.deriv(x)?;
            let h = 1e-6 * x.abs().max(1.0);
            let fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
            rec.record((fd - d).abs(), 1e-6 * (1.0 + d.abs()), || {
                format!("{}: derivative at x={x:?}", f.id())
            });
        }
    }
    for f in &f_catalog {
        let (lo, hi) = f.sample_box()?;
        let span = hi - lo;
        for k in 0..per_fn {
            let x = grid(lo, hi, k);
            let d = f.deriv(x)?;
            let h = 1e-6 * x.abs().max(1.0);
            let fd = (f.eval(x + h) - f.eval(x - h)) / (2.0 * h);
            rec.record((fd - d).abs(), 1e-6 * (1.0 + d.abs()), || {
                format!("{}: derivative at x={x:?}", f.id())
            });
            // Penalties vanish at zero and are non-negative on differences.
            let t = -span + 2.0 * span * k as f64 / (per_fn - 1) as f64;
            rec.record(0.0, f.penalty(t), || format!("{}: penalty at t={t:?}", f.id()));
        }
        rec.record(f.penalty(0.0).abs(), 0.0, || format!("{}: penalty at 0", f.id()));
    }

    let mut echo = base_echo(cfg);
    let mut all_ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    all_ids.extend(f_catalog.iter().map(|f| f.id()));
    echo.insert("functions".into(), all_ids.join(","));
    Ok(rec.into_report("funcs.builtin_catalog", cfg.seed, echo))
}

fn merged_over_catalog(
    cfg: &RunConfig,
    check_id: &str,
    run_one: impl Fn(&StronglyConvexFunction) -> Result<VerificationReport>,
) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let parts = catalog.iter().map(run_one).collect::<Result<Vec<_>>>()?;
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(VerificationReport::merged(check_id, cfg.seed, &parts, catalog_echo(cfg, &ids)))
}

fn run_funcs_strong_convexity(cfg: &RunConfig) -> Result<VerificationReport> {
    merged_over_catalog(cfg, "funcs.check_strong_convexity", |f| {
        funcs::check_strong_convexity(f, cfg.trials, cfg.seed, &cfg.tol)
    })
}

fn run_funcs_quadratic_support(cfg: &RunConfig) -> Result<VerificationReport> {
    merged_over_catalog(cfg, "funcs.check_quadratic_support", |f| {
        let (lo, hi) = f.sample_box()?;
        funcs::check_quadratic_support(f, 0.5 * (lo + hi), cfg.trials, cfg.seed, &cfg.tol)
    })
}

fn run_funcs_derivative_monotonicity(cfg: &RunConfig) -> Result<VerificationReport> {
    merged_over_catalog(cfg, "funcs.check_derivative_monotonicity", |f| {
        funcs::check_derivative_monotonicity(f, cfg.trials, cfg.seed, &cfg.tol)
    })
}

fn run_funcs_f_strong_convexity(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_f_catalog();
    let parts = catalog
        .iter()
        .map(|f| funcs::check_f_strong_convexity(f, cfg.trials, cfg.seed, &cfg.tol))
        .collect::<Result<Vec<_>>>()?;
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(VerificationReport::merged(
        "funcs.check_f_strong_convexity",
        cfg.seed,
        &parts,
        catalog_echo(cfg, &ids),
    ))
}

// ---------------------------------------------------------------------------
// jensen
// ---------------------------------------------------------------------------

fn run_jensen_functional(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let mut rng = rng_for(cfg.seed, "jensen.jensen_functional");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let (lo, hi) = f.sample_box()?;
        let n = 1 + trial as usize % 8;
        let points = if is_probe(trial) {
            vec![rng.gen_range(lo..=hi); n]
        } else {
            sample_points(n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, f.domain())?;
        let p = sample_weights(n, false, &mut rng)?;
        let gap = jensen::jensen_functional(f, &x, &p)?;
        rec.record(0.0, gap, || format!("{}: n={n}", f.id()));
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(rec.into_report("jensen.jensen_functional", cfg.seed, catalog_echo(cfg, &ids)))
}

fn run_jensen_lemma21(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let mut rng = rng_for(cfg.seed, "jensen.lemma21_lower_bound");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        // Both sides of this bound are near-cancelling differences of
        // f-sized terms, so cap the point box at width 3 to keep max|f|
        // moderate and the cancellation noise far under the tolerance floor.
        let (lo, hi) = f.sample_box()?;
        let hi = hi.min(lo + 3.0);
        let n = 2 + trial as usize % 7;
        let points = if is_probe(trial) {
            vec![rng.gen_range(lo..=hi); n]
        } else {
            sample_points(n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, f.domain())?;
        let p = sample_weights(n, true, &mut rng)?;
        let (lower, gap) = jensen::lemma21_lower_bound(f, &x, &p)?;
        rec.record(lower, gap, || format!("{}: n={n}", f.id()));
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(rec.into_report("jensen.lemma21_lower_bound", cfg.seed, catalog_echo(cfg, &ids)))
}

fn run_jensen_theorem22(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let mut rng = rng_for(cfg.seed, "jensen.theorem22_bounds");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        // These bounds rescale the reference gap by m = min p/q and
        // M = max p/q, so conditioning matters twice over: cap the point box
        // so max|f| stays moderate, and draw q with a floor so M stays small.
        // Otherwise M amplifies eps-level cancellation noise past the
        // tolerance floor on draws where the true slack is itself near zero.
        let (lo, hi) = f.sample_box()?;
        let hi = hi.min(lo + 3.0);
        let n = 2 + trial as usize % 7;
        let x = PointVector::new(sample_points(n, lo, hi, &mut rng), f.domain())?;
        let q = sample_floored_weights(n, &mut rng)?;
        // The probe collapses to p = q, where both corrections vanish and
        // all three quantities coincide exactly.
        let p = if is_probe(trial) { q.clone() } else { sample_weights(n, false, &mut rng)? };
        let b = jensen::theorem22_bounds(f, &x, &p, &q)?;
        rec.record_pairs(&[(b.lower, b.mid), (b.mid, b.upper)], || {
            format!("{}: n={n} m={:?} M={:?}", f.id(), b.ratio_min, b.ratio_max)
        });
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(rec.into_report("jensen.theorem22_bounds", cfg.seed, catalog_echo(cfg, &ids)))
}

// ---------------------------------------------------------------------------
// mercer
// ---------------------------------------------------------------------------

fn run_mercer_lambdas(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "mercer.lambdas_of");
    let mut rec = TrialRecorder::new(cfg.tol);
    let (lo, hi) = (-3.0, 7.0);
    for trial in 0..cfg.trials {
        let n = 1 + trial as usize % 8;
        let points = if is_probe(trial) {
            vec![rng.gen_range(lo..=hi); n]
        } else {
            sample_points(n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, Interval::all())?;
        let lambdas = mercer::lambdas_of(&x);
        let (mn, mx) = (x.min(), x.max());
        let scale = 1.0 + mn.abs().max(mx.abs());
        let mut reconstruction = 0.0f64;
        let mut l_min = 1.0f64;
        let mut l_max = 0.0f64;
        for (lambda, xi) in lambdas.iter().zip(x.as_slice()) {
            reconstruction = reconstruction.max((lambda * mn + (1.0 - lambda) * mx - xi).abs());
            l_min = l_min.min(*lambda);
            l_max = l_max.max(*lambda);
        }
        rec.record_pairs(
            &[(reconstruction, 1e-12 * scale), (0.0, l_min), (l_max, 1.0)],
            || format!("n={n} min={mn:?} max={mx:?}"),
        );
    }
    let mut echo = base_echo(cfg);
    echo.insert("points".into(), format!("uniform in [{lo}, {hi}], n in 1..=8"));
    Ok(rec.into_report("mercer.lambdas_of", cfg.seed, echo))
}

fn run_mercer_lemma26(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let mut rng = rng_for(cfg.seed, "mercer.lemma26_bound");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let (lo, hi) = f.sample_box()?;
        let n = 2 + trial as usize % 7;
        let x = PointVector::new(sample_points(n, lo, hi, &mut rng), f.domain())?;
        // Probing the minimal point sends the reflection to the right
        // endpoint, where the bound is tight for every function.
        let i = if is_probe(trial) {
            x.as_slice()
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.total_cmp(b.1))
                .map(|(k, _)| k)
                .unwrap_or(0)
        } else {
            rng.gen_range(0..n)
        };
        let (lhs, rhs) = mercer::lemma26_bound(f, &x, i)?;
        rec.record(lhs, rhs, || format!("{}: n={n} i={i}", f.id()));
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(rec.into_report("mercer.lemma26_bound", cfg.seed, catalog_echo(cfg, &ids)))
}

fn run_mercer_theorem27(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let mut rng = rng_for(cfg.seed, "mercer.theorem27_bound");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let (lo, hi) = f.sample_box()?;
        let n = 1 + trial as usize % 8;
        let points = if is_probe(trial) {
            vec![rng.gen_range(lo..=hi); n]
        } else {
            sample_points(n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, f.domain())?;
        let p = sample_weights(n, false, &mut rng)?;
        let b = mercer::theorem27_bound(f, &x, &p)?;
        rec.record_pairs(&[(b.lhs, b.refined_rhs), (b.refined_rhs, b.plain_rhs)], || {
            format!("{}: n={n}", f.id())
        });
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    Ok(rec.into_report("mercer.theorem27_bound", cfg.seed, catalog_echo(cfg, &ids)))
}

fn run_mercer_means_chain(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "mercer.means_chain");
    let mut rec = TrialRecorder::new(cfg.tol);
    let unit = Interval::open_closed(0.0, 1.0)?;
    let (lo, hi) = (1e-3, 1.0);
    for trial in 0..cfg.trials {
        let n = 1 + trial as usize % 8;
        let points = if is_probe(trial) {
            vec![rng.gen_range(lo..=hi); n]
        } else {
            sample_points(n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, unit)?;
        let p = sample_weights(n, false, &mut rng)?;
        let chain = mercer::means_chain(&x, &p)?;
        rec.record_pairs(&[(chain.g_tilde, chain.refined), (chain.refined, chain.a_tilde)], || {
            format!("n={n}")
        });
    }
    let mut echo = base_echo(cfg);
    echo.insert("points".into(), format!("uniform in [{lo}, {hi}], n in 1..=8"));
    Ok(rec.into_report("mercer.means_chain", cfg.seed, echo))
}

// ---------------------------------------------------------------------------
// young
// ---------------------------------------------------------------------------

fn run_young_kantorovich(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "young.kantorovich");
    let mut rec = TrialRecorder::new(cfg.tol);
    let (ln_lo, ln_hi) = ((1e-3f64).ln(), (1e3f64).ln());
    for trial in 0..cfg.trials {
        let t = if is_probe(trial) { 1.0 } else { rng.gen_range(ln_lo..=ln_hi).exp() };
        let k = young::kantorovich(t)?;
        let k_inv = young::kantorovich(1.0 / t)?;
        rec.record_pairs(&[(1.0, k), ((k - k_inv).abs(), 0.0)], || format!("t={t:?}"));
    }
    Ok(rec.into_report("young.kantorovich", cfg.seed, base_echo(cfg)))
}

fn run_young_remark23(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "young.remark23_bounds");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let a = rng.gen_range(1e-4..=1.0);
        let b = rng.gen_range(1e-4..=1.0);
        let mu = rng.gen_range(1e-3..=1.0 - 1e-3);
        // At lambda = mu both weight ratios are 1 and both corrections
        // vanish, so the sandwich collapses.
        let lambda = if is_probe(trial) { mu } else { rng.gen_range(0.0..=1.0) };
        let b23 = young::remark23_bounds(a, b, lambda, mu)?;
        rec.record_pairs(&[(b23.lower, b23.mid), (b23.mid, b23.upper)], || {
            format!("a={a:?} b={b:?} lambda={lambda:?} mu={mu:?}")
        });
    }
    Ok(rec.into_report("young.remark23_bounds", cfg.seed, base_echo(cfg)))
}

fn run_young_corollary25(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "young.corollary25_bounds");
    let mut rec = TrialRecorder::new(cfg.tol);
    let mut cross_max = 0.0f64;
    for trial in 0..cfg.trials {
        let a = rng.gen_range(1e-4..=1.0);
        let b = rng.gen_range(1e-4..=1.0);
        let lambda = if is_probe(trial) { 0.5 } else { rng.gen_range(0.0..=1.0) };
        let c25 = young::corollary25_bounds(a, b, lambda)?;
        // The one-parameter form must coincide with the two-parameter form
        // specialised to mu = 1/2, on every single draw.
        let r23 = young::remark23_bounds(a, b, lambda, 0.5)?;
        let scale = 1.0 + c25.upper.abs().max(r23.upper.abs());
        let d_lower = (c25.lower - r23.lower).abs();
        let d_upper = (c25.upper - r23.upper).abs();
        cross_max = cross_max.max(d_lower.max(d_upper));
        rec.record_pairs(
            &[
                (c25.lower, c25.mid),
                (c25.mid, c25.upper),
                (d_lower, 1e-9 * scale),
                (d_upper, 1e-9 * scale),
            ],
            || format!("a={a:?} b={b:?} lambda={lambda:?}"),
        );
    }
    let mut echo = base_echo(cfg);
    echo.insert("cross_check".into(), "two-parameter bounds at mu=1/2 on every draw".into());
    echo.insert("cross_check_max_diff".into(), format!("{cross_max:.3e}"));
    Ok(rec.into_report("young.corollary25_bounds", cfg.seed, echo))
}

fn run_young_eq22(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "young.eq22_baseline");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let a = rng.gen_range(1e-3..=4.0);
        let b = rng.gen_range(1e-3..=4.0);
        let lambda = if is_probe(trial) { 0.5 } else { rng.gen_range(0.0..=1.0) };
        let e = young::eq22_baseline(a, b, lambda)?;
        rec.record_pairs(&[(e.lower, e.mid), (e.mid, e.upper)], || {
            format!("a={a:?} b={b:?} lambda={lambda:?}")
        });
    }
    Ok(rec.into_report("young.eq22_baseline", cfg.seed, base_echo(cfg)))
}

fn run_young_refinement_gain(cfg: &RunConfig) -> Result<VerificationReport> {
    let mut rng = rng_for(cfg.seed, "young.refinement_gain");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let a = rng.gen_range(1e-4..=1.0);
        let b = rng.gen_range(1e-4..=1.0);
        let lambda = if is_probe(trial) { 0.5 } else { rng.gen_range(0.0..=1.0) };
        let g = young::refinement_gain(a, b, lambda)?;
        rec.record_pairs(&[(0.0, g.corollary_gap), (g.corollary_gap, g.baseline_gap)], || {
            format!("a={a:?} b={b:?} lambda={lambda:?}")
        });
    }
    let mut echo = base_echo(cfg);
    echo.insert("scale".into(), "ratio (gaps measured against the geometric mean)".into());
    Ok(rec.into_report("young.refinement_gain", cfg.seed, echo))
}

// ---------------------------------------------------------------------------
// operator
// ---------------------------------------------------------------------------

fn run_operator_eigh(cfg: &RunConfig) -> Result<VerificationReport> {
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.eigh");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let dim = dims[trial as usize % dims.len()];
        let spec = SpectrumSpec::new(dim, -5.0, 5.0)?;
        let seeded = sample_hermitian(&spec, &mut rng);
        let truth: Vec<f64> = seeded.eigh()?.eigenvalues().to_vec();
        // Rebuild from raw entries so eigh really runs instead of reusing
        // the decomposition cached at sampling time.
        let fresh = HermitianMatrix::new(dim, seeded.as_slice().to_vec())?;
        let spectral = fresh.eigh()?;
        let scale = fresh.frobenius_norm().max(1.0);
        let mut eig_diff = 0.0f64;
        let mut monotone = 0.0f64;
        for (ev, want) in spectral.eigenvalues().iter().zip(&truth) {
            eig_diff = eig_diff.max((ev - want).abs());
        }
        for pair in spectral.eigenvalues().windows(2) {
            monotone = monotone.max(pair[0] - pair[1]);
        }
        let mut residual = 0.0f64;
        let mut orthonormality = 0.0f64;
        for k in 0..dim {
            let v = spectral.eigenvector(k);
            let av = fresh.matvec(v)?;
            let mut r2 = 0.0;
            for i in 0..dim {
                let d = av[i] - spectral.eigenvalues()[k] * v[i];
                r2 += d * d;
            }
            residual = residual.max(r2.sqrt());
            for j in 0..=k {
                let dot: f64 =
                    spectral.eigenvector(j).iter().zip(v).map(|(a, b)| a * b).sum();
                let expected = if j == k { 1.0 } else { 0.0 };
                orthonormality = orthonormality.max((dot - expected).abs());
            }
        }
        rec.record_pairs(
            &[
                (eig_diff, 1e-10 * scale),
                (residual, 1e-11 * scale),
                (orthonormality, 1e-11),
                (monotone, 0.0),
            ],
            || format!("dim={dim}"),
        );
    }
    Ok(rec.into_report("operator.eigh", cfg.seed, operator_echo(cfg)))
}

fn run_operator_apply_function(cfg: &RunConfig) -> Result<VerificationReport> {
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.apply_function");
    let mut rec = TrialRecorder::new(cfg.tol);
    let positive = Interval::open(0.0, f64::INFINITY)?;
    for trial in 0..cfg.trials {
        let dim = dims[trial as usize % dims.len()];
        // Diagonal probes make every comparison exact up to a final ulp.
        let a = if is_probe(trial) {
            let d: Vec<f64> = (0..dim).map(|_| rng.gen_range(0.1..=3.0)).collect();
            HermitianMatrix::diag(&d)?
        } else {
            sample_hermitian(&SpectrumSpec::new(dim, 0.1, 3.0)?, &mut rng)
        };
        let scale = a.frobenius_norm().max(1.0);

        let squared = apply_function(&a, Interval::all(), |t| t * t)?;
        let direct = operator::matmul_raw(&a, &a)?;
        let mut d_square = 0.0f64;
        for (lhs, rhs) in squared.as_slice().iter().zip(&direct) {
            d_square = d_square.max((lhs - rhs).abs());
        }

        let identity_applied = apply_function(&a, Interval::all(), |t| t)?;
        let mut d_identity = 0.0f64;
        for (lhs, rhs) in identity_applied.as_slice().iter().zip(a.as_slice()) {
            d_identity = d_identity.max((lhs - rhs).abs());
        }

        let log = apply_function(&a, positive, f64::ln)?;
        let back = apply_function(&log, Interval::all(), f64::exp)?;
        let mut d_roundtrip = 0.0f64;
        for (lhs, rhs) in back.as_slice().iter().zip(a.as_slice()) {
            d_roundtrip = d_roundtrip.max((lhs - rhs).abs());
        }

        rec.record_pairs(
            &[
                (d_square, 1e-10 * (1.0 + scale * scale)),
                (d_identity, 1e-11 * scale),
                (d_roundtrip, 1e-10 * scale),
            ],
            || format!("dim={dim}"),
        );
    }
    Ok(rec.into_report("operator.apply_function", cfg.seed, operator_echo(cfg)))
}

fn run_operator_quadratic_form(cfg: &RunConfig) -> Result<VerificationReport> {
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.quadratic_form");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let dim = dims[trial as usize % dims.len()];
        let a = sample_hermitian(&SpectrumSpec::new(dim, -5.0, 5.0)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let q = a.quadratic_form(x.coords())?;
        let spectral = a.eigh()?;
        let q_spectral = spectral.quadratic_form_of(|t| t, x.coords())?;
        let (l_min, l_max) = (spectral.eigenvalues()[0], spectral.eigenvalues()[dim - 1]);
        let scale = 1.0 + l_min.abs().max(l_max.abs());
        rec.record_pairs(
            &[((q - q_spectral).abs(), 1e-11 * scale), (l_min, q), (q, l_max)],
            || format!("dim={dim}"),
        );
    }
    Ok(rec.into_report("operator.quadratic_form", cfg.seed, operator_echo(cfg)))
}

fn run_operator_sample_hermitian(cfg: &RunConfig) -> Result<VerificationReport> {
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.sample_hermitian");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let dim = dims[trial as usize % dims.len()];
        // The probe draws a one-point spectrum, which must come back as a
        // multiple of the identity with its eigenvalues hit exactly.
        let (lo, hi) = if is_probe(trial) {
            (2.5, 2.5)
        } else {
            let u: f64 = rng.gen_range(-6.0..=6.0);
            let v: f64 = rng.gen_range(-6.0..=6.0);
            (u.min(v), u.max(v))
        };
        let spec = SpectrumSpec::new(dim, lo, hi)?;
        let mut replay = rng.clone();
        let a = sample_hermitian(&spec, &mut rng);
        let spectral = a.eigh()?;
        let (l_min, l_max) = (spectral.eigenvalues()[0], spectral.eigenvalues()[dim - 1]);
        let scale = 1.0 + lo.abs().max(hi.abs());

        let mut asymmetry = 0.0f64;
        for i in 0..dim {
            for j in 0..i {
                asymmetry = asymmetry.max((a.get(i, j) - a.get(j, i)).abs());
            }
        }

        let fresh = HermitianMatrix::new(dim, a.as_slice().to_vec())?;
        let recomputed = fresh.eigh()?;
        let mut eig_diff = 0.0f64;
        for k in 0..dim {
            eig_diff =
                eig_diff.max((recomputed.eigenvalues()[k] - spectral.eigenvalues()[k]).abs());
        }

        let mut pairs = vec![
            (lo, l_min),
            (l_max, hi),
            (asymmetry, 0.0),
            (eig_diff, 1e-10 * scale),
        ];
        if trial % 10 == 0 {
            // Replaying the identical RNG state must reproduce the draw bit
            // for bit.
            let b = sample_hermitian(&spec, &mut replay);
            let identical = a.as_slice() == b.as_slice();
            pairs.push((if identical { 0.0 } else { 1.0 }, 0.0));
        }
        rec.record_pairs(&pairs, || format!("dim={dim} box=[{lo:?}, {hi:?}]"));
    }
    Ok(rec.into_report("operator.sample_hermitian", cfg.seed, operator_echo(cfg)))
}

fn run_operator_theorem33(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.theorem33_check");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let dim = dims[trial as usize % dims.len()];
        let (lo, hi) = spectrum_box_for(f.id());
        let a = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let r = operator::theorem33_check(f, &a, &x)?;
        rec.record_pairs(&[(r.lhs, r.refined_rhs), (r.refined_rhs, r.plain_rhs)], || {
            format!("{}: dim={dim}", f.id())
        });
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    let mut echo = operator_echo(cfg);
    echo.insert("functions".into(), ids.join(","));
    Ok(rec.into_report("operator.theorem33_check", cfg.seed, echo))
}

fn run_operator_hm_baseline(cfg: &RunConfig) -> Result<VerificationReport> {
    const EXPONENTS: [f64; 8] = [0.1, 0.5, 0.9, 1.0, 2.0, 2.5, 3.0, 5.0];
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.holder_mccarthy_baseline");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let r = EXPONENTS[trial as usize % EXPONENTS.len()];
        let dim = dims[trial as usize % dims.len()];
        let a = sample_hermitian(&SpectrumSpec::new(dim, 0.05, 4.0)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let (lhs, rhs) = operator::holder_mccarthy_baseline(r, &a, &x)?;
        rec.record(lhs, rhs, || format!("r={r:?} dim={dim}"));
    }
    let mut echo = operator_echo(cfg);
    echo.insert("exponents".into(), "0.1,0.5,0.9,1,2,2.5,3,5".into());
    Ok(rec.into_report("operator.holder_mccarthy_baseline", cfg.seed, echo))
}

fn run_operator_hm_refined(cfg: &RunConfig) -> Result<VerificationReport> {
    // (exponent, spectrum box): r >= 2 needs the spectrum above 1, the
    // fractional exponents need it inside the unit interval.
    const CONFIGS: [(f64, f64, f64); 7] = [
        (2.0, 1.001, 100.0),
        (2.5, 1.001, 100.0),
        (3.0, 1.001, 100.0),
        (5.0, 1.001, 100.0),
        (0.1, 1e-3, 0.999),
        (0.5, 1e-3, 0.999),
        (0.9, 1e-3, 0.999),
    ];
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.holder_mccarthy_refined");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let (r, lo, hi) = CONFIGS[trial as usize % CONFIGS.len()];
        let dim = dims[trial as usize % dims.len()];
        let a = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let h = operator::holder_mccarthy_refined(r, &a, &x)?;
        rec.record_pairs(
            &[(h.lhs, h.refined), (h.refined, h.classical), (h.lhs, h.classical)],
            || format!("r={r:?} dim={dim}"),
        );
    }
    let mut echo = operator_echo(cfg);
    echo.insert("exponents".into(), "2,2.5,3,5 on (1,100]; 0.1,0.5,0.9 on (0,1)".into());
    Ok(rec.into_report("operator.holder_mccarthy_refined", cfg.seed, echo))
}

fn run_operator_theorem35(cfg: &RunConfig) -> Result<VerificationReport> {
    // (nu, claimed modulus of f^nu on the spectral interval) for f = t^4 on
    // (1, inf): t^(4 nu) has modulus 0 for 4 nu <= 1, modulus
    // (4 nu)(4 nu - 1)/2 at the left end otherwise.
    const CONFIGS: [(f64, f64); 4] = [(0.0, 0.0), (0.25, 0.0), (0.5, 1.0), (1.0, 6.0)];
    let f = funcs::pow_r(4.0)?;
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.theorem35_chain");
    let mut rec = TrialRecorder::new(cfg.tol);
    // The claimed moduli are themselves pre-validated against the defining
    // inequality before any chain is sampled.
    for &(nu, power_modulus) in &CONFIGS {
        if nu > 0.0 {
            let power = StronglyConvexFunction::new(
                format!("pow_r:4^{nu}"),
                Interval::open(1.0, f64::INFINITY)?,
                power_modulus,
                move |t| t.powf(4.0 * nu),
            )?
            .with_sample_box(1.001, 4.0)?;
            let premise =
                funcs::check_strong_convexity(&power, 200, cfg.seed, &cfg.tol)?;
            rec.record(premise.violations as f64, 0.0, || {
                format!("claimed modulus {power_modulus} for nu={nu} rejected")
            });
        }
    }
    for trial in 0..cfg.trials {
        let (nu, power_modulus) = CONFIGS[trial as usize % CONFIGS.len()];
        let dim = dims[trial as usize % dims.len()];
        let a = sample_hermitian(&SpectrumSpec::new(dim, 1.001, 4.0)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let chain = operator::theorem35_chain(&f, nu, power_modulus, &a, &x)?;
        let pairs: Vec<(f64, f64)> =
            chain.terms.windows(2).map(|w| (w[0], w[1])).collect();
        rec.record_pairs(&pairs, || format!("nu={nu:?} c'={power_modulus:?} dim={dim}"));
    }
    let mut echo = operator_echo(cfg);
    echo.insert("function".into(), f.id().to_string());
    echo.insert("nu".into(), "0,0.25,0.5,1".into());
    Ok(rec.into_report("operator.theorem35_chain", cfg.seed, echo))
}

fn run_operator_theorem36(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_catalog();
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.theorem36_reverse");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        // Quadratics make the cap exact, so they double as the probe.
        let f = if is_probe(trial) {
            &catalog[catalog.len() - 1]
        } else {
            &catalog[trial as usize % catalog.len()]
        };
        let dim = dims[trial as usize % dims.len()];
        let (lo, hi) = spectrum_box_for(f.id());
        let a = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
        let x = sample_unit_vector(dim, false, &mut rng)?;
        let t = operator::theorem36_reverse(f, &a, &x)?;
        rec.record(t.variance, t.bound, || format!("{}: dim={dim}", f.id()));
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    let mut echo = operator_echo(cfg);
    echo.insert("functions".into(), ids.join(","));
    Ok(rec.into_report("operator.theorem36_reverse", cfg.seed, echo))
}

fn run_operator_eq43(cfg: &RunConfig) -> Result<VerificationReport> {
    let catalog = funcs::builtin_f_catalog();
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.eq43_fstrong_check");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let dim = dims[trial as usize % dims.len()];
        let (lo, hi) = spectrum_box_for(f.id());
        let a = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, false, &mut rng)?
        };
        let (lhs, rhs) = operator::eq43_fstrong_check(f, &a, &x)?;
        let mut pairs = vec![(lhs, rhs)];
        // Quadratic penalties F(t) = c t^2 must reproduce the refinement
        // computed through the variance path, across two different routes
        // through the code.
        if let Some(c) = f.id().strip_prefix("quad:").and_then(|s| s.parse::<f64>().ok()) {
            let g = funcs::quad(c)?;
            let variance_path = operator::theorem33_check(&g, &a, &x)?;
            let scale = 1.0 + rhs.abs().max(variance_path.refined_rhs.abs());
            pairs.push(((rhs - variance_path.refined_rhs).abs(), 1e-10 * scale));
        }
        rec.record_pairs(&pairs, || format!("{}: dim={dim}", f.id()));
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    let mut echo = operator_echo(cfg);
    echo.insert("functions".into(), ids.join(","));
    Ok(rec.into_report("operator.eq43_fstrong_check", cfg.seed, echo))
}

fn run_operator_theorem41(cfg: &RunConfig) -> Result<VerificationReport> {
    // Only catalog entries whose domain includes 0 with f(0) <= 0 qualify.
    let catalog: Vec<FStronglyConvexFunction> = funcs::builtin_f_catalog()
        .into_iter()
        .filter(|f| f.domain().contains(0.0) && f.eval(0.0) <= 0.0)
        .collect();
    if catalog.is_empty() {
        return Err(Error::Config {
            what: "no penalty-catalog entry admits subunit states".into(),
        });
    }
    let dims = dims_of(cfg)?;
    let mut rng = rng_for(cfg.seed, "operator.theorem41_subunit_check");
    let mut rec = TrialRecorder::new(cfg.tol);
    for trial in 0..cfg.trials {
        let f = &catalog[trial as usize % catalog.len()];
        let dim = dims[trial as usize % dims.len()];
        let (lo, hi) = spectrum_box_for(f.id());
        let a = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
        // The probe runs a full-norm eigenvector, where the statement
        // reduces to the unit-state refinement at an exact spectral point.
        let x = if is_probe(trial) {
            eigenvector_state(&a, trial as usize)?
        } else {
            sample_unit_vector(dim, true, &mut rng)?
        };
        let (lhs, rhs) = operator::theorem41_subunit_check(f, &a, &x)?;
        rec.record(lhs, rhs, || {
            format!("{}: dim={dim} norm={:?}", f.id(), x.norm())
        });
    }
    let ids: Vec<&str> = catalog.iter().map(|f| f.id()).collect();
    let mut echo = operator_echo(cfg);
    echo.insert("functions".into(), ids.join(","));
    Ok(rec.into_report("operator.theorem41_subunit_check", cfg.seed, echo))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg() -> RunConfig {
        RunConfig { trials: 60, dims: vec![1, 2, 3], ..RunConfig::default() }
    }

    #[test]
    fn registry_ids_are_unique_and_well_formed() {
        let mut ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), 28);
        for c in REGISTRY {
            assert!(c.id.contains('.'), "id {} should be module-qualified", c.id);
            assert!(!c.summary.is_empty());
        }
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }

    #[test]
    fn find_check_resolves_and_rejects() {
        assert_eq!(find_check("young.kantorovich").unwrap().id, "young.kantorovich");
        assert!(matches!(
            find_check("young.unknown"),
            Err(Error::UnknownCheck { .. })
        ));
    }

    #[test]
    fn every_check_passes_at_small_scale() {
        let cfg = quick_cfg();
        let reports = run_suite(&[], &cfg).unwrap();
        assert_eq!(reports.len(), REGISTRY.len());
        for (def, report) in REGISTRY.iter().zip(&reports) {
            assert_eq!(report.check_id, def.id);
            assert!(report.trials > 0, "{} recorded no trials", def.id);
            assert!(
                report.passed(),
                "{} violated: worst={:?} echo={:?}",
                def.id,
                report.worst_violation,
                report.config_echo
            );
        }
    }

    #[test]
    fn suite_accepts_the_all_keyword_and_explicit_order() {
        let cfg = quick_cfg();
        let all = run_suite(&["all".to_string()], &cfg).unwrap();
        assert_eq!(all.len(), REGISTRY.len());
        let two = run_suite(
            &["young.kantorovich".to_string(), "jensen.jensen_functional".to_string()],
            &cfg,
        )
        .unwrap();
        assert_eq!(two[0].check_id, "young.kantorovich");
        assert_eq!(two[1].check_id, "jensen.jensen_functional");
        assert!(matches!(
            run_suite(&["nope".to_string()], &cfg),
            Err(Error::UnknownCheck { .. })
        ));
    }

    #[test]
    fn reports_are_deterministic_across_runs() {
        let cfg = quick_cfg();
        let ids = vec![
            "jensen.theorem22_bounds".to_string(),
            "young.remark23_bounds".to_string(),
            "operator.theorem33_check".to_string(),
        ];
        let first = run_suite(&ids, &cfg).unwrap();
        let second = run_suite(&ids, &cfg).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn seeds_change_the_draws_but_not_the_verdict() {
        let mut cfg = quick_cfg();
        let first = run_suite(&["young.remark23_bounds".to_string()], &cfg).unwrap();
        cfg.seed = 1;
        let second = run_suite(&["young.remark23_bounds".to_string()], &cfg).unwrap();
        assert_ne!(first[0].min_slack, second[0].min_slack);
        assert!(first[0].passed() && second[0].passed());
    }

    #[test]
    fn probes_land_on_equality() {
        let cfg = RunConfig { trials: 200, dims: vec![2, 3], ..RunConfig::default() };
        for id in [
            "young.kantorovich",
            "jensen.theorem22_bounds",
            "mercer.theorem27_bound",
            "operator.theorem33_check",
        ] {
            let report = ((find_check(id).unwrap()).run)(&cfg).unwrap();
            assert!(
                report.equality_hits >= 2,
                "{id} probes missed equality: {} hits",
                report.equality_hits
            );
        }
    }

    #[test]
    fn operator_checks_reject_an_empty_dims_list() {
        let cfg = RunConfig { dims: vec![], ..RunConfig::default() };
        let err = (find_check("operator.eigh").unwrap().run)(&cfg).unwrap_err();
        assert!(matches!(err, Error::Config { .. }));
    }

    #[test]
    fn violation_draws_are_echoed_with_full_data() {
        // An overclaimed modulus must fail and leave the draw in the echo.
        let inflated = funcs::parse_func("neg_log:5").unwrap();
        let report =
            funcs::check_strong_convexity(&inflated, 500, 0, &crate::harness::ToleranceConfig::DEFAULT)
                .unwrap();
        assert!(report.violations > 0);
        assert!(report.config_echo.keys().any(|k| k.starts_with("violation_")));
    }
}
