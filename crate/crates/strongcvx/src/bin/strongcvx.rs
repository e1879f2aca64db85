//! The `strongcvx` command line: every verification in the crate as a
//! reproducible, seeded run.
//!
//! Exit codes: `0` when everything requested ran with zero violations, `2`
//! when at least one violation was recorded, `1` on usage, configuration or
//! runtime errors. Reports are emitted deterministically — the same
//! arguments and seed always produce byte-identical output.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rand::Rng;

use strongcvx::funcs::{self, FStronglyConvexFunction, StronglyConvexFunction};
use strongcvx::harness::{
    emit_report, parse_config_text, rng_for, run_suite, sample_floored_weights, sample_points,
    sample_unit_vector, sample_weights, spectrum_box_for, ReportFormat, RunConfig,
    ToleranceConfig, TrialRecorder, VerificationReport, REGISTRY, RNG_ALGORITHM,
};
use strongcvx::jensen::{self, PointVector};
use strongcvx::mercer;
use strongcvx::operator::{
    self, format_matrix, parse_matrix, sample_hermitian, HermitianMatrix, SpectrumSpec,
    UnitVector,
};
use strongcvx::young;
use strongcvx::{Error, Result};

#[derive(Parser)]
#[command(
    name = "strongcvx",
    version,
    about = "Numerical verification of strong-convexity refinements",
    long_about = "Runs seeded randomized checks of the crate's inequality \
                  catalog: Jensen-gap bounds, reflected-point bounds, \
                  weighted-mean ratio bounds and their operator versions. \
                  Exit codes: 0 = no violations, 2 = violations found, \
                  1 = usage or configuration errors."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every registered check id with a one-line summary.
    ListChecks,
    /// Run registered checks and emit a JSON or CSV report.
    Run(RunArgs),
    /// Focused Jensen-gap run for one function and point count.
    Jensen(ScalarArgs),
    /// Focused reflected-point (endpoint) run for one function.
    Mercer(ScalarArgs),
    /// Weighted-mean ratio bounds: single evaluation or property run.
    Young(YoungArgs),
    /// Operator inequalities for one configuration, with matrix I/O.
    Operator(OperatorArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Comma-separated check ids; the word `all` runs the whole registry.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    /// Trials per check (cycling checks spread them over their catalog).
    #[arg(long)]
    trials: Option<u64>,
    /// Base seed; each check derives its own stream from it.
    #[arg(long)]
    seed: Option<u64>,
    /// Absolute tolerance forgiven on every comparison.
    #[arg(long)]
    tol_abs: Option<f64>,
    /// Relative tolerance per unit of magnitude.
    #[arg(long)]
    tol_rel: Option<f64>,
    /// Matrix dimensions cycled by the operator checks, e.g. 2,3,8.
    #[arg(long, value_delimiter = ',')]
    dims: Option<Vec<usize>>,
    /// Key = value configuration file; explicit flags win over the file.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the report here; stdout then carries one line per check.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report encoding: json or csv.
    #[arg(long)]
    format: Option<String>,
}

#[derive(Args)]
struct ScalarArgs {
    /// Function id: neg_log[:claimed_c], pow_r:<r>, neg_pow_r:<r>, quad[:<c>].
    #[arg(long, default_value = "neg_log")]
    func: String,
    /// Points per draw.
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Report encoding: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct YoungArgs {
    /// First mean argument (switches to single-evaluation mode).
    #[arg(long)]
    a: Option<f64>,
    /// Second mean argument (single-evaluation mode).
    #[arg(long)]
    b: Option<f64>,
    /// Weight on `a` (single-evaluation mode).
    #[arg(long)]
    lambda: Option<f64>,
    /// Optional second parameter: use the two-parameter bounds at this mu.
    #[arg(long)]
    mu: Option<f64>,
    /// Trials for the property run (ignored in single-evaluation mode).
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Report encoding for the property run: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct OperatorArgs {
    /// Inequality family: 3.2, 3.3, 3.4a, 3.4b, 3.5, 3.6, 4.3 or 4.1.
    #[arg(long)]
    theorem: String,
    /// Scalar function id (3.3/3.5/3.6) or penalty id
    /// shifted_quad|quartic|quad[:<c>]|... (4.3/4.1).
    #[arg(long)]
    func: Option<String>,
    /// Exponent for 3.2 (any r > 0), 3.4a (r >= 2) or 3.4b (0 < r < 1).
    #[arg(long)]
    r: Option<f64>,
    /// Interpolation parameter in [0, 1] for 3.5.
    #[arg(long)]
    nu: Option<f64>,
    /// Claimed strong-convexity modulus of f^nu for 3.5. Pre-validated
    /// against the defining inequality before the run; 0 is always safe.
    #[arg(long, default_value_t = 0.0)]
    power_modulus: f64,
    /// Matrix dimension (ignored when --matrix-in fixes the matrix).
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Closed spectrum sampling box, written lo:hi.
    #[arg(long)]
    spectrum: Option<String>,
    /// Read the matrix from this file (dim header + row-major entries)
    /// instead of sampling one per trial.
    #[arg(long)]
    matrix_in: Option<PathBuf>,
    /// Write the last matrix used to this file in the same format.
    #[arg(long)]
    matrix_out: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-9)]
    tol_abs: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Report encoding: json or csv.
    #[arg(long, default_value = "json")]
    format: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(2),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

/// Returns the total violation count across everything the command ran.
fn dispatch(cli: Cli) -> Result<u64> {
    match cli.command {
        Command::ListChecks => cmd_list_checks(),
        Command::Run(args) => cmd_run(args),
        Command::Jensen(args) => cmd_jensen(&args),
        Command::Mercer(args) => cmd_mercer(&args),
        Command::Young(args) => cmd_young(&args),
        Command::Operator(args) => cmd_operator(&args),
    }
}

fn cmd_list_checks() -> Result<u64> {
    let width = REGISTRY.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for check in REGISTRY {
        println!("{:width$}  {}", check.id, check.summary);
    }
    Ok(0)
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| Error::Config { what: format!("cannot read {}: {e}", path.display()) })
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text)
        .map_err(|e| Error::Config { what: format!("cannot write {}: {e}", path.display()) })
}

fn cmd_run(args: RunArgs) -> Result<u64> {
    let mut cfg = RunConfig::default();
    let mut checks = args.checks;
    let mut format_name = args.format;
    let mut out = args.out;
    if let Some(path) = &args.config {
        let file = parse_config_text(&read_text(path)?)?;
        cfg.apply_file(&file);
        // Flags win over the file for everything the file can set.
        checks = checks.or(file.checks);
        format_name = format_name.or(file.format);
        out = out.or(file.out.map(PathBuf::from));
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if let Some(trials) = args.trials {
        cfg.trials = trials;
    }
    if let Some(tol_abs) = args.tol_abs {
        cfg.tol.tol_abs = tol_abs;
    }
    if let Some(tol_rel) = args.tol_rel {
        cfg.tol.tol_rel = tol_rel;
    }
    if let Some(dims) = args.dims {
        cfg.dims = dims;
    }
    let format: ReportFormat = format_name.as_deref().unwrap_or("json").parse()?;
    let ids = checks.unwrap_or_else(|| vec!["all".to_string()]);
    let reports = run_suite(&ids, &cfg)?;
    emit(&reports, format, out.as_deref())
}

/// Print (or write) the reports and return the total violation count.
fn emit(reports: &[VerificationReport], format: ReportFormat, out: Option<&Path>) -> Result<u64> {
    let text = emit_report(reports, format);
    match out {
        Some(path) => {
            write_text(path, &text)?;
            for r in reports {
                println!(
                    "{}: trials={} violations={} equality_hits={}",
                    r.check_id, r.trials, r.violations, r.equality_hits
                );
            }
            println!("wrote {} report(s) to {}", reports.len(), path.display());
        }
        None => println!("{text}"),
    }
    let total = reports.iter().map(|r| r.violations).sum();
    if total > 0 {
        eprintln!("{total} violation(s) recorded");
    }
    Ok(total)
}

fn tol_of(tol_abs: f64, tol_rel: f64) -> ToleranceConfig {
    ToleranceConfig { tol_abs, tol_rel, ..ToleranceConfig::DEFAULT }
}

fn scalar_echo(args: &ScalarArgs, box_: (f64, f64), tol: &ToleranceConfig) -> BTreeMap<String, String> {
    let mut echo = BTreeMap::new();
    echo.insert("function".into(), args.func.clone());
    echo.insert("n".into(), args.n.to_string());
    echo.insert("sample_box".into(), format!("[{}, {}]", box_.0, box_.1));
    echo.insert("trials".into(), args.trials.to_string());
    echo.insert("rng".into(), RNG_ALGORITHM.into());
    echo.insert("mode".into(), "focused".into());
    echo.insert("tol_abs".into(), format!("{}", tol.tol_abs));
    echo.insert("tol_rel".into(), format!("{}", tol.tol_rel));
    echo
}

/// One focused Jensen trial set: non-negativity of the gap, the variance
/// lower bound, and the two-sided weight-ratio sandwich, all on the same
/// draw. Every 100th trial collapses to constant points with `p = q`, where
/// each pair is an exact equality.
fn cmd_jensen(args: &ScalarArgs) -> Result<u64> {
    let f = funcs::parse_func(&args.func)?;
    if args.n == 0 {
        return Err(Error::InvalidParameter { what: "--n must be at least 1".into() });
    }
    // Width cap and floored reference weights keep the ratio-scaled bounds
    // numerically resolvable at the default tolerances; see the registry
    // checks for the same conditioning.
    let (lo, hi) = f.sample_box()?;
    let hi = hi.min(lo + 3.0);
    let tol = tol_of(args.tol_abs, args.tol_rel);
    let mut rng = rng_for(args.seed, &format!("cli.jensen:{}", f.id()));
    let mut rec = TrialRecorder::new(tol);
    for trial in 0..args.trials {
        let probe = trial % 100 == 99;
        let points = if probe {
            vec![rng.gen_range(lo..=hi); args.n]
        } else {
            sample_points(args.n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, f.domain())?;
        let q = sample_floored_weights(args.n, &mut rng)?;
        let p = if probe { q.clone() } else { sample_weights(args.n, true, &mut rng)? };
        let gap = jensen::jensen_functional(&f, &x, &p)?;
        let (lower, _) = jensen::lemma21_lower_bound(&f, &x, &p)?;
        let b = jensen::theorem22_bounds(&f, &x, &p, &q)?;
        rec.record_pairs(
            &[(0.0, gap), (lower, gap), (b.lower, b.mid), (b.mid, b.upper)],
            || format!("{}: n={}", f.id(), args.n),
        );
    }
    let report = rec.into_report("jensen.focused", args.seed, scalar_echo(args, (lo, hi), &tol));
    emit(&[report], args.format.parse()?, None)
}

/// One focused reflected-point trial set: the endpoint bound at a random
/// index, the reflected-barycenter sandwich, and (for functions living in
/// the unit interval) the means chain. Constant points make every pair an
/// equality, which is the probe.
fn cmd_mercer(args: &ScalarArgs) -> Result<u64> {
    let f = funcs::parse_func(&args.func)?;
    if args.n == 0 {
        return Err(Error::InvalidParameter { what: "--n must be at least 1".into() });
    }
    let (lo, hi) = f.sample_box()?;
    let in_unit = lo > 0.0 && hi <= 1.0;
    let tol = tol_of(args.tol_abs, args.tol_rel);
    let mut rng = rng_for(args.seed, &format!("cli.mercer:{}", f.id()));
    let mut rec = TrialRecorder::new(tol);
    for trial in 0..args.trials {
        let probe = trial % 100 == 99;
        let points = if probe {
            vec![rng.gen_range(lo..=hi); args.n]
        } else {
            sample_points(args.n, lo, hi, &mut rng)
        };
        let x = PointVector::new(points, f.domain())?;
        let p = sample_weights(args.n, true, &mut rng)?;
        let i = rng.gen_range(0..args.n);
        let (l_lhs, l_rhs) = mercer::lemma26_bound(&f, &x, i)?;
        let b = mercer::theorem27_bound(&f, &x, &p)?;
        let mut pairs =
            vec![(l_lhs, l_rhs), (b.lhs, b.refined_rhs), (b.refined_rhs, b.plain_rhs)];
        if in_unit {
            let chain = mercer::means_chain(&x, &p)?;
            pairs.push((chain.g_tilde, chain.refined));
            pairs.push((chain.refined, chain.a_tilde));
        }
        rec.record_pairs(&pairs, || format!("{}: n={} i={i}", f.id(), args.n));
    }
    let mut echo = scalar_echo(args, (lo, hi), &tol);
    echo.insert("means_chain".into(), if in_unit { "included" } else { "outside (0,1]" }.into());
    let report = rec.into_report("mercer.focused", args.seed, echo);
    emit(&[report], args.format.parse()?, None)
}

fn cmd_young(args: &YoungArgs) -> Result<u64> {
    let single = args.a.is_some() || args.b.is_some() || args.lambda.is_some();
    if !single {
        if args.mu.is_some() {
            return Err(Error::Config {
                what: "--mu only applies to single-evaluation mode (--a --b --lambda)".into(),
            });
        }
        let cfg = RunConfig {
            seed: args.seed,
            trials: args.trials,
            tol: tol_of(args.tol_abs, args.tol_rel),
            ..RunConfig::default()
        };
        let ids: Vec<String> = REGISTRY
            .iter()
            .filter(|c| c.id.starts_with("young."))
            .map(|c| c.id.to_string())
            .collect();
        let reports = run_suite(&ids, &cfg)?;
        return emit(&reports, args.format.parse()?, None);
    }
    let (Some(a), Some(b), Some(lambda)) = (args.a, args.b, args.lambda) else {
        return Err(Error::Config {
            what: "single-evaluation mode needs --a, --b and --lambda together".into(),
        });
    };
    let tol = tol_of(args.tol_abs, args.tol_rel);
    let mut violations = 0u64;
    let mut show = |name: &str, bounds: &young::YoungBounds| {
        let ordered = tol.allows(bounds.lower, bounds.mid) && tol.allows(bounds.mid, bounds.upper);
        if !ordered {
            violations += 1;
        }
        println!(
            "{name}: lower={:.16e} mid={:.16e} upper={:.16e} exponents=({:?}, {:?}) ordered={}",
            bounds.lower,
            bounds.mid,
            bounds.upper,
            bounds.exponent_min,
            bounds.exponent_max,
            if ordered { "yes" } else { "NO" },
        );
    };
    show("eq22_baseline        (native scale)", &young::eq22_baseline(a, b, lambda)?);
    match args.mu {
        Some(mu) => {
            show(&format!("remark23_bounds mu={mu:?} (ratio scale)"), &young::remark23_bounds(a, b, lambda, mu)?)
        }
        None => show("corollary25_bounds   (ratio scale)", &young::corollary25_bounds(a, b, lambda)?),
    }
    let gain = young::refinement_gain(a, b, lambda)?;
    println!(
        "refinement_gain: baseline_gap={:.16e} corollary_gap={:.16e} gain={:.16e}",
        gain.baseline_gap,
        gain.corollary_gap,
        gain.gain()
    );
    if violations > 0 {
        eprintln!("{violations} ordering violation(s) at a={a:?} b={b:?} lambda={lambda:?}");
    }
    Ok(violations)
}

/// Which inequality family an `--theorem` token drives.
enum TheoremKind {
    /// 3.2: the unrefined power-mean comparison, any r > 0.
    Baseline,
    /// 3.3: the variance-refined chain for a catalog function.
    Jensen,
    /// 3.4a (r >= 2) and 3.4b (0 < r < 1): refined power inequalities.
    PowerRefined { low: bool },
    /// 3.5: the seven-term interpolation chain.
    Chain,
    /// 3.6: the reverse (variance cap) bound.
    Reverse,
    /// 4.3: the generalized penalty bound.
    Penalty,
    /// 4.1: the penalty bound for subunit states.
    Subunit,
}

fn parse_theorem(token: &str) -> Result<TheoremKind> {
    Ok(match token {
        "3.2" => TheoremKind::Baseline,
        "3.3" => TheoremKind::Jensen,
        "3.4a" => TheoremKind::PowerRefined { low: false },
        "3.4b" => TheoremKind::PowerRefined { low: true },
        "3.5" => TheoremKind::Chain,
        "3.6" => TheoremKind::Reverse,
        "4.3" => TheoremKind::Penalty,
        "4.1" => TheoremKind::Subunit,
        _ => {
            return Err(Error::Config {
                what: format!(
                    "unknown --theorem {token:?}; expected 3.2, 3.3, 3.4a, 3.4b, 3.5, 3.6, 4.3 or 4.1"
                ),
            })
        }
    })
}

fn parse_spectrum(text: &str) -> Result<(f64, f64)> {
    let bad = || Error::Config {
        what: format!("--spectrum must be lo:hi with lo < hi, got {text:?}"),
    };
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

/// Resolve a penalty-catalog id: the two built-ins, or any scalar catalog
/// function paired with its own quadratic penalty `F(t) = c t^2`.
fn parse_penalty_func(id: &str) -> Result<FStronglyConvexFunction> {
    match id {
        "shifted_quad" => Ok(funcs::shifted_quad()),
        "quartic" => Ok(funcs::quartic()),
        _ => Ok(funcs::parse_func(id)?.with_quadratic_penalty()),
    }
}

fn eigenvector_state(a: &HermitianMatrix, k: usize) -> Result<UnitVector> {
    let spectral = a.eigh()?;
    UnitVector::new(spectral.eigenvector(k % a.dim()).to_vec())
}

fn cmd_operator(args: &OperatorArgs) -> Result<u64> {
    let kind = parse_theorem(&args.theorem)?;
    let tol = tol_of(args.tol_abs, args.tol_rel);

    // Resolve the function (where the family needs one) before anything is
    // sampled, so bad ids fail as usage errors.
    let scalar_f: Option<StronglyConvexFunction> = match kind {
        TheoremKind::Jensen | TheoremKind::Reverse => {
            Some(funcs::parse_func(args.func.as_deref().unwrap_or("neg_log"))?)
        }
        TheoremKind::Chain => Some(funcs::parse_func(args.func.as_deref().unwrap_or("pow_r:4"))?),
        _ => None,
    };
    let penalty_f: Option<FStronglyConvexFunction> = match kind {
        TheoremKind::Penalty => Some(parse_penalty_func(args.func.as_deref().unwrap_or("quad:1"))?),
        TheoremKind::Subunit => {
            Some(parse_penalty_func(args.func.as_deref().unwrap_or("shifted_quad"))?)
        }
        _ => None,
    };
    let r = args.r.unwrap_or(match kind {
        TheoremKind::PowerRefined { low: true } => 0.5,
        _ => 2.0,
    });
    match kind {
        TheoremKind::PowerRefined { low: true } if !(r > 0.0 && r < 1.0) => {
            return Err(Error::Config {
                what: format!("--theorem 3.4b needs 0 < r < 1, got {r}"),
            });
        }
        TheoremKind::PowerRefined { low: false } if r.is_nan() || r < 2.0 => {
            return Err(Error::Config {
                what: format!("--theorem 3.4a needs r >= 2, got {r} (use 3.4b below 1)"),
            });
        }
        _ => {}
    }
    let nu = args.nu.unwrap_or(0.5);

    let (lo, hi) = match &args.spectrum {
        Some(text) => parse_spectrum(text)?,
        None => match kind {
            TheoremKind::Baseline => (0.05, 4.0),
            TheoremKind::PowerRefined { low: true } => (1e-3, 0.999),
            TheoremKind::PowerRefined { low: false } => (1.001, 100.0),
            _ => {
                let id = scalar_f
                    .as_ref()
                    .map(|f| f.id().to_string())
                    .or_else(|| penalty_f.as_ref().map(|f| f.id().to_string()))
                    .expect("function-driven families resolve a function");
                spectrum_box_for(&id)
            }
        },
    };

    // For the interpolation chain, a claimed modulus for f^nu is validated
    // against the defining inequality before any matrix is drawn.
    if let TheoremKind::Chain = kind {
        let f = scalar_f.as_ref().expect("chain resolves a scalar function");
        if args.power_modulus > 0.0 {
            let inner = f.clone();
            let power = StronglyConvexFunction::new(
                format!("{}^{nu}", f.id()),
                f.domain(),
                args.power_modulus,
                move |t| inner.eval(t).powf(nu),
            )?
            .with_sample_box(lo, hi)?;
            let premise = funcs::check_strong_convexity(&power, 500, args.seed, &tol)?;
            if premise.violations > 0 {
                return Err(Error::HypothesisViolated {
                    what: format!(
                        "claimed modulus {} for {}^{nu} on [{lo}, {hi}] failed its \
                         strong-convexity validation ({} violation(s))",
                        args.power_modulus,
                        f.id(),
                        premise.violations
                    ),
                });
            }
        }
    }

    let fixed: Option<HermitianMatrix> = match &args.matrix_in {
        Some(path) => Some(parse_matrix(&read_text(path)?)?),
        None => None,
    };
    let dim = match (&fixed, args.dim) {
        (Some(m), Some(d)) if m.dim() != d => {
            return Err(Error::Config {
                what: format!("--dim {d} conflicts with the {}x{} matrix from --matrix-in", m.dim(), m.dim()),
            })
        }
        (Some(m), _) => m.dim(),
        (None, d) => d.unwrap_or(8),
    };
    if dim == 0 {
        return Err(Error::Config { what: "--dim must be at least 1".into() });
    }

    let check_id = match kind {
        TheoremKind::Baseline => "operator.holder_mccarthy_baseline",
        TheoremKind::Jensen => "operator.theorem33_check",
        TheoremKind::PowerRefined { .. } => "operator.holder_mccarthy_refined",
        TheoremKind::Chain => "operator.theorem35_chain",
        TheoremKind::Reverse => "operator.theorem36_reverse",
        TheoremKind::Penalty => "operator.eq43_fstrong_check",
        TheoremKind::Subunit => "operator.theorem41_subunit_check",
    };

    let mut rng = rng_for(args.seed, &format!("cli.operator:{}", args.theorem));
    let mut rec = TrialRecorder::new(tol);
    for trial in 0..args.trials {
        let sampled;
        let a: &HermitianMatrix = match &fixed {
            Some(m) => m,
            None => {
                sampled = sample_hermitian(&SpectrumSpec::new(dim, lo, hi)?, &mut rng);
                &sampled
            }
        };
        let probe = trial % 100 == 99;
        let x = if probe {
            eigenvector_state(a, trial as usize)?
        } else {
            let subunit = matches!(kind, TheoremKind::Subunit);
            sample_unit_vector(dim, subunit, &mut rng)?
        };
        match kind {
            TheoremKind::Baseline => {
                let (lhs, rhs) = operator::holder_mccarthy_baseline(r, a, &x)?;
                rec.record(lhs, rhs, || format!("r={r:?} dim={dim}"));
            }
            TheoremKind::Jensen => {
                let f = scalar_f.as_ref().expect("resolved above");
                let o = operator::theorem33_check(f, a, &x)?;
                rec.record_pairs(&[(o.lhs, o.refined_rhs), (o.refined_rhs, o.plain_rhs)], || {
                    format!("{}: dim={dim}", f.id())
                });
            }
            TheoremKind::PowerRefined { .. } => {
                let h = operator::holder_mccarthy_refined(r, a, &x)?;
                rec.record_pairs(
                    &[(h.lhs, h.refined), (h.refined, h.classical), (h.lhs, h.classical)],
                    || format!("r={r:?} dim={dim}"),
                );
            }
            TheoremKind::Chain => {
                let f = scalar_f.as_ref().expect("resolved above");
                let chain = operator::theorem35_chain(f, nu, args.power_modulus, a, &x)?;
                let pairs: Vec<(f64, f64)> =
                    chain.terms.windows(2).map(|w| (w[0], w[1])).collect();
                rec.record_pairs(&pairs, || format!("{}: nu={nu:?} dim={dim}", f.id()));
            }
            TheoremKind::Reverse => {
                let f = scalar_f.as_ref().expect("resolved above");
                let t = operator::theorem36_reverse(f, a, &x)?;
                rec.record(t.variance, t.bound, || format!("{}: dim={dim}", f.id()));
            }
            TheoremKind::Penalty => {
                let f = penalty_f.as_ref().expect("resolved above");
                let (lhs, rhs) = operator::eq43_fstrong_check(f, a, &x)?;
                rec.record(lhs, rhs, || format!("{}: dim={dim}", f.id()));
            }
            TheoremKind::Subunit => {
                let f = penalty_f.as_ref().expect("resolved above");
                let (lhs, rhs) = operator::theorem41_subunit_check(f, a, &x)?;
                rec.record(lhs, rhs, || {
                    format!("{}: dim={dim} norm={:?}", f.id(), x.norm())
                });
            }
        }
        if trial + 1 == args.trials {
            if let Some(path) = &args.matrix_out {
                write_text(path, &format_matrix(a))?;
            }
        }
    }

    let mut echo = BTreeMap::new();
    echo.insert("theorem".into(), args.theorem.clone());
    echo.insert("dim".into(), dim.to_string());
    echo.insert("spectrum".into(), format!("[{lo}, {hi}]"));
    echo.insert("trials".into(), args.trials.to_string());
    echo.insert("rng".into(), RNG_ALGORITHM.into());
    echo.insert("mode".into(), "focused".into());
    echo.insert("tol_abs".into(), format!("{}", tol.tol_abs));
    echo.insert("tol_rel".into(), format!("{}", tol.tol_rel));
    if let Some(f) = &scalar_f {
        echo.insert("function".into(), f.id().to_string());
    }
    if let Some(f) = &penalty_f {
        echo.insert("function".into(), f.id().to_string());
    }
    if matches!(kind, TheoremKind::Baseline | TheoremKind::PowerRefined { .. }) {
        echo.insert("r".into(), format!("{r}"));
    }
    if matches!(kind, TheoremKind::Chain) {
        echo.insert("nu".into(), format!("{nu}"));
        echo.insert("power_modulus".into(), format!("{}", args.power_modulus));
    }
    if fixed.is_some() {
        echo.insert("matrix".into(), "fixed from --matrix-in".into());
    }
    let report = rec.into_report(check_id, args.seed, echo);
    emit(&[report], args.format.parse()?, None)
}
