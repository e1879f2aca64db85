//! Verification reports: per-check aggregation and deterministic emission.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::harness::tolerance::ToleranceConfig;

/// What a check run produced: counts, slack extremes and the exact
/// configuration that was exercised.
///
/// `worst_violation` is the magnitude of the deepest tolerance breach and is
/// exactly `0` when `violations == 0`. `min_slack`/`max_slack` track the
/// *binding* (smallest) signed slack of each trial, so tiny negative values
/// within tolerance can appear there without being violations.
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub check_id: String,
    pub trials: u64,
    pub violations: u64,
    pub worst_violation: f64,
    pub min_slack: f64,
    pub max_slack: f64,
    pub equality_hits: u64,
    pub seed: u64,
    pub config_echo: BTreeMap<String, String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    /// Combine per-instance reports of one logical check into a single
    /// report. Min/max fields aggregate; the first capped violation
    /// descriptions are carried over into `config_echo`.
    pub fn merged(
        check_id: impl Into<String>,
        seed: u64,
        parts: &[VerificationReport],
        mut config_echo: BTreeMap<String, String>,
    ) -> VerificationReport {
        let mut out = VerificationReport {
            check_id: check_id.into(),
            trials: 0,
            violations: 0,
            worst_violation: 0.0,
            min_slack: f64::INFINITY,
            max_slack: f64::NEG_INFINITY,
            equality_hits: 0,
            seed,
            config_echo: BTreeMap::new(),
        };
        let mut logged = 0usize;
        for part in parts {
            out.trials += part.trials;
            out.violations += part.violations;
            out.equality_hits += part.equality_hits;
            if part.worst_violation > out.worst_violation {
                out.worst_violation = part.worst_violation;
            }
            if part.trials > 0 {
                out.min_slack = out.min_slack.min(part.min_slack);
                out.max_slack = out.max_slack.max(part.max_slack);
            }
            for (key, value) in &part.config_echo {
                if key.starts_with("violation_") && logged < 8 {
                    let tag = part
                        .config_echo
                        .get("function")
                        .or_else(|| part.config_echo.get("config"))
                        .map(|f| format!("[{f}] "))
                        .unwrap_or_default();
                    config_echo.insert(format!("violation_{logged}"), format!("{tag}{value}"));
                    logged += 1;
                }
            }
        }
        if out.trials == 0 {
            out.min_slack = 0.0;
            out.max_slack = 0.0;
        }
        out.config_echo = config_echo;
        out
    }
}

/// Streams `(lhs <= rhs)` observations into report statistics.
///
/// A trial may consist of several ordered pairs (a chain); the trial's slack
/// is the binding pair's slack, the trial violates when any pair does, and
/// it is an equality hit only when every pair is tight.
#[derive(Debug)]
pub struct TrialRecorder {
    tol: ToleranceConfig,
    trials: u64,
    violations: u64,
    equality_hits: u64,
    worst_violation: f64,
    min_slack: f64,
    max_slack: f64,
    vlog: Vec<String>,
}

impl TrialRecorder {
    pub fn new(tol: ToleranceConfig) -> Self {
        Self {
            tol,
            trials: 0,
            violations: 0,
            equality_hits: 0,
            worst_violation: 0.0,
            min_slack: f64::INFINITY,
            max_slack: f64::NEG_INFINITY,
            vlog: Vec::new(),
        }
    }

    pub fn record(&mut self, lhs: f64, rhs: f64, describe: impl FnOnce() -> String) {
        self.record_pairs(&[(lhs, rhs)], describe);
    }

    pub fn record_pairs(&mut self, pairs: &[(f64, f64)], describe: impl FnOnce() -> String) {
        let trial = self.trials;
        self.trials += 1;
        let mut binding = f64::INFINITY;
        let mut violated = false;
        let mut all_equal = true;
        let mut worst_here = 0.0f64;
        for &(lhs, rhs) in pairs {
            let slack = ToleranceConfig::slack(lhs, rhs);
            if slack.is_nan() {
                violated = true;
                all_equal = false;
                continue;
            }
            if slack < binding {
                binding = slack;
            }
            if !self.tol.allows(lhs, rhs) {
                violated = true;
                if -slack > worst_here {
                    worst_here = -slack;
                }
            }
            if !self.tol.is_equality(lhs, rhs) {
                all_equal = false;
            }
        }
        if binding.is_finite() {
            if binding < self.min_slack {
                self.min_slack = binding;
            }
            if binding > self.max_slack {
                self.max_slack = binding;
            }
        }
        if violated {
            self.violations += 1;
            if worst_here > self.worst_violation {
                self.worst_violation = worst_here;
            }
            if self.vlog.len() < 8 {
                self.vlog.push(format!("trial={trial} slack={binding:e} {}", describe()));
            }
        } else if all_equal && !pairs.is_empty() {
            self.equality_hits += 1;
        }
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn into_report(
        self,
        check_id: impl Into<String>,
        seed: u64,
        mut config_echo: BTreeMap<String, String>,
    ) -> VerificationReport {
        for (i, entry) in self.vlog.iter().enumerate() {
            config_echo.insert(format!("violation_{i}"), entry.clone());
        }
        let (min_slack, max_slack) = if self.trials == 0 || !self.min_slack.is_finite() {
            (0.0, 0.0)
        } else {
            (self.min_slack, self.max_slack)
        };
        VerificationReport {
            check_id: check_id.into(),
            trials: self.trials,
            violations: self.violations,
            worst_violation: self.worst_violation,
            min_slack,
            max_slack,
            equality_hits: self.equality_hits,
            seed,
            config_echo,
        }
    }
}

/// Output encodings for report lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            _ => Err(Error::UnknownFormat { name: s.to_string() }),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
        })
    }
}

/// Real numbers are emitted with 17 significant digits, enough to
/// round-trip any f64 exactly.
fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

/// Serialize reports deterministically: stable field order, 17 significant
/// digits for reals, `config_echo` keys in sorted order. The same report
/// list always yields byte-identical output.
pub fn emit_report(reports: &[VerificationReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => emit_json(reports),
        ReportFormat::Csv => emit_csv(reports),
    }
}

fn emit_json(reports: &[VerificationReport]) -> String {
    if reports.is_empty() {
        return "[]".to_string();
    }
    let mut out = String::from("[\n");
    for (i, r) in reports.iter().enumerate() {
        out.push_str("  {\n");
        out.push_str(&format!("    \"check_id\": \"{}\",\n", json_escape(&r.check_id)));
        out.push_str(&format!("    \"trials\": {},\n", r.trials));
        out.push_str(&format!("    \"violations\": {},\n", r.violations));
        out.push_str(&format!("    \"worst_violation\": {},\n", sig17(r.worst_violation)));
        out.push_str(&format!("    \"min_slack\": {},\n", sig17(r.min_slack)));
        out.push_str(&format!("    \"max_slack\": {},\n", sig17(r.max_slack)));
        out.push_str(&format!("    \"equality_hits\": {},\n", r.equality_hits));
        out.push_str(&format!("    \"seed\": {},\n", r.seed));
        out.push_str("    \"config_echo\": {");
        let mut first = true;
        for (k, v) in &r.config_echo {
            if !first {
                out.push(',');
            }
            first = false;
            out.push_str(&format!("\n      \"{}\": \"{}\"", json_escape(k), json_escape(v)));
        }
        if !r.config_echo.is_empty() {
            out.push_str("\n    ");
        }
        out.push_str("}\n");
        out.push_str(if i + 1 == reports.len() { "  }\n" } else { "  },\n" });
    }
    out.push(']');
    out
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn emit_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "check_id,trials,violations,worst_violation,min_slack,max_slack,equality_hits,seed,config_echo\n",
    );
    for r in reports {
        let echo =
            r.config_echo.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.check_id,
            r.trials,
            r.violations,
            sig17(r.worst_violation),
            sig17(r.min_slack),
            sig17(r.max_slack),
            r.equality_hits,
            r.seed,
            csv_quote(&echo),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> VerificationReport {
        let mut rec = TrialRecorder::new(ToleranceConfig::DEFAULT);
        rec.record(1.0, 2.0, || "a".into());
        rec.record(0.5, 0.5, || "b".into());
        rec.record(3.0, 1.0, || "x=3".into());
        let mut echo = BTreeMap::new();
        echo.insert("trials".to_string(), "3".to_string());
        rec.into_report("demo.check", 42, echo)
    }

    #[test]
    fn recorder_aggregates_slacks_and_counts() {
        let r = sample_report();
        assert_eq!(r.trials, 3);
        assert_eq!(r.violations, 1);
        assert_eq!(r.equality_hits, 1);
        assert_eq!(r.min_slack, -2.0);
        assert_eq!(r.max_slack, 1.0);
        assert_eq!(r.worst_violation, 2.0);
        assert!(r.config_echo.get("violation_0").unwrap().contains("x=3"));
        assert!(!r.passed());
    }

    #[test]
    fn clean_run_has_zero_worst_violation() {
        let mut rec = TrialRecorder::new(ToleranceConfig::DEFAULT);
        for i in 0..100 {
            rec.record(0.0, f64::from(i), || unreachable!());
        }
        let r = rec.into_report("demo.clean", 1, BTreeMap::new());
        assert_eq!(r.violations, 0);
        assert_eq!(r.worst_violation, 0.0);
        assert!(r.min_slack <= r.max_slack);
        assert!(r.passed());
    }

    #[test]
    fn chain_trials_bind_on_the_tightest_pair() {
        let mut rec = TrialRecorder::new(ToleranceConfig::DEFAULT);
        rec.record_pairs(&[(0.0, 5.0), (5.0, 5.5), (5.5, 9.0)], || "chain".into());
        let r = rec.into_report("demo.chain", 1, BTreeMap::new());
        assert_eq!(r.min_slack, 0.5);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn merged_combines_parts() {
        let a = sample_report();
        let mut rec = TrialRecorder::new(ToleranceConfig::DEFAULT);
        rec.record(0.0, 10.0, String::new);
        let b = rec.into_report("demo.check", 42, BTreeMap::new());
        let m = VerificationReport::merged("demo.check", 42, &[a, b], BTreeMap::new());
        assert_eq!(m.trials, 4);
        assert_eq!(m.violations, 1);
        assert_eq!(m.min_slack, -2.0);
        assert_eq!(m.max_slack, 10.0);
        assert_eq!(m.worst_violation, 2.0);
        assert!(m.config_echo.contains_key("violation_0"));
    }

    #[test]
    fn empty_list_emits_an_empty_json_array() {
        assert_eq!(emit_report(&[], ReportFormat::Json), "[]");
    }

    #[test]
    fn csv_is_header_plus_one_line_per_report() {
        let text = emit_report(&[sample_report()], ReportFormat::Csv);
        let lines: Vec<&str> = text.trim_end().lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("check_id,trials,"));
        assert!(lines[1].starts_with("demo.check,3,1,"));
    }

    #[test]
    fn json_round_trips_exactly() {
        let reports = vec![sample_report()];
        let text = emit_report(&reports, ReportFormat::Json);
        let parsed: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        let obj = &parsed.as_array().unwrap()[0];
        assert_eq!(obj["check_id"], "demo.check");
        assert_eq!(obj["trials"], 3);
        assert_eq!(obj["violations"], 1);
        assert_eq!(obj["seed"], 42);
        assert_eq!(obj["min_slack"].as_f64().unwrap(), reports[0].min_slack);
        assert_eq!(obj["max_slack"].as_f64().unwrap(), reports[0].max_slack);
        assert_eq!(obj["worst_violation"].as_f64().unwrap(), reports[0].worst_violation);
        assert_eq!(obj["config_echo"]["trials"], "3");
    }

    #[test]
    fn seventeen_digits_round_trip_awkward_floats() {
        for &x in &[0.1, 1.0 / 3.0, 2.0f64.sqrt() * 1e-7, -5.04e17, f64::MIN_POSITIVE] {
            let s = sig17(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<ReportFormat>().unwrap(), ReportFormat::Json);
        assert_eq!("CSV".parse::<ReportFormat>().unwrap(), ReportFormat::Csv);
        assert!(matches!(
            "xml".parse::<ReportFormat>(),
            Err(crate::error::Error::UnknownFormat { .. })
        ));
    }
}
