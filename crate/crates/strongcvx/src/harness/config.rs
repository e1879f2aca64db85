//! Run configuration: what every check receives, plus the plain-text config
//! file format.

use crate::error::{Error, Result};
use crate::harness::tolerance::ToleranceConfig;

/// Knobs shared by all checks in a run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Base seed; each check derives its own stream from `(seed, check id)`.
    pub seed: u64,
    /// Trials per check (per function instance where a check cycles a
    /// catalog).
    pub trials: u64,
    /// Matrix dimensions cycled by the operator checks.
    pub dims: Vec<usize>,
    pub tol: ToleranceConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 200,
            dims: vec![1, 2, 3, 5, 8, 16],
            tol: ToleranceConfig::DEFAULT,
        }
    }
}

impl RunConfig {
    /// Applies the optional fields of a parsed config file on top of `self`.
    /// Command-line flags are expected to be applied *after* this, so flags
    /// win over the file.
    pub fn apply_file(&mut self, file: &FileConfig) {
        if let Some(seed) = file.seed {
            self.seed = seed;
        }
        if let Some(trials) = file.trials {
            self.trials = trials;
        }
        if let Some(tol_abs) = file.tol_abs {
            self.tol.tol_abs = tol_abs;
        }
        if let Some(tol_rel) = file.tol_rel {
            self.tol.tol_rel = tol_rel;
        }
        if let Some(dims) = &file.dims {
            self.dims = dims.clone();
        }
    }
}

/// Optional settings accepted in a `key=value` config file.
///
/// ```text
/// # toolkit run configuration
/// seed = 7
/// trials = 1000
/// tol_abs = 1e-9
/// tol_rel = 1e-9
/// dims = 2,3,8
/// checks = jensen.theorem22_bounds, young.kantorovich
/// format = csv
/// out = reports.csv
/// ```
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub tol_abs: Option<f64>,
    pub tol_rel: Option<f64>,
    pub dims: Option<Vec<usize>>,
    pub checks: Option<Vec<String>>,
    pub format: Option<String>,
    pub out: Option<String>,
}

/// Parses the config file format: one `key = value` pair per line, `#`
/// comments, blank lines ignored. Unknown keys are errors so typos cannot
/// silently change a run.
pub fn parse_config_text(text: &str) -> Result<FileConfig> {
    let mut out = FileConfig::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = idx + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
            what: format!("line {lineno}: expected key=value, got {line:?}"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let bad = |what: &str| Error::Config { what: format!("line {lineno}: {what} ({value:?})") };
        match key {
            "seed" => out.seed = Some(value.parse().map_err(|_| bad("cannot parse seed"))?),
            "trials" => out.trials = Some(value.parse().map_err(|_| bad("cannot parse trials"))?),
            "tol_abs" => {
                out.tol_abs = Some(value.parse().map_err(|_| bad("cannot parse tol_abs"))?)
            }
            "tol_rel" => {
                out.tol_rel = Some(value.parse().map_err(|_| bad("cannot parse tol_rel"))?)
            }
            "dims" => {
                let mut dims = Vec::new();
                for tok in value.split(',') {
                    let dim: usize =
                        tok.trim().parse().map_err(|_| bad("cannot parse dimension list"))?;
                    if dim == 0 {
                        return Err(bad("dimensions must be at least 1"));
                    }
                    dims.push(dim);
                }
                if dims.is_empty() {
                    return Err(bad("dimension list must not be empty"));
                }
                out.dims = Some(dims);
            }
            "checks" => {
                out.checks =
                    Some(value.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect());
            }
            "format" => out.format = Some(value.to_string()),
            "out" => out.out = Some(value.to_string()),
            _ => {
                return Err(Error::Config {
                    what: format!("line {lineno}: unknown key {key:?}"),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_file() {
        let text = "\n# comment\nseed = 7\ntrials=1000\ntol_abs = 1e-8\ntol_rel = 2e-9\n\ndims = 2, 3, 8\nchecks = a.b, c.d\nformat = csv\nout = r.csv\n";
        let file = parse_config_text(text).unwrap();
        assert_eq!(file.seed, Some(7));
        assert_eq!(file.trials, Some(1000));
        assert_eq!(file.tol_abs, Some(1e-8));
        assert_eq!(file.tol_rel, Some(2e-9));
        assert_eq!(file.dims, Some(vec![2, 3, 8]));
        assert_eq!(file.checks, Some(vec!["a.b".to_string(), "c.d".to_string()]));
        assert_eq!(file.format.as_deref(), Some("csv"));
        assert_eq!(file.out.as_deref(), Some("r.csv"));
    }

    #[test]
    fn rejects_unknown_keys_and_malformed_lines() {
        assert!(matches!(parse_config_text("sede = 7"), Err(Error::Config { .. })));
        assert!(matches!(parse_config_text("seed"), Err(Error::Config { .. })));
        assert!(matches!(parse_config_text("trials = many"), Err(Error::Config { .. })));
        assert!(matches!(parse_config_text("dims = 0"), Err(Error::Config { .. })));
        assert!(matches!(parse_config_text("dims = "), Err(Error::Config { .. })));
    }

    #[test]
    fn file_settings_layer_under_flags() {
        let mut cfg = RunConfig::default();
        let file = parse_config_text("seed = 9\ndims = 4").unwrap();
        cfg.apply_file(&file);
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.dims, vec![4]);
        assert_eq!(cfg.trials, 200); // untouched default
        // A later explicit flag assignment simply overwrites.
        cfg.trials = 50;
        assert_eq!(cfg.trials, 50);
    }
}
