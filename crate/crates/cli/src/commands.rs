//! `build`, `params`, `distance` and `verify`.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use skewgoppa::codes::DistanceError;
use skewgoppa::constructions::{
    acar, goppa_classical, goppa_grs_generator, grs, gse, gsg, gsmg, gsrs, multivariate_goppa, tensor_t, GoppaInstance,
};
use skewgoppa::report::{parameter_report, Bounds};
use skewgoppa::skew::{make_invariant, InvariantSpec};
use skewgoppa::{verify, Error, Fe, LinearCode, Matrix, SkewPoly, SkewRing};
use thiserror::Error as ThisError;

use crate::config::{ConfigError, FactorSpec, Family, InstanceConfig};

/// Exit codes: 0 success, 1 verification failure, 2 hypothesis failure, 3 parse error.
pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(c) => c.exit_code(),
            CliError::Core(Error::Hypothesis(_)) => EXIT_HYPOTHESIS,
            CliError::Core(_) | CliError::Io { .. } => EXIT_PARSE,
        }
    }
}

/// A constructed code with its parity-check data.
#[derive(Clone, Debug)]
pub struct Built {
    pub family: Family,
    pub code: LinearCode,
    pub parity_check: Matrix,
    /// Named factor matrices, in output order.
    pub artifacts: Vec<(String, Matrix)>,
    pub bounds: Bounds,
    pub rank_h: Option<usize>,
}

fn row(field: &skewgoppa::Field, v: &[Fe]) -> Matrix {
    Matrix::from_rows(field, v.len(), vec![v.to_vec()]).expect("one row")
}

impl InstanceConfig {
    fn factor(&self, ring: &SkewRing, i: usize) -> Result<SkewPoly, Error> {
        match &self.factors[i] {
            FactorSpec::Coeffs(c) => Ok(SkewPoly::new(ring, c.clone())),
            FactorSpec::Invariant { a, v, l } => make_invariant(ring, *a, v, *l),
        }
    }

    fn invariant_spec(&self, ring: &SkewRing, i: usize) -> Result<InvariantSpec, Error> {
        match &self.factors[i] {
            FactorSpec::Invariant { a, v, l } => InvariantSpec::new(ring, *a, v, *l),
            FactorSpec::Coeffs(_) => self.factor(ring, i)?.is_invariant()?.ok_or_else(|| skewgoppa::Hypothesis::Invariant.into()),
        }
    }

    fn ones(&self, n: usize) -> Vec<Fe> {
        vec![Fe::ONE; n]
    }

    /// Runs the family's construction.
    pub fn build(&self) -> Result<Built, Error> {
        let f = &self.field;
        let comm = SkewRing::commutative(f.clone());
        let twisted = SkewRing::new(f.clone(), self.twist);
        let sizes: Vec<usize> = self.sets.iter().map(Vec::len).collect();
        let plain = |family, code: LinearCode, bounds| Built {
            family,
            parity_check: code.parity_check(),
            code,
            artifacts: Vec::new(),
            bounds,
            rank_h: None,
        };
        match self.family {
            Family::Grs | Family::Gse | Family::Gsrs => {
                let pts = &self.sets[0];
                let mult = self.mult.clone().unwrap_or_else(|| self.ones(pts.len()));
                let k = self.k.expect("checked by the parser");
                let (code, bounds) = match self.family {
                    Family::Grs => (grs(f, pts, &mult, k)?, Bounds::mds(pts.len(), k)),
                    Family::Gsrs => (gsrs(&twisted, pts, &mult, k)?, Bounds::mds(pts.len(), k)),
                    _ => (gse(&twisted, pts, &mult, k)?, Bounds::none()),
                };
                Ok(plain(self.family, code, bounds))
            }
            Family::Goppa | Family::MGoppa => {
                let factors: Vec<SkewPoly> = (0..self.factors.len()).map(|i| self.factor(&comm, i)).collect::<Result<_, _>>()?;
                let (code, h) = if self.family == Family::Goppa {
                    (goppa_classical(&self.sets[0], &factors[0])?, goppa_grs_generator(&self.sets[0], &factors[0])?)
                } else {
                    (multivariate_goppa(&self.sets, &factors)?, tensor_t(&self.sets, &factors)?.generator().clone())
                };
                let degrees: Vec<usize> = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
                Ok(Built {
                    family: self.family,
                    rank_h: Some(h.rank()),
                    parity_check: h,
                    code,
                    artifacts: Vec::new(),
                    bounds: Bounds::multivariate(f, &sizes, &degrees),
                })
            }
            Family::Acar => {
                let factors: Vec<SkewPoly> = (0..self.factors.len()).map(|i| self.factor(&comm, i)).collect::<Result<_, _>>()?;
                let degrees: Vec<usize> = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
                Ok(plain(Family::Acar, acar(&self.sets, &factors)?, Bounds::acar(&sizes, &degrees)))
            }
            Family::Gsg => {
                let pts = &self.sets[0];
                let eta = self.eta.clone().unwrap_or_else(|| self.ones(pts.len()));
                let spec = self.invariant_spec(&twisted, 0)?;
                let built = gsg(&twisted, pts, &eta, &spec)?;
                let fac = &built.factors;
                let mut artifacts = vec![
                    ("hprime".to_string(), fac.hprime.clone()),
                    ("rdiag".to_string(), row(f, &fac.rdiag)),
                    ("ediag".to_string(), row(f, &fac.ediag)),
                ];
                if let Some(red) = &fac.reduced {
                    artifacts.push(("transform".into(), red.transform.clone()));
                    artifacts.push(("vandermonde".into(), red.vandermonde.clone()));
                    artifacts.push(("ddiag".into(), row(f, &red.ddiag)));
                }
                Ok(Built {
                    family: Family::Gsg,
                    rank_h: Some(built.parity_check.rank()),
                    bounds: Bounds::gsg(f, pts.len(), spec.degree(), built.inverse_independent),
                    code: built.code,
                    parity_check: built.parity_check,
                    artifacts,
                })
            }
            Family::Gsmg => {
                let m = self.sets.len();
                let mut factors = Vec::with_capacity(m);
                for i in 0..m {
                    let ring = if i + 1 < m { &comm } else { &twisted };
                    factors.push(self.factor(ring, i)?);
                }
                let eta = self.eta.clone().unwrap_or_else(|| self.ones(self.sets[m - 1].len()));
                let inst = GoppaInstance::new(self.sets.clone(), factors, eta)?;
                let built = gsmg(&inst)?;
                let mut artifacts: Vec<(String, Matrix)> =
                    built.blocks.iter().enumerate().map(|(i, b)| (format!("block{}", i + 1), b.clone())).collect();
                artifacts.push(("tensor_generator".into(), built.tensor_generator.clone()));
                Ok(Built {
                    family: Family::Gsmg,
                    rank_h: Some(built.parity_check.rank()),
                    bounds: Bounds::gsmg(&inst),
                    code: built.code,
                    parity_check: built.parity_check,
                    artifacts,
                })
            }
        }
    }
}

/// Renders every artifact; with `out` set, also writes one file per artifact.
pub fn cmd_build(cfg: &InstanceConfig, out: Option<&Path>) -> Result<String, CliError> {
    let built = cfg.build().map_err(|e| cfg.locate(e))?;
    let mut files = vec![
        ("generator".to_string(), built.code.to_text()),
        ("parity_check".to_string(), built.parity_check.to_text()),
    ];
    files.extend(built.artifacts.iter().map(|(name, m)| (name.clone(), m.to_text())));
    let mut s = String::new();
    let _ = writeln!(s, "family = {}", built.family);
    let _ = writeln!(s, "n = {}", built.code.length());
    let _ = writeln!(s, "k = {}", built.code.dimension());
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
            for (name, text) in &files {
                let path = dir.join(format!("{name}.txt"));
                fs::write(&path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
                let _ = writeln!(s, "wrote {name}.txt");
            }
        }
        None => {
            for (name, text) in &files {
                let _ = write!(s, "[{name}]\n{text}");
            }
        }
    }
    Ok(s)
}

/// Parameter report; the flag is false when a bound check fails.
pub fn cmd_params(cfg: &InstanceConfig, budget: Option<u64>) -> Result<(String, bool), CliError> {
    let built = cfg.build().map_err(|e| cfg.locate(e))?;
    let report = parameter_report(&built.code, built.bounds, built.rank_h, budget.unwrap_or(cfg.budget));
    Ok((format!("family = {}\n{report}", built.family), report.passes()))
}

/// Exact minimum distance; the flag is false when the budget is exceeded.
pub fn cmd_distance(cfg: &InstanceConfig, budget: Option<u64>) -> Result<(String, bool), CliError> {
    let built = cfg.build().map_err(|e| cfg.locate(e))?;
    Ok(match built.code.min_distance(budget.unwrap_or(cfg.budget)) {
        Ok(d) => (format!("d = {d}\n"), true),
        Err(DistanceError::ZeroCode) => ("d = undefined (zero code)\n".into(), true),
        Err(e) => (format!("d = unknown ({e})\n"), false),
    })
}

/// Runs a suite (or `all`); the flag is false when any check fails.
pub fn cmd_verify(suite: &str, seed: u64) -> Result<(String, bool), CliError> {
    let reports = verify::run(suite, seed)?;
    let mut s = format!("seed = {seed}\n");
    for r in &reports {
        let _ = write!(s, "{r}");
    }
    let ok = reports.iter().all(|r| r.passed());
    if reports.len() > 1 {
        let passed = reports.iter().filter(|r| r.passed()).count();
        let _ = writeln!(s, "all: {} ({passed}/{} suites)", if ok { "PASS" } else { "FAIL" }, reports.len());
    }
    Ok((s, ok))
}
