//! Seeded property suites behind `verify`.
//!
//! Every suite draws its instances from [`Sampler`] streams derived from the
//! seed, runs them (possibly in parallel) and reports in input order, so the
//! printed output depends only on the seed.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::sample::Sampler;

mod algebra;
mod families;
mod linear;

/// Suite names accepted by [`run`], in the order `all` runs them.
pub const SUITES: [&str; 10] = [
    "norms",
    "pindep",
    "invariant",
    "divmod",
    "delsarte",
    "tensor-dual",
    "gsg-pipeline",
    "gsrs-witness",
    "gsmg-pipeline",
    "reductions",
];

const MAX_SHOWN: usize = 5;

/// Exhaustive distance searches stop above this many codewords.
pub const DISTANCE_BUDGET: u64 = 1 << 20;

/// Subfield sweeps enumerate at most this many words.
pub const SWEEP_LIMIT: u64 = 1 << 12;

/// Tally of one property over many inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: usize,
    pub total: usize,
    pub counterexamples: Vec<String>,
}

impl Check {
    pub fn new(label: impl Into<String>) -> Self {
        Check { label: label.into(), passed: 0, total: 0, counterexamples: Vec::new() }
    }

    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.counterexamples.len() < MAX_SHOWN {
            self.counterexamples.push(witness());
        }
    }

    /// Records an outcome that may have failed to compute at all.
    pub fn record_result(&mut self, outcome: Result<bool>, witness: impl FnOnce() -> String) {
        match outcome {
            Ok(ok) => self.record(ok, witness),
            Err(e) => self.record(false, || format!("{} ({e})", witness())),
        }
    }

    /// Records an observation that is printed but never fails.
    pub fn note(&mut self) {
        self.total += 1;
        self.passed += 1;
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total && self.total > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: Vec<Check>,
    /// Informational lines that carry no verdict.
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport { name, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    fn push(&mut self, c: Check) {
        self.checks.push(c);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.name)?;
        for c in &self.checks {
            writeln!(f, "  {}: {}/{} {}", c.label, c.passed, c.total, if c.ok() { "PASS" } else { "FAIL" })?;
            for w in &c.counterexamples {
                writeln!(f, "    counterexample: {w}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        writeln!(f, "{}: {}", self.name, if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(name: &str, seed: u64) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s, seed)).collect());
    }
    if !SUITES.contains(&name) {
        return Err(Error::Parse(format!("unknown suite `{name}`; expected one of {} or all", SUITES.join(", "))));
    }
    Ok(vec![run_one(name, seed)])
}

fn run_one(name: &str, seed: u64) -> SuiteReport {
    // each suite gets its own stream so results do not depend on which suites ran before
    let index = SUITES.iter().position(|s| *s == name).expect("known suite") as u64;
    let mut sampler = Sampler::new(seed ^ (index + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    match name {
        "norms" => algebra::norms(),
        "pindep" => algebra::pindep(&mut sampler),
        "invariant" => algebra::invariant(&mut sampler),
        "divmod" => algebra::divmod(&mut sampler),
        "delsarte" => linear::delsarte(&mut sampler),
        "tensor-dual" => linear::tensor_dual(&mut sampler),
        "gsg-pipeline" => families::gsg_pipeline(&mut sampler),
        "gsrs-witness" => families::gsrs_witness(&mut sampler),
        "gsmg-pipeline" => families::gsmg_pipeline(&mut sampler),
        "reductions" => families::reductions(&mut sampler),
        _ => unreachable!("checked by run"),
    }
}

/// Sub-seeds for `n` independent instances.
fn seeds(sampler: &mut Sampler, n: usize) -> Vec<u64> {
    (0..n).map(|_| sampler.next_u64()).collect()
}

fn field(p: u32, s: u32, t: u32, r: u32) -> Field {
    Field::new(p, s, t, r, None).expect("valid test field")
}

fn label(f: &Field) -> String {
    format!("F_{}/F_{}", f.order(), f.subfield_order())
}

fn show(v: &[Fe]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// All words of `F_{q^r}^n`, or `None` when there are more than [`SWEEP_LIMIT`].
fn subfield_words(f: &Field, n: usize) -> Option<Vec<Vec<Fe>>> {
    let sub = f.subfield_elements();
    let total = (sub.len() as u64).checked_pow(n as u32).filter(|&c| c <= SWEEP_LIMIT)?;
    Some(
        (0..total)
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let d = (idx % sub.len() as u64) as usize;
                        idx /= sub.len() as u64;
                        sub[d]
                    })
                    .collect()
            })
            .collect(),
    )
}
