//! Line-oriented instance configuration.
//!
//! ```text
//! # comment
//! family = gsg
//! field.p = 2
//! field.s = 1
//! field.t = 3
//! field.r = 1
//! set.1 = [1, 2, 4]
//! ginv.1.a = 1
//! ginv.1.v = [1]
//! ginv.1.l = 3
//! eta = [1, 1, 1]
//! ```

use std::collections::BTreeMap;
use std::fmt;

use skewgoppa::{Error, Fe, Field, Hypothesis, Twist};
use thiserror::Error as ThisError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Grs,
    Goppa,
    MGoppa,
    Acar,
    Gse,
    Gsrs,
    Gsg,
    Gsmg,
}

impl Family {
    fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "grs" => Family::Grs,
            "goppa" => Family::Goppa,
            "mgoppa" => Family::MGoppa,
            "acar" => Family::Acar,
            "gse" => Family::Gse,
            "gsrs" => Family::Gsrs,
            "gsg" => Family::Gsg,
            "gsmg" => Family::Gsmg,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Grs => "grs",
            Family::Goppa => "goppa",
            Family::MGoppa => "mgoppa",
            Family::Acar => "acar",
            Family::Gse => "gse",
            Family::Gsrs => "gsrs",
            Family::Gsg => "gsg",
            Family::Gsmg => "gsmg",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A polynomial factor: plain coefficients, or `a·v(X^o)·X^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorSpec {
    Coeffs(Vec<Fe>),
    Invariant { a: Fe, v: Vec<Fe>, l: usize },
}

#[derive(Debug, ThisError, PartialEq, Eq)]
pub enum ConfigError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing key `{0}`")]
    Missing(String),
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: Error },
}

impl ConfigError {
    /// 2 for a violated hypothesis, 3 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            ConfigError::Invalid { source: Error::Hypothesis(_), .. } => 2,
            _ => 3,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InstanceConfig {
    pub family: Family,
    pub field: Field,
    pub twist: Twist,
    pub sets: Vec<Vec<Fe>>,
    pub factors: Vec<FactorSpec>,
    pub eta: Option<Vec<Fe>>,
    pub mult: Option<Vec<Fe>>,
    pub k: Option<usize>,
    pub budget: u64,
    lines: BTreeMap<String, usize>,
}

#[derive(Clone, Debug)]
enum Value {
    Int(u64),
    List(Vec<u64>),
    Word(String),
}

fn parse_value(raw: &str) -> Option<Value> {
    if let Some(inner) = raw.strip_prefix('[') {
        let inner = inner.strip_suffix(']')?.trim();
        if inner.is_empty() {
            return Some(Value::List(Vec::new()));
        }
        return inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>().map(Value::List);
    }
    if let Ok(n) = raw.parse() {
        return Some(Value::Int(n));
    }
    raw.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_').then(|| Value::Word(raw.to_string()))
}

/// Splits `set.3` into (`set`, 3) and `ginv.2.a` into (`ginv`, 2, `a`).
fn indexed(key: &str) -> Option<(&str, usize, Option<&str>)> {
    let mut parts = key.split('.');
    let head = parts.next()?;
    let idx: usize = parts.next()?.parse().ok().filter(|&i| i >= 1)?;
    let tail = parts.next();
    if parts.next().is_some() {
        return None;
    }
    Some((head, idx, tail))
}

struct Raw {
    values: BTreeMap<String, (usize, Value)>,
}

impl Raw {
    fn line(&self, key: &str) -> usize {
        self.values.get(key).map_or(0, |(l, _)| *l)
    }

    fn int(&self, key: &str) -> Result<Option<u64>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some((_, Value::Int(n))) => Ok(Some(*n)),
            Some((line, _)) => Err(ConfigError::Syntax { line: *line, msg: format!("`{key}` expects an integer") }),
        }
    }

    fn req_int(&self, key: &str) -> Result<u64, ConfigError> {
        self.int(key)?.ok_or_else(|| ConfigError::Missing(key.into()))
    }

    fn list(&self, key: &str) -> Result<Option<Vec<u64>>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some((_, Value::List(v))) => Ok(Some(v.clone())),
            Some((line, _)) => Err(ConfigError::Syntax { line: *line, msg: format!("`{key}` expects a list") }),
        }
    }

    fn word(&self, key: &str) -> Result<Option<String>, ConfigError> {
        match self.values.get(key) {
            None => Ok(None),
            Some((_, Value::Word(w))) => Ok(Some(w.clone())),
            Some((line, _)) => Err(ConfigError::Syntax { line: *line, msg: format!("`{key}` expects a name") }),
        }
    }
}

fn tokenize(text: &str) -> Result<Raw, ConfigError> {
    let mut values = BTreeMap::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| ConfigError::Syntax { line, msg: "expected `key = value`".into() })?;
        let key = key.trim();
        let known = matches!(
            key,
            "family" | "twist" | "eta" | "mult" | "k" | "budget" | "field.p" | "field.s" | "field.t" | "field.r" | "field.modulus"
        ) || matches!(
            indexed(key),
            Some(("set", _, None)) | Some(("g", _, None)) | Some(("ginv", _, Some("a" | "v" | "l")))
        );
        if !known {
            return Err(ConfigError::Syntax { line, msg: format!("unknown key `{key}`") });
        }
        let value = parse_value(value.trim())
            .ok_or_else(|| ConfigError::Syntax { line, msg: format!("cannot parse value `{}`", value.trim()) })?;
        if values.insert(key.to_string(), (line, value)).is_some() {
            return Err(ConfigError::Syntax { line, msg: format!("duplicate key `{key}`") });
        }
    }
    Ok(Raw { values })
}

fn to_u32(line: usize, v: u64) -> Result<u32, ConfigError> {
    u32::try_from(v).map_err(|_| ConfigError::Syntax { line, msg: format!("value {v} is too large") })
}

fn elements(field: &Field, line: usize, raw: &[u64]) -> Result<Vec<Fe>, ConfigError> {
    raw.iter()
        .map(|&x| {
            let x = to_u32(line, x)?;
            field.element(x).map_err(|source| ConfigError::Invalid { line, source })
        })
        .collect()
}

/// Parses and validates an instance description.
pub fn parse_config(text: &str) -> Result<InstanceConfig, ConfigError> {
    let raw = tokenize(text)?;
    let family_word = raw.word("family")?.ok_or_else(|| ConfigError::Missing("family".into()))?;
    let family = Family::parse(&family_word).ok_or_else(|| ConfigError::Syntax {
        line: raw.line("family"),
        msg: format!("unknown family `{family_word}`"),
    })?;
    let p = to_u32(raw.line("field.p"), raw.req_int("field.p")?)?;
    let s = to_u32(raw.line("field.s"), raw.int("field.s")?.unwrap_or(1))?;
    let t = to_u32(raw.line("field.t"), raw.req_int("field.t")?)?;
    let r = to_u32(raw.line("field.r"), raw.int("field.r")?.unwrap_or(1))?;
    let modulus = raw
        .list("field.modulus")?
        .map(|m| m.into_iter().map(|c| to_u32(raw.line("field.modulus"), c)).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let field = Field::new(p, s, t, r, modulus)
        .map_err(|source| ConfigError::Invalid { line: raw.line("field.p").max(raw.line("field.t")), source })?;
    let twist = match raw.word("twist")?.as_deref() {
        None | Some("frobenius") => Twist::Frobenius,
        Some("identity") => Twist::Identity,
        Some(other) => {
            return Err(ConfigError::Syntax { line: raw.line("twist"), msg: format!("unknown twist `{other}`") })
        }
    };

    let count = |prefix: &str| raw.values.keys().filter_map(|k| indexed(k)).filter(|(h, _, _)| *h == prefix).map(|(_, i, _)| i).max();
    let m = count("set").ok_or_else(|| ConfigError::Missing("set.1".into()))?;
    let mut sets = Vec::with_capacity(m);
    for i in 1..=m {
        let key = format!("set.{i}");
        let list = raw.list(&key)?.ok_or_else(|| ConfigError::Missing(key.clone()))?;
        sets.push(elements(&field, raw.line(&key), &list)?);
    }

    let nfactors = count("g").into_iter().chain(count("ginv")).max().unwrap_or(0);
    let mut factors = Vec::with_capacity(nfactors);
    for i in 1..=nfactors {
        let gkey = format!("g.{i}");
        let (akey, vkey, lkey) = (format!("ginv.{i}.a"), format!("ginv.{i}.v"), format!("ginv.{i}.l"));
        let has_inv = [&akey, &vkey, &lkey].iter().any(|k| raw.values.contains_key(k.as_str()));
        match (raw.list(&gkey)?, has_inv) {
            (Some(_), true) => {
                return Err(ConfigError::Syntax {
                    line: raw.line(&gkey),
                    msg: format!("factor {i} given both as `g.{i}` and `ginv.{i}`"),
                })
            }
            (Some(c), false) => factors.push(FactorSpec::Coeffs(elements(&field, raw.line(&gkey), &c)?)),
            (None, true) => {
                let a = raw.req_int(&akey)?;
                let a = field.element(to_u32(raw.line(&akey), a)?).map_err(|source| ConfigError::Invalid { line: raw.line(&akey), source })?;
                let v = raw.list(&vkey)?.ok_or_else(|| ConfigError::Missing(vkey.clone()))?;
                let v = elements(&field, raw.line(&vkey), &v)?;
                let l = raw.req_int(&lkey)? as usize;
                factors.push(FactorSpec::Invariant { a, v, l });
            }
            (None, false) => return Err(ConfigError::Missing(gkey)),
        }
    }

    let eta = raw.list("eta")?.map(|v| elements(&field, raw.line("eta"), &v)).transpose()?;
    let mult = raw.list("mult")?.map(|v| elements(&field, raw.line("mult"), &v)).transpose()?;
    let k = raw.int("k")?.map(|k| k as usize);
    let budget = raw.int("budget")?.unwrap_or(skewgoppa::codes::DEFAULT_BUDGET);
    let lines = raw.values.iter().map(|(k, (l, _))| (k.clone(), *l)).collect();
    let cfg = InstanceConfig { family, field, twist, sets, factors, eta, mult, k, budget, lines };
    cfg.check_shape()?;
    cfg.build().map_err(|e| cfg.locate(e))?;
    Ok(cfg)
}

impl InstanceConfig {
    pub fn line(&self, key: &str) -> usize {
        self.lines.get(key).copied().unwrap_or(0)
    }

    fn check_shape(&self) -> Result<(), ConfigError> {
        let family_line = self.line("family");
        let want_factors = match self.family {
            Family::Grs | Family::Gse | Family::Gsrs => 0,
            Family::Goppa | Family::Gsg => 1,
            Family::MGoppa | Family::Acar | Family::Gsmg => self.sets.len(),
        };
        let want_sets = match self.family {
            Family::MGoppa | Family::Acar | Family::Gsmg => self.sets.len(),
            _ => 1,
        };
        if self.sets.len() != want_sets {
            return Err(ConfigError::Syntax {
                line: family_line,
                msg: format!("family {} takes one set, found {}", self.family, self.sets.len()),
            });
        }
        if self.factors.len() != want_factors {
            return Err(ConfigError::Syntax {
                line: family_line,
                msg: format!("family {} takes {want_factors} factor(s), found {}", self.family, self.factors.len()),
            });
        }
        if matches!(self.family, Family::Grs | Family::Gse | Family::Gsrs) && self.k.is_none() {
            return Err(ConfigError::Missing("k".into()));
        }
        Ok(())
    }

    /// Attaches the most relevant line number to a construction error.
    pub fn locate(&self, e: Error) -> ConfigError {
        let last_set = format!("set.{}", self.sets.len());
        let factor_line = |i: usize| {
            let g = self.line(&format!("g.{i}"));
            if g > 0 {
                g
            } else {
                self.line(&format!("ginv.{i}.a")).max(self.line(&format!("ginv.{i}.v")))
            }
        };
        let line = match &e {
            Error::Hypothesis(Hypothesis::DistinctElements(x)) => (1..=self.sets.len())
                .find(|&i| self.sets[i - 1].iter().filter(|s| s.0 == *x).count() > 1)
                .map_or(0, |i| self.line(&format!("set.{i}"))),
            Error::Hypothesis(Hypothesis::NonzeroMultiplier(_)) => self.line("eta").max(self.line("mult")),
            Error::Hypothesis(Hypothesis::PIndependent | Hypothesis::InversePIndependent) => self.line(&last_set),
            Error::Hypothesis(Hypothesis::Coprime { factor, .. }) => factor_line(*factor),
            Error::Hypothesis(Hypothesis::Commutative(i)) => factor_line(*i),
            Error::Hypothesis(Hypothesis::Invariant | Hypothesis::Nonconstant) => factor_line(self.factors.len()),
            Error::Hypothesis(Hypothesis::VandermondeRank { .. } | Hypothesis::DimensionTooLarge { .. }) => {
                let k = self.line("k");
                if k > 0 {
                    k
                } else {
                    self.line(&last_set)
                }
            }
            Error::Dimension(_) => self.line("eta").max(self.line("mult")),
            _ => 0,
        };
        ConfigError::Invalid { line: if line == 0 { self.line("family") } else { line }, source: e }
    }
}
