//! Parameter reports: length, dimension, distance and the bounds they should satisfy.

use std::fmt;

use crate::codes::{DistanceError, LinearCode};
use crate::constructions::GoppaInstance;
use crate::field::Field;

/// What is claimed about a family's parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub k_lower: Option<i64>,
    pub k_upper: Option<i64>,
    pub d_lower: Option<usize>,
    /// Exact distance, as for MDS families.
    pub d_exact: Option<usize>,
}

fn extension_ratio(field: &Field) -> i64 {
    i64::from(field.t() / field.r())
}

impl Bounds {
    /// No claims (GSE codes below full Vandermonde rank).
    pub fn none() -> Self {
        Bounds::default()
    }

    /// MDS: `d = n − k + 1`.
    pub fn mds(n: usize, k: usize) -> Self {
        Bounds { d_exact: Some(n + 1 - k), ..Bounds::default() }
    }

    /// Subfield Goppa-type bounds `n − (t/r)·deg g ≤ k ≤ n − deg g`, `d ≥ d_lower`.
    /// The upper bound is only claimed when `H` is known to have rank `deg g`.
    pub fn goppa(field: &Field, n: usize, deg: usize, d_lower: usize, full_rank: bool) -> Self {
        let n = n as i64;
        let deg_i = deg as i64;
        Bounds {
            k_lower: Some(n - extension_ratio(field) * deg_i),
            k_upper: full_rank.then_some(n - deg_i),
            d_lower: Some(d_lower),
            d_exact: None,
        }
    }

    /// GSG with invariant modulus of degree `deg` on `n` points.
    pub fn gsg(field: &Field, n: usize, deg: usize, inverse_independent: bool) -> Self {
        Bounds::goppa(field, n, deg, deg + 1, inverse_independent && deg <= n)
    }

    /// Commutative multivariate Goppa (and GSMG): `d ≥ min ρ_i + 1`.
    pub fn multivariate(field: &Field, sizes: &[usize], degrees: &[usize]) -> Self {
        let n = sizes.iter().product();
        let deg = degrees.iter().product();
        let full_rank = sizes.iter().zip(degrees).all(|(n, r)| r <= n);
        Bounds::goppa(field, n, deg, degrees.iter().min().map_or(1, |d| d + 1), full_rank)
    }

    pub fn gsmg(inst: &GoppaInstance) -> Self {
        let sizes: Vec<usize> = inst.sets().iter().map(Vec::len).collect();
        Bounds::multivariate(inst.field(), &sizes, &inst.factorization().degrees())
    }

    /// Augmented Cartesian codes: `k = n − Π ρ_i`, `d = min ρ_i + 1`.
    pub fn acar(sizes: &[usize], degrees: &[usize]) -> Self {
        let n: usize = sizes.iter().product();
        let k = (n - degrees.iter().product::<usize>()) as i64;
        Bounds {
            k_lower: Some(k),
            k_upper: Some(k),
            d_lower: None,
            d_exact: Some(degrees.iter().min().map_or(1, |d| d + 1)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterReport {
    pub n: usize,
    pub k: usize,
    pub bounds: Bounds,
    pub distance: Result<usize, DistanceError>,
    /// Rank of the parity-check matrix over the extension field, when one was built.
    pub rank_h: Option<usize>,
}

impl ParameterReport {
    pub fn k_lower_ok(&self) -> Option<bool> {
        self.bounds.k_lower.map(|b| self.k as i64 >= b)
    }

    pub fn k_upper_ok(&self) -> Option<bool> {
        self.bounds.k_upper.map(|b| self.k as i64 <= b)
    }

    pub fn d_lower_ok(&self) -> Option<bool> {
        match (&self.distance, self.bounds.d_lower) {
            (Ok(d), Some(b)) => Some(*d >= b),
            _ => None,
        }
    }

    pub fn d_exact_ok(&self) -> Option<bool> {
        match (&self.distance, self.bounds.d_exact) {
            (Ok(d), Some(b)) => Some(*d == b),
            _ => None,
        }
    }

    /// False when any evaluated check fails.
    pub fn passes(&self) -> bool {
        [self.k_lower_ok(), self.k_upper_ok(), self.d_lower_ok(), self.d_exact_ok()].iter().all(|c| *c != Some(false))
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for ParameterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(f, "k = {}", self.k)?;
        if let Some(r) = self.rank_h {
            writeln!(f, "rank(H) = {r}")?;
        }
        if let (Some(b), Some(ok)) = (self.bounds.k_lower, self.k_lower_ok()) {
            writeln!(f, "k >= {b} {}", verdict(ok))?;
        }
        if let (Some(b), Some(ok)) = (self.bounds.k_upper, self.k_upper_ok()) {
            writeln!(f, "k <= {b} {}", verdict(ok))?;
        }
        match &self.distance {
            Ok(d) => writeln!(f, "d = {d}")?,
            Err(DistanceError::ZeroCode) => writeln!(f, "d = undefined (zero code)")?,
            Err(e) => writeln!(f, "d = unknown ({e})")?,
        }
        if let Some(b) = self.bounds.d_lower {
            match self.d_lower_ok() {
                Some(ok) => writeln!(f, "d >= {b} {}", verdict(ok))?,
                None => writeln!(f, "d >= {b} SKIPPED")?,
            }
        }
        if let Some(b) = self.bounds.d_exact {
            match self.d_exact_ok() {
                Some(ok) => writeln!(f, "d == {b} {}", verdict(ok))?,
                None => writeln!(f, "d == {b} SKIPPED")?,
            }
        }
        Ok(())
    }
}

/// Computes `k` and, within `budget`, the exact minimum distance.
pub fn parameter_report(code: &LinearCode, bounds: Bounds, rank_h: Option<usize>, budget: u64) -> ParameterReport {
    ParameterReport { n: code.length(), k: code.dimension(), bounds, distance: code.min_distance(budget), rank_h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{Alphabet, DEFAULT_BUDGET};
    use crate::constructions::{goppa_classical, gsg};
    use crate::field::Fe;
    use crate::skew::{InvariantSpec, SkewPoly, SkewRing};

    fn f8() -> Field {
        Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn zero_code_report() {
        let f = f8();
        let z = LinearCode::zero(&f, Alphabet::Subfield, 3).unwrap();
        let rep = parameter_report(&z, Bounds::gsg(&f, 3, 3, true), Some(3), DEFAULT_BUDGET);
        assert_eq!(rep.k, 0);
        assert_eq!(rep.k_lower_ok(), Some(true));
        assert_eq!(rep.d_lower_ok(), None);
        assert!(rep.passes());
        assert!(rep.to_string().contains("d = undefined (zero code)"));
    }

    #[test]
    fn gsg_worked_example_report() {
        let r = SkewRing::frobenius(f8());
        let s: Vec<Fe> = [1, 2, 4].map(Fe).to_vec();
        let spec = InvariantSpec::new(&r, Fe::ONE, &[Fe::ONE], 3).unwrap();
        let built = gsg(&r, &s, &[Fe::ONE; 3], &spec).unwrap();
        let rep = parameter_report(&built.code, Bounds::gsg(r.field(), 3, 3, true), Some(built.parity_check.rank()), DEFAULT_BUDGET);
        assert_eq!(rep.to_string(), "n = 3\nk = 0\nrank(H) = 3\nk >= -6 PASS\nk <= 0 PASS\nd = undefined (zero code)\nd >= 4 SKIPPED\n");
    }

    #[test]
    fn classical_goppa_report() {
        let f = f8();
        let pts: Vec<Fe> = f.nonzero_elements().collect();
        let g = SkewPoly::new(&SkewRing::commutative(f.clone()), vec![Fe(1), Fe(1), Fe(1)]);
        let code = goppa_classical(&pts, &g).unwrap();
        let rep = parameter_report(&code, Bounds::goppa(&f, 7, 2, 3, true), None, DEFAULT_BUDGET);
        assert!(rep.passes());
        assert_eq!(rep.k_lower_ok(), Some(true));
        assert_eq!(rep.d_lower_ok(), Some(true));
    }
}
