//! Generalized Skew Multivariate Goppa codes.

use crate::codes::{Alphabet, LinearCode};
use crate::error::{Error, Hypothesis, Result};
use crate::field::{Fe, Field};
use crate::linalg::{skew_vandermonde, Matrix};
use crate::ore::GoppaFactorization;
use crate::skew::{check_inverse_p_independent, check_p_independent, InvariantSpec, SkewPoly, SkewRing};

use super::classical::{check_distinct, check_multipliers, check_points, nonvanishing_values};
use super::skew::{gsrs_weights, hprime_by_division, hprime_closed_form, twist_entrywise};

/// Validated inputs `(S_1, …, S_m, η, g_1, …, g_m)`.
#[derive(Clone, Debug)]
pub struct GoppaInstance {
    sets: Vec<Vec<Fe>>,
    gf: GoppaFactorization,
    spec: InvariantSpec,
    eta: Vec<Fe>,
}

impl GoppaInstance {
    /// `S_1..S_{m−1}` must be sets, `S_m` and `S_m^{-1}` P-independent, every
    /// factor nonconstant and nonvanishing on its set, and `η ∈ (F*)^{n_m}`.
    pub fn new(sets: Vec<Vec<Fe>>, factors: Vec<SkewPoly>, eta: Vec<Fe>) -> Result<Self> {
        if sets.len() != factors.len() {
            return Err(Error::Dimension(format!("{} sets for {} factors", sets.len(), factors.len())));
        }
        let gf = GoppaFactorization::new(factors)?;
        let m = gf.num_vars();
        let field = gf.field().clone();
        for (i, (set, g)) in sets.iter().zip(gf.factors()).enumerate() {
            check_points(&field, set)?;
            check_distinct(set)?;
            if g.degree() == Some(0) {
                return Err(Hypothesis::Nonconstant.into());
            }
            nonvanishing_values(g, set, i + 1)?;
        }
        let ring = gf.ring();
        let last = &sets[m - 1];
        if !check_p_independent(ring, last) {
            return Err(Hypothesis::PIndependent.into());
        }
        if !check_inverse_p_independent(ring, last).unwrap_or(false) {
            return Err(Hypothesis::InversePIndependent.into());
        }
        check_multipliers(&eta, last.len())?;
        let spec = gf.factors()[m - 1].is_invariant()?.expect("checked by the factorization");
        Ok(GoppaInstance { sets, gf, spec, eta })
    }

    pub fn sets(&self) -> &[Vec<Fe>] {
        &self.sets
    }

    pub fn factorization(&self) -> &GoppaFactorization {
        &self.gf
    }

    pub fn ring(&self) -> &SkewRing {
        self.gf.ring()
    }

    pub fn field(&self) -> &Field {
        self.gf.field()
    }

    pub fn eta(&self) -> &[Fe] {
        &self.eta
    }

    pub fn last_spec(&self) -> &InvariantSpec {
        &self.spec
    }

    pub fn length(&self) -> usize {
        self.sets.iter().map(Vec::len).product()
    }

    /// `η_{j_m}` for every grid point, `j_m` fastest.
    pub fn expanded_eta(&self) -> Vec<Fe> {
        let n = self.length();
        let nm = self.eta.len();
        (0..n).map(|j| self.eta[j % nm]).collect()
    }
}

#[derive(Clone, Debug)]
pub struct Gsmg {
    pub code: LinearCode,
    pub parity_check: Matrix,
    /// `H_i·R_i` per variable.
    pub blocks: Vec<Matrix>,
    /// `⊗_{i<m} GRS_{ρ_i}(S_i, g_i) ⊗ θ(GSRS_{ρ_m}(S_m^{-1}, θ^{-1}(u)))`.
    pub tensor_code: LinearCode,
    pub tensor_generator: Matrix,
}

impl Gsmg {
    /// `Γ̃ = ker T̃ ∩ F_{q^r}^n`.
    pub fn matches_tensor(&self) -> Result<bool> {
        Ok(LinearCode::from_parity_check(Alphabet::Subfield, &self.tensor_generator)? == self.code)
    }
}

fn kron_all(mats: &[Matrix]) -> Result<Matrix> {
    let (first, rest) = mats.split_first().ok_or(Error::Empty)?;
    rest.iter().try_fold(first.clone(), |acc, m| acc.kronecker(m))
}

/// Builds `Γ̃(S, η, g, F_{q^r})` from `H = (⊗ H_i R_i)·E` together with its tensor description.
pub fn gsmg(inst: &GoppaInstance) -> Result<Gsmg> {
    let f = inst.field();
    let ring = inst.ring();
    let m = inst.gf.num_vars();
    let mut blocks = Vec::with_capacity(m);
    let mut tensor = Vec::with_capacity(m);
    for (i, (set, g)) in inst.sets.iter().zip(inst.gf.factors()).enumerate() {
        let values = nonvanishing_values(g, set, i + 1)?;
        let rinv: Vec<Fe> = values.iter().map(|&v| f.inv(v)).collect();
        if i + 1 < m {
            blocks.push(hprime_by_division(g, set)?.scale_columns(&rinv)?);
            let rho = g.degree().expect("nonconstant");
            tensor.push(skew_vandermonde(g.ring(), set, rho)?.scale_columns(&rinv)?);
        } else {
            blocks.push(hprime_closed_form(ring, set, &inst.spec)?.scale_columns(&rinv)?);
            let u = gsrs_weights(ring, set, &inst.eta, g);
            let inverses: Vec<Fe> = set.iter().map(|&s| f.inv(s)).collect();
            let pre_u: Vec<Fe> = u.iter().map(|&x| ring.theta_pow(x, -1)).collect();
            let gen = skew_vandermonde(ring, &inverses, inst.spec.degree())?.scale_columns(&pre_u)?;
            tensor.push(twist_entrywise(ring, &gen, 1));
        }
    }
    let parity_check = kron_all(&blocks)?.scale_columns(&inst.expanded_eta())?;
    let code = LinearCode::from_parity_check(Alphabet::Subfield, &parity_check)?;
    let tensor_generator = kron_all(&tensor)?;
    let tensor_code = LinearCode::from_generator(Alphabet::Extension, &tensor_generator)?;
    Ok(Gsmg { code, parity_check, blocks, tensor_code, tensor_generator })
}
