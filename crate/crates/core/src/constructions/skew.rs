//! Twisted families: GSE/GSRS and Generalized Skew Goppa codes.

use crate::codes::{Alphabet, LinearCode};
use crate::error::{Error, Hypothesis, Result};
use crate::field::Fe;
use crate::linalg::{skew_vandermonde, Matrix};
use crate::skew::{check_inverse_p_independent, check_p_independent, qcoeffs_closed_form, InvariantSpec, SkewPoly, SkewRing};

use super::classical::{check_multipliers, check_points};

/// `θ^i` applied entrywise through the ring's twist.
pub fn twist_entrywise(ring: &SkewRing, m: &Matrix, i: i64) -> Matrix {
    let rows = m.row_vecs().into_iter().map(|r| r.into_iter().map(|x| ring.theta_pow(x, i)).collect()).collect();
    Matrix::from_rows(m.field(), m.cols(), rows).expect("same shape")
}

/// `GSE_k(S, v)`, generated by the first `k` rows of `V_θ(S)` times `diag(v)`.
/// Requires `rk V_θ(S) ≥ k`.
pub fn gse(ring: &SkewRing, points: &[Fe], multipliers: &[Fe], k: usize) -> Result<LinearCode> {
    let n = points.len();
    check_points(ring.field(), points)?;
    check_multipliers(multipliers, n)?;
    if k > n {
        return Err(Hypothesis::DimensionTooLarge { k, n }.into());
    }
    let rank = skew_vandermonde(ring, points, n)?.rank();
    if rank < k {
        return Err(Hypothesis::VandermondeRank { rank, required: k }.into());
    }
    let g = skew_vandermonde(ring, points, k)?.scale_columns(multipliers)?;
    LinearCode::from_generator(Alphabet::Extension, &g)
}

/// `GSRS_k(S, v)`: a GSE code whose skew Vandermonde matrix has full rank `n`.
pub fn gsrs(ring: &SkewRing, points: &[Fe], multipliers: &[Fe], k: usize) -> Result<LinearCode> {
    let n = points.len();
    check_points(ring.field(), points)?;
    let rank = skew_vandermonde(ring, points, n)?.rank();
    if rank < n {
        return Err(Hypothesis::VandermondeRank { rank, required: n }.into());
    }
    gse(ring, points, multipliers, k)
}

/// Row-reduction certificate `T·H = V′·D·R·E`, where `V′` has entries
/// `θ(N_i(s_j^{-1}))` and `D = diag(g_ρ θ(N_{ρ−1}(s_j)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedForm {
    pub transform: Matrix,
    pub vandermonde: Matrix,
    pub ddiag: Vec<Fe>,
}

/// The factorization `H = H′·R·E` of a GSG parity-check matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityFactors {
    /// Quotient coefficients `q_{i,j}`, row `i`, column `j`.
    pub hprime: Matrix,
    /// `g(s_j)^{-1}`.
    pub rdiag: Vec<Fe>,
    /// `η_j`.
    pub ediag: Vec<Fe>,
    /// Present when `S^{-1}` is P-independent.
    pub reduced: Option<ReducedForm>,
}

impl ParityFactors {
    /// `H′·R·E`.
    pub fn product(&self) -> Matrix {
        let scale: Vec<Fe> = self.rdiag.iter().zip(&self.ediag).map(|(&r, &e)| self.hprime.field().mul(r, e)).collect();
        self.hprime.scale_columns(&scale).expect("one scalar per column")
    }
}

#[derive(Clone, Debug)]
pub struct Gsg {
    pub code: LinearCode,
    pub parity_check: Matrix,
    pub factors: ParityFactors,
    /// Whether `S^{-1}` is P-independent.
    pub inverse_independent: bool,
}

fn gsg_inputs(ring: &SkewRing, points: &[Fe], eta: &[Fe], spec: &InvariantSpec) -> Result<(SkewPoly, Vec<Fe>)> {
    check_points(ring.field(), points)?;
    check_multipliers(eta, points.len())?;
    if spec.degree() == 0 {
        return Err(Hypothesis::Nonconstant.into());
    }
    if !check_p_independent(ring, points) {
        return Err(Hypothesis::PIndependent.into());
    }
    let g = spec.expand(ring);
    let values = points
        .iter()
        .map(|&s| {
            let v = g.evaluate(s);
            if v.is_zero() {
                Err(Hypothesis::Coprime { factor: 1, point: s.0 }.into())
            } else {
                Ok(v)
            }
        })
        .collect::<Result<Vec<Fe>>>()?;
    Ok((g, values))
}

/// Whether `S^{-1}` is P-independent; false when `S` contains zero.
pub fn inverse_hypothesis(ring: &SkewRing, points: &[Fe]) -> bool {
    check_inverse_p_independent(ring, points).unwrap_or(false)
}

/// `H′` from the closed-form quotient coefficients.
pub fn hprime_closed_form(ring: &SkewRing, points: &[Fe], spec: &InvariantSpec) -> Result<Matrix> {
    let rho = spec.degree();
    let mut h = Matrix::zeros(ring.field(), rho, points.len())?;
    for (j, &s) in points.iter().enumerate() {
        for (i, q) in qcoeffs_closed_form(ring, spec, s).into_iter().enumerate() {
            h.set(i, j, q);
        }
    }
    Ok(h)
}

/// `H′` from right division of `g` by each `X − s_j`.
pub fn hprime_by_division(g: &SkewPoly, points: &[Fe]) -> Result<Matrix> {
    let rho = g.degree().ok_or(Error::MustBeNonzero("g"))?;
    let mut h = Matrix::zeros(g.field(), rho, points.len())?;
    for (j, &s) in points.iter().enumerate() {
        let (q, _) = g.right_divmod(&SkewPoly::linear(g.ring(), s))?;
        for i in 0..rho {
            h.set(i, j, q.coeff(i));
        }
    }
    Ok(h)
}

/// The systematic reduction of `H′`: `L` with `H′ = L·H″` is unitriangular with
/// `L[i][i+b·o] = g_{ρ−b·o}/g_ρ`, and `T = L^{-1}` is built by back substitution.
fn reduced_form(ring: &SkewRing, points: &[Fe], g: &SkewPoly) -> Result<ReducedForm> {
    let f = ring.field();
    let rho = g.degree().expect("nonconstant");
    let o = ring.order() as usize;
    let lead_inv = f.inv(g.coeff(rho));
    let mut t = Matrix::zeros(f, rho, rho)?;
    for i in (0..rho).rev() {
        t.set(i, i, Fe::ONE);
        let mut b = 1;
        while i + b * o < rho {
            let coeff = f.mul(g.coeff(rho - b * o), lead_inv);
            if !coeff.is_zero() {
                let k = i + b * o;
                for c in 0..rho {
                    let v = f.sub(t.get(i, c), f.mul(coeff, t.get(k, c)));
                    t.set(i, c, v);
                }
            }
            b += 1;
        }
    }
    let inverses: Vec<Fe> = points.iter().map(|&s| f.inv(s)).collect();
    let vandermonde = twist_entrywise(ring, &skew_vandermonde(ring, &inverses, rho)?, 1);
    let ddiag = points.iter().map(|&s| f.mul(g.coeff(rho), ring.theta(ring.norm(rho - 1, s)))).collect();
    Ok(ReducedForm { transform: t, vandermonde, ddiag })
}

/// Generalized Skew Goppa code `Γ̃(S, η, g, F_{q^r})` with its parity-check factors.
///
/// Needs `S` P-independent and `g(s_j) ≠ 0`. The reduced form is produced only
/// when `S^{-1}` is P-independent as well.
pub fn gsg(ring: &SkewRing, points: &[Fe], eta: &[Fe], spec: &InvariantSpec) -> Result<Gsg> {
    let f = ring.field();
    let (g, values) = gsg_inputs(ring, points, eta, spec)?;
    let hprime = hprime_closed_form(ring, points, spec)?;
    let rdiag: Vec<Fe> = values.iter().map(|&v| f.inv(v)).collect();
    let inverse_independent = inverse_hypothesis(ring, points);
    let reduced = if inverse_independent { Some(reduced_form(ring, points, &g)?) } else { None };
    let factors = ParityFactors { hprime, rdiag, ediag: eta.to_vec(), reduced };
    let parity_check = factors.product();
    let code = LinearCode::from_parity_check(Alphabet::Subfield, &parity_check)?;
    Ok(Gsg { code, parity_check, factors, inverse_independent })
}

/// `u_j = g_ρ θ(N_{ρ−1}(s_j)) g(s_j)^{-1} η_j`.
pub fn gsrs_weights(ring: &SkewRing, points: &[Fe], eta: &[Fe], g: &SkewPoly) -> Vec<Fe> {
    let f = ring.field();
    let rho = g.degree().expect("nonconstant");
    points
        .iter()
        .zip(eta)
        .map(|(&s, &e)| {
            let d = f.mul(g.coeff(rho), ring.theta(ring.norm(rho - 1, s)));
            f.mul(f.mul(d, f.inv(g.evaluate(s))), e)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct GsrsWitness {
    pub u: Vec<Fe>,
    /// `GSRS_ρ(S^{-1}, θ^{-1}(u))`.
    pub gsrs: LinearCode,
    /// `θ(G)` for the GSRS generator `G`.
    pub twisted_generator: Matrix,
    /// `θ(G)` equals `T·H` entrywise.
    pub transform_matches: bool,
    /// `Γ̃ = ker θ(G) ∩ F_{q^r}^n` as subspaces.
    pub codes_equal: bool,
}

impl GsrsWitness {
    pub fn holds(&self) -> bool {
        self.transform_matches && self.codes_equal
    }
}

/// Checks that the GSG code is the subfield subcode of `θ(GSRS_ρ(S^{-1}, θ^{-1}(u)))^⊥`.
pub fn gsg_gsrs_witness(ring: &SkewRing, points: &[Fe], eta: &[Fe], spec: &InvariantSpec) -> Result<GsrsWitness> {
    let f = ring.field();
    let built = gsg(ring, points, eta, spec)?;
    let reduced = built.factors.reduced.as_ref().ok_or(Hypothesis::InversePIndependent)?;
    let rho = spec.degree();
    if rho > points.len() {
        return Err(Hypothesis::DimensionTooLarge { k: rho, n: points.len() }.into());
    }
    let g = spec.expand(ring);
    let u = gsrs_weights(ring, points, eta, &g);
    let inverses: Vec<Fe> = points.iter().map(|&s| f.inv(s)).collect();
    let pre_u: Vec<Fe> = u.iter().map(|&x| ring.theta_pow(x, -1)).collect();
    let gsrs_code = gsrs(ring, &inverses, &pre_u, rho)?;
    let generator = skew_vandermonde(ring, &inverses, rho)?.scale_columns(&pre_u)?;
    let twisted = twist_entrywise(ring, &generator, 1);
    let transform_matches = reduced.transform.mul(&built.parity_check)? == twisted;
    let rhs = LinearCode::from_parity_check(Alphabet::Subfield, &twisted)?;
    Ok(GsrsWitness { u, gsrs: gsrs_code, twisted_generator: twisted, transform_matches, codes_equal: rhs == built.code })
}
