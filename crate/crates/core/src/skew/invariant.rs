use super::{SkewPoly, SkewRing};
use crate::error::{Error, Hypothesis, Result};
use crate::field::Fe;

/// The shape `g = a·v(X^o)·X^l` of an invariant polynomial, where `o` is the
/// order of θ and `v` has coefficients in the fixed field with `v_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSpec {
    a: Fe,
    v: Vec<Fe>,
    l: usize,
    order: usize,
}

impl InvariantSpec {
    /// Normalizes `(a, v, l)`: a leading `v_0 ≠ 1` is folded into `a`, leading
    /// zeros of `v` shift `l`, trailing zeros are dropped.
    pub fn new(ring: &SkewRing, a: Fe, v: &[Fe], l: usize) -> Result<Self> {
        let f = ring.field();
        if a.is_zero() {
            return Err(Error::MustBeNonzero("a"));
        }
        for &c in v {
            f.element(c.0)?;
            if !ring.is_fixed(c) {
                return Err(Hypothesis::Invariant.into());
            }
        }
        let order = ring.order() as usize;
        let start = v.iter().position(|c| !c.is_zero()).ok_or(Error::MustBeNonzero("v"))?;
        let end = v.iter().rposition(|c| !c.is_zero()).unwrap();
        let v0 = v[start];
        let v0_inv = f.inv(v0);
        let v: Vec<Fe> = v[start..=end].iter().map(|&c| f.mul(c, v0_inv)).collect();
        Ok(InvariantSpec { a: f.mul(a, v0), v, l: l + start * order, order })
    }

    pub fn a(&self) -> Fe {
        self.a
    }

    /// Coefficients of `v` in powers of `X^o`, constant first, `v_0 = 1`.
    pub fn v(&self) -> &[Fe] {
        &self.v
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// `deg g = o·(len v − 1) + l`.
    pub fn degree(&self) -> usize {
        self.order * (self.v.len() - 1) + self.l
    }

    /// The polynomial `a·v(X^o)·X^l`.
    pub fn expand(&self, ring: &SkewRing) -> SkewPoly {
        let f = ring.field();
        let mut coeffs = vec![Fe::ZERO; self.degree() + 1];
        for (i, &c) in self.v.iter().enumerate() {
            coeffs[self.l + i * self.order] = f.mul(self.a, c);
        }
        SkewPoly::new(ring, coeffs)
    }
}

pub fn make_invariant(ring: &SkewRing, a: Fe, v: &[Fe], l: usize) -> Result<SkewPoly> {
    Ok(InvariantSpec::new(ring, a, v, l)?.expand(ring))
}

impl SkewPoly {
    /// Closed-form invariance test: nonzero coefficients only at exponents
    /// `l, l+o, …` with every ratio to the lowest one fixed by θ.
    pub fn is_invariant(&self) -> Result<Option<InvariantSpec>> {
        let ring = self.ring();
        let f = ring.field();
        let l = self.coeffs().iter().position(|c| !c.is_zero()).ok_or(Error::MustBeNonzero("polynomial"))?;
        let order = ring.order() as usize;
        let a = self.coeffs()[l];
        let a_inv = f.inv(a);
        let mut v = Vec::new();
        for (e, &c) in self.coeffs().iter().enumerate().skip(l) {
            if (e - l) % order != 0 {
                if !c.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            let ratio = f.mul(c, a_inv);
            if !ring.is_fixed(ratio) {
                return Ok(None);
            }
            v.push(ratio);
        }
        Ok(Some(InvariantSpec { a, v, l, order }))
    }
}

/// `h` with `h·(X − s) − 1 ∈ Rg` and `deg h < deg g`, together with `r = g(s)`.
///
/// Writing `g = q·(X − s) + r`, the annihilator is `h = −r^{-1}·q`.
pub fn linear_left_annihilator(g: &SkewPoly, s: Fe) -> Result<(SkewPoly, Fe)> {
    let ring = g.ring();
    let f = ring.field();
    match g.degree() {
        None => return Err(Error::MustBeNonzero("polynomial")),
        Some(0) => return Err(Hypothesis::Nonconstant.into()),
        Some(_) => {}
    }
    if g.is_invariant()?.is_none() {
        return Err(Hypothesis::Invariant.into());
    }
    let (q, rem) = g.right_divmod(&SkewPoly::linear(ring, s))?;
    let r = rem.coeff(0);
    if r.is_zero() {
        return Err(Hypothesis::Coprime { factor: 0, point: s.0 }.into());
    }
    let scale = f.neg(f.inv(r));
    Ok((q.scale_left(scale), r))
}

/// Quotient coefficients `q_0, …, q_{ρ−1}` of `g = q·(X − s) + r` for invariant
/// `g`, computed as `q_i = Σ_b g_{ρ−bo} N_{ρ−bo}(s) / N_{i+1}(s)`.
///
/// For `s = 0` the norms are not invertible and plain division is used.
pub fn qcoeffs_closed_form(ring: &SkewRing, spec: &InvariantSpec, s: Fe) -> Vec<Fe> {
    let g = spec.expand(ring);
    let rho = spec.degree();
    if s.is_zero() {
        let (q, _) = g.right_divmod(&SkewPoly::linear(ring, s)).expect("invariant polynomial is nonzero");
        return (0..rho).map(|i| q.coeff(i)).collect();
    }
    let f = ring.field();
    let o = spec.order;
    (0..rho)
        .map(|i| {
            let inv_norm = f.inv(ring.norm(i + 1, s));
            let terms = (0..=(rho - i - 1) / o).map(|b| {
                let e = rho - b * o;
                f.mul(g.coeff(e), ring.norm(e, s))
            });
            f.mul(f.sum(terms), inv_norm)
        })
        .collect()
}
