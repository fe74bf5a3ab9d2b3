//! The Ore ring `F_{q^t}[X;θ]` with `X·a = θ(a)·X`.
//!
//! A [`SkewRing`] pairs a [`Field`] with the twisting automorphism. Besides
//! the Frobenius twist the ring can be built with the identity, which gives
//! the ordinary commutative polynomial ring over the same field; that is how
//! the classical constructions are obtained as special cases.

mod independence;
mod invariant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

pub use independence::{
    check_inverse_p_independent, check_p_independent, inverse_sufficient_condition, lclm, lclm_linear_incremental,
    lclm_pair, right_gcd,
};
pub use invariant::{linear_left_annihilator, make_invariant, qcoeffs_closed_form, InvariantSpec};

/// The automorphism twisting multiplication by `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Twist {
    /// θ = id: the commutative polynomial ring.
    Identity,
    /// θ(a) = a^q.
    Frobenius,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewRing {
    field: Field,
    twist: Twist,
}

impl SkewRing {
    pub fn new(field: Field, twist: Twist) -> Self {
        SkewRing { field, twist }
    }

    pub fn frobenius(field: Field) -> Self {
        SkewRing::new(field, Twist::Frobenius)
    }

    pub fn commutative(field: Field) -> Self {
        SkewRing::new(field, Twist::Identity)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn twist(&self) -> Twist {
        self.twist
    }

    pub fn is_commutative(&self) -> bool {
        self.twist == Twist::Identity || self.field.t() == 1
    }

    /// Order of θ: `t` for the Frobenius, 1 for the identity.
    pub fn order(&self) -> u32 {
        match self.twist {
            Twist::Identity => 1,
            Twist::Frobenius => self.field.t(),
        }
    }

    #[inline]
    pub fn theta_pow(&self, a: Fe, i: i64) -> Fe {
        match self.twist {
            Twist::Identity => a,
            Twist::Frobenius => self.field.frobenius_power(a, i),
        }
    }

    #[inline]
    pub fn theta(&self, a: Fe) -> Fe {
        self.theta_pow(a, 1)
    }

    /// Membership in the fixed field of θ.
    pub fn is_fixed(&self, a: Fe) -> bool {
        self.theta(a) == a
    }

    /// `N_i(a) = Π_{k<i} θ^k(a)`.
    pub fn norm(&self, i: usize, a: Fe) -> Fe {
        match self.twist {
            Twist::Identity => self.field.pow(a, i as u64),
            Twist::Frobenius => self.field.partial_norm(i, a),
        }
    }

    /// `^b a = θ(b)·a·b^{-1}`.
    pub fn conjugate(&self, a: Fe, b: Fe) -> Result<Fe> {
        let f = &self.field;
        let b_inv = f.try_inv(b).ok_or(Error::DivisionByZero)?;
        Ok(f.mul(f.mul(self.theta(b), a), b_inv))
    }

    /// A key identifying the θ-conjugacy class of a nonzero element.
    ///
    /// Nonzero classes are separated by the norm `N_{ord θ}`.
    pub fn class_key(&self, a: Fe) -> Fe {
        match self.twist {
            Twist::Identity => a,
            Twist::Frobenius => self.field.norm(a),
        }
    }
}

/// A polynomial `Σ c_i X^i` in a [`SkewRing`], coefficients constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ring: SkewRing,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<u32> = self.coeffs.iter().map(|c| c.0).collect();
        write!(f, "SkewPoly{vals:?}")
    }
}

impl SkewPoly {
    pub fn new(ring: &SkewRing, mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { ring: ring.clone(), coeffs }
    }

    pub fn zero(ring: &SkewRing) -> Self {
        SkewPoly::new(ring, Vec::new())
    }

    pub fn one(ring: &SkewRing) -> Self {
        SkewPoly::constant(ring, Fe::ONE)
    }

    pub fn constant(ring: &SkewRing, c: Fe) -> Self {
        SkewPoly::new(ring, vec![c])
    }

    pub fn x(ring: &SkewRing) -> Self {
        SkewPoly::monomial(ring, Fe::ONE, 1)
    }

    /// `c·X^d`.
    pub fn monomial(ring: &SkewRing, c: Fe, d: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        SkewPoly::new(ring, coeffs)
    }

    /// `X − s`.
    pub fn linear(ring: &SkewRing, s: Fe) -> Self {
        SkewPoly::new(ring, vec![ring.field.neg(s), Fe::ONE])
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        &self.ring.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    fn same_ring(&self, other: &SkewPoly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(SkewPoly::new(&self.ring, coeffs))
    }

    pub fn checked_sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        let f = &self.ring.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(SkewPoly::new(&self.ring, coeffs))
    }

    /// Twisted product: `(Σ f_i X^i)(Σ g_j X^j) = Σ f_i θ^i(g_j) X^{i+j}`.
    pub fn checked_mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(SkewPoly::zero(&self.ring));
        }
        let f = &self.ring.field;
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let tb = self.ring.theta_pow(b, i as i64);
                out[i + j] = f.add(out[i + j], f.mul(a, tb));
            }
        }
        Ok(SkewPoly::new(&self.ring, out))
    }

    /// `c·self` (scalar on the left, no twist).
    pub fn scale_left(&self, c: Fe) -> SkewPoly {
        let f = &self.ring.field;
        SkewPoly::new(&self.ring, self.coeffs.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> SkewPoly {
        match self.leading() {
            Some(lead) => self.scale_left(self.ring.field.inv(lead)),
            None => self.clone(),
        }
    }

    /// `f = quotient·g + remainder` with `deg remainder < deg g`.
    pub fn right_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ring(g)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ring.field;
        let lead = g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; rem.len().saturating_sub(dg)];
        while let Some(dr) = last_nonzero(&rem).filter(|&d| d >= dg) {
            let d = dr - dg;
            // c X^d · g has leading coefficient c·θ^d(lead)
            let c = f.mul(rem[dr], f.inv(self.ring.theta_pow(lead, d as i64)));
            quot[d] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let term = f.mul(c, self.ring.theta_pow(gj, d as i64));
                rem[d + j] = f.sub(rem[d + j], term);
            }
        }
        Ok((SkewPoly::new(&self.ring, quot), SkewPoly::new(&self.ring, rem)))
    }

    /// `f = g·quotient + remainder` with `deg remainder < deg g`.
    pub fn left_divmod(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ring(g)?;
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.ring.field;
        let lead = g.coeffs[dg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Fe::ZERO; rem.len().saturating_sub(dg)];
        while let Some(dr) = last_nonzero(&rem).filter(|&d| d >= dg) {
            let d = dr - dg;
            // g · c X^d has leading coefficient lead·θ^{dg}(c)
            let c = self.ring.theta_pow(f.mul(rem[dr], f.inv(lead)), -(dg as i64));
            quot[d] = c;
            for (j, &gj) in g.coeffs.iter().enumerate() {
                let term = f.mul(gj, self.ring.theta_pow(c, j as i64));
                rem[d + j] = f.sub(rem[d + j], term);
            }
        }
        Ok((SkewPoly::new(&self.ring, quot), SkewPoly::new(&self.ring, rem)))
    }

    /// Right evaluation `g(a) = Σ g_i N_i(a)`, the remainder of division by `X − a`.
    pub fn evaluate(&self, a: Fe) -> Fe {
        let f = &self.ring.field;
        let mut acc = Fe::ZERO;
        let mut norm = Fe::ONE;
        for (i, &c) in self.coeffs.iter().enumerate() {
            acc = f.add(acc, f.mul(c, norm));
            norm = f.mul(self.ring.theta_pow(a, i as i64), norm);
        }
        acc
    }

    /// Definitional invariance test `gR = Rg`, via `g·b ∈ Rg` for every
    /// constant `b` and `g·X ∈ Rg`.
    pub fn is_invariant_by_definition(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let in_left_ideal = |h: &SkewPoly| h.right_divmod(self).map(|(_, r)| r.is_zero()).unwrap_or(false);
        let x = SkewPoly::x(&self.ring);
        if !in_left_ideal(&(self * &x)) {
            return false;
        }
        self.ring
            .field
            .nonzero_elements()
            .all(|b| in_left_ideal(&(self * &SkewPoly::constant(&self.ring, b))))
    }
}

fn last_nonzero(v: &[Fe]) -> Option<usize> {
    v.iter().rposition(|c| !c.is_zero())
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_add(rhs).expect("operands in different rings")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_sub(rhs).expect("operands in different rings")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: &SkewPoly) -> SkewPoly {
        self.checked_mul(rhs).expect("operands in different rings")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = &self.ring.field;
        SkewPoly::new(&self.ring, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Checked product, failing on mismatched rings.
pub fn skew_mul(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.checked_mul(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> SkewRing {
        SkewRing::frobenius(Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap())
    }

    fn poly(ring: &SkewRing, c: &[u32]) -> SkewPoly {
        SkewPoly::new(ring, c.iter().map(|&x| Fe(x)).collect())
    }

    const W: Fe = Fe(2);

    #[test]
    fn defining_relation() {
        let r = f8();
        let x = SkewPoly::x(&r);
        let a = SkewPoly::constant(&r, W);
        assert_eq!(&x * &a, SkewPoly::monomial(&r, Fe(4), 1));
        assert_eq!(&a * &x, SkewPoly::monomial(&r, W, 1));
        let f = poly(&r, &[3, 0, 7, 1]);
        assert_eq!(&f * &SkewPoly::one(&r), f);
    }

    #[test]
    fn product_of_linear_factors() {
        let r = f8();
        let prod = &SkewPoly::linear(&r, W) * &SkewPoly::linear(&r, Fe(4));
        // X² − (θ(ω²) + ω)X + ω³ = X² + ω²X + (ω+1)
        assert_eq!(prod, poly(&r, &[3, 4, 1]));
        let (q, rem) = prod.right_divmod(&SkewPoly::linear(&r, Fe(4))).unwrap();
        assert_eq!(q, SkewPoly::linear(&r, W));
        assert!(rem.is_zero());
    }

    #[test]
    fn mismatched_rings() {
        let r = f8();
        let other = SkewRing::commutative(r.field().clone());
        assert_eq!(skew_mul(&SkewPoly::x(&r), &SkewPoly::x(&other)), Err(Error::FieldMismatch));
    }

    #[test]
    fn right_division_examples() {
        let r = f8();
        let g = poly(&r, &[5, 1, 3]);
        let (q, rem) = g.right_divmod(&g).unwrap();
        assert_eq!((q, rem.is_zero()), (SkewPoly::one(&r), true));

        let small = poly(&r, &[6, 1]);
        let (q, rem) = small.right_divmod(&g).unwrap();
        assert!(q.is_zero());
        assert_eq!(rem, small);

        let f = field_ops(&r);
        for s in r.field().nonzero_elements() {
            let x3 = SkewPoly::monomial(&r, Fe::ONE, 3);
            let (q, rem) = x3.right_divmod(&SkewPoly::linear(&r, s)).unwrap();
            let t1 = f.frobenius(s);
            let t2 = f.frobenius_power(s, 2);
            assert_eq!(q, SkewPoly::new(&r, vec![f.mul(t2, t1), t2, Fe::ONE]));
            assert_eq!(rem, SkewPoly::constant(&r, f.partial_norm(3, s)));
        }
        assert_eq!(g.right_divmod(&SkewPoly::zero(&r)), Err(Error::DivisionByZero));
    }

    fn field_ops(r: &SkewRing) -> Field {
        r.field().clone()
    }

    #[test]
    fn left_division_examples() {
        let r = f8();
        let g = poly(&r, &[5, 1, 3]);
        let h = poly(&r, &[2, 7, 0, 4]);
        let (q, rem) = (&g * &h).left_divmod(&g).unwrap();
        assert_eq!(q, h);
        assert!(rem.is_zero());
        let (q, rem) = g.left_divmod(&g).unwrap();
        assert_eq!((q, rem.is_zero()), (SkewPoly::one(&r), true));
    }

    #[test]
    fn evaluation_examples() {
        let r = f8();
        assert_eq!(SkewPoly::constant(&r, Fe(6)).evaluate(W), Fe(6));
        assert_eq!(SkewPoly::x(&r).evaluate(W), W);
        let x3 = SkewPoly::monomial(&r, Fe::ONE, 3);
        for a in r.field().nonzero_elements() {
            assert_eq!(x3.evaluate(a), Fe::ONE);
        }
    }

    #[test]
    fn evaluation_is_division_remainder_exhaustive_small() {
        let r = f8();
        let field = r.field().clone();
        for c0 in field.elements() {
            for c1 in field.elements() {
                for c2 in [Fe(0), Fe(1), Fe(6)] {
                    let g = SkewPoly::new(&r, vec![c0, c1, c2, Fe(3)]);
                    for a in field.elements() {
                        let (_, rem) = g.right_divmod(&SkewPoly::linear(&r, a)).unwrap();
                        assert_eq!(rem.coeff(0), g.evaluate(a));
                    }
                }
            }
        }
    }

    #[test]
    fn commutative_twist_is_ordinary_polynomials() {
        let r = SkewRing::commutative(Field::new(2, 1, 3, 1, None).unwrap());
        let a = poly(&r, &[1, 2, 3]);
        let b = poly(&r, &[4, 5]);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(SkewPoly::x(&r).evaluate(W), W);
        assert_eq!(poly(&r, &[0, 0, 1]).evaluate(W), Fe(4));
    }
}
