//! The ring `F_{q^t}[X_1, …, X_m; θ]` where the variables commute with each
//! other, `X_1, …, X_{m−1}` commute with constants, and `X_m·a = θ(a)·X_m`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Hypothesis, Result};
use crate::field::{Fe, Field};
use crate::skew::{linear_left_annihilator, SkewPoly, SkewRing, Twist};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiOrePoly {
    ring: SkewRing,
    m: usize,
    terms: BTreeMap<Vec<u32>, Fe>,
}

impl MultiOrePoly {
    /// `ring` carries the field and the twist acting through `X_m`.
    pub fn zero(ring: &SkewRing, m: usize) -> Self {
        assert!(m >= 1, "at least one variable");
        MultiOrePoly { ring: ring.clone(), m, terms: BTreeMap::new() }
    }

    pub fn constant(ring: &SkewRing, m: usize, c: Fe) -> Self {
        MultiOrePoly::monomial(ring, m, c, vec![0; m])
    }

    pub fn monomial(ring: &SkewRing, m: usize, c: Fe, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), m, "exponent vector length");
        let mut p = MultiOrePoly::zero(ring, m);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `X_i`, zero-based.
    pub fn var(ring: &SkewRing, m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        MultiOrePoly::monomial(ring, m, Fe::ONE, e)
    }

    /// Places a univariate polynomial in variable `i` (zero-based).
    pub fn from_univariate(ring: &SkewRing, m: usize, i: usize, p: &SkewPoly) -> Self {
        let mut out = MultiOrePoly::zero(ring, m);
        for (d, &c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; m];
                e[i] = d as u32;
                out.terms.insert(e, c);
            }
        }
        out
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Fe> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Fe {
        self.terms.get(exps).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in variable `i`; `None` for zero.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    fn compatible(&self, other: &MultiOrePoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::FieldMismatch);
        }
        if self.m != other.m {
            return Err(Error::Dimension(format!("{} vs {} variables", self.m, other.m)));
        }
        Ok(())
    }

    fn accumulate(&mut self, e: Vec<u32>, c: Fe) {
        let f = self.ring.field().clone();
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiOrePoly) -> Result<MultiOrePoly> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    /// `c·self`.
    pub fn scale_left(&self, c: Fe) -> MultiOrePoly {
        let f = self.ring.field();
        let mut out = MultiOrePoly::zero(&self.ring, self.m);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(e, &x)| (e.clone(), f.mul(c, x))).collect();
        out
    }

    /// `(a X^u)(b X^w) = a θ^{u_m}(b) X^{u+w}`.
    pub fn multi_mul(&self, other: &MultiOrePoly) -> Result<MultiOrePoly> {
        self.compatible(other)?;
        let f = self.ring.field();
        let mut out = MultiOrePoly::zero(&self.ring, self.m);
        for (u, &a) in &self.terms {
            let shift = u[self.m - 1] as i64;
            for (w, &b) in &other.terms {
                let e: Vec<u32> = u.iter().zip(w).map(|(x, y)| x + y).collect();
                out.accumulate(e, f.mul(a, self.ring.theta_pow(b, shift)));
            }
        }
        Ok(out)
    }

    /// Closed-form center test: coefficients fixed by θ and `X_m`-exponents
    /// divisible by the order of θ.
    pub fn is_central(&self) -> bool {
        let order = self.ring.order();
        self.terms.iter().all(|(e, &c)| self.ring.is_fixed(c) && e[self.m - 1] % order == 0)
    }

    /// Definitional center test: commutes with every constant and every variable.
    pub fn is_central_by_definition(&self) -> bool {
        let commutes = |g: &MultiOrePoly| self.multi_mul(g).ok() == g.multi_mul(self).ok();
        (0..self.m).all(|i| commutes(&MultiOrePoly::var(&self.ring, self.m, i)))
            && self.ring.field().nonzero_elements().all(|b| commutes(&MultiOrePoly::constant(&self.ring, self.m, b)))
    }

    /// Terms in graded lexicographic order with `X_1 > … > X_m`, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Vec<u32>, Fe)> {
        let mut v: Vec<(&Vec<u32>, Fe)> = self.terms.iter().map(|(e, &c)| (e, c)).collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Debug for MultiOrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiOrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mut s = c.0.to_string();
                for (i, &d) in e.iter().enumerate() {
                    match d {
                        0 => {}
                        1 => s.push_str(&format!("*X{}", i + 1)),
                        _ => s.push_str(&format!("*X{}^{d}", i + 1)),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `g = g_1⋯g_m` with `g_1, …, g_{m−1}` commutative and `g_m` invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoppaFactorization {
    ring: SkewRing,
    factors: Vec<SkewPoly>,
}

impl GoppaFactorization {
    /// The twist of the last factor's ring is the twist of the whole ring.
    pub fn new(factors: Vec<SkewPoly>) -> Result<Self> {
        let last = factors.last().ok_or(Error::Empty)?;
        let ring = last.ring().clone();
        for (i, g) in factors.iter().enumerate() {
            if g.field() != ring.field() {
                return Err(Error::FieldMismatch);
            }
            if g.is_zero() {
                return Err(Error::MustBeNonzero("factor"));
            }
            if i + 1 < factors.len() && g.ring().twist() != Twist::Identity {
                return Err(Hypothesis::Commutative(i + 1).into());
            }
        }
        if last.is_invariant()?.is_none() {
            return Err(Hypothesis::Invariant.into());
        }
        Ok(GoppaFactorization { ring, factors })
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn num_vars(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[SkewPoly] {
        &self.factors
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|g| g.degree().unwrap()).collect()
    }

    /// `deg g = Π ρ_i`.
    pub fn degree(&self) -> usize {
        self.degrees().iter().product()
    }

    pub fn total_degree(&self) -> usize {
        self.degrees().iter().sum()
    }

    pub fn expand_product(&self) -> MultiOrePoly {
        let m = self.num_vars();
        self.factors.iter().enumerate().fold(MultiOrePoly::constant(&self.ring, m, Fe::ONE), |acc, (i, g)| {
            let gi = MultiOrePoly::from_univariate(&self.ring, m, i, g);
            acc.multi_mul(&gi).expect("same ring")
        })
    }

    /// Per-variable annihilators `h_{i}` with `h_i·(X_i − s_i) − 1 ∈ R g_i`.
    pub fn annihilators(&self, point: &[Fe]) -> Result<Vec<SkewPoly>> {
        if point.len() != self.num_vars() {
            return Err(Error::Dimension(format!("point has {} coordinates, need {}", point.len(), self.num_vars())));
        }
        self.factors
            .iter()
            .zip(point)
            .enumerate()
            .map(|(i, (g, &s))| {
                linear_left_annihilator(g, s).map(|(h, _)| h).map_err(|e| match e {
                    Error::Hypothesis(Hypothesis::Coprime { point, .. }) => Hypothesis::Coprime { factor: i + 1, point }.into(),
                    other => other,
                })
            })
            .collect()
    }

    /// `h = h_1⋯h_m` for one point of the grid.
    pub fn assemble_h(&self, point: &[Fe]) -> Result<MultiOrePoly> {
        let m = self.num_vars();
        let hs = self.annihilators(point)?;
        Ok(hs.iter().enumerate().fold(MultiOrePoly::constant(&self.ring, m, Fe::ONE), |acc, (i, h)| {
            acc.multi_mul(&MultiOrePoly::from_univariate(&self.ring, m, i, h)).expect("same ring")
        }))
    }
}

/// Grid points `(s_{1j_1}, …, s_{mj_m})` with `j_m` varying fastest.
pub fn grid_points(sets: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let mut out = vec![Vec::new()];
    for set in sets {
        out = out.into_iter().flat_map(|prefix| set.iter().map(move |&s| [prefix.clone(), vec![s]].concat())).collect();
    }
    out
}

/// Index tuples `(j_1, …, j_m)` of a grid with the given side lengths, `j_m` fastest.
pub fn grid_indices(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &n in sizes {
        out = out.into_iter().flat_map(|prefix: Vec<usize>| (0..n).map(move |j| [prefix.clone(), vec![j]].concat())).collect();
    }
    out
}

/// Decides `Σ_j c_j η_{j_m} h_j = 0` by direct expansion in the ring. The
/// grid is enumerated with `j_m` fastest and `eta` has one entry per `S_m`.
pub fn membership_oracle(gf: &GoppaFactorization, sets: &[Vec<Fe>], eta: &[Fe], c: &[Fe]) -> Result<bool> {
    let m = gf.num_vars();
    if sets.len() != m {
        return Err(Error::Dimension(format!("{} sets for {m} variables", sets.len())));
    }
    let nm = sets[m - 1].len();
    if eta.len() != nm {
        return Err(Error::Dimension(format!("{} multipliers for {nm} points", eta.len())));
    }
    let points = grid_points(sets);
    if c.len() != points.len() {
        return Err(Error::Dimension(format!("word of length {} for {} points", c.len(), points.len())));
    }
    let f = gf.field();
    let mut acc = MultiOrePoly::zero(gf.ring(), m);
    for (j, point) in points.iter().enumerate() {
        if c[j].is_zero() {
            continue;
        }
        let h = gf.assemble_h(point)?;
        acc = acc.add(&h.scale_left(f.mul(c[j], eta[j % nm])))?;
    }
    Ok(acc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skew::make_invariant;

    fn f8() -> Field {
        Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn twisting_rules() {
        let ring = SkewRing::frobenius(f8());
        let a = MultiOrePoly::constant(&ring, 2, Fe(2));
        let x1 = MultiOrePoly::var(&ring, 2, 0);
        let x2 = MultiOrePoly::var(&ring, 2, 1);
        assert_eq!(x1.multi_mul(&a).unwrap(), MultiOrePoly::monomial(&ring, 2, Fe(2), vec![1, 0]));
        assert_eq!(x2.multi_mul(&a).unwrap(), MultiOrePoly::monomial(&ring, 2, Fe(4), vec![0, 1]));
        let x3 = MultiOrePoly::var(&ring, 3, 0).multi_mul(&MultiOrePoly::var(&ring, 3, 2)).unwrap();
        let ax2 = MultiOrePoly::monomial(&ring, 3, Fe(2), vec![0, 1, 0]);
        assert_eq!(x3.multi_mul(&ax2).unwrap(), MultiOrePoly::monomial(&ring, 3, Fe(4), vec![1, 1, 1]));
        assert!(x1.multi_mul(&MultiOrePoly::var(&ring, 3, 0)).is_err());
    }

    #[test]
    fn center_examples() {
        let ring = SkewRing::frobenius(f8());
        assert!(MultiOrePoly::constant(&ring, 2, Fe::ONE).is_central());
        assert!(!MultiOrePoly::var(&ring, 2, 1).is_central());
        let f = MultiOrePoly::var(&ring, 2, 0).add(&MultiOrePoly::monomial(&ring, 2, Fe::ONE, vec![0, 3])).unwrap();
        assert!(f.is_central() && f.is_central_by_definition());
        let w = MultiOrePoly::monomial(&ring, 2, Fe(2), vec![1, 0]);
        assert!(!w.is_central() && !w.is_central_by_definition());
    }

    #[test]
    fn expansion_examples() {
        let field = f8();
        let ring = SkewRing::frobenius(field.clone());
        let comm = SkewRing::commutative(field.clone());
        let gf = GoppaFactorization::new(vec![SkewPoly::x(&comm), SkewPoly::x(&ring)]).unwrap();
        assert_eq!(gf.expand_product(), MultiOrePoly::monomial(&ring, 2, Fe::ONE, vec![1, 1]));

        let g = make_invariant(&ring, Fe::ONE, &[Fe::ONE, Fe::ONE], 0).unwrap();
        let single = GoppaFactorization::new(vec![g.clone()]).unwrap();
        assert_eq!(single.expand_product(), MultiOrePoly::from_univariate(&ring, 1, 0, &g));

        let g1 = SkewPoly::linear(&comm, Fe::ONE);
        let g2 = SkewPoly::monomial(&ring, Fe::ONE, 3);
        let gf = GoppaFactorization::new(vec![g1.clone(), g2.clone()]).unwrap();
        let direct = MultiOrePoly::from_univariate(&ring, 2, 0, &g1)
            .multi_mul(&MultiOrePoly::from_univariate(&ring, 2, 1, &g2))
            .unwrap();
        assert_eq!(gf.expand_product(), direct);
        assert_eq!(gf.expand_product().to_string(), "1*X1*X2^3 + 1*X2^3");
        assert_eq!((gf.degree(), gf.total_degree()), (3, 4));
    }

    #[test]
    fn factorization_validation() {
        let field = f8();
        let ring = SkewRing::frobenius(field.clone());
        let twisted = SkewPoly::x(&ring);
        assert_eq!(GoppaFactorization::new(vec![twisted.clone(), twisted.clone()]), Err(Hypothesis::Commutative(1).into()));
        assert_eq!(GoppaFactorization::new(vec![SkewPoly::new(&ring, vec![Fe(1), Fe(0), Fe(1)])]), Err(Hypothesis::Invariant.into()));
        assert_eq!(GoppaFactorization::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn annihilator_products() {
        let field = f8();
        let ring = SkewRing::frobenius(field.clone());
        let comm = SkewRing::commutative(field.clone());
        let gf = GoppaFactorization::new(vec![SkewPoly::x(&comm), SkewPoly::x(&ring)]).unwrap();
        let (a, b) = (Fe(3), Fe(6));
        let expected = field.mul(field.neg(field.inv(a)), field.neg(field.inv(b)));
        assert_eq!(gf.assemble_h(&[a, b]).unwrap(), MultiOrePoly::constant(&ring, 2, expected));
        assert_eq!(gf.assemble_h(&[Fe::ZERO, b]), Err(Hypothesis::Coprime { factor: 1, point: 0 }.into()));
    }

    #[test]
    fn oracle_trivial_cases() {
        let field = f8();
        let ring = SkewRing::frobenius(field.clone());
        let gf = GoppaFactorization::new(vec![SkewPoly::monomial(&ring, Fe::ONE, 3)]).unwrap();
        let sets = vec![vec![Fe(1), Fe(2), Fe(4)]];
        let eta = vec![Fe::ONE; 3];
        assert!(membership_oracle(&gf, &sets, &eta, &[Fe::ZERO; 3]).unwrap());
        assert!(!membership_oracle(&gf, &sets, &eta, &[Fe::ONE, Fe::ZERO, Fe::ZERO]).unwrap());
        assert!(membership_oracle(&gf, &sets, &eta, &[Fe::ONE]).is_err());
    }

    #[test]
    fn grid_order_is_last_fastest() {
        let sets = vec![vec![Fe(1), Fe(2)], vec![Fe(5), Fe(6), Fe(7)]];
        let pts = grid_points(&sets);
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[1], vec![Fe(1), Fe(6)]);
        assert_eq!(pts[3], vec![Fe(2), Fe(5)]);
    }
}
