//! Exact arithmetic in a tower `F_q ⊆ F_{q^r} ⊆ F_{q^t}`.
//!
//! A [`Field`] describes `F_{q^t}` with `q = p^s` as `F_p[x]/(modulus)` with
//! `deg modulus = s·t`. Elements are [`Fe`] values holding the integer
//! `Σ digits[i]·p^i` of their polynomial-basis digit vector; that integer is
//! also the serialized form used by every text format in this crate.
//!
//! Multiplication goes through discrete log tables built once per field;
//! fields are capped at `2^20` elements so the tables stay small. `Field` is a
//! cheap `Arc` handle and can be cloned freely.
//!
//! The Frobenius `θ(a) = a^q` generates `Gal(F_{q^t}/F_q)` and is the
//! automorphism that twists the skew polynomial rings built on top.

mod fp_poly;
mod subfield;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use subfield::SubfieldBasis;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// An element of `F_{q^t}` in integer form `Σ digits[i]·p^i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    s: u32,
    t: u32,
    r: u32,
    q: u64,
    order: u32,
    degree: u32,
    modulus: Vec<u32>,
    // exp has length 2*(order-1) so that exp[log a + log b] needs no reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    relative: SubfieldBasis,
}

/// Descriptor and arithmetic context for `F_{q^t}` with its tower data.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.s == other.inner.s
                && self.inner.t == other.inner.t
                && self.inner.r == other.inner.r
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) [q={}, t={}, r={}, modulus={:?}]",
            self.inner.p, self.inner.degree, self.inner.q, self.inner.t, self.inner.r, self.inner.modulus
        )
    }
}

impl Field {
    /// Builds `F_{q^t}` with `q = p^s` and distinguished subfield `F_{q^r}`.
    ///
    /// When `modulus` is `None` the monic irreducible of degree `s·t` with the
    /// smallest integer encoding is used. A supplied modulus is checked for
    /// degree, monicity and irreducibility.
    pub fn new(p: u32, s: u32, t: u32, r: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !fp_poly::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 || t == 0 || r == 0 {
            return Err(Error::ZeroDegree { s, t, r });
        }
        if !t.is_multiple_of(r) {
            return Err(Error::NotDivisor { r, t });
        }
        let degree = s * t;
        let order = (p as u64).checked_pow(degree).filter(|&o| o <= MAX_ORDER);
        let order = order.ok_or(Error::FieldTooLarge { p, degree })? as u32;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != degree as usize + 1 {
                    return Err(Error::Modulus(format!(
                        "expected degree {degree}, got {} coefficients",
                        m.len()
                    )));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::Modulus(format!("coefficient {c} is not below p = {p}")));
                }
                if m[degree as usize] != 1 {
                    return Err(Error::Modulus("not monic".into()));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(Error::Modulus("reducible over F_p".into()));
                }
                m
            }
            None => fp_poly::smallest_irreducible(p, degree),
        };
        let (exp, log) = build_tables(p, degree, order, &modulus);
        let q = (p as u64).pow(s);
        let inner = Inner {
            p,
            s,
            t,
            r,
            q,
            order,
            degree,
            modulus,
            exp,
            log,
            relative: SubfieldBasis::placeholder(),
        };
        let mut field = Field { inner: Arc::new(inner) };
        let relative = SubfieldBasis::new(&field, r);
        Arc::get_mut(&mut field.inner).expect("field handle is not shared yet").relative = relative;
        Ok(field)
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn s(&self) -> u32 {
        self.inner.s
    }

    pub fn t(&self) -> u32 {
        self.inner.t
    }

    pub fn r(&self) -> u32 {
        self.inner.r
    }

    /// `q = p^s`, the order of the fixed field of θ.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Number of elements `q^t`.
    pub fn order(&self) -> u32 {
        self.inner.order
    }

    /// `s·t`, the degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Order of the intermediate field `F_{q^r}`.
    pub fn subfield_order(&self) -> u64 {
        self.inner.q.pow(self.inner.r)
    }

    pub fn element(&self, value: u32) -> Result<Fe> {
        if value < self.inner.order {
            Ok(Fe(value))
        } else {
            Err(Error::ElementOutOfRange { value, order: self.inner.order })
        }
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.inner.order
    }

    /// The class of `x` modulo the field modulus.
    pub fn generator_x(&self) -> Fe {
        if self.inner.degree == 1 {
            // F_p[x]/(x + c): x = -c
            self.neg(Fe(self.inner.modulus[0]))
        } else {
            Fe(self.inner.p)
        }
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> Fe {
        Fe(self.inner.exp[1])
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.inner.order).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (1..self.inner.order).map(Fe)
    }

    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let p = self.inner.p;
        let mut x = a.0;
        (0..self.inner.degree)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Fe {
        let p = self.inner.p;
        let mut v = 0u32;
        for &d in digits.iter().rev() {
            v = v * p + d % p;
        }
        Fe(v)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.inner.p;
        if p == 2 {
            return Fe(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.inner.p;
        if p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut out = 0u32;
        let mut place = 1u32;
        while x > 0 {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Fe(out)
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let i = self.inner.log[a.0 as usize] + self.inner.log[b.0 as usize];
        Fe(self.inner.exp[i as usize])
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn try_inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let n = self.inner.order - 1;
        let l = self.inner.log[a.0 as usize];
        Some(Fe(self.inner.exp[((n - l) % n) as usize]))
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics on zero; use [`Field::try_inv`] when the input may vanish.
    pub fn inv(&self, a: Fe) -> Fe {
        self.try_inv(a).expect("inverse of zero")
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        let b_inv = self.try_inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, b_inv))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if e == 0 {
            return Fe::ONE;
        }
        if a.is_zero() {
            return Fe::ZERO;
        }
        let n = (self.inner.order - 1) as u64;
        let l = self.inner.log[a.0 as usize] as u64;
        Fe(self.inner.exp[((l * (e % n)) % n) as usize])
    }

    /// Embeds an integer of the prime field.
    pub fn from_prime_field(&self, k: i64) -> Fe {
        let p = self.inner.p as i64;
        Fe(k.rem_euclid(p) as u32)
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }

    pub fn product<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ONE, |acc, x| self.mul(acc, x))
    }

    /// `a^{q^{i mod t}}`; negative `i` is reduced modulo `t`.
    pub fn frobenius_power(&self, a: Fe, i: i64) -> Fe {
        if a.is_zero() {
            return a;
        }
        let t = self.inner.t as i64;
        let k = i.rem_euclid(t) as u32;
        if k == 0 {
            return a;
        }
        let n = (self.inner.order - 1) as u64;
        let qk = mod_pow(self.inner.q, k as u64, n);
        let l = self.inner.log[a.0 as usize] as u64;
        Fe(self.inner.exp[((l * qk) % n) as usize])
    }

    /// θ(a) = a^q.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.frobenius_power(a, 1)
    }

    /// `Tr(a) = Σ_{i < t/r} a^{(q^r)^i}`, the trace into `F_{q^r}`.
    pub fn trace(&self, a: Fe) -> Fe {
        let r = self.inner.r as i64;
        let terms = (self.inner.t / self.inner.r) as i64;
        self.sum((0..terms).map(|i| self.frobenius_power(a, r * i)))
    }

    /// Partial norm `N_i(a) = Π_{k<i} θ^k(a)`, with `N_0 = 1`.
    pub fn partial_norm(&self, i: usize, a: Fe) -> Fe {
        self.product((0..i).map(|k| self.frobenius_power(a, k as i64)))
    }

    /// Field norm `N_t(a)` into `F_q`.
    pub fn norm(&self, a: Fe) -> Fe {
        self.partial_norm(self.inner.t as usize, a)
    }

    /// θ-conjugate `^b a = θ(b)·a·b^{-1}`.
    pub fn conjugate(&self, a: Fe, b: Fe) -> Result<Fe> {
        let b_inv = self.try_inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(self.mul(self.frobenius(b), a), b_inv))
    }

    /// `[a]_θ`, enumerated over every nonzero conjugator.
    pub fn conjugacy_class(&self, a: Fe) -> BTreeSet<Fe> {
        self.nonzero_elements()
            .map(|b| self.mul(self.mul(self.frobenius(b), a), self.inv(b)))
            .collect()
    }

    /// Membership in `F_{q^d}`, i.e. `a^{q^d} = a`.
    pub fn in_subfield_of_degree(&self, a: Fe, d: u32) -> bool {
        self.frobenius_power(a, d as i64) == a
    }

    /// Membership in the intermediate field `F_{q^r}`.
    pub fn is_in_subfield(&self, a: Fe) -> bool {
        self.in_subfield_of_degree(a, self.inner.r)
    }

    /// Membership in the fixed field `F_q` of θ.
    pub fn is_in_base_field(&self, a: Fe) -> bool {
        self.in_subfield_of_degree(a, 1)
    }

    /// All elements of `F_{q^d}` in increasing integer order.
    pub fn subfield_elements_of_degree(&self, d: u32) -> Vec<Fe> {
        assert!(d > 0 && self.inner.t.is_multiple_of(d), "subfield degree must divide t");
        let n = self.inner.order - 1;
        let sub = self.inner.q.pow(d) as u32 - 1;
        let step = n / sub;
        let mut out: Vec<Fe> = std::iter::once(Fe::ZERO)
            .chain((0..sub).map(|k| Fe(self.inner.exp[(k * step) as usize])))
            .collect();
        out.sort();
        out
    }

    /// Elements of `F_{q^r}`.
    pub fn subfield_elements(&self) -> Vec<Fe> {
        self.subfield_elements_of_degree(self.inner.r)
    }

    /// Elements of `F_q`.
    pub fn base_field_elements(&self) -> Vec<Fe> {
        self.subfield_elements_of_degree(1)
    }

    /// The fixed `F_{q^r}`-basis of `F_{q^t}`.
    pub fn subfield_basis(&self) -> &SubfieldBasis {
        &self.inner.relative
    }

    /// Coordinates of `a` over the fixed `F_{q^r}`-basis (length `t/r`).
    pub fn expand_over_subfield(&self, a: Fe) -> Vec<Fe> {
        self.inner.relative.coordinates(self, a)
    }

    /// Inverse of [`Field::expand_over_subfield`].
    pub fn combine_from_subfield(&self, coords: &[Fe]) -> Fe {
        self.inner.relative.combine(self, coords)
    }

    #[doc(hidden)]
    pub fn log_table(&self) -> &[u32] {
        &self.inner.log
    }
}

fn mod_pow(base: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Multiplies two raw encodings modulo the field modulus.
fn raw_mul(a: u32, b: u32, p: u32, degree: u32, modulus: &[u32]) -> u32 {
    let d = degree as usize;
    if p == 2 {
        let mut mask = 0u64;
        for (i, &c) in modulus.iter().enumerate().take(d) {
            mask |= (c as u64) << i;
        }
        let (mut x, mut y) = (a as u64, b as u64);
        let mut acc = 0u64;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x >> d & 1 == 1 {
                x ^= 1 << d;
                x ^= mask;
            }
        }
        return acc as u32;
    }
    let to_digits = |mut v: u32| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let r = v % p;
                v /= p;
                r as u64
            })
            .collect()
    };
    let (xa, xb) = (to_digits(a), to_digits(b));
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * d];
    for i in 0..d {
        for j in 0..d {
            prod[i + j] = (prod[i + j] + xa[i] * xb[j]) % p64;
        }
    }
    // modulus is monic: x^d = -Σ m_i x^i
    for k in (d..2 * d).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for i in 0..d {
            let sub = c * modulus[i] as u64 % p64;
            prod[k - d + i] = (prod[k - d + i] + p64 - sub) % p64;
        }
    }
    let mut v = 0u32;
    for i in (0..d).rev() {
        v = v * p + prod[i] as u32;
    }
    v
}

fn raw_pow(a: u32, mut e: u64, p: u32, degree: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1u32;
    let mut base = a;
    while e > 0 {
        if e & 1 == 1 {
            acc = raw_mul(acc, base, p, degree, modulus);
        }
        base = raw_mul(base, base, p, degree, modulus);
        e >>= 1;
    }
    acc
}

fn build_tables(p: u32, degree: u32, order: u32, modulus: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = (order - 1) as u64;
    let factors = fp_poly::prime_factors(n);
    let generator = (1..order)
        .find(|&g| factors.iter().all(|&l| raw_pow(g, n / l, p, degree, modulus) != 1))
        .expect("multiplicative group of a finite field is cyclic");
    let n = n as usize;
    let mut exp = vec![0u32; 2 * n.max(1)];
    let mut log = vec![0u32; order as usize];
    let mut x = 1u32;
    for (i, e) in exp.iter_mut().take(n).enumerate() {
        *e = x;
        log[x as usize] = i as u32;
        x = raw_mul(x, generator, p, degree, modulus);
    }
    for i in n..2 * n {
        exp[i] = exp[i - n];
    }
    if n == 0 {
        exp[0] = 1;
    }
    (exp, log)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f8() -> Field {
        Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap()
    }

    // ω = 2, ω² = 4, ω+1 = 3, ω²+1 = 5, ω²+ω = 6, ω²+ω+1 = 7
    const W: Fe = Fe(2);

    #[test]
    fn make_field_examples() {
        let f = f8();
        assert_eq!(f.order(), 8);
        assert_eq!(f.q(), 2);
        assert_eq!(f.frobenius(W), Fe(4));

        let f2 = Field::new(2, 1, 1, 1, Some(vec![1, 1])).unwrap();
        assert_eq!(f2.order(), 2);
        assert_eq!(f2.frobenius(Fe(1)), Fe(1));

        let f16 = Field::new(2, 1, 4, 2, None).unwrap();
        assert_eq!(f16.modulus(), &[1, 1, 0, 0, 1]);
        assert_eq!(f16.subfield_elements().len(), 4);
    }

    #[test]
    fn make_field_errors() {
        assert_eq!(Field::new(4, 1, 2, 1, None).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 1, 3, 2, None).unwrap_err(), Error::NotDivisor { r: 2, t: 3 });
        assert!(matches!(Field::new(2, 1, 3, 1, Some(vec![1, 0, 0, 1])), Err(Error::Modulus(_))));
        assert!(matches!(Field::new(2, 1, 3, 1, Some(vec![1, 1, 1])), Err(Error::Modulus(_))));
        assert!(matches!(Field::new(2, 1, 21, 1, None), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn omega_cubed_is_omega_plus_one() {
        let f = f8();
        assert_eq!(f.pow(W, 3), Fe(3));
        assert_eq!(f.mul(W, Fe(4)), Fe(3));
    }

    #[test]
    fn inverses_against_brute_force() {
        for f in [f8(), Field::new(3, 1, 2, 1, None).unwrap(), Field::new(5, 1, 2, 2, None).unwrap()] {
            for a in f.nonzero_elements() {
                let brute = f.nonzero_elements().find(|&b| f.mul(a, b) == Fe::ONE).unwrap();
                assert_eq!(f.inv(a), brute);
            }
            assert_eq!(f.try_inv(Fe::ZERO), None);
        }
    }

    #[test]
    fn odd_characteristic_addition() {
        let f = Field::new(3, 1, 2, 1, None).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            for b in f.elements() {
                let da = f.digits(a);
                let db = f.digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % 3).collect();
                assert_eq!(f.add(a, b), f.from_digits(&sum));
            }
        }
    }

    #[test]
    fn frobenius_powers() {
        let f = f8();
        assert_eq!(f.frobenius_power(W, 1), Fe(4));
        assert_eq!(f.frobenius_power(W, 3), W);
        let a = Fe(5); // ω²+1
        assert_eq!(f.frobenius_power(a, -1), f.frobenius(f.frobenius(a)));
    }

    #[test]
    fn trace_examples() {
        let f = f8();
        assert_eq!(f.trace(Fe::ZERO), Fe::ZERO);
        assert_eq!(f.trace(Fe::ONE), Fe::ONE);
        // ω + ω² + ω⁴ = ω + ω² + (ω² + ω) = 0
        let direct = f.sum([W, f.pow(W, 2), f.pow(W, 4)]);
        assert_eq!(f.trace(W), direct);
        assert!(f.is_in_subfield(f.trace(W)));
    }

    #[test]
    fn partial_norm_examples() {
        let f = f8();
        assert_eq!(f.partial_norm(0, Fe(6)), Fe::ONE);
        assert_eq!(f.partial_norm(2, W), Fe(3));
        for a in f.nonzero_elements() {
            assert_eq!(f.partial_norm(3, a), Fe::ONE);
        }
    }

    #[test]
    fn conjugate_examples() {
        let f = f8();
        assert_eq!(f.conjugate(Fe(6), Fe::ONE).unwrap(), Fe(6));
        assert_eq!(f.conjugate(Fe::ONE, W).unwrap(), W);
        assert_eq!(f.conjugate(Fe::ONE, Fe(4)).unwrap(), Fe(4));
        assert_eq!(f.conjugate(Fe::ONE, Fe::ZERO), Err(Error::DivisionByZero));
    }

    #[test]
    fn conjugacy_classes() {
        let f = f8();
        assert_eq!(f.conjugacy_class(Fe::ZERO), BTreeSet::from([Fe::ZERO]));
        assert_eq!(f.conjugacy_class(Fe::ONE), f.nonzero_elements().collect());
        let trivial = Field::new(2, 3, 1, 1, None).unwrap();
        assert_eq!(trivial.conjugacy_class(Fe(5)), BTreeSet::from([Fe(5)]));
    }

    #[test]
    fn subfield_membership() {
        let f = f8();
        assert!(f.is_in_subfield(Fe::ZERO));
        assert!(f.is_in_subfield(Fe::ONE));
        assert!(!f.is_in_subfield(W));
    }

    #[test]
    fn expand_examples() {
        let f = f8();
        assert_eq!(f.expand_over_subfield(Fe::ZERO), vec![Fe::ZERO; 3]);
        assert_eq!(f.expand_over_subfield(Fe(7)), vec![Fe::ONE; 3]);
        let basis = f.subfield_basis().elements().to_vec();
        assert_eq!(basis, vec![Fe(1), Fe(2), Fe(4)]);
        assert_eq!(f.expand_over_subfield(basis[1]), vec![Fe(0), Fe(1), Fe(0)]);
    }

    #[test]
    fn expand_round_trip_exhaustive() {
        let towers = [(2, 1, 4, 2), (2, 2, 2, 1), (3, 1, 4, 2), (2, 1, 6, 3), (2, 1, 6, 2), (3, 2, 2, 2)];
        for (p, s, t, r) in towers {
            let f = Field::new(p, s, t, r, None).unwrap();
            for a in f.elements() {
                let c = f.expand_over_subfield(a);
                assert_eq!(c.len(), (t / r) as usize);
                assert!(c.iter().all(|&x| f.is_in_subfield(x)));
                assert_eq!(f.combine_from_subfield(&c), a);
            }
        }
    }

    #[test]
    fn subfield_element_lists() {
        let f = Field::new(2, 1, 4, 2, None).unwrap();
        let brute: Vec<Fe> = f.elements().filter(|&a| f.is_in_subfield(a)).collect();
        assert_eq!(f.subfield_elements(), brute);
        let base: Vec<Fe> = f.elements().filter(|&a| f.is_in_base_field(a)).collect();
        assert_eq!(f.base_field_elements(), base);
    }

    #[test]
    fn trace_is_surjective_and_linear() {
        let f = Field::new(2, 1, 4, 2, None).unwrap();
        let image: BTreeSet<Fe> = f.elements().map(|a| f.trace(a)).collect();
        assert_eq!(image.into_iter().collect::<Vec<_>>(), f.subfield_elements());
        for c in f.subfield_elements() {
            for a in f.elements() {
                assert_eq!(f.trace(f.mul(c, a)), f.mul(c, f.trace(a)));
            }
        }
    }
}
