use std::collections::HashMap;

use super::{SkewPoly, SkewRing};
use crate::error::{Error, Result};
use crate::field::Fe;

/// Monic right gcd by the right Euclidean algorithm.
pub fn right_gcd(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.right_divmod(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Monic least common left multiple of two nonzero polynomials.
///
/// Runs the extended right Euclidean algorithm with `r_i = u_i·f + v_i·g`;
/// once `r_{k+1} = 0`, `u_{k+1}·f = −v_{k+1}·g` is the lclm up to a unit.
pub fn lclm_pair(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::MustBeNonzero("polynomial"));
    }
    let ring = f.ring();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (SkewPoly::one(ring), SkewPoly::zero(ring));
    while !r1.is_zero() {
        let (q, r) = r0.right_divmod(&r1)?;
        let u = u0.checked_sub(&q.checked_mul(&u1)?)?;
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
    }
    Ok(u1.checked_mul(f)?.monic())
}

/// Monic lclm of a nonempty list, folded pairwise.
pub fn lclm(polys: &[SkewPoly]) -> Result<SkewPoly> {
    let (first, rest) = polys.split_first().ok_or(Error::Empty)?;
    if first.is_zero() {
        return Err(Error::MustBeNonzero("polynomial"));
    }
    rest.iter().try_fold(first.monic(), |acc, p| lclm_pair(&acc, p))
}

/// lclm of `{X − s}` built one factor at a time through
/// `lclm(f, X − s) = (X − ^{f(s)}s)·f` whenever `f(s) ≠ 0`.
pub fn lclm_linear_incremental(ring: &SkewRing, points: &[Fe]) -> Result<SkewPoly> {
    let mut f = SkewPoly::one(ring);
    for &s in points {
        let value = f.evaluate(s);
        if value.is_zero() {
            continue;
        }
        let conj = ring.conjugate(s, value)?;
        f = SkewPoly::linear(ring, conj).checked_mul(&f)?;
    }
    Ok(f)
}

fn linear_factors(ring: &SkewRing, points: &[Fe]) -> Vec<SkewPoly> {
    points.iter().map(|&s| SkewPoly::linear(ring, s)).collect()
}

/// Whether `deg lclm{X − s} = |S|`.
pub fn check_p_independent(ring: &SkewRing, points: &[Fe]) -> bool {
    if points.is_empty() {
        return true;
    }
    let l = lclm(&linear_factors(ring, points)).expect("linear factors are nonzero");
    l.degree() == Some(points.len())
}

/// Whether `S^{-1}` is P-independent. Fails on a zero point.
pub fn check_inverse_p_independent(ring: &SkewRing, points: &[Fe]) -> Result<bool> {
    let f = ring.field();
    let inverses = points.iter().map(|&s| f.try_inv(s).ok_or(Error::DivisionByZero)).collect::<Result<Vec<_>>>()?;
    Ok(check_p_independent(ring, &inverses))
}

/// Sufficient condition for `S^{-1}` to be P-independent: `S` is P-independent,
/// avoids zero, and meets each conjugacy class in at most two points.
pub fn inverse_sufficient_condition(ring: &SkewRing, points: &[Fe]) -> bool {
    if points.iter().any(|s| s.is_zero()) || !check_p_independent(ring, points) {
        return false;
    }
    let mut counts: HashMap<Fe, usize> = HashMap::new();
    for &s in points {
        *counts.entry(ring.class_key(s)).or_default() += 1;
    }
    counts.values().all(|&c| c <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f8() -> SkewRing {
        SkewRing::frobenius(Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap())
    }

    fn pts(v: &[u32]) -> Vec<Fe> {
        v.iter().map(|&x| Fe(x)).collect()
    }

    #[test]
    fn lclm_examples() {
        let r = f8();
        let single = SkewPoly::linear(&r, Fe(5));
        assert_eq!(lclm(std::slice::from_ref(&single)).unwrap(), single);
        let full = lclm(&linear_factors(&r, &pts(&[1, 2, 4]))).unwrap();
        assert_eq!(full, SkewPoly::new(&r, pts(&[1, 0, 0, 1])));
        for s in [1, 2, 4] {
            assert!(full.right_divmod(&SkewPoly::linear(&r, Fe(s))).unwrap().1.is_zero());
        }
        let f = SkewPoly::new(&r, pts(&[3, 6, 2]));
        assert_eq!(lclm(&[f.clone(), f.clone()]).unwrap(), f.monic());
        assert_eq!(lclm(&[]), Err(Error::Empty));
    }

    #[test]
    fn incremental_matches_euclid() {
        let r = f8();
        let sets = [vec![1, 2, 4], vec![3, 5, 7], vec![6, 2, 4], vec![1, 3], vec![2, 2, 5]];
        for set in sets {
            let p = pts(&set);
            let a = lclm(&linear_factors(&r, &p)).unwrap();
            assert_eq!(lclm_linear_incremental(&r, &p).unwrap(), a);
        }
    }

    #[test]
    fn worked_example_independence() {
        let r = f8();
        assert!(check_p_independent(&r, &pts(&[6])));
        assert!(check_p_independent(&r, &pts(&[3, 5, 7])));
        assert!(!check_p_independent(&r, &pts(&[6, 2, 4])));
        assert!(check_inverse_p_independent(&r, &pts(&[1, 2, 4])).unwrap());
        assert!(!check_inverse_p_independent(&r, &pts(&[3, 5, 7])).unwrap());
        assert!(check_inverse_p_independent(&r, &pts(&[7])).unwrap());
        assert_eq!(check_inverse_p_independent(&r, &pts(&[0, 1])), Err(Error::DivisionByZero));
        // three points of one class: the lemma does not apply even though the inverses work
        assert!(!inverse_sufficient_condition(&r, &pts(&[1, 2, 4])));
        assert!(inverse_sufficient_condition(&r, &pts(&[1, 2])));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let r = f8();
        let common = SkewPoly::linear(&r, Fe(3));
        let a = &SkewPoly::new(&r, pts(&[1, 7])) * &common;
        let b = &SkewPoly::new(&r, pts(&[4, 0, 1])) * &common;
        let g = right_gcd(&a, &b).unwrap();
        assert!(a.right_divmod(&g).unwrap().1.is_zero());
        assert!(b.right_divmod(&g).unwrap().1.is_zero());
        assert!(g.degree().unwrap() >= 1);
        let l = lclm_pair(&a, &b).unwrap();
        assert_eq!(l.degree().unwrap() + g.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
    }
}
