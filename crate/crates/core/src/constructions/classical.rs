//! Commutative families: GRS, classical and multivariate Goppa, Augmented Cartesian.

use std::collections::HashSet;

use crate::codes::{Alphabet, LinearCode};
use crate::error::{Error, Hypothesis, Result};
use crate::field::{Fe, Field};
use crate::linalg::{skew_vandermonde, Matrix};
use crate::ore::{grid_indices, grid_points};
use crate::skew::{SkewPoly, SkewRing, Twist};

pub(crate) fn check_distinct(points: &[Fe]) -> Result<()> {
    let mut seen = HashSet::new();
    for &s in points {
        if !seen.insert(s) {
            return Err(Hypothesis::DistinctElements(s.0).into());
        }
    }
    Ok(())
}

pub(crate) fn check_multipliers(v: &[Fe], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Dimension(format!("{} multipliers for {n} points", v.len())));
    }
    match v.iter().position(|x| x.is_zero()) {
        Some(i) => Err(Hypothesis::NonzeroMultiplier(i).into()),
        None => Ok(()),
    }
}

pub(crate) fn check_points(field: &Field, points: &[Fe]) -> Result<()> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    for &s in points {
        field.element(s.0)?;
    }
    Ok(())
}

fn require_commutative(g: &SkewPoly, factor: usize) -> Result<()> {
    if g.ring().twist() == Twist::Identity {
        Ok(())
    } else {
        Err(Hypothesis::Commutative(factor).into())
    }
}

/// Values `g(s)`, failing if any vanishes.
pub(crate) fn nonvanishing_values(g: &SkewPoly, points: &[Fe], factor: usize) -> Result<Vec<Fe>> {
    points
        .iter()
        .map(|&s| {
            let v = g.evaluate(s);
            if v.is_zero() {
                Err(Hypothesis::Coprime { factor, point: s.0 }.into())
            } else {
                Ok(v)
            }
        })
        .collect()
}

/// `GRS_k(S, v)`: rows `s^i·v` for `i < k`.
pub fn grs(field: &Field, points: &[Fe], multipliers: &[Fe], k: usize) -> Result<LinearCode> {
    check_points(field, points)?;
    check_distinct(points)?;
    check_multipliers(multipliers, points.len())?;
    if k > points.len() {
        return Err(Hypothesis::DimensionTooLarge { k, n: points.len() }.into());
    }
    let ring = SkewRing::commutative(field.clone());
    let g = skew_vandermonde(&ring, points, k)?.scale_columns(multipliers)?;
    LinearCode::from_generator(Alphabet::Extension, &g)
}

/// Generator of `GRS_{deg g}(S, g)`, the Vandermonde matrix times `diag(g(s)^{-1})`.
pub fn goppa_grs_generator(points: &[Fe], g: &SkewPoly) -> Result<Matrix> {
    require_commutative(g, 1)?;
    let field = g.field();
    check_points(field, points)?;
    check_distinct(points)?;
    let rho = g.degree().ok_or(Error::MustBeNonzero("g"))?;
    let inv: Vec<Fe> = nonvanishing_values(g, points, 1)?.iter().map(|&v| field.inv(v)).collect();
    skew_vandermonde(g.ring(), points, rho)?.scale_columns(&inv)
}

/// `GRS_{deg g}(S, g)` with multipliers `g(s)^{-1}`.
pub fn grs_via_goppa(points: &[Fe], g: &SkewPoly) -> Result<LinearCode> {
    LinearCode::from_generator(Alphabet::Extension, &goppa_grs_generator(points, g)?)
}

/// `y_i = g(s_i) / Π_{j≠i}(s_i − s_j)`, the multipliers of the dual of `GRS_{deg g}(S, g)`.
pub fn grs_dual_multipliers(points: &[Fe], g: &SkewPoly) -> Result<Vec<Fe>> {
    let field = g.field();
    check_points(field, points)?;
    check_distinct(points)?;
    let values = nonvanishing_values(g, points, 1)?;
    Ok(points
        .iter()
        .zip(&values)
        .map(|(&si, &gi)| {
            let denom = field.product(points.iter().filter(|&&sj| sj != si).map(|&sj| field.sub(si, sj)));
            field.mul(gi, field.inv(denom))
        })
        .collect())
}

/// `Γ(S, g, F_{q^r})`: the subfield kernel of the `GRS_{deg g}(S, g)` generator.
pub fn goppa_classical(points: &[Fe], g: &SkewPoly) -> Result<LinearCode> {
    LinearCode::from_parity_check(Alphabet::Subfield, &goppa_grs_generator(points, g)?)
}

/// Inverse of `a` modulo `g` in the commutative ring, by the extended Euclidean algorithm.
fn inverse_mod(a: &SkewPoly, g: &SkewPoly) -> Option<SkewPoly> {
    let ring = g.ring();
    let (mut r0, mut r1) = (g.clone(), a.right_divmod(g).ok()?.1);
    let (mut t0, mut t1) = (SkewPoly::zero(ring), SkewPoly::one(ring));
    while !r1.is_zero() {
        let (q, r) = r0.right_divmod(&r1).ok()?;
        let t = &t0 - &(&q * &t1);
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t;
    }
    // r0 is the gcd; a unit exactly when it is constant
    if r0.degree() != Some(0) {
        return None;
    }
    let c = g.field().inv(r0.coeff(0));
    Some(t0.scale_left(c).right_divmod(g).ok()?.1)
}

/// Decides `Σ_i c_i / Π_j (x_j − s_{ij}) ≡ 0` in `F[x_1]/(g_1) ⊗ … ⊗ F[x_m]/(g_m)`,
/// inverting each linear factor by the extended Euclidean algorithm.
pub fn goppa_membership_oracle(sets: &[Vec<Fe>], factors: &[SkewPoly], c: &[Fe]) -> Result<bool> {
    if sets.len() != factors.len() || factors.is_empty() {
        return Err(Error::Dimension(format!("{} sets for {} factors", sets.len(), factors.len())));
    }
    let field = factors[0].field().clone();
    let n: usize = sets.iter().map(|s| s.len()).product();
    if c.len() != n {
        return Err(Error::Dimension(format!("word of length {} for {n} points", c.len())));
    }
    let degrees: Vec<usize> = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
    // per-variable inverse coefficient vectors, indexed by point position
    let mut inverses: Vec<Vec<Vec<Fe>>> = Vec::new();
    for (i, (set, g)) in sets.iter().zip(factors).enumerate() {
        require_commutative(g, i + 1)?;
        let mut per = Vec::new();
        for &s in set {
            let inv = inverse_mod(&SkewPoly::linear(g.ring(), s), g)
                .ok_or(Hypothesis::Coprime { factor: i + 1, point: s.0 })?;
            per.push((0..degrees[i]).map(|b| inv.coeff(b)).collect());
        }
        inverses.push(per);
    }
    let size: usize = degrees.iter().product();
    let mut acc = vec![Fe::ZERO; size];
    let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    for (&cj, index) in c.iter().zip(grid_indices(&sizes)) {
        if cj.is_zero() {
            continue;
        }
        // Kronecker product of the per-variable inverse vectors, scaled by c_j
        let mut term = vec![cj];
        for (i, &pos) in index.iter().enumerate() {
            let v = &inverses[i][pos];
            let field = &field;
            term = term.iter().flat_map(|&a| v.iter().map(move |&b| field.mul(a, b))).collect();
        }
        for (x, y) in acc.iter_mut().zip(&term) {
            *x = field.add(*x, *y);
        }
    }
    Ok(acc.iter().all(|x| x.is_zero()))
}

fn commutative_inputs(sets: &[Vec<Fe>], factors: &[SkewPoly]) -> Result<Field> {
    if sets.len() != factors.len() || factors.is_empty() {
        return Err(Error::Dimension(format!("{} sets for {} factors", sets.len(), factors.len())));
    }
    let field = factors[0].field().clone();
    for (i, (set, g)) in sets.iter().zip(factors).enumerate() {
        require_commutative(g, i + 1)?;
        if g.field() != &field {
            return Err(Error::FieldMismatch);
        }
        check_points(&field, set)?;
        check_distinct(set)?;
        let rho = g.degree().ok_or(Error::MustBeNonzero("g"))?;
        if rho > set.len() {
            return Err(Hypothesis::DimensionTooLarge { k: rho, n: set.len() }.into());
        }
        nonvanishing_values(g, set, i + 1)?;
    }
    Ok(field)
}

/// `T(S, g) = ⊗ GRS_{deg g_i}(S_i, g_i)`.
pub fn tensor_t(sets: &[Vec<Fe>], factors: &[SkewPoly]) -> Result<LinearCode> {
    commutative_inputs(sets, factors)?;
    let mut gen: Option<Matrix> = None;
    for (set, g) in sets.iter().zip(factors) {
        let gi = goppa_grs_generator(set, g)?;
        gen = Some(match gen {
            None => gi,
            Some(acc) => acc.kronecker(&gi)?,
        });
    }
    LinearCode::from_generator(Alphabet::Extension, &gen.expect("nonempty"))
}

/// `Γ(S, g, F_{q^r})`: the subfield kernel of the generator of `T(S, g)`.
pub fn multivariate_goppa(sets: &[Vec<Fe>], factors: &[SkewPoly]) -> Result<LinearCode> {
    let t = tensor_t(sets, factors)?;
    LinearCode::from_parity_check(Alphabet::Subfield, t.generator())
}

/// Augmented Cartesian code: evaluations of monomials `x^a` with
/// `a ∈ Π{0..n_j−1} ∖ Π{n_j−deg g_j..n_j−1}`, weighted by `Π_j g_j(s_j)/L_j'(s_j)`
/// where `L_j'(s) = Π_{s' ∈ S_j, s' ≠ s}(s − s')`.
pub fn acar(sets: &[Vec<Fe>], factors: &[SkewPoly]) -> Result<LinearCode> {
    let field = commutative_inputs(sets, factors)?;
    let weights: Vec<Vec<Fe>> = sets.iter().zip(factors).map(|(s, g)| grs_dual_multipliers(s, g)).collect::<Result<_>>()?;
    let points = grid_points(sets);
    let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    let indices = grid_indices(&sizes);
    let point_weights: Vec<Fe> =
        indices.iter().map(|idx| field.product(idx.iter().enumerate().map(|(j, &p)| weights[j][p]))).collect();
    let mut rows = Vec::new();
    for a in &indices {
        let in_corner = a
            .iter()
            .zip(sets.iter().zip(factors))
            .all(|(&e, (s, g))| e >= s.len() - g.degree().unwrap());
        if in_corner {
            continue;
        }
        rows.push(
            points
                .iter()
                .zip(&point_weights)
                .map(|(pt, &w)| field.mul(w, field.product(pt.iter().zip(a).map(|(&s, &e)| field.pow(s, e as u64)))))
                .collect(),
        );
    }
    LinearCode::from_generator(Alphabet::Extension, &Matrix::from_rows(&field, points.len(), rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_BUDGET;

    fn f8() -> Field {
        Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).unwrap()
    }

    fn cpoly(f: &Field, c: &[u32]) -> SkewPoly {
        SkewPoly::new(&SkewRing::commutative(f.clone()), c.iter().map(|&x| Fe(x)).collect())
    }

    #[test]
    fn grs_examples() {
        let f = f8();
        let pts: Vec<Fe> = f.nonzero_elements().collect();
        let ones = vec![Fe::ONE; 7];
        assert_eq!(grs(&f, &pts, &ones, 7).unwrap(), LinearCode::full(&f, Alphabet::Extension, 7).unwrap());
        assert_eq!(grs(&f, &pts, &ones, 3).unwrap().min_distance(DEFAULT_BUDGET), Ok(5));
        assert_eq!(grs(&f, &[Fe(1), Fe(1)], &ones[..2], 1), Err(Hypothesis::DistinctElements(1).into()));
        assert_eq!(grs(&f, &pts[..2], &[Fe(1), Fe(0)], 1), Err(Hypothesis::NonzeroMultiplier(1).into()));
    }

    #[test]
    fn dual_multipliers() {
        let f = f8();
        let pts = vec![Fe(1), Fe(2), Fe(3)];
        let g = cpoly(&f, &[0, 1]);
        let y = grs_dual_multipliers(&pts, &g).unwrap();
        let dual = grs(&f, &pts, &y, 2).unwrap();
        assert_eq!(grs_via_goppa(&pts, &g).unwrap().dual(), dual);
        // n = deg g
        let g3 = cpoly(&f, &[1, 0, 0, 1]);
        let pts3 = vec![Fe(2), Fe(4), Fe(6)];
        assert_eq!(grs_via_goppa(&pts3, &g3).unwrap().dual().dimension(), 0);
        assert_eq!(grs_dual_multipliers(&pts3, &g3).unwrap().len(), 3);
    }

    #[test]
    fn classical_goppa_bounds() {
        let f = f8();
        let pts: Vec<Fe> = f.nonzero_elements().collect();
        // x^2 + x + 1 has no roots in F_8
        let g = cpoly(&f, &[1, 1, 1]);
        let code = goppa_classical(&pts, &g).unwrap();
        assert!(code.dimension() >= 1);
        assert!(code.min_distance(DEFAULT_BUDGET).unwrap() >= 3);
        let full = goppa_classical(&pts, &cpoly(&f, &[5])).unwrap();
        assert_eq!(full, LinearCode::full(&f, Alphabet::Subfield, 7).unwrap());
        assert_eq!(
            goppa_classical(&[Fe(1), Fe(0)], &cpoly(&f, &[0, 1])),
            Err(Hypothesis::Coprime { factor: 1, point: 0 }.into())
        );
    }

    #[test]
    fn oracle_trivial_cases() {
        let f = f8();
        let pts: Vec<Fe> = f.nonzero_elements().collect();
        let g = cpoly(&f, &[1, 1, 1]);
        let sets = vec![pts];
        assert!(goppa_membership_oracle(&sets, std::slice::from_ref(&g), &[Fe::ZERO; 7]).unwrap());
        let mut e = vec![Fe::ZERO; 7];
        e[3] = Fe::ONE;
        assert!(!goppa_membership_oracle(&sets, &[g], &e).unwrap());
    }

    #[test]
    fn acar_is_dual_of_tensor() {
        let f = Field::new(2, 1, 2, 1, None).unwrap();
        let sets = vec![vec![Fe(1), Fe(2), Fe(3)], vec![Fe(0), Fe(1), Fe(2)]];
        // x^2 + x + ω has no roots in F_4
        let factors = vec![cpoly(&f, &[0, 1]), cpoly(&f, &[2, 1, 1])];
        let a = acar(&sets, &factors).unwrap();
        assert_eq!(a, tensor_t(&sets, &factors).unwrap().dual());
        assert_eq!(a.min_distance(DEFAULT_BUDGET), Ok(2));
        let consts = vec![cpoly(&f, &[1]), cpoly(&f, &[1])];
        assert_eq!(acar(&sets, &consts).unwrap(), LinearCode::full(&f, Alphabet::Extension, 9).unwrap());
    }
}
