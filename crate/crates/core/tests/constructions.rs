use skewgoppa::constructions::{
    acar, goppa_classical, gsg, gsg_gsrs_witness, gsmg, gsrs, grs, multivariate_goppa, tensor_t, GoppaInstance,
};
use skewgoppa::sample::Sampler;
use skewgoppa::skew::InvariantSpec;
use skewgoppa::{Alphabet, Error, Fe, Field, Hypothesis, LinearCode, Matrix, SkewPoly, SkewRing, Twist};

const BUDGET: u64 = 1 << 20;

fn f8() -> Field {
    Field::new(2, 1, 3, 1, None).unwrap()
}

fn fe(v: &[u32]) -> Vec<Fe> {
    v.iter().map(|&x| Fe(x)).collect()
}

/// `(g(x) − g(s)) / (x − s)` by synthetic division, lowest degree first.
fn difference_quotient(f: &Field, g: &[Fe], s: Fe) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; g.len() - 1];
    let mut acc = Fe::ZERO;
    for i in (1..g.len()).rev() {
        acc = f.add(f.mul(acc, s), g[i]);
        out[i - 1] = acc;
    }
    out
}

/// Binary words c with `Σ c_i g(s_i)^{-1} (g(x) − g(s_i))/(x − s_i) = 0`.
fn goppa_words_by_brute_force(f: &Field, pts: &[Fe], g: &[Fe]) -> Vec<Vec<Fe>> {
    let eval = |s: Fe| g.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, s), c));
    let cols: Vec<Vec<Fe>> = pts
        .iter()
        .map(|&s| difference_quotient(f, g, s).into_iter().map(|c| f.mul(c, f.inv(eval(s)))).collect())
        .collect();
    (0u32..1 << pts.len())
        .map(|mask| (0..pts.len()).map(|i| Fe(mask >> i & 1)).collect::<Vec<_>>())
        .filter(|c| (0..g.len() - 1).all(|row| f.sum(c.iter().zip(&cols).map(|(&ci, col)| f.mul(ci, col[row]))).is_zero()))
        .collect()
}

#[test]
fn classical_goppa_matches_brute_force() {
    let f = f8();
    let ring = SkewRing::commutative(f.clone());
    let pts: Vec<Fe> = f.elements().collect();
    let g = fe(&[3, 1, 1]);
    let words = goppa_words_by_brute_force(&f, &pts, &g);
    let code = goppa_classical(&pts, &SkewPoly::new(&ring, g)).unwrap();
    assert_eq!(words.len(), 1 << code.dimension());
    assert!(words.iter().all(|w| code.contains(w)));
    let d = words.iter().filter_map(|w| Some(w.iter().filter(|c| !c.is_zero()).count()).filter(|&x| x > 0)).min();
    assert_eq!(code.min_distance(BUDGET), Ok(d.unwrap()));
    assert_eq!((code.length(), code.dimension(), d), (8, 2, Some(5)));
}

#[test]
fn grs_is_mds() {
    let f = f8();
    let mut s = Sampler::new(4);
    for _ in 0..30 {
        let n = s.range(2, 7);
        let k = s.range(1, n);
        let pts = s.distinct(&f, n, false);
        let mult = s.nonzeros(&f, n);
        let code = grs(&f, &pts, &mult, k).unwrap();
        assert_eq!(code.dimension(), k);
        assert_eq!(code.min_distance(BUDGET), Ok(n - k + 1));
    }
}

#[test]
fn gsrs_is_mds() {
    let ring = SkewRing::frobenius(Field::new(2, 1, 4, 2, None).unwrap());
    let mut s = Sampler::new(9);
    for _ in 0..20 {
        let pts = s.independent_set(&ring, 4);
        let n = pts.len();
        let k = s.range(1, n);
        let mult = s.nonzeros(ring.field(), n);
        let code = gsrs(&ring, &pts, &mult, k).unwrap();
        assert_eq!(code.min_distance(BUDGET), Ok(n - k + 1));
    }
}

#[test]
fn f8_gsg_example() {
    let ring = SkewRing::frobenius(f8());
    let spec = InvariantSpec::new(&ring, Fe::ONE, &[Fe::ONE], 3).unwrap();
    let pts = fe(&[1, 2, 4]);
    let built = gsg(&ring, &pts, &fe(&[1, 1, 1]), &spec).unwrap();
    // rows are quotient coefficients of X^3 on the right by X − s_j, checked by hand
    let want = Matrix::from_rows(ring.field(), 3, vec![fe(&[1, 5, 7]), fe(&[1, 6, 2]), fe(&[1, 1, 1])]).unwrap();
    assert_eq!(built.parity_check, want);
    assert_eq!(built.code.dimension(), 0);
    assert_eq!(built.parity_check.rank(), 3);
    assert!(gsg_gsrs_witness(&ring, &pts, &fe(&[1, 1, 1]), &spec).unwrap().holds());
}

#[test]
fn gsg_with_identity_twist_is_classical_goppa() {
    let f = f8();
    let ring = SkewRing::new(f.clone(), Twist::Identity);
    let g = SkewPoly::new(&ring, fe(&[3, 1, 1]));
    let spec = g.is_invariant().unwrap().unwrap();
    let pts: Vec<Fe> = f.nonzero_elements().collect();
    let built = gsg(&ring, &pts, &vec![Fe::ONE; pts.len()], &spec).unwrap();
    assert_eq!(built.code, goppa_classical(&pts, &SkewPoly::new(&SkewRing::commutative(f), fe(&[3, 1, 1]))).unwrap());
}

#[test]
fn gsmg_with_one_variable_is_gsg() {
    let ring = SkewRing::frobenius(Field::new(2, 1, 4, 1, None).unwrap());
    let mut s = Sampler::new(21);
    for _ in 0..10 {
        let pts = s.independent_set(&ring, 4);
        let spec = s.invariant_spec(&ring, 4).unwrap();
        let eta = s.nonzeros(ring.field(), pts.len());
        let Ok(single) = gsg(&ring, &pts, &eta, &spec) else { continue };
        let inst = GoppaInstance::new(vec![pts.clone()], vec![spec.expand(&ring)], eta).unwrap();
        assert_eq!(gsmg(&inst).unwrap().code, single.code);
    }
}

#[test]
fn f8_gsmg_example_matches_its_tensor_code() {
    let f = f8();
    let comm = SkewRing::commutative(f.clone());
    let skew = SkewRing::frobenius(f);
    let factors = vec![SkewPoly::new(&comm, fe(&[5, 1])), SkewPoly::new(&skew, fe(&[0, 0, 0, 1]))];
    let inst = GoppaInstance::new(vec![fe(&[0, 1, 2, 3]), fe(&[1, 2, 4])], factors, vec![Fe::ONE; 3]).unwrap();
    let built = gsmg(&inst).unwrap();
    assert!(built.matches_tensor().unwrap());
    assert_eq!((built.code.length(), built.code.dimension()), (12, 3));
    assert_eq!(built.code.min_distance(BUDGET), Ok(3));
}

#[test]
fn acar_is_the_dual_of_the_tensor_code() {
    let f = Field::new(2, 1, 2, 2, None).unwrap();
    let ring = SkewRing::commutative(f.clone());
    let sets = vec![fe(&[0, 1, 2]), fe(&[0, 1, 3])];
    let factors = vec![SkewPoly::new(&ring, fe(&[3, 1])), SkewPoly::new(&ring, fe(&[2, 1, 1]))];
    let a = acar(&sets, &factors).unwrap();
    assert_eq!(a, tensor_t(&sets, &factors).unwrap().dual());
    assert_eq!((a.dimension(), a.min_distance(BUDGET)), (9 - 2, Ok(2)));
    // over F_4 with r = t the subfield subcode of T^perp is T^perp itself
    let sub = multivariate_goppa(&sets, &factors).unwrap();
    assert_eq!(sub.generator().row_space_equal(a.generator()), Ok(true));
}

#[test]
fn hypotheses_are_named() {
    let f = f8();
    let ring = SkewRing::frobenius(f.clone());
    let spec = InvariantSpec::new(&ring, Fe::ONE, &[Fe::ONE], 3).unwrap();
    assert_eq!(
        grs(&f, &fe(&[1, 2, 2]), &fe(&[1, 1, 1]), 2).unwrap_err(),
        Error::Hypothesis(Hypothesis::DistinctElements(2))
    );
    assert_eq!(
        gsg(&ring, &fe(&[1, 2, 4, 3]), &fe(&[1, 1, 1, 1]), &spec).unwrap_err(),
        Error::Hypothesis(Hypothesis::PIndependent)
    );
    assert_eq!(
        gsg(&ring, &fe(&[1, 2, 4]), &fe(&[1, 0, 1]), &spec).unwrap_err(),
        Error::Hypothesis(Hypothesis::NonzeroMultiplier(1))
    );
    // roots of X^3 + X^2 + 1: the inverted set is dependent, so no witness exists
    assert_eq!(
        gsg_gsrs_witness(&ring, &fe(&[3, 5, 7]), &fe(&[1, 1, 1]), &spec).unwrap_err(),
        Error::Hypothesis(Hypothesis::InversePIndependent)
    );
}

#[test]
fn subfield_subcode_of_the_full_space_is_the_subfield_space() {
    let f = Field::new(2, 1, 4, 2, None).unwrap();
    let full = LinearCode::full(&f, Alphabet::Extension, 3).unwrap();
    assert_eq!(full.subfield_subcode().unwrap().dimension(), 3);
    assert_eq!(full.subfield_subcode().unwrap().alphabet(), Alphabet::Subfield);
}
