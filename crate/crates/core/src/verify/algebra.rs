//! Suites over the field tower and the skew polynomial ring.

use rayon::prelude::*;

use super::{field, label, show, Check, SuiteReport};
use crate::field::{Fe, Field};
use crate::linalg::skew_vandermonde;
use crate::sample::Sampler;
use crate::skew::{
    check_inverse_p_independent, check_p_independent, inverse_sufficient_condition, lclm, lclm_linear_incremental,
    qcoeffs_closed_form, InvariantSpec, SkewPoly, SkewRing,
};

fn norm_fields() -> Vec<Field> {
    vec![field(2, 1, 3, 1), field(2, 1, 4, 1), field(2, 2, 2, 1)]
}

fn q_label(f: &Field) -> String {
    format!("F_{} (q={})", f.order(), f.q())
}

pub(super) fn norms() -> SuiteReport {
    let mut rep = SuiteReport::new("norms");
    for f in norm_fields() {
        let ring = SkewRing::frobenius(f.clone());
        let t = f.t() as usize;
        let mut ratio = Check::new(format!("ratio identity over {}", q_label(&f)));
        let mut inverse = Check::new(format!("inverse identity over {}", q_label(&f)));
        let mut recur = Check::new(format!("recurrence over {}", q_label(&f)));
        let mut full = Check::new(format!("N_t is the field norm over {}", q_label(&f)));
        let norm_exp = (f.order() as u64 - 1) / (f.q() - 1);
        for a in f.elements() {
            for i in 0..=t {
                let ni = ring.norm(i, a);
                let next = ring.norm(i + 1, a);
                recur.record(next == f.mul(ring.theta(ni), a) && next == f.mul(ring.theta_pow(a, i as i64), ni), || {
                    format!("a={} i={i}", a.0)
                });
                if a.is_zero() {
                    continue;
                }
                inverse.record(f.inv(ni) == ring.norm(i, f.inv(a)), || format!("a={} i={i}", a.0));
                for j in 0..=t {
                    let lhs = f.mul(next, f.inv(ring.norm(j + 1, a)));
                    let rhs = ring.theta(f.mul(ni, f.inv(ring.norm(j, a))));
                    ratio.record(lhs == rhs, || format!("a={} i={i} j={j}", a.0));
                }
            }
            full.record(ring.norm(t, a) == f.pow(a, norm_exp), || format!("a={}", a.0));
        }
        for c in [ratio, inverse, recur, full] {
            rep.push(c);
        }
    }
    rep
}

/// Roots in `F` of the commutative polynomial with the given coefficients.
fn roots(f: &Field, coeffs: &[u32]) -> Vec<Fe> {
    let g = SkewPoly::new(&SkewRing::commutative(f.clone()), coeffs.iter().map(|&c| Fe(c)).collect());
    f.elements().filter(|&a| g.evaluate(a).is_zero()).collect()
}

fn sorted(mut v: Vec<Fe>) -> Vec<Fe> {
    v.sort();
    v
}

pub(super) fn pindep(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("pindep");
    // F_8 = F_2[ω]/(ω³ + ω + 1), θ(a) = a²
    let f8 = Field::new(2, 1, 3, 1, Some(vec![1, 1, 0, 1])).expect("irreducible");
    let ring = SkewRing::frobenius(f8.clone());
    let inverses = |s: &[Fe]| sorted(s.iter().map(|&a| f8.inv(a)).collect());
    let mut example = Check::new("F_8 worked example");
    let cubic_roots = roots(&f8, &[1, 0, 1, 1]);
    example.record(cubic_roots == vec![Fe(3), Fe(5), Fe(7)], || format!("roots of X^3+X^2+1 = {}", show(&cubic_roots)));
    example.record(check_p_independent(&ring, &cubic_roots), || "roots not P-independent".into());
    // {ω²+ω, ω, ω²}
    example.record(inverses(&cubic_roots) == vec![Fe(2), Fe(4), Fe(6)], || show(&inverses(&cubic_roots)));
    example.record(check_inverse_p_independent(&ring, &cubic_roots) == Ok(false), || "inverses of roots".into());
    let basis = vec![Fe(1), Fe(2), Fe(4)];
    example.record(check_p_independent(&ring, &basis), || "basis not P-independent".into());
    // {1, ω²+1, ω²+ω+1}
    example.record(inverses(&basis) == vec![Fe(1), Fe(5), Fe(7)], || show(&inverses(&basis)));
    example.record(check_inverse_p_independent(&ring, &basis) == Ok(true), || "inverses of basis".into());
    rep.push(example);

    let rings = [
        SkewRing::frobenius(f8),
        SkewRing::frobenius(field(2, 1, 4, 2)),
        SkewRing::frobenius(field(2, 2, 2, 1)),
        SkewRing::frobenius(field(3, 1, 3, 1)),
    ];
    let mut vander = Check::new("deg lclm = rank of skew Vandermonde");
    let mut incremental = Check::new("incremental lclm = extended Euclid lclm");
    let mut sufficient = Check::new("sufficient condition implies inverse P-independence");
    for ring in &rings {
        let f = ring.field();
        for _ in 0..50 {
            let n = sampler.range(1, 2 * f.t() as usize + 1);
            let pts = sampler.distinct(f, n, true);
            let lin: Vec<SkewPoly> = pts.iter().map(|&s| SkewPoly::linear(ring, s)).collect();
            let l = lclm(&lin).expect("nonempty");
            let inc = lclm_linear_incremental(ring, &pts).expect("nonempty");
            let rank = skew_vandermonde(ring, &pts, n).expect("small").rank();
            let who = || format!("{} S={}", label(f), show(&pts));
            vander.record(l.degree() == Some(rank), who);
            incremental.record(l == inc, who);
            if inverse_sufficient_condition(ring, &pts) {
                sufficient.record(check_inverse_p_independent(ring, &pts) == Ok(true), who);
            }
        }
    }
    rep.push(vander);
    rep.push(incremental);
    rep.push(sufficient);
    rep
}

fn poly_from_index(ring: &SkewRing, mut idx: u64, len: usize) -> SkewPoly {
    let q = ring.field().order() as u64;
    let c = (0..len)
        .map(|_| {
            let d = idx % q;
            idx /= q;
            Fe(d as u32)
        })
        .collect();
    SkewPoly::new(ring, c)
}

fn invariance_agrees(g: &SkewPoly) -> bool {
    match g.is_invariant() {
        Ok(Some(spec)) => g.is_invariant_by_definition() && spec.expand(g.ring()) == *g,
        Ok(None) => !g.is_invariant_by_definition(),
        Err(_) => false,
    }
}

pub(super) fn invariant(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("invariant");
    // (field, maximal degree)
    for (f, max_deg) in [(field(2, 1, 2, 1), 4usize), (field(2, 1, 3, 1), 6)] {
        let ring = SkewRing::frobenius(f.clone());
        let q = f.order() as u64;
        let mut exhaustive = Check::new(format!("exhaustive degree <= 3 over {}", q_label(&f)));
        let results: Vec<(u64, bool)> =
            (1..q.pow(4)).into_par_iter().map(|i| (i, invariance_agrees(&poly_from_index(&ring, i, 4)))).collect();
        let mut positives = 0;
        for (i, ok) in results {
            let g = poly_from_index(&ring, i, 4);
            if ok && g.is_invariant().ok().flatten().is_some() {
                positives += 1;
            }
            exhaustive.record(ok, || format!("g={}", show(g.coeffs())));
        }
        rep.notes.push(format!("{}: {positives} invariant polynomials of degree <= 3", q_label(&f)));
        let mut random = Check::new(format!("1000 samples of degree 4..{max_deg} over {}", q_label(&f)));
        let samples: Vec<SkewPoly> = (0..1000)
            .map(|k| {
                if k % 2 == 0 {
                    let d = sampler.range(4, max_deg);
                    sampler.poly(&ring, d)
                } else {
                    loop {
                        let g = sampler.invariant_spec(&ring, max_deg).expect("valid").expand(&ring);
                        if g.degree().unwrap() >= 4 {
                            break g;
                        }
                    }
                }
            })
            .collect();
        let results: Vec<bool> = samples.par_iter().map(invariance_agrees).collect();
        for (g, ok) in samples.iter().zip(results) {
            random.record(ok, || format!("g={}", show(g.coeffs())));
        }
        rep.push(exhaustive);
        rep.push(random);
    }
    rep
}

/// All normalized `(v, l)` with `deg v·o + l ≤ max_degree`, `v_0 = 1` and nonconstant total.
fn invariant_shapes(ring: &SkewRing, max_degree: usize) -> Vec<(Vec<Fe>, usize)> {
    let o = ring.order() as usize;
    let fixed: Vec<Fe> = ring.field().elements().filter(|&a| ring.is_fixed(a)).collect();
    let mut out = Vec::new();
    for dv in 0..=max_degree / o {
        let inner = dv.saturating_sub(1);
        let combos = (fixed.len() as u64).pow(inner as u32) * if dv == 0 { 1 } else { fixed.len() as u64 - 1 };
        for mut idx in 0..combos {
            let mut v = vec![Fe::ONE];
            for _ in 0..inner {
                v.push(fixed[(idx % fixed.len() as u64) as usize]);
                idx /= fixed.len() as u64;
            }
            if dv > 0 {
                v.push(fixed[1 + idx as usize]);
            }
            for l in 0..=max_degree - dv * o {
                if dv + l > 0 {
                    out.push((v.clone(), l));
                }
            }
        }
    }
    out
}

pub(super) fn divmod(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("divmod");
    for f in norm_fields() {
        let ring = SkewRing::frobenius(f.clone());
        let mut closed = Check::new(format!("closed form = right quotient, deg g <= 9 over {}", q_label(&f)));
        let mut remainder = Check::new(format!("remainder = sum g_i N_i(s) = g(s) over {}", q_label(&f)));
        let shapes = invariant_shapes(&ring, 9);
        let nonzero: Vec<Fe> = f.nonzero_elements().collect();
        let results: Vec<(bool, bool, String)> = shapes
            .par_iter()
            .flat_map_iter(|(v, l)| {
                let ring = &ring;
                nonzero.iter().flat_map(move |&a| {
                    let spec = InvariantSpec::new(ring, a, v, *l).expect("fixed coefficients");
                    let g = spec.expand(ring);
                    ring.field().nonzero_elements().map(move |s| {
                        let (q, r) = g.right_divmod(&SkewPoly::linear(ring, s)).expect("nonzero divisor");
                        let closed_ok = (0..spec.degree()).map(|i| q.coeff(i)).eq(qcoeffs_closed_form(ring, &spec, s));
                        let f = ring.field();
                        let direct = f.sum(g.coeffs().iter().enumerate().map(|(i, &gi)| f.mul(gi, ring.norm(i, s))));
                        let rem_ok = r.coeff(0) == direct && r.degree().unwrap_or(0) == 0 && direct == g.evaluate(s);
                        (closed_ok, rem_ok, format!("g={} s={}", show(g.coeffs()), s.0))
                    })
                })
            })
            .collect();
        for (c, r, who) in results {
            closed.record(c, || who.clone());
            remainder.record(r, || who);
        }
        rep.push(closed);
        rep.push(remainder);
    }

    let mut right = Check::new("random right division f = q*g + r");
    let mut left = Check::new("random left division f = g*q + r");
    for f in [field(2, 1, 3, 1), field(2, 1, 4, 1), field(2, 2, 2, 1), field(2, 1, 9, 1)] {
        let ring = SkewRing::frobenius(f.clone());
        for _ in 0..200 {
            let df = sampler.range(0, 6);
            let dg = sampler.range(0, 6);
            let a = sampler.poly(&ring, df);
            let b = sampler.poly(&ring, dg);
            let who = || format!("{} f={} g={}", label(&f), show(a.coeffs()), show(b.coeffs()));
            let (q, r) = a.right_divmod(&b).expect("nonzero");
            right.record(&(&q * &b) + &r == a && r.degree().is_none_or(|d| d < dg), who);
            let (q, r) = a.left_divmod(&b).expect("nonzero");
            left.record(&(&b * &q) + &r == a && r.degree().is_none_or(|d| d < dg), who);
        }
    }
    rep.push(right);
    rep.push(left);

    let mut sweep = Check::new("exhaustive division over F_4, deg f <= 2, deg g <= 1");
    let ring = SkewRing::frobenius(field(2, 1, 2, 1));
    for i in 0..64 {
        let a = poly_from_index(&ring, i, 3);
        for j in 1..16 {
            let b = poly_from_index(&ring, j, 2);
            let (q, r) = a.right_divmod(&b).expect("nonzero");
            let (ql, rl) = a.left_divmod(&b).expect("nonzero");
            let dg = b.degree().unwrap();
            let ok = &(&q * &b) + &r == a
                && &(&b * &ql) + &rl == a
                && r.degree().is_none_or(|d| d < dg)
                && rl.degree().is_none_or(|d| d < dg);
            sweep.record(ok, || format!("f={} g={}", show(a.coeffs()), show(b.coeffs())));
        }
    }
    rep.push(sweep);
    rep
}
