//! Suites over linear codes: subfield subcodes, traces, duals of tensor products.

use rayon::prelude::*;

use super::{field, label, seeds, show, Check, SuiteReport, DISTANCE_BUDGET};
use crate::codes::{delsarte_check, Alphabet, LinearCode};
use crate::constructions::{acar, tensor_t};
use crate::field::{Fe, Field};
use crate::sample::Sampler;
use crate::skew::{SkewPoly, SkewRing};

fn delsarte_fields() -> Vec<Field> {
    vec![field(2, 1, 3, 1), field(2, 1, 3, 3), field(2, 1, 4, 1), field(2, 1, 4, 2), field(2, 2, 2, 1)]
}

pub(super) fn delsarte(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("delsarte");
    let fields = delsarte_fields();
    let mut identity = Check::new("dual of subfield subcode = trace of dual, 200 random codes");
    let mut twist = Check::new("dual commutes with Frobenius");
    let mut rank = Check::new("Frobenius preserves rank");
    let jobs: Vec<(usize, u64)> = seeds(sampler, 200).into_iter().enumerate().collect();
    let results: Vec<(String, bool, bool, bool)> = jobs
        .par_iter()
        .map(|&(i, seed)| {
            let mut s = Sampler::new(seed);
            let f = &fields[i % fields.len()];
            let n = s.range(1, 10);
            let k = s.range(0, n);
            let m = s.matrix(f, k, n).expect("small");
            let code = LinearCode::from_generator(Alphabet::Extension, &m).expect("valid");
            let shift = s.range(1, f.degree() as usize) as i64;
            let who = format!("{} n={n} G={}", label(f), m.to_text().replace('\n', ";"));
            (
                who,
                delsarte_check(&code).unwrap_or(false),
                code.frobenius(shift).dual() == code.dual().frobenius(shift),
                m.frobenius_entrywise(shift).rank() == m.rank(),
            )
        })
        .collect();
    for (who, a, b, c) in results {
        identity.record(a, || who.clone());
        twist.record(b, || who.clone());
        rank.record(c, || who);
    }
    rep.push(identity);
    rep.push(twist);
    rep.push(rank);
    rep
}

/// A random commutative polynomial of degree `deg` with no root in `set`.
pub(super) fn nonvanishing_poly(s: &mut Sampler, ring: &SkewRing, deg: usize, set: &[Fe]) -> Option<SkewPoly> {
    (0..200).map(|_| s.poly(ring, deg)).find(|g| set.iter().all(|&a| !g.evaluate(a).is_zero()))
}

fn nonzero_code(s: &mut Sampler, f: &Field, n: usize) -> LinearCode {
    loop {
        let k = s.range(1, n);
        let c = s.code(f, n, k).expect("small");
        if c.dimension() > 0 {
            return c;
        }
    }
}

/// Side lengths whose product keeps exhaustive searches within budget.
fn small_sides(s: &mut Sampler, f: &Field) -> (usize, usize) {
    if f.order() <= 4 {
        (s.range(2, 3), s.range(2, 3))
    } else {
        *[(2, 2), (2, 3), (3, 2)].get(s.below(3)).expect("in range")
    }
}

pub(super) fn tensor_dual(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("tensor-dual");
    let fields = [field(2, 1, 2, 1), field(2, 1, 3, 1)];
    let mut subspace = Check::new("(C1^perp x C2^perp)^perp = C1 x F + F x C2");
    let mut distance = Check::new("d(C1 x F + F x C2) = min(d1, d2)");
    let mut mixed = Check::new("Kronecker mixed product");
    for (i, seed) in seeds(sampler, 60).into_iter().enumerate() {
        let mut s = Sampler::new(seed);
        let f = &fields[i % 2];
        let (n1, n2) = small_sides(&mut s, f);
        let c1 = nonzero_code(&mut s, f, n1);
        let c2 = nonzero_code(&mut s, f, n2);
        let who = || format!("{} C1={} C2={}", label(f), c1.to_text().replace('\n', ";"), c2.to_text().replace('\n', ";"));
        let full1 = LinearCode::full(f, Alphabet::Extension, n1).expect("small");
        let full2 = LinearCode::full(f, Alphabet::Extension, n2).expect("small");
        let sum = c1.tensor_product(&full2).and_then(|a| a.sum(&full1.tensor_product(&c2)?));
        let lhs = c1.dual().tensor_product(&c2.dual()).map(|t| t.dual());
        match (lhs, sum) {
            (Ok(l), Ok(r)) => {
                subspace.record(l == r, who);
                let d1 = c1.min_distance(DISTANCE_BUDGET);
                let d2 = c2.min_distance(DISTANCE_BUDGET);
                let ds = r.min_distance(DISTANCE_BUDGET);
                distance.record(matches!((d1, d2, ds), (Ok(a), Ok(b), Ok(c)) if c == a.min(b)), who);
            }
            _ => subspace.record(false, who),
        }

        let dims: Vec<usize> = (0..6).map(|_| s.range(1, 3)).collect();
        let a = s.matrix(f, dims[0], dims[1]).expect("small");
        let b = s.matrix(f, dims[2], dims[3]).expect("small");
        let c = s.matrix(f, dims[1], dims[4]).expect("small");
        let d = s.matrix(f, dims[3], dims[5]).expect("small");
        let lhs = a.kronecker(&b).and_then(|ab| ab.mul(&c.kronecker(&d)?));
        let rhs = a.mul(&c).and_then(|ac| ac.kronecker(&b.mul(&d)?));
        mixed.record(matches!((lhs, rhs), (Ok(x), Ok(y)) if x == y), || format!("{} dims={dims:?}", label(f)));
    }
    rep.push(subspace);
    rep.push(distance);
    rep.push(mixed);

    let mut acar_dual = Check::new("ACar = T^perp");
    let mut acar_dist = Check::new("d(ACar) = min deg g_j + 1");
    let mut done = 0;
    let mut instance = 0u64;
    while done < 40 {
        instance += 1;
        let mut s = Sampler::new(sampler.next_u64());
        let f = &fields[(instance % 2) as usize];
        let ring = SkewRing::commutative(f.clone());
        let (n1, n2) = small_sides(&mut s, f);
        let sets = vec![s.distinct(f, n1, false), s.distinct(f, n2, false)];
        let degs = [s.range(1, n1 - 1), s.range(1, n2 - 1)];
        let g1 = nonvanishing_poly(&mut s, &ring, degs[0], &sets[0]);
        let g2 = nonvanishing_poly(&mut s, &ring, degs[1], &sets[1]);
        let (Some(g1), Some(g2)) = (g1, g2) else { continue };
        done += 1;
        let factors = vec![g1, g2];
        let who = || {
            format!(
                "{} S1={} S2={} g1={} g2={}",
                label(f),
                show(&sets[0]),
                show(&sets[1]),
                show(factors[0].coeffs()),
                show(factors[1].coeffs())
            )
        };
        match (acar(&sets, &factors), tensor_t(&sets, &factors)) {
            (Ok(a), Ok(t)) => {
                acar_dual.record(a == t.dual(), who);
                let want = degs.iter().min().unwrap() + 1;
                acar_dist.record(a.min_distance(DISTANCE_BUDGET) == Ok(want), who);
            }
            _ => acar_dual.record(false, who),
        }
    }
    rep.push(acar_dual);
    rep.push(acar_dist);
    rep
}
