//! Suites over the Goppa-type families and their reductions.

use rayon::prelude::*;

use super::linear::nonvanishing_poly;
use super::{field, label, seeds, show, subfield_words, Check, SuiteReport, DISTANCE_BUDGET};
use crate::codes::{delsarte_check, Alphabet, DistanceError, LinearCode};
use crate::constructions::{
    goppa_classical, goppa_membership_oracle, grs, gsg, gsg_gsrs_witness, gsmg, gsrs, hprime_by_division,
    multivariate_goppa, GoppaInstance, Gsg,
};
use crate::error::Result;
use crate::field::{Fe, Field};
use crate::linalg::Matrix;
use crate::ore::{grid_points, membership_oracle, MultiOrePoly};
use crate::report::{parameter_report, Bounds, ParameterReport};
use crate::sample::Sampler;
use crate::skew::{check_inverse_p_independent, linear_left_annihilator, InvariantSpec, SkewPoly, SkewRing};

fn skew_rings() -> Vec<SkewRing> {
    [field(2, 1, 3, 1), field(2, 1, 4, 1), field(2, 1, 4, 2), field(2, 2, 2, 1)]
        .into_iter()
        .map(SkewRing::frobenius)
        .collect()
}

/// Longest `n` whose subfield words can be swept exhaustively.
fn sweep_length(f: &Field) -> usize {
    let bits = 64 - (f.subfield_order() - 1).leading_zeros() as usize;
    12 / bits
}

#[derive(Clone, Debug)]
struct GsgCase {
    ring: SkewRing,
    points: Vec<Fe>,
    eta: Vec<Fe>,
    spec: InvariantSpec,
}

impl GsgCase {
    fn describe(&self) -> String {
        format!(
            "{} S={} eta={} g={}",
            label(self.ring.field()),
            show(&self.points),
            show(&self.eta),
            show(self.spec.expand(&self.ring).coeffs())
        )
    }
}

/// Draws `(S, η, g)` with `S` P-independent and `g` nonvanishing on `S`. With
/// `inverse` set `S^{-1}` is P-independent too, otherwise it is dependent.
fn sample_gsg(s: &mut Sampler, ring: &SkewRing, inverse: bool) -> Option<GsgCase> {
    let f = ring.field();
    for _ in 0..50 {
        let max_n = sweep_length(f).min(2 * f.t() as usize + 2);
        let target = s.range(1, max_n);
        let max_deg = s.range(1, 6);
        let spec = s.invariant_spec(ring, max_deg).ok()?;
        let g = spec.expand(ring);
        let raw = if inverse { Some(s.independent_set(ring, target)) } else { s.independent_set_without_inverse(ring, target) };
        let Some(raw) = raw else { continue };
        let points: Vec<Fe> = raw.into_iter().filter(|&a| !g.evaluate(a).is_zero()).take(max_n).collect();
        if points.is_empty() || check_inverse_p_independent(ring, &points) != Ok(inverse) {
            continue;
        }
        let eta = s.nonzeros(f, points.len());
        return Some(GsgCase { ring: ring.clone(), points, eta, spec });
    }
    None
}

fn sample_cases(sampler: &mut Sampler, count: usize, inverse: bool) -> Vec<GsgCase> {
    let rings = skew_rings();
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count && i < 20 * count {
        let mut s = Sampler::new(sampler.next_u64());
        if let Some(c) = sample_gsg(&mut s, &rings[i % rings.len()], inverse) {
            out.push(c);
        }
        i += 1;
    }
    out
}

/// `Σ_j c_j η_j h_j = 0` with `h_j (X − s_j) ≡ 1` modulo `R g`.
fn skew_oracle(hs: &[SkewPoly], eta: &[Fe], c: &[Fe]) -> bool {
    let ring = hs[0].ring();
    let f = ring.field();
    let mut acc = SkewPoly::zero(ring);
    for ((h, &e), &cj) in hs.iter().zip(eta).zip(c) {
        if !cj.is_zero() {
            acc = &acc + &h.scale_left(f.mul(cj, e));
        }
    }
    acc.is_zero()
}

/// `H[i][j] = g(s_j)^{-1} q_{i,j} η_j` recomputed from right divisions.
fn parity_by_division(g: &SkewPoly, points: &[Fe], eta: &[Fe]) -> Result<Matrix> {
    let f = g.field();
    let hp = hprime_by_division(g, points)?;
    let scale: Vec<Fe> = points.iter().zip(eta).map(|(&s, &e)| f.mul(f.inv(g.evaluate(s)), e)).collect();
    hp.scale_columns(&scale)
}

struct GsgOutcome {
    who: String,
    closed_vs_division: bool,
    factorization: bool,
    reduced: Option<bool>,
    rank: usize,
    degree: usize,
    n: usize,
    report: ParameterReport,
    oracle: Option<bool>,
    delsarte: bool,
}

fn run_gsg(case: &GsgCase) -> Result<GsgOutcome> {
    let ring = &case.ring;
    let built: Gsg = gsg(ring, &case.points, &case.eta, &case.spec)?;
    let g = case.spec.expand(ring);
    let fac = &built.factors;
    let closed_vs_division = fac.hprime == hprime_by_division(&g, &case.points)?;
    let factorization = built.parity_check == parity_by_division(&g, &case.points, &case.eta)?;
    let reduced = match &fac.reduced {
        Some(red) => {
            let rhs = red
                .vandermonde
                .scale_columns(&red.ddiag)?
                .scale_columns(&fac.rdiag)?
                .scale_columns(&fac.ediag)?;
            Some(red.transform.mul(&built.parity_check)? == rhs)
        }
        None => None,
    };
    let n = case.points.len();
    let degree = case.spec.degree();
    let rank = built.parity_check.rank();
    let bounds = Bounds::gsg(ring.field(), n, degree, built.inverse_independent);
    let report = parameter_report(&built.code, bounds, Some(rank), DISTANCE_BUDGET);
    let oracle = subfield_words(ring.field(), n).map(|words| {
        let hs: Vec<SkewPoly> =
            case.points.iter().map(|&s| linear_left_annihilator(&g, s).expect("coprime").0).collect();
        words.iter().all(|w| built.code.contains(w) == skew_oracle(&hs, &case.eta, w))
    });
    let delsarte = delsarte_check(&LinearCode::from_parity_check(Alphabet::Extension, &built.parity_check)?)?;
    Ok(GsgOutcome {
        who: case.describe(),
        closed_vs_division,
        factorization,
        reduced,
        rank,
        degree,
        n,
        report,
        oracle,
        delsarte,
    })
}

fn distance_checked(report: &ParameterReport) -> bool {
    matches!(report.distance, Ok(_) | Err(DistanceError::ZeroCode))
}

pub(super) fn gsg_pipeline(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("gsg-pipeline");
    let with = sample_cases(sampler, 90, true);
    let without = sample_cases(sampler, 20, false);
    let mut quotients = Check::new("closed-form H' = division quotients");
    let mut factors = Check::new("H = H'RE entrywise");
    let mut reduced = Check::new("T H = V' D R E");
    let mut rank_full = Check::new("rank(H) = deg g with S^-1 P-independent, deg g <= n");
    let mut rank_le = Check::new("rank(H) <= deg g without the S^-1 hypothesis");
    let mut bounds = Check::new("k and d bounds, exhaustive");
    let mut oracle = Check::new("kernel membership = annihilator oracle, all subfield words");
    let mut delsarte = Check::new("Delsarte identity on the parity-check code");
    let mut exhaustive_d = 0;
    let mut nonzero = 0;
    let mut equal_without = 0;
    for (hyp, cases) in [(true, &with), (false, &without)] {
        let outcomes: Vec<Result<GsgOutcome>> = cases.par_iter().map(run_gsg).collect();
        for (case, out) in cases.iter().zip(outcomes) {
            let out = match out {
                Ok(o) => o,
                Err(e) => {
                    quotients.record(false, || format!("{} ({e})", case.describe()));
                    continue;
                }
            };
            let who = || out.who.clone();
            quotients.record(out.closed_vs_division, who);
            factors.record(out.factorization, who);
            if let Some(r) = out.reduced {
                reduced.record(r, who);
            }
            if hyp {
                if out.degree <= out.n {
                    rank_full.record(out.rank == out.degree, who);
                }
            } else {
                rank_le.record(out.rank <= out.degree, who);
                if out.rank == out.degree.min(out.n) {
                    equal_without += 1;
                }
            }
            bounds.record(out.report.passes(), || format!("{} report: {}", out.who, out.report.to_string().replace('\n', "; ")));
            if distance_checked(&out.report) {
                exhaustive_d += 1;
            }
            if out.report.k > 0 {
                nonzero += 1;
            }
            if let Some(o) = out.oracle {
                oracle.record(o, who);
            }
            delsarte.record(out.delsarte, who);
        }
    }
    let total = with.len() + without.len();
    rep.notes.push(format!("exact distance computed on {exhaustive_d} of {total} instances, {nonzero} with k > 0"));
    rep.notes.push(format!(
        "without the S^-1 hypothesis rank(H) = min(deg g, n) on {equal_without} of {} instances",
        without.len()
    ));
    for c in [quotients, factors, reduced, rank_full, rank_le, bounds, oracle, delsarte] {
        rep.push(c);
    }
    rep
}

pub(super) fn gsrs_witness(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("gsrs-witness");
    let mut cases = Vec::new();
    for c in sample_cases(sampler, 400, true) {
        if cases.len() == 100 {
            break;
        }
        if c.spec.degree() <= c.points.len() {
            cases.push(c);
        }
    }
    let mut witness = Check::new("GSG = subfield subcode of theta(GSRS)^perp");
    let mut transform = Check::new("T H = theta(G) entrywise");
    let outcomes: Vec<Result<(bool, bool, bool)>> = cases
        .par_iter()
        .map(|c| {
            let w = gsg_gsrs_witness(&c.ring, &c.points, &c.eta, &c.spec)?;
            let mds = match w.gsrs.min_distance(DISTANCE_BUDGET) {
                Ok(d) => d == w.gsrs.length() - w.gsrs.dimension() + 1,
                Err(DistanceError::ZeroCode) => true,
                Err(_) => true,
            };
            Ok((w.codes_equal, w.transform_matches, mds))
        })
        .collect();
    let mut witness_mds = Check::new("witness GSRS code is MDS");
    for (c, out) in cases.iter().zip(outcomes) {
        match out {
            Ok((eq, tr, mds)) => {
                witness.record(eq, || c.describe());
                transform.record(tr, || c.describe());
                witness_mds.record(mds, || c.describe());
            }
            Err(e) => witness.record(false, || format!("{} ({e})", c.describe())),
        }
    }
    rep.push(witness);
    rep.push(transform);
    rep.push(witness_mds);

    // GSRS codes over the extension field with full skew Vandermonde rank
    let mut mds = Check::new("GSRS d = n - k + 1, exhaustive");
    let rings = skew_rings();
    for (i, seed) in seeds(sampler, 60).into_iter().enumerate() {
        let mut s = Sampler::new(seed);
        let ring = &rings[i % rings.len()];
        let f = ring.field();
        let n = s.range(1, 6);
        let pts = s.independent_set(ring, n);
        let v = s.nonzeros(f, pts.len());
        let max_k = (20 / (32 - (f.order() - 1).leading_zeros()) as usize).min(pts.len());
        let k = s.range(1, max_k);
        let who = || format!("{} S={} v={} k={k}", label(f), show(&pts), show(&v));
        match gsrs(ring, &pts, &v, k) {
            Ok(code) => {
                let want = pts.len() + 1 - code.dimension();
                let got = code.min_distance(DISTANCE_BUDGET);
                mds.record(got == Ok(want) && code.dimension() == k, || format!("{} d={got:?}", who()));
            }
            Err(e) => mds.record(false, || format!("{} ({e})", who())),
        }
    }
    rep.push(mds);
    rep
}

struct GsmgCase {
    sets: Vec<Vec<Fe>>,
    factors: Vec<SkewPoly>,
    eta: Vec<Fe>,
}

impl GsmgCase {
    fn describe(&self) -> String {
        let sets: Vec<String> = self.sets.iter().map(|s| show(s)).collect();
        let gs: Vec<String> = self.factors.iter().map(|g| show(g.coeffs())).collect();
        format!(
            "{} S={} g={} eta={}",
            label(self.factors[0].field()),
            sets.join("x"),
            gs.join("*"),
            show(&self.eta)
        )
    }
}

fn sample_gsmg(s: &mut Sampler, ring: &SkewRing) -> Option<GsmgCase> {
    let f = ring.field();
    let comm = SkewRing::commutative(f.clone());
    let max_n = sweep_length(f).max(4);
    let m = if max_n >= 12 && s.coin() { 3 } else { 2 };
    let last_case = sample_gsg(s, ring, true)?;
    let nm = last_case.points.len().min(max_n / 2).max(1);
    let mut sets = Vec::new();
    let mut factors = Vec::new();
    let mut budget = max_n / nm;
    for _ in 0..m - 1 {
        if budget < 1 {
            return None;
        }
        let ni = s.range(1, budget.min(4));
        budget /= ni;
        let set = s.distinct(f, ni, false);
        let deg = s.range(1, ni);
        factors.push(nonvanishing_poly(s, &comm, deg, &set)?);
        sets.push(set);
    }
    let points = last_case.points[..nm].to_vec();
    sets.push(points);
    factors.push(last_case.spec.expand(ring));
    let eta = last_case.eta[..nm].to_vec();
    Some(GsmgCase { sets, factors, eta })
}

struct GsmgOutcome {
    entries: bool,
    row_space: bool,
    kernel: bool,
    report: ParameterReport,
    oracle: Option<bool>,
    delsarte: bool,
}

/// Entry `((b_1..b_m), (j_1..j_m))` of `H` as `Π_i q_{i,b_i}(s_{i j_i}) g_i(s_{i j_i})^{-1}` times `η_{j_m}`.
fn gsmg_entries(case: &GsmgCase) -> Result<Matrix> {
    let f = case.factors[0].field().clone();
    let per: Vec<Matrix> = case
        .sets
        .iter()
        .zip(&case.factors)
        .map(|(set, g)| parity_by_division(g, set, &vec![Fe::ONE; set.len()]))
        .collect::<Result<_>>()?;
    let row_idx = crate::ore::grid_indices(&per.iter().map(Matrix::rows).collect::<Vec<_>>());
    let col_idx = crate::ore::grid_indices(&per.iter().map(Matrix::cols).collect::<Vec<_>>());
    let nm = case.eta.len();
    let rows = row_idx
        .iter()
        .map(|b| {
            col_idx
                .iter()
                .enumerate()
                .map(|(c, j)| {
                    let prod = f.product(b.iter().zip(j).zip(&per).map(|((&bi, &ji), h)| h.get(bi, ji)));
                    f.mul(prod, case.eta[c % nm])
                })
                .collect()
        })
        .collect();
    Matrix::from_rows(&f, col_idx.len(), rows)
}

fn run_gsmg(case: &GsmgCase) -> Result<GsmgOutcome> {
    let inst = GoppaInstance::new(case.sets.clone(), case.factors.clone(), case.eta.clone())?;
    let built = gsmg(&inst)?;
    let entries = built.parity_check == gsmg_entries(case)?;
    let row_space = built.parity_check.row_space_equal(&built.tensor_generator)?;
    let kernel = built.matches_tensor()?;
    let report = parameter_report(&built.code, Bounds::gsmg(&inst), Some(built.parity_check.rank()), DISTANCE_BUDGET);
    let n = inst.length();
    let oracle = match subfield_words(inst.field(), n) {
        Some(words) => {
            let gf = inst.factorization();
            let hs: Vec<MultiOrePoly> = grid_points(&case.sets).iter().map(|p| gf.assemble_h(p)).collect::<Result<_>>()?;
            let eta = inst.expanded_eta();
            let f = inst.field();
            let definitional = |w: &[Fe]| -> Result<bool> {
                let mut acc = MultiOrePoly::zero(inst.ring(), gf.num_vars());
                for ((h, &e), &c) in hs.iter().zip(&eta).zip(w) {
                    if !c.is_zero() {
                        acc = acc.add(&h.scale_left(f.mul(c, e)))?;
                    }
                }
                Ok(acc.is_zero())
            };
            let mut ok = true;
            for w in &words {
                ok &= built.code.contains(w) == definitional(w)?;
            }
            // the library oracle on the code's own basis
            for c in built.code.generator().row_vecs() {
                ok &= membership_oracle(gf, &case.sets, &case.eta, &c)?;
            }
            Some(ok)
        }
        None => None,
    };
    let delsarte = delsarte_check(&LinearCode::from_parity_check(Alphabet::Extension, &built.parity_check)?)?;
    Ok(GsmgOutcome { entries, row_space, kernel, report, oracle, delsarte })
}

/// `m = 2` over `F_8`: `S_1 = {0, 1, ω, ω+1}`, `g_1 = x_1 − ω^6`, `S_2 = {1, ω, ω²}`, `g_2 = X³`.
fn f8_example() -> GsmgCase {
    let f = field(2, 1, 3, 1);
    let g1 = SkewPoly::new(&SkewRing::commutative(f.clone()), vec![Fe(5), Fe(1)]);
    let g2 = SkewPoly::monomial(&SkewRing::frobenius(f), Fe::ONE, 3);
    GsmgCase {
        sets: vec![vec![Fe(0), Fe(1), Fe(2), Fe(3)], vec![Fe(1), Fe(2), Fe(4)]],
        factors: vec![g1, g2],
        eta: vec![Fe::ONE; 3],
    }
}

pub(super) fn gsmg_pipeline(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("gsmg-pipeline");
    let rings = skew_rings();
    let mut cases = vec![f8_example()];
    let mut i = 0;
    while cases.len() < 40 && i < 400 {
        let mut s = Sampler::new(sampler.next_u64());
        if let Some(c) = sample_gsmg(&mut s, &rings[i % rings.len()]) {
            cases.push(c);
        }
        i += 1;
    }
    let mut entries = Check::new("H = (x H_i R_i) E entrywise");
    let mut row_space = Check::new("row space of H = generator row space of the tensor code");
    let mut kernel = Check::new("GSMG = subfield kernel of the tensor code");
    let mut bounds = Check::new("k and d bounds, exhaustive");
    let mut oracle = Check::new("kernel membership = Ore oracle, all subfield words");
    let mut delsarte = Check::new("Delsarte identity on the parity-check code");
    let outcomes: Vec<Result<GsmgOutcome>> = cases.par_iter().map(run_gsmg).collect();
    let mut exhaustive_d = 0;
    let mut nonzero = 0;
    for (case, out) in cases.iter().zip(outcomes) {
        let who = || case.describe();
        match out {
            Ok(o) => {
                entries.record(o.entries, who);
                row_space.record(o.row_space, who);
                kernel.record(o.kernel, who);
                bounds.record(o.report.passes(), || format!("{} report: {}", who(), o.report.to_string().replace('\n', "; ")));
                if distance_checked(&o.report) {
                    exhaustive_d += 1;
                }
                if o.report.k > 0 {
                    nonzero += 1;
                }
                if let Some(ok) = o.oracle {
                    oracle.record(ok, who);
                }
                delsarte.record(o.delsarte, who);
            }
            Err(e) => entries.record(false, || format!("{} ({e})", who())),
        }
    }
    rep.notes.push(format!("exact distance computed on {exhaustive_d} of {} instances, {nonzero} with k > 0", cases.len()));

    // commutative families: rational-sum congruence against the kernel construction
    let mut comm = Check::new("commutative Goppa kernel = rational-sum oracle, all subfield words");
    for (k, seed) in seeds(sampler, 30).into_iter().enumerate() {
        let mut s = Sampler::new(seed);
        let f = [field(2, 1, 3, 1), field(2, 1, 4, 2), field(3, 1, 2, 1)][k % 3].clone();
        let ring = SkewRing::commutative(f.clone());
        let max_n = sweep_length(&f);
        let m = s.range(1, 2);
        let mut sets = Vec::new();
        let mut factors = Vec::new();
        let mut budget = max_n;
        for _ in 0..m {
            let ni = s.range(1, budget.clamp(1, 4));
            budget = (budget / ni).max(1);
            let set = s.distinct(&f, ni, false);
            let deg = s.range(1, ni);
            if let Some(g) = nonvanishing_poly(&mut s, &ring, deg, &set) {
                sets.push(set);
                factors.push(g);
            }
        }
        if sets.is_empty() {
            continue;
        }
        let who = || {
            let ss: Vec<String> = sets.iter().map(|x| show(x)).collect();
            let gs: Vec<String> = factors.iter().map(|g| show(g.coeffs())).collect();
            format!("{} S={} g={}", label(&f), ss.join("x"), gs.join("*"))
        };
        let n: usize = sets.iter().map(Vec::len).product();
        let outcome = multivariate_goppa(&sets, &factors).and_then(|code| {
            let words = subfield_words(&f, n).expect("sized for a sweep");
            let mut ok = true;
            for w in &words {
                ok &= code.contains(w) == goppa_membership_oracle(&sets, &factors, w)?;
            }
            Ok(ok)
        });
        comm.record_result(outcome, who);
    }
    for c in [entries, row_space, kernel, bounds, oracle, delsarte, comm] {
        rep.push(c);
    }
    rep
}

pub(super) fn reductions(sampler: &mut Sampler) -> SuiteReport {
    let mut rep = SuiteReport::new("reductions");

    let mut m1 = Check::new("gsmg with m = 1 equals gsg");
    for c in sample_cases(sampler, 30, true) {
        let outcome = (|| -> Result<bool> {
            let g = c.spec.expand(&c.ring);
            let inst = GoppaInstance::new(vec![c.points.clone()], vec![g], c.eta.clone())?;
            Ok(gsmg(&inst)?.code == gsg(&c.ring, &c.points, &c.eta, &c.spec)?.code)
        })();
        m1.record_result(outcome, || c.describe());
    }

    let fields = [field(2, 1, 3, 1), field(2, 1, 4, 1), field(2, 1, 4, 2), field(2, 2, 2, 1), field(3, 1, 2, 1)];
    let mut mgoppa = Check::new("gsmg with theta = id, eta = 1 equals multivariate Goppa");
    let mut classical = Check::new("gsg with theta = id, eta = 1 equals classical Goppa");
    let mut triple = Check::new("H'RE with theta = id equals the classical triple product");
    let mut alternant = Check::new("witness with theta = id (alternant form)");
    let mut grs_eq = Check::new("gsrs with theta = id equals grs");
    for (k, seed) in seeds(sampler, 60).into_iter().enumerate() {
        let mut s = Sampler::new(seed);
        let f = fields[k % fields.len()].clone();
        let id = SkewRing::commutative(f.clone());

        // one variable
        let n = s.range(2, 7.min(f.order() as usize - 1));
        let pts = s.distinct(&f, n, true);
        let deg = s.range(1, n);
        if let Some(g) = nonvanishing_poly(&mut s, &id, deg, &pts) {
            let spec = g.is_invariant().ok().flatten().expect("every polynomial is central here");
            let ones = vec![Fe::ONE; n];
            let who = || format!("{} S={} g={}", label(&f), show(&pts), show(g.coeffs()));
            let outcome = gsg(&id, &pts, &ones, &spec).and_then(|b| {
                let eq = b.code == goppa_classical(&pts, &g)?;
                Ok((eq, b))
            });
            match outcome {
                Ok((eq, b)) => {
                    classical.record(eq, who);
                    // C[i][k] = g_{i+1+k}, V[k][j] = s_j^k, Y = diag(g(s_j)^{-1})
                    let c = Matrix::from_rows(
                        &f,
                        deg,
                        (0..deg).map(|i| (0..deg).map(|k| g.coeff(i + 1 + k)).collect()).collect(),
                    );
                    let prod = c.and_then(|c| {
                        let v = Matrix::from_rows(
                            &f,
                            n,
                            (0..deg).map(|k| pts.iter().map(|&x| f.pow(x, k as u64)).collect()).collect(),
                        )?;
                        let y: Vec<Fe> = pts.iter().map(|&x| f.inv(g.evaluate(x))).collect();
                        c.mul(&v)?.scale_columns(&y)
                    });
                    triple.record(matches!(prod, Ok(p) if p == b.parity_check), who);
                    let w = gsg_gsrs_witness(&id, &pts, &ones, &spec).map(|w| w.holds());
                    alternant.record_result(w, who);
                }
                Err(e) => classical.record(false, || format!("{} ({e})", who())),
            }
        }

        // two variables
        let n1 = s.range(1, 3);
        let n2 = s.range(1, 3);
        let sets = vec![s.distinct(&f, n1, false), s.distinct(&f, n2, true)];
        let (d1, d2) = (s.range(1, n1), s.range(1, n2));
        let g1 = nonvanishing_poly(&mut s, &id, d1, &sets[0]);
        let g2 = nonvanishing_poly(&mut s, &id, d2, &sets[1]);
        if let (Some(g1), Some(g2)) = (g1, g2) {
            let factors = vec![g1, g2];
            let who = || format!("{} S={}x{}", label(&f), show(&sets[0]), show(&sets[1]));
            let outcome = GoppaInstance::new(sets.clone(), factors.clone(), vec![Fe::ONE; n2])
                .and_then(|inst| Ok(gsmg(&inst)?.code == multivariate_goppa(&sets, &factors)?));
            mgoppa.record_result(outcome, who);
        }

        // GRS
        let n = s.range(1, 7.min(f.order() as usize));
        let pts = s.distinct(&f, n, false);
        let v = s.nonzeros(&f, n);
        let kk = s.range(0, n);
        let who = || format!("{} S={} v={} k={kk}", label(&f), show(&pts), show(&v));
        let eq = gsrs(&id, &pts, &v, kk).and_then(|a| Ok(a == grs(&f, &pts, &v, kk)?));
        grs_eq.record_result(eq, who);
    }
    for c in [m1, mgoppa, classical, triple, alternant, grs_eq] {
        rep.push(c);
    }
    rep
}
