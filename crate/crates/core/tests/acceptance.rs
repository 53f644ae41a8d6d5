//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::One;
use rand::Rng;

use common::*;
use realpv::diffeq::{minimality_certificate, GaloisGroup, LinearOde, RankOneClassification};
use realpv::dvariety::{
    disjoint_lifts, is_d_invariant, lift_resultant, minimal_lift_rank_one, BiPoly, LiftResultant,
    LiftedRelation,
};
use realpv::field::{RatFunc, Rational};
use realpv::groupoid::{
    analyze, build_groupoid, existence_witness, groupoid_axioms_check, iso_classes, objects,
    restrict_objects, tautological_point, uniqueness_verdict, worked_formula_member, Existence,
    GroupoidDescriptor, ObjectSet, Representative, TheorySpec, Verdict,
};
use realpv::parse::{parse_cut, parse_equation};
use realpv::realalg::{
    count_real_roots, nth_root_in_ralg, sign_at_cut, ExtRational, OrderingCut, RealAlgebraic,
    SemialgebraicSet1D, Sign,
};

const SEED: u64 = 0x5eed_2024;
const LIMIT_GOLDEN: Duration = Duration::from_secs(1);
const LIMIT_EXISTENCE: Duration = Duration::from_secs(30);
const LIMIT_REALALG: Duration = Duration::from_secs(60);
const CORPUS_SIZE: usize = 200;
const CORPUS_MAX_TERMS: usize = 4;
const CORPUS_MAX_DEN: i64 = 6;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let el = start.elapsed();
    if el <= limit {
        Ok(format!("{:.3}s", el.as_secs_f64()))
    } else {
        Err(format!(
            "took {:.3}s, limit {:.0}s",
            el.as_secs_f64(),
            limit.as_secs_f64()
        ))
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn corpus() -> Vec<KummerCase> {
    let mut r = rng(SEED);
    (0..CORPUS_SIZE)
        .map(|_| random_kummer(&mut r, CORPUS_MAX_TERMS, CORPUS_MAX_DEN))
        .collect()
}

fn kummer_of(case: &KummerCase) -> Result<RankOneClassification, String> {
    let cl = LinearOde::homogeneous(case.a.clone())
        .map_err(e)?
        .classify()
        .map_err(e)?;
    match &cl {
        RankOneClassification::Kummer(k) if k.n == case.n => Ok(cl),
        other => Err(format!(
            "a = {}: expected Kummer with n = {}, got {}",
            case.a, case.n, other
        )),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let eq = parse_equation("x' = x/(2*t)", None).map_err(e)?;
    let cut = parse_cut("t -> 0+").map_err(e)?;
    let th = TheorySpec::OrderedFields(cut);
    let report = analyze(&eq, &th).map_err(e)?;

    let k = report.classification.as_kummer().ok_or("not Kummer")?;
    ensure!(
        k.n == 2 && k.f == RatFunc::t(),
        "classification {}",
        report.classification
    );
    ensure!(
        report.galois_group == GaloisGroup::MuN(2),
        "galois group {}",
        report.galois_group
    );
    ensure!(
        report.objects == ObjectSet::Line(SemialgebraicSet1D::nonzero()),
        "O = {}",
        report.objects
    );
    ensure!(
        report.restricted == ObjectSet::Line(SemialgebraicSet1D::with_sign(Sign::Positive)),
        "O_S = {}",
        report.restricted
    );
    let unordered = iso_classes(&report.groupoid, &TheorySpec::Fields).map_err(e)?;
    ensure!(
        unordered.count == 2,
        "classes without order = {}",
        unordered.count
    );
    ensure!(
        report.verdict == Verdict::Unique,
        "verdict {}",
        report.verdict
    );
    let Existence::Witness {
        witness_c: Some(c),
        presentation,
    } = &report.existence
    else {
        return Err(format!("existence {:?}", report.existence));
    };
    ensure!(*c == RealAlgebraic::one(), "witness c = {c}");
    ensure!(
        presentation.to_string() == "y^2 = t",
        "presentation {presentation}"
    );
    let (_, inv) = report
        .certificates
        .d_invariance
        .as_ref()
        .ok_or("no d-invariance certificate")?;
    ensure!(inv.invariant, "lift not invariant");
    ensure!(
        inv.quotient == BiPoly::constant(RatFunc::t().inv().unwrap()) && inv.remainder.is_zero(),
        "quotient {}",
        inv.quotient
    );
    let time = within(start, LIMIT_GOLDEN)?;
    Ok(format!(
        "Kummer{{n=2, f=t}}, O_S = {}, {time}",
        report.restricted
    ))
}

fn criterion_2() -> Outcome {
    let gd = GroupoidDescriptor::KummerGroupoid {
        n: 2,
        f: RatFunc::t(),
    };
    let th = TheorySpec::OrderedFields(OrderingCut::RightOf(RealAlgebraic::zero()));
    let ObjectSet::Line(restricted) = restrict_objects(&gd, &th) else {
        return Err("restricted set is not a subset of the line".into());
    };
    let mut points = vec![
        sqrt(2),
        sqrt(2).neg(),
        RealAlgebraic::from_rational(rat(1, 3)),
        RealAlgebraic::zero(),
    ];
    let mut r = rng(SEED ^ 2);
    while points.len() < 50 {
        points.push(random_ralg(&mut r));
    }
    for a in &points {
        let member = restricted.contains(a);
        let formula = worked_formula_member(&gd, &th, a).map_err(e)?;
        // Oracle: the sign of a decimal approximation.
        let oracle = approx(a) > 0.0;
        ensure!(
            member == formula && formula == oracle,
            "disagreement at {a}: set {member}, formula {formula}, oracle {oracle}"
        );
    }
    Ok(format!("{} points agree", points.len()))
}

fn criterion_3(corpus: &[KummerCase]) -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED ^ 3);
    for case in corpus {
        let cl = kummer_of(case)?;
        let gd = build_groupoid(&cl);
        let point = tautological_point(&gd).ok_or("no tautological point")?;
        ensure!(!point.is_zero(), "tautological point is zero");
        let cut = match r.gen_range(0..4) {
            0 => OrderingCut::PlusInfinity,
            1 => OrderingCut::MinusInfinity,
            2 => OrderingCut::RightOf(RealAlgebraic::from_rational(random_rational(&mut r, 5))),
            _ => OrderingCut::LeftOf(RealAlgebraic::from_rational(random_rational(&mut r, 5))),
        };
        for th in [TheorySpec::Fields, TheorySpec::OrderedFields(cut)] {
            let Existence::Witness {
                witness_c: Some(c), ..
            } = existence_witness(&cl, &th).map_err(e)?
            else {
                return Err(format!("no witness for {} under {th}", case.a));
            };
            ensure!(
                restrict_objects(&gd, &th).contains(Some(&c)),
                "witness {c} outside O_S"
            );
            let q = c.as_rational().ok_or("witness is irrational")?;
            let k = cl.as_kummer().unwrap();
            let poly = &BiPoly::monomial(RatFunc::one(), k.n as usize, 0)
                - &BiPoly::constant(k.f.scale(q));
            let inv = is_d_invariant(&LiftedRelation::new(poly, case.a.clone()).map_err(e)?)
                .map_err(e)?;
            ensure!(inv.invariant, "y^n - c f not invariant for {}", case.a);
        }
    }
    let time = within(start, LIMIT_EXISTENCE)?;
    Ok(format!("{} coefficients, {time}", corpus.len()))
}

fn criterion_4(corpus: &[KummerCase]) -> Outcome {
    let mut checked = 0;
    for case in corpus.iter().filter(|c| c.n % 2 == 0) {
        let cl = kummer_of(case)?;
        let gd = build_groupoid(&cl);
        let f = &cl.as_kummer().unwrap().f;
        for (cut, plus) in [
            (OrderingCut::PlusInfinity, true),
            (OrderingCut::MinusInfinity, false),
        ] {
            let expected = Sign::from_i8(sign_at_infinity(f, plus));
            ensure!(sign_at_cut(f, &cut) == expected, "sign of {f} at {cut}");
            let th = TheorySpec::OrderedFields(cut);
            let o_s = restrict_objects(&gd, &th);
            ensure!(
                o_s == ObjectSet::Line(SemialgebraicSet1D::with_sign(expected)),
                "O_S = {o_s} for f = {f}"
            );
            ensure!(
                uniqueness_verdict(&gd, &th).map_err(e)? == Verdict::Unique,
                "not unique for {f}"
            );
        }
        ensure!(
            uniqueness_verdict(&gd, &TheorySpec::Fields).map_err(e)? == Verdict::Classes(2),
            "unordered count"
        );
        checked += 1;
    }
    ensure!(checked > 0, "no even exponents in the corpus");
    Ok(format!("{checked} even-exponent cases, both infinite cuts"))
}

fn criterion_5() -> Outcome {
    let mut r = rng(SEED ^ 5);
    let lifts: Vec<(LiftedRelation, LiftResultant)> = (2..=4)
        .flat_map(|n| (0..3).map(move |_| n))
        .map(|n| {
            let case = kummer_with_exponent(&mut r, n);
            let cl = kummer_of(&case)?;
            let lift = minimal_lift_rank_one(&cl).map_err(e)?;
            let res = lift_resultant(&lift, &lift).map_err(e)?;
            Ok::<_, String>((lift, res))
        })
        .collect::<Result<_, _>>()?;
    let mut disjoint_count = 0;
    for i in 0..500 {
        let (lift, res) = &lifts[i % lifts.len()];
        let c1 = random_nonzero_ralg(&mut r);
        let c2 = if r.gen_bool(0.3) {
            // Same number, different isolating data.
            c1.refined_to(&rat(1, 1 << r.gen_range(4..20))).map_err(e)?
        } else {
            random_nonzero_ralg(&mut r)
        };
        let d = res.specialize(&c1, &c2).map_err(e)?;
        if i < 3 {
            ensure!(
                disjoint_lifts(lift, &c1, lift, &c2).map_err(e)? == d,
                "one-shot and cached resultants differ"
            );
        }
        let distinct = c1 != c2;
        ensure!(
            d.disjoint == distinct,
            "disjoint = {} for {c1}, {c2}",
            d.disjoint
        );
        ensure!(
            d.values.iter().any(|v| !v.is_zero()) == d.disjoint,
            "certificate disagrees with verdict"
        );
        // Oracle: Res_y(y^n - c1 f, y^n - c2 f) = (c1 - c2)^n f^n.
        let n = lift.poly.degree_y() as u32;
        let f = lift.poly.coeff(0, 1).scale(&-Rational::one());
        let scaled = &f.pow(n as i64) * &RatFunc::from_poly(d.denominator.clone());
        ensure!(
            scaled.is_polynomial(),
            "denominator certificate does not clear f^n"
        );
        let diff = c1.sub(&c2).map_err(e)?.pow(n).map_err(e)?;
        for (k, v) in d.values.iter().enumerate() {
            let expected = diff
                .mul(&RealAlgebraic::from_rational(scaled.num().coeff(k)))
                .map_err(e)?;
            ensure!(
                *v == expected,
                "coefficient {k} of the resultant is {v}, expected {expected}"
            );
        }
        ensure!(
            d.values.len() > scaled.num().degree(),
            "resultant certificate truncated"
        );
        disjoint_count += d.disjoint as usize;
    }
    Ok(format!("500 pairs, {disjoint_count} disjoint"))
}

fn criterion_6(corpus: &[KummerCase]) -> Outcome {
    let mut witnesses = 0;
    for case in corpus {
        let cl = kummer_of(case)?;
        let k = cl.as_kummer().unwrap();
        let n = Rational::from_integer(k.n.into());
        let residual = &case.a.scale(&n) - &k.f.derive().checked_div(&k.f).ok_or("f = 0")?;
        ensure!(
            residual.is_zero(),
            "n a - f'/f = {residual} for a = {}",
            case.a
        );
        let certs = minimality_certificate(k).map_err(e)?;
        let divisors = proper_divisors(k.n);
        ensure!(
            certs.iter().map(|w| w.m).collect::<Vec<_>>() == divisors,
            "divisors not all rejected for n = {}",
            k.n
        );
        for w in &certs {
            let m = Rational::from_integer(w.m.into());
            let recomputed =
                &case.a.scale(&m) - &w.f_m.derive().checked_div(&w.f_m).ok_or("f_m = 0")?;
            ensure!(
                !recomputed.is_zero() && recomputed == w.residual,
                "m = {} residual mismatch",
                w.m
            );
            // The generating residues themselves show m*r is not integral somewhere.
            ensure!(
                case.residues.iter().any(|(_, r)| !(r * &m).is_integer()),
                "m = {} divides all residues",
                w.m
            );
            witnesses += 1;
        }
    }
    Ok(format!(
        "{} identities, {witnesses} rejected divisors",
        corpus.len()
    ))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut r = rng(SEED ^ 7);
    // Root counts against constructed roots.
    for _ in 0..1000 {
        let mut roots: Vec<Rational> = (0..r.gen_range(0..=5))
            .map(|_| random_rational(&mut r, 6))
            .collect();
        let mut p = realpv::field::Poly::one();
        for q in &roots {
            p = &p * &realpv::field::Poly::linear_root(q);
        }
        for _ in 0..r.gen_range(0..=2) {
            let b = r.gen_range(-3..=3);
            p = &p * &poly(&[b * b + r.gen_range(1..=4), 2 * b, 1]);
        }
        if r.gen_bool(0.2) && !roots.is_empty() {
            // A repeated factor must not change the distinct count.
            p = &p * &realpv::field::Poly::linear_root(&roots[0]);
        }
        roots.sort();
        roots.dedup();
        let lo = if r.gen_bool(0.1) {
            ExtRational::NegInfinity
        } else {
            ExtRational::Finite(random_rational(&mut r, 7))
        };
        let hi = if r.gen_bool(0.1) {
            ExtRational::PosInfinity
        } else {
            ExtRational::Finite(random_rational(&mut r, 7))
        };
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let expected = roots
            .iter()
            .filter(|q| {
                lo < ExtRational::Finite((*q).clone()) && ExtRational::Finite((*q).clone()) <= hi
            })
            .count();
        match count_real_roots(&p, &lo, &hi) {
            Ok(got) => ensure!(
                got == expected,
                "count on ({lo}, {hi}] for {p}: {got} vs {expected}"
            ),
            Err(err) => ensure!(lo == hi, "count failed: {err}"),
        }
    }
    // Total order on triples, with a float oracle where the gap is visible.
    for _ in 0..1000 {
        let xs: Vec<RealAlgebraic> = (0..3).map(|_| random_ralg(&mut r)).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        for w in sorted.windows(2) {
            ensure!(w[0] <= w[1], "sort is not monotone");
            ensure!(
                approx(&w[0]) <= approx(&w[1]) + 1e-9,
                "{} > {} numerically",
                w[0],
                w[1]
            );
        }
        for a in &xs {
            for b in &xs {
                ensure!(
                    a.cmp(b) == b.cmp(a).reverse(),
                    "antisymmetry fails for {a}, {b}"
                );
                for c in &xs {
                    if a <= b && b <= c {
                        ensure!(a <= c, "transitivity fails for {a}, {b}, {c}");
                    }
                }
            }
        }
        let twin = xs[0]
            .add_rational(&rat(1, 3))
            .add_rational(&rat(-1, 3))
            .refined_to(&rat(1, 1 << 12))
            .map_err(e)?;
        ensure!(
            xs[0].cmp(&twin).is_eq(),
            "x and a re-isolated copy compare unequal"
        );
    }
    // n-th roots reconstructed by exact powering.
    let mut present = 0;
    for _ in 0..300 {
        let x = random_ralg(&mut r);
        let n = r.gen_range(1..=4u32);
        match nth_root_in_ralg(&x, n).map_err(e)? {
            Some(z) => {
                ensure!(z.pow(n).map_err(e)? == x, "({z})^{n} != {x}");
                present += 1;
            }
            None => ensure!(
                n % 2 == 0 && x.sign() == Sign::Negative,
                "no {n}-th root of {x}"
            ),
        }
    }
    let time = within(start, LIMIT_REALALG)?;
    Ok(format!(
        "1000 counts, 1000 triples, {present} roots reconstructed, {time}"
    ))
}

fn criterion_8() -> Outcome {
    let mut r = rng(SEED ^ 8);
    let mut groupoids = 0;
    for n in 2..=6u32 {
        for _ in 0..3 {
            let case = kummer_with_exponent(&mut r, n);
            let cl = kummer_of(&case)?;
            let gd = build_groupoid(&cl);
            let base = RealAlgebraic::from_rational(random_rational(&mut r, 5));
            let base = if base.is_zero() {
                RealAlgebraic::one()
            } else {
                base
            };
            let mut samples = vec![base.clone(), base.neg()];
            // A perfect-power multiple gives a rational morphism.
            let k = r.gen_range(2..=3i64);
            samples.push(base.mul(&RealAlgebraic::from_int(k.pow(n))).map_err(e)?);
            samples.push(RealAlgebraic::from_rational(rat(
                r.gen_range(1..=7),
                r.gen_range(1..=7),
            )));
            if n <= 3 {
                samples.push(sqrt(2));
            }
            ensure!(
                groupoid_axioms_check(&gd, &samples).map_err(e)?,
                "axioms fail for n = {n}, f = {}",
                case.a
            );
            let classes = iso_classes(&gd, &TheorySpec::Fields).map_err(e)?;
            ensure!(
                classes.count == if n % 2 == 0 { 2 } else { 1 },
                "class count {} for n = {n}",
                classes.count
            );
            ensure!(
                objects(&gd) == ObjectSet::Line(SemialgebraicSet1D::nonzero()),
                "object set"
            );
            ensure!(
                classes
                    .representatives
                    .iter()
                    .all(|r| matches!(r, Representative::Object(_))),
                "representative is not an object"
            );
            groupoids += 1;
        }
    }
    Ok(format!("{groupoids} Kummer groupoids, n = 2..=6"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("worked example golden", Box::new(criterion_1)),
        ("worked formula on 50 points", Box::new(criterion_2)),
        (
            "existence on 200 Kummer coefficients",
            Box::new(|| criterion_3(&corpus)),
        ),
        (
            "uniqueness at t -> +inf and t -> -inf",
            Box::new(|| criterion_4(&corpus)),
        ),
        ("disjointness of lifts on 500 pairs", Box::new(criterion_5)),
        (
            "Kummer identity and minimality",
            Box::new(|| criterion_6(&corpus)),
        ),
        ("real algebraic oracles", Box::new(criterion_7)),
        ("groupoid axioms for n <= 6", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
