mod common;

use proptest::prelude::*;

use common::strategies::*;
use common::*;
use realpv::diffeq::{classify_rank_one, invariant_map};
use realpv::dvariety::{is_d_invariant, BiPoly, LiftedRelation};
use realpv::field::RatFunc;
use realpv::groupoid::{
    build_groupoid, existence_witness, groupoid_axioms_check, iso_classes, morphism_solvable,
    restrict_objects, worked_formula_member, Existence, GroupoidDescriptor, ObjectSet, TheorySpec,
};
use realpv::realalg::{sign_at_cut, RealAlgebraic, SemialgebraicSet1D};

fn kummer_groupoid(n: u32) -> GroupoidDescriptor {
    GroupoidDescriptor::KummerGroupoid {
        n,
        f: realpv::RatFunc::t(),
    }
}

fn nonzero_rational() -> impl Strategy<Value = RealAlgebraic> {
    rational(7)
        .prop_filter("non-zero", |q| {
            *q != realpv::Rational::from_integer(0.into())
        })
        .prop_map(RealAlgebraic::from_rational)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn witness_is_sound(case in kummer(3, 4), cut in cut(), ordered in any::<bool>()) {
        let cl = classify_rank_one(&case.a).unwrap();
        let th = if ordered { TheorySpec::OrderedFields(cut) } else { TheorySpec::Fields };
        let gd = build_groupoid(&cl);
        match existence_witness(&cl, &th).unwrap() {
            Existence::Witness { witness_c: Some(c), presentation } => {
                prop_assert!(restrict_objects(&gd, &th).contains(Some(&c)));
                prop_assert_eq!(invariant_map(&cl).unwrap().apply(&presentation).unwrap(), c.clone());
                // The specialized relation y^n - c*f is carried by the derivation.
                let k = cl.as_kummer().unwrap();
                let q = c.as_rational().expect("canonical witnesses are rational");
                let rel = &BiPoly::monomial(RatFunc::one(), k.n as usize, 0) - &BiPoly::constant(k.f.scale(q));
                let check = is_d_invariant(&LiftedRelation::new(rel, case.a.clone()).unwrap()).unwrap();
                prop_assert!(check.invariant);
            }
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }

    #[test]
    fn morphisms_are_sound(n in 1u32..=4, p in nonzero_ralg(), q in nonzero_ralg()) {
        let gd = kummer_groupoid(n);
        match morphism_solvable(&gd, &p, &q).unwrap() {
            Some(z) => prop_assert_eq!(z.pow(n).unwrap().mul(&q).unwrap(), p),
            None => prop_assert!(n % 2 == 0 && p.sign() != q.sign()),
        }
    }

    #[test]
    fn isomorphism_is_an_equivalence(n in 1u32..=4, p in nonzero_rational(), q in nonzero_rational(), r in nonzero_rational()) {
        // Rational objects keep composite morphisms at degree at most n^2.
        let gd = kummer_groupoid(n);
        prop_assert!(morphism_solvable(&gd, &p, &p).unwrap().is_some());
        if let Some(z) = morphism_solvable(&gd, &p, &q).unwrap() {
            // 1/z runs back from q to p.
            prop_assert_eq!(z.inv().unwrap().pow(n).unwrap().mul(&p).unwrap(), q.clone());
            prop_assert!(morphism_solvable(&gd, &q, &p).unwrap().is_some());
            if let Some(z2) = morphism_solvable(&gd, &q, &r).unwrap() {
                prop_assert_eq!(z.mul(&z2).unwrap().pow(n).unwrap().mul(&r).unwrap(), p.clone());
                prop_assert!(morphism_solvable(&gd, &p, &r).unwrap().is_some());
            }
        }
        prop_assert!(groupoid_axioms_check(&gd, &[p, q, r]).unwrap());
    }

    #[test]
    fn order_restriction_follows_the_sign(case in kummer(3, 4), cut in cut(), a in nonzero_ralg()) {
        let cl = classify_rank_one(&case.a).unwrap();
        let gd = build_groupoid(&cl);
        let k = cl.as_kummer().unwrap();
        let th = TheorySpec::OrderedFields(cut.clone());
        let restricted = restrict_objects(&gd, &th);
        if case.n % 2 == 0 {
            let s = sign_at_cut(&k.f, &cut);
            prop_assert_eq!(&restricted, &ObjectSet::Line(SemialgebraicSet1D::with_sign(s)));
            prop_assert_eq!(restricted.contains(Some(&a)), a.sign() == s);
        } else {
            prop_assert_eq!(&restricted, &ObjectSet::Line(SemialgebraicSet1D::nonzero()));
        }
        prop_assert_eq!(worked_formula_member(&gd, &th, &a).unwrap(), restricted.contains(Some(&a)));
    }

    #[test]
    fn half_lines_agree_iff_signs_agree(case in kummer(3, 4), c1 in cut(), c2 in cut()) {
        let cl = classify_rank_one(&case.a).unwrap();
        prop_assume!(case.n % 2 == 0);
        let gd = build_groupoid(&cl);
        let f = &cl.as_kummer().unwrap().f;
        let r1 = restrict_objects(&gd, &TheorySpec::OrderedFields(c1.clone()));
        let r2 = restrict_objects(&gd, &TheorySpec::OrderedFields(c2.clone()));
        prop_assert_eq!(r1 == r2, sign_at_cut(f, &c1) == sign_at_cut(f, &c2));
    }
}

#[test]
fn class_counts() {
    let cut = TheorySpec::OrderedFields(realpv::OrderingCut::PlusInfinity);
    for n in 1..=6u32 {
        let gd = kummer_groupoid(n);
        let fields = iso_classes(&gd, &TheorySpec::Fields).unwrap();
        assert_eq!(fields.count, if n % 2 == 0 { 2 } else { 1 }, "n = {n}");
        assert_eq!(iso_classes(&gd, &cut).unwrap().count, 1, "n = {n}");
    }
    // The torsor and trivial cases have a single object.
    let mut r = rng(7);
    let samples: Vec<RealAlgebraic> = (0..3).map(|_| random_nonzero_ralg(&mut r)).collect();
    for a in [poly(&[0, 0, 1]), poly(&[1, 1])] {
        let cl = classify_rank_one(&realpv::RatFunc::from_poly(a)).unwrap();
        let gd = build_groupoid(&cl);
        assert_eq!(iso_classes(&gd, &TheorySpec::Fields).unwrap().count, 1);
        assert!(groupoid_axioms_check(&gd, &samples).unwrap());
    }
}
