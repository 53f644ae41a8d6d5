use super::{
    build_groupoid, existence_witness, iso_classes, morphism_solvable, objects, restrict_objects,
    restriction_certificate, tautological_point, Existence, GroupoidDescriptor, IsoClasses,
    ObjectSet, Representative, TheorySpec, Verdict,
};
use crate::diffeq::{
    hermite_reduce, minimality_certificate, pv_presentation, GaloisGroup, HermiteReduction,
    LinearOde, MinimalityWitness, RankOneClassification,
};
use crate::dvariety::{
    disjoint_lifts, is_d_invariant, minimal_lift_rank_one, BiPoly, DInvariance, Disjointness,
    LiftedRelation,
};
use crate::error::Result;
use crate::field::RatFunc;
use crate::realalg::{RealAlgebraic, SignCertificate};

/// A sampled morphism question `p -> q` and its answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismSample {
    pub p: RealAlgebraic,
    pub q: RealAlgebraic,
    pub z: Option<RealAlgebraic>,
}

/// Checkable evidence for the claims of a report.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificates {
    /// `n*a - f'/f`, which must be zero.
    pub kummer_identity: Option<RatFunc>,
    pub minimality: Vec<MinimalityWitness>,
    /// The minimal lift `y^n - w*f` and its invariance division.
    pub d_invariance: Option<(LiftedRelation, DInvariance)>,
    /// Invariance of the witness presentation `y^n - c*f` (rational `c`).
    pub witness_invariance: Option<DInvariance>,
    pub sign: Option<SignCertificate>,
    pub disjointness: Vec<(RealAlgebraic, RealAlgebraic, Disjointness)>,
    pub morphisms: Vec<MorphismSample>,
    pub hermite: Option<HermiteReduction>,
}

/// Everything decided about one equation under one theory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub equation: LinearOde,
    pub classification: RankOneClassification,
    pub galois_group: GaloisGroup,
    pub groupoid: GroupoidDescriptor,
    pub theory: TheorySpec,
    pub objects: ObjectSet,
    pub restricted: ObjectSet,
    pub tautological_point: Option<RatFunc>,
    pub existence: Existence,
    pub verdict: Verdict,
    pub classes: IsoClasses,
    pub certificates: Certificates,
}

fn object_reps(classes: &IsoClasses) -> Vec<RealAlgebraic> {
    classes
        .representatives
        .iter()
        .filter_map(|r| match r {
            Representative::Object(c) => Some(c.clone()),
            Representative::Point => None,
        })
        .collect()
}

/// Runs the whole pipeline: classify, build the groupoid, restrict to the
/// theory, decide existence and uniqueness, and collect certificates.
pub fn analyze(equation: &LinearOde, theory: &TheorySpec) -> Result<ClassificationReport> {
    let classification = equation.classify()?;
    let groupoid = build_groupoid(&classification);
    let galois_group = pv_presentation(&classification, Some(&RealAlgebraic::one()))?.galois_group;
    let objects = objects(&groupoid);
    let restricted = restrict_objects(&groupoid, theory);
    let existence = existence_witness(&classification, theory)?;
    // Uniqueness is judged over the restricted set; without an ordering this
    // is the whole object set.
    let classes = iso_classes(&groupoid, theory)?;
    let verdict = if classes.count == 1 {
        Verdict::Unique
    } else {
        Verdict::Classes(classes.count)
    };

    let mut certs = Certificates::default();
    match &classification {
        RankOneClassification::Kummer(k) => {
            certs.kummer_identity = Some(k.identity_residual(equation.coefficient()));
            certs.minimality = minimality_certificate(k)?;
            let lift = minimal_lift_rank_one(&classification)?;
            let check = is_d_invariant(&lift)?;
            certs.d_invariance = Some((lift.clone(), check));
            certs.sign = restriction_certificate(&groupoid, theory)?;
            if let Existence::Witness {
                witness_c: Some(c), ..
            } = &existence
            {
                if let Some(q) = c.as_rational() {
                    let poly = &BiPoly::monomial(RatFunc::one(), k.n as usize, 0)
                        - &BiPoly::constant(k.f.scale(q));
                    certs.witness_invariance =
                        Some(is_d_invariant(&LiftedRelation::new(poly, lift.a.clone())?)?);
                }
                let mut pairs = vec![(c.clone(), c.clone()), (c.clone(), c.neg())];
                let reps = object_reps(&iso_classes(&groupoid, &TheorySpec::Fields)?);
                for r in &reps {
                    if r != c && r != &c.neg() {
                        pairs.push((c.clone(), r.clone()));
                    }
                }
                for (p, q) in pairs {
                    let d = disjoint_lifts(&lift, &p, &lift, &q)?;
                    certs.disjointness.push((p, q, d));
                }
                let mut samples = vec![(c.clone(), c.clone())];
                for r in reps.iter().filter(|r| *r != c) {
                    samples.push((c.clone(), r.clone()));
                }
                let scaled = c.mul(&RealAlgebraic::from_int(4))?;
                samples.push((scaled, c.clone()));
                for (p, q) in samples {
                    let z = morphism_solvable(&groupoid, &p, &q)?;
                    certs.morphisms.push(MorphismSample { p, q, z });
                }
            }
        }
        RankOneClassification::AdditiveTranscendental { .. }
        | RankOneClassification::InField { .. } => {
            if let LinearOde::Quadrature(g) = equation {
                certs.hermite = Some(hermite_reduce(g)?);
            }
        }
        RankOneClassification::MultiplicativeTranscendental { .. } => {}
    }

    Ok(ClassificationReport {
        equation: equation.clone(),
        galois_group,
        tautological_point: tautological_point(&groupoid),
        classification,
        groupoid,
        theory: theory.clone(),
        objects,
        restricted,
        existence,
        verdict,
        classes,
        certificates: certs,
    })
}
