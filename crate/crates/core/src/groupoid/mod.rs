//! The definable groupoid attached to a rank-one equation, its object set
//! restricted to a theory, and the existence and uniqueness decisions.

mod report;

pub use report::{analyze, Certificates, ClassificationReport, MorphismSample};

use std::fmt;

use crate::diffeq::{pv_presentation, PvPresentation, RankOneClassification};
use crate::error::{Error, Result};
use crate::field::RatFunc;
use crate::realalg::{
    sign_at_cut, sign_certificate, OrderingCut, RealAlgebraic, SemialgebraicSet1D, Sign,
    SignCertificate,
};

/// The theory the extension must satisfy: plain fields, or ordered fields
/// with `t` placed by a cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheorySpec {
    Fields,
    OrderedFields(OrderingCut),
}

impl fmt::Display for TheorySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheorySpec::Fields => f.write_str("fields"),
            TheorySpec::OrderedFields(cut) => write!(f, "ordered fields, {cut}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsorGroup {
    Gm,
    Ga,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidDescriptor {
    /// Objects `c != 0`, morphisms `p -> q` the `z` with `z^n = p/q`.
    KummerGroupoid {
        n: u32,
        f: RatFunc,
    },
    SingleObjectTorsor {
        group: TorsorGroup,
    },
    TrivialGroupoid,
}

impl fmt::Display for GroupoidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupoidDescriptor::KummerGroupoid { n, f: base } => {
                write!(f, "KummerGroupoid{{n={n}, f={base}}}")
            }
            GroupoidDescriptor::SingleObjectTorsor { group } => {
                let g = match group {
                    TorsorGroup::Gm => "G_m",
                    TorsorGroup::Ga => "G_a",
                };
                write!(f, "SingleObjectTorsor{{{g}}}")
            }
            GroupoidDescriptor::TrivialGroupoid => f.write_str("TrivialGroupoid"),
        }
    }
}

/// Objects of a groupoid: a single point, or a subset of the line of constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectSet {
    Singleton,
    Line(SemialgebraicSet1D),
}

impl ObjectSet {
    pub fn contains(&self, c: Option<&RealAlgebraic>) -> bool {
        match (self, c) {
            (ObjectSet::Singleton, None) => true,
            (ObjectSet::Line(s), Some(c)) => s.contains(c),
            _ => false,
        }
    }
}

impl fmt::Display for ObjectSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectSet::Singleton => f.write_str("{*}"),
            ObjectSet::Line(s) => write!(f, "{s}"),
        }
    }
}

pub fn build_groupoid(cl: &RankOneClassification) -> GroupoidDescriptor {
    match cl {
        RankOneClassification::Kummer(k) => GroupoidDescriptor::KummerGroupoid {
            n: k.n,
            f: k.f.clone(),
        },
        RankOneClassification::MultiplicativeTranscendental { .. } => {
            GroupoidDescriptor::SingleObjectTorsor {
                group: TorsorGroup::Gm,
            }
        }
        RankOneClassification::AdditiveTranscendental { .. } => {
            GroupoidDescriptor::SingleObjectTorsor {
                group: TorsorGroup::Ga,
            }
        }
        RankOneClassification::InField { .. } => GroupoidDescriptor::TrivialGroupoid,
    }
}

/// The full object set over the real algebraic constants.
pub fn objects(gd: &GroupoidDescriptor) -> ObjectSet {
    match gd {
        GroupoidDescriptor::KummerGroupoid { .. } => ObjectSet::Line(SemialgebraicSet1D::nonzero()),
        _ => ObjectSet::Singleton,
    }
}

/// The invariant `y^n/f` evaluated at `y = 1`: a K-point of the object set.
pub fn tautological_point(gd: &GroupoidDescriptor) -> Option<RatFunc> {
    match gd {
        GroupoidDescriptor::KummerGroupoid { f, .. } => f.inv(),
        _ => None,
    }
}

/// The sign evidence used to restrict objects under an ordering, when one applies.
pub fn restriction_certificate(
    gd: &GroupoidDescriptor,
    th: &TheorySpec,
) -> Result<Option<SignCertificate>> {
    match (gd, th) {
        (GroupoidDescriptor::KummerGroupoid { n, f }, TheorySpec::OrderedFields(cut))
            if n % 2 == 0 =>
        {
            Ok(Some(sign_certificate(f, cut)?))
        }
        _ => Ok(None),
    }
}

/// Objects whose extension is a model of the theory. For even `n` under an
/// ordering, `y^n = c*f` forces `c` to have the sign of `f`.
pub fn restrict_objects(gd: &GroupoidDescriptor, th: &TheorySpec) -> ObjectSet {
    match (gd, th) {
        (GroupoidDescriptor::KummerGroupoid { n, f }, TheorySpec::OrderedFields(cut))
            if n % 2 == 0 =>
        {
            ObjectSet::Line(SemialgebraicSet1D::with_sign(sign_at_cut(f, cut)))
        }
        _ => objects(gd),
    }
}

/// The universal-formula form of the restriction, decided independently of
/// [`restrict_objects`]: for even `n` under an ordering in which `f` has sign
/// `s`, the object `a` qualifies iff `-s*a` is not a square. With `f = t`
/// and `t > 0` this is "`-a` is not a square".
pub fn worked_formula_member(
    gd: &GroupoidDescriptor,
    th: &TheorySpec,
    a: &RealAlgebraic,
) -> Result<bool> {
    if a.is_zero() {
        return Ok(false);
    }
    match (gd, th) {
        (GroupoidDescriptor::KummerGroupoid { n, f }, TheorySpec::OrderedFields(cut))
            if n % 2 == 0 =>
        {
            let s = sign_at_cut(f, cut);
            let minus_sa = match s {
                Sign::Positive => a.neg(),
                Sign::Negative => a.clone(),
                Sign::Zero => return Err(Error::Internal("f vanishes".into())),
            };
            Ok(minus_sa.nth_root(2)?.is_none())
        }
        (GroupoidDescriptor::KummerGroupoid { .. }, _) => Ok(true),
        _ => Err(Error::NotKummer),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Existence {
    /// A model of the theory: the object `witness_c` (absent for
    /// single-object groupoids) and its presentation.
    Witness {
        witness_c: Option<RealAlgebraic>,
        presentation: PvPresentation,
    },
    NoExtension,
}

/// Picks the canonical object of the restricted set and presents its extension.
pub fn existence_witness(cl: &RankOneClassification, th: &TheorySpec) -> Result<Existence> {
    let gd = build_groupoid(cl);
    match restrict_objects(&gd, th) {
        ObjectSet::Line(set) => match set.nonempty()? {
            Some(c) => Ok(Existence::Witness {
                presentation: pv_presentation(cl, Some(&c))?,
                witness_c: Some(c),
            }),
            None => Ok(Existence::NoExtension),
        },
        ObjectSet::Singleton => Ok(Existence::Witness {
            witness_c: None,
            presentation: pv_presentation(cl, None)?,
        }),
    }
}

/// A morphism `p -> q`: some `z` with `z^n = p/q`.
pub fn morphism_solvable(
    gd: &GroupoidDescriptor,
    p: &RealAlgebraic,
    q: &RealAlgebraic,
) -> Result<Option<RealAlgebraic>> {
    let GroupoidDescriptor::KummerGroupoid { n, .. } = gd else {
        return Err(Error::NotKummer);
    };
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroObjectPoint);
    }
    p.div(q)?.nth_root(*n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representative {
    Object(RealAlgebraic),
    /// The single object of a one-object groupoid.
    Point,
}

impl fmt::Display for Representative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Representative::Object(c) => write!(f, "{c}"),
            Representative::Point => f.write_str("*"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClasses {
    pub count: usize,
    pub representatives: Vec<Representative>,
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    parent[i] = r;
    r
}

/// Isomorphism classes of the restricted object set. Each component of the
/// set avoids 0, so all its points are isomorphic (`p/q > 0` has every real
/// root); one canonical sample per component suffices.
pub fn iso_classes(gd: &GroupoidDescriptor, th: &TheorySpec) -> Result<IsoClasses> {
    let set = match restrict_objects(gd, th) {
        ObjectSet::Singleton => {
            return Ok(IsoClasses {
                count: 1,
                representatives: vec![Representative::Point],
            });
        }
        ObjectSet::Line(s) => s,
    };
    let mut samples = Vec::new();
    for comp in set.components() {
        let piece = SemialgebraicSet1D::from_components(vec![comp.clone()]);
        if let Some(c) = piece.nonempty()? {
            samples.push(c);
        }
    }
    let mut parent: Vec<usize> = (0..samples.len()).collect();
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
            if ri != rj && morphism_solvable(gd, &samples[i], &samples[j])?.is_some() {
                parent[rj] = ri;
            }
        }
    }
    // Canonical representative of each class: the one the witness rule prefers.
    let mut reps: Vec<RealAlgebraic> = Vec::new();
    for root in 0..samples.len() {
        if find(&mut parent, root) != root {
            continue;
        }
        let class: Vec<_> = (0..samples.len())
            .filter(|&i| find(&mut parent, i) == root)
            .map(|i| SemialgebraicSet1D::point(samples[i].clone()))
            .collect();
        let union = class
            .iter()
            .fold(SemialgebraicSet1D::empty(), |acc, s| acc.union(s));
        reps.push(union.nonempty()?.expect("class is non-empty"));
    }
    let all = reps.iter().fold(SemialgebraicSet1D::empty(), |acc, r| {
        acc.union(&SemialgebraicSet1D::point(r.clone()))
    });
    // Order classes by the same preference: repeatedly take the canonical element.
    let mut ordered = Vec::new();
    let mut rest = all;
    while let Some(best) = rest.nonempty()? {
        rest = rest.difference(&SemialgebraicSet1D::point(best.clone()));
        ordered.push(Representative::Object(best));
    }
    Ok(IsoClasses {
        count: ordered.len(),
        representatives: ordered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Unique,
    Classes(usize),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Unique => f.write_str("Unique"),
            Verdict::Classes(k) => write!(f, "Classes({k})"),
        }
    }
}

pub fn uniqueness_verdict(gd: &GroupoidDescriptor, th: &TheorySpec) -> Result<Verdict> {
    let classes = iso_classes(gd, th)?;
    Ok(if classes.count == 1 {
        Verdict::Unique
    } else {
        Verdict::Classes(classes.count)
    })
}

/// Identity, inverse and composition laws on sample objects (Kummer), or
/// the group laws on sample elements (torsors).
pub fn groupoid_axioms_check(gd: &GroupoidDescriptor, samples: &[RealAlgebraic]) -> Result<bool> {
    match gd {
        GroupoidDescriptor::KummerGroupoid { n, .. } => {
            let n = *n;
            let one = RealAlgebraic::one();
            let mut mor = Vec::with_capacity(samples.len());
            for p in samples {
                let row: Vec<Option<RealAlgebraic>> = samples
                    .iter()
                    .map(|q| morphism_solvable(gd, p, q))
                    .collect::<Result<_>>()?;
                mor.push(row);
            }
            for (i, p) in samples.iter().enumerate() {
                // Identity: 1 is a morphism p -> p.
                if one.pow(n)? != p.div(p)? || mor[i][i].is_none() {
                    return Ok(false);
                }
                for (j, q) in samples.iter().enumerate() {
                    let Some(z) = &mor[i][j] else {
                        // Absence only when n is even and the signs differ.
                        if n % 2 == 1 || p.sign() == q.sign() {
                            return Ok(false);
                        }
                        continue;
                    };
                    if z.pow(n)?.mul(q)? != *p {
                        return Ok(false);
                    }
                    // Inverse: 1/z is a morphism q -> p.
                    if z.inv()?.pow(n)?.mul(p)? != *q {
                        return Ok(false);
                    }
                    for (k, r) in samples.iter().enumerate() {
                        let Some(z2) = &mor[j][k] else { continue };
                        // Composition lands in Mor(p, r).
                        if z.mul(z2)?.pow(n)?.mul(r)? != *p || mor[i][k].is_none() {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        GroupoidDescriptor::SingleObjectTorsor { group } => {
            let (op, e): (
                fn(&RealAlgebraic, &RealAlgebraic) -> Result<RealAlgebraic>,
                RealAlgebraic,
            ) = match group {
                TorsorGroup::Gm => (|a, b| a.mul(b), RealAlgebraic::one()),
                TorsorGroup::Ga => (|a, b| a.add(b), RealAlgebraic::zero()),
            };
            for a in samples {
                let inverse = match group {
                    TorsorGroup::Gm if a.is_zero() => return Ok(false),
                    TorsorGroup::Gm => a.inv()?,
                    TorsorGroup::Ga => a.neg(),
                };
                if op(a, &e)? != *a || op(a, &inverse)? != e {
                    return Ok(false);
                }
                for b in samples {
                    for c in samples {
                        if op(&op(a, b)?, c)? != op(a, &op(b, c)?)? {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        GroupoidDescriptor::TrivialGroupoid => Ok(true),
    }
}
