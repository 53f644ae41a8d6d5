//! Report rendering for the `realpv` command: runs the analysis pipeline on
//! each equation and formats the result as text or JSON.

use std::fmt::Write as _;
use std::thread;

use serde_json::{json, Value};

use realpv::diffeq::{GeneratorRelation, MinimalityWitness, RankOneClassification};
use realpv::dvariety::{DInvariance, Disjointness};
use realpv::field::{PartialFractionTerm, Poly};
use realpv::groupoid::{Existence, Representative};
use realpv::realalg::SignCertificate;
use realpv::{
    analyze, parse_cut, parse_equation, ClassificationReport, EquationKind, Error, LinearOde,
    RealAlgebraic, TheorySpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateLevel {
    Summary,
    Full,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constants {
    RealAlgebraic,
    Rationals,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryChoice {
    Fields,
    /// Ordered fields, with the cut still in text form.
    Ordered(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub equations: Vec<String>,
    pub kind: Option<EquationKind>,
    pub constants: Constants,
    pub theory: TheoryChoice,
    pub format: Format,
    pub certificates: CertificateLevel,
}

/// A failure together with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

/// 2 for malformed input, 3 for input outside the supported fragment, 1 otherwise.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::InvalidIsolation { .. } | Error::EmptyInterval => 2,
        Error::Unsupported(_) | Error::UnsupportedOrder(_) | Error::DegreeLimit { .. } => 3,
        _ => 1,
    }
}

fn fail(context: &str, e: Error) -> Failure {
    Failure {
        code: exit_code(&e),
        message: format!("{context}: {e}"),
    }
}

/// One analysed equation.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub input: String,
    pub report: ClassificationReport,
}

fn theory_spec(cfg: &Config) -> Result<TheorySpec, Failure> {
    match &cfg.theory {
        TheoryChoice::Fields => Ok(TheorySpec::Fields),
        TheoryChoice::Ordered(text) => parse_cut(text)
            .map(TheorySpec::OrderedFields)
            .map_err(|e| fail(&format!("ordering '{text}'"), e)),
    }
}

/// Parses and analyses every equation. Equations are independent, so each
/// runs on its own thread; results keep the input order.
pub fn run(cfg: &Config) -> Result<Vec<Outcome>, Failure> {
    if cfg.equations.is_empty() {
        return Err(Failure::usage("no equation given; pass --equation"));
    }
    if cfg.constants == Constants::Rationals {
        return Err(Failure {
            code: 3,
            message: "constants field Q is not supported: object sets and iso classes are \
                      decided over the real algebraic numbers"
                .into(),
        });
    }
    let theory = theory_spec(cfg)?;
    let parsed: Vec<LinearOde> = cfg
        .equations
        .iter()
        .map(|text| {
            parse_equation(text, cfg.kind).map_err(|e| fail(&format!("equation '{text}'"), e))
        })
        .collect::<Result<_, _>>()?;
    let reports: Vec<Result<ClassificationReport, Error>> = thread::scope(|s| {
        let handles: Vec<_> = parsed
            .iter()
            .map(|eq| s.spawn(|| analyze(eq, &theory)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("analysis thread panicked"))
            .collect()
    });
    cfg.equations
        .iter()
        .zip(reports)
        .map(|(text, r)| {
            r.map(|report| Outcome {
                input: text.clone(),
                report,
            })
            .map_err(|e| fail(&format!("equation '{text}'"), e))
        })
        .collect()
}

/// Renders all outcomes in the configured format.
pub fn render(cfg: &Config, outcomes: &[Outcome]) -> String {
    match cfg.format {
        Format::Json => {
            let values: Vec<Value> = outcomes
                .iter()
                .map(|o| report_json(o, cfg.certificates))
                .collect();
            let doc = if values.len() == 1 {
                values.into_iter().next().unwrap()
            } else {
                Value::Array(values)
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => outcomes
            .iter()
            .map(|o| report_text(o, cfg.certificates))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn kind_name(eq: &LinearOde) -> &'static str {
    match eq {
        LinearOde::Homogeneous(_) => "homogeneous",
        LinearOde::Quadrature(_) => "quadrature",
    }
}

/// `{"poly", "interval"}` with the defining polynomial and isolating interval.
pub fn ralg_json(c: &RealAlgebraic) -> Value {
    let (lo, hi) = c.interval();
    json!({
        "poly": c.defining().to_string(),
        "interval": [lo.to_string(), hi.to_string()],
    })
}

fn opt_ralg(c: Option<&RealAlgebraic>) -> Value {
    c.map_or(Value::Null, ralg_json)
}

fn term_string(t: &PartialFractionTerm) -> String {
    let den = if t.power == 1 {
        format!("({})", t.irreducible_den)
    } else {
        format!("({})^{}", t.irreducible_den, t.power)
    };
    format!("({})/{den}", t.numerator)
}

fn residues_json(residues: &[(Poly, realpv::Rational)]) -> Value {
    residues
        .iter()
        .map(|(p, r)| json!({"factor": p.to_string(), "residue": r.to_string()}))
        .collect()
}

fn classification_json(cl: &RankOneClassification) -> Value {
    let mut v = json!({
        "variant": cl.variant_name(),
        "n": Value::Null,
        "f": Value::Null,
        "residues": Value::Null,
    });
    let m = v.as_object_mut().unwrap();
    match cl {
        RankOneClassification::Kummer(k) => {
            m["n"] = json!(k.n);
            m["f"] = json!(k.f.to_string());
            m["residues"] = residues_json(&k.residues);
        }
        RankOneClassification::MultiplicativeTranscendental { reason } => {
            m.insert("reason".into(), json!(reason.to_string()));
        }
        RankOneClassification::AdditiveTranscendental { residue } => {
            m.insert("residue".into(), json!(term_string(residue)));
        }
        RankOneClassification::InField { solution } => {
            m.insert("solution".into(), json!(solution.to_string()));
        }
    }
    v
}

fn theory_json(th: &TheorySpec) -> Value {
    match th {
        TheorySpec::Fields => json!({"kind": "fields", "cut": Value::Null}),
        TheorySpec::OrderedFields(cut) => json!({"kind": "ordered", "cut": cut.to_string()}),
    }
}

fn representative_json(r: &Representative) -> Value {
    match r {
        Representative::Object(c) => ralg_json(c),
        Representative::Point => json!("*"),
    }
}

fn invariance_json(d: &DInvariance, level: CertificateLevel) -> Value {
    let mut v = json!({
        "invariant": d.invariant,
        "quotient": d.quotient.to_string(),
    });
    if level == CertificateLevel::Full {
        let m = v.as_object_mut().unwrap();
        m.insert("derivative".into(), json!(d.derivative.to_string()));
        m.insert("remainder".into(), json!(d.remainder.to_string()));
    }
    v
}

fn minimality_json(w: &MinimalityWitness, level: CertificateLevel) -> Value {
    let mut v = json!({
        "m": w.m,
        "offending": {"factor": w.offending.0.to_string(), "residue": w.offending.1.to_string()},
    });
    if level == CertificateLevel::Full {
        let m = v.as_object_mut().unwrap();
        m.insert("f_m".into(), json!(w.f_m.to_string()));
        m.insert("residual".into(), json!(w.residual.to_string()));
    }
    v
}

fn sign_json(s: &SignCertificate) -> Value {
    json!({
        "sign": s.sign.to_string(),
        "interval": [s.interval.0.to_string(), s.interval.1.to_string()],
        "sample": s.sample.to_string(),
        "value": s.value.to_string(),
    })
}

fn disjointness_json(
    c1: &RealAlgebraic,
    c2: &RealAlgebraic,
    d: &Disjointness,
    level: CertificateLevel,
) -> Value {
    let mut v = json!({
        "c1": ralg_json(c1),
        "c2": ralg_json(c2),
        "disjoint": d.disjoint,
    });
    if level == CertificateLevel::Full {
        let m = v.as_object_mut().unwrap();
        m.insert("resultant".into(), json!(d.resultant_string()));
        m.insert("value".into(), json!(d.value_string()));
    }
    v
}

fn certificates_json(r: &ClassificationReport, level: CertificateLevel) -> Value {
    let c = &r.certificates;
    json!({
        "kummer_identity": c.kummer_identity.as_ref().map(|f| f.to_string()),
        "minimality": c.minimality.iter().map(|w| minimality_json(w, level)).collect::<Vec<_>>(),
        "d_invariance": c.d_invariance.as_ref().map(|(lift, d)| {
            let mut v = invariance_json(d, level);
            v.as_object_mut().unwrap().shift_insert(0, "lift".into(), json!(lift.to_string()));
            v
        }),
        "witness_invariance": c.witness_invariance.as_ref().map(|d| invariance_json(d, level)),
        "sign": c.sign.as_ref().map(sign_json),
        "disjointness": c.disjointness.iter().map(|(p, q, d)| disjointness_json(p, q, d, level)).collect::<Vec<_>>(),
        "morphisms": c.morphisms.iter().map(|s| json!({
            "p": ralg_json(&s.p),
            "q": ralg_json(&s.q),
            "z": opt_ralg(s.z.as_ref()),
        })).collect::<Vec<_>>(),
        "hermite": c.hermite.as_ref().map(|h| json!({
            "rational": h.rational.to_string(),
            "residual": h.residual.to_string(),
        })),
    })
}

/// The JSON document for one report; key order is fixed.
pub fn report_json(o: &Outcome, level: CertificateLevel) -> Value {
    let r = &o.report;
    let (witness, presentation) = match &r.existence {
        Existence::Witness {
            witness_c,
            presentation,
        } => (
            opt_ralg(witness_c.as_ref()),
            json!(presentation.to_string()),
        ),
        Existence::NoExtension => (Value::Null, Value::Null),
    };
    json!({
        "input": {
            "text": o.input,
            "equation": r.equation.to_string(),
            "type": kind_name(&r.equation),
        },
        "classification": classification_json(&r.classification),
        "galois_group": r.galois_group.to_string(),
        "groupoid": r.groupoid.to_string(),
        "theory": theory_json(&r.theory),
        "objects_O": r.objects.to_string(),
        "restricted_O_S": r.restricted.to_string(),
        "tautological_K_point": r.tautological_point.as_ref().map(|f| f.to_string()),
        "existence": {
            "witness_c": witness,
            "presentation": presentation,
        },
        "uniqueness": {
            "verdict": r.verdict.to_string(),
            "classes": r.classes.representatives.iter().map(representative_json).collect::<Vec<_>>(),
        },
        "certificates": certificates_json(r, level),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Plain-text rendering of one report.
pub fn report_text(o: &Outcome, level: CertificateLevel) -> String {
    let r = &o.report;
    let full = level == CertificateLevel::Full;
    let mut s = String::new();
    let mut line = |label: &str, value: &dyn std::fmt::Display| {
        writeln!(s, "{label:<22}{value}").unwrap();
    };
    line("equation:", &r.equation);
    line("type:", &kind_name(&r.equation));
    line("classification:", &r.classification);
    line("galois group:", &r.galois_group);
    line("groupoid:", &r.groupoid);
    line("theory:", &r.theory);
    line("objects O:", &r.objects);
    line("restricted O_S:", &r.restricted);
    match &r.tautological_point {
        Some(p) => line("tautological K-point:", p),
        None => line("tautological K-point:", &"none"),
    }
    match &r.existence {
        Existence::Witness {
            witness_c: Some(c),
            presentation,
        } => line("existence:", &format!("c = {c}, {presentation}")),
        Existence::Witness {
            witness_c: None,
            presentation,
        } => line("existence:", presentation),
        Existence::NoExtension => line("existence:", &"no extension"),
    }
    if let Existence::Witness { presentation, .. } = &r.existence {
        if let GeneratorRelation::Algebraic { degree, .. } = presentation.relation {
            line("generator degree:", &degree);
        }
    }
    let reps: Vec<String> = r
        .classes
        .representatives
        .iter()
        .map(|c| c.to_string())
        .collect();
    line(
        "uniqueness:",
        &format!("{} [{}]", r.verdict, reps.join(", ")),
    );

    let c = &r.certificates;
    s.push_str("certificates:\n");
    if let Some(k) = &c.kummer_identity {
        writeln!(s, "  n*a - f'/f = {k}").unwrap();
    }
    for w in &c.minimality {
        writeln!(
            s,
            "  m = {}: residue {} at {} times m is not an integer",
            w.m, w.offending.1, w.offending.0
        )
        .unwrap();
        if full {
            writeln!(s, "    f_m = {}, m*a - f_m'/f_m = {}", w.f_m, w.residual).unwrap();
        }
    }
    if let Some((lift, d)) = &c.d_invariance {
        writeln!(
            s,
            "  minimal lift {lift}: invariant {}, quotient {}",
            yes_no(d.invariant),
            d.quotient
        )
        .unwrap();
        if full {
            writeln!(s, "    D(P) = {}, remainder {}", d.derivative, d.remainder).unwrap();
        }
    }
    if let Some(d) = &c.witness_invariance {
        writeln!(
            s,
            "  witness relation: invariant {}, quotient {}",
            yes_no(d.invariant),
            d.quotient
        )
        .unwrap();
    }
    if let Some(sc) = &c.sign {
        writeln!(
            s,
            "  sign of f: {} on ({}, {}), f({}) = {}",
            sc.sign, sc.interval.0, sc.interval.1, sc.sample, sc.value
        )
        .unwrap();
    }
    for (p, q, d) in &c.disjointness {
        writeln!(
            s,
            "  lifts at c = {p} and c = {q}: disjoint {}",
            yes_no(d.disjoint)
        )
        .unwrap();
        if full {
            writeln!(s, "    R(w1, w2) = {}", d.resultant_string()).unwrap();
            writeln!(s, "    R(c1, c2) = {}", d.value_string()).unwrap();
        }
    }
    for m in &c.morphisms {
        match &m.z {
            Some(z) => writeln!(s, "  morphism {} -> {}: z = {z}", m.p, m.q).unwrap(),
            None => writeln!(s, "  morphism {} -> {}: none", m.p, m.q).unwrap(),
        }
    }
    if let Some(h) = &c.hermite {
        writeln!(s, "  hermite: ({})' + {}", h.rational, h.residual).unwrap();
    }
    s
}
