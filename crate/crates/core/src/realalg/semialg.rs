use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::number::RealAlgebraic;
use super::Sign;
use crate::error::Result;
use crate::field::{height, Rational};

/// Interval endpoint: a real algebraic number or one of the infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Endpoint {
    NegInfinity,
    Finite(RealAlgebraic),
    PosInfinity,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInfinity => f.write_str("-inf"),
            Endpoint::Finite(x) => write!(f, "{x}"),
            Endpoint::PosInfinity => f.write_str("+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Component {
    Point(RealAlgebraic),
    /// Open interval; `lo < hi`.
    Open(Endpoint, Endpoint),
}

impl Component {
    fn contains(&self, x: &RealAlgebraic) -> bool {
        match self {
            Component::Point(p) => p == x,
            Component::Open(lo, hi) => {
                let e = Endpoint::Finite(x.clone());
                lo < &e && &e < hi
            }
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Component::Point(x) => write!(f, "{{{x}}}"),
            Component::Open(lo, hi) => write!(f, "({lo}, {hi})"),
        }
    }
}

/// A finite union of points and open intervals of the real algebraic line,
/// kept in canonical form: sorted, disjoint, and with every maximal
/// connected run written as an optional left point, one open span and an
/// optional right point. Structural equality is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SemialgebraicSet1D {
    components: Vec<Component>,
}

/// Cells cut out by the sorted breakpoints `b`: `Gap(i)` is the open interval
/// between `b[i-1]` and `b[i]`, `Pt(i)` is `{b[i]}`.
#[derive(Clone, Copy)]
enum Cell {
    Gap(usize),
    Pt(usize),
}

impl SemialgebraicSet1D {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full() -> Self {
        Self::open(Endpoint::NegInfinity, Endpoint::PosInfinity)
    }

    pub fn point(x: RealAlgebraic) -> Self {
        SemialgebraicSet1D {
            components: vec![Component::Point(x)],
        }
    }

    /// The open interval `(lo, hi)`, empty when `lo >= hi`.
    pub fn open(lo: Endpoint, hi: Endpoint) -> Self {
        if lo >= hi {
            return Self::empty();
        }
        SemialgebraicSet1D {
            components: vec![Component::Open(lo, hi)],
        }
    }

    pub fn greater_than(x: RealAlgebraic) -> Self {
        Self::open(Endpoint::Finite(x), Endpoint::PosInfinity)
    }

    pub fn less_than(x: RealAlgebraic) -> Self {
        Self::open(Endpoint::NegInfinity, Endpoint::Finite(x))
    }

    /// The affine line with 0 removed.
    pub fn nonzero() -> Self {
        Self::greater_than(RealAlgebraic::zero()).union(&Self::less_than(RealAlgebraic::zero()))
    }

    /// `{c : sign(c) = s}`.
    pub fn with_sign(s: Sign) -> Self {
        match s {
            Sign::Positive => Self::greater_than(RealAlgebraic::zero()),
            Sign::Negative => Self::less_than(RealAlgebraic::zero()),
            Sign::Zero => Self::point(RealAlgebraic::zero()),
        }
    }

    /// Canonical form of an arbitrary list of components.
    pub fn from_components(components: Vec<Component>) -> Self {
        let raw = SemialgebraicSet1D { components };
        raw.combine(&Self::empty(), |a, _| a)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &RealAlgebraic) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        self.combine(&Self::empty(), |a, _| !a)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && !b)
    }

    fn breakpoints(&self) -> impl Iterator<Item = &RealAlgebraic> {
        fn finite(e: &Endpoint) -> Option<&RealAlgebraic> {
            match e {
                Endpoint::Finite(x) => Some(x),
                _ => None,
            }
        }
        self.components
            .iter()
            .flat_map(|c| match c {
                Component::Point(x) => [Some(x), None],
                Component::Open(lo, hi) => [finite(lo), finite(hi)],
            })
            .flatten()
    }

    /// Whether the open cell between `lo` and `hi` (no breakpoint inside)
    /// lies in the set.
    fn covers_gap(&self, lo: &Endpoint, hi: &Endpoint) -> bool {
        self.components.iter().any(|c| match c {
            Component::Open(a, b) => a <= lo && hi <= b,
            Component::Point(_) => false,
        })
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let mut b: Vec<RealAlgebraic> = self
            .breakpoints()
            .chain(other.breakpoints())
            .cloned()
            .collect();
        b.sort();
        b.dedup();
        let gap_ends = |i: usize| {
            let lo = if i == 0 {
                Endpoint::NegInfinity
            } else {
                Endpoint::Finite(b[i - 1].clone())
            };
            let hi = if i == b.len() {
                Endpoint::PosInfinity
            } else {
                Endpoint::Finite(b[i].clone())
            };
            (lo, hi)
        };
        let mut cells = Vec::with_capacity(2 * b.len() + 1);
        for i in 0..=b.len() {
            cells.push(Cell::Gap(i));
            if i < b.len() {
                cells.push(Cell::Pt(i));
            }
        }
        let member: Vec<bool> = cells
            .iter()
            .map(|&c| match c {
                Cell::Gap(i) => {
                    let (lo, hi) = gap_ends(i);
                    op(self.covers_gap(&lo, &hi), other.covers_gap(&lo, &hi))
                }
                Cell::Pt(i) => op(self.contains(&b[i]), other.contains(&b[i])),
            })
            .collect();
        let mut components = Vec::new();
        let mut k = 0;
        while k < cells.len() {
            if !member[k] {
                k += 1;
                continue;
            }
            let start = k;
            while k + 1 < cells.len() && member[k + 1] {
                k += 1;
            }
            let (first, last) = (cells[start], cells[k]);
            if start == k {
                match first {
                    Cell::Pt(i) => components.push(Component::Point(b[i].clone())),
                    Cell::Gap(i) => {
                        let (lo, hi) = gap_ends(i);
                        components.push(Component::Open(lo, hi));
                    }
                }
            } else {
                let lo = match first {
                    Cell::Pt(i) => {
                        components.push(Component::Point(b[i].clone()));
                        Endpoint::Finite(b[i].clone())
                    }
                    Cell::Gap(i) => gap_ends(i).0,
                };
                let (hi, trailing) = match last {
                    Cell::Pt(i) => (Endpoint::Finite(b[i].clone()), Some(b[i].clone())),
                    Cell::Gap(i) => (gap_ends(i).1, None),
                };
                components.push(Component::Open(lo, hi));
                if let Some(x) = trailing {
                    components.push(Component::Point(x));
                }
            }
            k += 1;
        }
        SemialgebraicSet1D { components }
    }

    /// A canonical element: the rational of least height `max(|p|, q)` in
    /// the set, preferring the positive one on ties; when the set is a finite
    /// collection of irrational points, the least of them.
    pub fn nonempty(&self) -> Result<Option<RealAlgebraic>> {
        let mut best: Option<Rational> = None;
        let mut fallback: Option<RealAlgebraic> = None;
        for c in &self.components {
            let cand = match c {
                Component::Point(x) => match x.as_rational() {
                    Some(q) => q.clone(),
                    None => {
                        fallback.get_or_insert_with(|| x.clone());
                        continue;
                    }
                },
                Component::Open(lo, hi) => simplest_in(lo, hi)?,
            };
            let better = match &best {
                None => true,
                Some(b) => match height(&cand).cmp(&height(b)) {
                    Ordering::Less => true,
                    Ordering::Equal => cand.is_positive() && b.is_negative(),
                    Ordering::Greater => false,
                },
            };
            if better {
                best = Some(cand);
            }
        }
        Ok(best.map(RealAlgebraic::from_rational).or(fallback))
    }
}

fn neg_endpoint(e: &Endpoint) -> Endpoint {
    match e {
        Endpoint::NegInfinity => Endpoint::PosInfinity,
        Endpoint::PosInfinity => Endpoint::NegInfinity,
        Endpoint::Finite(x) => Endpoint::Finite(x.neg()),
    }
}

/// Least-height rational in the open interval `(lo, hi)`.
fn simplest_in(lo: &Endpoint, hi: &Endpoint) -> Result<Rational> {
    let zero = Endpoint::Finite(RealAlgebraic::zero());
    if lo < &zero && &zero < hi {
        return Ok(Rational::zero());
    }
    if hi <= &zero {
        return Ok(-simplest_in(&neg_endpoint(hi), &neg_endpoint(lo))?);
    }
    let lo = match lo {
        Endpoint::Finite(x) => x.clone(),
        _ => unreachable!("interval with lo = -inf contains 0 or lies left of it"),
    };
    simplest_positive(lo, hi.clone())
}

/// Stern-Brocot descent for `(lo, hi)` with `0 <= lo < hi`: the result has
/// the least numerator and least denominator among rationals inside.
fn simplest_positive(lo: RealAlgebraic, hi: Endpoint) -> Result<Rational> {
    let fl = Rational::from_integer(lo.floor()?);
    let next = &fl + Rational::one();
    let next_e = Endpoint::Finite(RealAlgebraic::from_rational(next.clone()));
    if next_e < hi {
        return Ok(next);
    }
    // Both ends lie in [fl, fl + 1]; recurse on the reciprocals of the
    // fractional parts.
    let hi = match hi {
        Endpoint::Finite(x) => x,
        _ => unreachable!("fl + 1 < +inf"),
    };
    let new_lo = hi.add_rational(&-&fl).inv()?;
    let frac_lo = lo.add_rational(&-&fl);
    let new_hi = if frac_lo.is_zero() {
        Endpoint::PosInfinity
    } else {
        Endpoint::Finite(frac_lo.inv()?)
    };
    let inner = simplest_positive(new_lo, new_hi)?;
    Ok(fl + inner.recip())
}

impl fmt::Display for SemialgebraicSet1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
