//! Text front-end for equations, rational functions and ordering cuts.
//!
//! ```text
//! equation := "x'" '=' expr
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := base ('^' ['-'] integer)?
//! base     := number | 't' | 'x' | '(' expr ')'
//! cut      := ['t' '->'] ('+inf' | '-inf' | point ('+' | '-'))
//! point    := ['-'] number | 'root(' expr ',' '[' ['-'] number ',' ['-'] number ']' ')'
//! ```
//!
//! Numbers are integers, fractions written with `/`, or decimals such as `0.25`.

use num_traits::Zero;

use crate::diffeq::LinearOde;
use crate::error::{Error, Result};
use crate::field::{parse_rational, Poly, RatFunc, Rational};
use crate::realalg::{OrderingCut, RealAlgebraic};

/// Largest exponent magnitude accepted in `base ^ e`.
pub const MAX_EXPONENT: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquationKind {
    Homogeneous,
    Quadrature,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Sym(char),
    Arrow,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit()
            || (c == '.' && chars.get(i + 1).is_some_and(|(_, d)| d.is_ascii_digit()))
        {
            let start = i;
            while i < chars.len() && (chars[i].1.is_ascii_digit() || chars[i].1 == '.') {
                i += 1;
            }
            let end = chars.get(i).map_or(text.len(), |(p, _)| *p);
            let lit = &text[pos..end];
            let q = parse_rational(lit)
                .ok_or_else(|| syntax(chars[start].0, format!("malformed number '{lit}'")))?;
            out.push((pos, Tok::Num(q)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_alphanumeric() {
                i += 1;
            }
            let end = chars.get(i).map_or(text.len(), |(p, _)| *p);
            out.push((chars[start].0, Tok::Ident(text[pos..end].to_string())));
        } else if c == '-' && chars.get(i + 1).is_some_and(|(_, d)| *d == '>') {
            out.push((pos, Tok::Arrow));
            i += 2;
        } else if "+-*/^()[],='".contains(c) {
            out.push((pos, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(syntax(pos, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

/// `constant + coefficient * x`, with `mentions_x` recording whether `x`
/// occurred syntactically.
#[derive(Clone, Debug)]
struct Linear {
    constant: RatFunc,
    coefficient: RatFunc,
    mentions_x: bool,
}

impl Linear {
    fn constant(c: RatFunc) -> Self {
        Linear {
            constant: c,
            coefficient: RatFunc::zero(),
            mentions_x: false,
        }
    }

    fn x() -> Self {
        Linear {
            constant: RatFunc::zero(),
            coefficient: RatFunc::one(),
            mentions_x: true,
        }
    }

    fn pure(&self) -> bool {
        !self.mentions_x
    }
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
    allow_x: bool,
    _text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, allow_x: bool) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(text)?,
            pos: 0,
            len: text.len(),
            allow_x,
            _text: text,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(syntax(self.here(), format!("expected '{c}'")))
        }
    }

    fn eat_ident(&mut self, name: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == name) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(syntax(self.here(), "unexpected trailing input")),
        }
    }

    fn expr(&mut self) -> Result<Linear> {
        let negate = self.eat_sym('-');
        let mut acc = self.term()?;
        if negate {
            acc = Linear {
                constant: -&acc.constant,
                coefficient: -&acc.coefficient,
                mentions_x: acc.mentions_x,
            };
        }
        loop {
            let sign = if self.eat_sym('+') {
                RatFunc::one()
            } else if self.eat_sym('-') {
                -RatFunc::one()
            } else {
                return Ok(acc);
            };
            let rhs = self.term()?;
            acc = Linear {
                constant: &acc.constant + &(&sign * &rhs.constant),
                coefficient: &acc.coefficient + &(&sign * &rhs.coefficient),
                mentions_x: acc.mentions_x || rhs.mentions_x,
            };
        }
    }

    fn term(&mut self) -> Result<Linear> {
        let mut acc = self.factor()?;
        loop {
            let at = self.here();
            if self.eat_sym('*') {
                let rhs = self.factor()?;
                acc = match (acc.pure(), rhs.pure()) {
                    (true, _) => Linear {
                        constant: &acc.constant * &rhs.constant,
                        coefficient: &acc.constant * &rhs.coefficient,
                        mentions_x: rhs.mentions_x,
                    },
                    (false, true) => Linear {
                        constant: &acc.constant * &rhs.constant,
                        coefficient: &acc.coefficient * &rhs.constant,
                        mentions_x: true,
                    },
                    (false, false) => {
                        return Err(Error::Unsupported("equation is not linear in x".into()))
                    }
                };
            } else if self.eat_sym('/') {
                let rhs = self.factor()?;
                if !rhs.pure() {
                    return Err(Error::Unsupported("division by an expression in x".into()));
                }
                let inv = rhs
                    .constant
                    .inv()
                    .ok_or_else(|| syntax(at, "division by zero"))?;
                acc = Linear {
                    constant: &acc.constant * &inv,
                    coefficient: &acc.coefficient * &inv,
                    mentions_x: acc.mentions_x,
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Linear> {
        let base = self.base()?;
        let at = self.here();
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let negative = self.eat_sym('-');
        let e_at = self.here();
        let e = match self.peek() {
            Some(Tok::Num(q)) if q.is_integer() => q.to_integer(),
            _ => return Err(syntax(e_at, "expected an integer exponent")),
        };
        self.pos += 1;
        let e: usize =
            e.try_into()
                .ok()
                .filter(|&e| e <= MAX_EXPONENT)
                .ok_or(Error::DegreeLimit {
                    degree: MAX_EXPONENT + 1,
                    bound: MAX_EXPONENT,
                })?;
        if !base.pure() {
            return match (negative, e) {
                (_, 0) => Ok(Linear::constant(RatFunc::one())),
                (false, 1) => Ok(base),
                _ => Err(Error::Unsupported("power of x other than 1".into())),
            };
        }
        if negative && base.constant.is_zero() && e > 0 {
            return Err(syntax(at, "negative power of zero"));
        }
        let e = if negative { -(e as i64) } else { e as i64 };
        Ok(Linear::constant(base.constant.pow(e)))
    }

    fn base(&mut self) -> Result<Linear> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                Ok(Linear::constant(RatFunc::constant(q)))
            }
            Some(Tok::Ident(s)) if s == "t" => {
                self.pos += 1;
                Ok(Linear::constant(RatFunc::t()))
            }
            Some(Tok::Ident(s)) if s == "x" => {
                if !self.allow_x {
                    return Err(syntax(at, "'x' is not allowed here"));
                }
                self.pos += 1;
                if self.peek() == Some(&Tok::Sym('\'')) {
                    return Err(syntax(
                        self.here(),
                        "derivatives may only appear on the left-hand side",
                    ));
                }
                Ok(Linear::x())
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Some(Tok::Sym('-')) => Err(syntax(
                at,
                "unary minus is only allowed at the start of an expression",
            )),
            Some(_) => Err(syntax(at, "expected a number, 't', 'x' or '('")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }

    fn signed_number(&mut self) -> Result<Rational> {
        let negative = self.eat_sym('-');
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.pos += 1;
                let mut q = q;
                // Allow a fraction `p/q` in bounds.
                if self.eat_sym('/') {
                    let d_at = self.here();
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            q /= d;
                        }
                        _ => return Err(syntax(d_at, "expected a non-zero denominator")),
                    }
                }
                Ok(if negative { -q } else { q })
            }
            _ => Err(syntax(at, "expected a number")),
        }
    }
}

/// Parses a rational function of `t`.
pub fn parse_ratfunc(text: &str) -> Result<RatFunc> {
    let mut p = Parser::new(text, false)?;
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e.constant)
}

/// Parses `x' = expr`. Without `kind`, an occurrence of `x` on the right
/// selects a homogeneous equation `x' = a*x`, otherwise a quadrature
/// `x' = g`; `kind` overrides this when `x` is absent.
pub fn parse_equation(text: &str, kind: Option<EquationKind>) -> Result<LinearOde> {
    let mut p = Parser::new(text, true)?;
    if !p.eat_ident("x") {
        return Err(syntax(p.here(), "equation must start with x'"));
    }
    let mut order = 0;
    while p.eat_sym('\'') {
        order += 1;
    }
    if order == 0 {
        return Err(syntax(p.here(), "expected x' on the left-hand side"));
    }
    if order > 1 {
        return Err(Error::UnsupportedOrder(order));
    }
    p.expect_sym('=')?;
    let rhs = p.expr()?;
    p.expect_end()?;
    if rhs.mentions_x {
        if !rhs.constant.is_zero() {
            return Err(Error::Unsupported(
                "inhomogeneous equation x' = a*x + b".into(),
            ));
        }
        if kind == Some(EquationKind::Quadrature) {
            return Err(Error::Unsupported(
                "a quadrature x' = g cannot involve x".into(),
            ));
        }
        return LinearOde::homogeneous(rhs.coefficient);
    }
    match kind {
        Some(EquationKind::Homogeneous) => LinearOde::homogeneous(rhs.constant),
        _ => LinearOde::quadrature(rhs.constant),
    }
}

/// Parses a real algebraic constant: a rational, or `root(p, [lo, hi])`.
pub fn parse_constant(text: &str) -> Result<RealAlgebraic> {
    let mut p = Parser::new(text, false)?;
    let c = point(&mut p)?;
    p.expect_end()?;
    Ok(c)
}

fn point(p: &mut Parser<'_>) -> Result<RealAlgebraic> {
    let at = p.here();
    if p.eat_ident("root") {
        p.expect_sym('(')?;
        let poly_at = p.here();
        let e = p.expr()?;
        if !e.constant.is_polynomial() || e.constant.is_zero() {
            return Err(syntax(poly_at, "root() needs a non-zero polynomial in t"));
        }
        let poly: Poly = e.constant.num().clone();
        p.expect_sym(',')?;
        p.expect_sym('[')?;
        let lo = p.signed_number()?;
        p.expect_sym(',')?;
        let hi = p.signed_number()?;
        p.expect_sym(']')?;
        p.expect_sym(')')?;
        return RealAlgebraic::from_root(&poly, lo, hi).map_err(|e| match e {
            Error::InvalidIsolation { .. } => syntax(at, e.to_string()),
            other => other,
        });
    }
    Ok(RealAlgebraic::from_rational(p.signed_number()?))
}

/// Parses an ordering cut such as `t -> 0+`, `t -> +inf` or
/// `t -> root(t^2-2,[1,2])-`.
pub fn parse_cut(text: &str) -> Result<OrderingCut> {
    let mut p = Parser::new(text, false)?;
    if p.eat_ident("t") && p.peek() == Some(&Tok::Arrow) {
        p.pos += 1;
    } else {
        p.pos = 0;
    }
    let cut = if p.peek() == Some(&Tok::Sym('+'))
        && matches!(p.toks.get(p.pos + 1), Some((_, Tok::Ident(s))) if s == "inf")
    {
        p.pos += 2;
        OrderingCut::PlusInfinity
    } else if p.peek() == Some(&Tok::Sym('-'))
        && matches!(p.toks.get(p.pos + 1), Some((_, Tok::Ident(s))) if s == "inf")
    {
        p.pos += 2;
        OrderingCut::MinusInfinity
    } else if p.eat_ident("inf") {
        OrderingCut::PlusInfinity
    } else {
        let r = point(&mut p)?;
        if p.eat_sym('+') {
            OrderingCut::RightOf(r)
        } else if p.eat_sym('-') {
            OrderingCut::LeftOf(r)
        } else {
            return Err(syntax(p.here(), "expected '+' or '-' after the cut point"));
        }
    };
    p.expect_end()?;
    Ok(cut)
}

impl std::str::FromStr for EquationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "homogeneous" => Ok(EquationKind::Homogeneous),
            "quadrature" => Ok(EquationKind::Quadrature),
            _ => Err(syntax(0, format!("unknown equation type '{s}'"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, rat};

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d))
    }

    #[test]
    fn equation_examples() {
        assert_eq!(
            parse_equation("x' = x/(2*t)", None).unwrap(),
            LinearOde::Homogeneous(rf(&[1], &[0, 2]))
        );
        assert_eq!(
            parse_equation("x' = 1/t", None).unwrap(),
            LinearOde::Quadrature(rf(&[1], &[0, 1]))
        );
        assert_eq!(
            parse_equation("x'' = x", None),
            Err(Error::UnsupportedOrder(2))
        );
        assert_eq!(
            parse_equation("x' = 1/t", Some(EquationKind::Homogeneous)).unwrap(),
            LinearOde::Homogeneous(rf(&[1], &[0, 1]))
        );
        assert_eq!(
            parse_equation("x' = t*x + x/t", None).unwrap(),
            LinearOde::Homogeneous(rf(&[1, 0, 1], &[0, 1]))
        );
        assert_eq!(
            parse_equation("x' = 0*x", None).unwrap(),
            LinearOde::Homogeneous(RatFunc::zero())
        );
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            parse_equation("x' = x + 1", None),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            parse_equation("x' = x*x", None),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            parse_equation("x' = 1/(t-t)", None),
            Err(Error::Syntax { position: 6, .. })
        ));
        assert!(matches!(
            parse_equation("x' = (t", None),
            Err(Error::Syntax { position: 7, .. })
        ));
        assert!(matches!(
            parse_equation("y' = t", None),
            Err(Error::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_equation("x' = t $", None),
            Err(Error::Syntax { position: 7, .. })
        ));
        assert!(matches!(
            parse_equation("x' = 1/t^40", None),
            Err(Error::DegreeLimit { .. })
        ));
    }

    #[test]
    fn expression_extensions() {
        assert_eq!(parse_ratfunc("-t^2 + 0.5").unwrap(), rf(&[1, 0, -2], &[2]));
        assert_eq!(parse_ratfunc("t^-2").unwrap(), rf(&[1], &[0, 0, 1]));
        assert_eq!(parse_ratfunc("(-(t+1))/3").unwrap(), rf(&[-1, -1], &[3]));
    }

    #[test]
    fn cut_examples() {
        assert_eq!(
            parse_cut("t -> 0+").unwrap(),
            OrderingCut::RightOf(RealAlgebraic::zero())
        );
        assert_eq!(parse_cut("t -> +inf").unwrap(), OrderingCut::PlusInfinity);
        assert_eq!(parse_cut("t->-inf").unwrap(), OrderingCut::MinusInfinity);
        let s2 = RealAlgebraic::from_root(&Poly::from_ints(&[-2, 0, 1]), int(1), int(2)).unwrap();
        assert_eq!(
            parse_cut("t -> root(t^2-2,[1,2])-").unwrap(),
            OrderingCut::LeftOf(s2)
        );
        assert_eq!(
            parse_cut("-1/2+").unwrap(),
            OrderingCut::RightOf(RealAlgebraic::from_rational(rat(-1, 2)))
        );
        assert!(matches!(
            parse_cut("t -> root(t^2-2,[-2,2])+"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_cut("t -> 0"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "x' = x/(2*t)",
            "x' = -3/(t^2 + 1)",
            "x' = t*x",
            "x' = (t + 1)/t^2",
            "x' = -x",
        ] {
            let eq = parse_equation(text, None).unwrap();
            assert_eq!(
                parse_equation(&eq.to_string(), None).unwrap(),
                eq,
                "{text} -> {eq}"
            );
        }
        let cut = parse_cut("t -> root(t^2-2,[1,2])+").unwrap();
        assert_eq!(parse_cut(&cut.to_string()).unwrap(), cut);
    }
}
