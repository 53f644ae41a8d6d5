#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use realpv::field::{Poly, RatFunc, Rational};
use realpv::realalg::RealAlgebraic;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn poly(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

/// A coefficient `a = sum r_i p_i'/p_i` built from known residues.
#[derive(Clone, Debug)]
pub struct KummerCase {
    pub a: RatFunc,
    pub residues: Vec<(Poly, Rational)>,
    /// lcm of the residue denominators, computed here and not by the library.
    pub n: u32,
}

/// Monic irreducibles over Q: `t - k` or `t^2 + b t + c` with negative discriminant.
fn random_irreducible(rng: &mut TestRng) -> Poly {
    if rng.gen_bool(0.6) {
        poly(&[-rng.gen_range(-5..=5), 1])
    } else {
        loop {
            let b = rng.gen_range(-3..=3);
            let c = rng.gen_range(1..=6);
            if b * b - 4 * c < 0 {
                return poly(&[c, b, 1]);
            }
        }
    }
}

pub fn residue_coefficient(residues: &[(Poly, Rational)]) -> RatFunc {
    residues.iter().fold(RatFunc::zero(), |acc, (p, r)| {
        &acc + &RatFunc::new(p.derivative().scale(r), p.clone())
    })
}

/// Random residue configurations with `1..=max_terms` poles and residue
/// denominators in `1..=max_den`, keeping only those with `n >= 2`.
pub fn random_kummer(rng: &mut TestRng, max_terms: usize, max_den: i64) -> KummerCase {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let mut residues: Vec<(Poly, Rational)> = Vec::new();
        while residues.len() < k {
            let p = random_irreducible(rng);
            if residues.iter().any(|(q, _)| *q == p) {
                continue;
            }
            let den = rng.gen_range(1..=max_den);
            let num = loop {
                let v = rng.gen_range(-6..=6);
                if v != 0 {
                    break v;
                }
            };
            residues.push((p, rat(num, den)));
        }
        let n = residues
            .iter()
            .fold(BigInt::one(), |acc, (_, r)| acc.lcm(r.denom()));
        let n: u32 = n.try_into().unwrap();
        if n >= 2 {
            return KummerCase {
                a: residue_coefficient(&residues),
                residues,
                n,
            };
        }
    }
}

/// Kummer case whose exponent is exactly `n`.
pub fn kummer_with_exponent(rng: &mut TestRng, n: u32) -> KummerCase {
    loop {
        let c = random_kummer(rng, 3, n as i64);
        if c.n == n {
            return c;
        }
    }
}

pub fn sqrt(k: i64) -> RealAlgebraic {
    RealAlgebraic::from_root(
        &poly(&[-k, 0, 1]),
        rat(0, 1),
        Rational::from_integer(k.max(1).into()),
    )
    .unwrap()
}

pub fn random_rational(rng: &mut TestRng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// Rationals, square roots and a few quadratic and cubic irrationals.
pub fn random_ralg(rng: &mut TestRng) -> RealAlgebraic {
    match rng.gen_range(0..5) {
        0 | 1 => RealAlgebraic::from_rational(random_rational(rng, 9)),
        2 => {
            let s = sqrt(*[2, 3, 5, 6, 7].get(rng.gen_range(0..5)).unwrap());
            let s = if rng.gen_bool(0.5) { s.neg() } else { s };
            s.add_rational(&random_rational(rng, 4))
        }
        3 => {
            let k = rng.gen_range(2..=5);
            let r = RealAlgebraic::from_root(&poly(&[-k, 0, 0, 1]), rat(0, 1), rat(k, 1)).unwrap();
            if rng.gen_bool(0.5) {
                r.neg()
            } else {
                r
            }
        }
        _ => {
            // Golden-ratio style: root of t^2 - t - k.
            let k = rng.gen_range(1..=4);
            let p = poly(&[-k, -1, 1]);
            if rng.gen_bool(0.5) {
                RealAlgebraic::from_root(&p, rat(1, 1), rat(k + 1, 1)).unwrap()
            } else {
                RealAlgebraic::from_root(&p, rat(-k, 1), rat(0, 1)).unwrap()
            }
        }
    }
}

/// Non-zero random real algebraic number.
pub fn random_nonzero_ralg(rng: &mut TestRng) -> RealAlgebraic {
    loop {
        let x = random_ralg(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A float approximation good to about 1e-12, independent of comparison.
pub fn approx(x: &RealAlgebraic) -> f64 {
    x.approx(14).parse().unwrap()
}

/// Sign of a non-zero rational function as `t -> +inf` or `t -> -inf`,
/// read off leading coefficients and degrees.
pub fn sign_at_infinity(f: &RatFunc, plus: bool) -> i8 {
    let lc = f.num().lc() / f.den().lc();
    let mut s = if lc > Rational::zero() { 1 } else { -1 };
    let parity = (f.num().degree() + f.den().degree()) % 2;
    if !plus && parity == 1 {
        s = -s;
    }
    s
}

pub fn proper_divisors(n: u32) -> Vec<u32> {
    (1..n).filter(|m| n.is_multiple_of(*m)).collect()
}

pub mod strategies {
    use proptest::prelude::*;

    use super::*;
    use realpv::realalg::OrderingCut;

    pub fn poly_up_to(max_degree: usize, bound: i64) -> impl Strategy<Value = Poly> {
        prop::collection::vec(-bound..=bound, 0..=max_degree + 1).prop_map(|c| Poly::from_ints(&c))
    }

    pub fn nonzero_poly(max_degree: usize, bound: i64) -> impl Strategy<Value = Poly> {
        poly_up_to(max_degree, bound).prop_filter("non-zero", |p| !p.is_zero())
    }

    pub fn ratfunc(max_degree: usize, bound: i64) -> impl Strategy<Value = RatFunc> {
        (
            poly_up_to(max_degree, bound),
            nonzero_poly(max_degree, bound),
        )
            .prop_map(|(n, d)| RatFunc::new(n, d))
    }

    pub fn nonzero_ratfunc(max_degree: usize, bound: i64) -> impl Strategy<Value = RatFunc> {
        ratfunc(max_degree, bound).prop_filter("non-zero", |f| !f.is_zero())
    }

    pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
        (-bound..=bound, 1..=bound).prop_map(|(n, d)| rat(n, d))
    }

    pub fn ralg() -> impl Strategy<Value = RealAlgebraic> {
        any::<u64>().prop_map(|s| random_ralg(&mut rng(s)))
    }

    pub fn nonzero_ralg() -> impl Strategy<Value = RealAlgebraic> {
        any::<u64>().prop_map(|s| random_nonzero_ralg(&mut rng(s)))
    }

    pub fn kummer(max_terms: usize, max_den: i64) -> impl Strategy<Value = KummerCase> {
        any::<u64>().prop_map(move |s| random_kummer(&mut rng(s), max_terms, max_den))
    }

    pub fn cut() -> impl Strategy<Value = OrderingCut> {
        prop_oneof![
            Just(OrderingCut::PlusInfinity),
            Just(OrderingCut::MinusInfinity),
            ralg().prop_map(OrderingCut::RightOf),
            ralg().prop_map(OrderingCut::LeftOf),
        ]
    }
}
