//! Factorization over Q: square-free decomposition, then Zassenhaus
//! (modular factorization, Hensel lifting, subset recombination).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Fp};
use super::poly::{zp_primitive, zp_trim};
use super::{squarefree_factor, Poly};
use crate::error::Result;

const PRIMES: [u64; 24] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Monic irreducible factors over Q with multiplicities, product equal to
/// `monic(p)`. Sorted by the polynomial order.
pub fn factor(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let mut out = Vec::new();
    for (sf, mult) in squarefree_factor(p)? {
        for g in factor_squarefree(&sf) {
            out.push((g, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Monic irreducible factors of a square-free polynomial of positive degree.
pub fn factor_squarefree(p: &Poly) -> Vec<Poly> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let f = p.integer_primitive().1;
    let mut out: Vec<Poly> = zassenhaus(&f)
        .into_iter()
        .map(|g| Poly::from_bigints(&g).monic())
        .collect();
    out.sort();
    out
}

fn mod_pos(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce_u64(f: &[BigInt], p: u64) -> Fp {
    let pb = BigInt::from(p);
    let mut v: Fp = f
        .iter()
        .map(|c| mod_pos(c, &pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

// Polynomials over Z/mZ with BigInt residues in [0, m).
fn zm(v: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    zp_trim(v.into_iter().map(|c| mod_pos(&c, m)).collect())
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect(),
        m,
    )
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
            .collect(),
        m,
    )
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm(out, m)
}

/// Division by a monic polynomial over Z/mZ.
fn zm_div_rem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mod_pos(&r[k + db], m);
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (zm(q, m), zm(r, m))
}

fn lift_u64(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// to the same identities mod `m^2`. `h` monic.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m2: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let e = zm_sub(f, &zm_mul(g, h, m2), m2);
    let (q, r) = zm_div_rem_monic(&zm_mul(s, &e, m2), h, m2);
    let g2 = zm_add(g, &zm_add(&zm_mul(t, &e, m2), &zm_mul(&q, g, m2), m2), m2);
    let h2 = zm_add(h, &r, m2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g2, m2), &zm_mul(t, &h2, m2), m2),
        &[BigInt::one()],
        m2,
    );
    let (c, d) = zm_div_rem_monic(&zm_mul(s, &b, m2), &h2, m2);
    let s2 = zm_sub(s, &d, m2);
    let t2 = zm_sub(t, &zm_add(&zm_mul(t, &b, m2), &zm_mul(&c, &g2, m2), m2), m2);
    (g2, h2, s2, t2)
}

/// Lifts a factorization of the monic `f` (mod p) into monic factors mod `pk`.
fn hensel_lift(f: &[BigInt], factors: &[Fp], p: u64, pk: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![zm(f.to_vec(), pk)];
    }
    let mid = factors.len() / 2;
    let prod = |fs: &[Fp]| fs.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let g0 = prod(&factors[..mid]);
    let h0 = prod(&factors[mid..]);
    let (s0, t0) = modp::ext_gcd(&g0, &h0, p);
    let (mut g, mut h) = (lift_u64(&g0), lift_u64(&h0));
    let (mut s, mut t) = (lift_u64(&s0), lift_u64(&t0));
    let mut m = BigInt::from(p);
    while &m < pk {
        let m2 = &m * &m;
        let fm = zm(f.to_vec(), &m2);
        (g, h, s, t) = hensel_step(&fm, &g, &h, &s, &t, &m2);
        m = m2;
    }
    let g = zm(g, pk);
    let h = zm(h, pk);
    let mut out = hensel_lift(&g, &factors[..mid], p, pk);
    out.extend(hensel_lift(&h, &factors[mid..], p, pk));
    out
}

/// Exact division over Z; `None` when `b` does not divide `a`.
fn z_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
        }
        q[k] = c;
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors over Z of a primitive square-free polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let f = zp_primitive(f);
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    // Strip the trivial factor t.
    if f[0].is_zero() {
        let rest = zp_primitive(&f[1..]);
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        if rest.len() > 1 {
            out.extend(zassenhaus(&rest));
        }
        return out;
    }
    let lc = f[n].clone();

    // Pick the prime (among a few admissible ones) with fewest modular factors.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(u64, Vec<Fp>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = reduce_u64(&f, p);
        if fp.len() != f.len() {
            continue;
        }
        let fpm = modp::monic(&fp, p);
        if modp::gcd(&fpm, &modp::derivative(&fpm, p), p).len() != 1 {
            continue;
        }
        let facs = modp::factor_squarefree(&fpm, p, &mut rng);
        if facs.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (p, facs) = best.expect("no admissible prime for a square-free polynomial");

    // Coefficient bound for factors (scaled by lc): |lc| * 2^n * (n+1) * max|a_i|.
    let max_coef = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * num_traits::pow(BigInt::from(2), n) * BigInt::from(n + 1) * max_coef;
    let pb = BigInt::from(p);
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
    }

    let lc_inv = lc.extended_gcd(&pk).x;
    let monic_f = zm(f.iter().map(|c| c * &lc_inv).collect(), &pk);
    let mut lifted = hensel_lift(&monic_f, &facs, p, &pk);

    let mut result = Vec::new();
    let mut rest = f.clone();
    let mut d = 1;
    while 2 * d <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), d) {
            let lc_rest = rest.last().unwrap().clone();
            let mut g = vec![lc_rest];
            for &i in &subset {
                g = zm_mul(&g, &lifted[i], &pk);
            }
            let g: Vec<BigInt> = zp_trim(g.iter().map(|c| symmetric(c, &pk)).collect());
            let g = zp_primitive(&g);
            if g.len() < 2 {
                continue;
            }
            if let Some(q) = z_exact_div(&rest, &g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                result.push(g);
                rest = zp_primitive(&q);
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => d += 1,
        }
    }
    if rest.len() > 1 {
        if rest.last().is_some_and(|c| c.sign() == Sign::Minus) {
            rest = rest.iter().map(|c| -c).collect();
        }
        result.push(rest);
    }
    result
}
