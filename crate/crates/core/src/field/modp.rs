//! Polynomials over the prime field F_p for word-sized p, plus Cantor–Zassenhaus.

use num_bigint::BigUint;
use rand::Rng;

pub(crate) type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| x * (c % p) % p).collect())
}

pub(crate) fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        q[k] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * bj % p) % p;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    div_rem(a, b, p).1
}

pub(crate) fn monic(a: &[u64], p: u64) -> Fp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`,
/// `deg s < deg b`, `deg t < deg a`.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Fp, Fp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    debug_assert_eq!(r0.len(), 1, "ext_gcd on non-coprime inputs");
    let inv = inv_mod(r0[0], p);
    (scale(&s0, inv, p), scale(&t0, inv, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> Fp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn pow_rem(base: &[u64], e: &BigUint, modulus: &[u64], p: u64) -> Fp {
    let mut acc = vec![1u64];
    let mut b = rem(base, modulus, p);
    for i in 0..e.bits() {
        if e.bit(i) {
            acc = rem(&mul(&acc, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
    }
    acc
}

/// Distinct-degree factorization of a monic square-free `f`.
fn distinct_degree(f: &[u64], p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut d = 0;
    while f.len() > 2 * (d + 1) {
        d += 1;
        h = pow_rem(&h, &BigUint::from(p), &f, p);
        let g = gcd(&f, &sub(&h, &x, p), p);
        if g.len() > 1 {
            out.push((g.clone(), d));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    if f.len() > 1 {
        let deg = f.len() - 1;
        out.push((f, deg));
    }
    out
}

/// Equal-degree splitting for odd p.
fn equal_degree<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Fp> {
    let n = f.len() - 1;
    if n == d {
        return vec![f.to_vec()];
    }
    let e = (num_traits::pow(BigUint::from(p), d) - 1u32) / 2u32;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let g = gcd(&a, f, p);
        let split = if g.len() > 1 {
            g
        } else {
            let b = pow_rem(&a, &e, f, p);
            gcd(&sub(&b, &[1], p), f, p)
        };
        if split.len() > 1 && split.len() < f.len() {
            let other = div_rem(f, &split, p).0;
            let mut out = equal_degree(&split, d, p, rng);
            out.extend(equal_degree(&monic(&other, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic square-free polynomial over F_p, p odd.
pub(crate) fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<Fp> {
    let mut out = Vec::new();
    for (g, d) in distinct_degree(f, p) {
        out.extend(equal_degree(&g, d, p, rng));
    }
    out
}
