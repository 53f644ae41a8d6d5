use num_traits::Zero;

use super::{FieldElem, Rational};

fn trimmed<F: FieldElem>(a: &[F]) -> Vec<F> {
    let mut v = a.to_vec();
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rem<F: FieldElem>(a: &[F], b: &[F]) -> Vec<F> {
    let db = b.len() - 1;
    let inv = F::one().div(&b[db]);
    let mut r = a.to_vec();
    while r.len() > db {
        let c = r.last().unwrap().mul(&inv);
        let shift = r.len() - 1 - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&c.mul(bj));
        }
        r.pop();
        r = trimmed(&r);
    }
    r
}

/// Resultant of two polynomials (coefficients indexed by degree) over a
/// field, by the Euclidean recurrence
/// `Res(A, B) = (-1)^{mn} lc(B)^{m - deg R} Res(B, R)`, `R = A mod B`.
pub fn resultant<F: FieldElem>(a: &[F], b: &[F]) -> F {
    let mut a = trimmed(a);
    let mut b = trimmed(b);
    if a.is_empty() || b.is_empty() {
        return F::zero();
    }
    let mut acc = F::one();
    loop {
        let m = a.len() - 1;
        let n = b.len() - 1;
        if n == 0 {
            return acc.mul(&b[0].pow(m));
        }
        if m == 0 {
            return acc.mul(&a[0].pow(n));
        }
        let r = rem(&a, &b);
        if r.is_empty() {
            return F::zero();
        }
        let dr = r.len() - 1;
        if (m * n) % 2 == 1 {
            acc = acc.neg();
        }
        acc = acc.mul(&b[n].pow(m - dr));
        a = b;
        b = r;
    }
}

/// Newton interpolation: coefficients (by degree) of the unique polynomial of
/// degree < `nodes.len()` taking `values[i]` at `nodes[i]`.
pub fn interpolate<F: FieldElem>(nodes: &[Rational], values: &[F]) -> Vec<F> {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let denom = &nodes[i] - &nodes[i - j];
            assert!(!Zero::is_zero(&denom), "repeated interpolation node");
            dd[i] = dd[i].sub(&dd[i - 1]).mul(&F::from_rational(
                &(Rational::from_integer(1.into()) / denom),
            ));
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs: Vec<F> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // coeffs * (x - nodes[i]) + dd[i]
        let mut next = vec![F::zero(); coeffs.len() + 1];
        let xi = F::from_rational(&nodes[i]);
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&xi));
        }
        next[0] = next[0].add(&dd[i]);
        coeffs = next;
    }
    trimmed(&coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, Poly, RatFunc};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(t - 1, t - 3) = (1 - 3) = -2 ... with Res(A,B) = prod B(roots of A) = B(1) = -2
        assert_eq!(resultant(&q(&[-1, 1]), &q(&[-3, 1])), int(-2));
        // Res(t^2 - 2, t^2 - 3) = prod over ±sqrt2 of (2 - 3) = 1
        assert_eq!(resultant(&q(&[-2, 0, 1]), &q(&[-3, 0, 1])), int(1));
        // Common root gives zero.
        assert_eq!(resultant(&q(&[-1, 0, 1]), &q(&[1, 1])), int(0));
    }

    #[test]
    fn resultant_matches_sylvester_on_small_case() {
        // Res(2t^2 + 3t + 1, t + 5): lc(A)^1 * prod A-roots B = B-evaluated form
        // equals (-1)^{2} * A(-5) * 1^2 = 2*25 - 15 + 1 = 36.
        assert_eq!(resultant(&q(&[1, 3, 2]), &q(&[5, 1])), int(36));
    }

    #[test]
    fn resultant_over_rational_functions() {
        // Res_y(y^2 - t, y^2 - 2t) = (t - 2t)^2 = t^2
        let t = RatFunc::t();
        let a = vec![-&t, RatFunc::zero(), RatFunc::one()];
        let b = vec![-(&t + &t), RatFunc::zero(), RatFunc::one()];
        assert_eq!(
            resultant(&a, &b),
            RatFunc::from_poly(Poly::from_ints(&[0, 0, 1]))
        );
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::from_ints(&[3, -1, 0, 2]);
        let nodes: Vec<Rational> = (0..5).map(int).collect();
        let values: Vec<Rational> = nodes.iter().map(|x| p.eval(x)).collect();
        assert_eq!(Poly::new(interpolate(&nodes, &values)), p);
    }
}
