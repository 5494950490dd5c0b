//! Minimal univariate polynomial arithmetic over the rationals, used by
//! the cyclotomic representation and the module-splitting machinery.
//! Coefficient vectors are ascending; the zero polynomial is the empty
//! vector.

use num_traits::{One, Zero};

use super::rational::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &Poly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// `x^n + c`
pub(crate) fn x_pow_plus(n: usize, c: Rational) -> Poly {
    let mut p = vec![Rational::zero(); n + 1];
    p[0] = c;
    p[n] = One::one();
    p
}

pub(crate) fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder by a nonzero divisor.
pub(crate) fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.clone();
    let mut quot = vec![Rational::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let f = &rem[dr] * &lead_inv;
        quot[dr - db] = f.clone();
        for i in 0..=db {
            let t = &b[i] * &f;
            rem[dr - db + i] -= t;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Exact division; panics if the remainder is nonzero.
pub(crate) fn div_exact(a: &Poly, b: &Poly) -> Poly {
    let (q, r) = div_rem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Monic gcd.
pub(crate) fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (trim(a.clone()), trim(b.clone()));
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let inv = x[d].recip();
        x = x.iter().map(|c| c * &inv).collect();
    }
    x
}

pub(crate) fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from(num_bigint::BigInt::from(i as i64)))
            .collect(),
    )
}

pub(crate) fn eval(p: &Poly, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn division_round_trip() {
        let a = vec![rat(-1, 1), rat(0, 1), rat(0, 1), rat(1, 1)]; // x³ - 1
        let b = vec![rat(-1, 1), rat(1, 1)]; // x - 1
        let q = div_exact(&a, &b);
        assert_eq!(q, vec![rat(1, 1), rat(1, 1), rat(1, 1)]);
        assert_eq!(mul(&q, &b), a);
    }

    #[test]
    fn gcd_detects_common_factor() {
        let a = vec![rat(-1, 1), rat(0, 1), rat(1, 1)]; // x² - 1
        let b = vec![rat(1, 1), rat(1, 1)]; // x + 1
        assert_eq!(gcd(&a, &b), b);
        assert_eq!(eval(&a, &rat(3, 1)), rat(8, 1));
        assert_eq!(derivative(&a), vec![rat(0, 1), rat(2, 1)]);
    }
}
