//! The real quadratic field `Q(√d)` with exact component arithmetic.

use std::fmt;

use super::field::{ExactField, ExactScalar};
use super::rational::{fmt_rational, Rational};
use crate::{Error, Result};

/// `a + b·√d` with `d` square-free and positive.
///
/// Purely rational values are canonicalised to `b = 0, d = 0`, so
/// values of different quadratic fields compare equal exactly when both
/// are rational and agree. Mixing two genuinely different fields in one
/// arithmetic expression is a programming error and panics; the public
/// entry points validate field tags before any arithmetic happens.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

/// Returns `d` if it is square-free and at least 2.
pub(crate) fn check_discriminant(d: u64) -> Result<u64> {
    if d < 2 {
        return Err(Error::InvalidInput(format!(
            "quadratic discriminant must be >= 2, got {d}"
        )));
    }
    let mut m = d;
    let mut f = 2u64;
    while f * f <= m {
        if m % (f * f) == 0 {
            return Err(Error::InvalidInput(format!("{d} is not square-free")));
        }
        while m % f == 0 {
            m /= f;
        }
        f += 1;
    }
    Ok(d)
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            QuadExt {
                a,
                b,
                d: 0,
            }
        } else {
            debug_assert!(check_discriminant(d).is_ok(), "bad discriminant {d}");
            QuadExt { a, b, d }
        }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    /// `√d` itself.
    pub fn sqrt_d(d: u64) -> Self {
        QuadExt::new(Rational::zero(), ExactScalar::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    /// Field tag: `None` for rational values.
    pub fn discriminant(&self) -> Option<u64> {
        if self.b.is_zero() {
            None
        } else {
            Some(self.d)
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Galois conjugate `a - b·√d`.
    pub fn conjugate(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    fn joined_d(&self, other: &Self) -> u64 {
        match (self.b.is_zero(), other.b.is_zero()) {
            (true, true) => 0,
            (true, false) => other.d,
            (false, true) => self.d,
            (false, false) => {
                assert_eq!(
                    self.d, other.d,
                    "arithmetic across distinct quadratic fields"
                );
                self.d
            }
        }
    }
}

impl ExactScalar for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::from_rational(ExactScalar::one())
    }
    fn add(&self, other: &Self) -> Self {
        QuadExt::new(&self.a + &other.a, &self.b + &other.b, self.joined_d(other))
    }
    fn sub(&self, other: &Self) -> Self {
        QuadExt::new(&self.a - &other.a, &self.b - &other.b, self.joined_d(other))
    }
    fn mul(&self, other: &Self) -> Self {
        let d = self.joined_d(other);
        let surd_sq = Rational::from(num_bigint::BigInt::from(d));
        let a = &self.a * &other.a + (&self.b * &other.b) * &surd_sq;
        let b = &self.a * &other.b + &self.b * &other.a;
        QuadExt::new(a, b, d)
    }
    fn neg(&self) -> Self {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn from_int(n: i64) -> Self {
        QuadExt::from_rational(ExactScalar::from_int(n))
    }
}

impl ExactField for QuadExt {
    fn inv(&self) -> Self {
        assert!(!ExactScalar::is_zero(self), "inverse of zero");
        // 1/(a + b√d) = (a - b√d) / (a² - b²d); the norm only vanishes
        // at zero because d is not a square.
        let surd_sq = Rational::from(num_bigint::BigInt::from(self.d));
        let norm = &self.a * &self.a - (&self.b * &self.b) * surd_sq;
        let ninv = norm.recip();
        QuadExt::new(&self.a * &ninv, -(&self.b * &ninv), self.d)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", fmt_rational(&self.a))
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", fmt_rational(&self.b), self.d)
        } else {
            write!(
                f,
                "{} + {}*sqrt({})",
                fmt_rational(&self.a),
                fmt_rational(&self.b),
                self.d
            )
        }
    }
}
