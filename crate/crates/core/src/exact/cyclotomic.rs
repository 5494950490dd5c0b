//! Exact values in cyclotomic fields `Q(ζ_e)`.
//!
//! A value is a coefficient vector on `1, ζ, …, ζ^{φ(e)-1}`, canonically
//! reduced modulo the `e`-th cyclotomic polynomial. Reduction makes
//! equality a plain coefficient comparison (after lifting to a common
//! conductor), and a value lying in `Q` always shows up as a constant
//! vector.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::ExactScalar;
use super::poly::{self, Poly};
use super::rational::{fmt_rational, Rational};

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    /// Length `deg Φ_e = φ(e)`; ascending powers of `ζ_e`.
    coeffs: Vec<Rational>,
}

fn rzero() -> Rational {
    Zero::zero()
}

fn divisors(e: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=e).filter(|d| e % d == 0).collect();
    out.sort_unstable();
    out
}

/// Coefficients of `Φ_e`, ascending, computed by peeling divisors off
/// `x^e - 1`.
pub(crate) fn cyclotomic_polynomial(e: u64) -> Poly {
    let mut table: Vec<(u64, Poly)> = Vec::new();
    for d in divisors(e) {
        let mut p = poly::x_pow_plus(d as usize, -Rational::from(num_bigint::BigInt::from(1)));
        for (d2, q) in &table {
            if d % d2 == 0 {
                p = poly::div_exact(&p, q);
            }
        }
        table.push((d, p));
    }
    table.pop().expect("e >= 1").1
}

#[cfg(test)]
pub(crate) fn euler_phi(e: u64) -> u64 {
    let mut n = e;
    let mut result = e;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            result -= result / f;
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

impl Cyclotomic {
    fn reduce(conductor: u64, raw: Poly) -> Self {
        let phi = cyclotomic_polynomial(conductor);
        let (_, rem) = poly::div_rem(&raw, &phi);
        let mut coeffs = rem;
        coeffs.resize(phi.len() - 1, rzero());
        Cyclotomic { conductor, coeffs }
    }

    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rational>) -> Self {
        assert!(conductor >= 1);
        Cyclotomic::reduce(conductor, coeffs)
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// `ζ_e^k`
    pub fn root_of_unity(e: u64, k: u64) -> Self {
        let mut raw = vec![rzero(); (k % e) as usize + 1];
        let last = raw.len() - 1;
        raw[last] = One::one();
        Cyclotomic::reduce(e, raw)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree of `Q(ζ_e)` over `Q`.
    pub fn field_degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Re-expresses the value in `Q(ζ_target)`; `target` must be a
    /// multiple of the conductor.
    pub fn lift(&self, target: u64) -> Cyclotomic {
        assert_eq!(target % self.conductor, 0, "conductor must divide target");
        if target == self.conductor {
            return self.clone();
        }
        let step = (target / self.conductor) as usize;
        let mut raw = vec![rzero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                raw[j * step] = c.clone();
            }
        }
        Cyclotomic::reduce(target, raw)
    }

    fn common(&self, other: &Self) -> (Cyclotomic, Cyclotomic) {
        let e = self.conductor.lcm(&other.conductor);
        (self.lift(e), other.lift(e))
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs.first().cloned().unwrap_or_else(Zero::zero))
        } else {
            None
        }
    }

    /// Galois automorphism `σ_k : ζ ↦ ζ^k`; `k` must be coprime to the
    /// conductor.
    pub fn galois(&self, k: u64) -> Cyclotomic {
        let e = self.conductor;
        let k = k % e;
        assert_eq!(k.gcd(&e), 1, "galois exponent not coprime to conductor");
        let mut raw = vec![rzero(); e as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !Zero::is_zero(c) {
                let idx = ((j as u64 * k) % e) as usize;
                raw[idx] += c;
            }
        }
        Cyclotomic::reduce(e, raw)
    }

    /// Complex conjugation `ζ ↦ ζ⁻¹`.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.conductor <= 2 {
            self.clone()
        } else {
            self.galois(self.conductor - 1)
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Total order on values of one conductor, used only to fix a
    /// deterministic presentation order for characters.
    pub fn lex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (a, b) = self.common(other);
        a.coeffs.iter().cmp(b.coeffs.iter())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl ExactScalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(rzero())
    }
    fn one() -> Self {
        Cyclotomic::from_rational(One::one())
    }
    fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.common(other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        Cyclotomic::reduce(a.conductor, poly::mul(&a.coeffs, &b.coeffs))
    }
    fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn from_int(n: i64) -> Self {
        Cyclotomic::from_rational(Rational::from(num_bigint::BigInt::from(n)))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", fmt_rational(&r));
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{}", fmt_rational(c))?;
            } else {
                write!(f, "{}*z{}^{}", fmt_rational(c), self.conductor, j)?;
            }
        }
        Ok(())
    }
}
