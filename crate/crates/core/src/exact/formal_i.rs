//! Formal extension by `i` on top of a real exact field.

use std::fmt;

use super::field::{ExactField, ExactScalar};

/// `re + i·im` with `i² = -1`. The base field is real, so the norm
/// `re² + im²` vanishes only at zero and inversion stays exact.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalI<F> {
    pub re: F,
    pub im: F,
}

impl<F: ExactField> FormalI<F> {
    pub fn new(re: F, im: F) -> Self {
        FormalI { re, im }
    }

    pub fn from_real(re: F) -> Self {
        FormalI {
            re,
            im: F::zero(),
        }
    }

    pub fn i() -> Self {
        FormalI {
            re: F::zero(),
            im: F::one(),
        }
    }

    /// Conjugation `i ↦ -i`.
    pub fn conjugate(&self) -> Self {
        FormalI {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl<F: ExactField> ExactScalar for FormalI<F> {
    fn zero() -> Self {
        FormalI::from_real(F::zero())
    }
    fn one() -> Self {
        FormalI::from_real(F::one())
    }
    fn add(&self, other: &Self) -> Self {
        FormalI::new(self.re.add(&other.re), self.im.add(&other.im))
    }
    fn sub(&self, other: &Self) -> Self {
        FormalI::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }
    fn mul(&self, other: &Self) -> Self {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        FormalI::new(re, im)
    }
    fn neg(&self) -> Self {
        FormalI::new(self.re.neg(), self.im.neg())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_int(n: i64) -> Self {
        FormalI::from_real(F::from_int(n))
    }
}

impl<F: ExactField> ExactField for FormalI<F> {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let ninv = norm.inv();
        FormalI::new(self.re.mul(&ninv), self.im.mul(&ninv).neg())
    }
}

impl<F: ExactField + fmt::Display> fmt::Display for FormalI<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "({})*i", self.im)
        } else {
            write!(f, "{} + ({})*i", self.re, self.im)
        }
    }
}
