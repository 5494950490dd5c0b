//! Arbitrary-precision rationals and their `"p/q"` string form.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::{Error, Result};

/// Exact rational number, always stored reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from small integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses `"p/q"` or a bare integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidInput(format!("bad rational {s:?}: {e}")))
}

/// Formats as `"p/q"`, or just `"p"` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fractional part in `[0, 1)`.
pub fn frac_part(r: &Rational) -> Rational {
    let f = r - r.floor();
    debug_assert!(!f.is_negative() && f < Rational::one());
    f
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-5/7", "0", "12"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(fmt_rational(&r), s);
        }
        assert_eq!(fmt_rational(&parse_rational("4/6").unwrap()), "2/3");
    }

    #[test]
    fn frac_part_lands_in_unit_interval() {
        assert_eq!(frac_part(&rat(-1, 2)), rat(1, 2));
        assert_eq!(frac_part(&rat(7, 3)), rat(1, 3));
        assert!(frac_part(&rat(4, 2)).is_zero());
    }
}
