//! Exact rational scalars and Z/2 parities.

use std::fmt;
use std::ops::{Add, AddAssign};

use num::bigint::BigInt;
use num::{One, Signed, Zero};

/// The ground field: exact rationals, always kept in lowest terms.
pub type Scalar = num::BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or an integer. Decimal notation is rejected.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    let parse_int = |s: &str| -> Option<BigInt> {
        let s = s.strip_prefix('+').unwrap_or(s);
        if s.is_empty() || !s.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        s.parse().ok()
    };
    match text.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(Scalar::new(n, d))
        }
        None => parse_int(text).map(Scalar::from_integer),
    }
}

pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Writes `c*label` with the sign folded in, used by the pretty printers.
pub(crate) fn write_term(out: &mut String, first: bool, coeff: &Scalar, label: &str) {
    let neg = coeff.is_negative();
    let abs = coeff.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if label.is_empty() {
        out.push_str(&format_scalar(&abs));
    } else if abs.is_one() {
        out.push_str(label);
    } else {
        out.push_str(&format_scalar(&abs));
        out.push_str(label);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: usize) -> Self {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The Koszul sign `(-1)^{|a||b|}` as `+1` or `-1`.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl AddAssign for Parity {
    fn add_assign(&mut self, rhs: Parity) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Multiplies by `sign` (`+1` or `-1`) without going through a bignum product.
pub(crate) fn signed(sign: i64, value: Scalar) -> Scalar {
    if sign < 0 {
        -value
    } else {
        value
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_addition_is_mod_two() {
        assert_eq!(Parity::Odd + Parity::Odd, Parity::Even);
        assert_eq!(Parity::Odd + Parity::Even, Parity::Odd);
        assert_eq!(Parity::Odd.koszul(Parity::Odd), -1);
        assert_eq!(Parity::Even.koszul(Parity::Odd), 1);
    }

    #[test]
    fn parse_rejects_decimals() {
        assert_eq!(parse_scalar("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_scalar("-7"), Some(int(-7)));
        assert_eq!(parse_scalar("+2/-4"), Some(ratio(-1, 2)));
        assert_eq!(parse_scalar("0.5"), None);
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(parse_scalar("1e3"), None);
    }

    #[test]
    fn lowest_terms() {
        let s = parse_scalar("10/-4").unwrap();
        assert_eq!(format_scalar(&s), "-5/2");
    }
}
