//! Exact non-negative fixed-point arithmetic with four decimal digits.
//!
//! Membership values, path lengths, distances and statuses are all sums and
//! differences of decimal inputs, so they are represented as integer counts
//! of ten-thousandths. Addition, subtraction, min, max and equality are exact;
//! there is no rounding anywhere.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Sub};
use std::str::FromStr;

use thiserror::Error;

const UNITS_PER_ONE: u64 = 10_000;
const FRACTION_DIGITS: usize = 4;

/// A non-negative decimal with at most four fractional digits, stored exactly.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(u64);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(UNITS_PER_ONE);

    /// Builds a scalar from a raw count of ten-thousandths.
    pub const fn from_ten_thousandths(units: u64) -> Scalar {
        Scalar(units)
    }

    /// The raw count of ten-thousandths.
    pub const fn ten_thousandths(self) -> u64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Exact subtraction, `None` when the result would be negative.
    pub const fn checked_sub(self, rhs: Scalar) -> Option<Scalar> {
        match self.0.checked_sub(rhs.0) {
            Some(units) => Some(Scalar(units)),
            None => None,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl Sub for Scalar {
    type Output = Scalar;

    fn sub(self, rhs: Scalar) -> Scalar {
        match self.checked_sub(rhs) {
            Some(units) => units,
            None => panic!("scalar subtraction underflow: {self} - {rhs}"),
        }
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, Add::add)
    }
}

impl fmt::Display for Scalar {
    /// Always renders the full four fractional digits, e.g. `0.3000`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}.{:04}",
            self.0 / UNITS_PER_ONE,
            self.0 % UNITS_PER_ONE
        )
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Why a decimal literal could not be read as a [`Scalar`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty decimal literal")]
    Empty,
    #[error("invalid decimal literal `{0}`")]
    InvalidLiteral(String),
    #[error("`{0}` has more than {FRACTION_DIGITS} fractional digits")]
    TooPrecise(String),
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Parses a non-negative decimal literal with at most four fractional
    /// digits, e.g. `0`, `1`, `0.35`, `2.0001`. No rounding: literals with
    /// more fractional digits are rejected even if the extra digits are zero.
    fn from_str(s: &str) -> Result<Scalar, ParseScalarError> {
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseScalarError::InvalidLiteral(s.to_owned()));
        }
        if s.contains('.')
            && (frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()))
        {
            return Err(ParseScalarError::InvalidLiteral(s.to_owned()));
        }
        if frac_part.len() > FRACTION_DIGITS {
            return Err(ParseScalarError::TooPrecise(s.to_owned()));
        }
        let whole: u64 = int_part
            .parse()
            .map_err(|_| ParseScalarError::InvalidLiteral(s.to_owned()))?;
        let mut frac: u64 = 0;
        for b in frac_part.bytes() {
            frac = frac * 10 + u64::from(b - b'0');
        }
        frac *= 10u64.pow((FRACTION_DIGITS - frac_part.len()) as u32);
        Ok(Scalar(whole * UNITS_PER_ONE + frac))
    }
}
