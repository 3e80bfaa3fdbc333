//! Exact rational scalars.

use alloc::string::String;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`.
    ///
    /// Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            None
        } else {
            Some(Scalar(BigRational::new(numer, denom)))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(Scalar(&self.0 / &rhs.0))
        }
    }

    /// Decimal rendering rounded half away from zero to `digits` fractional
    /// digits. Display only; the exact value is always the `Display` form.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = num_traits::pow(BigInt::from(10u32), digits);
        let numer = self.numer().abs() * &scale;
        let denom = self.denom();
        let (q, r) = numer.div_rem(denom);
        let scaled = if r * 2u32 >= *denom { q + 1u32 } else { q };
        let mut text = scaled.to_str_radix(10);
        if digits > 0 {
            if text.len() <= digits {
                let pad = digits + 1 - text.len();
                let mut padded = String::with_capacity(digits + 1);
                padded.extend(core::iter::repeat_n('0', pad));
                padded.push_str(&text);
                text = padded;
            }
            text.insert(text.len() - digits, '.');
        }
        if self.is_negative() && text.chars().any(|c| c != '0' && c != '.') {
            text.insert(0, '-');
        }
        text
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to read a rational literal.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid digits in rational literal")]
    InvalidDigits,
    #[error("zero denominator")]
    ZeroDenominator,
}

fn parse_digits(text: &str) -> Result<BigInt, ParseScalarError> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError::InvalidDigits);
    }
    BigInt::parse_bytes(text.as_bytes(), 10).ok_or(ParseScalarError::InvalidDigits)
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Accepts `p`, `-p`, `p/q` and `-p/q` with decimal digits and `q > 0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (numer, denom) = match body.split_once('/') {
            Some((p, q)) => (parse_digits(p)?, parse_digits(q)?),
            None => (parse_digits(body)?, BigInt::one()),
        };
        if denom.is_zero() {
            return Err(ParseScalarError::ZeroDenominator);
        }
        let numer = if negative { -numer } else { numer };
        Ok(Scalar(BigRational::new(numer, denom)))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_integer(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_integer(n.into())
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar(q)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like integer division.
binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl core::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}
