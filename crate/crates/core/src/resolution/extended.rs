use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// A value extended by minus infinity, ordered below everything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended<T> {
    NegInf,
    Finite(T),
}

pub type TValue = Extended<i64>;
pub type RateValue = Extended<Rational>;

impl<T: Copy> Extended<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Extended::NegInf => None,
            Extended::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, Extended::NegInf)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Extended<U> {
        match self {
            Extended::NegInf => Extended::NegInf,
            Extended::Finite(v) => Extended::Finite(f(v)),
        }
    }
}

impl TValue {
    pub fn to_rational(self) -> RateValue {
        self.map(Rational::from_integer)
    }
}

impl RateValue {
    /// Ceiling; minus infinity has none.
    pub fn ceil(self) -> Result<i64> {
        match self {
            Extended::NegInf => Err(Error::NegInfCeiling),
            Extended::Finite(r) => Ok(ceil_ratio(r)),
        }
    }
}

/// `⌈r⌉` by integer division.
pub fn ceil_ratio(r: Rational) -> i64 {
    Integer::div_ceil(r.numer(), r.denom())
}

/// `⌈a / b⌉` for `b > 0`.
pub fn ceil_div(a: i64, b: i64) -> i64 {
    assert!(b > 0, "ceil_div by nonpositive divisor");
    Integer::div_ceil(&a, &b)
}

pub fn fmt_rational(r: Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for TValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl fmt::Display for RateValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInf => f.write_str("-inf"),
            Extended::Finite(v) => f.write_str(&fmt_rational(*v)),
        }
    }
}

impl Serialize for TValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extended::NegInf => s.serialize_str("-inf"),
            Extended::Finite(v) => s.serialize_i64(*v),
        }
    }
}

impl Serialize for RateValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_ceilings() {
        let a: RateValue = Extended::NegInf;
        let b = Extended::Finite(Rational::new(-7, 2));
        assert!(a < b);
        assert_eq!(b.ceil().unwrap(), -3);
        assert_eq!(Extended::Finite(Rational::new(3, 2)).ceil().unwrap(), 2);
        assert_eq!(
            Extended::Finite(Rational::from_integer(2)).ceil().unwrap(),
            2
        );
        assert_eq!(a.ceil(), Err(Error::NegInfCeiling));
        assert_eq!(ceil_div(-1, 3), 0);
        assert_eq!(ceil_div(4, 3), 2);
        assert_eq!(ceil_div(-4, 3), -1);
        assert_eq!(b.to_string(), "-7/2");
        assert_eq!(a.to_string(), "-inf");
    }
}
