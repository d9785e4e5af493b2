//! Exact rational numbers for threshold comparisons.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// Exact rational with `i64` numerator and denominator, always reduced.
pub type Rational = Ratio<i64>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// JSON form of a rational: `{"num": .., "den": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: i64,
    pub den: i64,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        RationalJson {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl From<RationalJson> for Rational {
    fn from(r: RationalJson) -> Self {
        Rational::new(r.num, r.den)
    }
}

/// A compared quantity in a condition report: exact rational or +∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quantity {
    Finite(Rational),
    Infinity,
}

impl Quantity {
    pub fn int(v: i64) -> Self {
        Quantity::Finite(int(v))
    }
}

impl From<Rational> for Quantity {
    fn from(r: Rational) -> Self {
        Quantity::Finite(r)
    }
}

impl Serialize for Quantity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Quantity::Finite(r) => RationalJson::from(*r).serialize(s),
            Quantity::Infinity => s.serialize_str("infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let q = Quantity::Finite(frac(55, 3));
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"{"num":55,"den":3}"#);
        assert_eq!(serde_json::to_string(&Quantity::Infinity).unwrap(), r#""infinity""#);
        assert!(Quantity::Infinity > Quantity::int(1_000_000));
    }
}
