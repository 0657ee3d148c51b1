//! JSON shapes for exact values.
//!
//! Integers travel as decimal strings so no consumer truncates them to 64
//! bits:
//!
//! * rational: `{"num": "-3", "den": "4"}`
//! * polynomial: `{"coeffs": [rational, ...]}`, ascending degree
//! * rational function: `{"num": polynomial, "den": polynomial,
//!   "unreduced_deg_num": int, "unreduced_deg_den": int}`

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Polynomial, RationalFunction};
use crate::{Integer, QPolynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        Self { num: r.numer().to_string(), den: r.denom().to_string() }
    }
}

impl TryFrom<&RationalJson> for Rational {
    type Error = String;

    fn try_from(j: &RationalJson) -> Result<Self, String> {
        let num: Integer = j.num.parse().map_err(|e| format!("bad numerator {:?}: {e}", j.num))?;
        let den: Integer = j.den.parse().map_err(|e| format!("bad denominator {:?}: {e}", j.den))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rational::new(num, den))
    }
}

/// `#[serde(with = "rational")]` adapter for [`Rational`] fields.
pub mod rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        RationalJson::from(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        Rational::try_from(&RationalJson::deserialize(d)?).map_err(D::Error::custom)
    }
}

/// `#[serde(with = "integer")]` adapter writing [`Integer`] as a decimal string.
pub mod integer {
    use super::*;

    pub fn serialize<S: Serializer>(n: &Integer, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Integer, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    coeffs: Vec<RationalJson>,
}

impl Serialize for Polynomial<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolynomialJson { coeffs: self.coeffs().iter().map(RationalJson::from).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial<Rational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(d)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(Rational::try_from)
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(Polynomial::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RationalFunctionJson {
    num: QPolynomial,
    den: QPolynomial,
    unreduced_deg_num: i64,
    unreduced_deg_den: usize,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalFunctionJson {
            num: self.numerator().clone(),
            den: self.denominator().clone(),
            // the zero polynomial has degree -1 on the wire
            unreduced_deg_num: self.unreduced_deg_num().map_or(-1, |d| d as i64),
            unreduced_deg_den: self.unreduced_deg_den(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RationalFunctionJson::deserialize(d)?;
        let deg_num = usize::try_from(raw.unreduced_deg_num).ok();
        RationalFunction::from_parts(raw.num, raw.den, deg_num, raw.unreduced_deg_den)
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, reduce};
    use proptest::prelude::*;

    #[test]
    fn rational_shape() {
        #[derive(Serialize, Deserialize, PartialEq, Debug)]
        struct W(#[serde(with = "rational")] Rational);
        let top: Integer = (Integer::from(1) << 70u32) + 1u32;
        let big = Rational::new(top.clone(), Integer::from(-3));
        let text = serde_json::to_string(&W(big.clone())).unwrap();
        assert_eq!(text, format!(r#"{{"num":"-{top}","den":"3"}}"#));
        assert_eq!(serde_json::from_str::<W>(&text).unwrap(), W(big));
        assert!(serde_json::from_str::<W>(r#"{"num":"1","den":"0"}"#).is_err());
    }

    #[test]
    fn rational_function_shape() {
        let num = QPolynomial::new(vec![rat(0, 1), rat(-1, 3), rat(0, 1), rat(1, 3)]);
        let den = QPolynomial::new(vec![rat(0, 1), rat(-1, 1), rat(0, 1), rat(1, 1)]);
        let f = reduce(&num, &den).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(
            text,
            r#"{"num":{"coeffs":[{"num":"1","den":"1"}]},"den":{"coeffs":[{"num":"3","den":"1"}]},"unreduced_deg_num":3,"unreduced_deg_den":3}"#
        );
        assert_eq!(serde_json::from_str::<RationalFunction>(&text).unwrap(), f);
        // non-canonical input is rejected
        let bad = text.replace(r#""3""#, r#""6""#).replacen(r#""1""#, r#""2""#, 1);
        assert!(serde_json::from_str::<RationalFunction>(&bad).is_err());
    }

    proptest! {
        #[test]
        fn polynomial_round_trip(cs in prop::collection::vec((-1000i64..1000, 1i64..50), 0..6)) {
            let p = QPolynomial::new(cs.into_iter().map(|(n, d)| rat(n, d)).collect());
            let text = serde_json::to_string(&p).unwrap();
            prop_assert_eq!(serde_json::from_str::<QPolynomial>(&text).unwrap(), p);
        }
    }
}
