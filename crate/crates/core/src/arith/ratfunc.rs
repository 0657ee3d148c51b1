use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Integer, QPolynomial, Rational};

/// A reduced quotient of polynomials in canonical form.
///
/// Canonical means: numerator and denominator are coprime, both have integer
/// coefficients with no common content, and the denominator's leading
/// coefficient is positive. The degrees of the pair handed to [`reduce`]
/// are kept as metadata.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: QPolynomial,
    den: QPolynomial,
    unreduced_deg_num: Option<usize>,
    unreduced_deg_den: usize,
}

/// Reduce `num / den` to canonical form.
pub fn reduce(num: &QPolynomial, den: &QPolynomial) -> Result<RationalFunction> {
    let unreduced_deg_den = den.degree().ok_or(Error::ZeroDenominator)?;
    let unreduced_deg_num = num.degree();
    let (num, den) = if num.is_zero() {
        (QPolynomial::zero(), QPolynomial::one())
    } else {
        let g = num.gcd(den);
        (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
    };
    let (num, den) = normalize(num, den);
    Ok(RationalFunction { num, den, unreduced_deg_num, unreduced_deg_den })
}

fn normalize(num: QPolynomial, den: QPolynomial) -> (QPolynomial, QPolynomial) {
    let all = num.coeffs().iter().chain(den.coeffs());
    let lcm = all.clone().fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<Integer> = all.map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let content = ints.iter().fold(Integer::zero(), |acc, c| acc.gcd(c));
    let sign = if den.leading_coeff().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
    let scale = Rational::new(lcm * Integer::from(sign), content);
    (num.scale(&scale), den.scale(&scale))
}

impl RationalFunction {
    pub fn numerator(&self) -> &QPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &QPolynomial {
        &self.den
    }

    pub fn unreduced_deg_num(&self) -> Option<usize> {
        self.unreduced_deg_num
    }

    pub fn unreduced_deg_den(&self) -> usize {
        self.unreduced_deg_den
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let den = self.den.eval(x);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(x) / den)
    }

    /// The value when the function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeff(0) / self.den.coeff(0)),
            _ => None,
        }
    }

    pub(crate) fn from_parts(
        num: QPolynomial,
        den: QPolynomial,
        unreduced_deg_num: Option<usize>,
        unreduced_deg_den: usize,
    ) -> Result<Self> {
        let reduced = reduce(&num, &den)?;
        if reduced.num != num || reduced.den != den {
            return Err(Error::Inconsistent("rational function is not in canonical form".into()));
        }
        Ok(Self { num, den, unreduced_deg_num, unreduced_deg_den })
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_constant() {
            return write!(f, "{c}");
        }
        if self.den == QPolynomial::one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qp(cs: &[i64]) -> QPolynomial {
        QPolynomial::new(cs.iter().map(|&c| q(c, 1)).collect())
    }

    #[test]
    fn cancels_common_factor() {
        let r = reduce(&qp(&[0, 2]), &qp(&[0, 1])).unwrap();
        assert_eq!(r.as_constant(), Some(q(2, 1)));
        let r = reduce(&qp(&[-1, 0, 1]), &qp(&[-1, 1])).unwrap();
        assert_eq!(r.numerator(), &qp(&[1, 1]));
        assert_eq!(r.denominator(), &qp(&[1]));
    }

    #[test]
    fn quadric_three_fraction_is_one_third() {
        // p (p^2 - 1) / 3 over p^3 - p
        let num = QPolynomial::new(vec![q(0, 1), q(-1, 3), q(0, 1), q(1, 3)]);
        let r = reduce(&num, &qp(&[0, -1, 0, 1])).unwrap();
        assert_eq!(r.as_constant(), Some(q(1, 3)));
        assert_eq!(r.numerator(), &qp(&[1]));
        assert_eq!(r.denominator(), &qp(&[3]));
        assert_eq!(r.unreduced_deg_num(), Some(3));
        assert_eq!(r.unreduced_deg_den(), 3);
    }

    #[test]
    fn denominator_sign_and_content() {
        // (2x + 4) / (-6x^2) -> (-x - 2) / (3x^2)
        let r = reduce(&qp(&[4, 2]), &qp(&[0, 0, -6])).unwrap();
        assert_eq!(r.numerator(), &qp(&[-2, -1]));
        assert_eq!(r.denominator(), &qp(&[0, 0, 3]));
        assert_eq!(reduce(&qp(&[1]), &QPolynomial::zero()), Err(Error::ZeroDenominator));
        assert_eq!(reduce(&QPolynomial::zero(), &qp(&[0, 5])).unwrap().as_constant(), Some(q(0, 1)));
    }

    fn small_poly() -> impl Strategy<Value = QPolynomial> {
        prop::collection::vec((-6i64..6, 1i64..4), 1..4)
            .prop_map(|cs| QPolynomial::new(cs.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn invariant_under_common_factor(a in small_poly(), b in small_poly(), h in small_poly()) {
            prop_assume!(!b.is_zero() && !h.is_zero());
            let plain = reduce(&a, &b).unwrap();
            let scaled = reduce(&(&a * &h), &(&b * &h)).unwrap();
            prop_assert_eq!(plain.numerator(), scaled.numerator());
            prop_assert_eq!(plain.denominator(), scaled.denominator());
            prop_assert!(plain.denominator().leading_coeff().unwrap() > &q(0, 1));
            for c in plain.numerator().coeffs().iter().chain(plain.denominator().coeffs()) {
                prop_assert!(c.is_integer());
            }
        }
    }
}
