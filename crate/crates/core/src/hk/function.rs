use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::check_args;
use crate::arith::{factorial, int_pow, interpolate_samples, rat, rat_int, reduce, RationalFunction};
use crate::combinatorics::{swap_table, zigzag};
use crate::error::{Error, Result};
use crate::polytope::{count_extended, count_fibonacci};
use crate::report::Report;
use crate::{Integer, QPolynomial, Rational};

/// `e_HK(A_{p,d})` as a function of `p` for fixed `d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhkFunction {
    pub d: usize,
    /// `1 + num / den` as one reduced quotient.
    pub reduced: RationalFunction,
    /// `2^d P_d((p - 3) / 2)`.
    pub unreduced_num: QPolynomial,
    /// `p^d - Q_{d-2}((p - 1) / 2)`.
    pub unreduced_den: QPolynomial,
}

impl EhkFunction {
    pub fn eval(&self, p: usize) -> Result<Rational> {
        check_args(p, self.d)?;
        self.reduced.eval(&rat_int(p as u64))
    }
}

/// Ehrhart polynomial `k ↦ |k F_d|` (or `|k E_d|`), interpolated from the
/// counts at `k = 0..=d`. Dimension zero gives the constant 1.
pub fn ehrhart_polynomial(d: usize, extended: bool) -> QPolynomial {
    let count = |k| if extended { count_extended::<Rational>(d, k) } else { count_fibonacci::<Rational>(d, k) };
    interpolate_samples(d, count).expect("integer nodes are distinct")
}

pub fn ehk_function(d: usize) -> Result<EhkFunction> {
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let p_d = ehrhart_polynomial(d, false);
    let q = if d >= 2 { ehrhart_polynomial(d - 2, true) } else { QPolynomial::constant(rat_int(1)) };
    let half = |shift: i64| QPolynomial::linear(rat(1, 2), rat(-shift, 2));
    let num = p_d.compose(&half(3)).scale(&rat_int(int_pow(2, d)));
    let den = QPolynomial::monomial(rat_int(1), d) - q.compose(&half(1));
    let reduced = reduce(&(&den + &num), &den)?;
    Ok(EhkFunction { d, reduced, unreduced_num: num, unreduced_den: den })
}

/// Exponents of `p` present in the unreduced numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parity {
    pub d: usize,
    pub num_degrees: Vec<usize>,
    pub den_degrees: Vec<usize>,
}

impl Parity {
    /// Every exponent present is congruent to `d` mod 2.
    pub fn holds(&self) -> bool {
        self.num_degrees.iter().chain(&self.den_degrees).all(|e| e % 2 == self.d % 2)
    }
}

fn support(p: &QPolynomial) -> Vec<usize> {
    p.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, _)| i).collect()
}

pub fn parity_check(d: usize) -> Result<Parity> {
    let f = ehk_function(d)?;
    Ok(Parity { d, num_degrees: support(&f.unreduced_num), den_degrees: support(&f.unreduced_den) })
}

/// The top three coefficients of `P_d` against their expressions in `E_d`
/// and the swap table, and the shifted form `P_d(x - 3/2)`.
pub fn ehrhart_coeff_check(d: usize) -> Result<Report> {
    if d < 3 {
        return Err(Error::InvalidArgument("coefficient check needs d >= 3".into()));
    }
    let table = swap_table(d)?;
    let e = Rational::from_integer(zigzag::<Integer>(d).pop().expect("non-empty"));
    let second: Rational = rat_int(table.binomial_moment(2));
    let p = ehrhart_polynomial(d, false);
    let shifted = p.compose(&QPolynomial::linear(rat_int(1), rat(-3, 2)));
    let fact = |n: usize| Rational::from_integer(factorial(n));
    let di = d as i64;
    let lower = |c: i64| (&e * rat(c, 24) + &second) / fact(d - 2);

    let mut r = Report::new(format!("Ehrhart coefficients of P_{d}"));
    let mut cmp = |name: String, got: Rational, want: Rational| {
        r.assert(name, got == want, format!("interpolated {got}, expected {want}"));
    };
    cmp(format!("k^{d}"), p.coeff(d), &e / fact(d));
    cmp(format!("k^{}", d - 1), p.coeff(d - 1), &e * rat(3, 2) / fact(d - 1));
    cmp(format!("k^{}", d - 2), p.coeff(d - 2), lower(-3 * di * di + 17 * di + 2));
    cmp(format!("shifted x^{}", d - 1), shifted.coeff(d - 1), Rational::zero());
    cmp(format!("shifted x^{}", d - 2), shifted.coeff(d - 2), lower(-3 * di * di + 17 * di - 25));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(cs: &[(i64, i64)]) -> QPolynomial {
        QPolynomial::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn p3_polynomial() {
        assert_eq!(ehrhart_polynomial(3, false), qp(&[(1, 1), (13, 6), (3, 2), (1, 3)]));
        assert_eq!(ehrhart_polynomial(0, true), QPolynomial::one());
    }

    #[test]
    fn d_three_function() {
        let f = ehk_function(3).unwrap();
        assert_eq!(f.reduced.as_constant(), Some(rat(4, 3)));
        assert_eq!(f.unreduced_num, qp(&[(0, 1), (-1, 3), (0, 1), (1, 3)]));
        assert_eq!(f.unreduced_den, qp(&[(0, 1), (-1, 1), (0, 1), (1, 1)]));
        for p in [3, 5, 7] {
            assert_eq!(f.eval(p).unwrap(), super::super::ehk_matrix(p, 3).unwrap());
        }
    }

    #[test]
    fn d_one_and_four() {
        let f = ehk_function(1).unwrap();
        assert_eq!(f.reduced.as_constant(), Some(rat(2, 1)));
        assert_eq!(f.unreduced_num, qp(&[(-1, 1), (1, 1)]));
        assert_eq!(f.unreduced_den, qp(&[(-1, 1), (1, 1)]));
        assert_eq!(ehk_function(4).unwrap().eval(3).unwrap(), rat(23, 19));
        assert!(ehk_function(0).is_err());
    }

    #[test]
    fn parity() {
        assert!(parity_check(3).unwrap().holds());
        let one = parity_check(1).unwrap();
        assert_eq!(one.num_degrees, vec![0, 1]);
        assert!(!one.holds());
    }

    #[test]
    fn coefficient_check_passes() {
        for d in 3..=9 {
            let r = ehrhart_coeff_check(d).unwrap();
            assert!(r.passed(), "{r}");
        }
        assert!(ehrhart_coeff_check(2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = ehk_function(4).unwrap();
        let text = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<EhkFunction>(&text).unwrap(), f);
    }
}
