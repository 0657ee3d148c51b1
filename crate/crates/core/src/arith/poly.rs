use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::Scalar;

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// Trailing zeros are always stripped, so the zero polynomial has an empty
/// coefficient list and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `slope * x + intercept`.
    pub fn linear(slope: T, intercept: T) -> Self {
        Self::new(vec![intercept, slope])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `self ∘ inner`, by Horner's scheme over polynomials.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Euclidean division. Requires `T` to be a field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading_coeff().ok_or(Error::ZeroDenominator)?.clone();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let top = rem[shift + dd].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top / lead.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = rem[shift + i].clone() - factor.clone() * c.clone();
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() / lead.clone()).collect())
            }
        }
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        &Polynomial::zero() - self
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    /// Descending-degree rendering in the variable `x`, e.g. `1/3 x^3 + 3/2 x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = body == "1";
            match deg {
                0 => write!(f, "{body}")?,
                _ if unit => {}
                _ => write!(f, "{body} ")?,
            }
            match deg {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPolynomial, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qp(cs: &[(i64, i64)]) -> QPolynomial {
        Polynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = Polynomial::<i64>::new(vec![1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::<i64>::new(vec![0, 0]).is_zero());
        assert_eq!(Polynomial::<i64>::zero().degree(), None);
    }

    #[test]
    fn compose_square_with_shift() {
        let sq = Polynomial::<i64>::monomial(1, 2);
        let shift = Polynomial::linear(1, 1);
        assert_eq!(sq.compose(&shift), Polynomial::new(vec![1, 2, 1]));
        assert_eq!(sq.compose(&Polynomial::x()), sq);
    }

    #[test]
    fn compose_fibonacci_cubic_into_half_shift() {
        // (2k^3 + 9k^2 + 13k + 6)/6 at k = (x - 3)/2 is x(x^2 - 1)/24.
        let p3 = qp(&[(1, 1), (13, 6), (3, 2), (1, 3)]);
        let inner = Polynomial::linear(q(1, 2), q(-3, 2));
        assert_eq!(p3.compose(&inner), qp(&[(0, 1), (-1, 24), (0, 1), (1, 24)]));
    }

    #[test]
    fn div_rem_and_gcd() {
        // x^3 - x = x (x - 1)(x + 1); gcd with x^2 - 1 is x^2 - 1.
        let a = qp(&[(0, 1), (-1, 1), (0, 1), (1, 1)]);
        let b = qp(&[(-1, 1), (0, 1), (1, 1)]);
        let (quo, rem) = a.div_rem(&b).unwrap();
        assert_eq!(quo, qp(&[(0, 1), (1, 1)]));
        assert!(rem.is_zero());
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.div_rem(&QPolynomial::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn display_descending() {
        let p = qp(&[(1, 1), (13, 6), (3, 2), (1, 3)]);
        assert_eq!(p.to_string(), "1/3 x^3 + 3/2 x^2 + 13/6 x + 1");
        assert_eq!(qp(&[(-1, 1), (0, 1), (-1, 1)]).to_string(), "-x^2 - 1");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}
