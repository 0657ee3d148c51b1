//! The Han–Monsky representation ring `Γ` in characteristic `p`, restricted
//! to the basis `λ_0, ..., λ_{p-1}`.
//!
//! Multiplication of basis elements: for `i <= j`,
//!
//! * `i + j <= p - 1`: `λ_i λ_j = λ_{j-i} + ... + λ_{j+i}`
//! * `i + j >= p`: `λ_i λ_j = λ_{p-1-j} λ_{p-1-i}`
//!
//! so in both cases the product is the contiguous sum over
//! `k ∈ [j - i, min(i + j, 2p - 2 - i - j)]`. The case `i = j` uses the same
//! formula. The second basis is `δ_i = λ_0 - λ_1 + ... ± λ_{i-1}`, and the
//! functional `D` reads off the coefficient of `λ_0`.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::int_pow;
use crate::error::{Error, Result};
use crate::{Integer, Rational, Scalar};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

fn require_odd_prime(p: usize) -> Result<()> {
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::InvalidArgument(format!("p = {p} is not an odd prime")));
    }
    Ok(())
}

/// Support of `λ_i λ_j`, inclusive.
pub fn product_range(p: usize, i: usize, j: usize) -> (usize, usize) {
    let lo = i.abs_diff(j);
    let hi = (i + j).min(2 * p - 2 - i - j);
    (lo, hi)
}

/// Element of `Γ`, dense over the `λ`-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaElement<T> {
    p: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> GammaElement<T> {
    pub fn new(p: usize, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != p {
            return Err(Error::InvalidArgument(format!("{} coefficients for p = {p}", coeffs.len())));
        }
        Ok(Self { p, coeffs })
    }

    pub fn zero(p: usize) -> Self {
        Self { p, coeffs: vec![T::zero(); p] }
    }

    pub fn one(p: usize) -> Self {
        Self::lambda(p, 0).expect("p >= 1")
    }

    pub fn lambda(p: usize, i: usize) -> Result<Self> {
        if i >= p {
            return Err(Error::IndexOutOfRange { index: i, bound: p });
        }
        let mut e = Self::zero(p);
        e.coeffs[i] = T::one();
        Ok(e)
    }

    /// `δ_i` for `1 <= i <= p`.
    pub fn delta(p: usize, i: usize) -> Result<Self> {
        if i == 0 || i > p {
            return Err(Error::IndexOutOfRange { index: i, bound: p + 1 });
        }
        let mut e = Self::zero(p);
        for (k, c) in e.coeffs.iter_mut().take(i).enumerate() {
            *c = if k % 2 == 0 { T::one() } else { T::zero() - T::one() };
        }
        Ok(e)
    }

    /// `Σ c_i δ_i` from `c_1, ..., c_p`.
    pub fn from_delta_coords(p: usize, c: &[T]) -> Result<Self> {
        if c.len() != p {
            return Err(Error::InvalidArgument(format!("{} δ-coordinates for p = {p}", c.len())));
        }
        // coefficient of λ_k is (-1)^k Σ_{i > k} c_i
        let mut coeffs = vec![T::zero(); p];
        let mut tail = T::zero();
        for k in (0..p).rev() {
            tail = tail + c[k].clone();
            coeffs[k] = if k % 2 == 0 { tail.clone() } else { T::zero() - tail.clone() };
        }
        Ok(Self { p, coeffs })
    }

    /// Coordinates `c_1, ..., c_p` in the `δ`-basis.
    pub fn delta_coords(&self) -> Vec<T> {
        let signed: Vec<T> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { T::zero() - c.clone() })
            .collect();
        (0..self.p)
            .map(|k| signed[k].clone() - signed.get(k + 1).cloned().unwrap_or_else(T::zero))
            .collect()
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// `D(u)`: the coefficient of `λ_0`.
    pub fn d_value(&self) -> T {
        self.coeffs[0].clone()
    }

    fn check_p(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch(self.p as u64, other.p as u64));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_p(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { p: self.p, coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    /// Bilinear extension of the basis rule. Each basis product adds one
    /// contiguous range, accumulated in a difference array.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_p(other)?;
        let p = self.p;
        let mut diff = vec![T::zero(); p + 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = a.clone() * b.clone();
                let (lo, hi) = product_range(p, i, j);
                diff[lo] = diff[lo].clone() + c.clone();
                diff[hi + 1] = diff[hi + 1].clone() - c;
            }
        }
        let mut acc = T::zero();
        let coeffs = diff[..p]
            .iter()
            .map(|d| {
                acc = acc.clone() + d.clone();
                acc.clone()
            })
            .collect();
        Ok(Self { p, coeffs })
    }

    pub fn pow(&self, exponent: usize) -> Self {
        let mut out = Self::one(self.p);
        for _ in 0..exponent {
            out = out.multiply(self).expect("same p");
        }
        out
    }

    /// Matrix of multiplication by `self` in the `λ`-basis, row-major;
    /// column `j` holds the coefficients of `self · λ_j`.
    pub fn mult_matrix(&self) -> Vec<Vec<T>> {
        let mut m = vec![vec![T::zero(); self.p]; self.p];
        for j in 0..self.p {
            let col = self.multiply(&Self::lambda(self.p, j).expect("j < p")).expect("same p");
            for (i, c) in col.coeffs.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }
}

/// `λ_i λ_j` as a ring element.
pub fn lambda_mul<T: Scalar>(p: usize, i: usize, j: usize) -> Result<GammaElement<T>> {
    GammaElement::lambda(p, i)?.multiply(&GammaElement::lambda(p, j)?)
}

/// `(n - r) δ_a + r δ_{a+1}` with `p = a n + r`, the class of `k[x]/(x^p)`
/// over `k[x^n]`-type factors.
pub fn frobenius_factor<T: Scalar>(p: usize, n: usize) -> Result<GammaElement<T>> {
    if n < 2 || n > p {
        return Err(Error::FrobeniusOutOfScope(n as u64));
    }
    let (a, r) = (p / n, p % n);
    let low = GammaElement::delta(p, a)?.scale(&T::from_usize_exact(n - r));
    let high = GammaElement::delta(p, a + 1)?.scale(&T::from_usize_exact(r));
    low.add(&high)
}

/// Colength of `(x_0^p, ..., x_d^p)` in `k[[x]] / (x_0^{n_0} + ... + x_d^{n_d})`.
pub fn diag_colength(p: usize, exponents: &[usize]) -> Result<Integer> {
    require_odd_prime(p)?;
    if exponents.is_empty() {
        return Err(Error::InvalidArgument("no exponents".into()));
    }
    let mut acc = GammaElement::<Integer>::one(p);
    for &n in exponents {
        acc = acc.multiply(&frobenius_factor(p, n)?)?;
    }
    Ok(acc.d_value())
}

/// Both denominators of the quadric formula: the signed form
/// `p^d - (-1)^{a(d+1)} D((δ_{a+1} - δ_a)^{d+1})` and the sign-free form
/// `p^d - D(λ_a^{d+1})`.
pub fn quadric_denominators(p: usize, d: usize) -> Result<(Integer, Integer)> {
    require_odd_prime(p)?;
    let a = (p - 1) / 2;
    let pd = int_pow(p as u64, d);
    let diff = GammaElement::<Integer>::delta(p, a + 1)?.sub(&GammaElement::delta(p, a)?)?;
    let sign = if (a * (d + 1)).is_multiple_of(2) { Integer::one() } else { -Integer::one() };
    let signed = &pd - sign * diff.pow(d + 1).d_value();
    let plain = &pd - GammaElement::<Integer>::lambda(p, a)?.pow(d + 1).d_value();
    Ok((signed, plain))
}

/// `e_HK(A_{p,d})` from the representation ring.
pub fn ehk_quadric_repring(p: usize, d: usize) -> Result<Rational> {
    require_odd_prime(p)?;
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    let a = (p - 1) / 2;
    let sum = GammaElement::<Integer>::delta(p, a)?.add(&GammaElement::delta(p, a + 1)?)?;
    let num = sum.pow(d + 1).d_value() - int_pow(p as u64, d);
    let (den, plain) = quadric_denominators(p, d)?;
    if den != plain {
        return Err(Error::Inconsistent(format!(
            "signed denominator {den} differs from p^d - D(λ_a^(d+1)) = {plain} at p = {p}, d = {d}"
        )));
    }
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::one() + Rational::new(num, den))
}

impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for GammaElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let neg = *c < T::zero();
            let mag = if neg { T::zero() - c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "λ{k}")?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
