//! Exact numeric substrate: polynomials, interpolation, rational functions
//! and a few integer helpers. No floating point is used anywhere; decimal
//! strings from [`decimal_approx`] are for display only.

mod decimal;
mod interp;
pub mod json;
mod poly;
mod ratfunc;

pub use decimal::decimal_approx;
pub use interp::{interpolate, interpolate_samples};
pub use poly::Polynomial;
pub use ratfunc::{reduce, RationalFunction};

use num_traits::{One, Pow};

use crate::{Integer, Rational};

pub fn factorial(n: usize) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// `C(n, k)` for non-negative `n`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Integer {
    if k > n {
        return Integer::from(0u8);
    }
    let k = k.min(n - k);
    (0..k).fold(Integer::one(), |acc, i| acc * Integer::from(n - i) / Integer::from(i + 1))
}

pub fn int_pow(base: u64, exp: usize) -> Integer {
    Pow::pow(Integer::from(base), exp)
}

pub fn rat(n: impl Into<Integer>, d: impl Into<Integer>) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}
