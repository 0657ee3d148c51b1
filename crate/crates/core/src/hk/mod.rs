//! `e_HK(A_{p,d})` by three routes, the rational function of `p` for fixed
//! `d`, and the scanners built on top of it.
//!
//! With `a = (p - 1) / 2`:
//!
//! * matrix form: `1 + ([T_a^{d+1}]_{11} - p^d) / (p^d - [N_a^{d+1}]_{11})`
//! * Ehrhart form: `1 + 2^d |(a-1) F_d| / (p^d - |a E_{d-2}|)`, with
//!   `|k E_0| = |k E_{-1}| = 1`
//! * representation ring: see [`crate::rep_ring::ehk_quadric_repring`]
//!
//! The matrix and Ehrhart forms are defined for every odd `p >= 3`; only the
//! ring route needs `p` prime.

mod function;
mod scan;

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, int_pow};
use crate::combinatorics::zigzag;
use crate::error::{Error, Result};
use crate::matrices::StructuredMatrix;
use crate::polytope::{count_extended, count_fibonacci};
use crate::rep_ring::ehk_quadric_repring;
use crate::{Integer, Rational};

pub use function::{ehk_function, ehrhart_coeff_check, ehrhart_polynomial, parity_check, EhkFunction, Parity};
pub use scan::{convergence_probe, scan_monotone_d, scan_monotone_p, MonotonePScan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Repring,
    Matrix,
    Ehrhart,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Repring, Method::Matrix, Method::Ehrhart];

    pub fn name(self) -> &'static str {
        match self {
            Method::Repring => "repring",
            Method::Matrix => "matrix",
            Method::Ehrhart => "ehrhart",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EhkResult {
    pub p: usize,
    pub d: usize,
    #[serde(with = "crate::arith::json::rational")]
    pub value: Rational,
    pub method: Method,
}

pub(crate) fn check_args(p: usize, d: usize) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!("p = {p} must be odd and at least 3")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("d must be at least 1".into()));
    }
    Ok(())
}

fn assemble(p: usize, d: usize, num: Integer, den: Integer) -> Result<Rational> {
    if den == Integer::from(0) {
        return Err(Error::Inconsistent(format!("zero denominator at p = {p}, d = {d}")));
    }
    Ok(Rational::one() + Rational::new(num, den))
}

pub fn ehk_matrix(p: usize, d: usize) -> Result<Rational> {
    check_args(p, d)?;
    let a = (p - 1) / 2;
    let pd = int_pow(p as u64, d);
    let t = StructuredMatrix::<Integer>::T { a }.corner_power(d + 1);
    let n = StructuredMatrix::<Integer>::N { a }.corner_power(d + 1);
    assemble(p, d, t - &pd, pd - n)
}

/// `|k E_{d-2}|` with the conventions for `d <= 2`.
pub(crate) fn extended_shifted(d: usize, k: usize) -> Integer {
    if d <= 2 {
        Integer::one()
    } else {
        count_extended(d - 2, k)
    }
}

pub fn ehk_ehrhart(p: usize, d: usize) -> Result<Rational> {
    check_args(p, d)?;
    let a = (p - 1) / 2;
    let num = int_pow(2, d) * count_fibonacci::<Integer>(d, a - 1);
    let den = int_pow(p as u64, d) - extended_shifted(d, a);
    assemble(p, d, num, den)
}

pub fn ehk(p: usize, d: usize, method: Method) -> Result<EhkResult> {
    let value = match method {
        Method::Repring => {
            check_args(p, d)?;
            ehk_quadric_repring(p, d)?
        }
        Method::Matrix => ehk_matrix(p, d)?,
        Method::Ehrhart => ehk_ehrhart(p, d)?,
    };
    Ok(EhkResult { p, d, value, method })
}

/// `1 + E_d / d!`, the limit of `e_HK(A_{p,d})` as `p -> ∞`.
pub fn gm_limit(d: usize) -> Rational {
    let e = zigzag::<Integer>(d).pop().expect("non-empty");
    Rational::one() + Rational::new(e, factorial(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn values_at_three() {
        let want = [rat(2, 1), rat(3, 2), rat(4, 3), rat(23, 19)];
        for (d, w) in (1..=4).zip(want) {
            for m in Method::ALL {
                assert_eq!(ehk(3, d, m).unwrap().value, w, "{m} d={d}");
            }
        }
    }

    #[test]
    fn closed_form_at_three() {
        for d in 1..=12usize {
            let two_d = int_pow(2, d);
            let sign = if d % 2 == 0 { 1 } else { -1 };
            let want = Rational::one()
                + Rational::new(Integer::from(3) * &two_d, int_pow(3, d + 1) - two_d + Integer::from(sign));
            assert_eq!(ehk_matrix(3, d).unwrap(), want);
            assert_eq!(ehk_ehrhart(3, d).unwrap(), want);
        }
    }

    #[test]
    fn p_five_d_four() {
        assert_eq!(ehk_matrix(5, 4).unwrap(), rat(185, 153));
        assert_eq!(ehk_ehrhart(5, 4).unwrap(), rat(185, 153));
    }

    #[test]
    fn small_d_constants() {
        for p in [3, 5, 7, 9, 11, 15] {
            assert_eq!(ehk_ehrhart(p, 1).unwrap(), rat(2, 1));
            assert_eq!(ehk_ehrhart(p, 2).unwrap(), rat(3, 2));
            assert_eq!(ehk_matrix(p, 2).unwrap(), rat(3, 2));
            assert_eq!(ehk_matrix(p, 3).unwrap(), rat(4, 3));
        }
    }

    #[test]
    fn argument_checks() {
        assert!(ehk_matrix(4, 2).is_err());
        assert!(ehk_matrix(1, 2).is_err());
        assert!(ehk_ehrhart(5, 0).is_err());
        assert!(ehk(9, 2, Method::Repring).is_err());
        assert_eq!(ehk(9, 2, Method::Matrix).unwrap().value, rat(3, 2));
    }

    #[test]
    fn limits() {
        assert_eq!(gm_limit(1), rat(2, 1));
        assert_eq!(gm_limit(2), rat(3, 2));
        assert_eq!(gm_limit(4), rat(29, 24));
    }

    #[test]
    fn result_json() {
        let r = ehk(3, 4, Method::Matrix).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"p":3,"d":4,"value":{"num":"23","den":"19"},"method":"matrix"}"#);
        assert_eq!(serde_json::from_str::<EhkResult>(&text).unwrap(), r);
    }
}
