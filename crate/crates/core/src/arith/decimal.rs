use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use super::int_pow;
use crate::{Integer, Rational};

/// `value` rounded half-up to `significant` digits, in positional notation.
///
/// Display only: nothing in the crate ever compares these strings.
pub fn decimal_approx(value: &Rational, significant: usize) -> String {
    assert!(significant > 0, "need at least one significant digit");
    if value.is_zero() {
        return "0".to_string();
    }
    let num = value.numer().abs();
    let den = value.denom().clone();

    // e = floor(log10(num / den))
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    if scaled_cmp(&num, &den, e).is_lt() {
        e -= 1;
    }

    let shift = significant as i64 - 1 - e;
    let (n, d) = if shift >= 0 {
        (num * int_pow(10, shift as usize), den)
    } else {
        (num, den * int_pow(10, (-shift) as usize))
    };
    let (mut digits, rem) = n.div_rem(&d);
    if rem * Integer::from(2) >= d {
        digits += 1;
    }
    if digits == int_pow(10, significant) {
        digits /= 10;
        e += 1;
    }

    let s = digits.to_string();
    let body = if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), s)
    } else if (e as usize) + 1 >= significant {
        format!("{}{}", s, "0".repeat(e as usize + 1 - significant))
    } else {
        let split = e as usize + 1;
        format!("{}.{}", &s[..split], &s[split..])
    };
    if value.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

/// Compare `num / den` with `10^e`.
fn scaled_cmp(num: &Integer, den: &Integer, e: i64) -> std::cmp::Ordering {
    if e >= 0 {
        num.cmp(&(den * int_pow(10, e as usize)))
    } else {
        (num * int_pow(10, (-e) as usize)).cmp(den)
    }
}
