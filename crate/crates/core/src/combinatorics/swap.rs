use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::Limits;
use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::Integer;

/// Tag stored with cached swap tables; bump it if the alternating
/// convention or the swap definition ever changes.
pub const CONVENTION: &str = "down-up-v1";

/// `σ(1) > σ(2) < σ(3) > ...`
pub fn is_alternating(perm: &[u8]) -> bool {
    perm.windows(2)
        .enumerate()
        .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
}

/// Number of values `i < n` with `σ^{-1}(i) < σ^{-1}(i+1) - 1`.
///
/// `perm` holds the values `1..=n` in one-line notation.
pub fn swap(perm: &[u8]) -> usize {
    let mut pos = [0usize; 64];
    for (idx, &v) in perm.iter().enumerate() {
        pos[v as usize] = idx;
    }
    (1..perm.len()).filter(|&i| pos[i] + 1 < pos[i + 1]).count()
}

/// Depth-first walk over the alternating permutations of `[d]` starting with `first`.
fn walk(d: usize, first: u8, visit: &mut impl FnMut(&[u8])) {
    fn rec(buf: &mut [u8], len: usize, used: u64, visit: &mut impl FnMut(&[u8])) {
        if len == buf.len() {
            visit(buf);
            return;
        }
        let prev = buf[len - 1];
        // odd position (0-based) steps down, even steps up
        let range = if len % 2 == 1 { 1..prev } else { prev + 1..buf.len() as u8 + 1 };
        for v in range {
            if used & (1 << v) == 0 {
                buf[len] = v;
                rec(buf, len + 1, used | (1 << v), visit);
            }
        }
    }
    let mut buf = vec![0u8; d];
    buf[0] = first;
    rec(&mut buf, 1, 1 << first, visit);
}

/// All alternating permutations of `[d]` in lexicographic order.
pub fn alternating_permutations(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for first in 1..=d as u8 {
        walk(d, first, &mut |p| out.push(p.to_vec()));
    }
    out
}

/// Histogram `s_d(m)` of the swap statistic over alternating permutations
/// of `[d]`: the h*-vector of the `d`-dimensional Fibonacci polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapTable {
    pub d: usize,
    #[serde(with = "decimal_vec")]
    pub s: Vec<Integer>,
}

pub(super) mod decimal_vec {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::Integer;

    pub fn serialize<S: Serializer>(v: &[Integer], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|n| n.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Integer>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

pub fn swap_table(d: usize) -> Result<SwapTable> {
    swap_table_capped(d, Limits::default().swap_d)
}

pub fn swap_table_capped(d: usize, cap: usize) -> Result<SwapTable> {
    if d == 0 {
        return Err(Error::InvalidArgument("swap table needs d >= 1".into()));
    }
    if d > cap || d > 63 {
        return Err(Error::CapExceeded { what: "d", value: d as u64, cap: cap.min(63) as u64 });
    }
    // swap ranges over 0..=d-2; d = 1 still has the single permutation with swap 0
    let len = d.saturating_sub(1).max(1);
    let hist = (1..=d as u8)
        .into_par_iter()
        .map(|first| {
            let mut h = vec![0u64; len];
            walk(d, first, &mut |p| h[swap(p)] += 1);
            h
        })
        .reduce(|| vec![0u64; len], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    Ok(SwapTable { d, s: hist.into_iter().map(Integer::from).collect() })
}

impl SwapTable {
    /// `Σ_m s_d(m)`, which is `E_d`.
    pub fn total(&self) -> Integer {
        self.s.iter().sum()
    }

    pub fn get(&self, m: usize) -> Integer {
        self.s.get(m).cloned().unwrap_or_default()
    }

    pub fn is_palindromic(&self) -> bool {
        self.s.iter().eq(self.s.iter().rev())
    }

    /// `Σ_m C(m, i) s_d(m)`; for `i = 0` the total, for `i = 1` the first moment.
    pub fn binomial_moment(&self, i: usize) -> Integer {
        self.s.iter().enumerate().map(|(m, c)| binomial(m, i) * c).sum()
    }

    /// `|kF_d| = Σ_m s_d(m) C(k + d - m, d)`.
    pub fn ehrhart_count(&self, k: usize) -> Integer {
        self.s
            .iter()
            .enumerate()
            .filter(|(m, _)| *m <= k + self.d)
            .map(|(m, c)| binomial(k + self.d - m, self.d) * c)
            .sum()
    }

    /// Descriptions of every violated structural invariant (sum, palindrome,
    /// first moment), given the zigzag number `e_d`.
    pub fn invariant_violations(&self, e_d: &Integer) -> Vec<String> {
        let mut out = Vec::new();
        if &self.total() != e_d {
            out.push(format!("sum {} != E_{} = {}", self.total(), self.d, e_d));
        }
        if !self.is_palindromic() {
            out.push(format!("not palindromic: {:?}", self.s));
        }
        if self.d >= 2 {
            // Σ m s(m) = E_d (d/2 - 1), doubled to stay integral
            let lhs = self.binomial_moment(1) * 2;
            let rhs = e_d * Integer::from(self.d as i64 - 2);
            if lhs != rhs {
                out.push(format!("first moment 2*{} != E_d (d - 2) = {}", self.binomial_moment(1), rhs));
            }
        }
        out
    }
}

/// `Σ_m C(m, i) s_d(m)` at the default cap.
pub fn coeff_sum_binom(d: usize, i: usize) -> Result<Integer> {
    Ok(swap_table(d)?.binomial_moment(i))
}
