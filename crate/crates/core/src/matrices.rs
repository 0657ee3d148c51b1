//! Banded matrices whose `(1,1)` power entries carry the Hilbert–Kunz data.
//!
//! With half-size `s`, size `2s + 1`, centre `c = s + 1` and 1-based indices:
//!
//! * `Q(q, s)`: `q` in the corners `i + j <= s + 1` and `i + j >= 3s + 3`,
//!   `1` on the rhombus `|i - c| + |j - c| <= s`, `0` elsewhere
//! * `T_s = Q(2, s)`, `N_s = Q(0, s)`
//! * `Z_s`: `1` where `|i - c| + |j - c| >= s + 1`
//! * `M(n, p)`: entrywise absolute value of multiplication by
//!   `(n - r) δ_a + r δ_{a+1}` in the representation ring, `p = a n + r`
//!
//! Powers are never formed. `corner_power` applies the matrix to `e_1`
//! repeatedly; every row of `Q` and `Z` is a union of at most three index
//! intervals, so one product costs `O(size)` additions via prefix sums.

use std::fmt;

use crate::error::{Error, Result};
use crate::rep_ring::{frobenius_factor, is_prime};
use crate::{Integer, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuredMatrix<S> {
    T { a: usize },
    N { a: usize },
    Z { n: usize },
    Q { q: S, k: usize },
    M { n: usize, p: usize, dense: Vec<Vec<S>> },
}

impl<S: Scalar + PartialOrd> StructuredMatrix<S> {
    /// `M(n, p)` built from the representation ring.
    pub fn m(n: usize, p: usize) -> Result<Self> {
        if p < 3 || !is_prime(p as u64) {
            return Err(Error::InvalidArgument(format!("p = {p} is not an odd prime")));
        }
        let dense = frobenius_factor::<S>(p, n)?
            .mult_matrix()
            .into_iter()
            .map(|row| row.into_iter().map(|v| if v < S::zero() { S::zero() - v } else { v }).collect())
            .collect();
        Ok(Self::M { n, p, dense })
    }
}

impl<S: Scalar> StructuredMatrix<S> {
    pub fn size(&self) -> usize {
        match self {
            Self::T { a } | Self::N { a } => 2 * a + 1,
            Self::Z { n } => 2 * n + 1,
            Self::Q { k, .. } => 2 * k + 1,
            Self::M { p, .. } => *p,
        }
    }

    /// `(q, s)` when the matrix belongs to the `Q` family.
    fn as_q(&self) -> Option<(S, usize)> {
        match self {
            Self::T { a } => Some((S::from_usize_exact(2), *a)),
            Self::N { a } => Some((S::zero(), *a)),
            Self::Q { q, k } => Some((q.clone(), *k)),
            _ => None,
        }
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Result<S> {
        let size = self.size();
        for idx in [i, j] {
            if idx == 0 || idx > size {
                return Err(Error::IndexOutOfRange { index: idx, bound: size + 1 });
            }
        }
        if let Self::M { dense, .. } = self {
            return Ok(dense[i - 1][j - 1].clone());
        }
        let s = (size - 1) / 2;
        let c = s + 1;
        let dist = i.abs_diff(c) + j.abs_diff(c);
        Ok(match self.as_q() {
            Some((q, _)) if i + j <= s + 1 || i + j >= 3 * s + 3 => q,
            Some(_) if dist <= s => S::one(),
            Some(_) => S::zero(),
            None if dist > s => S::one(),
            None => S::zero(),
        })
    }

    pub fn dense(&self) -> Vec<Vec<S>> {
        let size = self.size();
        (1..=size).map(|i| (1..=size).map(|j| self.entry(i, j).expect("in range")).collect()).collect()
    }

    /// `A v`.
    pub fn apply(&self, v: &[S]) -> Vec<S> {
        let size = self.size();
        assert_eq!(v.len(), size, "vector length");
        if let Self::M { dense, .. } = self {
            return dense
                .iter()
                .map(|row| row.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
                .collect();
        }
        let mut pre = Vec::with_capacity(size + 1);
        pre.push(S::zero());
        for x in v {
            let next = pre.last().unwrap().clone() + x.clone();
            pre.push(next);
        }
        // sum of v_j over 1-based j in [lo, hi]
        let range = |lo: usize, hi: usize| {
            if lo > hi {
                S::zero()
            } else {
                pre[hi].clone() - pre[lo - 1].clone()
            }
        };
        let s = (size - 1) / 2;
        let c = s + 1;
        (1..=size)
            .map(|i| {
                let off = i.abs_diff(c);
                match self.as_q() {
                    Some((q, _)) => {
                        let w = s - off;
                        let mut acc = range(c - w, c + w);
                        if !q.is_zero() {
                            let corners = if i <= s {
                                range(1, s + 1 - i)
                            } else if i >= s + 2 {
                                range(3 * s + 3 - i, size)
                            } else {
                                S::zero()
                            };
                            acc = acc + q * corners;
                        }
                        acc
                    }
                    None => {
                        let t = s + 1 - off;
                        range(1, c.saturating_sub(t)) + range(c + t, size)
                    }
                }
            })
            .collect()
    }

    /// `[A^exponent]_{(1,1)}` by `exponent` products with `e_1`.
    pub fn corner_power(&self, exponent: usize) -> S {
        let mut v = vec![S::zero(); self.size()];
        v[0] = S::one();
        for _ in 0..exponent {
            v = self.apply(&v);
        }
        v.swap_remove(0)
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for StructuredMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.dense() {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `(1,1)` entry of `M(n_0, p) M(n_1, p) ... M(n_d, p)`.
pub fn hanmonsky_colength_matrix(p: usize, exponents: &[usize]) -> Result<Integer> {
    if exponents.is_empty() {
        return Err(Error::InvalidArgument("no exponents".into()));
    }
    let mats = exponents.iter().map(|&n| StructuredMatrix::<Integer>::m(n, p)).collect::<Result<Vec<_>>>()?;
    let mut v = vec![Integer::from(0); p];
    v[0] = Integer::from(1);
    for m in mats.iter().rev() {
        v = m.apply(&v);
    }
    Ok(v.swap_remove(0))
}
