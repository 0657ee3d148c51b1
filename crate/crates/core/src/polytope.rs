//! Lattice-point counts of dilated Fibonacci-type polytopes.
//!
//! * `F_d ⊂ [0,1]^d`: `x_i + x_{i+1} <= 1`
//! * `E_d ⊂ [-1,1]^d`: `|x_i| + |x_{i+1}| <= 1`
//! * sign-pattern regions of `[0,1]^d`: `x_i + x_{i+1} <= 1` or `>= 1` per
//!   position (closed, so neighbouring regions share their boundary)
//!
//! Every family is a path of pairwise constraints, so `|kP|` is computed by a
//! transfer-matrix sweep over the value of the last coordinate. Each step is
//! a range sum, answered from a prefix-sum array in `O(k)`, for `O(d k)`
//! additions per count.

use std::fmt;

use crate::arith::{interpolate_samples, int_pow};
use crate::error::{Error, Result};
use crate::{Integer, Rational, Scalar};

/// One pairwise constraint `x_i + x_{i+1} <= k` or `>= k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    AtMost,
    AtLeast,
}

impl Relation {
    pub fn symbol(self) -> char {
        match self {
            Relation::AtMost => '≤',
            Relation::AtLeast => '≥',
        }
    }

    /// Parses `<`/`≤`/`l` and `>`/`≥`/`g`.
    pub fn parse_pattern(text: &str) -> Result<Vec<Relation>> {
        text.chars()
            .filter(|c| !c.is_whitespace() && *c != ',' && *c != '=')
            .map(|c| match c {
                '<' | '≤' | 'l' | 'L' => Ok(Relation::AtMost),
                '>' | '≥' | 'g' | 'G' => Ok(Relation::AtLeast),
                other => Err(Error::InvalidArgument(format!("pattern symbol {other:?}"))),
            })
            .collect()
    }
}

/// Every pattern of the given length, `AtMost` before `AtLeast` lexicographically.
pub fn all_patterns(len: usize) -> impl Iterator<Item = Vec<Relation>> {
    (0u64..1 << len).map(move |bits| {
        (0..len)
            .map(|i| if bits >> (len - 1 - i) & 1 == 1 { Relation::AtLeast } else { Relation::AtMost })
            .collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Fibonacci,
    Extended,
    Region(Vec<Relation>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeCountQuery {
    family: Family,
    d: usize,
    k: usize,
}

impl LatticeCountQuery {
    pub fn new(family: Family, d: usize, k: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument("dimension must be at least 1".into()));
        }
        if let Family::Region(p) = &family {
            if d < 2 || p.len() != d - 1 {
                return Err(Error::InvalidArgument(format!(
                    "region pattern has length {} but d - 1 = {}",
                    p.len(),
                    d.saturating_sub(1)
                )));
            }
        }
        Ok(Self { family, d, k })
    }

    pub fn fibonacci(d: usize, k: usize) -> Result<Self> {
        Self::new(Family::Fibonacci, d, k)
    }

    pub fn extended(d: usize, k: usize) -> Result<Self> {
        Self::new(Family::Extended, d, k)
    }

    pub fn region(pattern: Vec<Relation>, k: usize) -> Result<Self> {
        let d = pattern.len() + 1;
        Self::new(Family::Region(pattern), d, k)
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Counted by the transfer-matrix sweep.
    pub fn count<T: Scalar>(&self) -> T {
        match &self.family {
            Family::Fibonacci => count_fibonacci(self.d, self.k),
            Family::Extended => count_extended(self.d, self.k),
            Family::Region(p) => count_region(p, self.k),
        }
    }
}

impl fmt::Display for LatticeCountQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Fibonacci => write!(f, "|{}F_{}|", self.k, self.d),
            Family::Extended => write!(f, "|{}E_{}|", self.k, self.d),
            Family::Region(p) => {
                let sym: String = p.iter().map(|r| r.symbol()).collect();
                write!(f, "|{}R_{}[{sym}]|", self.k, self.d)
            }
        }
    }
}

fn prefix_sums<T: Scalar>(v: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(T::zero());
    for x in v {
        let next = out.last().unwrap().clone() + x.clone();
        out.push(next);
    }
    out
}

/// `|kF_d|`: tuples in `[0, k]^d` with `x_i + x_{i+1} <= k`. `|kF_0| = 1`.
pub fn count_fibonacci<T: Scalar>(d: usize, k: usize) -> T {
    if d == 0 {
        return T::one();
    }
    count_region(&vec![Relation::AtMost; d - 1], k)
}

/// `|kE_d|`: tuples in `[-k, k]^d` with `|x_i| + |x_{i+1}| <= k`. `|kE_0| = 1`.
pub fn count_extended<T: Scalar>(d: usize, k: usize) -> T {
    if d == 0 {
        return T::one();
    }
    // state index x + k
    let mut f = vec![T::one(); 2 * k + 1];
    for _ in 1..d {
        let pre = prefix_sums(&f);
        for (idx, slot) in f.iter_mut().enumerate() {
            let slack = k - idx.abs_diff(k);
            // x in [-slack, slack] -> indices [k - slack, k + slack]
            *slot = pre[k + slack + 1].clone() - pre[k - slack].clone();
        }
    }
    f.into_iter().fold(T::zero(), |a, b| a + b)
}

/// Lattice points of the closed region
/// `{x ∈ [0, k]^d : x_i + x_{i+1} (<= | >=) k per pattern}`, `d = pattern.len() + 1`.
pub fn count_region<T: Scalar>(pattern: &[Relation], k: usize) -> T {
    let mut f = vec![T::one(); k + 1];
    for rel in pattern {
        let pre = prefix_sums(&f);
        let total = pre[k + 1].clone();
        for (y, slot) in f.iter_mut().enumerate() {
            // partner values x with x + y <= k are 0..=k-y; with x + y >= k, k-y..=k
            *slot = match rel {
                Relation::AtMost => pre[k - y + 1].clone(),
                Relation::AtLeast => total.clone() - pre[k - y].clone(),
            };
        }
    }
    f.into_iter().fold(T::zero(), |a, b| a + b)
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Direct enumeration of every tuple in the bounding box.
pub fn brute_force_count(query: &LatticeCountQuery, budget: u64) -> Result<Integer> {
    let (lo, hi): (i64, i64) = match query.family {
        Family::Extended => (-(query.k as i64), query.k as i64),
        _ => (0, query.k as i64),
    };
    let width = (hi - lo + 1) as u64;
    let size = int_pow(width, query.d);
    if size > Integer::from(budget) {
        return Err(Error::BudgetExceeded { size: size.to_string(), budget });
    }
    let k = query.k as i64;
    let pair_ok = |i: usize, a: i64, b: i64| match &query.family {
        Family::Fibonacci => a + b <= k,
        Family::Extended => a.abs() + b.abs() <= k,
        Family::Region(p) => match p[i] {
            Relation::AtMost => a + b <= k,
            Relation::AtLeast => a + b >= k,
        },
    };

    let mut x = vec![lo; query.d];
    let mut count = 0u64;
    loop {
        if x.windows(2).enumerate().all(|(i, w)| pair_ok(i, w[0], w[1])) {
            count += 1;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == x.len() {
                return Ok(Integer::from(count));
            }
            if x[pos] < hi {
                x[pos] += 1;
                break;
            }
            x[pos] = lo;
            pos += 1;
        }
    }
}

/// Euclidean volume of the closed region: the leading coefficient of its
/// Ehrhart polynomial, interpolated from `k = 0..=d`.
pub fn volume_of_region(pattern: &[Relation]) -> Rational {
    let d = pattern.len() + 1;
    let ehrhart = interpolate_samples(d, |k| count_region::<Rational>(pattern, k))
        .expect("integer nodes are distinct");
    ehrhart.coeff(d)
}

/// Vertices of `E_d`: `v(d) = 2 v(d-2) + 2 v(d-3)` from `v(1) = 2`,
/// `v(2) = 4`, `v(3) = 6`.
pub fn extended_vertex_count(d: usize) -> Result<Integer> {
    if d == 0 {
        return Err(Error::InvalidArgument("vertex count needs d >= 1".into()));
    }
    let mut v: Vec<Integer> = vec![2.into(), 4.into(), 6.into()];
    while v.len() < d {
        let n = v.len();
        let next = Integer::from(2) * &v[n - 2] + Integer::from(2) * &v[n - 3];
        v.push(next);
    }
    Ok(v[d - 1].clone())
}
