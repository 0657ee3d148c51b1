use rayon::prelude::*;

use super::Limits;
use crate::arith::Polynomial;
use crate::error::{Error, Result};
use crate::Integer;

/// Positions `i` (1-based) with `π(i) > π(i+1)` for odd `i` or
/// `π(i) < π(i+1)` for even `i`.
pub fn alt_descents(perm: &[u8]) -> usize {
    perm.windows(2)
        .enumerate()
        .filter(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
        .count()
}

/// `A(n, k)`: permutations of `[n]` with `k` alternating descents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltDescentTable {
    pub n: usize,
    pub a: Vec<Integer>,
}

impl AltDescentTable {
    pub fn get(&self, k: usize) -> Integer {
        self.a.get(k).cloned().unwrap_or_default()
    }
}

pub fn alt_descent_table(n: usize) -> Result<AltDescentTable> {
    alt_descent_table_capped(n, Limits::default().alt_descent_n)
}

pub fn alt_descent_table_capped(n: usize, cap: usize) -> Result<AltDescentTable> {
    if n == 0 {
        return Err(Error::InvalidArgument("alternating descents need n >= 1".into()));
    }
    if n > cap || n > 20 {
        return Err(Error::CapExceeded { what: "n", value: n as u64, cap: cap.min(20) as u64 });
    }
    let hist = (1..=n as u8)
        .into_par_iter()
        .map(|first| {
            let mut h = vec![0u64; n];
            let mut perm: Vec<u8> = std::iter::once(first).chain((1..=n as u8).filter(|&v| v != first)).collect();
            loop {
                h[alt_descents(&perm)] += 1;
                if !next_permutation(&mut perm[1..]) {
                    break;
                }
            }
            h
        })
        .reduce(|| vec![0u64; n], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
    Ok(AltDescentTable { n, a: hist.into_iter().map(Integer::from).collect() })
}

/// `A_n(x) = Σ_k A(n, k) x^k`.
pub fn alt_eulerian_poly(n: usize) -> Result<Polynomial<Integer>> {
    Ok(Polynomial::new(alt_descent_table(n)?.a))
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
