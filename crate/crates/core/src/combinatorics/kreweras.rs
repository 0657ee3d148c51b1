use super::Limits;
use crate::error::{Error, Result};
use crate::Integer;

/// Kreweras' `u^n_r`: surjections `f: [n] -> [r]` with
/// `f(1) > f(2) < f(3) > ...`, counted by direct enumeration.
///
/// Out-of-range `r` (zero or above `n`) gives zero.
pub fn kreweras_u(n: usize, r: usize) -> Result<Integer> {
    kreweras_u_capped(n, r, Limits::default().kreweras_n)
}

pub fn kreweras_u_capped(n: usize, r: usize, cap: usize) -> Result<Integer> {
    if n > cap || n > 63 {
        return Err(Error::CapExceeded { what: "n", value: n as u64, cap: cap.min(63) as u64 });
    }
    if r == 0 || r > n {
        return Ok(Integer::from(0));
    }
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(n);
    for first in 1..=r {
        prefix.push(first);
        extend(&mut prefix, 1u64 << first, n, r, &mut count);
        prefix.pop();
    }
    Ok(Integer::from(count))
}

fn extend(prefix: &mut Vec<usize>, hit: u64, n: usize, r: usize, count: &mut u64) {
    let missing = r - hit.count_ones() as usize;
    if missing > n - prefix.len() {
        return;
    }
    if prefix.len() == n {
        *count += 1;
        return;
    }
    let prev = *prefix.last().unwrap();
    let range = if prefix.len() % 2 == 1 { 1..prev } else { prev + 1..r + 1 };
    for v in range {
        prefix.push(v);
        extend(prefix, hit | (1 << v), n, r, count);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::zigzag;

    /// Unpruned scan of all `r^n` maps.
    fn naive(n: usize, r: usize) -> u64 {
        let total = (r as u64).pow(n as u32);
        (0..total)
            .filter(|&code| {
                let f: Vec<u64> = (0..n).map(|i| code / (r as u64).pow(i as u32) % r as u64).collect();
                let alt = f.windows(2).enumerate().all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] });
                let onto = (0..r as u64).all(|v| f.contains(&v));
                alt && onto
            })
            .count() as u64
    }

    #[test]
    fn by_hand() {
        assert_eq!(kreweras_u(3, 3).unwrap(), Integer::from(2));
        assert_eq!(kreweras_u(3, 2).unwrap(), Integer::from(1));
        assert_eq!(kreweras_u(3, 4).unwrap(), Integer::from(0));
        assert_eq!(kreweras_u(3, 0).unwrap(), Integer::from(0));
        assert_eq!(kreweras_u(1, 1).unwrap(), Integer::from(1));
    }

    #[test]
    fn pruned_matches_naive() {
        for n in 1..=6 {
            for r in 1..=n {
                assert_eq!(kreweras_u(n, r).unwrap(), Integer::from(naive(n, r)), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn bijective_case_is_zigzag() {
        let e = zigzag::<Integer>(9);
        for n in 1..=9 {
            assert_eq!(kreweras_u(n, n).unwrap(), e[n]);
        }
    }

    #[test]
    fn cap() {
        assert!(matches!(kreweras_u(10, 3), Err(Error::CapExceeded { cap: 9, .. })));
    }
}
