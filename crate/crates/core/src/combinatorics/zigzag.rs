use crate::Scalar;

/// Euler zigzag numbers `E_0, ..., E_{n_max}` via the Seidel–Entringer
/// (boustrophedon) triangle.
pub fn zigzag<T: Scalar>(n_max: usize) -> Vec<T> {
    let mut out = vec![T::one()];
    let mut row = vec![T::one()];
    for n in 1..=n_max {
        // E(n, 0) = 0, E(n, k) = E(n, k-1) + E(n-1, n-k)
        let mut next = Vec::with_capacity(n + 1);
        next.push(T::zero());
        for k in 1..=n {
            let v = next[k - 1].clone() + row[n - k].clone();
            next.push(v);
        }
        out.push(next[n].clone());
        row = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, rat_int};
    use crate::combinatorics::is_alternating;
    use crate::{Integer, Rational};

    fn brute_count(n: usize) -> u64 {
        fn rec(perm: &mut Vec<u8>, used: u32, n: usize, count: &mut u64) {
            if perm.len() == n {
                if is_alternating(perm) {
                    *count += 1;
                }
                return;
            }
            for v in 1..=n as u8 {
                if used & (1 << v) == 0 {
                    perm.push(v);
                    rec(perm, used | (1 << v), n, count);
                    perm.pop();
                }
            }
        }
        let mut count = 0;
        rec(&mut Vec::new(), 0, n, &mut count);
        count
    }

    /// `n! [x^n] (sec x + tan x)` by exact power-series division.
    fn sec_plus_tan(n_max: usize) -> Vec<Integer> {
        let len = n_max + 1;
        let coeff = |k: usize, even: bool| -> Rational {
            if k.is_multiple_of(2) != even {
                return rat_int(0);
            }
            let sign = if (k / 2).is_multiple_of(2) { 1 } else { -1 };
            Rational::new(Integer::from(sign), factorial(k))
        };
        let cos: Vec<Rational> = (0..len).map(|k| coeff(k, true)).collect();
        let sin: Vec<Rational> = (0..len).map(|k| coeff(k, false)).collect();
        let num: Vec<Rational> = (0..len).map(|k| if k == 0 { rat_int(1) } else { rat_int(0) } + sin[k].clone()).collect();
        // series quotient num / cos
        let mut q = vec![rat_int(0); len];
        for k in 0..len {
            let acc = (1..=k).fold(num[k].clone(), |acc, j| acc - cos[j].clone() * q[k - j].clone());
            q[k] = acc / cos[0].clone();
        }
        q.iter().enumerate().map(|(k, c)| (c * Rational::from_integer(factorial(k))).to_integer()).collect()
    }

    #[test]
    fn small_values() {
        assert_eq!(zigzag::<u64>(0), vec![1]);
        assert_eq!(zigzag::<u64>(6), vec![1, 1, 1, 2, 5, 16, 61]);
    }

    #[test]
    fn agrees_with_enumeration() {
        let e = zigzag::<u64>(10);
        for n in 1..=10 {
            assert_eq!(e[n], brute_count(n), "n = {n}");
        }
    }

    #[test]
    fn agrees_with_secant_tangent_series() {
        let series = sec_plus_tan(20);
        assert_eq!(zigzag::<Integer>(20), series);
        assert_eq!(series[12], Integer::from(2_702_765));
    }
}
