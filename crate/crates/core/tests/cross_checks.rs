//! Cross-module identities: each side comes from a different module.

use hkq::combinatorics::{cached_swap_table, kreweras_u, swap_table, swap_table_cache_path, zigzag};
use hkq::hk::{ehk_function, ehk_matrix, gm_limit};
use hkq::polytope::{count_fibonacci, extended_vertex_count};
use hkq::rep_ring::diag_colength;
use hkq::matrices::hanmonsky_colength_matrix;
use hkq::Integer;

#[test]
fn hstar_counts_match_lattice_counts() {
    for d in 1..=10 {
        let t = swap_table(d).unwrap();
        for k in 0..=6 {
            assert_eq!(t.ehrhart_count(k), count_fibonacci::<Integer>(d, k), "d={d} k={k}");
        }
    }
}

#[test]
fn kreweras_matches_swap_moments() {
    for n in 1..=8 {
        let t = swap_table(n).unwrap();
        for r in 0..n {
            assert_eq!(kreweras_u(n, n - r).unwrap(), t.binomial_moment(r), "n={n} r={r}");
        }
    }
}

#[test]
fn volume_is_zigzag_over_factorial() {
    let e = zigzag::<Integer>(9);
    for d in 1..=9 {
        let p = hkq::hk::ehrhart_polynomial(d, false);
        let want = hkq::Rational::new(e[d].clone(), hkq::arith::factorial(d));
        assert_eq!(p.coeff(d), want, "d={d}");
    }
}

#[test]
fn colength_routes_agree() {
    for p in [3usize, 5, 7, 11, 13] {
        for e in [vec![2, 2], vec![2, 2, 2], vec![3, p, 2], vec![p - 1, 2, 3, 2]] {
            assert_eq!(diag_colength(p, &e).unwrap(), hanmonsky_colength_matrix(p, &e).unwrap());
        }
    }
}

#[test]
fn function_tends_to_limit() {
    // leading coefficients of the reduced quotient give the p -> infinity value
    for d in 1..=9 {
        let f = ehk_function(d).unwrap();
        let (num, den) = (f.reduced.numerator(), f.reduced.denominator());
        let lim = if num.degree() == den.degree() {
            num.leading_coeff().unwrap() / den.leading_coeff().unwrap()
        } else {
            panic!("degrees differ at d={d}");
        };
        assert_eq!(lim, gm_limit(d), "d={d}");
        assert!(ehk_matrix(101, d).unwrap() >= gm_limit(d));
    }
}

#[test]
fn vertex_sequence() {
    let v: Vec<Integer> = (1..=7).map(|d| extended_vertex_count(d).unwrap()).collect();
    assert_eq!(v, [2, 4, 6, 12, 20, 36, 64].map(Integer::from));
}

#[test]
fn swap_cache_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = cached_swap_table(dir.path(), 7, 12).unwrap();
    let bytes = std::fs::read(swap_table_cache_path(dir.path(), 7)).unwrap();
    let second = cached_swap_table(dir.path(), 7, 12).unwrap();
    assert_eq!(first, second);
    assert_eq!(first, swap_table(7).unwrap());
    assert_eq!(bytes, first.to_cache_json().into_bytes());
}
