use super::Polynomial;
use crate::error::{Error, Result};
use crate::Scalar;

/// The unique polynomial of degree `< points.len()` through every point.
///
/// Newton's divided differences, expanded to the monomial basis. `T` must be
/// a field for the result to be exact.
pub fn interpolate<T: Scalar>(points: &[(T, T)]) -> Result<Polynomial<T>> {
    if points.is_empty() {
        return Err(Error::EmptyInterpolation);
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DegenerateNode(format!("{xi:?}")));
        }
    }

    let xs: Vec<T> = points.iter().map(|(x, _)| x.clone()).collect();
    let mut table: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
    // After pass `level`, table[i] holds f[x_{i-level}, ..., x_i].
    for level in 1..xs.len() {
        for i in (level..xs.len()).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = xs[i].clone() - xs[i - level].clone();
            table[i] = num / den;
        }
    }

    let mut poly = Polynomial::constant(table[xs.len() - 1].clone());
    for i in (0..xs.len() - 1).rev() {
        let factor = Polynomial::linear(T::one(), T::zero() - xs[i].clone());
        poly = &(&poly * &factor) + &Polynomial::constant(table[i].clone());
    }
    Ok(poly)
}

/// Interpolate `k ↦ f(k)` from the integer samples `k = 0..=degree`.
pub fn interpolate_samples<T, F>(degree: usize, mut f: F) -> Result<Polynomial<T>>
where
    T: Scalar,
    F: FnMut(usize) -> T,
{
    let points: Vec<(T, T)> = (0..=degree).map(|k| (T::from_usize_exact(k), f(k))).collect();
    interpolate(&points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QPolynomial, Rational};
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn pts(raw: &[(i64, i64)]) -> Vec<(Rational, Rational)> {
        raw.iter().map(|&(x, y)| (q(x), q(y))).collect()
    }

    #[test]
    fn line_and_square() {
        assert_eq!(interpolate(&pts(&[(0, 1), (1, 2)])).unwrap(), QPolynomial::linear(q(1), q(1)));
        assert_eq!(
            interpolate(&pts(&[(0, 0), (1, 1), (2, 4)])).unwrap(),
            QPolynomial::monomial(q(1), 2)
        );
    }

    #[test]
    fn fibonacci_three_counts() {
        // |kF_3| for k = 0..3, brute-forced in polytope tests.
        let p = interpolate(&pts(&[(0, 1), (1, 5), (2, 14), (3, 30)])).unwrap();
        // C(k+3,3) + C(k+2,3) = (2k^3 + 9k^2 + 13k + 6)/6
        let expected = QPolynomial::new(vec![
            q(1),
            Rational::new(13.into(), 6.into()),
            Rational::new(3.into(), 2.into()),
            Rational::new(1.into(), 3.into()),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn rejects_repeated_node() {
        let err = interpolate(&pts(&[(0, 1), (2, 3), (0, 5)])).unwrap_err();
        assert!(err.to_string().contains("degenerate interpolation node"));
        assert_eq!(interpolate::<Rational>(&[]), Err(Error::EmptyInterpolation));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..8).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    proptest! {
        #[test]
        fn passes_through_every_node(
            ys in prop::collection::vec(small_rational(), 1..7),
            xs in prop::collection::btree_set(-40i64..40, 7),
        ) {
            let points: Vec<_> = xs.into_iter().zip(ys).map(|(x, y)| (q(x) / q(3), y)).collect();
            let p = interpolate(&points).unwrap();
            for (x, y) in &points {
                prop_assert_eq!(&p.eval(x), y);
            }
            prop_assert!(p.degree().is_none_or(|d| d < points.len()));
        }

        #[test]
        fn degree_minimal_on_polynomial_samples(
            coeffs in prop::collection::vec(small_rational(), 1..6),
        ) {
            let truth = QPolynomial::new(coeffs);
            let extra = truth.degree().unwrap_or(0) + 2;
            let p = interpolate_samples(extra - 1, |k| truth.eval(&q(k as i64))).unwrap();
            prop_assert_eq!(p, truth);
        }
    }
}
