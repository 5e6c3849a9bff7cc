//! Determinant engines and Cramer solves.

use super::Matrix;
use crate::{Error, Result, Scalar};

fn require_square<T: Scalar>(a: &Matrix<T>) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::Dimension(format!(
            "determinant of a non-square {}x{} matrix",
            a.rows(),
            a.cols()
        )))
    }
}

/// Fraction-free (Bareiss) elimination with full pivot search.
///
/// Every intermediate is a minor of the input, so each division is exact in
/// any integral domain.
pub fn det_bareiss<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    let mut m = a.to_rows();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        let Some((p, q)) = (k..n)
            .flat_map(|i| (k..n).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero())
        else {
            return Ok(T::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        if q != k {
            for row in m.iter_mut() {
                row.swap(q, k);
            }
            negate = !negate;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let lead = m[i][k].clone();
            for j in k + 1..n {
                let num = m[i][j].clone() * pivot.clone() - lead.clone() * m[k][j].clone();
                m[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss quotient is a minor, hence exact");
            }
            m[i][k] = T::zero();
        }
        prev = pivot;
    }
    let det = if n == 0 { T::one() } else { m[n - 1][n - 1].clone() };
    Ok(if negate { -det } else { det })
}

/// Dodgson condensation.
///
/// Stage `t` holds the determinants of all contiguous `t x t` blocks; each
/// stage is formed from 2x2 determinants of the previous one divided by the
/// interior of the one before. Where that interior entry is zero, the entry
/// is computed directly as a block determinant by [`det_bareiss`].
pub fn det_dodgson<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = require_square(a)?;
    if n == 0 {
        return Ok(T::one());
    }
    // stage t-1 and stage t, as dense rows
    let mut before: Vec<Vec<T>> = vec![vec![T::one(); n + 1]; n + 1];
    let mut current: Vec<Vec<T>> = a.to_rows();
    for t in 1..n {
        let size = n - t;
        let mut next = vec![vec![T::zero(); size]; size];
        for i in 0..size {
            for j in 0..size {
                let divisor = &before[i + 1][j + 1];
                next[i][j] = if divisor.is_zero() {
                    det_bareiss(&a.block(i, j, t + 1))?
                } else {
                    let cross = current[i][j].clone() * current[i + 1][j + 1].clone()
                        - current[i][j + 1].clone() * current[i + 1][j].clone();
                    cross
                        .exact_div(divisor)
                        .expect("condensation quotient is a block minor, hence exact")
                };
            }
        }
        before = current;
        current = next;
    }
    Ok(current[0][0].clone())
}

/// `det(a with column i replaced by v)` for each `i`.
pub fn cramer_numerators<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Result<Vec<T>> {
    let n = require_square(a)?;
    if v.len() != n {
        return Err(Error::Dimension(format!(
            "{n}x{n} system with a length-{} right-hand side",
            v.len()
        )));
    }
    (1..=n).map(|i| det_bareiss(&a.with_column(i, v)?)).collect()
}

/// Solves `a x = v` by column-replacement determinants.
pub fn solve_cramer<T: Scalar>(a: &Matrix<T>, v: &[T]) -> Result<Vec<T>> {
    let numerators = cramer_numerators(a, v)?;
    let det = det_bareiss(a)?;
    if det.is_zero() {
        return Err(Error::singular(&det));
    }
    numerators
        .iter()
        .enumerate()
        .map(|(i, num)| {
            num.exact_div(&det).ok_or_else(|| {
                Error::domain(format!(
                    "component {} = {num}/{det} is not exact in this scalar type",
                    i + 1
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn m(rows: Vec<Vec<i64>>) -> Matrix<i64> {
        Matrix::from_rows(rows).unwrap()
    }

    // Leibniz expansion over all permutations.
    fn det_leibniz(a: &Matrix<i64>) -> i128 {
        use itertools::Itertools;
        let n = a.rows();
        (0..n)
            .permutations(n)
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let prod: i128 = (0..n).map(|i| a[(i, p[i])] as i128).product();
                if inversions % 2 == 0 { prod } else { -prod }
            })
            .sum()
    }

    #[test]
    fn small_examples() {
        let a = m(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(det_bareiss(&a).unwrap(), -2);
        assert_eq!(det_dodgson(&a).unwrap(), -2);
        let ones = Matrix::from_fn(4, 4, |_, _| 1i64);
        assert_eq!(det_dodgson(&ones).unwrap(), 0);
        assert_eq!(det_bareiss(&ones).unwrap(), 0);
        assert_eq!(det_bareiss(&Matrix::<i64>::identity(0)).unwrap(), 1);
        assert_eq!(det_dodgson(&m(vec![vec![-7]])).unwrap(), -7);
    }

    #[test]
    fn pivoting_needed() {
        // zero top-left and zero interior
        let a = m(vec![vec![0, 1, 2], vec![3, 0, 4], vec![5, 6, 0]]);
        assert_eq!(det_bareiss(&a).unwrap(), det_leibniz(&a) as i64);
        assert_eq!(det_dodgson(&a).unwrap(), det_leibniz(&a) as i64);
    }

    #[test]
    fn non_square_rejected() {
        let a = Matrix::new(2, 3, vec![1i64; 6]).unwrap();
        assert!(matches!(det_bareiss(&a), Err(Error::Dimension(_))));
        assert!(matches!(det_dodgson(&a), Err(Error::Dimension(_))));
        assert!(solve_cramer(&a, &[1, 1]).is_err());
    }

    #[test]
    fn cramer_solves() {
        let a = m(vec![vec![2, 1], vec![1, 3]]).map(|&x| Ratio::from_integer(x));
        let v = [Ratio::from_integer(3i64), Ratio::from_integer(5)];
        let x = solve_cramer(&a, &v).unwrap();
        assert_eq!(x, [Ratio::new(4, 5), Ratio::new(7, 5)]);
        assert_eq!(a.mul_vec(&x).unwrap(), v);
        let id = Matrix::<i64>::identity(3);
        assert_eq!(solve_cramer(&id, &[4, -1, 2]).unwrap(), [4, -1, 2]);
        let singular = m(vec![vec![1, 2], vec![2, 4]]);
        assert!(matches!(solve_cramer(&singular, &[1, 1]), Err(Error::Singular { .. })));
        // integral domain without exact quotient
        assert!(matches!(solve_cramer(&m(vec![vec![2]]), &[1]), Err(Error::Domain(_))));
        assert!(solve_cramer(&id, &[1, 2]).is_err());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix<i64>> {
        (1usize..=6).prop_flat_map(|n| {
            (
                proptest::collection::vec(-6i64..=6, n * n),
                proptest::collection::vec(any::<bool>(), n * n),
            )
                .prop_map(move |(vals, zero)| {
                    // plant zeros in the interior with probability 1/2
                    let data = vals
                        .into_iter()
                        .zip(zero)
                        .enumerate()
                        .map(|(t, (v, z))| {
                            let (i, j) = (t / n, t % n);
                            let interior = i > 0 && j > 0 && i + 1 < n && j + 1 < n;
                            if interior && z { 0 } else { v }
                        })
                        .collect();
                    Matrix::new(n, n, data).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn engines_agree_with_leibniz(a in small_matrix()) {
            let expect = det_leibniz(&a);
            prop_assert_eq!(det_bareiss(&a).unwrap() as i128, expect);
            prop_assert_eq!(det_dodgson(&a).unwrap() as i128, expect);
            let big = a.map(|&x| num_bigint::BigInt::from(x));
            prop_assert_eq!(det_dodgson(&big).unwrap(), num_bigint::BigInt::from(expect));
            let q = a.map(|&x| Ratio::from_integer(x as i128));
            prop_assert_eq!(det_dodgson(&q).unwrap(), Ratio::from_integer(expect));
        }

        #[test]
        fn cramer_satisfies_system(a in small_matrix(), v in proptest::collection::vec(-9i64..=9, 6)) {
            let n = a.rows();
            let q = a.map(|&x| Ratio::from_integer(x as i128));
            let rhs: Vec<_> = v[..n].iter().map(|&x| Ratio::from_integer(x as i128)).collect();
            match solve_cramer(&q, &rhs) {
                Ok(x) => prop_assert_eq!(q.mul_vec(&x).unwrap(), rhs),
                Err(Error::Singular { .. }) => prop_assert_eq!(det_leibniz(&a), 0),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
