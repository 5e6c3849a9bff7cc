//! The binomial matrices `C`, `M`, `Q`, the vectors `V`, `U`, and the
//! closed-form determinant of the two-parameter binomial matrix.

use num_traits::{One, Zero};

use super::{InitialVector, Matrix};
use crate::exact_arith::{binomial, factorial, format_rat, rat, rat_int, sign_pow};
use crate::report::CheckEntry;
use crate::{Error, ExactInt, ExactMatrix, ExactRat, Result};

fn require_n_ge_2k(n: usize, k: usize) -> Result<()> {
    if n < 2 * k {
        Err(Error::domain(format!("n ≥ 2k violated (n={n}, k={k})")))
    } else {
        Ok(())
    }
}

fn int(v: usize) -> i64 {
    i64::try_from(v).expect("index fits i64")
}

/// Transfer matrix: entry `(i, r)` is `binom(r + n - 2k - i - 1, r - i)`.
///
/// Upper unitriangular; the identity at `n = 2k`.
pub fn build_c(n: usize, k: usize) -> Result<ExactMatrix> {
    require_n_ge_2k(n, k)?;
    let shift = int(n) - 2 * int(k);
    Ok(Matrix::from_fn(k + 1, k + 1, |i, r| {
        let (i, r) = (int(i), int(r));
        rat_int(binomial(r + shift - i - 1, r - i))
    }))
}

/// Entry `(i, j)` is `binom(i + j - 2k - 1, j - 1)`.
pub fn build_m(k: usize) -> ExactMatrix {
    let k = int(k);
    Matrix::from_fn(k as usize + 1, k as usize + 1, |i, j| {
        let (i, j) = (int(i), int(j));
        rat_int(binomial(i + j - 2 * k - 1, j - 1))
    })
}

/// Entry `(i, j)` is `(-1)^(j-1) binom(n - i - 1, j - 1)`.
pub fn build_q(k: usize, n: usize) -> Result<ExactMatrix> {
    require_n_ge_2k(n, k)?;
    let n = int(n);
    Ok(Matrix::from_fn(k + 1, k + 1, |i, j| {
        let (i, j) = (int(i), int(j));
        rat_int(sign_pow(j - 1) * binomial(n - i - 1, j - 1))
    }))
}

pub fn build_v(k: usize) -> InitialVector {
    let kk = int(k);
    let values = (1..=kk + 1)
        .map(|i| {
            (0..=kk.min(i))
                .map(|b| {
                    sign_pow(kk - b) * binomial(kk, b) * binomial(i, b) * factorial(b as u64)
                })
                .sum::<ExactInt>()
        })
        .collect();
    InitialVector { k, values }
}

/// Row vector with `u_j = (-1)^(k+1-j) binom(n-2,k) binom(k,j-1) (n-1)/(n-j)`.
pub fn build_u(k: usize, n: usize) -> Result<Vec<ExactRat>> {
    require_n_ge_2k(n, k)?;
    if n <= k + 1 {
        return Err(Error::domain(format!(
            "denominator n-j vanishes at j={n} (need n > k+1, got n={n}, k={k})"
        )));
    }
    let (k, n) = (int(k), int(n));
    Ok((1..=k + 1)
        .map(|j| {
            let scale = sign_pow(k + 1 - j) * binomial(n - 2, k) * binomial(k, j - 1);
            rat_int(scale) * rat(n - 1, n - j)
        })
        .collect())
}

/// Entry `(i, j)` is `binom(i + j + x + y, i + x)`.
pub fn binomial_grid_matrix(k: usize, x: i64, y: i64) -> ExactMatrix {
    Matrix::from_fn(k + 1, k + 1, |i, j| {
        let (i, j) = (int(i), int(j));
        rat_int(binomial(i + j + x + y, i + x))
    })
}

/// `prod_{i=1}^{k+1} binom(i+1+x+y, i+x) / binom(i+y, 1+y)`, the closed form
/// of `det(binomial_grid_matrix(k, x, y))`.
pub fn det_product_formula(k: usize, x: i64, y: i64) -> Result<ExactRat> {
    let mut acc = ExactRat::one();
    for i in 1..=int(k) + 1 {
        let divisor = binomial(i + y, 1 + y);
        if divisor.is_zero() {
            return Err(Error::VanishingDivisor { i, y });
        }
        acc *= ExactRat::new(binomial(i + 1 + x + y, i + x), divisor);
    }
    Ok(acc)
}

pub fn check_qc_equals_m(k: usize, n: usize) -> CheckEntry {
    let params = [("k", int(k)), ("n", int(n))];
    let outcome = (|| -> std::result::Result<(), String> {
        let q = build_q(k, n).map_err(|e| e.to_string())?;
        let c = build_c(n, k).map_err(|e| e.to_string())?;
        let qc = q.mul(&c).map_err(|e| e.to_string())?;
        let m = build_m(k);
        match qc.first_difference(&m) {
            None => Ok(()),
            Some((i, j)) => Err(format!(
                "(QC)[{i},{j}] = {} but M[{i},{j}] = {}",
                format_rat(&qc[(i - 1, j - 1)]),
                format_rat(&m[(i - 1, j - 1)])
            )),
        }
    })();
    CheckEntry::from_outcome("qc_equals_m", &params, outcome)
}

pub fn check_uq_equals_ones(k: usize, n: usize) -> CheckEntry {
    let params = [("k", int(k)), ("n", int(n))];
    let outcome = (|| -> std::result::Result<(), String> {
        let u = build_u(k, n).map_err(|e| e.to_string())?;
        let q = build_q(k, n).map_err(|e| e.to_string())?;
        let uq = q.left_mul_vec(&u).map_err(|e| e.to_string())?;
        match uq.iter().position(|x| !x.is_one()) {
            None => Ok(()),
            Some(j) => Err(format!("(UQ)[{}] = {}", j + 1, format_rat(&uq[j]))),
        }
    })();
    CheckEntry::from_outcome("uq_equals_ones", &params, outcome)
}
