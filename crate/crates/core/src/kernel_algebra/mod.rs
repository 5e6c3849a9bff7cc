//! Exact dense linear algebra and the structured binomial matrices that
//! connect the kernel vector to every component vector.
//!
//! Indices in documentation and error messages are 1-based; storage is
//! 0-based.

mod det;
mod matrix;
mod structured;

pub use det::{cramer_numerators, det_bareiss, det_dodgson, solve_cramer};
pub use matrix::Matrix;
pub use structured::{
    binomial_grid_matrix, build_c, build_m, build_q, build_u, build_v, check_qc_equals_m,
    check_uq_equals_ones, det_product_formula,
};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::exact_arith::{rat_int, ser_ints};
use crate::{ExactInt, ExactRat};

/// `[#B(1), ..., #B(k+1)]` for one `(n, k)`; at `n = 2k` this is the kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVector {
    k: usize,
    #[serde(serialize_with = "ser_ints")]
    counts: Vec<ExactInt>,
}

impl ComponentVector {
    pub fn new(k: usize, counts: Vec<ExactInt>) -> Self {
        assert_eq!(counts.len(), k + 1, "component vector must have k+1 entries");
        ComponentVector { k, counts }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn counts(&self) -> &[ExactInt] {
        &self.counts
    }

    /// `#B(i)`, 1-based.
    pub fn get(&self, i: usize) -> &ExactInt {
        &self.counts[i - 1]
    }

    pub fn total(&self) -> ExactInt {
        self.counts.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.counts.iter().all(|c| !c.is_negative())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.counts.iter().map(BigInt::to_string).collect()
    }

    pub fn as_rats(&self) -> Vec<ExactRat> {
        self.counts.iter().cloned().map(rat_int).collect()
    }
}

/// `v_i = sum_b (-1)^(k-b) binom(k,b) binom(i,b) b!` for `i = 1..=k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitialVector {
    k: usize,
    #[serde(serialize_with = "ser_ints")]
    values: Vec<ExactInt>,
}

impl InitialVector {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[ExactInt] {
        &self.values
    }

    pub fn as_rats(&self) -> Vec<ExactRat> {
        self.values.iter().cloned().map(rat_int).collect()
    }
}
