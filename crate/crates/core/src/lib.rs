//! Exact enumeration of the permutations `A(n, n-k)`: permutations of
//! `1..=n` whose first `n-k` entries increase and whose longest increasing
//! subsequence has length at most `n-k`.
//!
//! The class is counted four independent ways (closed formula, brute-force
//! enumeration, recursion from a kernel vector, and Cramer solves of binomial
//! systems), and the binomial identities that connect those routes are
//! checked on integer grids. All arithmetic is exact.
//!
//! Linear algebra is generic over [`Scalar`]; the concrete aliases below are
//! what the counting pipeline uses.

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod golden;
pub mod identity_suite;
pub mod kernel_algebra;
pub mod perm_oracle;
pub mod pipeline;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use kernel_algebra::{ComponentVector, InitialVector, Matrix};
pub use perm_oracle::{Permutation, ProblemSize};
pub use report::{CheckEntry, CheckStatus, VerificationReport};
pub use scalar::Scalar;

/// Unbounded signed integer.
pub type ExactInt = num_bigint::BigInt;
/// Unbounded rational, always in lowest terms with positive denominator.
pub type ExactRat = num_rational::BigRational;
/// Dense matrix of exact rationals; the type of `C`, `M`, `Q`.
pub type ExactMatrix = Matrix<ExactRat>;
/// Dense matrix of exact integers.
pub type IntMatrix = Matrix<ExactInt>;
