//! Exact scalars, truncated series, colored partitions and exact linear algebra.
//!
//! Everything downstream (root data, Fock spaces, filtrations) is computed over
//! [`Q`] or over a cyclotomic field [`CycScalar`]; both implement [`Scalar`],
//! which is what the generic linear algebra in [`linalg`] works with.

pub mod cyclotomic;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod series;
pub mod tpoly;

pub use cyclotomic::{cyclotomic_polynomial, CycScalar};
pub use linalg::{nullspace, rank, EchelonBasis, SparseVec};
pub use partitions::{colored_partitions, colored_partitions_table, partitions_into_parts};
pub use rational::{generalized_binomial, int_binomial, q, qi, Scalar, Q};
pub use series::{product_series, ProductFactor, QSeries, SeriesTQ};
pub use tpoly::TPoly;
