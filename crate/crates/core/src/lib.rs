//! Exact computations around the basic representation of affine `sl(l+1)`:
//! Lusztig t-analogs of level-one weight multiplicities, the W-algebra inside
//! the Heisenberg vertex algebra, the principally twisted Fock space and the
//! Brylinski filtration on the W-span of its vacuum.
//!
//! The main entry points are collected in the runnable programs under
//! `examples/`; the `wbasis` binary is a thin batch driver over [`cli`].

pub mod brylinski;
pub mod cli;
pub mod exactcore;
pub mod heisenberg;
pub mod rootsys;
pub mod tanalog;
pub mod twistedfock;
pub mod walgebra;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("factor (1 - t^0 q^0) has no inverse")]
    SingularFactor,
    #[error("weights have different levels ({0} vs {1})")]
    LevelMismatch(String, String),
    #[error("mode of {ticks} ticks (1/{denom} each) is not legal for eigen-label {label}")]
    IllegalMode { label: usize, ticks: i64, denom: i64 },
    #[error("mode {value} is not in (1/{denom})Z")]
    OffLattice { value: String, denom: i64 },
    #[error("invalid PBW word: {0}")]
    InvalidWord(String),
    #[error("state is not homogeneous")]
    NotHomogeneous,
    #[error("s_{i} - s_{j} is an integer")]
    IntegralDifference { i: usize, j: usize },
    #[error("no new generator in degree {0}")]
    EmptyCoset(usize),
    #[error("computation did not stabilise: {0}")]
    Unstable(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
