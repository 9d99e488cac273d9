//! Exact verification of partition generating-function identities, theta
//! quotients, Dirichlet-series coefficient claims and Schur-function
//! determinant formulas.
//!
//! Every series is a truncated power series with arbitrary-precision integer
//! coefficients; identities are checked coefficient by coefficient.

pub mod analytic;
pub mod dirichlet;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod qseries;
pub mod schur;

pub use error::{Error, Result};
pub use partitions::{
    count_restricted, enumerate_restricted, gen_series, graded_gen_series, named_constraint,
    FirstDiff, Multiplicity, PartFilter, PartitionConstraint, Status, Verdict,
};
pub use qseries::{expand_product, make_series, parse_product, FactorFamily, Power, Sign, TruncatedSeries};
