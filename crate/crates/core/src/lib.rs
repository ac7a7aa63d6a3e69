//! Numerical semigroups and the row-factorization machinery for almost
//! symmetric semigroups: pseudo-Frobenius numbers, RF-matrices, the good/bad
//! split of PF(S), admissible zero configurations and an exhaustive census.
//!
//! ```
//! use rfsemi::{classify_pf, NumericalSemigroup};
//!
//! let s: NumericalSemigroup = "64,67,91,138,150".parse().unwrap();
//! assert_eq!(s.pseudo_frobenius(), vec![209, 327, 445, 654]);
//! let c = classify_pf(&s).unwrap();
//! assert_eq!(c.bad, vec![327]);
//! ```

mod apery;
pub mod census;
pub mod configenum;
pub mod golden;
pub mod rfmatrix;
pub mod semigroup;

pub use configenum::{count_configs, enumerate_configs, ConfigError, SharedRows, ZeroConfig};
pub use rfmatrix::{
    classify_pf, factorizations, lambda_table, pair_report, rf_matrices, shared_positive_rows, zero_configuration,
    LambdaTable, PairPropertyReport, PfClassification, RfError, RfMatrix, RowFactorizations,
};
pub use semigroup::{parse_generators, GapProfile, NumericalSemigroup, SemigroupError};
