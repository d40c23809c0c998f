//! Exact computations around Kummer theory for p-extensions: eigenmodules of
//! p^n-torsion modules under cyclic actions, cyclic group cohomology,
//! finite-field towers, symbol algebras and valuations on iterated Laurent
//! series fields. Every closed formula is paired with an independent
//! brute-force computation so the two can be compared.

pub mod arith;
pub mod core_alg;
pub mod cyclic_cohomology;
pub mod error;
pub mod field_tower;
pub mod fields;
pub mod group_oracle;
pub mod linalg;
pub mod report;
pub mod sweeps;
pub mod symbol_calculus;
pub mod valuation_engine;

pub use core_alg::{CyclicActionModule, Modulus, Submodule, SupernaturalNumber, UnitCharacter};
pub use error::{Error, Result};
pub use report::{Check, Report};
