//! Arithmetic in Z/p^n, characters of cyclic groups, group-ring idempotents
//! and the eigenmodule calculus built on them.

mod dual;
mod eigen;
mod group_ring;
mod induce;
mod module;
mod modulus;
mod supernatural;

pub use dual::{dual_decompose, DualDecomposition, DualModule, DualPairReport};
pub use eigen::{eigen_decompose, eigen_decompose_all, EigenDecomposition, Eigencomponent};
pub use group_ring::{check_idempotents, idempotent, idempotents, GroupRingElem, IdempotentCheck};
pub use induce::{induce, induce_and_project, InductionWitness};
pub use module::{twist, twist_fixed_identity, CyclicActionModule, Submodule};
pub use modulus::{enumerate_characters, Modulus, UnitCharacter};
pub use supernatural::{tower_check, Exponent, SupernaturalNumber};
