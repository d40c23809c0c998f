//! Shared fixtures for the criterion benchmarks.

use kummer_core::core_alg::{CyclicActionModule, Modulus};
use kummer_core::linalg::Mat;

/// Z/9 ⊕ Z/3 with the generator of C_2 acting by −1.
pub fn negation_on_z9_z3() -> CyclicActionModule {
    let m = Modulus::new(3, 2).unwrap();
    CyclicActionModule::new(m, vec![2, 1], Mat::from_rows(&[vec![8, 0], vec![0, 8]]), 2).unwrap()
}

/// (Z/7)^2 with a generator of order 6 acting diagonally by 3 and 2.
pub fn diagonal_on_f7_squared() -> CyclicActionModule {
    let m = Modulus::new(7, 1).unwrap();
    CyclicActionModule::new(m, vec![1, 1], Mat::from_rows(&[vec![3, 0], vec![0, 2]]), 6).unwrap()
}

/// Towers small enough for every check to run in microseconds.
pub const TOWERS: [(u64, u64, u32); 4] = [(7, 3, 2), (2, 5, 2), (2, 3, 3), (4, 7, 2)];
