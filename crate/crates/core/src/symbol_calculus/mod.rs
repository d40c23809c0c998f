//! Symbol algebras over exact fields, their relabeling isomorphisms, formal
//! Brauer-symbol classes with Galois eigendata, and cyclicity witnesses.

mod algebra;
mod cyclic;
mod formal;

pub use algebra::{build_symbol, rank, relabel_iso, Relabeling, SymbolAlgebra, SymbolChecks};
pub use cyclic::{
    contradiction_element, cyclicity_witness, Contradiction, CyclicAlgebra,
    CyclicAlgebraPresentation, CyclicityWitness,
};
pub use formal::{
    eigen_split_class, eigen_split_module, galois_eigenclass, prop34_fixed_check, EigenSplit,
    Eigenclass, FormalSymbol, FormalSymbolClass, RewriteStep, SplitComponent,
};
