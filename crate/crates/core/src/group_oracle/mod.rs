//! Brute-force group theory over explicit multiplication tables: the
//! independent oracles for the lemmas on profinite groups, restricted to
//! finite quotients, and cocycle-level cohomology.

mod catalog;
mod cochain;
mod criteria;
mod group;

pub use catalog::{by_name, catalog_upto_24, sylow_catalog};
pub use cochain::{
    brute_cohomology, brute_cohomology_with_limits, enumerate_cohomology, linear_cohomology,
    BruteCohomology, CochainComplex, GModule, Limits, Method,
};
pub use criteria::{
    sweep_character_subgroups, sylow_reduction_limits, unit_characters, verify_lemma_1_9,
    verify_lemma_2_2_finite, verify_prop_1_1_analog, verify_prop_1_4, CharacterSubgroupOutcome,
    CharacterSubgroupSweep, LemmaInstance, SubnormalChain, SylowCriteriaReport,
    SylowReductionReport, SylowReductionRow,
};
pub use group::{
    alternating4, cyclic, dihedral, direct_product, from_permutations, generalized_dihedral,
    heisenberg, quaternion, semidirect, semidirect_cyclic, sl23, symmetric, FiniteGroup, Subset,
};
