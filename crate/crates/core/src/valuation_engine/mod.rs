//! Iterated Laurent series fields k((x_1))…((x_r)) with the rank-r value group
//! Z^r ordered right to left, and the valuation data along F → L → F(p).

mod descriptor;
mod kummer;
mod laurent;
mod value_group;

pub use descriptor::{
    count_extensions_along, cyclotomic_degree_by_search, extend_to_l, mixed_example_descriptors,
    predict_fp_extension, ExtensionToL, FpPrediction, KummerCase, Residue, TowerCount, TowerStage,
    ValuedFieldDescriptor,
};
pub use kummer::{
    classify_kummer_case, is_pth_power, laurent_power_classes, symbol_division_test,
    DivisionTestResult, DivisionType, KummerCaseReport, PowerClassReport, ENUMERATION_LIMIT,
};
pub use laurent::{default_precision, valuate, LaurentElement, DEFAULT_PRECISION};
pub use value_group::{lex_cmp, LexValueGroup};
