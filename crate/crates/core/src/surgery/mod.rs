//! Code surgery: gluing gadget complexes onto codes along logical operators.

pub mod colimit;
pub mod logicals;
pub mod merge;
pub mod report;
pub mod span;

pub use colimit::{coequalise, ChainInclusion, Coequaliser};
pub use merge::{
    external_merge, external_merge_with_span, internal_merge, parallel_external_merge, parallel_single_qubit_measure,
    single_qubit_measure, MergeOutcome, MergePair, Operation,
};
pub use report::{escalate_depth, merge_report, surface_baseline, Escalation, MergeReport, SurfaceBaseline};
pub use span::{find_matrix_span, find_monic_span, MonicSpan};
