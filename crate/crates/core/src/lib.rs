//! Strong control dependence on control flow graphs.
//!
//! - [`ntscd_new`]: non-termination sensitive control dependence in
//!   `O(|V|^2)` via backward coloring.
//! - [`dod_new`]: decisive order dependence in `O(|V|^3)` via projection
//!   graphs.
//! - [`strong_closure`]: minimal strongly control-closed supersets.
//!
//! The worklist algorithm of [`ranganath`] and the direct evaluation in
//! [`dod_formula`] are kept for comparison, and [`oracle`] holds
//! brute-force references for small graphs.

pub mod cfg;
pub mod closure;
pub mod dod;
pub mod dod_formula;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod maximal_paths;
pub mod ntscd;
pub mod oracle;
pub mod ranganath;
pub mod relation;
pub mod scc;
pub mod set;

pub use cfg::{Cfg, CfgBuilder, NodeId};
pub use closure::{
    dependence_closure, is_strongly_control_closed, strong_closure, theta, ClosureResult,
    ClosureSpec, ClosureVerdict, Violation, ViolationKind,
};
pub use dod::{dod_new, dod_new_with_ntscd};
pub use dod_formula::{dod_formula, FormulaVariant};
pub use error::{AnalysisError, CfgError, ClosureError, GenerateError, Location, OracleError};
pub use format::{parse_cfg, serialize_cfg, GraphFormat};
pub use generate::{random_cfg, random_reducible_cfg, worst_case_dod_cfg};
pub use maximal_paths::{color_all_paths_contain, first_before_on_all, vp_sets, VpMap};
pub use ntscd::{ntscd_from_vp, ntscd_new, ntscd_of};
pub use ranganath::{
    ntscd_ranganath, ntscd_ranganath_fixed, PolicySpec, RanganathOutcome, WorklistPolicy,
};
pub use relation::{DodRelation, NtscdRelation};
pub use scc::{sccs, SccPartition};
pub use set::NodeSet;
