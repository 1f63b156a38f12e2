//! Feasibility, construction, and exact counting for degree-list
//! realization problems.
//!
//! A *degree list* prescribes, for each of n vertices, how many arcs or
//! edges must touch it. Three realization kinds are supported, differing in
//! what the adjacency matrix may look like:
//!
//! - [`RealizationKind::LoopDigraph`]: directed graphs with loops allowed —
//!   any 0/1 matrix whose column sums are the indegrees `a` and row sums the
//!   outdegrees `b`;
//! - [`RealizationKind::Digraph`]: the same with a zero diagonal;
//! - [`RealizationKind::Graph`]: symmetric with a zero diagonal.
//!
//! The crate offers, per kind:
//!
//! - feasibility tests with diagnostics ([`feasibility`]): Gale–Ryser,
//!   Fulkerson–Chen–Anstee, and Erdős–Gallai characterizations, each
//!   phrased as a majorization bound against a threshold list;
//! - Ferrers/threshold constructions and threshold detection ([`ferrers`]);
//! - majorization, conjugation, and Muirhead transfer paths ([`majorize`]);
//! - a deterministic realization algorithm walking shift operations along a
//!   transfer path ([`construct`]);
//! - exact realization counting, bounded enumeration, and transfer-path
//!   lower bounds ([`count`]);
//! - minconvex/opposed extremal lists and the exhaustive experiments
//!   confirming their maximality ([`extremal`]).
//!
//! Counting is exact (big integers) and enumeration is deterministic; both
//! are desk-scale tools guarded against combinatorial blowup rather than
//! asymptotically tuned algorithms.

pub mod core;
pub mod count;
pub mod construct;
pub mod error;
pub mod extremal;
pub mod feasibility;
pub mod ferrers;
pub mod io;
pub mod majorize;

pub use crate::core::{
    lex_sort, sort_degrees, validate, BinaryMatrix, IntList, ListInput, PairedList,
    RealizationKind, Transfer, TransferDirection, TransferPath, ValidationReport, Violation,
};
pub use construct::{apply_shift, are_shift_adjacent, available_shifts, realize, Realization};
pub use count::{
    count_realizations, enumerate_realizations, lower_bound,
    permutation_count_invariance_check, BoundRule, CountMethod, CountResult, DEFAULT_GUARD,
};
pub use error::{Error, Result};
pub use extremal::{
    minconvex_base, minconvex_paired, opposed_sort, staircase_family, verify_extremal_max,
    ExtremalReport, MinconvexSpec, Pairing,
};
pub use feasibility::{
    brute_force_realizable, erdos_gallai, fulkerson_chen_anstee, gale_ryser, is_feasible,
    CheckResult, InfeasibilityReason,
};
pub use ferrers::{
    corresponding_threshold_list, digraphic_ferrers, graphic_threshold, is_threshold,
    loop_digraphic_ferrers,
};
pub use io::{emit_list_json, emit_list_text, parse_list};
pub use majorize::{apply_transfer, conjugate, convex_order_check, is_majorized, muirhead_path};
