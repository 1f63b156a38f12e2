//! The three classical realization tests — Gale-Ryser (loop-digraphs),
//! Fulkerson-Chen-Anstee (digraphs), Erdős-Gallai (graphs) — plus an
//! independent brute-force oracle used to cross-validate them.
//!
//! The tests never error on bad lists: unbalanced or out-of-bounds input
//! yields `feasible: false` with a machine-readable reason, so exhaustive
//! experiment loops need no special casing.

use serde::Serialize;
use std::fmt;

use crate::core::{lex_sort, BinaryMatrix, IntList, ListInput, PairedList, RealizationKind};
use crate::error::{Error, Result};
use crate::ferrers::{digraphic_ferrers, graphic_threshold};

/// Why a list failed its feasibility test. Positions and prefix lengths are
/// 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InfeasibilityReason {
    /// Σa ≠ Σb.
    UnbalancedSums { sum_a: usize, sum_b: usize },
    /// An entry exceeds the kind's bound.
    EntryOutOfBounds {
        position: usize,
        component: &'static str,
        value: usize,
        max: usize,
    },
    /// A graphic list must have even total degree.
    OddSum { sum: usize },
    /// A graph realization has equal in- and outdegrees, so paired input
    /// must satisfy a_i = b_i.
    AsymmetricPair { position: usize },
    /// The first prefix at which the sorted list exceeds its threshold
    /// list, i.e. where the majorization certificate fails.
    MajorizationFailure { prefix_length: usize },
}

impl fmt::Display for InfeasibilityReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            InfeasibilityReason::UnbalancedSums { sum_a, sum_b } => {
                write!(f, "sum of a is {sum_a} but sum of b is {sum_b}")
            }
            InfeasibilityReason::EntryOutOfBounds {
                position,
                component,
                value,
                max,
            } => write!(
                f,
                "{component} entry at position {position} is {value}, above the bound {max}"
            ),
            InfeasibilityReason::OddSum { sum } => {
                write!(f, "total degree {sum} is odd")
            }
            InfeasibilityReason::AsymmetricPair { position } => {
                write!(f, "pair at position {position} has unequal components")
            }
            InfeasibilityReason::MajorizationFailure { prefix_length } => write!(
                f,
                "prefix of length {prefix_length} exceeds the threshold list's prefix"
            ),
        }
    }
}

/// Outcome of a feasibility test. `threshold` carries the corresponding
/// threshold list whenever the input was well-formed enough to build it —
/// for both feasible and infeasible lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub feasible: bool,
    pub reason: Option<InfeasibilityReason>,
    pub threshold: Option<PairedList>,
}

impl CheckResult {
    fn pass(threshold: PairedList) -> Self {
        CheckResult {
            feasible: true,
            reason: None,
            threshold: Some(threshold),
        }
    }

    fn fail(reason: InfeasibilityReason, threshold: Option<PairedList>) -> Self {
        CheckResult {
            feasible: false,
            reason: Some(reason),
            threshold,
        }
    }
}

/// First 1-based prefix length at which Σa exceeds Σa′, if any. With equal
/// totals, `None` is exactly majorization.
fn first_prefix_violation(a: &IntList, aprime: &IntList) -> Option<usize> {
    let mut pa = 0usize;
    let mut pp = 0usize;
    for k in 0..a.len() {
        pa += a[k];
        pp += aprime[k];
        if pa > pp {
            return Some(k + 1);
        }
    }
    None
}

fn component_bound_failure(
    pairs: &PairedList,
    bound: usize,
) -> Option<InfeasibilityReason> {
    for (idx, &(a, b)) in pairs.pairs().iter().enumerate() {
        if a > bound {
            return Some(InfeasibilityReason::EntryOutOfBounds {
                position: idx + 1,
                component: "indegree",
                value: a,
                max: bound,
            });
        }
        if b > bound {
            return Some(InfeasibilityReason::EntryOutOfBounds {
                position: idx + 1,
                component: "outdegree",
                value: b,
                max: bound,
            });
        }
    }
    None
}

/// Gale-Ryser test: `(a,b)` is loop-digraphic iff the nonincreasing
/// rearrangement of `a` is majorized by the conjugate of `b`.
///
/// The reported threshold list pairs the conjugate with `b` in the input
/// order.
pub fn gale_ryser(pairs: &PairedList) -> CheckResult {
    let n = pairs.len();
    if let Some(reason) = component_bound_failure(pairs, n) {
        return CheckResult::fail(reason, None);
    }
    if pairs.sum_a() != pairs.sum_b() {
        return CheckResult::fail(
            InfeasibilityReason::UnbalancedSums {
                sum_a: pairs.sum_a(),
                sum_b: pairs.sum_b(),
            },
            None,
        );
    }
    let b = pairs.b();
    let aprime = crate::majorize::conjugate(&b, n).expect("entries bounded by n");
    let threshold =
        PairedList::from_components(&aprime, &b).expect("equal lengths by construction");
    let sorted_a = pairs.a().sorted_nonincreasing();
    match first_prefix_violation(&sorted_a, &aprime) {
        None => CheckResult::pass(threshold),
        Some(prefix_length) => CheckResult::fail(
            InfeasibilityReason::MajorizationFailure { prefix_length },
            Some(threshold),
        ),
    }
}

/// Fulkerson-Chen-Anstee test on the lexicographically sorted list: `(a,b)`
/// is digraphic iff the sorted `a` is majorized by the column sums of the
/// digraphic Ferrers matrix.
pub fn fulkerson_chen_anstee(pairs: &PairedList) -> CheckResult {
    let (sorted, _) = lex_sort(pairs);
    fulkerson_chen_anstee_ordered(&sorted).expect("lex-sorted input is a-nonincreasing")
}

/// The Anstee generalization: the digraphic test run on the caller's
/// ordering, which must have nonincreasing first components. Different
/// admissible orderings produce different threshold lists but the same
/// verdict.
pub fn fulkerson_chen_anstee_ordered(pairs: &PairedList) -> Result<CheckResult> {
    if !pairs.is_a_nonincreasing() {
        return Err(Error::NotNonincreasing);
    }
    let n = pairs.len();
    if let Some(reason) = component_bound_failure(pairs, n.saturating_sub(1)) {
        return Ok(CheckResult::fail(reason, None));
    }
    if pairs.sum_a() != pairs.sum_b() {
        return Ok(CheckResult::fail(
            InfeasibilityReason::UnbalancedSums {
                sum_a: pairs.sum_a(),
                sum_b: pairs.sum_b(),
            },
            None,
        ));
    }
    let threshold = digraphic_ferrers(pairs)
        .expect("bounds checked above")
        .margins();
    let aprime = threshold.a();
    Ok(match first_prefix_violation(&pairs.a(), &aprime) {
        None => CheckResult::pass(threshold),
        Some(prefix_length) => CheckResult::fail(
            InfeasibilityReason::MajorizationFailure { prefix_length },
            Some(threshold),
        ),
    })
}

/// Erdős-Gallai test: `a` is graphic iff its total is even and its
/// nonincreasing rearrangement is majorized by the graphic threshold list.
pub fn erdos_gallai(a: &IntList) -> CheckResult {
    let n = a.len();
    for (idx, &v) in a.values().iter().enumerate() {
        if v >= n {
            return CheckResult::fail(
                InfeasibilityReason::EntryOutOfBounds {
                    position: idx + 1,
                    component: "degree",
                    value: v,
                    max: n - 1,
                },
                None,
            );
        }
    }
    if a.sum() % 2 == 1 {
        return CheckResult::fail(InfeasibilityReason::OddSum { sum: a.sum() }, None);
    }
    let sorted = a.sorted_nonincreasing();
    let aprime = graphic_threshold(&sorted).expect("sorted and bounded");
    let threshold =
        PairedList::from_components(&aprime, &sorted).expect("equal lengths by construction");
    match first_prefix_violation(&sorted, &aprime) {
        None => CheckResult::pass(threshold),
        Some(prefix_length) => CheckResult::fail(
            InfeasibilityReason::MajorizationFailure { prefix_length },
            Some(threshold),
        ),
    }
}

/// Dispatches the kind-appropriate characterization test.
pub fn is_feasible(input: &ListInput, kind: RealizationKind) -> CheckResult {
    match kind {
        RealizationKind::LoopDigraph => gale_ryser(&input.as_pairs()),
        RealizationKind::Digraph => fulkerson_chen_anstee(&input.as_pairs()),
        RealizationKind::Graph => {
            if let ListInput::Pairs(pairs) = input {
                if let Some(idx) = pairs.pairs().iter().position(|&(a, b)| a != b) {
                    return CheckResult::fail(
                        InfeasibilityReason::AsymmetricPair { position: idx + 1 },
                        None,
                    );
                }
            }
            let degrees = input
                .as_degrees(kind)
                .expect("asymmetric pairs rejected above");
            erdos_gallai(&degrees)
        }
    }
}

/// Independent oracle: does any realization exist? Pure row-by-row
/// backtracking over column subsets with residual-capacity bookkeeping
/// only — deliberately no use of the characterization theorems, so the two
/// approaches can check each other. Exponential; the `limit` guard keeps it
/// at desk scale.
pub fn brute_force_realizable(
    input: &ListInput,
    kind: RealizationKind,
    limit: usize,
) -> Result<bool> {
    let n = input.len();
    if n > limit {
        return Err(Error::GuardExceeded { actual: n, limit });
    }
    if n > BinaryMatrix::MAX_N {
        return Err(Error::Dimension {
            n,
            max: BinaryMatrix::MAX_N,
        });
    }
    match kind {
        RealizationKind::Graph => {
            if let ListInput::Pairs(pairs) = input {
                if pairs.pairs().iter().any(|&(a, b)| a != b) {
                    return Ok(false);
                }
            }
            let degrees = input.as_degrees(kind).expect("asymmetric pairs handled");
            let mut residual = degrees.values().to_vec();
            Ok(graph_search(&mut residual, 0))
        }
        RealizationKind::LoopDigraph | RealizationKind::Digraph => {
            let pairs = input.as_pairs();
            let b: Vec<usize> = pairs.pairs().iter().map(|&(_, b)| b).collect();
            let mut capacity: Vec<usize> = pairs.pairs().iter().map(|&(a, _)| a).collect();
            Ok(row_search(&b, &mut capacity, 0, kind))
        }
    }
}

/// Fills rows top-down; row `r` needs a subset of size `b[r]` among columns
/// with remaining capacity (skipping the diagonal for digraphs).
fn row_search(b: &[usize], capacity: &mut Vec<usize>, r: usize, kind: RealizationKind) -> bool {
    let n = b.len();
    if r == n {
        return capacity.iter().all(|&c| c == 0);
    }
    let mut chosen = Vec::with_capacity(b[r]);
    subset_search(b, capacity, r, kind, 0, &mut chosen)
}

fn subset_search(
    b: &[usize],
    capacity: &mut Vec<usize>,
    r: usize,
    kind: RealizationKind,
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == b[r] {
        return row_search(b, capacity, r + 1, kind);
    }
    let n = b.len();
    for j in from..n {
        if capacity[j] == 0 {
            continue;
        }
        if kind == RealizationKind::Digraph && j == r {
            continue;
        }
        capacity[j] -= 1;
        chosen.push(j);
        if subset_search(b, capacity, r, kind, j + 1, chosen) {
            return true;
        }
        chosen.pop();
        capacity[j] += 1;
    }
    false
}

/// Symmetric search: vertex `v` picks its neighbors among later vertices;
/// edges to earlier vertices are already decided.
fn graph_search(residual: &mut Vec<usize>, v: usize) -> bool {
    let n = residual.len();
    if v == n {
        return true;
    }
    if residual[v] == 0 {
        return graph_search(residual, v + 1);
    }
    let need = residual[v];
    let mut chosen = Vec::with_capacity(need);
    graph_subset_search(residual, v, need, v + 1, &mut chosen)
}

fn graph_subset_search(
    residual: &mut Vec<usize>,
    v: usize,
    need: usize,
    from: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == need {
        let saved = residual[v];
        residual[v] = 0;
        if graph_search(residual, v + 1) {
            return true;
        }
        residual[v] = saved;
        return false;
    }
    let n = residual.len();
    for u in from..n {
        if residual[u] == 0 {
            continue;
        }
        residual[u] -= 1;
        chosen.push(u);
        if graph_subset_search(residual, v, need, u + 1, chosen) {
            return true;
        }
        chosen.pop();
        residual[u] += 1;
    }
    false
}
