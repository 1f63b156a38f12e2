//! Ferrers matrices, corresponding threshold lists, and threshold detection.
//!
//! A Ferrers matrix is the canonical "maximally left-packed" realization of
//! its own margins, and those margins form the threshold list against which
//! the feasibility characterizations compare.

use crate::core::{lex_sort, sort_degrees, BinaryMatrix, IntList, ListInput, PairedList, RealizationKind};
use crate::error::{Error, Result};

/// Loop-digraphic Ferrers matrix: row i carries `b_i` leading ones.
///
/// The construction reads only the second components; its column sums are
/// the conjugate list of `b` and its margins are the corresponding
/// loop-digraphic threshold list. Entries of `b` must lie in `[0, n]`.
pub fn loop_digraphic_ferrers(pairs: &PairedList) -> Result<BinaryMatrix> {
    let n = pairs.len();
    let mut m = BinaryMatrix::zero(n)?;
    for (i, &(_, b)) in pairs.pairs().iter().enumerate() {
        if b > n {
            return Err(Error::EntryOutOfRange {
                position: i + 1,
                value: b,
                max: n,
            });
        }
        for j in 0..b {
            m.set(i, j, true);
        }
    }
    Ok(m)
}

/// Digraphic Ferrers matrix: row i carries `b_i` ones, left-packed while
/// skipping the diagonal — cell (i,j) is set when `j ≤ b_i` and `j < i`, or
/// `j ≤ b_i + 1` and `j > i` (1-based).
///
/// Requires the first components nonincreasing (the ordering the digraphic
/// characterization is stated for) and entries of `b` at most `n − 1`.
pub fn digraphic_ferrers(pairs: &PairedList) -> Result<BinaryMatrix> {
    let n = pairs.len();
    if !pairs.is_a_nonincreasing() {
        return Err(Error::NotNonincreasing);
    }
    let mut m = BinaryMatrix::zero(n)?;
    for (i, &(_, b)) in pairs.pairs().iter().enumerate() {
        if b >= n {
            return Err(Error::EntryOutOfRange {
                position: i + 1,
                value: b,
                max: n - 1,
            });
        }
        // 0-based: cells before the diagonal are set when j < b, cells
        // after it when j ≤ b.
        for j in 0..i.min(b) {
            m.set(i, j, true);
        }
        for j in (i + 1)..=b {
            m.set(i, j, true);
        }
    }
    Ok(m)
}

/// The corresponding threshold list of `pairs` for `kind`: the margins
/// (column sums paired with row sums) of the kind-appropriate Ferrers
/// matrix.
///
/// For `LoopDigraph` the second components may arrive in any order; for
/// `Digraph` the first components must be nonincreasing (different
/// admissible orderings give different — equally valid — threshold lists);
/// for `Graph` the input must be a symmetric paired list `(a,a)` with `a`
/// nonincreasing, and the result is the digraphic threshold list `(a′,a)`.
pub fn corresponding_threshold_list(
    pairs: &PairedList,
    kind: RealizationKind,
) -> Result<PairedList> {
    let matrix = match kind {
        RealizationKind::LoopDigraph => loop_digraphic_ferrers(pairs)?,
        RealizationKind::Digraph => digraphic_ferrers(pairs)?,
        RealizationKind::Graph => {
            if pairs.pairs().iter().any(|&(a, b)| a != b) {
                return Err(Error::InputKindMismatch {
                    kind,
                    expected: "a symmetric paired list (a,a)",
                });
            }
            digraphic_ferrers(pairs)?
        }
    };
    Ok(matrix.margins())
}

/// The graphic threshold list of a nonincreasing `a`: the column sums of
/// the digraphic Ferrers matrix of `(a,a)`. `a` is graphic exactly when it
/// is majorized by this list.
pub fn graphic_threshold(a: &IntList) -> Result<IntList> {
    if !a.is_nonincreasing() {
        return Err(Error::NotNonincreasing);
    }
    let pairs = PairedList::symmetric(a);
    let matrix = digraphic_ferrers(&pairs)?;
    Ok(matrix.col_sums())
}

/// The unique graph realization of a graphic threshold list `a` (a
/// nonincreasing fixed point of [`graphic_threshold`]): the digraphic
/// Ferrers matrix of `(a,a)`, which for threshold lists is symmetric with
/// zero diagonal.
///
/// Errors with [`Error::Unsupported`] when `a` is not a threshold list.
pub fn graphic_threshold_matrix(a: &IntList) -> Result<BinaryMatrix> {
    let matrix = digraphic_ferrers(&PairedList::symmetric(a))?;
    if !matrix.is_symmetric() || matrix.col_sums() != *a {
        return Err(Error::Unsupported(format!(
            "{a} is not a graphic threshold list"
        )));
    }
    Ok(matrix)
}

/// Threshold detection: does the list have exactly one realization of the
/// given kind?
///
/// A structural fast path (the sorted list coincides with its corresponding
/// threshold list) short-circuits to `true`; otherwise the realizations are
/// counted exactly under the `limit` size guard. Infeasible input is an
/// error — callers are expected to check feasibility first.
pub fn is_threshold(input: &ListInput, kind: RealizationKind, limit: usize) -> Result<bool> {
    if !crate::feasibility::is_feasible(input, kind).feasible {
        return Err(Error::Infeasible);
    }
    let structural = match kind {
        RealizationKind::Graph => {
            let a = input.as_degrees(kind)?;
            let (sorted, _) = sort_degrees(&a);
            graphic_threshold(&sorted)? == sorted
        }
        RealizationKind::LoopDigraph => {
            let pairs = input.as_pairs();
            let (sorted, _) = lex_sort(&pairs);
            let conj = crate::majorize::conjugate(&sorted.b(), sorted.len())?;
            sorted.a() == conj
        }
        RealizationKind::Digraph => {
            let pairs = input.as_pairs();
            let (sorted, _) = lex_sort(&pairs);
            sorted.a() == digraphic_ferrers(&sorted)?.col_sums()
        }
    };
    if structural {
        return Ok(true);
    }
    let count = crate::count::count_realizations(input, kind, limit)?;
    match count.exact {
        Some(exact) => Ok(exact == 1u32.into()),
        None => Err(Error::GuardExceeded {
            actual: input.len(),
            limit,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn il(values: &[usize]) -> IntList {
        IntList::new(values.to_vec()).unwrap()
    }

    fn pl(pairs: &[(usize, usize)]) -> PairedList {
        PairedList::new(pairs.to_vec()).unwrap()
    }

    fn rows(m: &BinaryMatrix) -> Vec<Vec<u8>> {
        (0..m.n())
            .map(|i| (0..m.n()).map(|j| m.get(i, j) as u8).collect())
            .collect()
    }

    #[test]
    fn loop_ferrers_fixture() {
        let m = loop_digraphic_ferrers(&pl(&[(2, 3), (2, 3), (2, 0)])).unwrap();
        assert_eq!(rows(&m), vec![vec![1, 1, 1], vec![1, 1, 1], vec![0, 0, 0]]);
        assert_eq!(m.col_sums(), il(&[2, 2, 2]));
    }

    #[test]
    fn loop_ferrers_zero_and_transfer_example() {
        let m = loop_digraphic_ferrers(&pl(&[(0, 0), (0, 0)])).unwrap();
        assert_eq!(rows(&m), vec![vec![0, 0], vec![0, 0]]);

        let m =
            loop_digraphic_ferrers(&pl(&[(4, 1), (2, 1), (0, 2), (0, 2)])).unwrap();
        assert_eq!(m.col_sums(), il(&[4, 2, 0, 0]));
    }

    #[test]
    fn loop_ferrers_rows_are_prefixes_of_ones() {
        let m =
            loop_digraphic_ferrers(&pl(&[(3, 2), (2, 3), (1, 0), (0, 1)])).unwrap();
        for i in 0..m.n() {
            let mut seen_zero = false;
            for j in 0..m.n() {
                if !m.get(i, j) {
                    seen_zero = true;
                } else {
                    assert!(!seen_zero, "row {i} is not a prefix of ones");
                }
            }
        }
    }

    #[test]
    fn loop_ferrers_rejects_oversized_b() {
        assert_eq!(
            loop_digraphic_ferrers(&pl(&[(0, 3), (0, 0)])),
            Err(Error::EntryOutOfRange {
                position: 1,
                value: 3,
                max: 2
            })
        );
    }

    #[test]
    fn digraphic_ferrers_derived_fixture() {
        let m = digraphic_ferrers(&pl(&[(2, 2), (2, 1), (2, 0), (0, 3)])).unwrap();
        assert_eq!(
            rows(&m),
            vec![
                vec![0, 1, 1, 0],
                vec![1, 0, 0, 0],
                vec![0, 0, 0, 0],
                vec![1, 1, 1, 0],
            ]
        );
        assert_eq!(m.col_sums(), il(&[2, 2, 2, 0]));
        assert!(m.has_zero_diagonal());
    }

    #[test]
    fn digraphic_ferrers_unit_pairs_fixture() {
        let m = digraphic_ferrers(&pl(&[(1, 1), (1, 1), (1, 1)])).unwrap();
        assert_eq!(rows(&m), vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 0, 0]]);
        assert_eq!(m.col_sums(), il(&[2, 1, 0]));
    }

    #[test]
    fn digraphic_ferrers_zero_matrix_and_row_sums() {
        let m = digraphic_ferrers(&pl(&[(0, 0), (0, 0), (0, 0)])).unwrap();
        assert_eq!(rows(&m), vec![vec![0; 3]; 3]);

        // Row sums always reproduce b.
        let pairs = pl(&[(3, 2), (2, 3), (1, 1), (0, 0)]);
        let m = digraphic_ferrers(&pairs).unwrap();
        assert_eq!(m.row_sums(), il(&[2, 3, 1, 0]));
    }

    #[test]
    fn digraphic_ferrers_preconditions() {
        assert_eq!(
            digraphic_ferrers(&pl(&[(1, 0), (2, 0)])),
            Err(Error::NotNonincreasing)
        );
        assert_eq!(
            digraphic_ferrers(&pl(&[(1, 2), (1, 0)])),
            Err(Error::EntryOutOfRange {
                position: 1,
                value: 2,
                max: 1
            })
        );
    }

    #[test]
    fn threshold_list_loop_digraph_keeps_input_order() {
        let t = corresponding_threshold_list(
            &pl(&[(3, 3), (1, 3), (2, 0)]),
            RealizationKind::LoopDigraph,
        )
        .unwrap();
        assert_eq!(t, pl(&[(2, 3), (2, 3), (2, 0)]));
    }

    #[test]
    fn threshold_list_graph_fixture() {
        // The provisional expectation (3,3,2,2) does not survive the
        // definition; the column sums of the digraphic Ferrers matrix of
        // ((3,3),(3,3),(1,1),(1,1)) are (3,1,2,2).
        let t = corresponding_threshold_list(
            &PairedList::symmetric(&il(&[3, 3, 1, 1])),
            RealizationKind::Graph,
        )
        .unwrap();
        assert_eq!(t.a(), il(&[3, 1, 2, 2]));
        assert_eq!(t.b(), il(&[3, 3, 1, 1]));
        assert_eq!(graphic_threshold(&il(&[3, 3, 1, 1])).unwrap(), il(&[3, 1, 2, 2]));
    }

    #[test]
    fn threshold_list_digraph_fixture() {
        let t = corresponding_threshold_list(
            &pl(&[(2, 2), (2, 1), (2, 0), (0, 3)]),
            RealizationKind::Digraph,
        )
        .unwrap();
        assert_eq!(t.a(), il(&[2, 2, 2, 0]));
        assert_eq!(t.b(), il(&[2, 1, 0, 3]));
    }

    #[test]
    fn threshold_list_graph_rejects_asymmetric_pairs() {
        assert_eq!(
            corresponding_threshold_list(&pl(&[(1, 0), (0, 1)]), RealizationKind::Graph),
            Err(Error::InputKindMismatch {
                kind: RealizationKind::Graph,
                expected: "a symmetric paired list (a,a)",
            })
        );
    }

    #[test]
    fn graphic_threshold_ledger_witness() {
        assert_eq!(graphic_threshold(&il(&[2, 2, 1, 1])).unwrap(), il(&[3, 1, 2, 0]));
        assert_eq!(
            graphic_threshold(&il(&[1, 2])),
            Err(Error::NotNonincreasing)
        );
    }

    #[test]
    fn graphic_threshold_matrix_on_threshold_lists() {
        for a in [
            il(&[0]),
            il(&[2, 2, 2]),
            il(&[3, 1, 1, 1]),
            il(&[3, 2, 2, 1]),
            il(&[2, 1, 1]),
        ] {
            assert_eq!(graphic_threshold(&a).unwrap(), a, "fixture {a} not threshold");
            let m = graphic_threshold_matrix(&a).unwrap();
            assert!(m.is_symmetric());
            assert!(m.has_zero_diagonal());
            assert_eq!(m.col_sums(), a);
            assert_eq!(m.row_sums(), a);
        }
        // Non-threshold input is rejected rather than silently wrong.
        assert!(matches!(
            graphic_threshold_matrix(&il(&[2, 2, 1, 1])),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn is_threshold_fixtures() {
        let loop_t = ListInput::Pairs(pl(&[(2, 3), (2, 3), (2, 0)]));
        assert!(is_threshold(&loop_t, RealizationKind::LoopDigraph, 8).unwrap());

        let digraph_t = ListInput::Pairs(pl(&[(2, 0), (2, 2), (2, 1), (0, 3)]));
        assert!(is_threshold(&digraph_t, RealizationKind::Digraph, 8).unwrap());

        let cycle = ListInput::Pairs(pl(&[(1, 1), (1, 1), (1, 1)]));
        assert!(!is_threshold(&cycle, RealizationKind::Digraph, 8).unwrap());

        // Infeasible input errors rather than answering.
        let infeasible = ListInput::Pairs(pl(&[(3, 3), (1, 3), (2, 0)]));
        assert_eq!(
            is_threshold(&infeasible, RealizationKind::LoopDigraph, 8),
            Err(Error::Infeasible)
        );
    }

    #[test]
    fn is_threshold_graph_star_and_path() {
        let star = ListInput::Degrees(il(&[3, 1, 1, 1]));
        assert!(is_threshold(&star, RealizationKind::Graph, 8).unwrap());
        // The 4-vertex path list has two labeled realizations (either
        // degree-1 vertex can attach to either interior vertex).
        let path = ListInput::Degrees(il(&[2, 2, 1, 1]));
        assert!(!is_threshold(&path, RealizationKind::Graph, 8).unwrap());
    }
}
