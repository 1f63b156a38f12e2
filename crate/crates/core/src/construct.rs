//! Shift operations on adjacency matrices and the transfer-path realization
//! algorithm: walk from the unique threshold realization down a Muirhead
//! path, applying one admissible shift per transfer.

use crate::core::{
    lex_sort, sort_degrees, BinaryMatrix, IntList, ListInput, RealizationKind, Transfer,
    TransferPath,
};
use crate::error::{Error, Result};
use crate::feasibility::{erdos_gallai, is_feasible};
use crate::ferrers::{
    digraphic_ferrers, graphic_threshold, graphic_threshold_matrix, loop_digraphic_ferrers,
};
use crate::majorize::muirhead_path;

/// One executed shift along a realization walk: the transfer it implements,
/// every row that was admissible at that moment, and the row actually used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftStep {
    pub transfer: Transfer,
    /// Row chosen by the deterministic rule (smallest admissible index).
    pub row: usize,
    /// All admissible rows at this step, ascending.
    pub admissible: Vec<usize>,
}

/// Output of [`realize`]. `start`, `path`, and `steps` are expressed in the
/// sorted coordinates the algorithm works in; `perm` maps sorted positions
/// back to input positions (`sorted[k] == input[perm[k]]`). `matrix` is the
/// final realization, already relabeled to input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub matrix: BinaryMatrix,
    /// The unique realization of the threshold list the walk started from.
    pub start: BinaryMatrix,
    pub path: TransferPath,
    pub steps: Vec<ShiftStep>,
    pub perm: Vec<usize>,
}

fn check_columns(m: &BinaryMatrix, i: usize, j: usize) -> Result<()> {
    let n = m.n();
    if i == j || i >= n || j >= n {
        return Err(Error::IndexPair {
            i: i + 1,
            j: j + 1,
            n,
        });
    }
    Ok(())
}

/// Rows `k` on which an (i,j)-shift may act: `M[k][i] = 1` and `M[k][j] = 0`,
/// minus the rows that would break the kind constraints (`k = j` for
/// digraphs, `k ∈ {i, j}` for graphs; loop-digraphs exclude nothing).
pub fn available_shifts(
    m: &BinaryMatrix,
    i: usize,
    j: usize,
    kind: RealizationKind,
) -> Result<Vec<usize>> {
    check_columns(m, i, j)?;
    if !m.satisfies_kind(kind) {
        return Err(Error::KindViolation(kind));
    }
    Ok((0..m.n())
        .filter(|&k| m.get(k, i) && !m.get(k, j))
        .filter(|&k| match kind {
            RealizationKind::LoopDigraph => true,
            RealizationKind::Digraph => k != j,
            RealizationKind::Graph => k != i && k != j,
        })
        .collect())
}

/// Applies the (i,j)-shift on row `k`, moving a unit from column i to column
/// j. For graphs the move is mirrored on row entries so the matrix stays
/// symmetric with a zero diagonal.
pub fn apply_shift(
    m: &BinaryMatrix,
    i: usize,
    j: usize,
    k: usize,
    kind: RealizationKind,
) -> Result<BinaryMatrix> {
    if !available_shifts(m, i, j, kind)?.contains(&k) {
        return Err(Error::InvalidShiftRow {
            k: k + 1,
            i: i + 1,
            j: j + 1,
        });
    }
    let mut out = m.clone();
    out.set(k, i, false);
    out.set(k, j, true);
    if kind == RealizationKind::Graph {
        out.set(i, k, false);
        out.set(j, k, true);
    }
    debug_assert!(out.satisfies_kind(kind));
    Ok(out)
}

/// Constructs a realization of `input` by starting from the threshold
/// realization (the kind's Ferrers matrix) and applying one shift per
/// transfer of a Muirhead path. Deterministic: each step uses the smallest
/// admissible row. Fails only on infeasible input; a feasible list always
/// admits a shift at every step, so running out of shifts panics.
pub fn realize(input: &ListInput, kind: RealizationKind) -> Result<Realization> {
    if !is_feasible(input, kind).feasible {
        return Err(Error::Infeasible);
    }
    let (start, path, fixed_rows, perm) = match kind {
        RealizationKind::LoopDigraph | RealizationKind::Digraph => {
            let (sorted, perm) = lex_sort(&input.as_pairs());
            let start = if kind == RealizationKind::LoopDigraph {
                loop_digraphic_ferrers(&sorted)?
            } else {
                digraphic_ferrers(&sorted)?
            };
            let path = muirhead_path(&sorted.a(), &start.col_sums())?;
            (start, path, Some(sorted.b()), perm)
        }
        RealizationKind::Graph => {
            let degrees = input.as_degrees(kind)?;
            let (sorted, perm) = sort_degrees(&degrees);
            let threshold = climb_to_graphic_threshold(&sorted);
            let start = graphic_threshold_matrix(&threshold)
                .expect("the climb ends on a threshold list");
            let path = muirhead_path(&sorted, &threshold)?;
            (start, path, None, perm)
        }
    };
    let (walked, steps) = walk_shifts(&start, &path, fixed_rows.as_ref(), kind);
    let mut inverse = vec![0; perm.len()];
    for (pos, &old) in perm.iter().enumerate() {
        inverse[old] = pos;
    }
    let matrix = walked
        .permuted(&inverse)
        .expect("inverse of a valid permutation");
    assert_eq!(
        matrix.margins(),
        input.as_pairs(),
        "realization margins must equal the input"
    );
    assert!(matrix.satisfies_kind(kind));
    Ok(Realization {
        matrix,
        start,
        path,
        steps,
        perm,
    })
}

fn walk_shifts(
    start: &BinaryMatrix,
    path: &TransferPath,
    fixed_rows: Option<&IntList>,
    kind: RealizationKind,
) -> (BinaryMatrix, Vec<ShiftStep>) {
    let mut m = start.clone();
    let mut steps = Vec::with_capacity(path.kappa());
    for (idx, &t) in path.steps.iter().enumerate() {
        let admissible =
            available_shifts(&m, t.i, t.j, kind).expect("path indices fit the matrix");
        let row = *admissible.first().unwrap_or_else(|| {
            panic!(
                "no admissible ({},{})-shift at step {}; an admissible shift exists at \
                 every step of a transfer path, so this is a bug",
                t.i + 1,
                t.j + 1,
                idx + 1
            )
        });
        m = apply_shift(&m, t.i, t.j, row, kind).expect("row drawn from the admissible set");
        assert_eq!(
            m.col_sums(),
            path.intermediates[idx + 1],
            "column margins drifted from the transfer path"
        );
        let expected_rows = fixed_rows.unwrap_or(&path.intermediates[idx + 1]);
        assert_eq!(m.row_sums(), *expected_rows, "row margins drifted");
        steps.push(ShiftStep {
            transfer: t,
            row,
            admissible,
        });
    }
    (m, steps)
}

/// Walks upward in the majorization order from a graphic list to a graphic
/// threshold list, one unit ascent at a time, keeping every intermediate
/// graphic. A graphic list is threshold exactly when it equals its corrected
/// conjugate, and every non-threshold graphic list admits such an ascent.
fn climb_to_graphic_threshold(sorted: &IntList) -> IntList {
    let mut x = sorted.clone();
    loop {
        let star = graphic_threshold(&x).expect("graphic lists stay within entry bounds");
        if star == x {
            return x;
        }
        let v = x.values().to_vec();
        let n = v.len();
        let mut next = None;
        'search: for i in 0..n {
            for j in (i + 1)..n {
                if v[j] == 0 {
                    continue;
                }
                let mut cand = v.clone();
                cand[i] += 1;
                cand[j] -= 1;
                cand.sort_unstable_by(|p, q| q.cmp(p));
                let cand = IntList::new(cand).expect("nonempty");
                if erdos_gallai(&cand).feasible {
                    next = Some(cand);
                    break 'search;
                }
            }
        }
        x = next.expect("every non-threshold graphic list admits a graphic unit ascent");
    }
}

/// Tests whether the entrywise symmetric difference of two equal-margin
/// matrices is exactly an alternating 4-cycle through columns i and j — the
/// pattern under which (i,j)-shifts on the two matrices can produce the same
/// realization.
pub fn are_shift_adjacent(
    m1: &BinaryMatrix,
    m2: &BinaryMatrix,
    i: usize,
    j: usize,
    kind: RealizationKind,
) -> Result<bool> {
    if m1.n() != m2.n() || m1.margins() != m2.margins() {
        return Err(Error::MarginMismatch);
    }
    check_columns(m1, i, j)?;
    if !m1.satisfies_kind(kind) || !m2.satisfies_kind(kind) {
        return Err(Error::KindViolation(kind));
    }
    let n = m1.n();
    let mut d1 = Vec::new();
    let mut d2 = Vec::new();
    for r in 0..n {
        for c in 0..n {
            match (m1.get(r, c), m2.get(r, c)) {
                (true, false) => d1.push((r, c)),
                (false, true) => d2.push((r, c)),
                _ => {}
            }
        }
    }
    Ok(match kind {
        RealizationKind::LoopDigraph => directed_cycle_rows(&d1, &d2, i, j).is_some(),
        RealizationKind::Digraph => directed_cycle_rows(&d1, &d2, i, j)
            .is_some_and(|(k, kp)| k != i && k != j && kp != i && kp != j),
        RealizationKind::Graph => graph_cycle(&d1, &d2, i, j),
    })
}

/// Matches the pattern d1 = {(k,i),(k',j)}, d2 = {(k,j),(k',i)} with k ≠ k'
/// and returns (k, k') on success.
fn directed_cycle_rows(
    d1: &[(usize, usize)],
    d2: &[(usize, usize)],
    i: usize,
    j: usize,
) -> Option<(usize, usize)> {
    if d1.len() != 2 || d2.len() != 2 {
        return None;
    }
    let (k, kp) = match (d1[0], d1[1]) {
        ((r1, c1), (r2, c2)) if c1 == i && c2 == j => (r1, r2),
        ((r1, c1), (r2, c2)) if c1 == j && c2 == i => (r2, r1),
        _ => return None,
    };
    if k == kp {
        return None;
    }
    let hit = (d2[0] == (k, j) && d2[1] == (kp, i)) || (d2[0] == (kp, i) && d2[1] == (k, j));
    hit.then_some((k, kp))
}

/// The symmetric variant: each half of the difference must be the 4-cycle
/// plus its mirror, with k and k' distinct from each other and from {i, j}.
fn graph_cycle(d1: &[(usize, usize)], d2: &[(usize, usize)], i: usize, j: usize) -> bool {
    if d1.len() != 4 || d2.len() != 4 {
        return false;
    }
    let anchored: Vec<(usize, usize)> = d1
        .iter()
        .copied()
        .filter(|&(_, c)| c == i || c == j)
        .collect();
    if anchored.len() != 2 {
        return false;
    }
    let ((r1, c1), (r2, c2)) = (anchored[0], anchored[1]);
    let (k, kp) = if c1 == i && c2 == j {
        (r1, r2)
    } else if c1 == j && c2 == i {
        (r2, r1)
    } else {
        return false;
    };
    if k == kp || k == i || k == j || kp == i || kp == j {
        return false;
    }
    let mut want1 = vec![(k, i), (i, k), (kp, j), (j, kp)];
    let mut want2 = vec![(k, j), (j, k), (kp, i), (i, kp)];
    let mut have1 = d1.to_vec();
    let mut have2 = d2.to_vec();
    for v in [&mut want1, &mut want2, &mut have1, &mut have2] {
        v.sort_unstable();
    }
    have1 == want1 && have2 == want2
}
