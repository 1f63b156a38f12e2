//! Shared vocabulary: degree lists, paired lists, realization kinds, binary
//! matrices, and transfers.
//!
//! Conventions used across the crate:
//! * In a [`PairedList`], `a` holds indegrees (column sums of a realization)
//!   and `b` holds outdegrees (row sums). Entry `(i, j)` of a [`BinaryMatrix`]
//!   is the arc from vertex `i` to vertex `j`.
//! * Indices are stored 0-based; all user-facing rendering (CLI output,
//!   `Display`, error messages) is 1-based.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Which realization problem a list poses.
///
/// `Graph`: symmetric 0/1 matrix with zero diagonal (simple graphs, degree
/// list). `LoopDigraph`: arbitrary 0/1 matrix (diagonal free; equivalently a
/// bipartite degree problem). `Digraph`: 0/1 matrix with zero diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RealizationKind {
    Graph,
    LoopDigraph,
    Digraph,
}

impl RealizationKind {
    /// Largest admissible degree entry for lists of length `n`.
    pub fn entry_bound(self, n: usize) -> usize {
        match self {
            RealizationKind::LoopDigraph => n,
            RealizationKind::Graph | RealizationKind::Digraph => n.saturating_sub(1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RealizationKind::Graph => "graph",
            RealizationKind::LoopDigraph => "loop-digraph",
            RealizationKind::Digraph => "digraph",
        }
    }
}

/// A nonempty list of nonnegative integers (a degree list).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntList(Vec<usize>);

impl IntList {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyList);
        }
        Ok(IntList(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor rejects empty lists
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn sorted_nonincreasing(&self) -> IntList {
        let mut v = self.0.clone();
        v.sort_unstable_by(|x, y| y.cmp(x));
        IntList(v)
    }

    pub fn max(&self) -> usize {
        *self.0.iter().max().expect("nonempty")
    }
}

impl std::ops::Index<usize> for IntList {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

impl fmt::Display for IntList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A nonempty list of (indegree, outdegree) pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairedList(Vec<(usize, usize)>);

impl PairedList {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::EmptyList);
        }
        Ok(PairedList(pairs))
    }

    /// Builds the symmetric pairing (d, d) of a plain degree list.
    pub fn symmetric(degrees: &IntList) -> PairedList {
        PairedList(degrees.values().iter().map(|&d| (d, d)).collect())
    }

    pub fn from_components(a: &IntList, b: &IntList) -> Result<PairedList> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(PairedList(
            a.values()
                .iter()
                .copied()
                .zip(b.values().iter().copied())
                .collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn a(&self) -> IntList {
        IntList(self.0.iter().map(|p| p.0).collect())
    }

    pub fn b(&self) -> IntList {
        IntList(self.0.iter().map(|p| p.1).collect())
    }

    pub fn sum_a(&self) -> usize {
        self.0.iter().map(|p| p.0).sum()
    }

    pub fn sum_b(&self) -> usize {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn is_a_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0].0 >= w[1].0)
    }

    /// Pairs compared lexicographically: first on `a`, ties on `b`.
    pub fn is_lex_nonincreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl std::ops::Index<usize> for PairedList {
    type Output = (usize, usize);
    fn index(&self, i: usize) -> &(usize, usize) {
        &self.0[i]
    }
}

impl fmt::Display for PairedList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(a, b)| format!("({a},{b})"))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Either form a realization problem's input can take: a plain degree list
/// (graphs) or an (indegree, outdegree) pairing (directed kinds).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ListInput {
    Degrees(IntList),
    Pairs(PairedList),
}

impl ListInput {
    pub fn len(&self) -> usize {
        match self {
            ListInput::Degrees(d) => d.len(),
            ListInput::Pairs(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The paired view: degrees become the symmetric pairing (d, d).
    pub fn as_pairs(&self) -> PairedList {
        match self {
            ListInput::Degrees(d) => PairedList::symmetric(d),
            ListInput::Pairs(p) => p.clone(),
        }
    }

    /// The degree view, defined when the input is a degree list or a
    /// symmetric pairing.
    pub fn as_degrees(&self, kind: RealizationKind) -> Result<IntList> {
        match self {
            ListInput::Degrees(d) => Ok(d.clone()),
            ListInput::Pairs(p) => {
                if p.pairs().iter().all(|(a, b)| a == b) {
                    Ok(p.a())
                } else {
                    Err(Error::InputKindMismatch {
                        kind,
                        expected: "a degree list (or pairs with a = b)",
                    })
                }
            }
        }
    }
}

impl fmt::Display for ListInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ListInput::Degrees(d) => write!(f, "{d}"),
            ListInput::Pairs(p) => write!(f, "{p}"),
        }
    }
}

/// Square 0/1 matrix, at most [`BinaryMatrix::MAX_N`] rows; rows are stored
/// as bit masks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryMatrix {
    pub const MAX_N: usize = 64;

    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::Dimension { n, max: Self::MAX_N });
        }
        Ok(BinaryMatrix {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut m = BinaryMatrix::zero(n)?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(i, j, true),
                    _ => {
                        return Err(Error::Parse(format!(
                            "matrix entries must be 0 or 1, found {v}"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        self.rows[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        debug_assert!(i < self.n && j < self.n);
        if v {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    pub fn col_sum(&self, j: usize) -> usize {
        self.rows.iter().filter(|&&r| r >> j & 1 == 1).count()
    }

    pub fn row_sums(&self) -> IntList {
        IntList((0..self.n).map(|i| self.row_sum(i)).collect())
    }

    pub fn col_sums(&self) -> IntList {
        IntList((0..self.n).map(|j| self.col_sum(j)).collect())
    }

    /// Margins as a paired list: position i carries (column sum, row sum),
    /// i.e. (indegree, outdegree).
    pub fn margins(&self) -> PairedList {
        PairedList(
            (0..self.n)
                .map(|i| (self.col_sum(i), self.row_sum(i)))
                .collect(),
        )
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| !self.get(i, i))
    }

    pub fn satisfies_kind(&self, kind: RealizationKind) -> bool {
        match kind {
            RealizationKind::LoopDigraph => true,
            RealizationKind::Digraph => self.has_zero_diagonal(),
            RealizationKind::Graph => self.has_zero_diagonal() && self.is_symmetric(),
        }
    }

    /// Text form: n lines of n characters, `'0'`/`'1'`.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for i in 0..self.n {
            for j in 0..self.n {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let n = lines.len();
        if n == 0 || n > Self::MAX_N {
            return Err(Error::Dimension { n, max: Self::MAX_N });
        }
        let mut m = BinaryMatrix::zero(n)?;
        for (i, line) in lines.iter().enumerate() {
            let row = line.trim();
            if row.chars().count() != n {
                return Err(Error::Parse(format!(
                    "matrix row {} has {} entries, expected {}",
                    i + 1,
                    row.chars().count(),
                    n
                )));
            }
            for (j, c) in row.chars().enumerate() {
                match c {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    _ => {
                        return Err(Error::Parse(format!(
                            "matrix entries must be '0' or '1', found {c:?}"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    /// Relabels vertices: entry (i, j) of the result is entry
    /// (perm[i], perm[j]) of `self`. `perm` maps new positions to old ones.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut m = BinaryMatrix::zero(self.n).expect("same dimension");
        for i in 0..self.n {
            for j in 0..self.n {
                if self.get(perm[i], perm[j]) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    let ok = perm.len() == n
        && perm.iter().all(|&p| {
            if p < n && !seen[p] {
                seen[p] = true;
                true
            } else {
                false
            }
        });
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation(format!("{perm:?}"), n))
    }
}

/// Direction of a unit transfer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransferDirection {
    /// Moves one unit from position i to position j (i < j); requires
    /// x_i ≥ x_j + 2.
    Right,
    /// Moves one unit from position j to position i (i < j); requires
    /// x_i ≤ x_j + 1.
    Left,
}

/// A unit (i,j)-transfer. Indices are 0-based internally; `Display` renders
/// them 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Transfer {
    pub i: usize,
    pub j: usize,
    pub direction: TransferDirection,
}

impl Transfer {
    pub fn right(i: usize, j: usize) -> Transfer {
        Transfer {
            i,
            j,
            direction: TransferDirection::Right,
        }
    }

    pub fn left(i: usize, j: usize) -> Transfer {
        Transfer {
            i,
            j,
            direction: TransferDirection::Left,
        }
    }
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.direction {
            TransferDirection::Right => "",
            TransferDirection::Left => "left-",
        };
        write!(f, "{}({},{})", tag, self.i + 1, self.j + 1)
    }
}

/// A sequence of unit transfers from `start`, with every intermediate list
/// recorded: `intermediates[0] == start` and `intermediates[k+1]` is
/// `intermediates[k]` after `steps[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferPath {
    pub start: IntList,
    pub steps: Vec<Transfer>,
    pub intermediates: Vec<IntList>,
}

impl TransferPath {
    /// Number of transfers on the path.
    pub fn kappa(&self) -> usize {
        self.steps.len()
    }

    pub fn end(&self) -> &IntList {
        self.intermediates.last().expect("intermediates nonempty")
    }
}

/// One structural defect found by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Entry exceeds the kind bound. `position` and `component` ("a"/"b"/
    /// "degree") locate it; `position` is 1-based.
    EntryOutOfBounds {
        position: usize,
        component: &'static str,
        value: usize,
        max: usize,
    },
    /// Σa ≠ Σb for a paired list.
    UnbalancedSums { sum_a: usize, sum_b: usize },
    /// Strict mode only: a (0,0) pair.
    ZeroPair { position: usize },
    /// Strict mode only: a zero degree in a plain degree list.
    ZeroDegree { position: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EntryOutOfBounds {
                position,
                component,
                value,
                max,
            } => write!(
                f,
                "{component} entry {value} at position {position} exceeds the bound {max}"
            ),
            Violation::UnbalancedSums { sum_a, sum_b } => {
                write!(f, "sum of a ({sum_a}) differs from sum of b ({sum_b})")
            }
            Violation::ZeroPair { position } => {
                write!(f, "pair (0,0) at position {position} (forbidden in strict mode)")
            }
            Violation::ZeroDegree { position } => {
                write!(f, "degree 0 at position {position} (forbidden in strict mode)")
            }
        }
    }
}

/// Outcome of [`validate`]; an empty violation list means the input is
/// structurally admissible for its kind.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks entry bounds and sum balance; in strict mode additionally forbids
/// (0,0) pairs and zero degrees. Never errors — all findings are reported.
pub fn validate(input: &ListInput, kind: RealizationKind, strict: bool) -> ValidationReport {
    let mut violations = Vec::new();
    let n = input.len();
    let max = kind.entry_bound(n);
    match input {
        ListInput::Degrees(d) => {
            for (idx, &v) in d.values().iter().enumerate() {
                if v > max {
                    violations.push(Violation::EntryOutOfBounds {
                        position: idx + 1,
                        component: "degree",
                        value: v,
                        max,
                    });
                }
                if strict && v == 0 {
                    violations.push(Violation::ZeroDegree { position: idx + 1 });
                }
            }
        }
        ListInput::Pairs(p) => {
            for (idx, &(a, b)) in p.pairs().iter().enumerate() {
                for (component, v) in [("a", a), ("b", b)] {
                    if v > max {
                        violations.push(Violation::EntryOutOfBounds {
                            position: idx + 1,
                            component,
                            value: v,
                            max,
                        });
                    }
                }
                if strict && a == 0 && b == 0 {
                    violations.push(Violation::ZeroPair { position: idx + 1 });
                }
            }
            let (sum_a, sum_b) = (p.sum_a(), p.sum_b());
            if sum_a != sum_b {
                violations.push(Violation::UnbalancedSums { sum_a, sum_b });
            }
        }
    }
    ValidationReport { violations }
}

/// Sorts pairs lexicographically nonincreasing (first on a, ties on b),
/// stably. Returns the sorted list and the permutation `perm` with
/// `sorted[k] == input[perm[k]]`.
pub fn lex_sort(pairs: &PairedList) -> (PairedList, Vec<usize>) {
    let mut idx: Vec<usize> = (0..pairs.len()).collect();
    idx.sort_by(|&x, &y| pairs[y].cmp(&pairs[x]));
    let sorted = PairedList(idx.iter().map(|&k| pairs[k]).collect());
    (sorted, idx)
}

/// Sorts a degree list nonincreasing, stably, with the permutation
/// (`sorted[k] == input[perm[k]]`).
pub fn sort_degrees(list: &IntList) -> (IntList, Vec<usize>) {
    let mut idx: Vec<usize> = (0..list.len()).collect();
    idx.sort_by(|&x, &y| list[y].cmp(&list[x]));
    let sorted = IntList(idx.iter().map(|&k| list[k]).collect());
    (sorted, idx)
}
