//! Minconvex and opposed lists, and the exhaustive experiment confirming
//! that minconvex lists maximize the number of realizations at fixed (n, m).

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::core::{check_permutation, IntList, ListInput, PairedList, RealizationKind};
use crate::count::count_realizations;
use crate::error::{Error, Result};
use crate::majorize::is_majorized;

/// Parameters of a minconvex construction: `n` pairs with total degree sum
/// `m`. Totals are validated against the capacity of the kind: n² entries
/// for loop-digraphs and n(n−1) arcs for digraphs. Graph totals must also be
/// even. (Some presentations restrict digraph totals to n(n−1)/2; the full
/// arc bound is the one enforced here.)
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinconvexSpec {
    pub n: usize,
    pub m: usize,
    pub kind: RealizationKind,
}

impl MinconvexSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::EmptyList);
        }
        let capacity = match self.kind {
            RealizationKind::LoopDigraph => self.n * self.n,
            RealizationKind::Digraph | RealizationKind::Graph => self.n * (self.n - 1),
        };
        if self.m > capacity {
            return Err(Error::Unsupported(format!(
                "total {} exceeds the {} capacity {} at n = {}",
                self.m,
                self.kind.name(),
                capacity,
                self.n
            )));
        }
        if self.kind == RealizationKind::Graph && !self.m.is_multiple_of(2) {
            return Err(Error::Unsupported(format!(
                "graph degree totals must be even, got {}",
                self.m
            )));
        }
        Ok(())
    }
}

/// The balanced list α with r := m mod n entries ⌊m/n⌋ + 1 followed by
/// n − r entries ⌊m/n⌋. Nonincreasing, sums to m, and constant when n | m.
pub fn minconvex_base(n: usize, m: usize) -> Result<IntList> {
    if n == 0 {
        return Err(Error::EmptyList);
    }
    if m > n * n {
        return Err(Error::Unsupported(format!(
            "total {m} exceeds the capacity {} at n = {n}",
            n * n
        )));
    }
    let q = m / n;
    let r = m % n;
    IntList::new((0..n).map(|i| if i < r { q + 1 } else { q }).collect())
}

/// Reorders a paired list into opposed form: pairs are stably sorted so the
/// b-components are nondecreasing, then the a-column is replaced by its own
/// nonincreasing rearrangement. Both column multisets are preserved.
pub fn opposed_sort(pairs: &PairedList) -> PairedList {
    let mut by_b: Vec<(usize, usize)> = pairs.pairs().to_vec();
    by_b.sort_by_key(|&(_, b)| b);
    let mut a_col: Vec<usize> = by_b.iter().map(|&(a, _)| a).collect();
    a_col.sort_unstable_by(|x, y| y.cmp(x));
    PairedList::new(
        a_col
            .into_iter()
            .zip(by_b.iter().map(|&(_, b)| b))
            .collect(),
    )
    .expect("same length as the input")
}

/// How to pair the minconvex base α with a rearrangement of itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pairing {
    /// (α, α): the second component repeats α unpermuted.
    Identity,
    /// (α, α reversed): the second component is nondecreasing.
    Opposed,
    /// (α, α∘σ): entry i of the second component is α[σ[i]].
    Permutation(Vec<usize>),
}

/// Builds a minconvex list (α, α_σ) for the given pairing.
pub fn minconvex_paired(
    n: usize,
    m: usize,
    kind: RealizationKind,
    pairing: &Pairing,
) -> Result<PairedList> {
    MinconvexSpec { n, m, kind }.validate()?;
    let alpha = minconvex_base(n, m)?;
    let second: Vec<usize> = match pairing {
        Pairing::Identity => alpha.values().to_vec(),
        Pairing::Opposed => alpha.values().iter().rev().copied().collect(),
        Pairing::Permutation(sigma) => {
            check_permutation(sigma, n)?;
            sigma.iter().map(|&s| alpha[s]).collect()
        }
    };
    PairedList::new(alpha.values().iter().copied().zip(second).collect())
}

/// Witness for the majorization floor: every nonincreasing list with n
/// entries and sum m majorizes the minconvex base α. Always true; exposed so
/// experiments can assert it instance by instance.
pub fn majorization_floor_check(a: &IntList, n: usize, m: usize) -> Result<bool> {
    if !a.is_nonincreasing() {
        return Err(Error::NotNonincreasing);
    }
    if a.len() != n {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: n,
        });
    }
    if a.sum() != m {
        return Err(Error::SumMismatch {
            left: a.sum(),
            right: m,
        });
    }
    is_majorized(&minconvex_base(n, m)?, a)
}

/// The staircase pair: a threshold list with a unique realization and a
/// target one transfer-path away whose realization count is at least 2^(n−2).
/// Returns (threshold, target); both share b = (0, 1, …, n−1).
pub fn staircase_family(n: usize) -> Result<(PairedList, PairedList)> {
    if n < 3 {
        return Err(Error::Unsupported(format!(
            "the staircase family needs n ≥ 3, got {n}"
        )));
    }
    let threshold = PairedList::new((0..n).map(|i| (n - 1 - i, i)).collect())?;
    let target = PairedList::new(
        (0..n)
            .map(|i| {
                let a = if i == 0 {
                    n - 2
                } else if i == n - 1 {
                    1
                } else {
                    n - 1 - i
                };
                (a, i)
            })
            .collect(),
    )?;
    Ok((threshold, target))
}

/// All length-`len` lists with entries in 0..=max_entry summing to `sum`,
/// in lexicographically descending order.
pub fn bounded_compositions(sum: usize, len: usize, max_entry: usize) -> Vec<IntList> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    compose(sum, len, max_entry, usize::MAX, false, &mut cur, &mut out);
    out
}

/// The nonincreasing subset of [`bounded_compositions`], i.e. bounded
/// partitions of `sum` into exactly `len` parts (zeros allowed).
pub fn bounded_partitions(sum: usize, len: usize, max_entry: usize) -> Vec<IntList> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    compose(sum, len, max_entry, usize::MAX, true, &mut cur, &mut out);
    out
}

fn compose(
    sum: usize,
    len: usize,
    max_entry: usize,
    prev: usize,
    nonincreasing: bool,
    cur: &mut Vec<usize>,
    out: &mut Vec<IntList>,
) {
    if len == 0 {
        if sum == 0 && !cur.is_empty() {
            out.push(IntList::new(cur.clone()).expect("nonempty"));
        }
        return;
    }
    if sum > len * max_entry.min(if nonincreasing { prev } else { usize::MAX }) {
        return;
    }
    let cap = max_entry.min(sum).min(if nonincreasing { prev } else { usize::MAX });
    for v in (0..=cap).rev() {
        cur.push(v);
        compose(sum - v, len - 1, max_entry, v, nonincreasing, cur, out);
        cur.pop();
    }
}

/// One row of an extremal experiment: a list from the enumerated universe
/// with its exact realization count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalEntry {
    pub list: PairedList,
    pub count: BigUint,
    pub is_minconvex: bool,
    pub is_max: bool,
}

/// Report of [`verify_extremal_max`]: the full universe with counts, the
/// maximum, the designated minconvex list and its count, and whether the
/// extremality claim holds (strict maximality for loop-digraphs, weak for
/// digraphs and graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub n: usize,
    pub m: usize,
    pub kind: RealizationKind,
    pub entries: Vec<ExtremalEntry>,
    pub max_count: BigUint,
    pub minconvex_list: PairedList,
    pub minconvex_count: BigUint,
    pub holds: bool,
}

/// Enumerates every balanced list with the given (n, m, kind), computes the
/// exact realization count of each, and checks that the minconvex list
/// attains the maximum. The universe keeps the a-component nonincreasing
/// (counts are invariant under relabeling); for digraphs, where the relative
/// order of b against a matters, every ordering of b is enumerated.
pub fn verify_extremal_max(
    n: usize,
    m: usize,
    kind: RealizationKind,
    guard: usize,
) -> Result<ExtremalReport> {
    MinconvexSpec { n, m, kind }.validate()?;
    if n > guard {
        return Err(Error::GuardExceeded {
            actual: n,
            limit: guard,
        });
    }
    let bound = kind.entry_bound(n);
    let universe: Vec<PairedList> = match kind {
        RealizationKind::LoopDigraph | RealizationKind::Digraph => {
            let heads = bounded_partitions(m, n, bound);
            let tails = if kind == RealizationKind::LoopDigraph {
                heads.clone()
            } else {
                bounded_compositions(m, n, bound)
            };
            let mut u = Vec::with_capacity(heads.len() * tails.len());
            for a in &heads {
                for b in &tails {
                    u.push(PairedList::from_components(a, b).expect("equal lengths"));
                }
            }
            u
        }
        RealizationKind::Graph => bounded_partitions(m, n, bound)
            .iter()
            .map(PairedList::symmetric)
            .collect(),
    };
    let pairing = match kind {
        RealizationKind::Digraph => Pairing::Opposed,
        _ => Pairing::Identity,
    };
    let minconvex_list = minconvex_paired(n, m, kind, &pairing)?;
    let alpha = minconvex_base(n, m)?;

    let counts: Vec<BigUint> = universe
        .par_iter()
        .map(|list| {
            count_realizations(&ListInput::Pairs(list.clone()), kind, guard)
                .expect("the guard admits n")
                .exact
                .expect("exhaustive within the guard")
        })
        .collect();
    let max_count = counts.iter().max().cloned().expect("nonempty universe");

    let entries: Vec<ExtremalEntry> = universe
        .into_iter()
        .zip(counts)
        .map(|(list, count)| {
            let is_minconvex = match kind {
                RealizationKind::LoopDigraph => list.a() == alpha && list.b() == alpha,
                RealizationKind::Digraph => list == minconvex_list,
                RealizationKind::Graph => list.a() == alpha,
            };
            let is_max = count == max_count;
            ExtremalEntry {
                list,
                count,
                is_minconvex,
                is_max,
            }
        })
        .collect();

    let minconvex_count = entries
        .iter()
        .find(|e| e.is_minconvex)
        .map(|e| e.count.clone())
        .expect("the minconvex list lies in the universe");
    let holds = match kind {
        RealizationKind::LoopDigraph => entries.iter().all(|e| {
            if e.is_minconvex {
                e.count == max_count
            } else {
                e.count < minconvex_count
            }
        }),
        _ => minconvex_count == max_count,
    };

    Ok(ExtremalReport {
        n,
        m,
        kind,
        entries,
        max_count,
        minconvex_list,
        minconvex_count,
        holds,
    })
}
