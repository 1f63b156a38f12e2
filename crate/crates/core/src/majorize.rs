//! Majorization order, conjugation, unit transfers, and the Muirhead
//! decomposition of a majorization gap into unit transfers.
//!
//! Majorization here compares prefix sums in the *given* order — lists are
//! never sorted implicitly. This matters: the characterization tests compare
//! against threshold lists that are meaningful unsorted.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::core::{IntList, Transfer, TransferDirection, TransferPath};
use crate::error::{Error, Result};

/// `a ≺ a′`: every prefix sum of `a` is at most the matching prefix sum of
/// `a′`, with equal totals. Reflexive. Errors only on a length mismatch.
pub fn is_majorized(a: &IntList, aprime: &IntList) -> Result<bool> {
    if a.len() != aprime.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: aprime.len(),
        });
    }
    let mut pa = 0usize;
    let mut pp = 0usize;
    for k in 0..a.len() {
        pa += a[k];
        pp += aprime[k];
        if pa > pp {
            return Ok(false);
        }
    }
    Ok(pa == pp)
}

/// Conjugate list of `b` up to length `n`: entry i (1-based) counts the
/// components of `b` that are ≥ i. Entries of `b` must lie in [0, n].
pub fn conjugate(b: &IntList, n: usize) -> Result<IntList> {
    for (idx, &v) in b.values().iter().enumerate() {
        if v > n {
            return Err(Error::EntryOutOfRange {
                position: idx + 1,
                value: v,
                max: n,
            });
        }
    }
    let mut counts = vec![0usize; n];
    for &v in b.values() {
        // v contributes to conjugate entries 1..=v.
        for slot in counts.iter_mut().take(v) {
            *slot += 1;
        }
    }
    IntList::new(counts)
}

/// Applies a unit transfer, checking its precondition:
/// Right(i,j) needs `x_i ≥ x_j + 2` and moves one unit from i to j;
/// Left(i,j) needs `x_i ≤ x_j + 1` and moves one unit from j to i.
/// Both require `i < j`.
pub fn apply_transfer(x: &IntList, t: Transfer) -> Result<IntList> {
    let n = x.len();
    if t.i >= t.j || t.j >= n {
        return Err(Error::IndexPair {
            i: t.i + 1,
            j: t.j + 1,
            n,
        });
    }
    let mut v = x.values().to_vec();
    match t.direction {
        TransferDirection::Right => {
            if v[t.i] < v[t.j] + 2 {
                return Err(Error::TransferPrecondition {
                    direction: t.direction,
                    i: t.i + 1,
                    j: t.j + 1,
                    reason: format!("{} < {} + 2", v[t.i], v[t.j]),
                });
            }
            v[t.i] -= 1;
            v[t.j] += 1;
        }
        TransferDirection::Left => {
            if v[t.i] > v[t.j] + 1 {
                return Err(Error::TransferPrecondition {
                    direction: t.direction,
                    i: t.i + 1,
                    j: t.j + 1,
                    reason: format!("{} > {} + 1", v[t.i], v[t.j]),
                });
            }
            if v[t.j] == 0 {
                return Err(Error::TransferPrecondition {
                    direction: t.direction,
                    i: t.i + 1,
                    j: t.j + 1,
                    reason: "position j has no unit to move".into(),
                });
            }
            v[t.i] += 1;
            v[t.j] -= 1;
        }
    }
    IntList::new(v)
}

/// Muirhead decomposition: the deterministic path of unit right-transfers
/// from `aprime` down to `a`.
///
/// Preconditions: `a` nonincreasing and `a ≺ aprime`. Each step picks
/// ℓ = the first position where the prefix sum of `a` is still below the
/// current list's, and k = the least position where the current entry is
/// below `a`, then applies the (ℓ,k)-transfer. The path has exactly
/// κ = ½·Σ|a′_i − a_i| steps, and every intermediate list x satisfies
/// `a ≺ x ≺ aprime`.
pub fn muirhead_path(a: &IntList, aprime: &IntList) -> Result<TransferPath> {
    if a.len() != aprime.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: aprime.len(),
        });
    }
    if !a.is_nonincreasing() {
        return Err(Error::NotNonincreasing);
    }
    if !is_majorized(a, aprime)? {
        return Err(Error::Unsupported(format!(
            "{a} is not majorized by {aprime}"
        )));
    }
    let kappa: usize = a
        .values()
        .iter()
        .zip(aprime.values())
        .map(|(&x, &y)| x.abs_diff(y))
        .sum::<usize>()
        / 2;

    let mut steps = Vec::with_capacity(kappa);
    let mut intermediates = Vec::with_capacity(kappa + 1);
    intermediates.push(aprime.clone());
    let mut current = aprime.values().to_vec();
    while current != a.values() {
        // First position where a's prefix sum is strictly below current's.
        let mut pa = 0usize;
        let mut pc = 0usize;
        let mut ell = None;
        for idx in 0..a.len() {
            pa += a[idx];
            pc += current[idx];
            if pa < pc {
                ell = Some(idx);
                break;
            }
        }
        let ell = ell.expect("current != a with equal sums implies a strict prefix gap");
        // Least position where current is below a.
        let k = (0..a.len())
            .find(|&idx| current[idx] < a[idx])
            .expect("current != a with equal sums implies a deficient position");
        assert!(ell < k, "Muirhead step must move a unit rightwards");
        assert!(
            current[ell] >= current[k] + 2,
            "Muirhead step must satisfy the transfer precondition"
        );
        current[ell] -= 1;
        current[k] += 1;
        steps.push(Transfer::right(ell, k));
        intermediates.push(IntList::new(current.clone()).expect("nonempty"));
    }
    assert_eq!(steps.len(), kappa, "path length must equal half the l1 gap");
    Ok(TransferPath {
        start: aprime.clone(),
        steps,
        intermediates,
    })
}

/// Dominance of hinge-function sums: for every integer threshold t,
/// Σ max(0, a_i − t) ≤ Σ max(0, a′_i − t). Requires equal lengths and equal
/// sums. For nonincreasing lists this is equivalent to [`is_majorized`]
/// (hinge functions generate all convex functions on the integers).
pub fn convex_order_check(a: &IntList, aprime: &IntList) -> Result<bool> {
    if a.len() != aprime.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: aprime.len(),
        });
    }
    let (sa, sp) = (a.sum(), aprime.sum());
    if sa != sp {
        return Err(Error::SumMismatch { left: sa, right: sp });
    }
    let top = a.max().max(aprime.max());
    for t in 0..=top {
        let ha: usize = a.values().iter().map(|&v| v.saturating_sub(t)).sum();
        let hp: usize = aprime.values().iter().map(|&v| v.saturating_sub(t)).sum();
        if ha > hp {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for step in 1..=k {
        acc = acc * (n - k + step) / step;
    }
    acc
}
