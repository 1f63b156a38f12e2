//! Shared universe generators for the exhaustive integration tests.

#![allow(dead_code)] // each test binary uses a different subset

use std::collections::BTreeMap;

use degree_lists::{IntList, PairedList};

pub fn il(values: &[usize]) -> IntList {
    IntList::new(values.to_vec()).expect("nonempty fixture")
}

pub fn pl(pairs: &[(usize, usize)]) -> PairedList {
    PairedList::new(pairs.to_vec()).expect("nonempty fixture")
}

/// Every length-`n` vector with entries in `0..=cap`, odometer order.
pub fn tuples(n: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    loop {
        out.push(cur.clone());
        let mut pos = n;
        while pos > 0 {
            if cur[pos - 1] < cap {
                cur[pos - 1] += 1;
                break;
            }
            cur[pos - 1] = 0;
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
    }
}

/// Every balanced paired list (Σa = Σb) of length `n` with entries ≤ cap.
pub fn balanced_pairs(n: usize, cap: usize) -> Vec<PairedList> {
    let ts = tuples(n, cap);
    let mut by_sum: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (idx, t) in ts.iter().enumerate() {
        by_sum.entry(t.iter().sum()).or_default().push(idx);
    }
    let mut out = Vec::new();
    for group in by_sum.values() {
        for &ai in group {
            for &bi in group {
                let pairs: Vec<(usize, usize)> = ts[ai]
                    .iter()
                    .copied()
                    .zip(ts[bi].iter().copied())
                    .collect();
                out.push(PairedList::new(pairs).expect("n ≥ 1"));
            }
        }
    }
    out
}

/// Every degree list of length `n` with entries ≤ cap and even sum.
pub fn even_sum_lists(n: usize, cap: usize) -> Vec<IntList> {
    tuples(n, cap)
        .into_iter()
        .filter(|t| t.iter().sum::<usize>() % 2 == 0)
        .map(|t| IntList::new(t).expect("n ≥ 1"))
        .collect()
}

/// Every nonincreasing degree list of length `n` with entries ≤ cap.
pub fn nonincreasing_lists(n: usize, cap: usize) -> Vec<IntList> {
    tuples(n, cap)
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] >= w[1]))
        .map(|t| IntList::new(t).expect("n ≥ 1"))
        .collect()
}

/// All results of one unit transfer on `x`: position pairs (s, t) with
/// s < t and x_s ≥ x_t + 2, together with x − e_s + e_t. A transfer always
/// moves a unit from an earlier position to a later one; moving weight
/// leftward is a different operation with different monotonicity behaviour.
pub fn unit_transfer_results(x: &[usize]) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    for s in 0..x.len() {
        for t in s + 1..x.len() {
            if x[s] >= x[t] + 2 {
                let mut moved = x.to_vec();
                moved[s] -= 1;
                moved[t] += 1;
                out.push((s, t, moved));
            }
        }
    }
    out
}

/// All permutations of 0..n (n! of them; keep n tiny).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}
