//! Brute-force reference enumeration for tests.
//!
//! Uses only the definitions: every inverse-closed `S1` and inverse-free
//! `S2` of the requested sizes, kept when the Cayley graph is Moore. For a
//! Cayley graph that reduces to counting, for each group element `g`, the
//! words `s` and `st` with `s, t` in `S = S1 ∪ S2` that evaluate to `g`.
//! A Moore graph has exactly one such word for every `g ≠ 1` and exactly `r`
//! for `g = 1`. No pruning, no filters.

use crate::group::{automorphism_group, Group};
use crate::search::GeneratorSet;

/// Exact Moore test of `Cay(G, S1 ∪ S2)` by word counting.
pub fn is_moore_cayley(group: &Group, s1: &[usize], s2: &[usize]) -> bool {
    let n = group.order();
    let r = s1.len();
    let z = s2.len();
    if n != (z + r) * (z + r) + z + 1 {
        return false;
    }
    let mut count = vec![0usize; n];
    let all: Vec<usize> = s1.iter().chain(s2).copied().collect();
    for &s in &all {
        count[s] += 1;
        for &t in &all {
            count[group.mul(s, t)] += 1;
        }
    }
    count[0] == r && count[1..].iter().all(|&c| c == 1)
}

fn subsets(
    pool: &[usize],
    k: usize,
    start: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - cur.len() {
            break;
        }
        cur.push(pool[i]);
        subsets(pool, k, i + 1, cur, out);
        cur.pop();
    }
}

/// All inverse-closed subsets of `G \ {1}` with `r` elements.
fn inverse_closed_sets(group: &Group, r: usize) -> Vec<Vec<usize>> {
    let pool: Vec<usize> = (1..group.order()).collect();
    let mut raw = Vec::new();
    subsets(&pool, r, 0, &mut Vec::new(), &mut raw);
    raw.into_iter()
        .filter(|s| s.iter().all(|&a| s.binary_search(&group.inv(a)).is_ok()))
        .collect()
}

/// Every `(S1, S2)` whose Cayley graph is a mixed Moore graph.
pub fn all_moore_sets(group: &Group, r: usize, z: usize) -> Vec<GeneratorSet> {
    let mut found = Vec::new();
    for s1 in inverse_closed_sets(group, r) {
        let pool: Vec<usize> = (1..group.order())
            .filter(|a| s1.binary_search(a).is_err() && group.inv(*a) != *a)
            .collect();
        let mut raw = Vec::new();
        subsets(&pool, z, 0, &mut Vec::new(), &mut raw);
        for s2 in raw {
            if s2.iter().any(|&a| s2.binary_search(&group.inv(a)).is_ok()) {
                continue;
            }
            if is_moore_cayley(group, &s1, &s2) {
                found.push(GeneratorSet { s1: s1.clone(), s2 });
            }
        }
    }
    found
}

/// One canonical representative per `Aut(G)`-orbit of Moore generating sets.
pub fn moore_orbits(group: &Group, r: usize, z: usize) -> Vec<GeneratorSet> {
    let auts = automorphism_group(group).expect("oracle groups are small");
    let mut reps: Vec<GeneratorSet> = all_moore_sets(group, r, z)
        .iter()
        .map(|s| s.canonical(&auts))
        .collect();
    reps.sort();
    reps.dedup();
    reps
}
