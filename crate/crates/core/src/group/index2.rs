use super::{closure, Group, Subgroup};

/// All subgroups of index exactly 2.
///
/// Every index-2 subgroup contains the subgroup `N` generated by all squares
/// and commutators, and `G/N` is an elementary abelian 2-group. The index-2
/// subgroups are therefore the preimages of the hyperplanes of `G/N`, one
/// per nonzero linear functional on it.
pub fn index2_subgroups(group: &Group) -> Vec<Subgroup> {
    let n = group.order();
    if !n.is_multiple_of(2) {
        return Vec::new();
    }
    let mut gens: Vec<usize> = group.elements().map(|g| group.mul(g, g)).collect();
    for a in group.elements() {
        for b in group.elements() {
            gens.push(group.commutator(a, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    let base = closure(group, &gens);

    // Choose coset representatives g_1..g_k whose images form a basis of G/N.
    let mut basis: Vec<usize> = Vec::new();
    let mut span = base.clone();
    while span.len() < n {
        let g = group.elements().find(|&g| !span.contains(g)).unwrap();
        basis.push(g);
        let mut all = gens.clone();
        all.extend_from_slice(&basis);
        span = closure(group, &all);
    }
    let rank = basis.len();
    if rank == 0 {
        return Vec::new();
    }

    // Coordinates of every element in F_2^rank.
    let mut coords = vec![0u32; n];
    for mask in 0u32..(1 << rank) {
        let rep = (0..rank)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(Group::IDENTITY, |acc, i| group.mul(acc, basis[i]));
        for &h in base.elements() {
            coords[group.mul(h, rep)] = mask;
        }
    }

    let mut out: Vec<Subgroup> = (1u32..(1 << rank))
        .map(|functional| Subgroup {
            elements: group
                .elements()
                .filter(|&g| (coords[g] & functional).count_ones().is_multiple_of(2))
                .collect(),
        })
        .collect();
    out.sort();
    out
}
