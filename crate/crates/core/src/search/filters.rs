//! Necessary conditions on (partial) generating sets.

use std::fmt;

use crate::feasibility::{abelian_index2_excluded, index2_split};
use crate::group::{index2_subgroups, Group};

/// Size of `{1} ∪ T ∪ TT`.
pub fn ball_size(group: &Group, set: &[usize]) -> usize {
    let mut seen = vec![false; group.order()];
    seen[Group::IDENTITY] = true;
    let mut count = 1;
    let mut mark = |x: usize| {
        if !seen[x] {
            seen[x] = true;
            count += 1;
        }
    };
    for &a in set {
        mark(a);
        for &b in set {
            mark(group.mul(a, b));
        }
    }
    count
}

/// `(z+r)² + z + 1` for degrees `r`, `z`.
fn moore_count(r: usize, z: usize) -> usize {
    (z + r).pow(2) + z + 1
}

/// True iff `|{1} ∪ T ∪ TT|` for `T = T1 ∪ T2` reaches the Moore count for `|T1|`, `|T2|`.
pub fn is_feasible_subset(group: &Group, t1: &[usize], t2: &[usize]) -> bool {
    let all: Vec<usize> = t1.iter().chain(t2).copied().collect();
    ball_size(group, &all) == moore_count(t1.len(), t2.len())
}

/// The first necessary generating-set condition a set violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConditionViolation {
    /// An undirected generator has order 3 or 4.
    UndirectedOrder,
    /// A directed generator is an involution.
    DirectedInvolution,
    /// Two undirected generators multiply to an involution.
    UndirectedProductInvolution,
    /// Two distinct generators commute without being an undirected inverse pair.
    Commuting,
    /// Some generator is a product of two generators.
    NotProductFree,
    /// Two pairs of generators give the same non-identity product.
    RepeatedProduct,
    /// The directed part does not split into order-3 elements and triples
    /// `{a, b, c}` of order at least 4 with `abc = 1`.
    DirectedStructure,
}

impl ConditionViolation {
    /// Short stable name of the violated condition.
    pub fn tag(self) -> &'static str {
        match self {
            ConditionViolation::UndirectedOrder => "undirected-order",
            ConditionViolation::DirectedInvolution => "directed-involution",
            ConditionViolation::UndirectedProductInvolution => "undirected-product-involution",
            ConditionViolation::Commuting => "commuting",
            ConditionViolation::NotProductFree => "not-product-free",
            ConditionViolation::RepeatedProduct => "repeated-product",
            ConditionViolation::DirectedStructure => "directed-structure",
        }
    }
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "violation({})", self.tag())
    }
}

/// The undirected-order, product-involution and commuting checks for an
/// undirected set alone.
pub(crate) fn undirected_conditions(group: &Group, s1: &[usize]) -> Result<(), ConditionViolation> {
    if s1.iter().any(|&a| matches!(group.element_order(a), 3 | 4)) {
        return Err(ConditionViolation::UndirectedOrder);
    }
    for (i, &a) in s1.iter().enumerate() {
        for &b in &s1[i + 1..] {
            if group.element_order(group.mul(a, b)) == 2 {
                return Err(ConditionViolation::UndirectedProductInvolution);
            }
        }
    }
    commuting_pairs(group, s1, &[])
}

fn commuting_pairs(group: &Group, s1: &[usize], s2: &[usize]) -> Result<(), ConditionViolation> {
    let all: Vec<(usize, bool)> = s1
        .iter()
        .map(|&a| (a, true))
        .chain(s2.iter().map(|&a| (a, false)))
        .collect();
    for (i, &(a, a_undirected)) in all.iter().enumerate() {
        for &(b, b_undirected) in &all[i + 1..] {
            let inverse_pair = a_undirected && b_undirected && group.inv(a) == b;
            if !inverse_pair && group.commute(a, b) {
                return Err(ConditionViolation::Commuting);
            }
        }
    }
    Ok(())
}

/// True iff the elements of order ≥ 4 split into triples `{a, b, c}` with
/// some ordering multiplying to the identity.
fn splits_into_triples(group: &Group, rest: &mut Vec<usize>) -> bool {
    let Some(a) = rest.pop() else {
        return true;
    };
    for i in 0..rest.len() {
        let b = rest[i];
        for (x, y) in [(a, b), (b, a)] {
            let c = group.inv(group.mul(x, y));
            if let Some(j) = rest.iter().position(|&e| e == c) {
                if j == i {
                    continue;
                }
                let mut remaining: Vec<usize> = rest
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &e)| e)
                    .collect();
                if splits_into_triples(group, &mut remaining) {
                    return true;
                }
            }
        }
    }
    rest.push(a);
    false
}

/// Checks the generating-set conditions in order, reporting the first
/// one violated. Inverse pairs inside `s1` are allowed to commute.
pub fn necessary_conditions(
    group: &Group,
    s1: &[usize],
    s2: &[usize],
) -> Result<(), ConditionViolation> {
    if s1.iter().any(|&a| matches!(group.element_order(a), 3 | 4)) {
        return Err(ConditionViolation::UndirectedOrder);
    }
    if s2.iter().any(|&a| group.element_order(a) == 2) {
        return Err(ConditionViolation::DirectedInvolution);
    }
    for (i, &a) in s1.iter().enumerate() {
        for &b in &s1[i + 1..] {
            if group.element_order(group.mul(a, b)) == 2 {
                return Err(ConditionViolation::UndirectedProductInvolution);
            }
        }
    }
    commuting_pairs(group, s1, s2)?;

    let all: Vec<usize> = s1.iter().chain(s2).copied().collect();
    let mut in_set = vec![false; group.order()];
    for &a in &all {
        in_set[a] = true;
    }
    let mut products = vec![false; group.order()];
    let mut repeated = false;
    for &a in &all {
        for &b in &all {
            let ab = group.mul(a, b);
            if in_set[ab] {
                return Err(ConditionViolation::NotProductFree);
            }
            if ab != Group::IDENTITY && std::mem::replace(&mut products[ab], true) {
                repeated = true;
            }
        }
    }
    if repeated {
        return Err(ConditionViolation::RepeatedProduct);
    }

    let mut big: Vec<usize> = s2
        .iter()
        .copied()
        .filter(|&a| group.element_order(a) != 3)
        .collect();
    if big.iter().any(|&a| group.element_order(a) < 4) || !splits_into_triples(group, &mut big) {
        return Err(ConditionViolation::DirectedStructure);
    }
    Ok(())
}

/// Index-2 subgroup data for one group and one `(r, z)`.
#[derive(Debug, Clone)]
pub struct Index2Context {
    masks: Vec<Vec<bool>>,
    any_abelian: bool,
    excluded: bool,
    splits: Vec<usize>,
    degree: usize,
}

impl Index2Context {
    pub fn new(group: &Group, r: usize, z: usize) -> Self {
        let subgroups = index2_subgroups(group);
        Index2Context {
            masks: subgroups.iter().map(|h| h.mask(group.order())).collect(),
            any_abelian: subgroups.iter().any(|h| h.is_abelian(group)),
            excluded: abelian_index2_excluded(r as u64, z as u64),
            splits: index2_split(r as u64, z as u64)
                .into_iter()
                .map(|s| s as usize)
                .collect(),
            degree: r + z,
        }
    }

    pub fn subgroup_count(&self) -> usize {
        self.masks.len()
    }

    /// True when an abelian index-2 subgroup rules out the whole group.
    pub fn rejects_group(&self) -> bool {
        self.any_abelian && self.excluded
    }

    /// Whether a partial generating set can still be completed: for every
    /// index-2 subgroup `H` some admissible split `s` has
    /// `|T ∩ H| ≤ s` and `|T \ H| ≤ r + z - s`.
    pub fn admits(&self, set: &[usize]) -> bool {
        !self.rejects_group()
            && self.masks.iter().all(|mask| {
                let inside = set.iter().filter(|&&g| mask[g]).count();
                let outside = set.len() - inside;
                self.splits
                    .iter()
                    .any(|&s| inside <= s && outside + s <= self.degree)
            })
    }

    /// The exact condition for a complete set: `|S ∩ H|` is an admissible split.
    pub fn admits_complete(&self, set: &[usize]) -> bool {
        !self.rejects_group()
            && self.masks.iter().all(|mask| {
                let inside = set.iter().filter(|&&g| mask[g]).count();
                self.splits.contains(&inside)
            })
    }
}

/// Index-2 feasibility of an inverse-closed undirected set `a` for degrees
/// `(r, z)`; see [`Index2Context::admits`].
pub fn index2_prefilter(group: &Group, a: &[usize], r: usize, z: usize) -> bool {
    Index2Context::new(group, r, z).admits(a)
}
