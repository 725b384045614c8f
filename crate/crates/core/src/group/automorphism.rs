//! Automorphisms and isomorphisms of table groups by generator-image
//! backtracking.
//!
//! A homomorphism is fixed by the images of a generating sequence. We pick
//! a short sequence greedily, then try every order-preserving image for each
//! generator in turn, extending the partial map over the subgroup generated
//! so far and abandoning the branch at the first inconsistency.

use super::{closure, Group};
use crate::error::GroupError;

/// Largest group order the backtracking engine accepts by default.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// A permutation of element indices that respects the group operation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    map: Vec<usize>,
}

impl Automorphism {
    pub fn identity(order: usize) -> Self {
        Automorphism {
            map: (0..order).collect(),
        }
    }

    /// Wraps `map` if it is a bijective homomorphism of `group`.
    pub fn from_map(group: &Group, map: Vec<usize>) -> Option<Self> {
        let n = group.order();
        if map.len() != n {
            return None;
        }
        let mut seen = vec![false; n];
        for &x in &map {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        let hom = group.elements().all(|a| {
            group
                .elements()
                .all(|b| map[group.mul(a, b)] == group.mul(map[a], map[b]))
        });
        hom.then_some(Automorphism { map })
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: other.map.iter().map(|&g| self.map[g]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut map = vec![0; self.map.len()];
        for (g, &image) in self.map.iter().enumerate() {
            map[image] = g;
        }
        Automorphism { map }
    }

    /// Sorted image of an element set.
    pub fn image_of_set(&self, set: &[usize]) -> Vec<usize> {
        let mut image: Vec<usize> = set.iter().map(|&g| self.map[g]).collect();
        image.sort_unstable();
        image
    }
}

/// A generating sequence in which each element lies outside the subgroup
/// generated by its predecessors, chosen greedily to grow that subgroup as
/// fast as possible.
fn generating_sequence(group: &Group) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = closure(group, &gens);
    while current.len() < group.order() {
        let mut best: Option<(usize, usize)> = None;
        let mut scratch = gens.clone();
        scratch.push(0);
        for g in group.elements().filter(|&g| !current.contains(g)) {
            *scratch.last_mut().unwrap() = g;
            let size = closure(group, &scratch).len();
            if best.is_none_or(|(_, s)| size > s) {
                best = Some((g, size));
            }
        }
        gens.push(best.expect("proper subgroup has an outside element").0);
        current = closure(group, &gens);
    }
    gens
}

struct HomSearch<'a> {
    src: &'a Group,
    dst: &'a Group,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    images: Vec<usize>,
    stop_at_first: bool,
    found: Vec<Vec<usize>>,
}

impl<'a> HomSearch<'a> {
    fn new(src: &'a Group, dst: &'a Group, stop_at_first: bool) -> Self {
        let gens = generating_sequence(src);
        let candidates = gens
            .iter()
            .map(|&g| {
                let order = src.element_order(g);
                dst.elements()
                    .filter(|&h| dst.element_order(h) == order)
                    .collect()
            })
            .collect();
        HomSearch {
            src,
            dst,
            gens,
            candidates,
            images: Vec::new(),
            stop_at_first,
            found: Vec::new(),
        }
    }

    /// Extends `images` to a map on the subgroup generated by the first
    /// `images.len()` generators. Returns `None` on any inconsistency or
    /// collision.
    fn extend(&self) -> Option<Vec<usize>> {
        let n = self.src.order();
        let k = self.images.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[Group::IDENTITY] = Group::IDENTITY;
        used[Group::IDENTITY] = true;
        let mut domain = vec![Group::IDENTITY];
        let mut head = 0;
        while head < domain.len() {
            let x = domain[head];
            head += 1;
            for j in 0..k {
                let y = self.src.mul(x, self.gens[j]);
                let image = self.dst.mul(map[x], self.images[j]);
                if map[y] == usize::MAX {
                    if used[image] {
                        return None;
                    }
                    map[y] = image;
                    used[image] = true;
                    domain.push(y);
                } else if map[y] != image {
                    return None;
                }
            }
        }
        Some(map)
    }

    fn run(&mut self) {
        if self.gens.is_empty() {
            self.found.push(vec![Group::IDENTITY]);
            return;
        }
        self.descend();
    }

    fn descend(&mut self) {
        let level = self.images.len();
        for idx in 0..self.candidates[level].len() {
            let candidate = self.candidates[level][idx];
            self.images.push(candidate);
            if let Some(map) = self.extend() {
                if level + 1 == self.gens.len() {
                    self.found.push(map);
                } else {
                    self.descend();
                }
            }
            self.images.pop();
            if self.stop_at_first && !self.found.is_empty() {
                return;
            }
        }
    }
}

fn check_cap(group: &Group, cap: usize) -> Result<(), GroupError> {
    if group.order() > cap {
        Err(GroupError::CapExceeded {
            order: group.order(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Every automorphism of `group`, identity first, then in lexicographic
/// order of maps.
pub fn automorphism_group(group: &Group) -> Result<Vec<Automorphism>, GroupError> {
    automorphism_group_with_cap(group, DEFAULT_ORDER_CAP)
}

pub fn automorphism_group_with_cap(
    group: &Group,
    cap: usize,
) -> Result<Vec<Automorphism>, GroupError> {
    check_cap(group, cap)?;
    let mut search = HomSearch::new(group, group, false);
    search.run();
    let mut auts: Vec<Automorphism> = search
        .found
        .into_iter()
        .map(|map| Automorphism { map })
        .collect();
    auts.sort_unstable();
    Ok(auts)
}

/// True iff some bijection between the groups respects multiplication.
pub fn groups_isomorphic(a: &Group, b: &Group) -> Result<bool, GroupError> {
    groups_isomorphic_with_cap(a, b, DEFAULT_ORDER_CAP)
}

pub fn groups_isomorphic_with_cap(a: &Group, b: &Group, cap: usize) -> Result<bool, GroupError> {
    check_cap(a, cap)?;
    check_cap(b, cap)?;
    if a.order() != b.order()
        || a.is_abelian() != b.is_abelian()
        || a.order_profile() != b.order_profile()
    {
        return Ok(false);
    }
    let mut search = HomSearch::new(a, b, true);
    search.run();
    Ok(!search.found.is_empty())
}

/// Lexicographically least sorted image of `set` under `auts`.
///
/// With the full automorphism list, two sets share an orbit exactly when
/// their canonical forms agree.
pub fn canonical_set(set: &[usize], auts: &[Automorphism]) -> Vec<usize> {
    let mut best: Vec<usize> = set.to_vec();
    best.sort_unstable();
    let mut image = Vec::with_capacity(set.len());
    for aut in auts {
        image.clear();
        image.extend(set.iter().map(|&g| aut.apply(g)));
        image.sort_unstable();
        if image < best {
            best.clone_from(&image);
        }
    }
    best
}
