//! Finite groups stored as dense multiplication tables.
//!
//! Elements are the indices `0..n` and index `0` is always the identity.
//! A [`Group`] is immutable once built; every cache (inverses, element
//! orders, commutativity) is filled in by [`build_group`].

mod automorphism;
mod index2;

use std::collections::VecDeque;
use std::fmt;

pub use automorphism::{
    automorphism_group, automorphism_group_with_cap, canonical_set, groups_isomorphic,
    groups_isomorphic_with_cap, Automorphism, DEFAULT_ORDER_CAP,
};
pub use index2::index2_subgroups;

use crate::error::GroupError;

/// A finite group as an `n × n` multiplication table over element indices.
#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    element_orders: Vec<usize>,
    abelian: bool,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

impl Group {
    /// The identity element.
    pub const IDENTITY: usize = 0;

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Returns a copy of this group carrying a different label.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Least `m ≥ 1` with `g^m` equal to the identity.
    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.element_orders[g]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    /// `g^k` for `k ≥ 0`.
    pub fn pow(&self, g: usize, k: usize) -> usize {
        let k = k % self.element_orders[g];
        (0..k).fold(Self::IDENTITY, |acc, _| self.mul(acc, g))
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        self.mul(self.mul(self.inv(a), self.inv(b)), ab)
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// True iff the multiplication table is symmetric.
    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Row `a` of the table: `a * b` for every `b`.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    /// The table as nested rows, e.g. for serialisation.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Number of elements of order exactly 2.
    pub fn involution_count(&self) -> usize {
        self.element_orders.iter().filter(|&&o| o == 2).count()
    }

    /// Sorted multiset of element orders, a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut profile = self.element_orders.clone();
        profile.sort_unstable();
        profile
    }
}

/// A subgroup as a sorted list of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Membership mask indexed by element.
    pub fn mask(&self, order: usize) -> Vec<bool> {
        let mut mask = vec![false; order];
        for &g in &self.elements {
            mask[g] = true;
        }
        mask
    }

    /// True iff the elements commute pairwise.
    pub fn is_abelian(&self, group: &Group) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, &a)| self.elements[i + 1..].iter().all(|&b| group.commute(a, b)))
    }
}

/// Validates `rows` as a group multiplication table and populates caches.
///
/// If the identity is not at index 0 the labels of the identity and 0 are
/// swapped so that it is.
pub fn build_group(rows: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Group, GroupError> {
    let name = name.into();
    let n = rows.len();
    if n == 0 {
        return Err(GroupError::Empty);
    }
    let mut table = Vec::with_capacity(n * n);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(GroupError::NotSquare {
                row,
                len: entries.len(),
                expected: n,
            });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(GroupError::EntryOutOfRange {
                    row,
                    col,
                    value,
                    order: n,
                });
            }
        }
        table.extend_from_slice(entries);
    }
    check_latin(&table, n)?;

    let identity = (0..n)
        .find(|&e| (0..n).all(|j| table[e * n + j] == j && table[j * n + e] == j))
        .ok_or(GroupError::NoIdentity)?;
    if identity != 0 {
        log::warn!("{name}: identity found at index {identity}; relabeling it to 0");
        table = swap_labels(&table, n, 0, identity);
    }
    check_associative(&table, n)?;

    let inverses: Vec<usize> = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a * n + b] == 0)
                .expect("Latin square row contains 0")
        })
        .collect();
    let element_orders = (0..n)
        .map(|g| {
            let mut x = g;
            let mut m = 1;
            while x != 0 {
                x = table[x * n + g];
                m += 1;
            }
            m
        })
        .collect();
    let abelian = (0..n).all(|a| (a + 1..n).all(|b| table[a * n + b] == table[b * n + a]));

    Ok(Group {
        name,
        order: n,
        table,
        inverses,
        element_orders,
        abelian,
    })
}

fn check_latin(table: &[usize], n: usize) -> Result<(), GroupError> {
    let mut seen = vec![usize::MAX; n];
    for row in 0..n {
        for col in 0..n {
            let value = table[row * n + col];
            if seen[value] == row {
                return Err(GroupError::NotLatinSquare {
                    line: "row",
                    index: row,
                    value,
                });
            }
            seen[value] = row;
        }
    }
    seen.fill(usize::MAX);
    for col in 0..n {
        for row in 0..n {
            let value = table[row * n + col];
            if seen[value] == col {
                return Err(GroupError::NotLatinSquare {
                    line: "column",
                    index: col,
                    value,
                });
            }
            seen[value] = col;
        }
    }
    Ok(())
}

fn swap_labels(table: &[usize], n: usize, x: usize, y: usize) -> Vec<usize> {
    let relabel = |v: usize| {
        if v == x {
            y
        } else if v == y {
            x
        } else {
            v
        }
    };
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[relabel(a) * n + relabel(b)] = relabel(table[a * n + b]);
        }
    }
    out
}

/// Light's associativity test: the elements `c` with `(ab)c = a(bc)` for all
/// `a, b` are closed under products, so it suffices to test `c` over a set
/// whose right-multiplicative closure is everything.
fn check_associative(table: &[usize], n: usize) -> Result<(), GroupError> {
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut queue = VecDeque::new();
    while let Some(next) = reached.iter().position(|&r| !r) {
        gens.push(next);
        // Re-saturate with the enlarged generator list.
        queue.extend(
            reached
                .iter()
                .enumerate()
                .filter(|(_, &r)| r)
                .map(|(i, _)| i),
        );
        reached[next] = true;
        queue.push_back(next);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = table[x * n + g];
                if !reached[y] {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    for &c in &gens {
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                let bc = table[b * n + c];
                if table[ab * n + c] != table[a * n + bc] {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// Smallest subgroup containing `gens`, by breadth-first saturation.
pub fn closure(group: &Group, gens: &[usize]) -> Subgroup {
    let n = group.order();
    let mut inside = vec![false; n];
    inside[Group::IDENTITY] = true;
    let mut queue = VecDeque::from([Group::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(x, g);
            if !inside[y] {
                inside[y] = true;
                queue.push_back(y);
            }
        }
    }
    Subgroup {
        elements: (0..n).filter(|&g| inside[g]).collect(),
    }
}

impl Subgroup {
    /// Builds a subgroup from an element list, checking closure and Lagrange.
    pub fn from_elements(group: &Group, mut elements: Vec<usize>) -> Option<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&Group::IDENTITY)
            || !group.order().is_multiple_of(elements.len())
        {
            return None;
        }
        let mut mask = vec![false; group.order()];
        for &g in &elements {
            mask[g] = true;
        }
        let closed = elements
            .iter()
            .all(|&a| elements.iter().all(|&b| mask[group.mul(a, b)]));
        closed.then_some(Subgroup { elements })
    }
}
