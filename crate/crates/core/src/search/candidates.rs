//! Enumeration of undirected candidate sets and directed extensions.

use std::time::Instant;

use super::filters::{
    ball_size, is_feasible_subset, necessary_conditions, undirected_conditions, Index2Context,
};
use crate::group::{canonical_set, Automorphism, Group};

/// Marker error: the wall-clock budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimedOut;

/// Optional wall-clock deadline, polled every few thousand nodes.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Deadline {
    at: Option<Instant>,
}

impl Deadline {
    pub(crate) fn new(at: Option<Instant>) -> Self {
        Deadline { at }
    }

    pub(crate) fn none() -> Self {
        Deadline { at: None }
    }

    fn check(&self, nodes: &mut u64) -> Result<(), TimedOut> {
        *nodes += 1;
        match self.at {
            Some(at) if (*nodes).is_multiple_of(1024) && Instant::now() >= at => Err(TimedOut),
            _ => Ok(()),
        }
    }
}

/// Canonical Aut-orbit representatives of the inverse-closed `r`-sets that
/// pass the undirected conditions, reach `|{1} ∪ A ∪ AA| = r² + 1`, and leave room for
/// the index-2 split with `z` directed generators still to come.
pub fn undirected_candidates(
    group: &Group,
    r: usize,
    auts: &[Automorphism],
    index2: &Index2Context,
) -> Vec<Vec<usize>> {
    undirected_candidates_until(group, r, auts, index2, Deadline::none()).expect("no deadline")
}

pub(crate) fn undirected_candidates_until(
    group: &Group,
    r: usize,
    auts: &[Automorphism],
    index2: &Index2Context,
    deadline: Deadline,
) -> Result<Vec<Vec<usize>>, TimedOut> {
    // Involutions and inverse pairs of order ≥ 5; orders 3 and 4 can never
    // be undirected generators.
    let pieces: Vec<Vec<usize>> = group
        .elements()
        .filter(|&a| {
            let order = group.element_order(a);
            order == 2 || (order >= 5 && a < group.inv(a))
        })
        .map(|a| {
            if group.element_order(a) == 2 {
                vec![a]
            } else {
                vec![a, group.inv(a)]
            }
        })
        .collect();

    struct Walk<'a> {
        group: &'a Group,
        r: usize,
        auts: &'a [Automorphism],
        index2: &'a Index2Context,
        pieces: &'a [Vec<usize>],
        current: Vec<usize>,
        out: Vec<Vec<usize>>,
        nodes: u64,
        deadline: Deadline,
    }

    impl Walk<'_> {
        fn go(&mut self, start: usize) -> Result<(), TimedOut> {
            self.deadline.check(&mut self.nodes)?;
            if self.current.len() == self.r {
                let mut set = self.current.clone();
                set.sort_unstable();
                if canonical_set(&set, self.auts) == set {
                    self.out.push(set);
                }
                return Ok(());
            }
            for i in start..self.pieces.len() {
                let piece = &self.pieces[i];
                if self.current.len() + piece.len() > self.r {
                    continue;
                }
                let mark = self.current.len();
                self.current.extend_from_slice(piece);
                let ok = undirected_conditions(self.group, &self.current).is_ok()
                    && is_feasible_subset(self.group, &self.current, &[])
                    && self.index2.admits(&self.current);
                if ok {
                    self.go(i + 1)?;
                }
                self.current.truncate(mark);
            }
            Ok(())
        }
    }

    let mut walk = Walk {
        group,
        r,
        auts,
        index2,
        pieces: &pieces,
        current: Vec::new(),
        out: Vec::new(),
        nodes: 0,
        deadline,
    };
    if index2.admits(&[]) {
        walk.go(0)?;
    }
    let mut out = walk.out;
    out.sort();
    Ok(out)
}

/// All order-3 elements, and every inverse-free triple `{a, b, (ab)⁻¹}` of
/// elements of order ≥ 4 with `|B ∪ BB| = 12`.
pub fn directed_components(group: &Group) -> (Vec<usize>, Vec<[usize; 3]>) {
    let singles: Vec<usize> = group
        .elements()
        .filter(|&a| group.element_order(a) == 3)
        .collect();
    let big: Vec<usize> = group
        .elements()
        .filter(|&a| group.element_order(a) >= 4)
        .collect();
    let mut triples = Vec::new();
    for &a in &big {
        for &b in &big {
            let c = group.inv(group.mul(a, b));
            if a == b || c == a || c == b || group.element_order(c) < 4 {
                continue;
            }
            let mut t = [a, b, c];
            t.sort_unstable();
            if t[0] != a {
                // Each set is found from several orderings; keep the one
                // starting at its least element, with either orientation.
                continue;
            }
            let inverse_free = t.iter().all(|&x| !t.contains(&group.inv(x)));
            // {1} ∪ B ∪ BB has 13 elements iff B ∪ BB has 12.
            if inverse_free && ball_size(group, &t) == 13 {
                triples.push(t);
            }
        }
    }
    triples.sort_unstable();
    triples.dedup();
    (singles, triples)
}

/// Everything needed to grow directed sets on one undirected candidate.
pub struct Extension<'a> {
    pub group: &'a Group,
    pub s1: &'a [usize],
    pub singles: &'a [usize],
    pub triples: &'a [[usize; 3]],
    pub z: usize,
    pub index2: &'a Index2Context,
    /// When set, keep only `S2` that is least among its images under these
    /// automorphisms (the stabiliser of `S1`).
    pub stabilizer: Option<&'a [Automorphism]>,
}

impl Extension<'_> {
    /// Every completion `S2` of `S1`, sorted.
    pub fn run(&self) -> Vec<Vec<usize>> {
        self.run_until(Deadline::none()).expect("no deadline")
    }

    pub(crate) fn run_until(&self, deadline: Deadline) -> Result<Vec<Vec<usize>>, TimedOut> {
        let mut state = ExtState {
            in_s1: {
                let mut m = vec![false; self.group.order()];
                for &a in self.s1 {
                    m[a] = true;
                }
                m
            },
            s2: Vec::new(),
            out: Vec::new(),
            nodes: 0,
        };
        // Each way of writing z as 3·triples + singles.
        for triples in 0..=self.z / 3 {
            let singles = self.z - 3 * triples;
            self.pick_triples(&mut state, 0, triples, singles, deadline)?;
        }
        let mut out = state.out;
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn accept_partial(&self, state: &ExtState) -> bool {
        let all: Vec<usize> = self.s1.iter().chain(&state.s2).copied().collect();
        necessary_conditions(self.group, self.s1, &state.s2).is_ok()
            && is_feasible_subset(self.group, self.s1, &state.s2)
            && self.index2.admits(&all)
    }

    fn fits(&self, state: &ExtState, elements: &[usize]) -> bool {
        elements.iter().all(|&x| {
            let inv = self.group.inv(x);
            !state.in_s1[x]
                && !state.s2.contains(&x)
                && !state.s2.contains(&inv)
                && !elements.contains(&inv)
        })
    }

    fn pick_triples(
        &self,
        state: &mut ExtState,
        start: usize,
        left: usize,
        singles: usize,
        deadline: Deadline,
    ) -> Result<(), TimedOut> {
        deadline.check(&mut state.nodes)?;
        if left == 0 {
            return self.pick_singles(state, 0, singles, deadline);
        }
        for i in start..self.triples.len() {
            let t = &self.triples[i];
            if !self.fits(state, t) {
                continue;
            }
            state.s2.extend_from_slice(t);
            if self.accept_partial(state) {
                self.pick_triples(state, i + 1, left - 1, singles, deadline)?;
            }
            state.s2.truncate(state.s2.len() - 3);
        }
        Ok(())
    }

    fn pick_singles(
        &self,
        state: &mut ExtState,
        start: usize,
        left: usize,
        deadline: Deadline,
    ) -> Result<(), TimedOut> {
        deadline.check(&mut state.nodes)?;
        if left == 0 {
            self.complete(state);
            return Ok(());
        }
        for i in start..self.singles.len() {
            let a = self.singles[i];
            if !self.fits(state, &[a]) {
                continue;
            }
            state.s2.push(a);
            if self.accept_partial(state) {
                self.pick_singles(state, i + 1, left - 1, deadline)?;
            }
            state.s2.pop();
        }
        Ok(())
    }

    fn complete(&self, state: &mut ExtState) {
        let mut s2 = state.s2.clone();
        s2.sort_unstable();
        let mut all: Vec<usize> = self.s1.iter().chain(&s2).copied().collect();
        all.sort_unstable();
        let r = self.s1.len();
        if s2.len() != self.z
            || ball_size(self.group, &all) != (r + self.z).pow(2) + self.z + 1
            || !self.index2.admits_complete(&all)
        {
            return;
        }
        if let Some(stab) = self.stabilizer {
            if canonical_set(&s2, stab) != s2 {
                return;
            }
        }
        state.out.push(s2);
    }
}

struct ExtState {
    in_s1: Vec<bool>,
    s2: Vec<usize>,
    out: Vec<Vec<usize>>,
    nodes: u64,
}

/// Automorphisms fixing `set` setwise.
pub fn set_stabilizer(set: &[usize], auts: &[Automorphism]) -> Vec<Automorphism> {
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    auts.iter()
        .filter(|a| a.image_of_set(&sorted) == sorted)
        .cloned()
        .collect()
}
