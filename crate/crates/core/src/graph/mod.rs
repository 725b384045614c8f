//! Mixed graphs: undirected edges plus one-way arcs.

mod io;
mod iso;
mod verify;

use std::collections::BTreeSet;

pub use io::{parse_graph, read_graph, write_graph};
pub use iso::{isomorphic, isomorphic_with_cap, ISOMORPHISM_CAP};
pub use verify::{diameter, verify_moore, walk_counts, DegreeProfile, MooreReport};

use crate::error::GraphError;
use crate::group::Group;

/// A graph with undirected edges and directed arcs on vertices `0..n`.
///
/// Invariants: no loops; never both `(u,v)` and `(v,u)` as arcs (that pair
/// is an edge); no pair is simultaneously an edge and an arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    /// Unordered pairs stored as `(min, max)`.
    edges: BTreeSet<(usize, usize)>,
    arcs: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
    neighbors: Vec<Vec<usize>>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
}

impl MixedGraph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let check = |u: usize, v: usize| -> Result<(), GraphError> {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            Ok(())
        };
        let mut edge_set = BTreeSet::new();
        for (u, v) in edges {
            check(u, v)?;
            edge_set.insert((u.min(v), u.max(v)));
        }
        let mut arc_set = BTreeSet::new();
        for (u, v) in arcs {
            check(u, v)?;
            if arc_set.contains(&(v, u)) {
                return Err(GraphError::SymmetricArcs(v, u));
            }
            if edge_set.contains(&(u.min(v), u.max(v))) {
                return Err(GraphError::EdgeArcOverlap(u, v));
            }
            arc_set.insert((u, v));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edge_set {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        for &(u, v) in &arc_set {
            out_arcs[u].push(v);
            in_arcs[v].push(u);
        }
        for list in neighbors.iter_mut().chain(in_arcs.iter_mut()) {
            list.sort_unstable();
        }
        Ok(MixedGraph {
            n,
            edges: edge_set,
            arcs: arc_set,
            labels: None,
            neighbors,
            out_arcs,
            in_arcs,
        })
    }

    /// Attaches per-vertex labels; `labels.len()` must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn arcs(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Undirected neighbours of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Heads of arcs leaving `v`, sorted.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out_arcs[v]
    }

    /// Tails of arcs entering `v`, sorted.
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.in_arcs[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Vertices reachable from `v` in one step: edges either way, arcs forward.
    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors[v].iter().chain(&self.out_arcs[v]).copied()
    }

    /// Same edges, every arc reversed.
    pub fn transpose(&self) -> MixedGraph {
        let mut g = MixedGraph::new(
            self.n,
            self.edges.iter().copied(),
            self.arcs.iter().map(|&(u, v)| (v, u)),
        )
        .expect("reversing arcs preserves the invariants");
        g.labels = self.labels.clone();
        g
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = MixedGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
            self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
        .expect("relabeling by a permutation preserves the invariants");
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); self.n];
            for (v, label) in labels.iter().enumerate() {
                moved[perm[v]] = label.clone();
            }
            g.labels = Some(moved);
        }
        g
    }
}

/// The Cayley graph with an edge `{g, gs}` for `s ∈ S1` and an arc
/// `g → gs` for `s ∈ S2`.
pub fn from_cayley(group: &Group, s1: &[usize], s2: &[usize]) -> Result<MixedGraph, GraphError> {
    let n = group.order();
    let invalid = |msg: String| Err(GraphError::InvalidGeneratorSet(msg));
    let mut in_s1 = vec![false; n];
    let mut in_s2 = vec![false; n];
    for &s in s1.iter().chain(s2) {
        if s >= n {
            return invalid(format!("element {s} is not in a group of order {n}"));
        }
        if s == Group::IDENTITY {
            return invalid("the identity is not allowed".into());
        }
    }
    for &s in s1 {
        in_s1[s] = true;
    }
    for &s in s2 {
        if in_s1[s] {
            return invalid(format!("element {s} is in both S1 and S2"));
        }
        in_s2[s] = true;
    }
    if let Some(&s) = s1.iter().find(|&&s| !in_s1[group.inv(s)]) {
        return invalid(format!(
            "S1 is not inverse-closed: {s} lacks its inverse {}",
            group.inv(s)
        ));
    }
    if let Some(&s) = s2.iter().find(|&&s| in_s2[group.inv(s)]) {
        return invalid(format!(
            "S2 is not inverse-free: contains {s} and {}",
            group.inv(s)
        ));
    }
    let edges = group
        .elements()
        .flat_map(|g| s1.iter().map(move |&s| (g, group.mul(g, s))));
    let arcs = group
        .elements()
        .flat_map(|g| s2.iter().map(move |&s| (g, group.mul(g, s))));
    MixedGraph::new(n, edges, arcs)
}

/// The Kautz digraph `Ka(d, 2)` as a mixed graph: vertices are words `ab`
/// with `a ≠ b` over `d+1` letters, `ab → bc` for every `c ≠ b`, and the
/// mutual pair `ab ↔ ba` is one undirected edge.
pub fn kautz(d: usize) -> Result<MixedGraph, GraphError> {
    if d < 2 {
        return Err(GraphError::InvalidGeneratorSet(format!(
            "Kautz degree {d} is below 2"
        )));
    }
    let letters = d + 1;
    let words: Vec<(usize, usize)> = (0..letters)
        .flat_map(|a| (0..letters).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let index = |a: usize, b: usize| a * d + if b > a { b - 1 } else { b };
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for &(a, b) in &words {
        for c in (0..letters).filter(|&c| c != b) {
            if c == a {
                edges.push((index(a, b), index(b, a)));
            } else {
                arcs.push((index(a, b), index(b, c)));
            }
        }
    }
    let labels = words
        .iter()
        .map(|&(a, b)| {
            if letters <= 26 {
                format!("{}{}", (b'a' + a as u8) as char, (b'a' + b as u8) as char)
            } else {
                format!("{a}.{b}")
            }
        })
        .collect();
    Ok(MixedGraph::new(words.len(), edges, arcs)?.with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct, GroupSpec};

    #[test]
    fn invariants_are_enforced() {
        assert!(matches!(
            MixedGraph::new(3, [(1, 1)], []),
            Err(GraphError::Loop(1))
        ));
        assert!(matches!(
            MixedGraph::new(3, [], [(0, 1), (1, 0)]),
            Err(GraphError::SymmetricArcs(..))
        ));
        assert!(matches!(
            MixedGraph::new(3, [(0, 1)], [(1, 0)]),
            Err(GraphError::EdgeArcOverlap(..))
        ));
        assert!(matches!(
            MixedGraph::new(3, [(0, 3)], []),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn cayley_six_cycle() {
        let c6 = construct(&GroupSpec::Cyclic(6)).unwrap();
        let g = from_cayley(&c6, &[1, 5], &[]).unwrap();
        assert_eq!(g.edges().len(), 6);
        assert!(g.arcs().is_empty());
        assert!((0..6).all(|v| g.neighbors(v).len() == 2));
    }

    #[test]
    fn cayley_directed_triangle() {
        let c3 = construct(&GroupSpec::Cyclic(3)).unwrap();
        let g = from_cayley(&c3, &[], &[1]).unwrap();
        assert_eq!(
            g.arcs().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 0)]
        );
    }

    #[test]
    fn cayley_s3_transpositions_is_k33() {
        let s3 = construct(&GroupSpec::Symmetric(3)).unwrap();
        let transpositions: Vec<usize> = s3
            .elements()
            .filter(|&g| s3.element_order(g) == 2)
            .collect();
        assert_eq!(transpositions.len(), 3);
        let g = from_cayley(&s3, &transpositions, &[]).unwrap();
        // Brute force: bipartition by parity, every cross pair adjacent.
        let even: Vec<usize> = s3
            .elements()
            .filter(|&g| s3.element_order(g) != 2)
            .collect();
        let odd = transpositions;
        for u in 0..6 {
            for v in 0..6 {
                let cross = even.contains(&u) != even.contains(&v);
                assert_eq!(g.has_edge(u, v), cross && u != v, "{u} {v}");
            }
        }
        assert_eq!(odd.len() * even.len(), g.edges().len());
    }

    #[test]
    fn cayley_rejects_bad_sets() {
        let c6 = construct(&GroupSpec::Cyclic(6)).unwrap();
        for (s1, s2) in [
            (vec![0], vec![]),
            (vec![1], vec![]),
            (vec![], vec![1, 5]),
            (vec![3], vec![3]),
            (vec![7], vec![]),
        ] {
            assert!(
                matches!(
                    from_cayley(&c6, &s1, &s2),
                    Err(GraphError::InvalidGeneratorSet(_))
                ),
                "{s1:?} {s2:?}"
            );
        }
    }

    #[test]
    fn kautz_sizes() {
        let k2 = kautz(2).unwrap();
        assert_eq!((k2.order(), k2.edges().len(), k2.arcs().len()), (6, 3, 6));
        assert_eq!(kautz(3).unwrap().order(), 12);
        let k4 = kautz(4).unwrap();
        assert_eq!(k4.order(), 20);
        assert!((0..20).all(|v| k4.neighbors(v).len() == 1 && k4.out_arcs(v).len() == 3));
        assert!(kautz(1).is_err());
        assert_eq!(k2.labels().unwrap()[0], "ab");
    }

    #[test]
    fn transpose_examples() {
        let c6 = construct(&GroupSpec::Cyclic(6)).unwrap();
        let cycle = from_cayley(&c6, &[1, 5], &[]).unwrap();
        assert_eq!(cycle.transpose(), cycle);
        let c3 = construct(&GroupSpec::Cyclic(3)).unwrap();
        let tri = from_cayley(&c3, &[], &[1]).unwrap();
        let opposite = from_cayley(&c3, &[], &[2]).unwrap();
        assert_eq!(tri.transpose(), opposite);
        assert_eq!(tri.transpose().transpose(), tri);
    }
}
