//! Independent check of the diameter-2 mixed Moore properties.
//!
//! The verifier only looks at the graph. Uniqueness of short paths is read
//! off the walk-count matrix `A + A²`, where `A` counts an edge in both
//! directions and an arc in one: in a Moore graph every off-diagonal entry
//! is 1 and every diagonal entry equals the undirected degree `r`, since the
//! only closed 2-walks go out and back along an edge.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use super::MixedGraph;
use crate::feasibility::moore_bound_mixed;

/// Degrees observed at vertex 0 and whether every vertex agrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub r: usize,
    pub z: usize,
    /// Every vertex has undirected degree `r` and out-degree `z`.
    pub uniform: bool,
    /// Every vertex has in-degree equal to its out-degree.
    pub totally_regular: bool,
}

impl DegreeProfile {
    pub fn ok(&self) -> bool {
        self.uniform && self.totally_regular
    }

    /// Both kinds of adjacency present. Pure graphs (`z = 0`) and pure
    /// digraphs (`r = 0`) can pass every check while falling outside the
    /// mixed setting.
    pub fn is_proper_mixed(&self) -> bool {
        self.r >= 1 && self.z >= 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreReport {
    pub order: usize,
    pub degree_profile: DegreeProfile,
    /// Order equals `(z+r)² + z + 1`.
    pub order_ok: bool,
    /// Exactly one walk of length 1 or 2 between distinct vertices.
    pub unique_path_ok: bool,
    /// No undirected 3- or 4-cycles.
    pub girth_ok: bool,
    /// Every arc lies in exactly one directed triangle.
    pub triangle_ok: bool,
    /// `None` when the graph is not strongly connected.
    pub diameter: Option<usize>,
    pub verdict: bool,
}

impl fmt::Display for MooreReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        let p = &self.degree_profile;
        writeln!(f, "degree profile: r={} z={} {}", p.r, p.z, mark(p.ok()))?;
        if !p.uniform {
            writeln!(f, "  degrees differ between vertices")?;
        }
        if !p.totally_regular {
            writeln!(f, "  some in-degree differs from its out-degree")?;
        }
        writeln!(
            f,
            "order: {} vs bound {} {}",
            self.order,
            moore_bound_mixed(p.r as u64, p.z as u64),
            mark(self.order_ok)
        )?;
        writeln!(f, "unique paths: {}", mark(self.unique_path_ok))?;
        writeln!(f, "no undirected 3/4-cycles: {}", mark(self.girth_ok))?;
        writeln!(
            f,
            "arcs in unique directed triangles: {}",
            mark(self.triangle_ok)
        )?;
        match self.diameter {
            Some(d) => writeln!(f, "diameter: {d} {}", mark(d == 2))?,
            None => writeln!(f, "diameter: not strongly connected FAIL")?,
        }
        if !p.is_proper_mixed() {
            writeln!(f, "note: r={} z={} is not a proper mixed graph", p.r, p.z)?;
        }
        write!(
            f,
            "verdict: {}",
            if self.verdict { "MOORE" } else { "NOT MOORE" }
        )
    }
}

/// Runs every Moore check and reports each outcome.
pub fn verify_moore(graph: &MixedGraph) -> MooreReport {
    let n = graph.order();
    let degree_profile = degree_profile(graph);
    let DegreeProfile { r, z, .. } = degree_profile;
    let order_ok = n as u64 == moore_bound_mixed(r as u64, z as u64);
    let unique_path_ok = unique_paths(graph, r);
    let girth_ok = no_short_undirected_cycles(graph);
    let triangle_ok = arcs_in_unique_triangles(graph);
    let diameter = diameter(graph);
    let verdict = degree_profile.ok()
        && order_ok
        && unique_path_ok
        && girth_ok
        && triangle_ok
        && diameter == Some(2);
    MooreReport {
        order: n,
        degree_profile,
        order_ok,
        unique_path_ok,
        girth_ok,
        triangle_ok,
        diameter,
        verdict,
    }
}

fn degree_profile(graph: &MixedGraph) -> DegreeProfile {
    let n = graph.order();
    if n == 0 {
        return DegreeProfile {
            r: 0,
            z: 0,
            uniform: true,
            totally_regular: true,
        };
    }
    let r = graph.neighbors(0).len();
    let z = graph.out_arcs(0).len();
    let uniform = (0..n).all(|v| graph.neighbors(v).len() == r && graph.out_arcs(v).len() == z);
    let totally_regular = (0..n).all(|v| graph.in_arcs(v).len() == graph.out_arcs(v).len());
    DegreeProfile {
        r,
        z,
        uniform,
        totally_regular,
    }
}

/// Row `u` of `A + A²`.
fn walk_count_row(graph: &MixedGraph, u: usize) -> Vec<u32> {
    let mut row = vec![0u32; graph.order()];
    for w in graph.successors(u) {
        row[w] += 1;
        for v in graph.successors(w) {
            row[v] += 1;
        }
    }
    row
}

/// The matrix `A + A²`, row-major.
pub fn walk_counts(graph: &MixedGraph) -> Vec<u32> {
    (0..graph.order())
        .into_par_iter()
        .flat_map_iter(|u| walk_count_row(graph, u))
        .collect()
}

fn unique_paths(graph: &MixedGraph, r: usize) -> bool {
    (0..graph.order()).into_par_iter().all(|u| {
        walk_count_row(graph, u)
            .iter()
            .enumerate()
            .all(|(v, &count)| count as usize == if v == u { r } else { 1 })
    })
}

fn no_short_undirected_cycles(graph: &MixedGraph) -> bool {
    (0..graph.order()).into_par_iter().all(|u| {
        let mut common = vec![0u32; graph.order()];
        for &w in graph.neighbors(u) {
            for &v in graph.neighbors(w) {
                if v != u {
                    common[v] += 1;
                }
            }
        }
        // Two paths u-w-v close a 4-cycle; one path to a neighbour closes a triangle.
        common
            .iter()
            .enumerate()
            .all(|(v, &c)| c <= 1 && (c == 0 || !graph.has_edge(u, v)))
    })
}

fn arcs_in_unique_triangles(graph: &MixedGraph) -> bool {
    graph.arcs().par_iter().all(|&(u, v)| {
        graph
            .out_arcs(v)
            .iter()
            .filter(|&&w| graph.out_arcs(w).binary_search(&u).is_ok())
            .count()
            == 1
    })
}

/// Largest shortest-path distance over ordered pairs, following edges both
/// ways and arcs forwards; `None` when some vertex cannot reach another.
pub fn diameter(graph: &MixedGraph) -> Option<usize> {
    let n = graph.order();
    (0..n)
        .into_par_iter()
        .map(|source| {
            let mut dist = vec![usize::MAX; n];
            dist[source] = 0;
            let mut queue = VecDeque::from([source]);
            let mut reached = 1;
            let mut far = 0;
            while let Some(x) = queue.pop_front() {
                for y in graph.successors(x) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        far = dist[y];
                        reached += 1;
                        queue.push_back(y);
                    }
                }
            }
            (reached == n).then_some(far)
        })
        .reduce(|| Some(0), |a, b| Some(a?.max(b?)))
}
