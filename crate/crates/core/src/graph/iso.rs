//! Isomorphism test for small mixed graphs: colour refinement on both graphs
//! in lockstep, then individualise-and-refine backtracking.

use super::MixedGraph;
use crate::error::GraphError;

/// Largest order [`isomorphic`] accepts.
pub const ISOMORPHISM_CAP: usize = 200;

type Colors = Vec<u32>;

/// Directed triangles through each vertex.
fn triangle_counts(g: &MixedGraph) -> Vec<usize> {
    let mut counts = vec![0; g.order()];
    for &(u, v) in g.arcs() {
        for &w in g.out_arcs(v) {
            if g.out_arcs(w).binary_search(&u).is_ok() {
                counts[u] += 1;
            }
        }
    }
    counts
}

fn initial_colors(a: &MixedGraph, b: &MixedGraph) -> (Colors, Colors) {
    let invariants = |g: &MixedGraph| -> Vec<(usize, usize, usize, usize)> {
        let tri = triangle_counts(g);
        (0..g.order())
            .map(|v| {
                (
                    g.neighbors(v).len(),
                    g.out_arcs(v).len(),
                    g.in_arcs(v).len(),
                    tri[v],
                )
            })
            .collect()
    };
    relabel_jointly(invariants(a), invariants(b))
}

/// Maps signatures from both graphs onto shared dense colour ids, ordered by
/// signature so the assignment does not depend on vertex numbering.
fn relabel_jointly<T: Ord + Clone>(a: Vec<T>, b: Vec<T>) -> (Colors, Colors) {
    let mut all: Vec<T> = a.iter().chain(&b).cloned().collect();
    all.sort();
    all.dedup();
    let id = |sig: &T| all.binary_search(sig).unwrap() as u32;
    (a.iter().map(id).collect(), b.iter().map(id).collect())
}

fn histogram(colors: &Colors) -> Vec<u32> {
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    sorted
}

type Signature = (u32, Vec<u32>, Vec<u32>, Vec<u32>);

fn signatures(g: &MixedGraph, colors: &Colors) -> Vec<Signature> {
    let sorted = |it: &[usize]| {
        let mut v: Vec<u32> = it.iter().map(|&x| colors[x]).collect();
        v.sort_unstable();
        v
    };
    (0..g.order())
        .map(|v| {
            (
                colors[v],
                sorted(g.neighbors(v)),
                sorted(g.out_arcs(v)),
                sorted(g.in_arcs(v)),
            )
        })
        .collect()
}

/// Refines both colourings to a joint equitable partition. Returns `None`
/// as soon as the colour histograms disagree.
fn refine(
    a: &MixedGraph,
    b: &MixedGraph,
    mut ca: Colors,
    mut cb: Colors,
) -> Option<(Colors, Colors)> {
    let count = |c: &Colors| {
        let mut h = c.clone();
        h.sort_unstable();
        h.dedup();
        h.len()
    };
    loop {
        if histogram(&ca) != histogram(&cb) {
            return None;
        }
        let before = count(&ca);
        let (na, nb) = relabel_jointly(signatures(a, &ca), signatures(b, &cb));
        ca = na;
        cb = nb;
        if count(&ca) == before {
            return (histogram(&ca) == histogram(&cb)).then_some((ca, cb));
        }
    }
}

fn is_isomorphism(a: &MixedGraph, b: &MixedGraph, map: &[usize]) -> bool {
    a.edges().iter().all(|&(u, v)| b.has_edge(map[u], map[v]))
        && a.arcs().iter().all(|&(u, v)| b.has_arc(map[u], map[v]))
}

fn search(a: &MixedGraph, b: &MixedGraph, ca: Colors, cb: Colors) -> bool {
    let Some((ca, cb)) = refine(a, b, ca, cb) else {
        return false;
    };
    let n = a.order();
    let mut sizes = vec![0usize; n.max(1) * 2 + 1];
    for &c in &ca {
        sizes[c as usize] += 1;
    }
    // Smallest non-singleton cell.
    let target = (0..sizes.len())
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| sizes[c]);
    let Some(cell) = target else {
        let mut map = vec![0; n];
        for u in 0..n {
            map[u] = cb.iter().position(|&c| c == ca[u]).unwrap();
        }
        return is_isomorphism(a, b, &map);
    };
    let cell = cell as u32;
    let fresh = *ca.iter().max().unwrap() + 1;
    let u = ca.iter().position(|&c| c == cell).unwrap();
    let mut ca_next = ca.clone();
    ca_next[u] = fresh;
    (0..n).filter(|&w| cb[w] == cell).any(|w| {
        let mut cb_next = cb.clone();
        cb_next[w] = fresh;
        search(a, b, ca_next.clone(), cb_next)
    })
}

/// True iff some bijection maps edges to edges and arcs to arcs.
pub fn isomorphic(a: &MixedGraph, b: &MixedGraph) -> Result<bool, GraphError> {
    isomorphic_with_cap(a, b, ISOMORPHISM_CAP)
}

pub fn isomorphic_with_cap(a: &MixedGraph, b: &MixedGraph, cap: usize) -> Result<bool, GraphError> {
    for g in [a, b] {
        if g.order() > cap {
            return Err(GraphError::SizeCapExceeded { n: g.order(), cap });
        }
    }
    if a.order() != b.order()
        || a.edges().len() != b.edges().len()
        || a.arcs().len() != b.arcs().len()
    {
        return Ok(false);
    }
    let (ca, cb) = initial_colors(a, b);
    Ok(search(a, b, ca, cb))
}
