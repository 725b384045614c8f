//! Pruned search for mixed Moore Cayley graphs over a list of groups.
//!
//! Per group: drop it outright if an abelian index-2 subgroup rules it out;
//! enumerate Aut-orbit representatives of the undirected part; grow each
//! one by order-3 elements and closing triples until `z` directed
//! generators are placed. Every hit is turned into a graph and re-checked
//! by the independent Moore verifier before it is reported, and the
//! verified graphs are then sorted into isomorphism classes.

mod candidates;
mod filters;
mod report;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

pub use candidates::{
    directed_components, set_stabilizer, undirected_candidates, Extension, TimedOut,
};
pub use filters::{
    ball_size, index2_prefilter, is_feasible_subset, necessary_conditions, ConditionViolation,
    Index2Context,
};
pub use report::{write_plain, write_records, write_result_lines};

use crate::catalog::OrderCatalog;
use crate::error::{GraphError, GroupError};
use crate::feasibility::FeasibleParams;
use crate::graph::{from_cayley, isomorphic, verify_moore, MixedGraph, ISOMORPHISM_CAP};
use crate::group::{automorphism_group, Automorphism, Group};
use candidates::{undirected_candidates_until, Deadline};

/// An undirected part `S1` (inverse-closed) and a directed part `S2`
/// (inverse-free), both sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSet {
    pub s1: Vec<usize>,
    pub s2: Vec<usize>,
}

impl GeneratorSet {
    /// Validates the generating-set invariants against `group`.
    pub fn new(group: &Group, mut s1: Vec<usize>, mut s2: Vec<usize>) -> Result<Self, GraphError> {
        s1.sort_unstable();
        s2.sort_unstable();
        let dup = |v: &[usize]| v.windows(2).any(|w| w[0] == w[1]);
        if dup(&s1) || dup(&s2) {
            return Err(GraphError::InvalidGeneratorSet("repeated element".into()));
        }
        // from_cayley performs the remaining checks.
        from_cayley(group, &s1, &s2)?;
        Ok(GeneratorSet { s1, s2 })
    }

    /// `(S1, S2⁻¹)`: the Cayley graph of the result is the transpose.
    pub fn inverted_directed(&self, group: &Group) -> GeneratorSet {
        let mut s2: Vec<usize> = self.s2.iter().map(|&a| group.inv(a)).collect();
        s2.sort_unstable();
        GeneratorSet {
            s1: self.s1.clone(),
            s2,
        }
    }

    /// Image under an automorphism.
    pub fn image(&self, aut: &Automorphism) -> GeneratorSet {
        GeneratorSet {
            s1: aut.image_of_set(&self.s1),
            s2: aut.image_of_set(&self.s2),
        }
    }

    /// Least image under `auts`, comparing `S1` first.
    pub fn canonical(&self, auts: &[Automorphism]) -> GeneratorSet {
        auts.iter()
            .map(|a| self.image(a))
            .min()
            .unwrap_or_else(|| self.clone())
    }

    pub fn all(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.s1.iter().chain(&self.s2).copied().collect();
        all.sort_unstable();
        all
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "S1={{{}}} S2={{{}}}", join(&self.s1), join(&self.s2))
    }
}

/// Knobs for [`search`].
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Worker threads; at least 1.
    pub jobs: usize,
    /// Per-group wall-clock budget; `None` for unlimited.
    pub budget: Option<Duration>,
    /// Also dedupe directed parts by the stabiliser of `S1` in `Aut(G)`,
    /// leaving one result per `Aut(G)`-orbit of generating sets.
    pub dedupe_by_stabilizer: bool,
    /// Largest order for which results are grouped by graph isomorphism.
    pub isomorphism_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            budget: None,
            dedupe_by_stabilizer: true,
            isomorphism_cap: ISOMORPHISM_CAP,
        }
    }
}

/// What happened to one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupStatus {
    Searched,
    /// Has an abelian index-2 subgroup and the degrees rule that out.
    RejectedAbelianIndex2,
    /// The per-group budget expired; results for it may be missing.
    TimedOut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupOutcome {
    pub index: usize,
    pub name: String,
    pub status: GroupStatus,
    pub automorphisms: usize,
    pub undirected_candidates: usize,
    pub hits: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub group_name: String,
    pub group_index: usize,
    pub set: GeneratorSet,
    pub verified: bool,
    /// Isomorphism class of the Cayley graph among all results.
    pub iso_class: usize,
    /// Class of this graph's transpose, when that is a different class.
    pub transpose_of: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub n: u64,
    pub r: u64,
    pub z: u64,
    pub results: Vec<SearchResult>,
    pub groups: Vec<GroupOutcome>,
    /// Whether the group list was known to be complete for this order.
    pub catalog_complete: bool,
    /// True when classes come from graph isomorphism; false above the cap,
    /// where each generating-set orbit is its own class.
    pub classes_exact: bool,
    /// Hits the verifier rejected. Always 0 unless the pruning is unsound.
    pub verifier_rejections: usize,
}

impl SearchReport {
    /// Number of distinct graphs found.
    pub fn graph_count(&self) -> usize {
        self.results
            .iter()
            .map(|r| r.iso_class + 1)
            .max()
            .unwrap_or(0)
    }

    /// True when every group was searched to the end and the list of groups
    /// is complete.
    pub fn complete(&self) -> bool {
        self.catalog_complete
            && self
                .groups
                .iter()
                .all(|g| g.status != GroupStatus::TimedOut)
    }

    /// `n r z count complete|incomplete`.
    pub fn summary_line(&self) -> String {
        let flag = if self.complete() {
            "complete"
        } else {
            "incomplete"
        };
        format!(
            "{} {} {} {} {}",
            self.n,
            self.r,
            self.z,
            self.graph_count(),
            flag
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SearchError {
    #[error("group {name} has order {actual}, expected {expected}")]
    OrderMismatch {
        name: String,
        actual: usize,
        expected: u64,
    },
    #[error("{name}: {source}")]
    Group {
        name: String,
        #[source]
        source: GroupError,
    },
    #[error("could not build worker pool: {0}")]
    Pool(String),
}

/// Full acceptance test for one generating set, independent of how it was
/// found: generating-set invariants, every necessary condition, the exact
/// index-2 split, and `|{1} ∪ S ∪ SS| = n`.
pub fn accepts(group: &Group, params: &FeasibleParams, set: &GeneratorSet) -> bool {
    let (r, z) = (params.r as usize, params.z as usize);
    if set.s1.len() != r || set.s2.len() != z || group.order() as u64 != params.n {
        return false;
    }
    if from_cayley(group, &set.s1, &set.s2).is_err() {
        return false;
    }
    let ctx = Index2Context::new(group, r, z);
    let all = set.all();
    necessary_conditions(group, &set.s1, &set.s2).is_ok()
        && ball_size(group, &all) as u64 == params.n
        && ctx.admits_complete(&all)
}

struct Prepared {
    auts: Vec<Automorphism>,
    index2: Index2Context,
    singles: Vec<usize>,
    triples: Vec<[usize; 3]>,
    candidates: Vec<Vec<usize>>,
}

/// Searches every group in `groups`; see the module docs.
pub fn search(
    params: &FeasibleParams,
    groups: &[Group],
    options: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    for g in groups {
        if g.order() as u64 != params.n {
            return Err(SearchError::OrderMismatch {
                name: g.name().into(),
                actual: g.order(),
                expected: params.n,
            });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs.max(1))
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    let (r, z) = (params.r as usize, params.z as usize);

    let mut outcomes = Vec::new();
    let mut hits: Vec<(usize, GeneratorSet)> = Vec::new();
    for (index, group) in groups.iter().enumerate() {
        let started = Instant::now();
        let deadline = Deadline::new(options.budget.map(|b| started + b));
        let mut outcome = GroupOutcome {
            index,
            name: group.name().to_string(),
            status: GroupStatus::Searched,
            automorphisms: 0,
            undirected_candidates: 0,
            hits: 0,
        };
        let index2 = Index2Context::new(group, r, z);
        if index2.rejects_group() {
            log::info!("{}: abelian index-2 subgroup excludes it", group.name());
            outcome.status = GroupStatus::RejectedAbelianIndex2;
            outcomes.push(outcome);
            continue;
        }
        let auts = automorphism_group(group).map_err(|source| SearchError::Group {
            name: group.name().into(),
            source,
        })?;
        outcome.automorphisms = auts.len();
        let candidates = match undirected_candidates_until(group, r, &auts, &index2, deadline) {
            Ok(c) => c,
            Err(TimedOut) => {
                log::warn!(
                    "{}: budget expired while enumerating undirected sets",
                    group.name()
                );
                outcome.status = GroupStatus::TimedOut;
                outcomes.push(outcome);
                continue;
            }
        };
        outcome.undirected_candidates = candidates.len();
        let (singles, triples) = directed_components(group);
        let prep = Prepared {
            auts,
            index2,
            singles,
            triples,
            candidates,
        };
        log::debug!(
            "{}: |Aut| = {}, {} undirected candidates, {} singles, {} triples",
            group.name(),
            prep.auts.len(),
            prep.candidates.len(),
            prep.singles.len(),
            prep.triples.len()
        );

        let per_candidate: Vec<Result<Vec<Vec<usize>>, TimedOut>> = pool.install(|| {
            prep.candidates
                .par_iter()
                .map(|s1| {
                    let stab = options
                        .dedupe_by_stabilizer
                        .then(|| set_stabilizer(s1, &prep.auts));
                    Extension {
                        group,
                        s1,
                        singles: &prep.singles,
                        triples: &prep.triples,
                        z,
                        index2: &prep.index2,
                        stabilizer: stab.as_deref(),
                    }
                    .run_until(deadline)
                })
                .collect()
        });
        for (s1, found) in prep.candidates.iter().zip(per_candidate) {
            match found {
                Ok(list) => {
                    outcome.hits += list.len();
                    hits.extend(
                        list.into_iter()
                            .map(|s2| (index, GeneratorSet { s1: s1.clone(), s2 })),
                    );
                }
                Err(TimedOut) => outcome.status = GroupStatus::TimedOut,
            }
        }
        if outcome.status == GroupStatus::TimedOut {
            log::warn!("{}: budget expired; marking incomplete", group.name());
        }
        outcomes.push(outcome);
    }
    hits.sort();

    // Mandatory independent verification.
    let verified: Vec<Option<MixedGraph>> = pool.install(|| {
        hits.par_iter()
            .map(|(gi, set)| {
                let graph = from_cayley(&groups[*gi], &set.s1, &set.s2).ok()?;
                verify_moore(&graph).verdict.then_some(graph)
            })
            .collect()
    });
    let mut results = Vec::new();
    let mut graphs = Vec::new();
    let mut verifier_rejections = 0;
    for ((gi, set), graph) in hits.into_iter().zip(verified) {
        match graph {
            Some(graph) => {
                results.push(SearchResult {
                    group_name: groups[gi].name().to_string(),
                    group_index: gi,
                    set,
                    verified: true,
                    iso_class: 0,
                    transpose_of: None,
                });
                graphs.push(graph);
            }
            None => {
                log::error!(
                    "{} {set}: rejected by the Moore verifier",
                    groups[gi].name()
                );
                verifier_rejections += 1;
            }
        }
    }

    let classes_exact = params.n as usize <= options.isomorphism_cap;
    assign_classes(&mut results, &graphs, classes_exact);

    Ok(SearchReport {
        n: params.n,
        r: params.r,
        z: params.z,
        results,
        groups: outcomes,
        catalog_complete: true,
        classes_exact,
        verifier_rejections,
    })
}

/// [`search`] over a catalog, carrying its completeness flag into the report.
pub fn search_catalog(
    params: &FeasibleParams,
    catalog: &OrderCatalog,
    options: &SearchOptions,
) -> Result<SearchReport, SearchError> {
    if !catalog.complete {
        log::warn!(
            "the group list for order {} is possibly incomplete",
            catalog.order
        );
    }
    let mut report = search(params, &catalog.groups, options)?;
    report.catalog_complete = catalog.complete;
    Ok(report)
}

fn same_graph(a: &MixedGraph, b: &MixedGraph) -> bool {
    isomorphic(a, b).unwrap_or(false)
}

fn assign_classes(results: &mut [SearchResult], graphs: &[MixedGraph], exact: bool) {
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..results.len() {
        let class = if exact {
            reps.iter()
                .position(|&j| same_graph(&graphs[i], &graphs[j]))
        } else {
            None
        };
        results[i].iso_class = class.unwrap_or_else(|| {
            reps.push(i);
            reps.len() - 1
        });
    }
    if !exact {
        return;
    }
    let transpose_class: Vec<Option<usize>> = reps
        .iter()
        .enumerate()
        .map(|(class, &rep)| {
            let t = graphs[rep].transpose();
            reps.iter()
                .position(|&j| same_graph(&t, &graphs[j]))
                .filter(|&other| other != class)
        })
        .collect();
    for r in results.iter_mut() {
        r.transpose_of = transpose_class[r.iso_class];
    }
}
