//! Search engine for mixed Moore Cayley graphs of diameter 2.
//!
//! A mixed graph has undirected edges and directed arcs. With undirected
//! degree `r` and out-degree `z`, a diameter-2 mixed graph has at most
//! `(z+r)² + z + 1` vertices; graphs reaching that count are mixed Moore
//! graphs. This crate decides which `(r, z)` can occur at all, builds small
//! groups, and searches their Cayley graphs for Moore examples.
//!
//! - [`group`]: multiplication tables, automorphisms, index-2 subgroups.
//! - [`catalog`]: named group families and file ingestion.
//! - [`feasibility`]: the numeric conditions on `(r, z)`.
//! - [`graph`]: mixed graphs, the Moore verifier, isomorphism.
//! - [`search`]: the pruned generating-set search.
//! - [`oracle`]: unpruned reference enumeration for cross-checks.

pub mod catalog;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod group;
pub mod search;

pub mod oracle;
