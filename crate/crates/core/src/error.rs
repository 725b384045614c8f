use std::path::PathBuf;

use thiserror::Error;

/// Failures while building or analysing a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row},{col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not a Latin square: {line} {index} repeats element {value}")]
    NotLatinSquare {
        line: &'static str,
        index: usize,
        value: usize,
    },
    #[error("no two-sided identity element in table")]
    NoIdentity,
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// Failures in the group catalog: constructors and file ingestion.
#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters {
        family: &'static str,
        reason: String,
    },
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: group of order {order} exceeds the cap of {cap}")]
    OrderCapExceeded {
        path: PathBuf,
        order: usize,
        cap: usize,
    },
    #[error("{path}: {source}")]
    Group {
        path: PathBuf,
        #[source]
        source: GroupError,
    },
    #[error(transparent)]
    Construction(#[from] GroupError),
}

/// Arithmetic outside the domain of a closed-form bound.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("{formula} requires {requirement}")]
    OutOfDomain {
        formula: &'static str,
        requirement: &'static str,
    },
    #[error("{formula} overflows u64")]
    Overflow { formula: &'static str },
}

/// Failures building or reading mixed graphs.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("arcs ({0},{1}) and ({1},{0}) both present; a symmetric pair must be an edge")]
    SymmetricArcs(usize, usize),
    #[error("pair {{{0},{1}}} is both an edge and an arc")]
    EdgeArcOverlap(usize, usize),
    #[error("invalid generator set: {0}")]
    InvalidGeneratorSet(String),
    #[error("graph has {n} vertices, above the isomorphism cap of {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
