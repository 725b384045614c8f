use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use super::ingest::group_files;
use super::{construct, ingest_permutations, ingest_table, GroupSpec};
use crate::error::CatalogError;
use crate::group::{groups_isomorphic, Group};

/// Orders at which the built-in constructors cover the full classification.
pub const COMPLETE_ORDERS: [usize; 5] = [6, 12, 18, 20, 30];

/// Name of the optional manifest in a catalog directory. Each data line is
/// `order count`, declaring how many isomorphism classes exist at that order.
pub const COUNTS_FILE: &str = "counts.txt";

fn complete_specs(n: usize) -> Option<Vec<GroupSpec>> {
    use GroupSpec::*;
    let c = Cyclic;
    let x = GroupSpec::direct;
    let specs = match n {
        6 => vec![c(6), Symmetric(3)],
        12 => vec![
            c(12),
            x(c(6), c(2)),
            Dihedral(12),
            Alternating(4),
            Dicyclic(12),
        ],
        18 => vec![
            c(18),
            x(c(3), c(6)),
            Dihedral(18),
            x(c(3), Symmetric(3)),
            GroupSpec::generalized_dihedral(x(c(3), c(3))),
        ],
        20 => vec![
            c(20),
            x(c(10), c(2)),
            Dihedral(20),
            Dicyclic(20),
            SemidirectCyclic { m: 5, n: 4, k: 2 },
        ],
        30 => vec![
            c(30),
            Dihedral(30),
            x(c(3), Dihedral(10)),
            x(c(5), Symmetric(3)),
        ],
        _ => return None,
    };
    Some(specs)
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// The groups available at one order.
#[derive(Debug, Clone)]
pub struct OrderCatalog {
    pub order: usize,
    pub groups: Vec<Group>,
    /// True when `groups` is known to contain every group of this order.
    pub complete: bool,
}

impl OrderCatalog {
    pub fn completeness_label(&self) -> &'static str {
        if self.complete {
            "complete"
        } else {
            "possibly incomplete"
        }
    }
}

/// Built-in groups of order `n`.
///
/// Complete for the orders in [`COMPLETE_ORDERS`] and for primes; elsewhere
/// the cyclic and dihedral groups only, flagged as possibly incomplete.
pub fn catalog_for_order(n: usize) -> OrderCatalog {
    Catalog::builtin()
        .for_order(n)
        .expect("built-in constructors are valid")
}

/// Built-in constructors plus any groups ingested from a directory.
#[derive(Debug, Clone, Default)]
pub struct Catalog {
    ingested: Vec<Group>,
    declared_counts: BTreeMap<usize, usize>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Catalog::default()
    }

    /// Scans `dir` for `*.gtab` and `*.gperm` files and an optional
    /// counts manifest.
    pub fn from_dir(dir: &Path) -> Result<Self, CatalogError> {
        let mut catalog = Catalog::default();
        for path in group_files(dir)? {
            let group = match path.extension().and_then(|e| e.to_str()) {
                Some("gtab") => ingest_table(&path)?,
                _ => ingest_permutations(&path)?,
            };
            catalog.ingested.push(group);
        }
        let manifest = dir.join(COUNTS_FILE);
        if manifest.is_file() {
            let text = fs::read_to_string(&manifest).map_err(|source| CatalogError::Io {
                path: manifest.clone(),
                source,
            })?;
            for (i, line) in text.lines().enumerate() {
                let line = line.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let parse_err = || CatalogError::Parse {
                    path: manifest.clone(),
                    line: i + 1,
                    message: format!("expected `order count`, found {line:?}"),
                };
                let mut fields = line.split_whitespace().map(str::parse::<usize>);
                match (fields.next(), fields.next(), fields.next()) {
                    (Some(Ok(order)), Some(Ok(count)), None) => {
                        catalog.declared_counts.insert(order, count);
                    }
                    _ => return Err(parse_err()),
                }
            }
        }
        Ok(catalog)
    }

    pub fn ingested(&self) -> &[Group] {
        &self.ingested
    }

    pub fn add_group(&mut self, group: Group) {
        self.ingested.push(group);
    }

    pub fn declare_count(&mut self, order: usize, count: usize) {
        self.declared_counts.insert(order, count);
    }

    /// Pairwise non-isomorphic groups of order `n`: built-ins first, then
    /// ingested groups not isomorphic to any earlier entry.
    pub fn for_order(&self, n: usize) -> Result<OrderCatalog, CatalogError> {
        let (specs, mut complete) = match complete_specs(n) {
            Some(specs) => (specs, true),
            None if is_prime(n) => (vec![GroupSpec::Cyclic(n)], true),
            None if n == 0 => (Vec::new(), false),
            None if n.is_multiple_of(2) && n >= 4 => {
                (vec![GroupSpec::Cyclic(n), GroupSpec::Dihedral(n)], false)
            }
            None => (vec![GroupSpec::Cyclic(n)], n == 1),
        };
        let mut groups: Vec<Group> = specs.iter().map(construct).collect::<Result<_, _>>()?;
        for group in self.ingested.iter().filter(|g| g.order() == n) {
            let mut duplicate = false;
            for existing in &groups {
                if groups_isomorphic(existing, group)? {
                    duplicate = true;
                    break;
                }
            }
            if duplicate {
                log::info!(
                    "{}: isomorphic to an earlier group of order {n}; skipped",
                    group.name()
                );
            } else {
                groups.push(group.clone());
            }
        }
        if let Some(&declared) = self.declared_counts.get(&n) {
            complete = complete || groups.len() == declared;
            if groups.len() > declared {
                log::warn!(
                    "order {n}: {} groups found but only {declared} declared",
                    groups.len()
                );
            }
        }
        Ok(OrderCatalog {
            order: n,
            groups,
            complete,
        })
    }
}
