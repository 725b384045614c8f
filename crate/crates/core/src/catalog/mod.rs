//! Built-in group constructors, complete catalogs at a few small orders, and
//! ingestion of externally supplied groups.

mod ingest;
mod orders;

use std::fmt;
use std::path::PathBuf;

pub use ingest::{ingest_permutations, ingest_table, parse_permutations, parse_table, write_table};
pub use orders::{catalog_for_order, Catalog, OrderCatalog, COMPLETE_ORDERS};

use crate::error::CatalogError;
use crate::group::{build_group, Group};

/// Largest symmetric or alternating degree the constructors accept.
pub const MAX_PERMUTATION_DEGREE: usize = 6;

/// A recipe for a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// Cyclic group `C_m`.
    Cyclic(usize),
    /// Dihedral group of the given (even) order.
    Dihedral(usize),
    /// Dicyclic group of the given order, a multiple of 4.
    Dicyclic(usize),
    /// Symmetric group on `m ≤ 6` points.
    Symmetric(usize),
    /// Alternating group on `m ≤ 6` points.
    Alternating(usize),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// `C_m ⋊ C_n` where the generator of `C_n` acts by `a ↦ a^k`.
    SemidirectCyclic {
        m: usize,
        n: usize,
        k: usize,
    },
    /// `A ⋊ C_2` with the involution inverting the abelian group `A`.
    GeneralizedDihedral(Box<GroupSpec>),
    TableFile(PathBuf),
    PermutationFile(PathBuf),
}

impl GroupSpec {
    pub fn direct(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    pub fn generalized_dihedral(a: GroupSpec) -> Self {
        GroupSpec::GeneralizedDihedral(Box::new(a))
    }

    pub fn family(&self) -> &'static str {
        match self {
            GroupSpec::Cyclic(_) => "cyclic",
            GroupSpec::Dihedral(_) => "dihedral",
            GroupSpec::Dicyclic(_) => "dicyclic",
            GroupSpec::Symmetric(_) => "symmetric",
            GroupSpec::Alternating(_) => "alternating",
            GroupSpec::DirectProduct(..) => "direct_product",
            GroupSpec::SemidirectCyclic { .. } => "semidirect_cyclic",
            GroupSpec::GeneralizedDihedral(_) => "generalized_dihedral",
            GroupSpec::TableFile(_) => "table_file",
            GroupSpec::PermutationFile(_) => "permutation_file",
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(m) => write!(f, "C{m}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Dicyclic(n) => write!(f, "Dic{n}"),
            GroupSpec::Symmetric(m) => write!(f, "S{m}"),
            GroupSpec::Alternating(m) => write!(f, "A{m}"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::SemidirectCyclic { m, n, k } => write!(f, "C{m}:C{n}[{k}]"),
            GroupSpec::GeneralizedDihedral(a) => write!(f, "Dih({a})"),
            GroupSpec::TableFile(p) | GroupSpec::PermutationFile(p) => {
                write!(
                    f,
                    "{}",
                    p.file_stem().map_or_else(
                        || p.display().to_string(),
                        |s| s.to_string_lossy().into_owned()
                    )
                )
            }
        }
    }
}

fn invalid(family: &'static str, reason: impl Into<String>) -> CatalogError {
    CatalogError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

fn from_rule(
    order: usize,
    name: String,
    mul: impl Fn(usize, usize) -> usize,
) -> Result<Group, CatalogError> {
    let rows = (0..order)
        .map(|a| (0..order).map(|b| mul(a, b)).collect())
        .collect();
    Ok(build_group(rows, name)?)
}

/// Builds the multiplication table named by `spec`.
pub fn construct(spec: &GroupSpec) -> Result<Group, CatalogError> {
    let name = spec.to_string();
    match *spec {
        GroupSpec::Cyclic(m) => {
            if m == 0 {
                return Err(invalid("cyclic", "order must be positive"));
            }
            from_rule(m, name, |a, b| (a + b) % m)
        }
        GroupSpec::Dihedral(order) => {
            if order < 2 || order % 2 != 0 {
                return Err(invalid(
                    "dihedral",
                    format!("order {order} must be even and positive"),
                ));
            }
            // r^i s^j ↦ i + m j, with s r s = r^-1.
            let m = order / 2;
            from_rule(order, name, |a, b| {
                let (i, p) = (a % m, a / m);
                let (j, q) = (b % m, b / m);
                let rot = if p == 0 { (i + j) % m } else { (i + m - j) % m };
                rot + m * ((p + q) % 2)
            })
        }
        GroupSpec::Dicyclic(order) => {
            if order < 4 || order % 4 != 0 {
                return Err(invalid(
                    "dicyclic",
                    format!("order {order} must be a positive multiple of 4"),
                ));
            }
            // a^i x^j ↦ i + 2m j, with x^2 = a^m and x a x^-1 = a^-1.
            let m = order / 4;
            let cyc = 2 * m;
            from_rule(order, name, |a, b| {
                let (i, p) = (a % cyc, a / cyc);
                let (j, q) = (b % cyc, b / cyc);
                match (p, q) {
                    (0, q) => (i + j) % cyc + cyc * q,
                    (_, 0) => (i + cyc - j) % cyc + cyc,
                    _ => (i + cyc - j + m) % cyc,
                }
            })
        }
        GroupSpec::Symmetric(m) | GroupSpec::Alternating(m) => {
            let family = spec.family();
            if m == 0 || m > MAX_PERMUTATION_DEGREE {
                return Err(invalid(
                    family,
                    format!("degree {m} must lie in 1..={MAX_PERMUTATION_DEGREE}"),
                ));
            }
            let mut perms = lex_permutations(m);
            if matches!(spec, GroupSpec::Alternating(_)) {
                perms.retain(|p| is_even(p));
            }
            permutation_table(&perms, name, |p, q| p.iter().map(|&x| q[x]).collect())
        }
        GroupSpec::DirectProduct(ref a, ref b) => {
            let ga = construct(a)?;
            let gb = construct(b)?;
            let nb = gb.order();
            from_rule(ga.order() * nb, name, |x, y| {
                ga.mul(x / nb, y / nb) * nb + gb.mul(x % nb, y % nb)
            })
        }
        GroupSpec::SemidirectCyclic { m, n, k } => {
            if m == 0 || n == 0 {
                return Err(invalid("semidirect_cyclic", "m and n must be positive"));
            }
            if gcd(k % m, m) != 1 && m > 1 {
                return Err(invalid(
                    "semidirect_cyclic",
                    format!("{k} is not a unit modulo {m}"),
                ));
            }
            if pow_mod(k, n, m) != 1 % m {
                return Err(invalid(
                    "semidirect_cyclic",
                    format!("action {k} has order not dividing {n} modulo {m}"),
                ));
            }
            // a^i b^j ↦ i + m j, with b a b^-1 = a^k.
            let twist: Vec<usize> = (0..n).map(|j| pow_mod(k, j, m)).collect();
            from_rule(m * n, name, |x, y| {
                let (i, j) = (x % m, x / m);
                let (u, v) = (y % m, y / m);
                (i + twist[j] * u) % m + m * ((j + v) % n)
            })
        }
        GroupSpec::GeneralizedDihedral(ref a) => {
            let base = construct(a)?;
            if !base.is_abelian() {
                return Err(invalid(
                    "generalized_dihedral",
                    format!("{} is not abelian", base.name()),
                ));
            }
            let na = base.order();
            from_rule(2 * na, name, |x, y| {
                let (g, s) = (x % na, x / na);
                let (h, t) = (y % na, y / na);
                let h = if s == 1 { base.inv(h) } else { h };
                base.mul(g, h) + na * ((s + t) % 2)
            })
        }
        GroupSpec::TableFile(ref path) => ingest_table(path),
        GroupSpec::PermutationFile(ref path) => ingest_permutations(path),
    }
}

fn lex_permutations(m: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (0..m).collect();
    let mut out = vec![current.clone()];
    // Standard next-permutation in lexicographic order.
    loop {
        let Some(i) = (0..m.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            return out;
        };
        let j = (i + 1..m).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

fn is_even(perm: &[usize]) -> bool {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    inversions % 2 == 0
}

/// Table of a list of permutations closed under `compose`, with the
/// identity first.
pub(crate) fn permutation_table(
    perms: &[Vec<usize>],
    name: String,
    compose: impl Fn(&[usize], &[usize]) -> Vec<usize>,
) -> Result<Group, CatalogError> {
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let rows = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| index[compose(p, q).as_slice()])
                .collect()
        })
        .collect();
    Ok(build_group(rows, name)?)
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    if modulus == 1 {
        return 0;
    }
    (0..exp).fold(1 % modulus, |acc, _| acc * (base % modulus) % modulus)
}
