//! Plain-text group files.
//!
//! Table files (`.gtab`): the first data line is the order `n`, followed by
//! `n` lines of `n` space-separated 0-based indices. Permutation files
//! (`.gperm`): the first data line is the number of points, then one
//! generator per line in cycle notation. In both, `#` starts a comment.

use std::collections::{HashMap, VecDeque};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use super::permutation_table;
use crate::error::CatalogError;
use crate::group::{build_group, Group, DEFAULT_ORDER_CAP};

fn read(path: &Path) -> Result<String, CatalogError> {
    fs::read_to_string(path).map_err(|source| CatalogError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stem(path: &Path) -> String {
    path.file_stem().map_or_else(
        || path.display().to_string(),
        |s| s.to_string_lossy().into_owned(),
    )
}

/// Non-empty lines with comments removed, paired with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn ingest_table(path: &Path) -> Result<Group, CatalogError> {
    parse_table(&read(path)?, path, DEFAULT_ORDER_CAP)
}

/// Parses table-file text; `path` is used for naming and error messages.
pub fn parse_table(text: &str, path: &Path, cap: usize) -> Result<Group, CatalogError> {
    let err = |line: usize, message: String| CatalogError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = data_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(0, "missing order line".into()))?;
    let n: usize = header.parse().map_err(|_| {
        err(
            line_no,
            format!("expected the group order, found {header:?}"),
        )
    })?;
    if n == 0 {
        return Err(err(line_no, "group order must be positive".into()));
    }
    if n > cap {
        return Err(CatalogError::OrderCapExceeded {
            path: path.to_path_buf(),
            order: n,
            cap,
        });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, line) in lines {
        last_line = line_no;
        if rows.len() == n {
            return Err(err(
                line_no,
                format!("unexpected data after {n} table rows"),
            ));
        }
        let row: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse()
                    .map_err(|_| err(line_no, format!("bad element index {tok:?}")))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(err(
                line_no,
                format!(
                    "table row {} has {} entries, expected {n}",
                    rows.len(),
                    row.len()
                ),
            ));
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(err(
            last_line,
            format!("expected {n} table rows, found {}", rows.len()),
        ));
    }
    build_group(rows, stem(path)).map_err(|source| CatalogError::Group {
        path: path.to_path_buf(),
        source,
    })
}

pub fn ingest_permutations(path: &Path) -> Result<Group, CatalogError> {
    parse_permutations(&read(path)?, path, DEFAULT_ORDER_CAP)
}

/// Parses permutation-file text and closes the generators into a group.
///
/// Points are 0-based. A file whose points run over `1..=p` without using
/// 0 is read as 1-based; the group is the same either way.
pub fn parse_permutations(text: &str, path: &Path, cap: usize) -> Result<Group, CatalogError> {
    let err = |line: usize, message: String| CatalogError::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut lines = data_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| err(0, "missing point-count line".into()))?;
    let points: usize = header.parse().map_err(|_| {
        err(
            line_no,
            format!("expected the number of points, found {header:?}"),
        )
    })?;

    let mut cycle_lists: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for (line_no, line) in lines {
        cycle_lists.push((line_no, parse_cycles(line).map_err(|m| err(line_no, m))?));
    }
    let all_points = cycle_lists
        .iter()
        .flat_map(|(_, c)| c.iter().flatten().copied());
    let one_based = {
        let (mut min, mut max) = (usize::MAX, 0);
        for p in all_points {
            min = min.min(p);
            max = max.max(p);
        }
        min >= 1 && max == points
    };

    let mut generators = Vec::new();
    for (line_no, cycles) in cycle_lists {
        let mut perm: Vec<usize> = (0..points).collect();
        let mut touched = vec![false; points];
        for cycle in cycles {
            let cycle: Vec<usize> = cycle
                .iter()
                .map(|&p| if one_based { p - 1 } else { p })
                .collect();
            for &p in &cycle {
                if p >= points {
                    return Err(err(line_no, format!("point {p} outside 0..{points}")));
                }
                if std::mem::replace(&mut touched[p], true) {
                    return Err(err(line_no, format!("point {p} appears in two cycles")));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                perm[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        generators.push(perm);
    }

    // Breadth-first closure; elements act left to right: (p*q)(x) = q(p(x)).
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
    let identity: Vec<usize> = (0..points).collect();
    let mut elements = vec![identity.clone()];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &generators {
            let next = compose(&elements[i], g);
            if !seen.contains_key(&next) {
                if elements.len() == cap {
                    return Err(CatalogError::OrderCapExceeded {
                        path: path.to_path_buf(),
                        order: cap + 1,
                        cap,
                    });
                }
                seen.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    permutation_table(&elements, stem(path), compose).map_err(|e| match e {
        CatalogError::Construction(source) => CatalogError::Group {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' at {rest:?}"))?;
        let close = body.find(')').ok_or_else(|| "unclosed cycle".to_string())?;
        let cycle: Vec<usize> = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| format!("bad point {t:?}")))
            .collect::<Result<_, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// Writes `group` in table-file format.
pub fn write_table(group: &Group, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "# {}", group.name())?;
    writeln!(out, "{}", group.order())?;
    for a in group.elements() {
        let row: Vec<String> = group.row(a).iter().map(usize::to_string).collect();
        writeln!(out, "{}", row.join(" "))?;
    }
    Ok(())
}

pub(crate) fn group_files(dir: &Path) -> Result<Vec<PathBuf>, CatalogError> {
    let entries = fs::read_dir(dir).map_err(|source| CatalogError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry
            .map_err(|source| CatalogError::Io {
                path: dir.to_path_buf(),
                source,
            })?
            .path();
        if matches!(
            path.extension().and_then(|e| e.to_str()),
            Some("gtab" | "gperm")
        ) {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{construct, GroupSpec};
    use crate::group::groups_isomorphic;

    #[test]
    fn c2_table() {
        let g = parse_table("# C2\n2\n0 1\n1 0\n", Path::new("c2.gtab"), 512).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.name(), "c2");
    }

    #[test]
    fn malformed_row_names_the_row() {
        let err = parse_table("3\n0 1 2\n1 2\n2 0 1\n", Path::new("bad.gtab"), 512).unwrap_err();
        match err {
            CatalogError::Parse { line, message, .. } => {
                assert_eq!(line, 3);
                assert!(message.contains("row 1"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncated_and_oversized_tables() {
        assert!(matches!(
            parse_table("3\n0 1 2\n1 2 0\n", Path::new("t.gtab"), 512),
            Err(CatalogError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_table("600\n", Path::new("t.gtab"), 512),
            Err(CatalogError::OrderCapExceeded { order: 600, .. })
        ));
        assert!(matches!(
            parse_table("2\n0 1\n1 1\n", Path::new("t.gtab"), 512),
            Err(CatalogError::Group { .. })
        ));
    }

    #[test]
    fn permutations_close_to_c10() {
        let g = parse_permutations("7\n(1 2 3 4 5)(6 7)\n", Path::new("c10.gperm"), 512).unwrap();
        assert_eq!(g.order(), 10);
        let c10 = construct(&GroupSpec::Cyclic(10)).unwrap();
        assert!(groups_isomorphic(&g, &c10).unwrap());
    }

    #[test]
    fn zero_based_permutations() {
        let g =
            parse_permutations("# S3\n3\n(0 1 2)\n(0 1)\n", Path::new("s3.gperm"), 512).unwrap();
        let s3 = construct(&GroupSpec::Symmetric(3)).unwrap();
        assert!(groups_isomorphic(&g, &s3).unwrap());
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            parse_permutations("3\n(0 1 5)\n", Path::new("p"), 512),
            Err(CatalogError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_permutations("3\n(0 1\n", Path::new("p"), 512),
            Err(CatalogError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_permutations("6\n(0 1 2 3 4 5)\n(0 1)\n", Path::new("p"), 100),
            Err(CatalogError::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn table_round_trip() {
        let g = construct(&GroupSpec::Dicyclic(12)).unwrap();
        let mut buf = Vec::new();
        write_table(&g, &mut buf).unwrap();
        let back = parse_table(
            std::str::from_utf8(&buf).unwrap(),
            Path::new("Dic12.gtab"),
            512,
        )
        .unwrap();
        assert_eq!(back.table_rows(), g.table_rows());
    }
}
