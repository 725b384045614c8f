//! Text renderings of a [`SearchReport`]. Both are deterministic: the same
//! report always produces the same bytes, whatever the thread count was.

use std::io::{self, Write};

use super::{GroupStatus, SearchReport, SearchResult};

fn status_word(status: GroupStatus) -> &'static str {
    match status {
        GroupStatus::Searched => "searched",
        GroupStatus::RejectedAbelianIndex2 => "rejected-abelian-index2",
        GroupStatus::TimedOut => "timed-out",
    }
}

fn class_suffix(result: &SearchResult) -> String {
    match result.transpose_of {
        Some(t) => format!(" class={} transpose={t}", result.iso_class),
        None => format!(" class={}", result.iso_class),
    }
}

/// One line per result: group name, generating set, class.
pub fn write_result_lines(report: &SearchReport, out: &mut impl Write) -> io::Result<()> {
    for r in &report.results {
        writeln!(out, "{} {}{}", r.group_name, r.set, class_suffix(r))?;
    }
    Ok(())
}

/// The result lines, then the summary line `n r z count complete|incomplete`.
pub fn write_plain(report: &SearchReport, out: &mut impl Write) -> io::Result<()> {
    write_result_lines(report, out)?;
    writeln!(out, "{}", report.summary_line())
}

/// `key=value` blocks separated by blank lines: one per group, one per
/// result, and a closing summary block.
pub fn write_records(report: &SearchReport, out: &mut impl Write) -> io::Result<()> {
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    for g in &report.groups {
        writeln!(out, "kind=group")?;
        writeln!(out, "index={}", g.index)?;
        writeln!(out, "name={}", g.name)?;
        writeln!(out, "status={}", status_word(g.status))?;
        writeln!(out, "automorphisms={}", g.automorphisms)?;
        writeln!(out, "undirected_candidates={}", g.undirected_candidates)?;
        writeln!(out, "hits={}", g.hits)?;
        writeln!(out)?;
    }
    for r in &report.results {
        writeln!(out, "kind=result")?;
        writeln!(out, "group={}", r.group_name)?;
        writeln!(out, "group_index={}", r.group_index)?;
        writeln!(out, "s1={}", join(&r.set.s1))?;
        writeln!(out, "s2={}", join(&r.set.s2))?;
        writeln!(out, "verified={}", r.verified)?;
        writeln!(out, "class={}", r.iso_class)?;
        if let Some(t) = r.transpose_of {
            writeln!(out, "transpose={t}")?;
        }
        writeln!(out)?;
    }
    writeln!(out, "kind=summary")?;
    writeln!(out, "n={}", report.n)?;
    writeln!(out, "r={}", report.r)?;
    writeln!(out, "z={}", report.z)?;
    writeln!(out, "graphs={}", report.graph_count())?;
    writeln!(out, "generating_sets={}", report.results.len())?;
    writeln!(out, "classes_exact={}", report.classes_exact)?;
    writeln!(out, "verifier_rejections={}", report.verifier_rejections)?;
    writeln!(out, "complete={}", report.complete())
}
