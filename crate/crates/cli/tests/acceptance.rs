//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p mixed-moore-cli --test acceptance`.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use mixed_moore::catalog::catalog_for_order;
use mixed_moore::feasibility::{enumerate_feasible, index2_split, FeasibleParams};
use mixed_moore::graph::{from_cayley, kautz, verify_moore, walk_counts, MixedGraph};
use mixed_moore::group::automorphism_group;
use mixed_moore::oracle::moore_orbits;
use mixed_moore::search::{search_catalog, GeneratorSet, SearchOptions};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Every (n, r, z) row of the published feasibility and result tables.
const PUBLISHED_ROWS: &[(u64, u64, u64)] = &[
    (6, 1, 1),
    (12, 1, 2),
    (18, 3, 1),
    (20, 1, 3),
    (30, 1, 4),
    (40, 3, 3),
    (42, 1, 5),
    (54, 3, 4),
    (56, 1, 6),
    (72, 1, 7),
    (84, 7, 2),
    (88, 3, 6),
    (90, 1, 8),
    (108, 3, 7),
    (110, 1, 9),
    (132, 1, 10),
    (150, 7, 5),
    (154, 3, 9),
    (156, 1, 11),
    (180, 3, 10),
    (182, 1, 12),
    (204, 7, 7),
    (210, 1, 13),
    (238, 3, 12),
    (240, 1, 14),
    (270, 3, 13),
    (272, 1, 15),
    (294, 13, 4),
    (300, 7, 10),
    (306, 1, 16),
    (340, 3, 15),
    (342, 1, 17),
    (368, 13, 6),
    (374, 7, 12),
    (378, 3, 16),
    (380, 1, 18),
    (420, 1, 19),
    (460, 3, 18),
    (462, 1, 20),
    (486, 21, 1),
];

/// Published graph counts at the orders whose group lists are built in.
const PUBLISHED_COUNTS: &[(u64, usize)] = &[(6, 1), (12, 1), (18, 1), (20, 1), (30, 0)];

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_mmcayley"));
    cmd.env_remove("MMC_GROUP_DIR")
        .env_remove("MMC_JOBS")
        .env_remove("MMC_LOG");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn last_line(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .last()
        .unwrap_or("")
        .to_string()
}

fn order40_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/groups/order40")
}

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn feasibility_table() -> Verdict {
    let start = Instant::now();
    let out = run(&["feasible", "--max-order", "500"]);
    let elapsed = start.elapsed();
    check(out.status.success(), "feasible exited nonzero")?;
    let rows: Vec<(u64, u64, u64)> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<u64> = l
                .split_whitespace()
                .take(3)
                .map(|x| x.parse().unwrap())
                .collect();
            (f[0], f[1], f[2])
        })
        .collect();
    let below: Vec<_> = rows.iter().copied().filter(|r| r.0 < 500).collect();
    check(
        below == PUBLISHED_ROWS,
        format!("rows below 500 differ from the tables: {below:?}"),
    )?;
    // The bound is inclusive, and order 500 = (7+15)² + 15 + 1 meets the
    // condition with c = 5: 4·7 = 5² + 3 and 5 divides (4·15-3)(4·15+5).
    // The published tables stop at 486, so this row is checked on its own.
    let boundary: Vec<_> = rows.iter().copied().filter(|r| r.0 == 500).collect();
    let condition_holds = |r: u64, z: u64| {
        (1..=4 * r)
            .step_by(2)
            .any(|c| c * c + 3 == 4 * r && ((4 * z - 3) * (4 * z + 5)).is_multiple_of(c))
    };
    check(
        boundary == [(500, 7, 15)] && condition_holds(7, 15),
        format!("boundary rows {boundary:?}"),
    )?;
    check(
        elapsed < Duration::from_secs(1),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} published rows exact for n < 500, plus the feasible boundary row 500 7 15 absent from the tables; {elapsed:.2?}",
        below.len()
    ))
}

fn kautz_verification() -> Verdict {
    let start = Instant::now();
    for d in 2..=10 {
        let g = kautz(d).map_err(|e| e.to_string())?;
        check(
            g.order() == d * (d + 1),
            format!("d={d}: order {}", g.order()),
        )?;
        let report = verify_moore(&g);
        check(report.verdict, format!("d={d}: {report}"))?;
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(5),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "Ka(d,2) is Moore of order d(d+1) for d = 2..10; {elapsed:.2?}"
    ))
}

fn complete_order_counts() -> Verdict {
    let start = Instant::now();
    let mut seen = Vec::new();
    for &(n, count) in PUBLISHED_COUNTS {
        let out = run(&["search", "--order", &n.to_string(), "--jobs", "2"]);
        check(
            out.status.success(),
            format!("order {n}: exit {:?}", out.status.code()),
        )?;
        let line = last_line(&out);
        let fields: Vec<&str> = line.split_whitespace().collect();
        let ok = fields.len() == 5
            && fields[0] == n.to_string()
            && fields[3] == count.to_string()
            && fields[4] == "complete";
        check(
            ok,
            format!("order {n}: summary {line:?}, expected count {count}"),
        )?;
        seen.push(line);
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(600),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!("{}; {elapsed:.2?}", seen.join(" | ")))
}

fn order_forty() -> Verdict {
    let dir = order40_dir();
    let with = run(&["search", "--order", "40", "--groups", dir.to_str().unwrap()]);
    check(
        with.status.success(),
        format!("with fixtures: exit {:?}", with.status.code()),
    )?;
    check(
        last_line(&with) == "40 3 3 0 complete",
        format!("with fixtures: {:?}", last_line(&with)),
    )?;
    let without = run(&["search", "--order", "40"]);
    check(
        without.status.code() == Some(4),
        format!("without fixtures: exit {:?}", without.status.code()),
    )?;
    check(
        last_line(&without).ends_with("incomplete"),
        format!("without fixtures: {:?}", last_line(&without)),
    )?;
    Ok(
        "14 ingested groups give 40 3 3 0 complete; built-ins alone exit 4 marked incomplete"
            .into(),
    )
}

fn oracle_equivalence() -> Verdict {
    let mut total = 0;
    for (n, r, z) in [(6usize, 1u64, 1u64), (18, 3, 1)] {
        let params = FeasibleParams::new(r, z).ok_or("infeasible")?;
        let cat = catalog_for_order(n);
        let report =
            search_catalog(&params, &cat, &SearchOptions::default()).map_err(|e| e.to_string())?;
        for (gi, g) in cat.groups.iter().enumerate() {
            let auts = automorphism_group(g).map_err(|e| e.to_string())?;
            let mut pruned: Vec<GeneratorSet> = report
                .results
                .iter()
                .filter(|x| x.group_index == gi)
                .map(|x| x.set.canonical(&auts))
                .collect();
            pruned.sort();
            pruned.dedup();
            let brute = moore_orbits(g, r as usize, z as usize);
            check(
                pruned == brute,
                format!("{}: pruned {pruned:?} vs brute force {brute:?}", g.name()),
            )?;
            total += brute.len();
        }
    }
    Ok(format!(
        "pruned search equals brute force on all 7 groups of orders 6 and 18 ({total} orbits)"
    ))
}

fn literal_walk_counts(g: &MixedGraph) -> Vec<u32> {
    let n = g.order();
    let mut a = vec![vec![0u32; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] += 1;
        a[v][u] += 1;
    }
    for &(u, v) in g.arcs() {
        a[u][v] += 1;
    }
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            out.push(a[i][j] + (0..n).map(|k| a[i][k] * a[k][j]).sum::<u32>());
        }
    }
    out
}

fn property_suite() -> Verdict {
    let all = enumerate_feasible(10_000);
    for p in &all {
        check(p.n % 2 == 0, format!("odd order {p}"))?;
        check(
            index2_split(p.r, p.z).len() == 1,
            format!("split not unique for {p}"),
        )?;
    }

    let mut corpus: Vec<MixedGraph> = (2..=5).map(|d| kautz(d).unwrap()).collect();
    for (n, r, z) in [(6usize, 1u64, 1u64), (12, 1, 2), (18, 3, 1), (20, 1, 3)] {
        let params = FeasibleParams::new(r, z).unwrap();
        let cat = catalog_for_order(n);
        let report =
            search_catalog(&params, &cat, &SearchOptions::default()).map_err(|e| e.to_string())?;
        for res in report.results {
            corpus
                .push(from_cayley(&cat.groups[res.group_index], &res.set.s1, &res.set.s2).unwrap());
        }
    }
    let c6 = MixedGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6)), []).unwrap();
    corpus.push(c6);
    let small: Vec<&MixedGraph> = corpus.iter().filter(|g| g.order() <= 30).collect();
    for g in &small {
        check(
            walk_counts(g) == literal_walk_counts(g),
            "walk counts differ from matrix arithmetic",
        )?;
    }

    let mut rng = StdRng::seed_from_u64(1);
    for i in 0..100 {
        let g = &corpus[i % corpus.len()];
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(&mut rng);
        let v = verify_moore(g).verdict;
        check(
            verify_moore(&g.relabel(&perm)).verdict == v,
            format!("relabel changed the verdict, instance {i}"),
        )?;
        check(
            verify_moore(&g.transpose()).verdict == v,
            format!("transpose changed the verdict, instance {i}"),
        )?;
    }
    Ok(format!(
        "{} feasible pairs up to 10000 even with one split; walk counts exact on {} graphs; 100 relabel/transpose instances",
        all.len(),
        small.len()
    ))
}

fn long_mode_excluded() -> Verdict {
    // Not gated. What is checked: without ingested catalogs these orders
    // are reported incomplete rather than as a false "complete 0".
    for n in ["108", "486"] {
        let out = run(&["search", "--order", n]);
        check(
            out.status.code() == Some(4),
            format!("order {n}: exit {:?}", out.status.code()),
        )?;
        check(
            last_line(&out).ends_with(" incomplete"),
            format!("order {n}: {:?}", last_line(&out)),
        )?;
    }
    Ok("orders 108, >= 150 and 486 need external group catalogs and run only on request; without them they exit 4 marked incomplete".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("feasibility table up to 500", feasibility_table),
        ("Kautz graphs d = 2..10", kautz_verification),
        (
            "graph counts at orders 6, 12, 18, 20, 30",
            complete_order_counts,
        ),
        ("order 40 with and without ingested groups", order_forty),
        ("pruned search equals brute force", oracle_equivalence),
        ("property suite", property_suite),
        ("long-mode orders excluded from gating", long_mode_excluded),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {reason}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
