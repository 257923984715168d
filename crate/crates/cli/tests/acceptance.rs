//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p berge-cli --test acceptance`.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use berge_core::construct::{
    construct_cut_edge, construct_fgood, construct_isolated_edge, construct_multipartite_case1,
    construct_multipartite_case2, construct_oversaturated, construct_then_saturate, cross_block_failures,
    exact_affine_fit, verify_fgood,
};
use berge_core::engine::Constraints;
use berge_core::model::colex::colex_enumerate;
use berge_core::model::io::write_graph;
use berge_core::model::BlockLayout;
use berge_core::saturation::{
    greedy_complete, min_saturation, sample_absent, verify_colex_shape, verify_oversaturated, verify_saturated,
    GreedyOrder, VerifyMode,
};
use berge_core::{
    brute_force_contains, contains_berge, BergeEngine, GraphPattern, HostIndex, Hyperedge, SizeGuard,
    UniformHypergraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    check(took < limit, format!("{what} took {took:?}, limit {limit:?}"))
}

fn meets_two_blocks(h: &Hyperedge, block_of: &[Option<usize>]) -> bool {
    let blocks: BTreeSet<usize> = h.vertices().iter().filter_map(|&x| block_of[x]).collect();
    blocks.len() >= 2
}

fn k222() -> GraphPattern {
    GraphPattern::complete_multipartite(&[2, 2, 2])
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let patterns = [
        ("K2", GraphPattern::complete(2)),
        ("P3", GraphPattern::path(3)),
        ("P4", GraphPattern::path(4)),
        ("K3", GraphPattern::complete(3)),
        ("C4", GraphPattern::cycle(4)),
        ("K4", GraphPattern::complete(4)),
        ("K13", GraphPattern::star(3)),
    ];
    let guard = SizeGuard::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut yes, mut total) = (0, 0);
    for i in 0..700 {
        let (name, f) = &patterns[i % patterns.len()];
        let r = rng.gen_range(2..=4);
        let n = rng.gen_range(f.vertex_count().max(r)..=8);
        let mut all: Vec<Vec<usize>> = colex_enumerate(n, r).map_err(e2s)?.collect();
        all.shuffle(&mut rng);
        let m = rng.gen_range(0..=all.len().min(10));
        all.truncate(m);
        let h = UniformHypergraph::new(n, r, all).map_err(e2s)?;
        let engine = contains_berge(&h, f).map_err(e2s)?;
        let truth = brute_force_contains(&h, f, &guard).map_err(e2s)?;
        check(
            engine.is_some() == truth,
            format!("{name} n={n} r={r}: engine {} oracle {truth}", engine.is_some()),
        )?;
        if let Some(w) = &engine {
            w.validate(f, |e| h.contains(e)).map_err(|e| format!("{name}: invalid witness: {e}"))?;
        }
        yes += usize::from(truth);
        total += 1;
    }
    within(start, Duration::from_secs(120), "oracle comparison")?;
    Ok(format!("{total} instances, {yes} containing, 0 disagreements, {:?}", start.elapsed()))
}

fn saturation_anchors() -> Outcome {
    let guard = SizeGuard::default();
    let k3 = GraphPattern::complete(3);
    let k4 = GraphPattern::complete(4);
    for (n, want) in [(4, 3), (5, 4)] {
        let got = min_saturation(n, 2, &k3, None, &guard).map_err(e2s)?;
        check(got.value == want, format!("sat_2({n}, K3) = {}, expected {want}", got.value))?;
        let rep = verify_saturated(&got.witness, &k3, VerifyMode::Exhaustive).map_err(e2s)?;
        check(rep.is_free && rep.is_saturated, format!("sat_2({n}, K3) witness not saturated"))?;
    }
    let greedy = |n: usize, f: &GraphPattern| {
        greedy_complete(&UniformHypergraph::empty(n, 2).expect("n >= 2"), f, GreedyOrder::Colex).map(|o| o.hypergraph)
    };
    for n in 4..=8 {
        let g = greedy(n, &k3).map_err(e2s)?;
        check(g.edge_count() == n - 1, format!("K3 greedy n={n}: {} edges", g.edge_count()))?;
        check(verify_colex_shape(&g, &k3).map_err(e2s)?, format!("K3 shape n={n}"))?;
    }
    for n in 10..=16 {
        let g = greedy(n, &k4).map_err(e2s)?;
        check(g.edge_count() == 2 * n - 3, format!("K4 greedy n={n}: {} edges", g.edge_count()))?;
        check(verify_colex_shape(&g, &k4).map_err(e2s)?, format!("K4 shape n={n}"))?;
    }
    Ok("sat_2(4,K3)=3, sat_2(5,K3)=4, K3: n-1 for n=4..8, K4: 2n-3 for n=10..16, shapes match".into())
}

fn multipartite_case1() -> Outcome {
    let f = k222();
    let mut notes = Vec::new();
    for n in [11, 13] {
        let start = Instant::now();
        let c = construct_multipartite_case1(n, 3, &[2, 2, 2]).map_err(e2s)?;
        let layout = c.layout.expect("case I has a layout");
        check(
            contains_berge(&c.hypergraph, &f).map_err(e2s)?.is_none(),
            format!("n={n}: base contains K222"),
        )?;
        let done = construct_then_saturate(&c.hypergraph, &f).map_err(e2s)?;
        let rep = verify_saturated(&done.hypergraph, &f, VerifyMode::Exhaustive).map_err(e2s)?;
        check(rep.is_free && rep.is_saturated && !rep.sampled, format!("n={n}: completion not saturated"))?;
        let block_of = layout.block_of();
        let stray = done.added.iter().find(|h| meets_two_blocks(h, &block_of));
        check(stray.is_none(), format!("n={n}: added {} meets two blocks", stray.map(|h| h.to_string()).unwrap_or_default()))?;
        within(start, Duration::from_secs(600), &format!("n={n}"))?;
        notes.push(format!(
            "n={n}: base {} + {} added, {} absent sets checked, {:?}",
            c.hypergraph.edge_count(),
            done.added.len(),
            rep.checked_count,
            start.elapsed()
        ));
    }
    Ok(notes.join("; "))
}

fn multipartite_case2() -> Outcome {
    let f = k222();
    let c = construct_multipartite_case2(23, 4, &[2, 2, 2]).map_err(e2s)?;
    let layout = c.layout.expect("case II has a layout");
    let big_n = layout.core.len();
    check(big_n == 3, format!("|C| = {big_n}"))?;
    check(contains_berge(&c.hypergraph, &f).map_err(e2s)?.is_none(), "base contains K222")?;
    let heavy: Vec<usize> = (0..23).filter(|&x| c.hypergraph.degree(x) > big_n).collect();
    check(heavy == layout.core, format!("vertices of degree >= N+1: {heavy:?}"))?;

    // Berge star K_{1,N} with core C ∪ {u} at every block vertex u.
    let star = BergeEngine::new(GraphPattern::star(big_n)).map_err(e2s)?;
    let index = HostIndex::new(&c.hypergraph);
    for &u in layout.blocks.iter().flatten() {
        let mut fixed = vec![Some(u)];
        fixed.extend(layout.core.iter().map(|&x| Some(x)));
        let w = star.find(&index, &Constraints { fixed, allowed: None }, false);
        check(w.is_some(), format!("no Berge star at block vertex {u}"))?;
    }

    let done = construct_then_saturate(&c.hypergraph, &f).map_err(e2s)?;
    let block_of = layout.block_of();
    let samples = sample_absent(&done.hypergraph, 200, 4, |h| meets_two_blocks(h, &block_of)).map_err(e2s)?;
    check(samples.len() == 200, format!("only {} cross-block samples", samples.len()))?;
    let engine = BergeEngine::new(f.clone()).map_err(e2s)?;
    let full = HostIndex::new(&done.hypergraph);
    let failures = samples
        .iter()
        .filter(|h| engine.creates_indexed(&full, h, true).is_none())
        .count();
    check(failures == 0, format!("{failures} of 200 cross-block additions create no K222"))?;
    Ok(format!(
        "30 base hyperedges, N=3 heavy vertices, Berge stars at all {} block vertices, completion +{}, 200/200 cross-block additions create K222",
        layout.blocks.iter().flatten().count(),
        done.added.len()
    ))
}

fn fgood_pipeline() -> Outcome {
    let start = Instant::now();
    let f = GraphPattern::cycle(7);
    let (c, ctx) = construct_fgood(95, 6, &f).map_err(e2s)?;
    let layout = c.layout.clone().expect("fgood has a layout");
    let cert = verify_fgood(&c.hypergraph, &layout, &f, &ctx, VerifyMode::Exhaustive).map_err(e2s)?;
    check(
        cert.all_ok(),
        format!(
            "items {} {} {} {}",
            cert.item1_ok, cert.item2_ok, cert.item3_ok, cert.item4_ok
        ),
    )?;
    check(!cert.sampled && cert.pairs_checked >= 50, format!("{} pairs checked", cert.pairs_checked))?;
    check(contains_berge(&c.hypergraph, &f).map_err(e2s)?.is_none(), "construction contains C7")?;
    let block_of = layout.block_of();
    let samples = sample_absent(&c.hypergraph, 200, 5, |h| meets_two_blocks(h, &block_of)).map_err(e2s)?;
    check(samples.len() == 200, "fewer than 200 samples")?;
    let failures = cross_block_failures(&c.hypergraph, &layout, &f, &samples).map_err(e2s)?;
    if let Some(h) = failures.first() {
        return Err(format!("{} additions create no C7, e.g. {h}", failures.len()));
    }
    within(start, Duration::from_secs(600), "F-good pipeline")?;
    Ok(format!(
        "items 1-4 hold over all {} block pairs, C7-free, 200/200 cross-block additions create C7, {:?}",
        cert.pairs_checked,
        start.elapsed()
    ))
}

fn oversaturated() -> Outcome {
    let k3 = GraphPattern::complete(3);
    let mut notes = Vec::new();
    for n in [7, 8] {
        let c = construct_oversaturated(n, 3, &k3).map_err(e2s)?;
        let rep = verify_oversaturated(&c.hypergraph, &k3, VerifyMode::Exhaustive).map_err(e2s)?;
        check(rep.is_oversaturated && !rep.sampled, format!("n={n}: violation {:?}", rep.violation))?;
        notes.push(format!("n={n}: {} hyperedges, {} absent sets", c.hypergraph.edge_count(), rep.checked_count));
    }
    Ok(notes.join("; "))
}

fn isolated_and_cut_edge() -> Outcome {
    let k2 = GraphPattern::complete(2);
    let cases = [
        ("2K2", k2.disjoint_union(&k2), 3, 8),
        ("K3+K2", GraphPattern::complete(3).disjoint_union(&k2), 5, 9),
    ];
    let mut notes = Vec::new();
    for (name, f, r, n) in cases {
        let c = construct_isolated_edge(n, r, &f).map_err(e2s)?;
        let rep = verify_saturated(&c.hypergraph, &f, VerifyMode::Exhaustive).map_err(e2s)?;
        check(rep.is_free && rep.is_saturated, format!("{name}: not saturated ({rep:?})"))?;
        notes.push(format!("{name} r={r} n={n}: {} hyperedges saturated", c.hypergraph.edge_count()));
    }
    let p4 = GraphPattern::path(4);
    let c = construct_cut_edge(9, 3, &p4).map_err(e2s)?;
    let layout: BlockLayout = c.layout.expect("cut-edge has a layout");
    check(contains_berge(&c.hypergraph, &p4).map_err(e2s)?.is_none(), "cut-edge base contains P4")?;
    for (i, block) in layout.blocks.iter().enumerate() {
        let inside = c.hypergraph.edges().iter().filter(|h| block.contains(&h.vertices()[0])).count();
        check(inside == 2, format!("block {i} has {inside} hyperedges"))?;
    }
    let all: Vec<Hyperedge> = colex_enumerate(9, 3).map_err(e2s)?.map(Hyperedge::new).collect();
    let block_of = layout.block_of();
    let cross = all.iter().filter(|h| !c.hypergraph.contains(h) && meets_two_blocks(h, &block_of)).count();
    let failures = cross_block_failures(&c.hypergraph, &layout, &p4, &all).map_err(e2s)?;
    check(failures.is_empty(), format!("{} cross-block triples create no P4", failures.len()))?;
    notes.push(format!("P4 r=3 n=9: 2 per block, all {cross} cross-block triples create P4"));
    Ok(notes.join("; "))
}

fn berge() -> Command {
    Command::new(env!("CARGO_BIN_EXE_berge"))
}

fn write_pattern(dir: &Path, name: &str, f: &GraphPattern) -> String {
    let p = dir.join(name);
    fs::write(&p, write_graph(f)).expect("write pattern");
    p.to_string_lossy().into_owned()
}

/// Runs `scan` and returns `(n, method, base, completed)` rows.
fn scan(args: &[&str]) -> Result<Vec<(u64, String, Option<u64>, Option<u64>)>, String> {
    let out = berge().arg("scan").args(args).output().map_err(e2s)?;
    check(out.status.success(), format!("scan {args:?} exited {:?}", out.status.code()))?;
    let text = String::from_utf8(out.stdout).map_err(e2s)?;
    Ok(text
        .lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap_or(0), f[1].to_string(), f[2].parse().ok(), f[3].parse().ok())
        })
        .collect())
}

fn linearity() -> Outcome {
    let dir = tempfile::tempdir().map_err(e2s)?;
    let d = dir.path();
    let k2 = GraphPattern::complete(2);
    let k222 = write_pattern(d, "k222.g", &k222());
    let c7 = write_pattern(d, "c7.g", &GraphPattern::cycle(7));
    let p4 = write_pattern(d, "p4.g", &GraphPattern::path(4));
    let k3 = write_pattern(d, "k3.g", &GraphPattern::complete(3));
    let k4 = write_pattern(d, "k4.g", &GraphPattern::complete(4));
    let c5 = write_pattern(d, "c5.g", &GraphPattern::cycle(5));
    let two_k2 = write_pattern(d, "2k2.g", &k2.disjoint_union(&k2));
    let k3k2 = write_pattern(d, "k3k2.g", &GraphPattern::complete(3).disjoint_union(&k2));
    // (label, pattern, r, range, which column)
    let scans: [(&str, &str, &str, &str, &str, bool); 9] = [
        ("multipartite-case1", "multipartite-case1", &k222, "3", "11:41:2", false),
        ("multipartite-case2", "multipartite-case2", &k222, "4", "23:53:2", false),
        ("fgood", "fgood", &c7, "6", "95:155:3", false),
        ("cut-edge", "cut-edge", &p4, "3", "9:33:4", false),
        ("isolated-edge r<v", "isolated-edge", &two_k2, "3", "8:14:1", false),
        ("isolated-edge r>=v", "isolated-edge", &k3k2, "5", "9:14:1", false),
        ("oversaturated", "oversaturated", &k3, "3", "7:12:1", false),
        ("greedy-colex K4", "greedy-colex", &k4, "2", "10:30:1", true),
        ("greedy-colex C5", "greedy-colex", &c5, "2", "10:31:3", true),
    ];
    let mut notes = Vec::new();
    for (label, method, pattern, r, range, completed) in scans {
        let rows = scan(&["--method", method, "--pattern", pattern, "--r", r, "--range", range])?;
        let points: Vec<(u64, u64)> = rows
            .iter()
            .map(|(n, m, base, _)| {
                check(m == method, format!("{label}: n={n} built by {m}"))?;
                base.map(|b| (*n, b)).ok_or_else(|| format!("{label}: n={n} failed"))
            })
            .collect::<Result<_, _>>()?;
        check(points.len() >= 4, format!("{label}: only {} points", points.len()))?;
        let fit = exact_affine_fit(&points).map_err(e2s)?;
        check(fit.is_exact(), format!("{label}: residuals {:?}", fit.residuals))?;
        if completed && label.ends_with("K4") {
            check(points.iter().all(|&(n, b)| b == 2 * n - 3), format!("{label}: not 2n-3"))?;
        }
        notes.push(format!("{label} slope {}/{} over {} points", fit.slope.0, fit.slope.1, points.len()));
    }
    Ok(notes.join("; "))
}

fn determinism() -> Outcome {
    let runs: Vec<tempfile::TempDir> = (0..2).map(|_| tempfile::tempdir()).collect::<Result<_, _>>().map_err(e2s)?;
    let mut files = Vec::new();
    for dir in &runs {
        let d = dir.path();
        let c7 = write_pattern(d, "c7.g", &GraphPattern::cycle(7));
        let k3 = write_pattern(d, "k3.g", &GraphPattern::complete(3));
        let k222 = write_pattern(d, "k222.g", &k222());
        let host = d.join("star.h");
        fs::write(&host, "hypergraph 6 2\n0 1\n0 2\n0 3\n0 4\n0 5\n").map_err(e2s)?;
        let host = host.to_string_lossy().into_owned();
        let p = |name: &str| d.join(name).to_string_lossy().into_owned();
        let commands: Vec<Vec<String>> = vec![
            vec!["construct".into(), "--pattern".into(), c7.clone(), "--n".into(), "95".into(), "--r".into(), "6".into(), "--out".into(), p("c7")],
            vec!["construct".into(), "--method".into(), "multipartite-case1".into(), "--pattern".into(), k222.clone(), "--n".into(), "11".into(), "--r".into(), "3".into(), "--complete".into(), "--out".into(), p("k222")],
            vec!["scan".into(), "--method".into(), "fgood".into(), "--pattern".into(), c7.clone(), "--r".into(), "6".into(), "--range".into(), "95:125:3".into(), "--out".into(), p("scan.csv")],
            vec!["greedy".into(), "--pattern".into(), k3.clone(), "--n".into(), "7".into(), "--r".into(), "3".into(), "--order".into(), "seeded".into(), "--seed".into(), "9".into(), "--out".into(), p("greedy.h")],
            vec!["satmin".into(), "--pattern".into(), k3.clone(), "--n".into(), "5".into(), "--r".into(), "2".into(), "--out".into(), p("satmin.h")],
        ];
        for args in &commands {
            let out = berge().args(args).output().map_err(e2s)?;
            check(out.status.success(), format!("{args:?} exited {:?}", out.status.code()))?;
        }
        let out = berge()
            .args(["saturated", "--pattern", &k3, "--host", &host, "--mode", "sampled", "--samples", "7", "--seed", "3"])
            .output()
            .map_err(e2s)?;
        fs::write(d.join("saturated.txt"), out.stdout).map_err(e2s)?;
        let mut names: Vec<String> = fs::read_dir(d)
            .map_err(e2s)?
            .map(|e| e.map(|e| e.file_name().to_string_lossy().into_owned()))
            .collect::<Result<_, _>>()
            .map_err(e2s)?;
        names.sort();
        files.push(names);
    }
    check(files[0] == files[1], "different file sets")?;
    for name in &files[0] {
        let a = fs::read(runs[0].path().join(name)).map_err(e2s)?;
        let b = fs::read(runs[1].path().join(name)).map_err(e2s)?;
        // manifests embed no paths, hypergraphs and CSV carry no timing
        check(a == b, format!("{name} differs between runs"))?;
    }
    Ok(format!("{} output files byte-identical across two runs", files[0].len()))
}

fn main() {
    // libtest passes flags such as --nocapture or a filter; only a filter
    // that excludes "acceptance" skips the suite.
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    if !filter.is_empty() && !filter.iter().any(|f| "acceptance".contains(f.as_str())) {
        return;
    }
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 oracle equivalence", oracle_equivalence),
        ("2 exact saturation anchors", saturation_anchors),
        ("3 multipartite case I", multipartite_case1),
        ("4 multipartite case II", multipartite_case2),
        ("5 F-good pipeline", fgood_pipeline),
        ("6 oversaturated construction", oversaturated),
        ("7 isolated-edge and cut-edge", isolated_and_cut_edge),
        ("8 linearity scans", linearity),
        ("9 determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        match run() {
            Ok(detail) => println!("PASS criterion {name} ({:.1?}): {detail}", start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.1?}): {why}", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
