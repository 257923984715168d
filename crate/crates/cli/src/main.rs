//! `berge`: detection, saturation checks, constructions and linearity scans.
//!
//! Exit status: 0 when the property holds or the artifact was written, 1 when
//! it fails (the report carries the counterexample), 2 on usage or
//! constraint errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use berge_core::construct::{
    auto_construct, construct_then_saturate, construct_with, scan_period, Construction, Method,
};
use berge_core::model::io::{parse_graph, parse_hypergraph, write_graph, write_hypergraph, write_layout};
use berge_core::model::{classify, GraphPattern, UniformHypergraph};
use berge_core::saturation::{
    greedy_complete, min_saturation, verify_oversaturated, verify_saturated, GreedyOrder, VerifyMode, SAMPLER_NAME,
};
use berge_core::{brute_force_contains, par, BergeEngine, BergeError, SizeGuard};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "berge", version, about = "Berge copies and Berge-saturated hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree profile, type, connectivity and structure of a graph pattern.
    Classify {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Search the host for a Berge copy of the pattern.
    Detect {
        #[command(flatten)]
        io: PatternHost,
        /// Also run the exhaustive oracle and report agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Is the host Berge-F-free?
    Free {
        #[command(flatten)]
        io: PatternHost,
    },
    /// Is the host Berge-F-saturated?
    Saturated {
        #[command(flatten)]
        io: PatternHost,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Does every absent r-set complete a Berge copy with the host?
    Oversaturated {
        #[command(flatten)]
        io: PatternHost,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Greedy saturated completion from the empty hypergraph (or a base).
    Greedy {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Order::Colex)]
        order: Order,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Start from this hypergraph instead of the empty one.
        #[arg(long)]
        host: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact minimum saturated hypergraph by exhaustive search.
    Satmin {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Maximum number of search nodes.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a construction; writes `<out>.h`, `<out>.manifest.json` and,
    /// when the construction has one, `<out>.layout.json`.
    Construct {
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Output prefix; defaults to `<pattern stem>-n<n>-r<r>`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Greedily complete the construction to a saturated hypergraph.
        #[arg(long)]
        complete: bool,
    },
    /// CSV of construction sizes over a range of n.
    Scan {
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        r: usize,
        /// `start:end:step`, end inclusive.
        #[arg(long)]
        range: String,
        #[arg(long)]
        complete: bool,
        /// Record wall time; without it the column is 0 so output is stable.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PatternHost {
    #[arg(long)]
    pattern: PathBuf,
    #[arg(long)]
    host: PathBuf,
}

#[derive(Args)]
struct ModeArgs {
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    mode: Mode,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Colex,
    Lex,
    Seeded,
}

impl ModeArgs {
    fn mode(&self) -> VerifyMode {
        match self.mode {
            Mode::Exhaustive => VerifyMode::Exhaustive,
            Mode::Sampled => VerifyMode::Sampled {
                samples: self.samples,
                seed: self.seed,
            },
        }
    }
}

/// Property verdict of a command.
enum Verdict {
    Holds,
    Fails,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_pattern(path: &Path) -> Result<GraphPattern> {
    parse_graph(&read(path)?).with_context(|| path.display().to_string())
}

fn load_host(path: &Path) -> Result<UniformHypergraph> {
    parse_hypergraph(&read(path)?).with_context(|| path.display().to_string())
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(holds: bool) -> Verdict {
    if holds {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn mode_line(mode: VerifyMode) -> String {
    match mode {
        VerifyMode::Exhaustive => "mode: exhaustive".into(),
        VerifyMode::Sampled { samples, seed } => format!("mode: sampled {samples} seed {seed} ({SAMPLER_NAME})"),
    }
}

fn fmt_opt_pair(p: Option<(usize, usize)>) -> String {
    p.map_or("none".into(), |(a, b)| format!("({a},{b})"))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_classify(pattern: &Path) -> Result<Verdict> {
    let f = load_pattern(pattern)?;
    let rep = classify(&f)?;
    let p = &rep.degree_profile;
    println!("vertices: {}", f.vertex_count());
    println!("edges: {}", f.edge_count());
    println!("degrees: [{}]", join(&p.sorted_degrees));
    println!("type: {}", if rep.is_type_one { "I" } else { "II" });
    println!("type_one_edge: {}", fmt_opt_pair(rep.type_one_witness));
    println!("delta2: {}", p.delta2);
    println!("min_degree: {}", p.min_degree);
    println!("kappa: {}", rep.vertex_connectivity);
    match &rep.multipartite_classes {
        Some(k) => println!("multipartite: [{}]", join(k)),
        None => println!("multipartite: none"),
    }
    println!("isolated_edge: {}", fmt_opt_pair(rep.isolated_edge));
    println!("cut_edge: {}", fmt_opt_pair(rep.cut_edge));
    println!("connected: {}", rep.is_connected);
    println!("isolated_vertex: {}", rep.has_isolated_vertex);
    println!("star: {}", rep.is_star);
    Ok(Verdict::Holds)
}

fn cmd_detect(io: &PatternHost, oracle: bool) -> Result<Verdict> {
    let (f, h) = (load_pattern(&io.pattern)?, load_host(&io.host)?);
    let found = BergeEngine::new(f.clone())?.contains(&h)?;
    match &found {
        Some(w) => {
            println!("berge-copy: found");
            print!("{}", w.report(&f));
        }
        None => println!("no Berge-copy"),
    }
    if oracle {
        let guard = SizeGuard::from_env()?;
        let truth = brute_force_contains(&h, &f, &guard)?;
        println!("oracle: {}", if truth == found.is_some() { "agrees" } else { "DISAGREES" });
        if truth != found.is_some() {
            bail!("engine and oracle disagree");
        }
    }
    Ok(verdict(found.is_some()))
}

fn cmd_free(io: &PatternHost) -> Result<Verdict> {
    let (f, h) = (load_pattern(&io.pattern)?, load_host(&io.host)?);
    let found = BergeEngine::new(f.clone())?.contains(&h)?;
    println!("berge-free: {}", found.is_none());
    if let Some(w) = &found {
        print!("{}", w.report(&f));
    }
    Ok(verdict(found.is_none()))
}

fn cmd_saturated(io: &PatternHost, mode: &ModeArgs) -> Result<Verdict> {
    let (f, h) = (load_pattern(&io.pattern)?, load_host(&io.host)?);
    let rep = verify_saturated(&h, &f, mode.mode())?;
    println!("{}", mode_line(mode.mode()));
    println!("free: {}", rep.is_free);
    println!("saturated: {}", rep.is_saturated);
    println!("checked: {}", rep.checked_count);
    println!("sampled: {}", rep.sampled);
    if let Some(w) = &rep.free_violation {
        print!("{}", w.report(&f));
    }
    if let Some(g) = &rep.saturation_violation {
        println!("violation: {g}");
    }
    Ok(verdict(rep.is_saturated))
}

fn cmd_oversaturated(io: &PatternHost, mode: &ModeArgs) -> Result<Verdict> {
    let (f, h) = (load_pattern(&io.pattern)?, load_host(&io.host)?);
    let rep = verify_oversaturated(&h, &f, mode.mode())?;
    println!("{}", mode_line(mode.mode()));
    println!("oversaturated: {}", rep.is_oversaturated);
    println!("checked: {}", rep.checked_count);
    println!("sampled: {}", rep.sampled);
    if let Some(g) = &rep.violation {
        println!("violation: {g}");
    }
    Ok(verdict(rep.is_oversaturated))
}

fn cmd_greedy(
    pattern: &Path,
    n: usize,
    r: usize,
    order: Order,
    seed: u64,
    host: Option<&Path>,
    out: Option<&Path>,
) -> Result<Verdict> {
    let f = load_pattern(pattern)?;
    let base = match host {
        Some(p) => {
            let h = load_host(p)?;
            if (h.vertex_count(), h.uniformity()) != (n, r) {
                bail!(
                    "base is on n = {}, r = {} but --n {n} --r {r} was given",
                    h.vertex_count(),
                    h.uniformity()
                );
            }
            h
        }
        None => UniformHypergraph::empty(n, r)?,
    };
    let order = match order {
        Order::Colex => GreedyOrder::Colex,
        Order::Lex => GreedyOrder::Lex,
        Order::Seeded => GreedyOrder::Seeded(seed),
    };
    let outcome = greedy_complete(&base, &f, order)?;
    emit(out, &write_hypergraph(&outcome.hypergraph))?;
    eprintln!(
        "greedy: {} hyperedges ({} added)",
        outcome.hypergraph.edge_count(),
        outcome.added.len()
    );
    Ok(Verdict::Holds)
}

fn cmd_satmin(pattern: &Path, n: usize, r: usize, budget: Option<u64>, out: Option<&Path>) -> Result<Verdict> {
    let f = load_pattern(pattern)?;
    let guard = SizeGuard::from_env()?;
    match min_saturation(n, r, &f, budget, &guard) {
        Ok(found) => {
            println!("sat: {}", found.value);
            println!("explored: {}", found.explored);
            match out {
                Some(p) => write(p, &write_hypergraph(&found.witness))?,
                None => print!("{}", write_hypergraph(&found.witness)),
            }
            Ok(Verdict::Holds)
        }
        Err(BergeError::BudgetExceeded { explored, lower, upper }) => {
            println!("budget exceeded after {explored} nodes: {lower} <= sat <= {upper}");
            Ok(Verdict::Fails)
        }
        Err(e) => Err(e.into()),
    }
}

fn build(method: &str, n: usize, r: usize, f: &GraphPattern) -> Result<Construction> {
    Ok(if method == "auto" {
        auto_construct(n, r, f)?
    } else {
        construct_with(method.parse::<Method>()?, n, r, f)?
    })
}

fn cmd_construct(
    method: &str,
    pattern: &Path,
    n: usize,
    r: usize,
    out: Option<&Path>,
    complete: bool,
) -> Result<Verdict> {
    let f = load_pattern(pattern)?;
    let c = build(method, n, r, &f)?;
    let prefix = match out {
        Some(p) => p.to_path_buf(),
        None => {
            let stem = pattern.file_stem().map_or("construct".into(), |s| s.to_string_lossy().into_owned());
            PathBuf::from(format!("{stem}-n{n}-r{r}"))
        }
    };
    let with_suffix = |suffix: &str| {
        let mut s = prefix.clone().into_os_string();
        s.push(suffix);
        PathBuf::from(s)
    };
    let base_count = c.hypergraph.edge_count();
    let (final_h, added) = if complete {
        let done = construct_then_saturate(&c.hypergraph, &f)?;
        let added = done.added.len();
        (done.hypergraph, Some(added))
    } else {
        (c.hypergraph.clone(), None)
    };
    let h_path = with_suffix(".h");
    write(&h_path, &write_hypergraph(&final_h))?;
    let layout_path = match &c.layout {
        Some(layout) => {
            let p = with_suffix(".layout.json");
            write(&p, &write_layout(layout))?;
            Some(p)
        }
        None => None,
    };
    let name = |p: &Path| p.file_name().map(|s| s.to_string_lossy().into_owned());
    let manifest = json!({
        "method": c.method.tag(),
        "requested_method": method,
        "parameters": {
            "n": n,
            "r": r,
            "pattern": write_graph(&f),
        },
        "checks": c.checks,
        "counts": {
            "base_hyperedges": base_count,
            "completed_hyperedges": added.map(|_| final_h.edge_count()),
            "added_hyperedges": added,
            "blocks": c.layout.as_ref().map(|l| l.block_count()),
            "block_size": c.layout.as_ref().map(|l| l.block_size()),
        },
        "files": {
            "hypergraph": name(&h_path),
            "layout": layout_path.as_deref().and_then(name),
        },
    });
    write(&with_suffix(".manifest.json"), &(serde_json::to_string_pretty(&manifest)? + "\n"))?;
    println!("method: {}", c.method);
    println!("hyperedges: {}", final_h.edge_count());
    println!("written: {}", h_path.display());
    Ok(Verdict::Holds)
}

fn parse_range(spec: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let nums = parts
        .iter()
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| anyhow!("range `{spec}` is not start:end:step"))?;
    let (a, b, step) = match nums.as_slice() {
        [a, b] => (*a, *b, 1),
        [a, b, s] => (*a, *b, *s),
        _ => bail!("range `{spec}` is not start:end:step"),
    };
    if step == 0 || a > b {
        bail!("range `{spec}` is empty or has step 0");
    }
    Ok((a..=b).step_by(step).collect())
}

fn cmd_scan(
    method: &str,
    pattern: &Path,
    r: usize,
    range: &str,
    complete: bool,
    timing: bool,
    out: Option<&Path>,
) -> Result<Verdict> {
    let f = load_pattern(pattern)?;
    let ns = parse_range(range)?;
    let requested = if method == "auto" { None } else { Some(method.parse::<Method>()?) };
    let rows = par::map(&ns, |&n| {
        let start = Instant::now();
        let built = build(method, n, r, &f);
        let (tag, base, completed) = match built {
            Ok(c) => {
                let completed = if complete {
                    construct_then_saturate(&c.hypergraph, &f)
                        .ok()
                        .map(|d| d.hypergraph.edge_count().to_string())
                } else {
                    None
                };
                (Some(c.method), c.hypergraph.edge_count().to_string(), completed)
            }
            Err(_) => (requested, String::new(), None),
        };
        let period = tag.map_or(Ok(1), |m| scan_period(m, &f, r)).unwrap_or(1);
        let ms = if timing { start.elapsed().as_millis() } else { 0 };
        let label = tag.map_or(method.to_string(), |m| m.tag().to_string());
        format!("{n},{label},{base},{},{},{ms}\n", completed.unwrap_or_default(), n % period)
    });
    let mut csv = String::from("n,method,base_count,completed_count,residue_class,wall_time_ms\n");
    csv.extend(rows);
    emit(out, &csv)?;
    Ok(Verdict::Holds)
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Classify { pattern } => cmd_classify(&pattern),
        Command::Detect { io, oracle } => cmd_detect(&io, oracle),
        Command::Free { io } => cmd_free(&io),
        Command::Saturated { io, mode } => cmd_saturated(&io, &mode),
        Command::Oversaturated { io, mode } => cmd_oversaturated(&io, &mode),
        Command::Greedy {
            pattern,
            n,
            r,
            order,
            seed,
            host,
            out,
        } => cmd_greedy(&pattern, n, r, order, seed, host.as_deref(), out.as_deref()),
        Command::Satmin {
            pattern,
            n,
            r,
            budget,
            out,
        } => cmd_satmin(&pattern, n, r, budget, out.as_deref()),
        Command::Construct {
            method,
            pattern,
            n,
            r,
            out,
            complete,
        } => cmd_construct(&method, &pattern, n, r, out.as_deref(), complete),
        Command::Scan {
            method,
            pattern,
            r,
            range,
            complete,
            timing,
            out,
        } => cmd_scan(&method, &pattern, r, &range, complete, timing, out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Fails) => ExitCode::from(1),
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
