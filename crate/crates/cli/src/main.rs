use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lllcolor_core::bounds::{self, BoundQuery, BoundResult, BoundVariant};
use lllcolor_core::dimacs::{parse_dimacs, write_dimacs};
use lllcolor_core::events::{self, EventFamily};
use lllcolor_core::generate;
use lllcolor_core::json::round_sig;
use lllcolor_core::lll::{ConditionReport, DependencyGraph, Mode};
use lllcolor_core::solver::{self, SolveReport, DEFAULT_MAX_RESAMPLES};
use lllcolor_core::verify::{verify, Verdict};
use lllcolor_core::{Coloring, Graph, Variant};
use rayon::prelude::*;

/// Local-lemma bounds, certificates and resampling solvers for acyclic,
/// star and frugal colorings.
#[derive(Parser, Debug)]
#[command(name = "lllcolor", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph and write it in DIMACS format
    Gen(GenArgs),
    /// Tabulate color-count bounds
    Bounds(BoundsArgs),
    /// Check the local-lemma condition on a dependency graph or event family
    LllCheck(LllCheckArgs),
    /// Find a coloring by resampling
    Color(ColorArgs),
    /// Verify a coloring against a graph
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Complete,
    Cycle,
    Path,
    Star,
    CompleteBipartite,
    Petersen,
    Hypercube,
    Prism,
    RandomRegular,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Graph family
    #[arg(long, value_enum)]
    kind: Kind,
    /// Vertex count (cycle length for cycles and prisms, leaves for stars,
    /// dimension for hypercubes)
    #[arg(long, short)]
    n: Option<usize>,
    /// Degree for random regular graphs
    #[arg(long, short)]
    d: Option<usize>,
    /// Side sizes for complete bipartite graphs
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    sides: Option<Vec<usize>>,
    /// Replace every edge by a path with K + 1 edges
    #[arg(long, value_name = "K", default_value_t = 0)]
    subdivide: usize,
    /// Seed for random families
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (standard output when absent)
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Variants to tabulate (all when absent)
    #[arg(long, value_delimiter = ',')]
    variant: Vec<String>,
    /// Maximum degree
    #[arg(long, default_value_t = 3)]
    delta: u64,
    /// Girth for the girth-restricted variant
    #[arg(long, default_value_t = 5)]
    girth: u64,
    /// Same-color multiplicity allowed per vertex in the girth variant
    #[arg(long, default_value_t = 2)]
    eta: u32,
    /// Frugality parameter
    #[arg(long, default_value_t = 2)]
    beta: u32,
    /// Bound the degree ratio Δ/(Δ − 1) by 3/2 in the girth variant
    #[arg(long)]
    cap_ratio: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct LllCheckArgs {
    /// Dependency graph JSON (`-` for standard input)
    #[arg(long, conflicts_with = "graph")]
    input: Option<PathBuf>,
    /// DIMACS graph to build an event family on
    #[arg(long, requires_all = ["variant", "colors"])]
    graph: Option<PathBuf>,
    /// Event family: acyclic-edge, eta-stage:ETA, delta-plus-2,
    /// acyclic-vertex, star or frugal:BETA
    #[arg(long)]
    variant: Option<String>,
    /// Palette size N of the event family
    #[arg(long)]
    colors: Option<usize>,
    /// Longest cycle enumerated for edge families
    #[arg(long)]
    max_cycle_len: Option<usize>,
    /// Weight parameter of the family ansatz (searched when absent)
    #[arg(long)]
    alpha: Option<f64>,
    /// Write the family's dependency graph JSON here
    #[arg(long)]
    export: Option<PathBuf>,
    #[arg(long, default_value = "improved-clique", value_parser = parse_mode)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct ColorArgs {
    /// DIMACS graph (`-` for standard input)
    #[arg(long)]
    graph: PathBuf,
    /// proper-edge, acyclic-edge, eta-stage:ETA, delta-plus-2,
    /// proper-vertex, acyclic-vertex, star or frugal:BETA
    #[arg(long)]
    variant: String,
    /// Palette size N (ignored by delta-plus-2)
    #[arg(long)]
    colors: Option<usize>,
    /// Seed
    #[arg(long, default_value_t = 0, conflicts_with = "seeds")]
    seed: u64,
    /// Half-open seed range `A..B`, solved in parallel
    #[arg(long, value_parser = parse_seeds)]
    seeds: Option<(u64, u64)>,
    #[arg(long, default_value_t = DEFAULT_MAX_RESAMPLES)]
    max_resamples: u64,
    /// Restarts for delta-plus-2
    #[arg(long, default_value_t = 20)]
    max_restarts: u64,
    /// Split an eta-stage coloring into a proper acyclic one
    #[arg(long)]
    expand: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// DIMACS graph
    #[arg(long)]
    graph: PathBuf,
    /// Solve report JSON with `variant`, `colors` and `assignment`
    #[arg(long)]
    coloring: PathBuf,
    /// Property to check instead of the report's variant
    #[arg(long)]
    variant: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: lllcolor_core::Error| e.to_string())
}

fn parse_seeds(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: u64 = a.parse().map_err(|_| format!("bad seed `{a}`"))?;
    let b: u64 = b.parse().map_err(|_| format!("bad seed `{b}`"))?;
    if a >= b {
        return Err(format!("empty seed range {a}..{b}"));
    }
    Ok((a, b))
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Ok(parse_dimacs(&read_input(path)?)?)
}

fn gen(args: GenArgs) -> Result<ExitCode> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| anyhow!("--{what} is required for this kind"));
    let g = match args.kind {
        Kind::Complete => generate::complete(need(args.n, "n")?)?,
        Kind::Cycle => generate::cycle(need(args.n, "n")?)?,
        Kind::Path => generate::path(need(args.n, "n")?)?,
        Kind::Star => generate::star(need(args.n, "n")?)?,
        Kind::CompleteBipartite => {
            let sides = args.sides.ok_or_else(|| anyhow!("--sides A B is required for this kind"))?;
            generate::complete_bipartite(sides[0], sides[1])?
        }
        Kind::Petersen => generate::petersen(),
        Kind::Hypercube => generate::hypercube(need(args.n, "n")?)?,
        Kind::Prism => generate::prism(need(args.n, "n")?)?,
        Kind::RandomRegular => generate::random_regular(need(args.n, "n")?, need(args.d, "d")?, args.seed)?,
    };
    let g = if args.subdivide > 0 { generate::subdivide(&g, args.subdivide)? } else { g };
    let text = write_dimacs(&g);
    match args.output {
        Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn bounds_table(rows: &[BoundResult]) -> String {
    let header = ["variant", "delta", "girth", "eta", "beta", "alpha", "constant", "N"];
    let mut lines: Vec<[String; 8]> = vec![header.map(String::from)];
    for r in rows {
        lines.push([
            r.variant.to_string(),
            fmt_opt(r.delta),
            fmt_opt(r.girth),
            fmt_opt(r.eta),
            fmt_opt(r.beta),
            fmt_opt(r.alpha.map(round_sig)),
            round_sig(r.constant).to_string(),
            fmt_opt(r.colors),
        ]);
    }
    let widths: Vec<usize> = (0..8).map(|i| lines.iter().map(|l| l[i].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    for r in rows {
        for note in &r.notes {
            out.push_str(&format!("note ({}): {note}\n", r.variant));
        }
    }
    out
}

fn bounds_cmd(args: BoundsArgs) -> Result<ExitCode> {
    let variants: Vec<BoundVariant> = if args.variant.is_empty() {
        BoundVariant::ALL.to_vec()
    } else {
        args.variant.iter().map(|v| v.parse()).collect::<lllcolor_core::Result<_>>()?
    };
    let rows = variants
        .into_iter()
        .map(|variant| {
            let q = BoundQuery {
                variant,
                delta: args.delta,
                girth: args.girth,
                eta: args.eta,
                beta: args.beta,
                cap_ratio: args.cap_ratio,
            };
            bounds::compute(&q).map(|r| r.rounded())
        })
        .collect::<lllcolor_core::Result<Vec<_>>>()?;
    match args.format {
        Format::Text => print!("{}", bounds_table(&rows)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn build_family(g: &Graph, variant: &str, n: usize, max_len: Option<usize>) -> Result<EventFamily> {
    if variant == "delta-plus-2" {
        let base = solver::vizing_proper_edge_coloring(g);
        let rate = solver::recolor_rate(g.max_degree())?;
        return Ok(events::build_delta_plus_2(g, &base, rate, max_len)?);
    }
    let family = match variant.parse::<Variant>()? {
        Variant::AcyclicEdge => events::build_acyclic_edge(g, n, max_len)?,
        Variant::EtaStage { eta } => events::build_eta_stage(g, n, eta, max_len)?,
        Variant::AcyclicVertex => events::build_acyclic_vertex(g, n)?,
        Variant::Star => events::build_star(g, n)?,
        Variant::Frugal { beta } => events::build_frugal(g, n, beta)?,
        other => bail!("no event family for {other}"),
    };
    Ok(family)
}

fn print_report(report: &ConditionReport, format: Format) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string(&report.rounded())?),
        Format::Text => {
            let failures = report.failures().count();
            println!(
                "mode {}: {} ({} events, {} failing, min margin {})",
                report.mode,
                if report.pass { "pass" } else { "fail" },
                report.events.len(),
                failures,
                round_sig(report.min_margin())
            );
        }
    }
    Ok(())
}

fn lll_check(args: LllCheckArgs) -> Result<ExitCode> {
    let report = if let Some(input) = &args.input {
        let dg = DependencyGraph::from_json(&read_input(input)?)?;
        dg.check_condition(args.mode)?
    } else if let Some(path) = &args.graph {
        let g = read_graph(path)?;
        let variant = args.variant.as_deref().expect("required by clap");
        let n = args.colors.expect("required by clap");
        let family = build_family(&g, variant, n, args.max_cycle_len)?;
        let delta = family.certificate_delta();
        let (alpha, report) = match args.alpha {
            Some(alpha) => (alpha, family.dependency_graph(alpha, delta)?.check_condition(args.mode)?),
            None => {
                let c = family.certify(args.mode)?;
                (c.alpha, c.report)
            }
        };
        eprintln!("{} events, alpha = {}", family.len(), round_sig(alpha));
        if let Some(out) = &args.export {
            let dg = family.dependency_graph(alpha, delta)?;
            let text = serde_json::to_string(&dg.to_json_value())?;
            fs::write(out, text).with_context(|| format!("writing {}", out.display()))?;
        }
        report
    } else {
        bail!("either --input or --graph is required");
    };
    print_report(&report, args.format)?;
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn solve_one(g: &Graph, args: &ColorArgs, seed: u64) -> Result<SolveReport> {
    if args.variant == "delta-plus-2" {
        return Ok(solver::recolor_delta_plus_2(g, seed, args.max_restarts)?);
    }
    let variant: Variant = args.variant.parse()?;
    let n = args.colors.ok_or_else(|| anyhow!("--colors is required for {variant}"))?;
    let mut report = solver::resample_solve(g, variant, n, seed, args.max_resamples)?;
    if args.expand {
        let Variant::EtaStage { eta } = variant else { bail!("--expand applies to eta-stage variants only") };
        if report.valid {
            let c = report.coloring(variant.target())?;
            let out = solver::expand_eta_coloring(g, &c, eta)?;
            report.valid = verify(g, &out, Variant::AcyclicEdge)?.is_valid();
            report.variant = Variant::AcyclicEdge.to_string();
            report.colors = out.palette;
            report.assignment = out.assignment;
        }
    }
    Ok(report)
}

fn color(args: ColorArgs) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let (a, b) = args.seeds.unwrap_or((args.seed, args.seed + 1));
    let reports: Vec<SolveReport> = (a..b).into_par_iter().map(|seed| solve_one(&g, &args, seed)).collect::<Result<_>>()?;
    let mut out = io::stdout().lock();
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
    }
    Ok(if reports.iter().all(|r| r.valid) { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode> {
    let g = read_graph(&args.graph)?;
    let value: serde_json::Value = serde_json::from_str(&read_input(&args.coloring)?).context("parsing the coloring JSON")?;
    let name = match &args.variant {
        Some(v) => v.clone(),
        None => value["variant"].as_str().ok_or_else(|| anyhow!("coloring has no `variant`"))?.to_string(),
    };
    let variant: Variant = if name == "delta-plus-2" { Variant::AcyclicEdge } else { name.parse()? };
    let palette = value["colors"].as_u64().ok_or_else(|| anyhow!("coloring has no `colors`"))? as usize;
    let assignment: Vec<usize> = serde_json::from_value(value["assignment"].clone()).context("reading `assignment`")?;
    let coloring = Coloring::new(variant.target(), palette, assignment)?;
    let verdict = verify(&g, &coloring, variant)?;
    match args.format {
        Format::Text => match &verdict {
            Verdict::Valid => println!("valid {variant} coloring with {} colors", coloring.used_colors()),
            Verdict::Invalid(v) => println!("invalid {variant} coloring: {} (witness {:?})", v.description, v.witness),
        },
        Format::Json => {
            let body = serde_json::json!({
                "variant": variant.to_string(),
                "valid": verdict.is_valid(),
                "violation": verdict.violation(),
            });
            println!("{}", serde_json::to_string(&body)?);
        }
    }
    Ok(if verdict.is_valid() { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Bounds(a) => bounds_cmd(a),
        Command::LllCheck(a) => lll_check(a),
        Command::Color(a) => color(a),
        Command::Verify(a) => verify_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
