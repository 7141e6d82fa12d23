//! Command-line front end: compute index reports for supplied graphs, run
//! the claim-verification suite (exit 0 only when every claim holds), list
//! extremal trees, generate families, and stream enumeration universes.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use harmonic::{
    all_bound_reports, all_connected_labeled_graphs, all_free_trees, complete_bipartite,
    erratum_warnings, extremal_records, first_zagreb, harmonic_index, parse_graph6, path,
    randic_index, run_claims, spider, star, to_graph6, ClaimId, Graph, Seed, SpiderSpec,
    VerificationResult, VerifyOptions, ALL_CLAIMS,
};
use harmonic::report::{extremal_run_value, verify_run_value};

#[derive(Parser)]
#[command(
    name = "harmonic",
    version,
    about = "Exact degree-based graph invariants with mechanically verified extremal claims"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report indices and bounds for graphs from standard input or a file
    Compute {
        /// Input file; standard input when omitted
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Extremal harmonic-index values over all trees of each order
    Extremal {
        #[arg(long = "n-max", value_name = "K")]
        n_max: usize,
        /// Also write the records as JSON to this file
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Run claim verification; exits 0 only if every selected claim holds
    Verify {
        /// Comma-separated claim ids (default: all)
        #[arg(long, value_delimiter = ',', value_name = "LIST")]
        claims: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: usize,
        #[arg(long = "random-samples", default_value_t = 10_000)]
        random_samples: usize,
        /// Also write the full report as JSON to this file
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Emit one family member as graph6: path N, star N,
    /// complete_bipartite A B, spider A B C
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Stream a test universe as graph6 lines
    Enumerate {
        #[arg(value_enum)]
        universe: Universe,
        #[arg(long)]
        n: usize,
        /// Output file; standard output when omitted
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// One graph6 string per line
    Graph6,
    /// A vertex count line, then one "u v" line per edge
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum Universe {
    /// One representative per isomorphism class of trees on n vertices
    Trees,
    /// Every connected labeled graph on n vertices
    Graphs,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Compute { input, format } => {
            cmd_compute(input.as_deref(), format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Extremal { n_max, json } => {
            cmd_extremal(n_max, json.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claims,
            seed,
            n_max,
            random_samples,
            json,
        } => cmd_verify(&claims, seed, n_max, random_samples, json.as_deref()),
        Command::Gen { family, params } => {
            cmd_gen(&family, &params)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { universe, n, out } => {
            cmd_enumerate(universe, n, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_compute(input: Option<&Path>, format: Format) -> Result<()> {
    let text = match input {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("reading standard input")?;
            s
        }
    };
    let graphs = match format {
        Format::Graph6 => parse_graph6_lines(&text)?,
        Format::Edges => vec![parse_edge_list(&text)?],
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (index, (label, g)) in graphs.iter().enumerate() {
        write_report(&mut out, index + 1, label, g)?;
    }
    Ok(())
}

fn parse_graph6_lines(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut graphs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line)
            .with_context(|| format!("line {}: invalid graph6 {:?}", lineno + 1, line))?;
        graphs.push((line.to_owned(), g));
    }
    if graphs.is_empty() {
        bail!("no graphs in input");
    }
    Ok(graphs)
}

fn parse_edge_list(text: &str) -> Result<(String, Graph)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (lineno, first) = lines.next().context("empty edge-list input")?;
    let n: usize = first
        .parse()
        .with_context(|| format!("line {lineno}: expected a vertex count, got {first:?}"))?;
    let mut g = Graph::new(n);
    for (lineno, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            bail!("line {lineno}: expected \"u v\", got {line:?}");
        };
        let u: usize = a
            .parse()
            .with_context(|| format!("line {lineno}: bad vertex {a:?}"))?;
        let v: usize = b
            .parse()
            .with_context(|| format!("line {lineno}: bad vertex {b:?}"))?;
        g.add_edge(u, v)
            .with_context(|| format!("line {lineno}: cannot add edge ({u}, {v})"))?;
    }
    Ok(("edge list".to_owned(), g))
}

fn write_report(out: &mut impl Write, index: usize, label: &str, g: &Graph) -> Result<()> {
    let h = harmonic_index(g);
    writeln!(out, "graph {index} ({label}): n = {}, m = {}", g.n(), g.m())?;
    writeln!(out, "  harmonic      = {} ({})", h.exact(), h.decimal())?;
    writeln!(out, "  randic        = {:.14}", randic_index(g))?;
    writeln!(out, "  first_zagreb  = {}", first_zagreb(g))?;
    writeln!(out, "  connected     = {}", g.is_connected())?;
    writeln!(out, "  triangle_free = {}", g.is_triangle_free())?;
    for rep in all_bound_reports(g) {
        writeln!(
            out,
            "  {:<18} holds = {}{}, bound = {} ({}), equality = {}, equality_condition = {}",
            rep.bound_id.as_str(),
            rep.holds,
            if rep.hypothesis_holds {
                ""
            } else {
                " (hypothesis fails)"
            },
            rep.bound_value.exact(),
            rep.bound_value.decimal(),
            rep.equality,
            rep.equality_condition_holds,
        )?;
    }
    Ok(())
}

fn cmd_extremal(n_max: usize, json: Option<&Path>) -> Result<()> {
    let records = extremal_records(n_max)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for rec in &records {
        writeln!(
            out,
            "n = {:<2} {:<11} {} ({})  attaining: {}",
            rec.n,
            rec.rank.as_str(),
            rec.value.exact(),
            rec.value.decimal(),
            rec.attaining.join(" "),
        )?;
    }
    if let Some(p) = json {
        write_json(p, &extremal_run_value(n_max, &records))?;
    }
    print_warnings();
    Ok(())
}

fn cmd_verify(
    claims: &[String],
    seed: u64,
    n_max: usize,
    random_samples: usize,
    json: Option<&Path>,
) -> Result<ExitCode> {
    let claims = if claims.is_empty() {
        ALL_CLAIMS.to_vec()
    } else {
        claims
            .iter()
            .map(|s| s.trim().parse::<ClaimId>())
            .collect::<Result<Vec<ClaimId>, _>>()?
    };
    let options = VerifyOptions {
        n_max,
        seed: Seed(seed),
        random_samples,
        claims,
    };
    let results = run_claims(&options)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for res in &results {
        write_result(&mut out, res)?;
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        writeln!(out, "all {} claims passed", results.len())?;
    } else {
        writeln!(out, "{failed} of {} claims failed", results.len())?;
    }
    if let Some(p) = json {
        write_json(p, &verify_run_value(&options, &results))?;
    }
    print_warnings();
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn write_result(out: &mut impl Write, res: &VerificationResult) -> Result<()> {
    writeln!(
        out,
        "{:<18} {}  instances = {:<8} elapsed = {:.3} s",
        res.claim_id.as_str(),
        if res.passed { "passed" } else { "FAILED" },
        res.instances,
        res.elapsed.as_secs_f64(),
    )?;
    writeln!(out, "  universe: {}", res.universe)?;
    if let Some(cx) = &res.counterexample {
        writeln!(out, "  counterexample: {}", cx.graph6)?;
        writeln!(out, "  context: {}", cx.context)?;
    }
    Ok(())
}

fn cmd_gen(family: &str, params: &[usize]) -> Result<()> {
    let g = match (family, params) {
        ("path", &[n]) => path(n)?,
        ("star", &[n]) => star(n)?,
        ("complete_bipartite", &[a, b]) => complete_bipartite(a, b)?,
        ("spider", &[a, b, c]) => spider(SpiderSpec::new(a, b, c)?),
        ("path" | "star", _) => bail!("family {family} takes one parameter"),
        ("complete_bipartite", _) => bail!("family complete_bipartite takes two parameters"),
        ("spider", _) => bail!("family spider takes three parameters"),
        _ => bail!("unknown family {family:?}; expected path, star, complete_bipartite, or spider"),
    };
    println!("{}", to_graph6(&g)?);
    Ok(())
}

fn cmd_enumerate(universe: Universe, n: usize, out: Option<&Path>) -> Result<()> {
    let mut sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    match universe {
        Universe::Trees => {
            for g in all_free_trees(n)? {
                writeln!(sink, "{}", to_graph6(&g)?)?;
            }
        }
        Universe::Graphs => {
            for g in all_connected_labeled_graphs(n)? {
                writeln!(sink, "{}", to_graph6(&g)?)?;
            }
        }
    }
    sink.flush()?;
    Ok(())
}

fn write_json(path: &Path, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn print_warnings() {
    for w in erratum_warnings() {
        eprintln!("warning [{}]: {}", w.code, w.message);
    }
}
