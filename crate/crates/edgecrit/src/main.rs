use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use edgecrit::formats::{certificate_text, coloring_lines, export_graph, ExportFormat};
use edgecrit::report;
use edgecrit::svg::{certificate_diagram, chord_diagram, DiagramChord};
use edgecrit::sweep::{self, Deadline};
use edgecrit::Error;
use edgecrit_core::criticality::{critical_coloring, Verdict};
use edgecrit_core::generators::{choose4, gn, kneser, mycielski_iter, schrijver};
use edgecrit_core::homomorphism::{build_h, lower_bound_chain, ChainOptions};
use edgecrit_core::solver::{chromatic_number, SolverConfig, VertexOrder};
use edgecrit_core::{Chord, ChordSpace, Edge, Graph};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_TIMEOUT: u8 = 3;

/// Kneser, Schrijver and edge-critical chord graphs: generation, export and
/// verification.
#[derive(Debug, Parser)]
#[command(name = "edgecrit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Export a graph family member.
    Generate {
        family: Family,
        #[command(flatten)]
        params: GraphParams,
        #[arg(long, value_enum, default_value_t = FormatArg::Dimacs)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification and exit 0 only if every check passes.
    Verify {
        target: Target,
        #[command(flatten)]
        params: GraphParams,
        /// Graph family for `chromatic` and `vertex-critical`.
        #[arg(long, value_enum)]
        family: Option<Family>,
        /// Largest n of the `ratio` table.
        #[arg(long, default_value_t = 100)]
        n_max: u32,
        /// Accepted distance of the last ratio from 2/3.
        #[arg(long, default_value_t = 0.02)]
        tolerance: f64,
        /// Also settle each claim with the exact solver.
        #[arg(long)]
        with_solver: bool,
        /// Print machine-readable rows instead of an aligned table.
        #[arg(long)]
        machine: bool,
        /// Print the optimal colouring found by `chromatic`.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        run: RunOptions,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the certificate colouring of G_n minus one edge.
    Certificate {
        #[arg(long)]
        n: u32,
        /// The edge as two chords, e.g. `26,35`.
        #[arg(long)]
        edge: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the homomorphism M(G_{n-1}) -> G_n as `domain -> image` lines.
    Map {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render chords of C_n as SVG.
    Diagram {
        #[arg(long)]
        n: u32,
        /// Chords to draw, e.g. `13,24`.
        #[arg(long, conflicts_with = "certificate")]
        chords: Option<String>,
        /// Draw the shaded colour classes of this edge's certificate.
        #[arg(long)]
        certificate: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Kneser,
    Schrijver,
    Gn,
    #[value(name = "mycielski_k")]
    MycielskiK,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Chromatic,
    EdgeCritical,
    VertexCritical,
    Homomorphism,
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
    Structured,
}

impl From<FormatArg> for ExportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => ExportFormat::Dimacs,
            FormatArg::Edgelist => ExportFormat::Edgelist,
            FormatArg::Structured => ExportFormat::Structured,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Saturation,
    Degeneracy,
    Input,
}

#[derive(Debug, Args)]
struct GraphParams {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Debug, Args)]
struct RunOptions {
    /// Wall-clock budget for solver work.
    #[arg(long, default_value_t = 300.0)]
    budget_seconds: f64,
    /// Worker threads; defaults to available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = OrderArg::Saturation)]
    order: OrderArg,
}

impl RunOptions {
    fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            vertex_order: match self.order {
                OrderArg::Saturation => VertexOrder::SaturationDegree,
                OrderArg::Degeneracy => VertexOrder::Degeneracy,
                OrderArg::Input => VertexOrder::Input,
            },
            seed: self.seed,
            ..SolverConfig::default()
        }
    }
}

/// Result of a command that ran to completion.
enum Status {
    Pass,
    Fail,
    Timeout,
}

impl From<Verdict> for Status {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Status::Pass,
            Verdict::Fail => Status::Fail,
            Verdict::Timeout => Status::Timeout,
        }
    }
}

enum Failure {
    Usage(String),
    Timeout(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Core(edgecrit_core::Error::Timeout(what)) => Failure::Timeout(what),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<edgecrit_core::Error> for Failure {
    fn from(e: edgecrit_core::Error) -> Self {
        Failure::from(Error::from(e))
    }
}

fn require(value: Option<u32>, flag: &str) -> Result<u32, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("--{flag} is required")))
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text).map_err(|e| Failure::from(Error::from(e)))?;
    }
    Ok(())
}

fn build_family(family: Family, params: &GraphParams) -> Result<(Graph, usize, String), Failure> {
    Ok(match family {
        Family::Gn => {
            let n = require(params.n, "n")?;
            (gn(n)?, n.saturating_sub(2) as usize, format!("G_{n}"))
        }
        Family::Kneser | Family::Schrijver => {
            let n = require(params.n, "n")?;
            let k = require(params.k, "k")?;
            let g = if family == Family::Kneser {
                kneser(n, k)?
            } else {
                schrijver(n, k)?
            };
            let name = if family == Family::Kneser { "KG" } else { "SG" };
            (g, (n + 2 - 2 * k) as usize, format!("{name}({n},{k})"))
        }
        Family::MycielskiK => {
            let k = require(params.k, "k")?;
            (mycielski_iter(k)?, k as usize, format!("M_{k}"))
        }
    })
}

fn parse_chord_list(text: &str, n: u32) -> Result<Vec<Chord>, Failure> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| Chord::parse(s.trim(), n).map_err(Failure::from))
        .collect()
}

fn parse_edge(text: &str, space: &ChordSpace) -> Result<Edge, Failure> {
    let chords = parse_chord_list(text, space.n())?;
    let [p, q] = chords[..] else {
        return Err(Failure::Usage(format!("expected two chords, got {text:?}")));
    };
    let index = |c: Chord| space.index_of(c).expect("validated chord");
    Edge::new(index(p), index(q))
        .ok_or_else(|| Failure::Usage(format!("{text:?} names the same chord twice")))
}

fn run(command: Command) -> Result<Status, Failure> {
    match command {
        Command::Generate {
            family,
            params,
            format,
            out,
        } => {
            let (g, _, _) = build_family(family, &params)?;
            emit(&export_graph(&g, format.into()), out.as_ref())?;
            Ok(Status::Pass)
        }
        Command::Verify {
            target,
            params,
            family,
            n_max,
            tolerance,
            with_solver,
            machine,
            witness,
            run,
            out,
        } => sweep::with_workers(run.workers, || {
            verify(
                target,
                &params,
                family,
                n_max,
                tolerance,
                with_solver,
                machine,
                witness,
                &run,
                out.as_ref(),
            )
        }),
        Command::Certificate { n, edge, out } => {
            let space = ChordSpace::new(n)?;
            let e = parse_edge(&edge, &space)?;
            let cert = critical_coloring(&space, e)?;
            emit(&certificate_text(&space, &cert), out.as_ref())?;
            Ok(Status::Pass)
        }
        Command::Map { n, out } => {
            let inst = build_h(n)?;
            let violations = sweep::homomorphism_violations(&inst);
            let mut text: String = inst.map_lines().map(|l| l + "\n").collect();
            for v in &violations {
                text.push_str(&format!(
                    "# violation {} {} -> {} {}\n",
                    inst.domain.label(v.edge.u),
                    inst.domain.label(v.edge.v),
                    inst.codomain.label(v.images.0),
                    inst.codomain.label(v.images.1),
                ));
            }
            text.push_str(&format!("# violations {}\n", violations.len()));
            emit(&text, out.as_ref())?;
            Ok(if violations.is_empty() {
                Status::Pass
            } else {
                Status::Fail
            })
        }
        Command::Diagram {
            n,
            chords,
            certificate,
            out,
        } => {
            let svg = match (chords, certificate) {
                (_, Some(edge)) => {
                    let space = ChordSpace::new(n)?;
                    let cert = critical_coloring(&space, parse_edge(&edge, &space)?)?;
                    certificate_diagram(&space, &cert)
                }
                (Some(list), None) => {
                    let chords: Vec<DiagramChord> = parse_chord_list(&list, n)?
                        .into_iter()
                        .map(|chord| DiagramChord { chord, class: None })
                        .collect();
                    chord_diagram(n, &chords)
                }
                (None, None) => {
                    return Err(Failure::Usage(
                        "one of --chords or --certificate is required".into(),
                    ))
                }
            };
            emit(&svg, out.as_ref())?;
            Ok(Status::Pass)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    target: Target,
    params: &GraphParams,
    family: Option<Family>,
    n_max: u32,
    tolerance: f64,
    with_solver: bool,
    machine: bool,
    witness: bool,
    run: &RunOptions,
    out: Option<&PathBuf>,
) -> Result<Status, Failure> {
    let cfg = run.solver_config();
    let deadline = Deadline::after_seconds(run.budget_seconds);
    match target {
        Target::Chromatic => {
            let (g, expected, name) = build_family(family.unwrap_or(Family::Gn), params)?;
            let mut budget = deadline;
            let result = chromatic_number(&g, &cfg, &mut budget);
            let mut text = report::chromatic_report(&name, expected, &result);
            if witness {
                text.push_str(&coloring_lines(&g, &result.witness, |c| c.to_string()));
            }
            emit(&text, out)?;
            Ok(if !result.is_exact() {
                Status::Timeout
            } else if result.chi == expected {
                Status::Pass
            } else {
                Status::Fail
            })
        }
        Target::EdgeCritical => {
            let n = require(params.n, "n")?;
            let r = sweep::edge_criticality(n, with_solver, &cfg, deadline)?;
            emit(&report::edge_report(&r), out)?;
            Ok(r.verdict().into())
        }
        Target::VertexCritical => {
            let family = family.unwrap_or(Family::Schrijver);
            let params = GraphParams {
                n: params.n,
                k: params.k.or(Some(2)),
            };
            let (g, _, _) = build_family(family, &params)?;
            let r = sweep::vertex_criticality(&g, &cfg, deadline)?;
            emit(&report::vertex_report(&g, &r), out)?;
            Ok(r.verdict().into())
        }
        Target::Homomorphism => {
            let n = require(params.n, "n")?;
            let mut budget = deadline;
            let chain = lower_bound_chain(n, &cfg, &mut budget, &ChainOptions::default())?;
            let solver_chi = with_solver.then(|| {
                let r = chromatic_number(&gn(n).expect("n >= 5"), &cfg, &mut budget);
                r.is_exact().then_some(r.chi)
            });
            emit(&report::chain_report(&chain, solver_chi), out)?;
            Ok(match solver_chi {
                Some(Some(chi)) if chi != chain.bound => Status::Fail,
                Some(None) => Status::Timeout,
                _ => Status::Pass,
            })
        }
        Target::Ratio => {
            let n_min = params.n.unwrap_or(5);
            if n_min < 5 || n_max < n_min {
                return Err(Failure::Usage(format!(
                    "need 5 <= n <= n-max, got n = {n_min}, n-max = {n_max}"
                )));
            }
            let rows = sweep::ratio_table(n_min..=n_max)?;
            emit(&report::ratio_report(&rows, machine), out)?;
            let census_ok = rows
                .iter()
                .all(|r| r.counts.crossing == choose4(u64::from(r.n)));
            let last = rows.last().expect("nonempty range");
            let close = (last.ratio() - 2.0 / 3.0).abs() < tolerance;
            Ok(if census_ok && close {
                Status::Pass
            } else {
                Status::Fail
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(EXIT_FAILED),
        Ok(Status::Timeout) => ExitCode::from(EXIT_TIMEOUT),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Timeout(msg)) => {
            eprintln!("timeout: {msg}");
            ExitCode::from(EXIT_TIMEOUT)
        }
    }
}
