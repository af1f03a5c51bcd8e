//! The `pidom` command line.
//!
//! Exit codes: 0 success, 1 invalid input (including a labeling that fails
//! `verify`), 2 unsupported parameters, 3 solver size guard.

use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::families::{pid_formula, FamilyError};
use crate::graph::{generate, parse_edge_list, serialize_edge_list, serialize_edge_list_named, FamilySpec, Graph};
use crate::labeling::{violations, Labeling, Variant};
use crate::realize::{realize_induced, roman_vs_pid_spec, ConstructionSpec, RealizeError, DEFAULT_P};
use crate::solver::{solve_with, SolveError, SolveOptions, DEFAULT_MAX_VERTICES};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "pidom", version, about = "Exact perfect Italian, Italian, Roman and plain domination numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the exact domination number of an edge-list graph.
    Solve {
        #[arg(long, default_value = "pid")]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
        max_vertices: usize,
        /// Edge-list file, or '-' for standard input.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Check a labeling against a graph.
    Verify {
        #[arg(long, default_value = "pid")]
        variant: Variant,
        /// Comma-separated labels in vertex order, e.g. "1,0,1".
        #[arg(long)]
        labeling: String,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Write the edge list of a named family or a gadget.
    Generate {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        gadget: GadgetArgs,
    },
    /// Print the closed-form perfect Italian domination number of a family.
    Formula {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write a gadget graph with vertex-name comments.
    Realize {
        #[command(flatten)]
        gadget: GadgetArgs,
    },
    /// Compare closed forms with the exact solver over a sweep.
    Table {
        #[arg(long, value_enum)]
        sweep: Sweep,
        /// Largest size in the sweep.
        #[arg(long)]
        max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    Multipartite,
    /// P_2 □ P_n
    P2pn,
    /// K_m □ K_n
    Kmkn,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<FamilyKind>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Part sizes for multipartite graphs, e.g. "3,3,3".
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    /// Graph with induced subgraph; needs --a --b.
    Induced,
    /// Roman/perfect Italian pair dispatch; needs --a --b, optional --p.
    Roman,
    OddBase,
    EvenBase,
    Hub,
    Pairs,
}

#[derive(Debug, Clone, Args)]
pub struct GadgetArgs {
    #[arg(long, value_enum)]
    pub kind: Option<GadgetKind>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_P)]
    pub p: usize,
    #[arg(long)]
    pub base: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub chains: usize,
    #[arg(long, default_value_t = 0)]
    pub deleted: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sweep {
    Paths,
    Cycles,
    P2pn,
    Kmkn,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(message: impl ToString) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }

    fn unsupported(message: impl ToString) -> Self {
        CliError {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::TooLarge { .. } => 3,
            SolveError::EmptyGraph => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::NoClosedForm(_) => CliError::unsupported(e),
            _ => CliError::invalid(e),
        }
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::Unsupported { .. } => CliError::unsupported(e),
            RealizeError::InvalidParameters(_) => CliError::invalid(e),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, stdin) {
        Ok((out, code)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            e.code
        }
    }
}

fn read_graph(input: &str, stdin: &mut dyn Read) -> Result<Graph, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(CliError::invalid)?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::invalid(format!("{input}: {e}")))?
    };
    parse_edge_list(&text).map_err(CliError::invalid)
}

fn execute(command: &Command, stdin: &mut dyn Read) -> Result<(String, i32), CliError> {
    match command {
        Command::Solve {
            variant,
            format,
            max_vertices,
            input,
        } => {
            let g = read_graph(input, stdin)?;
            let opts = SolveOptions {
                max_vertices: *max_vertices,
                ..Default::default()
            };
            let r = solve_with(&g, *variant, &opts)?;
            let out = match format {
                Format::Text => format!("variant={variant} optimum={}\n{}\n", r.optimum, r.witness),
                Format::Json => json_line(json!({
                    "schema": SCHEMA_VERSION,
                    "variant": variant.name(),
                    "optimum": r.optimum,
                    "witness": r.witness.to_csv(),
                    "nodes_explored": r.nodes_explored,
                })),
            };
            Ok((out, 0))
        }
        Command::Verify {
            variant,
            labeling,
            input,
        } => {
            let g = read_graph(input, stdin)?;
            let f = Labeling::parse_csv(labeling).map_err(CliError::invalid)?;
            let bad = violations(&g, &f, *variant).map_err(CliError::invalid)?;
            if bad.is_empty() {
                return Ok((format!("VALID weight={}\n", f.weight()), 0));
            }
            let mut out = String::from("INVALID\n");
            for v in bad {
                let _ = writeln!(out, "vertex {} neighbor_sum {}", v.vertex, v.neighbor_sum);
            }
            Ok((out, 1))
        }
        Command::Generate { family, gadget } => {
            let g = match (family.family, gadget.kind) {
                (Some(_), None) => generate(&family_spec(family)?).map_err(CliError::invalid)?,
                (None, Some(_)) => gadget_graph(gadget)?.0.without_names(),
                _ => return Err(CliError::invalid("give exactly one of --family or --kind")),
            };
            Ok((serialize_edge_list(&g), 0))
        }
        Command::Formula { family, format } => {
            let spec = family_spec(family)?;
            let r = pid_formula(&spec)?;
            let out = match format {
                Format::Text => format!("{spec}: value={} source={}\n", r.value, r.source),
                Format::Json => json_line(json!({
                    "schema": SCHEMA_VERSION,
                    "family": spec.to_string(),
                    "value": r.value,
                    "source": r.source,
                })),
            };
            Ok((out, 0))
        }
        Command::Realize { gadget } => {
            let (g, subgraph) = gadget_graph(gadget)?;
            let mut out = String::new();
            if let Some(vs) = subgraph {
                let ids: Vec<String> = vs.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "# subgraph {}", ids.join(" "));
            }
            out.push_str(&serialize_edge_list_named(&g));
            Ok((out, 0))
        }
        Command::Table { sweep, max } => table(*sweep, *max),
    }
}

fn json_line(value: serde_json::Value) -> String {
    format!("{value}\n")
}

fn need(value: Option<usize>, flag: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::invalid(format!("missing --{flag}")))
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, CliError> {
    use FamilySpec as F;
    let kind = args.family.ok_or_else(|| CliError::invalid("missing --family"))?;
    let spec = match kind {
        FamilyKind::Path => F::Path(need(args.n, "n")?),
        FamilyKind::Cycle => F::Cycle(need(args.n, "n")?),
        FamilyKind::Complete => F::Complete(need(args.n, "n")?),
        FamilyKind::Empty => F::Empty(need(args.n, "n")?),
        FamilyKind::Star => F::Star(need(args.n, "n")?),
        FamilyKind::Multipartite => {
            if args.parts.is_empty() {
                return Err(CliError::invalid("missing --parts"));
            }
            F::CompleteMultipartite(args.parts.clone())
        }
        FamilyKind::P2pn => F::product(F::Path(2), F::Path(need(args.n, "n")?)),
        FamilyKind::Kmkn => F::product(F::Complete(need(args.m, "m")?), F::Complete(need(args.n, "n")?)),
    };
    spec.validate().map_err(CliError::invalid)?;
    Ok(spec)
}

fn gadget_graph(args: &GadgetArgs) -> Result<(Graph, Option<Vec<usize>>), CliError> {
    let kind = args.kind.ok_or_else(|| CliError::invalid("missing --kind"))?;
    let spec = match kind {
        GadgetKind::Induced => {
            let r = realize_induced(need(args.a, "a")?, need(args.b, "b")?)?;
            return Ok((r.graph, Some(r.subgraph_vertices)));
        }
        GadgetKind::Roman => roman_vs_pid_spec(need(args.a, "a")?, need(args.b, "b")?, args.p)?,
        GadgetKind::OddBase => ConstructionSpec::RomanPidOddBase {
            base: need(args.base, "base")?,
            p: args.p,
            chains: args.chains,
        },
        GadgetKind::EvenBase => ConstructionSpec::RomanPidEvenBase {
            base: need(args.base, "base")?,
            p: args.p,
            chains: args.chains,
        },
        GadgetKind::Hub => ConstructionSpec::RomanPidEqualOdd { a: need(args.a, "a")? },
        GadgetKind::Pairs => ConstructionSpec::RomanPidPairGadget {
            b: need(args.b, "b")?,
            deleted: args.deleted,
        },
    };
    Ok((spec.build()?, None))
}

/// Formula-vs-solver rows for a sweep. Exit code 0 only if every row agrees.
fn table(sweep: Sweep, max: usize) -> Result<(String, i32), CliError> {
    use FamilySpec as F;
    let specs: Vec<FamilySpec> = match sweep {
        Sweep::Paths => (1..=max).map(F::Path).collect(),
        Sweep::Cycles => (3..=max).map(F::Cycle).collect(),
        Sweep::P2pn => (1..=max).map(|n| F::product(F::Path(2), F::Path(n))).collect(),
        Sweep::Kmkn => (1..=max)
            .flat_map(|n| (1..=n).map(move |m| F::product(F::Complete(m), F::Complete(n))))
            .collect(),
    };
    let mut out = format!("{:<12} {:>7} {:>6} {:<10} status\n", "family", "formula", "solver", "source");
    let mut all_pass = true;
    for spec in specs {
        let f = pid_formula(&spec)?;
        let g = generate(&spec).map_err(CliError::invalid)?;
        let s = solve_with(&g, Variant::PerfectItalian, &SolveOptions::default())?;
        let pass = f.value == s.optimum;
        all_pass &= pass;
        let _ = writeln!(
            out,
            "{:<12} {:>7} {:>6} {:<10} {}",
            spec.to_string(),
            f.value,
            s.optimum,
            f.source,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    Ok((out, if all_pass { 0 } else { 1 }))
}
