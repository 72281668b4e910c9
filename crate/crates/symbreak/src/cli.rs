//! Command-line interface. Three subcommands: `compute` reports invariants
//! of one graph as a JSON object, `generate` prints a family member in
//! graph6 or edge-list form, and `verify` runs the verification suites.
//!
//! Exit codes: 0 on success, 1 on computation errors or failed
//! verification, 2 on usage errors (including malformed family specs).

use crate::distinguishing::{
    distinguishing_number_with, enumerated_aut, phi_k_with, phi_le_k_with, theta_from_elements,
    Budgets, PhiLeMode, PhiMode, DEFAULT_COLORING_BUDGET,
};
use crate::error::{Error, Result};
use crate::families::{
    self, fixtures, generalized_johnson, kneser, petersen, JohnsonParams,
};
use crate::graph::Graph;
use crate::perm::DEFAULT_GROUP_CAP;
use crate::verify::{
    run_all, scan_small_graphs, verify_fixtures, verify_johnson_grid, verify_union_random,
    VerificationReport,
};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Parser, Debug)]
#[command(
    name = "symbreak",
    version,
    about = "Symmetry-breaking invariants of finite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute invariants of a single graph, printed as one JSON object.
    Compute(ComputeArgs),
    /// Print a member of a parameterized family.
    Generate(GenerateArgs),
    /// Run verification suites and report violations.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["graph6", "edges", "family"])))]
pub struct ComputeArgs {
    /// Graph in graph6 format.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Edge-list file: first line the vertex count, then one "u v" line per
    /// edge. Pass "-" to read standard input.
    #[arg(long)]
    pub edges: Option<String>,
    /// Family spec such as "cycle 6", "johnson 7 3 2", or "g6fixture g24".
    #[arg(long)]
    pub family: Option<String>,
    /// Distinguishing threshold with a witness permutation.
    #[arg(long)]
    pub theta: bool,
    /// Distinguishing number.
    #[arg(long)]
    pub dnum: bool,
    /// Minimum number of vertices moved by a non-identity automorphism.
    #[arg(long)]
    pub motion: bool,
    /// Order of the automorphism group.
    #[arg(long = "aut-order")]
    pub aut_order: bool,
    /// Count non-equivalent distinguishing colorings using exactly K colors.
    #[arg(long, value_name = "K")]
    pub phi: Option<usize>,
    /// Count non-equivalent distinguishing colorings using at most K colors.
    #[arg(long = "Phi", value_name = "K")]
    pub phi_le: Option<usize>,
    /// Abort if the automorphism group exceeds this many elements.
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    pub group_cap: usize,
    /// Abort searches that would test more than this many colorings.
    #[arg(long, default_value_t = DEFAULT_COLORING_BUDGET)]
    pub coloring_budget: u64,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Family spec such as "petersen" or "circulant 8 1,4,7".
    #[arg(long)]
    pub family: String,
    /// Emit edge-list text instead of graph6.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Small,
    Johnson,
    Union,
    Fixtures,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Largest order for the exhaustive small-graph scan (at most 7).
    #[arg(long, default_value_t = 6)]
    pub nmax: usize,
    /// Vertex limit for the generalized Johnson grid.
    #[arg(long, default_value_t = 36)]
    pub max_vertices: usize,
    /// Number of random disjoint unions to draw.
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    /// Seed for the random union suite.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Pretty-print the JSON output.
    #[arg(long)]
    pub pretty: bool,
}

/// Builds a graph from a textual family spec: `path N`, `cycle N`,
/// `complete N`, `empty N`, `bipartite M N`, `circulant N s1,s2,..`,
/// `johnson N K I`, `kneser N K`, `petersen`, or `g6fixture NAME` where
/// NAME is one of g6, g24, g14, g9, g16, asym6.
pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let tokens: Vec<&str> = spec.split_whitespace().collect();
    let arity = |want: usize| -> Result<()> {
        if tokens.len() == want + 1 {
            Ok(())
        } else {
            Err(Error::ParseError(format!(
                "family {:?} takes {want} parameter(s)",
                tokens[0]
            )))
        }
    };
    let num = |tok: &str| -> Result<usize> {
        tok.parse()
            .map_err(|_| Error::ParseError(format!("bad number {tok:?} in family spec")))
    };
    match tokens.first() {
        Some(&"path") => {
            arity(1)?;
            families::path(num(tokens[1])?)
        }
        Some(&"cycle") => {
            arity(1)?;
            families::cycle(num(tokens[1])?)
        }
        Some(&"complete") => {
            arity(1)?;
            families::complete(num(tokens[1])?)
        }
        Some(&"empty") => {
            arity(1)?;
            families::empty(num(tokens[1])?)
        }
        Some(&"bipartite") => {
            arity(2)?;
            families::complete_bipartite(num(tokens[1])?, num(tokens[2])?)
        }
        Some(&"circulant") => {
            arity(2)?;
            let connections: Vec<usize> = tokens[2]
                .split(',')
                .map(num)
                .collect::<Result<_>>()?;
            families::circulant(num(tokens[1])?, &connections)
        }
        Some(&"johnson") => {
            arity(3)?;
            let params =
                JohnsonParams::new(num(tokens[1])?, num(tokens[2])?, num(tokens[3])?)?;
            generalized_johnson(&params)
        }
        Some(&"kneser") => {
            arity(2)?;
            kneser(num(tokens[1])?, num(tokens[2])?)
        }
        Some(&"petersen") => {
            arity(0)?;
            Ok(petersen())
        }
        Some(&"g6fixture") => {
            arity(1)?;
            match tokens[1] {
                "g6" => Ok(fixtures::g6()),
                "g24" => Ok(fixtures::g24()),
                "g14" => Ok(fixtures::g14()),
                "g9" => Ok(fixtures::g9()),
                "g16" => Ok(fixtures::g16()),
                "asym6" => Ok(fixtures::asym6()),
                other => Err(Error::ParseError(format!("unknown fixture {other:?}"))),
            }
        }
        Some(other) => Err(Error::ParseError(format!("unknown family {other:?}"))),
        None => Err(Error::ParseError("empty family spec".to_string())),
    }
}

fn load_graph(args: &ComputeArgs) -> Result<Graph> {
    if let Some(g6) = &args.graph6 {
        return Graph::from_graph6(g6);
    }
    if let Some(path) = &args.edges {
        let text = if path == "-" {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
                .map_err(|e| Error::Io(e.to_string()))?;
            buf
        } else {
            std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?
        };
        return Graph::from_edge_list_text(&text);
    }
    parse_family_spec(args.family.as_deref().expect("clap enforces the input group"))
}

fn compute_json(args: &ComputeArgs, g: &Graph) -> Result<Value> {
    let budgets = Budgets {
        group_cap: args.group_cap,
        coloring_budget: args.coloring_budget,
    };
    let all_default = !args.theta
        && !args.dnum
        && !args.motion
        && !args.aut_order
        && args.phi.is_none()
        && args.phi_le.is_none();
    let want_theta = args.theta || all_default || args.phi.is_some();
    let want_aut = args.aut_order || all_default;
    let want_motion = args.motion || all_default;
    let want_dnum = args.dnum || all_default;

    let mut out = Map::new();
    out.insert("command".into(), json!("compute"));
    out.insert(
        "input".into(),
        json!({
            "graph6": g.to_graph6(),
            "n": g.n(),
            "edge_count": g.edge_count(),
            "name": g.name(),
        }),
    );

    let elements = if want_theta || want_aut || want_motion {
        Some(enumerated_aut(g, budgets.group_cap)?)
    } else {
        None
    };
    let mut theta_value = None;
    if let Some(elements) = &elements {
        if want_aut {
            out.insert("aut_order".into(), json!(elements.len().to_string()));
        }
        if want_theta {
            let t = theta_from_elements(elements);
            theta_value = Some(t.theta);
            if args.theta || all_default {
                out.insert("theta".into(), json!(t.theta));
                out.insert(
                    "theta_witness".into(),
                    t.witness
                        .as_ref()
                        .map_or(Value::Null, |w| json!(w.cycle_notation())),
                );
                out.insert(
                    "theta_witness_order".into(),
                    t.witness_order.map_or(Value::Null, |o| json!(o)),
                );
            }
        }
        if want_motion {
            match crate::distinguishing::motion_from_elements(elements) {
                Some(m) => {
                    out.insert("motion".into(), json!(m.motion));
                    out.insert("motion_witness".into(), json!(m.witness.cycle_notation()));
                }
                None => {
                    out.insert("motion".into(), Value::Null);
                    out.insert("motion_witness".into(), Value::Null);
                }
            }
        }
    }
    if want_dnum {
        out.insert(
            "dnum".into(),
            json!(distinguishing_number_with(g, &budgets)?),
        );
    }
    if let Some(k) = args.phi {
        let threshold = theta_value.expect("threshold is computed whenever phi is requested");
        let mode = if k >= threshold {
            PhiMode::Formula
        } else {
            PhiMode::Brute
        };
        let value = phi_k_with(g, k, mode, &budgets)?;
        out.insert(
            "phi".into(),
            json!({ "colors": k, "count": value.to_string() }),
        );
    }
    if let Some(k) = args.phi_le {
        let value = phi_le_k_with(g, k, PhiLeMode::FormulaSum, &budgets)?;
        out.insert(
            "phi_le".into(),
            json!({ "colors": k, "count": value.to_string() }),
        );
    }
    Ok(Value::Object(out))
}

fn emit(value: &Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).expect("valid JSON"));
    } else {
        println!("{value}");
    }
}

fn emit_error(e: &Error) {
    eprintln!("{}", json!({ "error": { "message": e.to_string() } }));
}

fn run_verify(args: &VerifyArgs) -> Result<Vec<VerificationReport>> {
    match args.suite {
        Suite::Small => Ok(vec![scan_small_graphs(args.nmax)?]),
        Suite::Johnson => Ok(vec![verify_johnson_grid(args.max_vertices)?]),
        Suite::Union => Ok(vec![verify_union_random(args.trials, args.seed)?]),
        Suite::Fixtures => Ok(vec![verify_fixtures()?]),
        Suite::All => run_all(args.nmax, args.max_vertices, args.trials, args.seed),
    }
}

/// Executes a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    match &cli.command {
        Command::Compute(args) => {
            let g = match load_graph(args) {
                Ok(g) => g,
                Err(e @ Error::ParseError(_)) if args.family.is_some() => {
                    emit_error(&e);
                    return 2;
                }
                Err(e) => {
                    emit_error(&e);
                    return 1;
                }
            };
            match compute_json(args, &g) {
                Ok(value) => {
                    emit(&value, args.pretty);
                    0
                }
                Err(e) => {
                    emit_error(&e);
                    1
                }
            }
        }
        Command::Generate(args) => match parse_family_spec(&args.family) {
            Ok(g) => {
                if args.edges {
                    print!("{}", g.to_edge_list_text());
                } else {
                    println!("{}", g.to_graph6());
                }
                0
            }
            Err(e @ Error::ParseError(_)) => {
                emit_error(&e);
                2
            }
            Err(e) => {
                emit_error(&e);
                1
            }
        },
        Command::Verify(args) => match run_verify(args) {
            Ok(reports) => {
                let passed = reports.iter().all(|r| r.passed());
                let value = json!({
                    "command": "verify",
                    "passed": passed,
                    "reports": reports,
                });
                emit(&value, args.pretty);
                if passed {
                    0
                } else {
                    1
                }
            }
            Err(e) => {
                emit_error(&e);
                1
            }
        },
    }
}
