//! Command-line front end for the monomial crystal toolkit.
//!
//! Parses monomials, runs the compression pipeline, applies crystal
//! operators, exports tableaux, paths, and component graphs, and checks the
//! component-preservation and insertion laws. Exit codes: 0 on success or a
//! verified comparison, 1 on usage or parse errors, 2 on a failed
//! verification verdict, 3 on an internal invariant violation.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use monocrystal::{
    explore_component, insert, is_isomorphic, parse_monomial, CrystalGraph, Error, ExpoMatrix,
    Family, Monomial, RankSpec, Result, Tensor, DEFAULT_NODE_CAP,
};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "monocrystal",
    version,
    about = "Nakajima monomial compression, tableaux, and crystal graphs"
)]
struct Cli {
    /// Cartan family of the root system.
    #[arg(long, global = true, value_enum, default_value_t = FamilyArg::A)]
    family: FamilyArg,

    /// Rank of the root system.
    #[arg(long, global = true)]
    rank: Option<usize>,

    /// Output format; dot applies to the graph subcommand only.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OpArg {
    F,
    E,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a monomial and reprint it in canonical factor order.
    Normalize { monomial: String },

    /// Compress a monomial into its staircase class and report (lambda, s).
    Compress { monomial: String },

    /// Apply one lowering (f) or raising (e) operator to a monomial.
    Act {
        /// Operator to apply.
        #[arg(long, value_enum)]
        op: OpArg,
        /// Index of the simple root, between 1 and the rank.
        #[arg(long)]
        index: usize,
        monomial: String,
    },

    /// Print the reversed tableau of the compressed monomial.
    Tableau { monomial: String },

    /// Print the lattice path read off the compressed monomial's tableau.
    Path { monomial: String },

    /// Explore the connected crystal component of a monomial.
    Graph {
        /// Maximum number of nodes to explore.
        #[arg(long)]
        cap: Option<usize>,
        monomial: String,
    },

    /// Check that compression preserves the crystal component.
    Verify {
        /// Maximum number of nodes to explore.
        #[arg(long)]
        cap: Option<usize>,
        monomial: String,
    },

    /// Insert the second monomial into the first through the star product.
    Insert {
        /// Also compare the result's component with the tensor component.
        #[arg(long)]
        verify: bool,
        monomial1: String,
        monomial2: String,
    },
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::C => Family::C,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let Some(rank) = cli.rank else {
        eprintln!("error: --rank is required");
        return Ok(ExitCode::from(1));
    };
    let spec = RankSpec::new(cli.family.into(), rank);
    spec.validate()?;

    if cli.format == FormatArg::Dot && !matches!(cli.command, Command::Graph { .. }) {
        eprintln!("error: --format dot is only available for the graph subcommand");
        return Ok(ExitCode::from(1));
    }

    match &cli.command {
        Command::Normalize { monomial } => {
            let m = parse_monomial(spec, monomial)?;
            emit_monomial(cli.format, &m);
            Ok(ExitCode::SUCCESS)
        }
        Command::Compress { monomial } => {
            let m = parse_monomial(spec, monomial)?;
            let matrix = ExpoMatrix::encode(&m)?.compress()?;
            emit_compressed(cli.format, &matrix)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Act { op, index, monomial } => {
            let m = parse_monomial(spec, monomial)?;
            let result = match op {
                OpArg::F => m.f(*index)?,
                OpArg::E => m.e(*index)?,
            };
            match cli.format {
                FormatArg::Json => {
                    let value = match result {
                        Some(r) => serde_json::json!({ "result": r.to_string() }),
                        None => serde_json::json!({ "result": null }),
                    };
                    println!("{value}");
                }
                _ => match result {
                    Some(r) => println!("{r}"),
                    None => println!("undefined"),
                },
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Tableau { monomial } => {
            let m = parse_monomial(spec, monomial)?;
            let tableau = compress_to_tableau(&m)?;
            match cli.format {
                FormatArg::Json => println!("{}", tableau.to_json()),
                _ => {
                    let text = tableau.to_text();
                    if !text.is_empty() {
                        println!("{text}");
                    }
                    if tableau.is_unnormalized() {
                        println!("(unnormalized)");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Path { monomial } => {
            let m = parse_monomial(spec, monomial)?;
            let path = compress_to_tableau(&m)?.to_path()?;
            match cli.format {
                FormatArg::Json => println!("{}", path.to_json()),
                _ => {
                    for segment in path.segments() {
                        let parts: Vec<String> = segment.iter().map(i64::to_string).collect();
                        println!("{}", parts.join(" "));
                    }
                    let endpoint: Vec<String> =
                        path.endpoint().iter().map(i64::to_string).collect();
                    println!("endpoint = {}", endpoint.join(" "));
                    println!("endpoint weight = {}", path.endpoint_weight()?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Graph { cap, monomial } => {
            let m = parse_monomial(spec, monomial)?;
            let graph = explore_component(&m, resolve_cap(*cap)?)?;
            match cli.format {
                FormatArg::Json => println!("{}", graph.to_json()),
                FormatArg::Dot => print!("{}", graph_to_dot(&graph)),
                FormatArg::Text => {
                    println!("nodes = {}", graph.node_count());
                    println!("edges = {}", graph.edges.len());
                    println!("root = {}", graph.root);
                    for (src, i, dst) in &graph.edges {
                        println!("{src} --{i}--> {dst}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { cap, monomial } => {
            let cap = resolve_cap(*cap)?;
            let m = parse_monomial(spec, monomial)?;
            let matrix = ExpoMatrix::encode(&m)?.compress()?;
            let compressed = matrix.decode()?;
            let (lambda, s) = matrix.staircase_params().ok_or_else(|| {
                Error::Invariant("compression did not reach a staircase class".into())
            })?;
            let original = explore_component(&m, cap)?;
            let image = explore_component(&compressed, cap)?;
            let verdict = is_isomorphic(&original, &image)?;
            match cli.format {
                FormatArg::Json => {
                    let value = serde_json::json!({
                        "component_nodes": original.node_count(),
                        "compressed_nodes": image.node_count(),
                        "lambda": lambda.lambda,
                        "s": s,
                        "isomorphic": verdict,
                    });
                    println!("{value}");
                }
                _ => {
                    println!("component nodes = {}", original.node_count());
                    println!("compressed component nodes = {}", image.node_count());
                    println!("lambda = {lambda}");
                    println!("s = {s}");
                    println!("isomorphic = {verdict}");
                }
            }
            Ok(if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Insert {
            verify,
            monomial1,
            monomial2,
        } => {
            let m1 = parse_monomial(spec, monomial1)?;
            let m2 = parse_monomial(spec, monomial2)?;
            let result = insert(&m1, &m2)?;
            let matrix = ExpoMatrix::encode(&result)?;
            emit_compressed(cli.format, &matrix)?;
            if !verify {
                return Ok(ExitCode::SUCCESS);
            }
            let cap = resolve_cap(None)?;
            let tensor = Tensor::new(m1, m2)?;
            let tensor_graph = explore_component(&tensor, cap)?;
            let result_graph = explore_component(&result, cap)?;
            let verdict = is_isomorphic(&tensor_graph, &result_graph)?;
            match cli.format {
                FormatArg::Json => {
                    let value = serde_json::json!({
                        "tensor_nodes": tensor_graph.node_count(),
                        "insert_nodes": result_graph.node_count(),
                        "isomorphic": verdict,
                    });
                    println!("{value}");
                }
                _ => {
                    println!("tensor component nodes = {}", tensor_graph.node_count());
                    println!("insert component nodes = {}", result_graph.node_count());
                    println!("isomorphic = {verdict}");
                }
            }
            Ok(if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

/// Node cap precedence: --cap flag, then CRYSTAL_NODE_CAP, then the default.
fn resolve_cap(flag: Option<usize>) -> Result<usize> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("CRYSTAL_NODE_CAP") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("CRYSTAL_NODE_CAP must be a nonnegative integer, got {raw:?}"),
        }),
        Err(_) => Ok(DEFAULT_NODE_CAP),
    }
}

fn compress_to_tableau(m: &Monomial) -> Result<monocrystal::Tableau> {
    let matrix = ExpoMatrix::encode(m)?.compress()?;
    monocrystal::Tableau::from_matrix(&matrix)
}

fn emit_monomial(format: FormatArg, m: &Monomial) {
    match format {
        FormatArg::Json => println!("{}", serde_json::json!({ "monomial": m.to_string() })),
        _ => println!("{m}"),
    }
}

fn emit_compressed(format: FormatArg, matrix: &ExpoMatrix) -> Result<()> {
    let monomial = matrix.decode()?;
    let (lambda, s) = matrix
        .staircase_params()
        .ok_or_else(|| Error::Invariant("compression did not reach a staircase class".into()))?;
    match format {
        FormatArg::Json => {
            let value = serde_json::json!({
                "monomial": monomial.to_string(),
                "lambda": lambda.lambda,
                "s": s,
                "matrix": matrix.to_json(),
            });
            println!("{value}");
        }
        _ => {
            println!("N = {monomial}");
            println!("lambda = {lambda}");
            println!("s = {s}");
            print!("{}", matrix.to_text());
        }
    }
    Ok(())
}

fn graph_to_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n");
    out.push_str("  rankdir=TB;\n");
    for (key, weight) in &graph.nodes {
        let shape = if *key == graph.root {
            " shape=box"
        } else {
            ""
        };
        out.push_str(&format!(
            "  \"{key}\" [label=\"{key}\\nwt {weight}\"{shape}];\n"
        ));
    }
    for (src, i, dst) in &graph.edges {
        out.push_str(&format!("  \"{src}\" -> \"{dst}\" [label=\"{i}\"];\n"));
    }
    out.push_str("}\n");
    out
}
