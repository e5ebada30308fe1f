//! Command-line front end.
//!
//! [`run`] does all the work and returns the exit code together with the
//! text meant for stdout, so the binary is a thin wrapper and the commands
//! can be driven from tests.
//!
//! Exit codes: 0 accept, 1 reject, 2 input error, 3 size or time limit hit,
//! 4 internal error.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::colored::{color_line_graph, validate_proper, EdgeColoredGraph};
use crate::error::{Error, Result};
use crate::fixtures::{self, Fixture};
use crate::graph::{Graph, VertexSet};
use crate::io::{
    input_hash, parse_bigraph, parse_colored_edge_list, parse_edge_list, parse_graph6, write_colored_edge_list,
    write_edge_list, write_graph6,
};
use crate::line::{krausz_from_root, recognize_line_graph, LineCertificate};
use crate::oracle::{oracle_k_color_line_with, oracle_proper_k_color_line_with, reduce_line_bigraph_to_2cl, Budget};
use crate::recognize::{
    build_root_from_krausz, check_krausz_color, check_krausz_proper, check_partition_characterization,
    cubic_proper_root, recognize_proper_2, recognize_proper_k, ColorLineRoot, KrauszCheck, KrauszFamily,
    ProperCertificate, VertexCliquePartition,
};

pub const EXIT_ACCEPT: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "colorline", version, about = "Color-line graph construction and recognition")]
pub struct Cli {
    /// Read graph inputs as graph6 instead of an edge list.
    #[arg(long, global = true)]
    pub graph6: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color-line graph of a colored edge list, written as an edge list.
    Cl {
        input: Option<PathBuf>,
        /// Write vertex provenance and edge kinds as JSON to this file.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Decide whether the input is a line graph.
    RecognizeLine { input: Option<PathBuf> },
    /// Decide whether the input is a proper k-color-line graph.
    RecognizeProperK {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        input: Option<PathBuf>,
    },
    /// Decide whether the input is a proper 2-color-line graph.
    #[command(name = "recognize-proper-2")]
    RecognizeProper2 { input: Option<PathBuf> },
    /// Proper root of a bridgeless cubic graph.
    CubicRoot { input: Option<PathBuf> },
    /// Check a clique family given as JSON and build the root it describes.
    CheckKrausz {
        #[arg(long)]
        proper: bool,
        /// JSON object with `cliques`, `edge_map` (`[u, v, member]` triples) and `vertex_map`.
        #[arg(long)]
        family: PathBuf,
        input: Option<PathBuf>,
    },
    /// Test a vertex clique partition given as a JSON list of classes.
    CheckPartition {
        #[arg(long)]
        classes: PathBuf,
        input: Option<PathBuf>,
    },
    /// Exhaustive search; `COLORLINE_BUDGET_SECS` caps the running time.
    Oracle {
        #[arg(long, value_enum)]
        mode: OracleMode,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        input: Option<PathBuf>,
    },
    /// Gadget graph for a bipartite instance (`nx ny m` then `i j` lines).
    ReduceBigraph { input: Option<PathBuf> },
    /// Named example graphs.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleMode {
    /// Any coloring with at most k colors.
    Kcl,
    /// Proper colorings with at most k colors.
    Proper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    EdgeList,
    Graph6,
}

#[derive(Debug, Subcommand)]
pub enum FixtureAction {
    List,
    Emit {
        name: String,
        #[arg(long, value_enum, default_value = "edge-list")]
        format: OutputFormat,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// JSON document emitted by the recognizers.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateDocument {
    pub tool_version: &'static str,
    pub input_hash: String,
    pub accept: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_used: Option<usize>,
    /// Colored edge list of the root.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
    /// Colors of the root edges in edge-list order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_to_edge: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refusal: Option<Value>,
}

impl CertificateDocument {
    fn accept(g: &Graph, root: &ColorLineRoot) -> Self {
        CertificateDocument {
            tool_version: env!("CARGO_PKG_VERSION"),
            input_hash: input_hash(g),
            accept: true,
            k_used: Some(root.k_used()),
            root: Some(write_colored_edge_list(&root.root)),
            coloring: Some(root.coloring().to_vec()),
            vertex_to_edge: Some(root.vertex_to_edge.clone()),
            refusal: None,
        }
    }

    fn reject(g: &Graph, reason: &str, witness: Value) -> Self {
        CertificateDocument {
            tool_version: env!("CARGO_PKG_VERSION"),
            input_hash: input_hash(g),
            accept: false,
            k_used: None,
            root: None,
            coloring: None,
            vertex_to_edge: None,
            refusal: Some(json!({ "reason": reason, "witness": witness })),
        }
    }

    fn from_proper(g: &Graph, cert: &ProperCertificate) -> Self {
        match cert {
            ProperCertificate::Accept(root) => Self::accept(g, root),
            ProperCertificate::Reject(refusal) => {
                let mut doc = Self::reject(g, "", Value::Null);
                doc.refusal = Some(serde_json::to_value(refusal).expect("refusals serialize"));
                doc
            }
        }
    }

    fn outcome(&self) -> Outcome {
        Outcome {
            code: if self.accept { EXIT_ACCEPT } else { EXIT_REJECT },
            stdout: to_json(self),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Exit code for a failed run.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::VertexOutOfRange { .. } | Error::InvalidArgument(_) => EXIT_INPUT,
        Error::Capability { .. } | Error::BudgetExceeded(_) => EXIT_LIMIT,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn read_text(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Error::invalid(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::invalid(format!("cannot read stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))
}

/// Runs one command. Errors become exit codes with an empty stdout.
pub fn run(cli: &Cli, stdin: &mut dyn Read) -> (Outcome, Option<Error>) {
    match dispatch(cli, stdin) {
        Ok(out) => (out, None),
        Err(e) => (
            Outcome {
                code: exit_code(&e),
                stdout: String::new(),
            },
            Some(e),
        ),
    }
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let read_graph = |path: &Option<PathBuf>, stdin: &mut dyn Read| -> Result<Graph> {
        let text = read_text(path.as_deref(), stdin)?;
        if cli.graph6 {
            parse_graph6(&text)
        } else {
            parse_edge_list(&text)
        }
    };
    match &cli.command {
        Command::Cl { input, sidecar } => {
            let h = parse_colored_edge_list(&read_text(input.as_deref(), stdin)?)?;
            cl(&h, sidecar.as_deref())
        }
        Command::RecognizeLine { input } => recognize_line(&read_graph(input, stdin)?),
        Command::RecognizeProperK { k, input } => {
            let g = read_graph(input, stdin)?;
            Ok(CertificateDocument::from_proper(&g, &recognize_proper_k(&g, *k as usize)?).outcome())
        }
        Command::RecognizeProper2 { input } => {
            let g = read_graph(input, stdin)?;
            Ok(CertificateDocument::from_proper(&g, &recognize_proper_2(&g)?).outcome())
        }
        Command::CubicRoot { input } => {
            let g = read_graph(input, stdin)?;
            Ok(CertificateDocument::from_proper(&g, &cubic_proper_root(&g)?).outcome())
        }
        Command::CheckKrausz { proper, family, input } => {
            let mut fam: KrauszFamily = read_json(family)?;
            let g = read_graph(input, stdin)?;
            let check = if *proper {
                fam.edge_map.clear();
                check_krausz_proper(&g, &fam)?
            } else {
                check_krausz_color(&g, &fam)?
            };
            let doc = match check {
                KrauszCheck::Holds => CertificateDocument::accept(&g, &build_root_from_krausz(&g, &fam)?),
                KrauszCheck::Fails(clause) => {
                    CertificateDocument::reject(&g, "krausz_condition", json!({ "clause": clause }))
                }
            };
            Ok(doc.outcome())
        }
        Command::CheckPartition { classes, input } => {
            let classes: Vec<VertexSet> = read_json(classes)?;
            let g = read_graph(input, stdin)?;
            check_partition(&g, classes)
        }
        Command::Oracle { mode, k, input } => {
            let g = read_graph(input, stdin)?;
            let budget = Budget::from_env()?;
            let k = *k as usize;
            let found = match mode {
                OracleMode::Kcl => oracle_k_color_line_with(&g, k, &budget)?,
                OracleMode::Proper => oracle_proper_k_color_line_with(&g, k, &budget)?,
            };
            let doc = match found {
                Some(root) => CertificateDocument::accept(&g, &root),
                None => CertificateDocument::reject(&g, "exhausted_partitions", json!({ "k": k })),
            };
            Ok(doc.outcome())
        }
        Command::ReduceBigraph { input } => {
            let b = parse_bigraph(&read_text(input.as_deref(), stdin)?)?;
            Ok(Outcome {
                code: EXIT_ACCEPT,
                stdout: write_edge_list(&reduce_line_bigraph_to_2cl(&b)?),
            })
        }
        Command::Fixtures { action } => fixture_command(action),
    }
}

fn cl(h: &EdgeColoredGraph, sidecar: Option<&Path>) -> Result<Outcome> {
    let result = color_line_graph(h)?;
    if let Some(path) = sidecar {
        let doc = json!({
            "edge_of_vertex": result.edge_of_vertex,
            "l_edges": result.l_edges,
            "c_edges": result.c_edges,
            "proper": validate_proper(h),
        });
        std::fs::write(path, to_json(&doc)).map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(Outcome {
        code: EXIT_ACCEPT,
        stdout: write_edge_list(&result.cl),
    })
}

fn recognize_line(g: &Graph) -> Result<Outcome> {
    let doc = match recognize_line_graph(g)? {
        LineCertificate::Root(root) => json!({
            "tool_version": env!("CARGO_PKG_VERSION"),
            "input_hash": input_hash(g),
            "is_line": true,
            "root": write_edge_list(&root.root),
            "vertex_to_edge": root.vertex_to_edge,
            "krausz": krausz_from_root(&root).cliques,
        }),
        LineCertificate::Refusal(v) => json!({
            "tool_version": env!("CARGO_PKG_VERSION"),
            "input_hash": input_hash(g),
            "is_line": false,
            "violation": { "catalog_index": v.catalog_index, "embedding": v.embedding },
        }),
    };
    let code = if doc["is_line"] == true { EXIT_ACCEPT } else { EXIT_REJECT };
    Ok(Outcome {
        code,
        stdout: to_json(&doc),
    })
}

fn check_partition(g: &Graph, classes: Vec<VertexSet>) -> Result<Outcome> {
    let p = VertexCliquePartition { classes };
    let doc = match check_partition_characterization(g, &p)? {
        Some(root) => CertificateDocument::accept(g, &root),
        None => {
            let mut residual = g.clone();
            for &c in &p.classes {
                residual.delete_edges_within(c);
            }
            let witness = match recognize_line_graph(&residual)? {
                LineCertificate::Refusal(v) => json!({ "catalog_index": v.catalog_index, "embedding": v.embedding }),
                LineCertificate::Root(_) => return Err(Error::internal("residual is a line graph after all")),
            };
            CertificateDocument::reject(g, "residual_not_line", witness)
        }
    };
    Ok(doc.outcome())
}

fn fixture_command(action: &FixtureAction) -> Result<Outcome> {
    let stdout = match action {
        FixtureAction::List => fixtures::NAMES.iter().map(|n| format!("{n}\n")).collect(),
        FixtureAction::Emit { name, format } => {
            let fixture = fixtures::by_name(name).ok_or_else(|| Error::invalid(format!("unknown fixture `{name}`")))?;
            match (fixture, format) {
                (Fixture::Plain(g), OutputFormat::EdgeList) => write_edge_list(&g),
                (Fixture::Plain(g), OutputFormat::Graph6) => write_graph6(&g) + "\n",
                (Fixture::Colored(h), OutputFormat::EdgeList) => write_colored_edge_list(&h),
                (Fixture::Colored(h), OutputFormat::Graph6) => {
                    log::warn!("graph6 drops the edge colors of `{name}`");
                    write_graph6(h.graph()) + "\n"
                }
            }
        }
    };
    Ok(Outcome {
        code: EXIT_ACCEPT,
        stdout,
    })
}
