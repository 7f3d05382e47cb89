//! Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
//! disagreement, 2 a usage error, 3 a resource cap.

pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::aut::{
    brute_force_aut, search_automorphisms, twin_lower_bound_order, SearchOptions,
    DEFAULT_NODE_BUDGET,
};
use crate::error::Error;
use crate::graph::io::{read_graph, Format};
use crate::graph::Graph;
use crate::injection::{full_map, map_to_json, verify_map, InjectionInstance};
use crate::powergraph::build_power_graph;
use crate::theorem::classes::check_class_preservation_with;
use crate::theorem::{
    aut_order_formula, check_neighborhood_counts, check_prime_degree_dominance, CheckReport, Status,
};
use verify::{power_graph_source, run_verify, Method, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREEMENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "pgaut",
    version,
    about = "Power graphs of Z_n and their automorphism groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dot,
    Dimacs,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::Edgelist,
            FormatArg::Dot => Format::Dot,
            FormatArg::Dimacs => Format::Dimacs,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "2.2")]
    Injection,
    #[value(name = "2.3")]
    Dominance,
    #[value(name = "2.4")]
    Neighborhoods,
    #[value(name = "2.5")]
    Classes,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write the power graph of Z_n.
    Build {
        n: u64,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Order of the automorphism group of P(Z_n) or of a graph file.
    Aut {
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "ir")]
        method: Method,
        /// Read the graph from a file instead (edgelist, dimacs or json).
        #[arg(long, conflicts_with = "n")]
        graph: Option<PathBuf>,
        /// Format of `--graph`; inferred from the extension when omitted.
        #[arg(long, value_enum)]
        graph_format: Option<FormatArg>,
        /// Vertex count for edge lists whose last vertices are isolated.
        #[arg(long)]
        vertices: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Compare orders from several methods for every n in a range.
    Verify {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "formula,twin,ir"
        )]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value = "json")]
        report: ReportFormat,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Run one of the supporting checks.
    Lemmas {
        #[arg(long, value_enum)]
        which: Which,
        /// Strictly decreasing values m_1,...,m_k (injection only).
        #[arg(long, value_delimiter = ',')]
        ms: Vec<u64>,
        /// Marker value m (injection only).
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_resource_cap() {
            EXIT_RESOURCE
        } else {
            EXIT_USAGE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        usage(e.to_string())
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => out.write_all(bytes).map_err(Failure::from),
    }
}

fn json_line(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s.into_bytes()
}

fn cmd_build(
    n: u64,
    format: Format,
    path: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let g = build_power_graph(n)?;
    emit(out, path, &g.export(format))?;
    Ok(EXIT_OK)
}

fn load_graph(
    path: &PathBuf,
    format: Option<FormatArg>,
    vertices: Option<usize>,
) -> Result<Graph, Failure> {
    let format = match format {
        Some(f) => f.into(),
        None => Format::from_path(path)
            .ok_or_else(|| usage(format!("cannot infer the format of {}", path.display())))?,
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(read_graph(&text, format, vertices)?.graph)
}

fn cmd_aut(
    n: Option<u64>,
    method: Method,
    graph: Option<&PathBuf>,
    graph_format: Option<FormatArg>,
    vertices: Option<usize>,
    budget: u64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let opts = SearchOptions {
        node_budget: budget,
    };
    let mut report = serde_json::Map::new();
    let g = match (n, graph) {
        (Some(n), None) => {
            report.insert("n".into(), json!(n));
            if method == Method::Formula {
                None
            } else {
                Some(build_power_graph(n)?.into_graph())
            }
        }
        (None, Some(path)) => {
            if method == Method::Formula {
                return Err(usage("the formula method applies to P(Z_n) only; pass n"));
            }
            let g = load_graph(path, graph_format, vertices)?;
            report.insert("graph".into(), json!(path.display().to_string()));
            report.insert("vertices".into(), json!(g.vertex_count()));
            Some(g)
        }
        _ => return Err(usage("pass either n or --graph")),
    };
    report.insert("method".into(), json!(method.name()));
    match method {
        Method::Formula => {
            let d = aut_order_formula(n.expect("n given"))?;
            report.insert("order".into(), json!(d.order.to_string()));
            report.insert("decomposition".into(), d.to_json());
        }
        Method::Twin => {
            let order = twin_lower_bound_order(g.as_ref().expect("graph"));
            report.insert("order".into(), json!(order.to_string()));
        }
        Method::Ir => {
            let r = search_automorphisms(g.as_ref().expect("graph"), opts)?;
            report.insert("order".into(), json!(r.group.order().to_string()));
            report.insert("generators".into(), json!(r.group.generators().len()));
            report.insert("nodes".into(), json!(r.stats.nodes));
        }
        Method::Brute => {
            let grp = brute_force_aut(g.as_ref().expect("graph"))?;
            report.insert("order".into(), json!(grp.order().to_string()));
        }
    }
    emit(out, None, &json_line(&Value::Object(report)))?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    from: u64,
    to: u64,
    methods: Vec<Method>,
    report: ReportFormat,
    jobs: usize,
    path: Option<&PathBuf>,
    budget: u64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if from < 2 || from > to {
        return Err(usage(format!(
            "need 2 <= --from <= --to, got {from} and {to}"
        )));
    }
    if methods.is_empty() {
        return Err(usage("--methods must name at least one method"));
    }
    let cfg = VerifyConfig {
        from,
        to,
        methods,
        jobs,
        options: SearchOptions {
            node_budget: budget,
        },
    };
    let r = run_verify(&cfg, &power_graph_source)?;
    let bytes = match report {
        ReportFormat::Json => json_line(&serde_json::to_value(&r).expect("report serializes")),
        ReportFormat::Csv => r.to_csv().into_bytes(),
    };
    emit(out, path, &bytes)?;
    Ok(r.exit_code())
}

fn report_exit(r: &CheckReport, out: &mut dyn Write) -> Result<i32, Failure> {
    emit(out, None, &json_line(&r.to_json()))?;
    Ok(if r.status == Status::Fail {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    })
}

fn cmd_lemmas(
    which: Which,
    ms: Vec<u64>,
    m: Option<u64>,
    n: Option<u64>,
    budget: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let need_n = || n.ok_or_else(|| usage("this check needs --n"));
    match which {
        Which::Injection => {
            let m = m.ok_or_else(|| usage("the injection needs --m"))?;
            let inst = InjectionInstance::new(ms, m)?;
            let map = full_map(&inst);
            let problems = verify_map(&inst, &map);
            emit(out, None, &json_line(&map_to_json(&inst, &map)))?;
            for p in &problems {
                writeln!(err, "violation: {p}")?;
            }
            Ok(if problems.is_empty() {
                EXIT_OK
            } else {
                EXIT_DISAGREEMENT
            })
        }
        Which::Dominance => report_exit(&check_prime_degree_dominance(need_n()?)?, out),
        Which::Neighborhoods => report_exit(&check_neighborhood_counts(need_n()?)?, out),
        Which::Classes => {
            let opts = SearchOptions {
                node_budget: budget,
            };
            report_exit(&check_class_preservation_with(need_n()?, opts)?, out)
        }
    }
}

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Build {
            n,
            format,
            out: path,
        } => cmd_build(n, format.into(), path.as_ref(), out),
        Command::Aut {
            n,
            method,
            graph,
            graph_format,
            vertices,
            budget,
        } => cmd_aut(
            n,
            method,
            graph.as_ref(),
            graph_format,
            vertices,
            budget,
            out,
        ),
        Command::Verify {
            from,
            to,
            methods,
            report,
            jobs,
            out: path,
            budget,
        } => cmd_verify(from, to, methods, report, jobs, path.as_ref(), budget, out),
        Command::Lemmas {
            which,
            ms,
            m,
            n,
            budget,
        } => cmd_lemmas(which, ms, m, n, budget, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
