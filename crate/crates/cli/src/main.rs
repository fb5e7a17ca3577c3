use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use gallai_core::graph::{parse_edge_list, parse_graph6, to_graph6, Graph};
use gallai_core::harness::{crosscheck, Check};
use gallai_core::operators::{anti_gallai, apex_embedding, gallai, line_graph, LabeledGraph};
use gallai_core::recognition::{is_gallai_forest_by, is_gallai_tree, Pattern, Question, Route, VerdictRecord};

/// Line, Gallai and anti-Gallai graphs, and certified recognition of graphs
/// whose Gallai graph is a forest or a tree.
#[derive(Parser, Debug)]
#[command(name = "gallai", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Replace every input graph by a derived graph.
    Transform {
        #[arg(value_enum)]
        operator: Operator,
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short, value_enum, default_value = "graph6")]
        output: OutputFormat,
    },
    /// Decide whether the Gallai graph of each input is a forest or a tree.
    Recognize {
        #[arg(value_enum)]
        question: QuestionArg,
        #[arg(long, value_enum, default_value = "characterization")]
        route: RouteArg,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Build the apex graph whose Gallai graph contains each input as an induced subgraph.
    Embed {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, short, value_enum, default_value = "json")]
        output: OutputFormat,
    },
    /// Sweep all small graphs and compare independent computations.
    Crosscheck {
        #[arg(value_enum)]
        check: CheckArg,
        #[arg(long)]
        n_max: usize,
        /// Sweep one graph per isomorphism class instead of every labeled graph.
        #[arg(long)]
        dedup: bool,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the pattern catalog as graph6 strings and edge lists.
    Patterns,
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Input file, or "-" for standard input.
    #[arg(default_value = "-")]
    path: String,
    #[arg(long, short, value_enum, default_value = "graph6")]
    format: InputFormat,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Operator {
    Gallai,
    AntiGallai,
    Line,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Graph6,
    Dot,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum QuestionArg {
    Forest,
    Tree,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RouteArg {
    Direct,
    Characterization,
    Structural,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckArg {
    Thm1,
    Thm2,
    Prop1,
    Heredity,
    Embedding,
}

impl From<CheckArg> for Check {
    fn from(c: CheckArg) -> Self {
        match c {
            CheckArg::Thm1 => Check::Forest,
            CheckArg::Thm2 => Check::TreeRoutes,
            CheckArg::Prop1 => Check::Connectivity,
            CheckArg::Heredity => Check::Heredity,
            CheckArg::Embedding => Check::Embedding,
        }
    }
}

/// A failure that ends the run with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    if path == "-" {
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure(format!("cannot read standard input: {e}")))?;
    } else {
        text = fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {path}: {e}")))?;
    }
    Ok(text)
}

/// One graph per non-blank line for graph6; blank-line separated blocks for edge lists.
fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let text = read_input(&args.path)?;
    match args.format {
        InputFormat::Graph6 => text
            .lines()
            .enumerate()
            .filter_map(|(i, line)| {
                let line = line.trim();
                let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
                (!line.is_empty()).then_some((i + 1, line))
            })
            .map(|(no, line)| parse_graph6(line).map_err(|e| Failure(format!("line {no}: {e}"))))
            .collect(),
        InputFormat::Edgelist => {
            let mut graphs = Vec::new();
            let mut block = String::new();
            let mut block_start = 1;
            for (i, line) in text.lines().chain(std::iter::once("")).enumerate() {
                if line.trim().is_empty() {
                    if !block.trim().is_empty() {
                        let g = parse_edge_list(&block)
                            .map_err(|e| Failure(format!("graph starting at line {block_start}: {e}")))?;
                        graphs.push(g);
                    }
                    block.clear();
                    block_start = i + 2;
                } else {
                    block.push_str(line);
                    block.push('\n');
                }
            }
            Ok(graphs)
        }
    }
}

fn plain_dot(g: &Graph, highlight: Option<usize>) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        if Some(v) == highlight {
            let _ = writeln!(out, "  {v} [shape=doublecircle];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push('}');
    out
}

fn transform(operator: Operator, input: &InputArgs, output: OutputFormat) -> Result<(Vec<String>, u8), Failure> {
    let graphs = read_graphs(input)?;
    let derive = match operator {
        Operator::Gallai => gallai,
        Operator::AntiGallai => anti_gallai,
        Operator::Line => line_graph,
    };
    let name = match operator {
        Operator::Gallai => "gallai",
        Operator::AntiGallai => "anti-gallai",
        Operator::Line => "line",
    };
    let lines: Result<Vec<String>, Failure> = graphs
        .par_iter()
        .map(|g| {
            let d: LabeledGraph = derive(g)?;
            Ok(match output {
                OutputFormat::Graph6 => to_graph6(d.graph()),
                OutputFormat::Dot => d.to_dot(),
                OutputFormat::Json => json!({
                    "input": to_graph6(g),
                    "operator": name,
                    "graph6": to_graph6(d.graph()),
                    "labels": d.labels(),
                })
                .to_string(),
            })
        })
        .collect();
    Ok((lines?, 0))
}

fn recognize(question: QuestionArg, route: RouteArg, input: &InputArgs) -> Result<(Vec<String>, u8), Failure> {
    let question = match question {
        QuestionArg::Forest => Question::Forest,
        QuestionArg::Tree => Question::Tree,
    };
    let routes: Vec<Route> = match (route, question) {
        (RouteArg::Direct, _) => vec![Route::Direct],
        (RouteArg::Characterization, _) => vec![Route::Characterization],
        (RouteArg::Structural, Question::Tree) => vec![Route::Structural],
        (RouteArg::Structural, Question::Forest) => {
            return Err(Failure("the structural route only answers the tree question".into()));
        }
        (RouteArg::All, Question::Forest) => vec![Route::Direct, Route::Characterization],
        (RouteArg::All, Question::Tree) => Route::ALL.to_vec(),
    };
    let graphs = read_graphs(input)?;
    let results: Vec<Result<Vec<VerdictRecord>, Failure>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            routes
                .iter()
                .map(|&r| {
                    let verdict = match question {
                        Question::Forest => is_gallai_forest_by(g, r),
                        Question::Tree => is_gallai_tree(g, r),
                    }
                    .map_err(|e| Failure(format!("graph {}: {e}", i + 1)))?;
                    Ok(VerdictRecord::new(g, question, r, verdict))
                })
                .collect()
        })
        .collect();
    let mut lines = Vec::new();
    let mut all_true = true;
    for records in results {
        for record in records? {
            all_true &= record.answer;
            lines.push(record.to_json());
        }
    }
    Ok((lines, if all_true { 0 } else { 1 }))
}

fn embed(input: &InputArgs, output: OutputFormat) -> Result<(Vec<String>, u8), Failure> {
    let graphs = read_graphs(input)?;
    let mut lines = Vec::with_capacity(graphs.len());
    for h in &graphs {
        let emb = apex_embedding(h)?;
        lines.push(match output {
            OutputFormat::Json => json!({
                "input": to_graph6(h),
                "graph6": to_graph6(&emb.graph),
                "apex": emb.apex,
            })
            .to_string(),
            OutputFormat::Graph6 => format!("{} {}", to_graph6(&emb.graph), emb.apex),
            OutputFormat::Dot => plain_dot(&emb.graph, Some(emb.apex)),
        });
    }
    Ok((lines, 0))
}

fn patterns() -> Vec<String> {
    Pattern::ALL
        .iter()
        .map(|p| {
            let edges: Vec<String> = p.graph().edges().iter().map(ToString::to_string).collect();
            format!("{}\t{}\t{}", p.name(), to_graph6(p.graph()), edges.join(" "))
        })
        .collect()
}

fn run(cli: Cli) -> Result<(Vec<String>, u8), Failure> {
    match cli.command {
        Command::Transform { operator, input, output } => transform(operator, &input, output),
        Command::Recognize { question, route, input } => recognize(question, route, &input),
        Command::Embed { input, output } => embed(&input, output),
        Command::Crosscheck {
            check,
            n_max,
            dedup,
            threads,
        } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
            }
            let report = crosscheck(check.into(), n_max, dedup)?;
            let lines = report.to_json_lines().lines().map(str::to_owned).collect();
            Ok((lines, if report.passed() { 0 } else { 1 }))
        }
        Command::Patterns => Ok((patterns(), 0)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("gallai: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok((lines, code)) => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(code)
        }
        Err(Failure(message)) => {
            eprintln!("gallai: {message}");
            ExitCode::from(2)
        }
    }
}
