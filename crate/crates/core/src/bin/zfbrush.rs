use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zfbrush::corpus::{run_corpus, CorpusOptions};
use zfbrush::families::generate_family;
use zfbrush::format::{parse_edgelist, parse_graph6_lines, write_graph6};
use zfbrush::witness::{verify_document, WitnessDocument};
use zfbrush::{brushing_number, line_graph, transfer, zero_forcing_number, Budget, Error, Graph};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "zfbrush",
    version,
    about = "Zero forcing, brushing and line-graph witness toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Input {
    /// Graph file, or `-` for standard input
    #[arg(default_value = "-")]
    graph: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Exact zero forcing number and first minimum forcing set
    Zf(Input),
    /// Exact brushing number with a path-cover witness
    Brush(Input),
    /// Line graph, written in the input format
    Linegraph(Input),
    /// Run the transfer pipeline and print the JSON witness
    Transfer {
        #[command(flatten)]
        input: Input,
        /// Also write the full orientation as DOT to this file
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Verify all checks on a corpus file or a family spec
    Corpus {
        /// graph6 file (one graph per line), `-`, or a family spec such as `cycle:6`
        source: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Wall-clock budget per graph per solver, in milliseconds
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format; defaults to the extension of --out, else JSON
        #[arg(long, value_enum)]
        report: Option<ReportFormat>,
        /// Exact B(G) only for graphs with at most this many edges
        #[arg(long, default_value_t = 12)]
        exact_brush_max_m: usize,
        /// Randomized line-graph processes to replay per component
        #[arg(long, default_value_t = 0)]
        random_process: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Include per-row timings (makes the report run-dependent)
        #[arg(long)]
        timings: bool,
    },
    /// Re-check a serialized transfer witness against its graph
    Verify {
        /// Witness JSON file, or `-`
        witness: String,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e.diagnostic() {
            Some(b) => Failure::Violation(format!("{e}\n{}", b.to_json())),
            None => Failure::Usage(e.to_string()),
        }
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
    }
}

fn read_graphs(path: &str, format: Format) -> Result<Vec<Graph>, Failure> {
    let text = read_source(path)?;
    Ok(match format {
        Format::Graph6 => parse_graph6_lines(&text)?,
        Format::Edgelist => vec![parse_edgelist(&text)?],
    })
}

fn read_one(input: &Input) -> Result<Graph, Failure> {
    let mut graphs = read_graphs(&input.graph, input.format)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        0 => Err(Failure::Usage("no graph in input".into())),
        k => Err(Failure::Usage(format!(
            "expected one graph, found {k}; use `corpus` for files"
        ))),
    }
}

fn set_string(s: &[usize]) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Zf(input) => {
            let g = read_one(&input)?;
            let z = zero_forcing_number(&g, Budget::unlimited())?;
            println!("{}", z.k);
            println!("witness {}", set_string(&z.witness));
        }
        Command::Brush(input) => {
            let g = read_one(&input)?;
            if g.m() == 0 {
                // the library refuses edgeless graphs; report the degenerate value
                println!("0");
                println!("degenerate (no edges)");
                return Ok(());
            }
            let b = brushing_number(&g, Budget::unlimited())?;
            println!("{}", b.b);
            for p in &b.witness.paths {
                let steps: Vec<String> = p.iter().map(ToString::to_string).collect();
                println!("path {}", steps.join(" -> "));
            }
        }
        Command::Linegraph(input) => {
            let g = read_one(&input)?;
            let lg = line_graph(&g)?;
            match input.format {
                Format::Graph6 => println!("{}", write_graph6(&lg.graph)?),
                Format::Edgelist => print!("{}", zfbrush::format::write_edgelist(&lg.graph)),
            }
        }
        Command::Transfer { input, dot } => {
            let g = read_one(&input)?;
            let r = transfer(&g, Budget::unlimited())?;
            println!("{}", WitnessDocument::from_result(&r)?.to_json());
            if let Some(path) = dot {
                fs::write(&path, r.full.to_dot("G"))
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Command::Corpus {
            source,
            format,
            budget,
            jobs,
            out,
            report,
            exact_brush_max_m,
            random_process,
            seed,
            timings,
        } => {
            let graphs = if source != "-" && !Path::new(&source).exists() && source.contains(':') {
                vec![generate_family(&source)?]
            } else {
                read_graphs(&source, format)?
            };
            let opts = CorpusOptions {
                budget_ms: budget,
                exact_brush_max_m,
                random_processes: random_process,
                seed,
                jobs,
                timings,
            };
            let rep = run_corpus(&graphs, &opts)?;
            let csv_by_name = out
                .as_ref()
                .is_some_and(|p| p.extension().is_some_and(|e| e == "csv"));
            let text = match report {
                Some(ReportFormat::Csv) => rep.to_csv()?,
                None if csv_by_name => rep.to_csv()?,
                _ => rep.to_json() + "\n",
            };
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            let s = &rep.summary;
            eprintln!(
                "{} graphs, {} violations, {} errors, {} with unknown B",
                s.graphs, s.violations, s.errors, s.unknown_b
            );
            for b in &rep.diagnostics {
                eprintln!("{}", b.to_json());
            }
            if s.failed {
                return Err(Failure::Violation("corpus run failed".into()));
            }
        }
        Command::Verify { witness } => {
            let text = read_source(&witness)?;
            let doc = WitnessDocument::from_json(&text)?;
            let failures = verify_document(&doc);
            if failures.is_empty() {
                println!("ok");
            } else {
                for f in &failures {
                    println!("{}: {}", f.clause, f.detail);
                }
                return Err(Failure::Violation(format!(
                    "{} clause(s) failed",
                    failures.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("zfbrush: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("zfbrush: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
