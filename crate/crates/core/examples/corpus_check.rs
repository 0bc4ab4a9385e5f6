//! Runs every check over the shipped corpus of connected graphs on at most
//! five vertices and prints the summary and one CSV line per graph.
//!
//!     cargo run --release --example corpus_check

use zfbrush::corpus::{run_corpus, CorpusOptions};
use zfbrush::format::parse_graph6_lines;

fn main() -> zfbrush::Result<()> {
    let graphs = parse_graph6_lines(include_str!("../data/connected_n2_5.g6"))?;
    let opts = CorpusOptions {
        random_processes: 5,
        seed: 42,
        jobs: 4,
        ..Default::default()
    };
    let report = run_corpus(&graphs, &opts)?;
    let s = &report.summary;
    println!(
        "{} graphs, {} violations, {} errors, exact B on {}, |Y| < Z(L(G)) on {}",
        s.graphs, s.violations, s.errors, s.exact_b, s.y_below_k
    );
    println!(
        "largest Z(L(G)) - B(G): {:?}, largest Z(L(G)) - Z(G): {:?}",
        s.max_gap_b, s.max_gap_z
    );
    print!("{}", report.to_csv()?);
    Ok(())
}
