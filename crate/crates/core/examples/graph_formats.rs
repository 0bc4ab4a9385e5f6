//! Reading and writing graph6 and edge lists, and building graphs from
//! family specs.
//!
//!     cargo run --example graph_formats

use zfbrush::families::generate_family;
use zfbrush::format::{parse_graph6_lines, write_edgelist};
use zfbrush::{parse_edgelist, parse_graph6, write_graph6};

fn main() -> zfbrush::Result<()> {
    let g = parse_graph6(b">>graph6<<Cl\n")?;
    println!("Cl has {} vertices and edges {:?}", g.n(), g.edges());
    print!("as an edge list:\n{}", write_edgelist(&g));

    let h = parse_edgelist("5 4\n0 1\n1 2\n2 3\n3 4\n")?;
    println!("P5 in graph6: {}", write_graph6(&h)?);

    for spec in [
        "path:4",
        "cycle:5",
        "complete_bipartite:2,3",
        "random_gnp:7,0.5,11",
    ] {
        println!("{spec} -> {}", write_graph6(&generate_family(spec)?)?);
    }

    let corpus = parse_graph6_lines(include_str!("../data/connected_n2_5.g6"))?;
    println!("shipped n <= 5 corpus: {} connected graphs", corpus.len());

    match parse_graph6(b"Bh") {
        Err(e) => println!("Bh rejected: {e}"),
        Ok(_) => unreachable!("nonzero padding bits"),
    }
    Ok(())
}
