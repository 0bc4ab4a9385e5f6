//! Line graphs and their zero forcing numbers.
//!
//!     cargo run --example line_graph

use zfbrush::families;
use zfbrush::{line_graph, write_graph6, zero_forcing_number, Budget};

fn main() -> zfbrush::Result<()> {
    for (name, g) in [
        ("P4", families::path(4)),
        ("K_{1,3}", families::star(3)),
        ("C5", families::cycle(5)),
        ("K4", families::complete(4)),
    ] {
        let lg = line_graph(&g)?;
        let zg = zero_forcing_number(&g, Budget::unlimited())?.k;
        let zl = zero_forcing_number(&lg.graph, Budget::unlimited())?.k;
        println!(
            "{name}: L(G) = {} ({} vertices, {} edges), Z(G) = {zg}, Z(L(G)) = {zl}",
            write_graph6(&lg.graph)?,
            lg.graph.n(),
            lg.graph.m()
        );
        for e in g.edge_ids() {
            println!(
                "  edge {e} = {:?} is vertex {}",
                g.endpoints(e),
                lg.vertex_of(e)
            );
        }
    }
    Ok(())
}
