//! Brushing numbers by exhaustive orientation search, and the minimum path
//! cover of one fixed acyclic orientation.
//!
//!     cargo run --example brushing

use zfbrush::families;
use zfbrush::graph::Orientation;
use zfbrush::{brushing_number, min_path_edge_cover, verify_brush_witness, Budget};

fn main() -> zfbrush::Result<()> {
    for (name, g) in [
        ("P4", families::path(4)),
        ("C5", families::cycle(5)),
        ("K_{1,3}", families::star(3)),
        ("K4", families::complete(4)),
    ] {
        let b = brushing_number(&g, Budget::unlimited())?;
        verify_brush_witness(&g, &b.witness).expect("solver witnesses always verify");
        println!("{name}: B = {} (orientation #{})", b.b, b.orientation_index);
        for p in &b.witness.paths {
            println!("  {p:?}");
        }
    }

    // every arc out of the center of an out-star needs its own path
    let star = families::star(4);
    let out = Orientation::from_mask(&star, 0);
    println!("out-star cover: {}", min_path_edge_cover(&out)?.count);
    Ok(())
}
