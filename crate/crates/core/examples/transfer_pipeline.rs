//! The transfer pipeline step by step: forcing chains on L(G), the partial
//! orientation they induce, its acyclic extension, the brush witness and the
//! forcing set Y of G. Ends by writing and re-verifying the JSON witness.
//!
//!     cargo run --example transfer_pipeline

use zfbrush::families;
use zfbrush::witness::{verify_document, WitnessDocument};
use zfbrush::{transfer, Budget};

fn main() -> zfbrush::Result<()> {
    let g = families::complete_bipartite(2, 3);
    let r = transfer(&g, Budget::unlimited())?;

    println!("edges: {:?}", g.edges());
    println!(
        "Z(L(G)) = {}, forcing edges Z = {:?}",
        r.k(),
        r.z_edges
            .iter()
            .map(|&e| g.endpoints(e))
            .collect::<Vec<_>>()
    );
    for (i, chain) in r.chains.chains.iter().enumerate() {
        let ends: Vec<_> = chain.iter().map(|&e| g.endpoints(e)).collect();
        println!("chain {i}: {ends:?}");
    }
    println!("split (chains with two or more edges): {}", r.chains.split);
    println!("partial orientation: {:?}", r.partial.arc_list());
    println!("topological order: {:?}", r.order.as_slice());
    println!("full orientation: {:?}", r.full.arc_list());
    for p in &r.brush_witness.paths {
        println!("brush path {p:?}");
    }
    println!("Y = {:?} (|Y| = {} <= {})", r.y, r.y.len(), r.k());
    for (u, v) in &r.y_process.events {
        println!("  {u} forces {v}");
    }
    for (name, ok) in r.checks.named() {
        println!("check {name}: {ok}");
    }

    let doc = WitnessDocument::from_result(&r)?;
    let json = doc.to_json();
    let back = WitnessDocument::from_json(&json)?;
    println!(
        "re-verified witness: {} failing clauses",
        verify_document(&back).len()
    );
    print!("{}", r.full.to_dot("K23"));
    Ok(())
}
