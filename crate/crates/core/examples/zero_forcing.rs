//! Zero forcing number of a few small graphs, with a recorded forcing process.
//!
//!     cargo run --example zero_forcing

use zfbrush::families;
use zfbrush::zero_forcing::minimum_zero_forcing_sets;
use zfbrush::{closure, record_process, zero_forcing_number, Budget};

fn main() -> zfbrush::Result<()> {
    for (name, g) in [
        ("P5", families::path(5)),
        ("C6", families::cycle(6)),
        ("K4", families::complete(4)),
        ("K_{2,3}", families::complete_bipartite(2, 3)),
        ("G(9, 0.4), seed 3", families::random_gnp(9, 0.4, 3)?),
    ] {
        let z = zero_forcing_number(&g, Budget::unlimited())?;
        let all = minimum_zero_forcing_sets(&g, Budget::unlimited())?;
        println!(
            "{name}: Z = {}, first minimum set {:?}, {} minimum sets",
            z.k,
            z.witness,
            all.len()
        );
        let p = record_process(&g, &z.witness)?;
        for (u, v) in &p.events {
            println!("  {u} forces {v}");
        }
    }

    // a non-forcing set stops early
    let g = families::cycle(6);
    println!("closure of {{0}} in C6: {:?}", closure(&g, &[0]));
    Ok(())
}
