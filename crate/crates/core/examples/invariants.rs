//! Toughness, isolated toughness and connectivity of a few graphs.
//!
//! cargo run --example invariants [graph6...]

use ftk::connectivity::vertex_connectivity;
use ftk::graph::{complete_bipartite, cycle_graph, path_graph};
use ftk::graph6::{parse_graph6, write_graph6};
use ftk::invariants::{isolated_toughness, toughness};
use ftk::Graph;

fn show(g: &Graph) -> ftk::Result<()> {
    let t = toughness(g)?;
    let i = isolated_toughness(g)?;
    println!(
        "{:<12} n={:<2} kappa={:<2} t={:<5} (S={:?})  I={:<5} (S={:?})",
        write_graph6(g)?,
        g.n(),
        vertex_connectivity(g),
        t.value,
        t.witness.map(|s| s.to_vec()),
        i.value,
        i.witness.map(|s| s.to_vec()),
    );
    Ok(())
}

fn main() -> ftk::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if !args.is_empty() {
        for a in &args {
            show(&parse_graph6(a)?)?;
        }
        return Ok(());
    }
    show(&path_graph(5))?;
    show(&cycle_graph(8)?)?;
    show(&complete_bipartite(3, 5))?;
    // Petersen graph
    show(&parse_graph6("IheA@GUAo")?)?;
    Ok(())
}
