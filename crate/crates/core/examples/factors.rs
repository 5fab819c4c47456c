//! Decide both factor kinds and print an explicit factor when one exists.

use ftk::factors::{
    extract_k2_cycle_factor, has_k2_cycle_factor, has_k2_oddcycle_factor, search_factor,
};
use ftk::graph::{complete_graph, cycle_graph, disjoint_union, join, repeat};
use ftk::{FactorKind, Graph};

fn pairs(cert: &ftk::factors::FactorCertificate) -> Vec<(usize, usize)> {
    cert.pairs.iter().map(|e| (e.u, e.v)).collect()
}

fn report(name: &str, g: &Graph) -> ftk::Result<()> {
    println!("{name} ({} vertices)", g.n());
    if has_k2_cycle_factor(g) {
        let cert = extract_k2_cycle_factor(g)?;
        println!(
            "  {{K2, cycles}}: pairs {:?} cycles {:?}",
            pairs(&cert),
            cert.cycles
        );
    } else {
        println!("  {{K2, cycles}}: none");
    }
    if has_k2_oddcycle_factor(g)? {
        let cert =
            search_factor(g, FactorKind::K2OddCyclesGe5)?.expect("criterion and search agree");
        cert.verify(g, FactorKind::K2OddCyclesGe5).expect("valid");
        println!(
            "  {{K2, odd cycles >= 5}}: pairs {:?} cycles {:?}",
            pairs(&cert),
            cert.cycles
        );
    } else {
        println!("  {{K2, odd cycles >= 5}}: none");
    }
    Ok(())
}

fn main() -> ftk::Result<()> {
    report("C5", &cycle_graph(5)?)?;
    report(
        "C3 u C5",
        &disjoint_union(&[cycle_graph(3)?, cycle_graph(5)?]),
    )?;
    report("K1,3", &ftk::graph::complete_bipartite(1, 3))?;
    report(
        "K2 + 3K3",
        &join(&complete_graph(2), &repeat(&complete_graph(3), 3)),
    )?;
    Ok(())
}
