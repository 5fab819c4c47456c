//! Critical avoidability: delete any n vertices and then any edge; a factor
//! must survive. Prints the first violation for a family that fails.

use ftk::criticality::{all_violations, is_n_factor_critical_avoidable};
use ftk::graph::{complete_graph, disjoint_union, empty_graph, join};
use ftk::{FactorKind, DEFAULT_EXHAUSTIVE_CAP};

fn main() -> ftk::Result<()> {
    let k8 = complete_graph(8);
    let verdict = is_n_factor_critical_avoidable(&k8, 2, FactorKind::K2Cycles)?;
    println!("K8, n = 2: holds = {}", verdict.holds);

    let g = join(
        &complete_graph(4),
        &disjoint_union(&[empty_graph(2), complete_graph(2)]),
    );
    let verdict = is_n_factor_critical_avoidable(&g, 1, FactorKind::K2Cycles)?;
    let v = verdict.violation.expect("this graph fails");
    println!(
        "K4 + (2K1 u K2), n = 1: W = {:?}, e = ({}, {}), X = {:?}, deficiency {}",
        v.w.to_vec(),
        v.e.u,
        v.e.v,
        v.witness.x.to_vec(),
        v.recompute_deficiency(&g)?
    );
    let count = all_violations(&g, 1, FactorKind::K2Cycles, DEFAULT_EXHAUSTIVE_CAP)?.len();
    println!("{count} violating (W, e) pairs in total");
    Ok(())
}
