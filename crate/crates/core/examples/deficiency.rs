//! Maximum deficiencies and the sets that achieve them. A positive value
//! rules the corresponding factor out.

use ftk::factors::{
    count_triangular_cactus_components, max_isolated_deficiency, max_tc_deficiency,
};
use ftk::graph::{complete_bipartite, complete_graph, join, repeat};

fn main() -> ftk::Result<()> {
    let star = complete_bipartite(1, 4);
    let w = max_isolated_deficiency(&star)?;
    println!(
        "K1,4: i(G-X) - |X| = {} at X = {:?}",
        w.deficiency,
        w.x.to_vec()
    );
    assert_eq!(w.recompute(&star), w.deficiency);

    let g = join(&complete_graph(2), &repeat(&complete_graph(3), 3));
    let w = max_tc_deficiency(&g)?;
    println!(
        "K2 + 3K3: c_tc(G-X) - |X| = {} at X = {:?}",
        w.deficiency,
        w.x.to_vec()
    );

    let cacti = repeat(&complete_graph(3), 4);
    println!(
        "4K3 has {} triangular cactus components",
        count_triangular_cactus_components(&cacti)
    );
    Ok(())
}
