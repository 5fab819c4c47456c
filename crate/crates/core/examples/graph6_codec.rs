//! graph6 encode/decode, including error offsets on malformed input.

use ftk::graph::{complete_graph, cycle_graph};
use ftk::graph6::{parse_graph6, write_graph6};

fn main() -> ftk::Result<()> {
    for g in [
        complete_graph(1),
        complete_graph(3),
        cycle_graph(5)?,
        complete_graph(10),
    ] {
        let text = write_graph6(&g)?;
        assert_eq!(parse_graph6(&text)?, g);
        println!(
            "{:>2} vertices {:>2} edges -> {text}",
            g.n(),
            g.edge_count()
        );
    }
    for bad in ["", "A~", "Bw!", "C~~"] {
        println!("{bad:?}: {}", parse_graph6(bad).unwrap_err());
    }
    Ok(())
}
