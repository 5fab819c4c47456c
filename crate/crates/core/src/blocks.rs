//! Block (biconnected component) decomposition and triangular cacti.

use crate::graph::{Graph, VertexSet};

/// Blocks of `g` via Tarjan's low-point algorithm. Every edge lies in exactly
/// one block; isolated vertices belong to none. Bridges are two-vertex blocks.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    let mut cursor = vec![0; n];
    let mut stack = Vec::new();
    let mut call = Vec::new();
    let mut time = 0;
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        call.push(root);
        stack.push(root);
        while let Some(&v) = call.last() {
            if let Some(&w) = neighbors[v].get(cursor[v]) {
                cursor[v] += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    parent[w] = v;
                    call.push(w);
                    stack.push(w);
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            call.pop();
            let p = parent[v];
            if p == usize::MAX {
                stack.clear();
                continue;
            }
            low[p] = low[p].min(low[v]);
            if low[v] >= disc[p] {
                let mut block = VertexSet::from_vertices([p]);
                while let Some(x) = stack.pop() {
                    block.insert(x);
                    if x == v {
                        break;
                    }
                }
                out.push(block);
            }
        }
    }
    out
}

/// A connected graph is a triangular cactus when every block is a triangle;
/// `K_1` counts as one.
pub fn is_triangular_cactus(g: &Graph) -> bool {
    match g.n() {
        0 => false,
        1 => true,
        _ => g.is_connected() && blocks(g).iter().all(|b| b.len() == 3),
    }
}

/// `c_tc(G)`: the number of components of `g` that are triangular cacti.
pub fn count_triangular_cactus_components(g: &Graph) -> usize {
    g.components()
        .iter()
        .filter(|comp| {
            let others: VertexSet = (0..g.n()).filter(|&v| !comp.contains(v)).collect();
            is_triangular_cactus(&g.delete_vertices(&others).0)
        })
        .count()
}
