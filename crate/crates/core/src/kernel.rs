//! Bitmask primitives shared by the exhaustive sweeps. Graphs here are
//! slices of neighbor masks (`adj[v]`), so every kernel is limited to 64
//! vertices; `alive` selects the induced subgraph being examined.

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Default vertex cap for exponential searches.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 24;

/// Hard ceiling imposed by the one-word bitmask representation.
pub const MASK_LIMIT: usize = 64;

pub(crate) fn capped_masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let cap = cap.min(MASK_LIMIT);
    if g.n() > cap {
        return Err(Error::ResourceLimit { n: g.n(), cap });
    }
    Ok(g.masks().expect("n <= 64"))
}

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The component of `seed` inside `alive`.
#[inline]
pub(crate) fn flood(adj: &[u64], alive: u64, seed: usize) -> u64 {
    let mut comp = 1u64 << seed;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= adj[v];
        }
        next &= alive & !comp;
        comp |= next;
        frontier = next;
    }
    comp
}

#[inline]
pub(crate) fn component_count(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        rest &= !flood(adj, alive, rest.trailing_zeros() as usize);
        count += 1;
    }
    count
}

#[inline]
pub(crate) fn isolated_count(adj: &[u64], alive: u64) -> usize {
    Bits(alive).filter(|&v| adj[v] & alive == 0).count()
}

/// Number of edges with both ends in `set`.
#[inline]
pub(crate) fn induced_edges(adj: &[u64], set: u64) -> usize {
    Bits(set)
        .map(|v| (adj[v] & set).count_ones() as usize)
        .sum::<usize>()
        / 2
}

/// True when the connected vertex set `comp` induces a triangular cactus:
/// a single vertex, or a connected graph whose blocks are all triangles.
pub(crate) fn is_triangular_cactus(adj: &[u64], comp: u64) -> bool {
    let v = comp.count_ones() as usize;
    if v == 1 {
        return true;
    }
    // b triangle blocks give 2b + 1 vertices and 3b edges
    if v.is_multiple_of(2) || induced_edges(adj, comp) != 3 * (v - 1) / 2 {
        return false;
    }
    all_blocks_are_triangles(adj, comp)
}

/// Iterative Tarjan block decomposition of the connected set `comp`,
/// rejecting as soon as a block with other than three vertices closes.
fn all_blocks_are_triangles(adj: &[u64], comp: u64) -> bool {
    const NONE: u8 = u8::MAX;
    let mut disc = [NONE; 64];
    let mut low = [0u8; 64];
    let mut parent = [NONE; 64];
    let mut pending = [0u64; 64];
    let mut call = [0u8; 64];
    let mut depth = 0;
    let mut vstack = [0u8; 64];
    let mut vtop = 0;
    let mut time = 0u8;

    let root = comp.trailing_zeros() as usize;
    disc[root] = time;
    low[root] = time;
    time += 1;
    pending[root] = adj[root] & comp;
    call[depth] = root as u8;
    depth += 1;
    vstack[vtop] = root as u8;
    vtop += 1;

    while depth > 0 {
        let v = call[depth - 1] as usize;
        if pending[v] != 0 {
            let w = pending[v].trailing_zeros() as usize;
            pending[v] &= pending[v] - 1;
            if disc[w] == NONE {
                disc[w] = time;
                low[w] = time;
                time += 1;
                parent[w] = v as u8;
                pending[w] = adj[w] & comp;
                call[depth] = w as u8;
                depth += 1;
                vstack[vtop] = w as u8;
                vtop += 1;
            } else if w as u8 != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        depth -= 1;
        let p = parent[v];
        if p == NONE {
            continue;
        }
        let p = p as usize;
        low[p] = low[p].min(low[v]);
        if low[v] >= disc[p] {
            // pop the block hanging below p, which is p plus the popped run
            let mut size = 1;
            loop {
                vtop -= 1;
                size += 1;
                if vstack[vtop] as usize == v {
                    break;
                }
            }
            if size != 3 {
                return false;
            }
        }
    }
    true
}

/// `c_tc` of the subgraph induced by `alive`.
pub(crate) fn cactus_count(adj: &[u64], alive: u64) -> usize {
    let mut rest = alive;
    let mut count = 0;
    while rest != 0 {
        let comp = flood(adj, alive, rest.trailing_zeros() as usize);
        rest &= !comp;
        if is_triangular_cactus(adj, comp) {
            count += 1;
        }
    }
    count
}

/// Visits every `bits`-subset of `0..n` of size `k` in increasing numeric order.
pub(crate) fn for_each_k_subset(n: usize, k: usize, mut visit: impl FnMut(u64) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        visit(0);
        return;
    }
    let limit = full(n);
    let mut s = full(k);
    loop {
        if !visit(s) {
            return;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.wrapping_add(c);
        if r == 0 || r > limit {
            return;
        }
        s = (((r ^ s) >> 2) / c) | r;
        if s > limit {
            return;
        }
    }
}

/// All `k`-subsets of `0..n` in increasing numeric order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_k_subset(n, k, |s| {
        out.push(s);
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn masks(g: &Graph) -> Vec<u64> {
        g.masks().unwrap()
    }

    #[test]
    fn counts_match_graph_methods() {
        let g = disjoint_union(&[complete_graph(3), empty_graph(2), cycle_graph(4).unwrap()]);
        let m = masks(&g);
        assert_eq!(component_count(&m, full(g.n())), 4);
        assert_eq!(isolated_count(&m, full(g.n())), 2);
        assert_eq!(induced_edges(&m, full(g.n())), 7);
    }

    #[test]
    fn cactus_recognition() {
        let k3 = masks(&complete_graph(3));
        assert!(is_triangular_cactus(&k3, 0b111));
        let c5 = masks(&cycle_graph(5).unwrap());
        assert!(!is_triangular_cactus(&c5, full(5)));
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(is_triangular_cactus(&masks(&bowtie), full(5)));
        // a triangle with a pendant path has the right parity but bridge blocks
        let paw = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert!(!is_triangular_cactus(&masks(&paw), full(5)));
        assert!(is_triangular_cactus(&k3, 0b1));
        assert!(!is_triangular_cactus(&k3, 0b11));
    }

    #[test]
    fn gosper_order() {
        assert_eq!(
            k_subsets(4, 2),
            vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        );
        assert_eq!(k_subsets(3, 0), vec![0]);
        assert_eq!(k_subsets(3, 3), vec![0b111]);
        assert!(k_subsets(2, 3).is_empty());
        assert_eq!(k_subsets(64, 64), vec![u64::MAX]);
        assert_eq!(k_subsets(64, 1).len(), 64);
    }
}
