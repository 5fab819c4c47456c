//! Vertex connectivity by Menger's theorem: the smallest `s`-`t` vertex
//! separator equals the maximum number of internally disjoint `s`-`t` paths,
//! computed as a unit-capacity max flow on the vertex-split digraph.

use std::collections::VecDeque;

use crate::graph::Graph;

struct SplitNetwork {
    // arcs stored in pairs: arc ^ 1 is the reverse arc
    head: Vec<usize>,
    cap: Vec<u32>,
    flow: Vec<u32>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    /// Vertex `v` becomes `2v` (in) -> `2v + 1` (out) with capacity 1; each
    /// edge `uv` becomes arcs `u_out -> v_in` and `v_out -> u_in`.
    fn new(g: &Graph) -> SplitNetwork {
        let n = g.n();
        let mut net = SplitNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            flow: Vec::new(),
            out: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for e in g.edges() {
            net.arc(2 * e.u + 1, 2 * e.v, n as u32);
            net.arc(2 * e.v + 1, 2 * e.u, n as u32);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.flow.push(0);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
        self.flow.push(0);
    }

    fn residual(&self, a: usize) -> u32 {
        // reverse arcs carry the negated flow of their partner
        if a.is_multiple_of(2) {
            self.cap[a] - self.flow[a]
        } else {
            self.flow[a ^ 1]
        }
    }

    /// Max flow from `source` to `sink`, stopping once it reaches `limit`.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        self.flow.iter_mut().for_each(|f| *f = 0);
        let nodes = self.out.len();
        let mut total = 0;
        let mut via = vec![usize::MAX; nodes];
        let mut queue = VecDeque::new();
        while total < limit {
            via.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            queue.push_back(source);
            via[source] = usize::MAX - 1;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                for &a in &self.out[x] {
                    let y = self.head[a];
                    if via[y] == usize::MAX && self.residual(a) > 0 {
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            // every augmenting path crosses a unit vertex arc, so push 1
            let mut y = sink;
            while y != source {
                let a = via[y];
                if a.is_multiple_of(2) {
                    self.flow[a] += 1;
                } else {
                    self.flow[a ^ 1] -= 1;
                }
                y = self.head[a ^ 1];
            }
            total += 1;
        }
        total
    }
}

/// Maximum number of internally vertex-disjoint paths between nonadjacent
/// `s` and `t`, capped at `limit`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "local connectivity needs a nonadjacent pair"
    );
    SplitNetwork::new(g).max_flow(2 * s + 1, 2 * t, limit)
}

/// `κ(G)`: `n - 1` for complete graphs (so `κ(K_0) = κ(K_1) = 0`), 0 for
/// disconnected graphs, otherwise the minimum vertex cut size.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = g.min_degree().unwrap_or(0);
    let mut net = SplitNetwork::new(g);
    // Some vertex among the first best + 1 lies outside a minimum cut, and
    // everything on the far side of the cut has a larger index.
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                best = best.min(net.max_flow(2 * i + 1, 2 * j, best));
            }
        }
        i += 1;
    }
    best
}
