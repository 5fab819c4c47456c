//! Immutable simple undirected graphs on the dense vertex range `0..n`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A set of vertex indices with bitmask semantics.
///
/// Sets order like the integers their bitmasks spell, so `{1, 2} < {0, 3}`.
/// Witness tie-breaks throughout the crate use this order.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet { words: vec![mask] };
        s.normalize();
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut s = VertexSet::new();
        for v in vertices {
            s.insert(v);
        }
        s
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / WORD;
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % WORD);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words
            .get(v / WORD)
            .is_some_and(|w| w >> (v % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| Bits(w).map(move |b| i * WORD + b))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The set as a single-word bitmask, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Largest member plus one (0 for the empty set).
    pub fn bound(&self) -> usize {
        self.words.last().map_or(0, |w| {
            (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize)
        })
    }

    /// Image of the set under `map` (`map[i]` is the label of vertex `i`).
    pub fn relabel(&self, map: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.iter().map(|v| map[v]))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        Ok(Vec::<usize>::deserialize(deserializer)?
            .into_iter()
            .collect())
    }
}

/// Iterator over the set bit positions of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub(crate) u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order; loops are rejected.
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        match a.cmp(&b) {
            Ordering::Less => Ok(Edge { u: a, v: b }),
            Ordering::Greater => Ok(Edge { u: b, v: a }),
            Ordering::Equal => Err(Error::InvalidArgument(format!("self-loop at vertex {a}"))),
        }
    }

    pub fn relabel(&self, map: &[usize]) -> Edge {
        Edge::new(map[self.u], map[self.v]).expect("relabeling is injective")
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(deserializer)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// A simple undirected graph, stored as one adjacency bit-row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    fn with_vertices(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are
    /// errors; repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::with_vertices(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            let e = Edge::new(a, b)?;
            g.add_edge(e.u, e.v);
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 64` vertices from per-vertex neighbor masks.
    /// The masks must already be symmetric and loop-free.
    pub(crate) fn from_masks(masks: &[u64]) -> Graph {
        let n = masks.len();
        debug_assert!(n <= WORD);
        let mut g = Graph::with_vertices(n);
        if n > 0 {
            g.rows.copy_from_slice(masks);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| Bits(w).map(move |b| i * WORD + b))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| Edge { u, v })
            })
            .collect()
    }

    /// K0 and K1 count as complete.
    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Neighbor bitmasks, one word per vertex; `None` when `n > 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        (self.n <= WORD).then(|| {
            if self.n == 0 {
                Vec::new()
            } else {
                self.rows.clone()
            }
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::with_vertices(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `G - S`. Survivors are relabeled `0..m` in their original relative
    /// order; the second value maps new labels back to original ones.
    pub fn delete_vertices(&self, removed: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut g = Graph::with_vertices(map.len());
        for (i, &v) in map.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = back[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// `G - e`, labels unchanged.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge { u: e.u, v: e.v });
        }
        let mut g = self.clone();
        g.remove_edge(e.u, e.v);
        Ok(g)
    }

    /// Connected components, each listed once, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = VertexSet::new();
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn isolated_count(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().iter().map(|e| (e.u, e.v)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `n K_1`.
pub fn empty_graph(n: usize) -> Graph {
    Graph::with_vertices(n)
}

/// `C_n` with edges `i ~ i+1 (mod n)`; needs `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let mut g = Graph::with_vertices(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// `P_n`, the path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::with_vertices(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// `K_{a,b}` with the `a` side first.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    join(&empty_graph(a), &empty_graph(b))
}

/// `G + H`: disjoint union plus every edge between the two sides.
/// `g`'s vertices come first.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(&[g.clone(), h.clone()]);
    for u in 0..g.n {
        for v in 0..h.n {
            out.add_edge(u, g.n + v);
        }
    }
    out
}

/// Disjoint union, each graph's vertices shifted past the previous ones.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut out = Graph::with_vertices(n);
    let mut offset = 0;
    for g in parts {
        for e in g.edges() {
            out.add_edge(offset + e.u, offset + e.v);
        }
        offset += g.n;
    }
    out
}

/// `copies` disjoint copies of `g`.
pub fn repeat(g: &Graph, copies: usize) -> Graph {
    disjoint_union(&vec![g.clone(); copies])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_edge_counts() {
        assert_eq!(complete_graph(4).edge_count(), 6);
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(empty_graph(3).edge_count(), 0);
        assert!(matches!(cycle_graph(2), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            join(&complete_graph(1), &complete_graph(1)),
            complete_graph(2)
        );
        let side = disjoint_union(&[empty_graph(2), complete_graph(2)]);
        let g = join(&complete_graph(4), &side);
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 23);
        let h = cycle_graph(5).unwrap();
        assert_eq!(join(&empty_graph(0), &h), h);
    }

    #[test]
    fn union_examples() {
        let g = disjoint_union(&[empty_graph(2), complete_graph(2)]);
        assert_eq!((g.n(), g.edge_count(), g.components().len()), (4, 1, 3));
        assert_eq!(g.isolated_count(), 2);
        assert_eq!(disjoint_union(&[]).n(), 0);
        let t = repeat(&complete_graph(3), 2);
        assert_eq!((t.n(), t.edge_count()), (6, 6));
    }

    #[test]
    fn deletion() {
        let c5 = cycle_graph(5).unwrap();
        let (p, map) = c5.delete_vertices(&VertexSet::from_vertices([0]));
        assert_eq!(map, vec![1, 2, 3, 4]);
        assert_eq!(p, path_graph(4));
        let (same, map) = c5.delete_vertices(&VertexSet::new());
        assert_eq!(same, c5);
        assert_eq!(map, vec![0, 1, 2, 3, 4]);

        let k3 = complete_graph(3);
        for e in k3.edges() {
            let p3 = k3.delete_edge(e).unwrap();
            assert_eq!(p3.edge_count(), 2);
            assert!(p3.is_connected());
        }
        let p4 = path_graph(4);
        assert_eq!(
            p4.delete_edge(Edge::new(0, 2).unwrap()),
            Err(Error::MissingEdge { u: 0, v: 2 })
        );
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(cycle_graph(6).unwrap().components().len(), 1);
        assert_eq!(empty_graph(3).isolated_count(), 3);
        let g = disjoint_union(&[complete_graph(2), empty_graph(1), complete_graph(3)]);
        let comps: Vec<Vec<usize>> = g.components().iter().map(VertexSet::to_vec).collect();
        assert_eq!(comps, vec![vec![0, 1], vec![2], vec![3, 4, 5]]);
    }

    #[test]
    fn vertex_set_order_is_bitmask_order() {
        let a = VertexSet::from_vertices([1, 2]);
        let b = VertexSet::from_vertices([0, 3]);
        assert!(a < b);
        assert!(VertexSet::new() < a);
        let wide = VertexSet::from_vertices([70]);
        assert!(b < wide);
        assert_eq!(wide.as_mask(), None);
        assert_eq!(wide.bound(), 71);
        assert_eq!(b.as_mask(), Some(0b1001));
        assert_eq!(serde_json::to_string(&b).unwrap(), "[0,3]");
    }

    #[test]
    fn wide_graphs_are_supported() {
        let g = cycle_graph(100).unwrap();
        assert_eq!(g.edge_count(), 100);
        assert!(g.has_edge(99, 0));
        assert!(g.masks().is_none());
        let (h, _) = g.delete_vertices(&VertexSet::from_vertices([0, 50]));
        assert_eq!(h.components().len(), 2);
    }

    #[test]
    fn edges_reject_loops() {
        assert!(Edge::new(3, 3).is_err());
        assert_eq!(Edge::new(5, 2).unwrap(), Edge { u: 2, v: 5 });
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }
}
