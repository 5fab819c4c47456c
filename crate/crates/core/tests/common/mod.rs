//! Definition-level oracles shared by the integration tests. They work on a
//! plain adjacency matrix and use nothing from the library beyond `has_edge`,
//! so they stay independent of the code paths under test.
#![allow(dead_code)]

use ftk::{Graph, Rat};

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn graph_from_matrix(m: &Matrix) -> Graph {
    let edges: Vec<(usize, usize)> = m
        .iter()
        .enumerate()
        .flat_map(|(u, row)| {
            row.iter()
                .enumerate()
                .skip(u + 1)
                .filter(|(_, b)| **b)
                .map(move |(v, _)| (u, v))
        })
        .collect();
    Graph::from_edges(m.len(), &edges).unwrap()
}

/// Components of the subgraph on `alive` vertices, by depth-first search.
pub fn components(m: &Matrix, alive: &[bool]) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in 0..n {
                if alive[w] && m[v][w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort();
        out.push(comp);
    }
    out
}

pub fn alive_without(n: usize, mask: u64) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 0).collect()
}

pub fn isolated(m: &Matrix, alive: &[bool]) -> usize {
    components(m, alive).iter().filter(|c| c.len() == 1).count()
}

fn is_complete(m: &Matrix) -> bool {
    (0..m.len()).all(|u| (0..m.len()).all(|v| u == v || m[u][v]))
}

/// Minimum of |S| / d(G - S) over all S with d >= 2, by plain enumeration.
fn brute_min_ratio(m: &Matrix, d: impl Fn(&Matrix, &[bool]) -> usize) -> Rat {
    if is_complete(m) {
        return Rat::Infinity;
    }
    let n = m.len();
    let mut best = Rat::Infinity;
    for s in 0..1u64 << n {
        let count = d(m, &alive_without(n, s));
        if count >= 2 {
            best = best.min(Rat::new(s.count_ones() as u64, count as u64).unwrap());
        }
    }
    best
}

pub fn brute_toughness(g: &Graph) -> Rat {
    brute_min_ratio(&matrix(g), |m, a| components(m, a).len())
}

pub fn brute_isolated_toughness(g: &Graph) -> Rat {
    brute_min_ratio(&matrix(g), isolated)
}

/// Smallest S leaving a disconnected graph; n - 1 when complete.
pub fn brute_connectivity(g: &Graph) -> usize {
    let m = matrix(g);
    let n = m.len();
    if is_complete(&m) {
        return n.saturating_sub(1);
    }
    (0..1u64 << n)
        .filter(|s| components(&m, &alive_without(n, *s)).len() >= 2)
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn brute_max_isolated_deficiency(g: &Graph) -> i64 {
    let m = matrix(g);
    let n = m.len();
    (0..1u64 << n)
        .map(|x| isolated(&m, &alive_without(n, x)) as i64 - x.count_ones() as i64)
        .max()
        .unwrap()
}

/// Adjacency rows as bitmasks, read off the matrix.
pub fn rows(m: &Matrix) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, b)| **b)
                .fold(0, |acc, (j, _)| acc | 1 << j)
        })
        .collect()
}

/// max over X of i(G - X) - |X|, counting a vertex as isolated when all of
/// its neighbours lie in X.
pub fn mask_max_isolated_deficiency(rows: &[u64]) -> i64 {
    let n = rows.len();
    (0..1u64 << n)
        .map(|x| {
            let isolated = (0..n)
                .filter(|&v| x >> v & 1 == 0 && rows[v] & !x == 0)
                .count();
            isolated as i64 - x.count_ones() as i64
        })
        .max()
        .unwrap()
}

fn connected_on(m: &Matrix, set: &[usize]) -> bool {
    let n = m.len();
    let mut alive = vec![false; n];
    for &v in set {
        alive[v] = true;
    }
    components(m, &alive).len() == 1
}

/// Induced subgraph on `set` (|set| >= 3) is 2-connected.
fn two_connected(m: &Matrix, set: &[usize]) -> bool {
    set.len() >= 3
        && connected_on(m, set)
        && set.iter().all(|&x| {
            let rest: Vec<usize> = set.iter().copied().filter(|&y| y != x).collect();
            connected_on(m, &rest)
        })
}

/// Triangular cactus by the block definition: blocks are the maximal
/// 2-connected vertex sets plus bridges, and every block must be a triangle.
pub fn brute_is_triangular_cactus(m: &Matrix, comp: &[usize]) -> bool {
    if comp.len() == 1 {
        return true;
    }
    let k = comp.len();
    let mut biconnected: Vec<Vec<usize>> = Vec::new();
    for sub in 1..1u64 << k {
        let set: Vec<usize> = (0..k)
            .filter(|i| sub >> i & 1 == 1)
            .map(|i| comp[i])
            .collect();
        if two_connected(m, &set) {
            biconnected.push(set);
        }
    }
    let maximal: Vec<&Vec<usize>> = biconnected
        .iter()
        .filter(|a| {
            !biconnected
                .iter()
                .any(|b| b.len() > a.len() && a.iter().all(|v| b.contains(v)))
        })
        .collect();
    if maximal.iter().any(|b| b.len() != 3) {
        return false;
    }
    // no bridges: every edge sits inside some block
    for (i, &u) in comp.iter().enumerate() {
        for &v in &comp[i + 1..] {
            if m[u][v] && !maximal.iter().any(|b| b.contains(&u) && b.contains(&v)) {
                return false;
            }
        }
    }
    true
}

pub fn brute_cactus_count(m: &Matrix, alive: &[bool]) -> usize {
    components(m, alive)
        .iter()
        .filter(|c| brute_is_triangular_cactus(m, c))
        .count()
}

pub fn brute_max_tc_deficiency(g: &Graph) -> i64 {
    let m = matrix(g);
    let n = m.len();
    (0..1u64 << n)
        .map(|x| brute_cactus_count(&m, &alive_without(n, x)) as i64 - x.count_ones() as i64)
        .max()
        .unwrap()
}

/// Explicit search for a spanning partition into edges and cycles whose
/// length satisfies `allowed`.
pub fn brute_has_factor(g: &Graph, allowed: fn(usize) -> bool) -> bool {
    has_partition(&matrix(g), allowed)
}

pub fn has_partition(m: &Matrix, allowed: fn(usize) -> bool) -> bool {
    let mut covered = vec![false; m.len()];
    partition(m, &mut covered, allowed)
}

fn partition(m: &Matrix, covered: &mut Vec<bool>, allowed: fn(usize) -> bool) -> bool {
    let Some(v) = covered.iter().position(|c| !c) else {
        return true;
    };
    covered[v] = true;
    for w in 0..m.len() {
        if !covered[w] && m[v][w] {
            covered[w] = true;
            if partition(m, covered, allowed) {
                return true;
            }
            covered[w] = false;
        }
    }
    let mut path = vec![v];
    if grow(m, covered, &mut path, allowed) {
        return true;
    }
    covered[v] = false;
    false
}

fn grow(
    m: &Matrix,
    covered: &mut Vec<bool>,
    path: &mut Vec<usize>,
    allowed: fn(usize) -> bool,
) -> bool {
    let last = *path.last().unwrap();
    if path.len() >= 3 && allowed(path.len()) && m[last][path[0]] && partition(m, covered, allowed)
    {
        return true;
    }
    for w in 0..m.len() {
        if !covered[w] && m[last][w] {
            covered[w] = true;
            path.push(w);
            if grow(m, covered, path, allowed) {
                return true;
            }
            path.pop();
            covered[w] = false;
        }
    }
    false
}

pub fn any_cycle(len: usize) -> bool {
    len >= 3
}

pub fn odd_cycle_ge5(len: usize) -> bool {
    len >= 5 && len % 2 == 1
}

/// Maximum bipartite matching by dynamic programming over the set of
/// matched right vertices; `right` must be at most 20.
pub fn brute_max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut reachable = vec![false; 1 << right];
    reachable[0] = true;
    for nbrs in adj {
        let before = reachable.clone();
        for (mask, _) in before.iter().enumerate().filter(|(_, r)| **r) {
            for &v in nbrs {
                if mask >> v & 1 == 0 {
                    reachable[mask | 1 << v] = true;
                }
            }
        }
    }
    (0..1usize << right)
        .filter(|&m| reachable[m])
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

/// SplitMix64, for reproducible random inputs in tests.
pub struct TestRng(pub u64);

impl TestRng {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// G(n, p) with p = num / 1000.
    pub fn graph(&mut self, n: usize, per_mille: u64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.below(1000) < per_mille {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }
}

/// Every labeled graph on `n` vertices, by edge mask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Independent check that a certificate is a spanning partition into edges
/// and cycles of allowed length.
pub fn certificate_partitions(
    g: &Graph,
    cert: &ftk::factors::FactorCertificate,
    allowed: fn(usize) -> bool,
) -> bool {
    let m = matrix(g);
    let mut seen = vec![0usize; m.len()];
    for e in &cert.pairs {
        if e.u >= m.len() || e.v >= m.len() || !m[e.u][e.v] {
            return false;
        }
        seen[e.u] += 1;
        seen[e.v] += 1;
    }
    for c in &cert.cycles {
        if !allowed(c.len()) || c.iter().any(|&v| v >= m.len()) {
            return false;
        }
        if (0..c.len()).any(|i| !m[c[i]][c[(i + 1) % c.len()]]) {
            return false;
        }
        for &v in c {
            seen[v] += 1;
        }
    }
    seen.iter().all(|&s| s == 1)
}
