//! `{K2, cycle}` and `{K2, odd cycle >= 5}` factors.
//!
//! A `{K2, cycle}`-factor exists iff `i(G - X) <= |X|` for every `X`, and a
//! `{K2, odd cycle >= 5}`-factor exists iff `c_tc(G - X) <= |X|` for every
//! `X`. The first is decided in polynomial time through the bipartite double
//! cover: a `{K2, cycle}`-factor is exactly a bijection `σ` with `u ~ σ(u)`,
//! i.e. a perfect matching between `V` and a copy `V'`. The deficiency
//! sweeps decide both criteria directly by enumerating `X`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};
use crate::kernel::{self, capped_masks, full, DEFAULT_EXHAUSTIVE_CAP};
use crate::matching::{hopcroft_karp, Matching};

/// Which component family a factor may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    /// Single edges and cycles of any length `>= 3`.
    #[serde(rename = "k2cycles")]
    K2Cycles,
    /// Single edges and odd cycles of length `>= 5`.
    #[serde(rename = "k2odd5")]
    K2OddCyclesGe5,
}

impl FactorKind {
    pub fn allows_cycle(self, len: usize) -> bool {
        match self {
            FactorKind::K2Cycles => len >= 3,
            FactorKind::K2OddCyclesGe5 => len >= 5 && len % 2 == 1,
        }
    }

    /// The deficiency that certifies non-existence for this family.
    pub fn deficiency_kind(self) -> DeficiencyKind {
        match self {
            FactorKind::K2Cycles => DeficiencyKind::Isolated,
            FactorKind::K2OddCyclesGe5 => DeficiencyKind::TriangularCactus,
        }
    }
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactorKind::K2Cycles => "k2cycles",
            FactorKind::K2OddCyclesGe5 => "k2odd5",
        })
    }
}

/// A spanning subgraph whose components are single edges and cycles.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCertificate {
    pub pairs: Vec<Edge>,
    /// Each cycle lists its vertices in cyclic order.
    pub cycles: Vec<Vec<usize>>,
}

impl FactorCertificate {
    /// Checks that the parts partition `V(g)`, every pair is an edge and every
    /// cycle is a cycle of `g` whose length `kind` permits.
    pub fn verify(&self, g: &Graph, kind: FactorKind) -> std::result::Result<(), String> {
        let mut covered = vec![false; g.n()];
        let mut cover = |v: usize| -> std::result::Result<(), String> {
            match covered.get_mut(v) {
                None => Err(format!("vertex {v} is out of range")),
                Some(true) => Err(format!("vertex {v} is covered twice")),
                Some(slot) => {
                    *slot = true;
                    Ok(())
                }
            }
        };
        for e in &self.pairs {
            if !g.has_edge(e.u, e.v) {
                return Err(format!("pair ({}, {}) is not an edge", e.u, e.v));
            }
            cover(e.u)?;
            cover(e.v)?;
        }
        for c in &self.cycles {
            if !kind.allows_cycle(c.len()) {
                return Err(format!(
                    "cycle of length {} is not allowed for {kind}",
                    c.len()
                ));
            }
            for (i, &v) in c.iter().enumerate() {
                let w = c[(i + 1) % c.len()];
                if !g.has_edge(v, w) {
                    return Err(format!("cycle step {v} -> {w} is not an edge"));
                }
                cover(v)?;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(v) => Err(format!("vertex {v} is not covered")),
            None => Ok(()),
        }
    }

    /// Component sizes in certificate order: pairs first, then cycles.
    pub fn component_sizes(&self) -> Vec<usize> {
        self.pairs
            .iter()
            .map(|_| 2)
            .chain(self.cycles.iter().map(Vec::len))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeficiencyKind {
    /// `i(G - X) - |X|`
    Isolated,
    /// `c_tc(G - X) - |X|`
    TriangularCactus,
}

/// A set `X` together with the deficiency it achieves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    #[serde(rename = "X")]
    pub x: VertexSet,
    pub kind: DeficiencyKind,
    pub deficiency: i64,
}

impl DeficiencyWitness {
    /// Deficiency of `self.x` in `g`, recomputed from scratch with the
    /// general-purpose graph routines.
    pub fn recompute(&self, g: &Graph) -> i64 {
        let (rest, _) = g.delete_vertices(&self.x);
        let count = match self.kind {
            DeficiencyKind::Isolated => rest.isolated_count(),
            DeficiencyKind::TriangularCactus => {
                crate::blocks::count_triangular_cactus_components(&rest)
            }
        };
        count as i64 - self.x.len() as i64
    }
}

/// Maximum matching of the double cover: left `u` joins right `v` for
/// every edge `uv`, in both orientations.
pub fn double_cover_matching(g: &Graph) -> Matching {
    let adj: Vec<Vec<usize>> = (0..g.n()).map(|v| g.neighbors(v).collect()).collect();
    hopcroft_karp(&adj, g.n())
}

pub fn has_k2_cycle_factor(g: &Graph) -> bool {
    double_cover_matching(g).is_perfect()
}

/// Reads a `{K2, cycle}`-factor off a perfect matching of the double cover.
/// The matching is a permutation `σ` with `u ~ σ(u)` and no fixed points;
/// its 2-cycles are the pairs and its longer cycles are graph cycles.
pub fn extract_k2_cycle_factor(g: &Graph) -> Result<FactorCertificate> {
    let m = double_cover_matching(g);
    if !m.is_perfect() {
        return Err(Error::PreconditionViolated(
            "graph has no {K2, cycle}-factor".into(),
        ));
    }
    let sigma: Vec<usize> = m
        .left_to_right
        .iter()
        .map(|v| v.expect("perfect"))
        .collect();
    let mut seen = vec![false; g.n()];
    let mut cert = FactorCertificate::default();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            orbit.push(v);
            v = sigma[v];
        }
        if orbit.len() == 2 {
            cert.pairs.push(Edge::new(orbit[0], orbit[1])?);
        } else {
            cert.cycles.push(orbit);
        }
    }
    Ok(cert)
}

/// Maximum of `count(G - X) - |X|` over all `X`, scanning `X` in increasing
/// bitmask order so the first maximizer (smallest bitmask) is kept. Stops
/// early once `stop_at` is reached.
fn sweep(adj: &[u64], kind: DeficiencyKind, stop_at: Option<i64>) -> (i64, u64) {
    let n = adj.len();
    let everything = full(n);
    let mut best = i64::MIN;
    let mut best_mask = 0;
    let mut x = 0u64;
    loop {
        let size = x.count_ones() as i64;
        // count(G - X) <= n - |X|
        if n as i64 - 2 * size > best {
            let alive = everything & !x;
            let count = match kind {
                DeficiencyKind::Isolated => kernel::isolated_count(adj, alive),
                DeficiencyKind::TriangularCactus => kernel::cactus_count(adj, alive),
            } as i64;
            if count - size > best {
                best = count - size;
                best_mask = x;
                if stop_at.is_some_and(|s| best >= s) {
                    break;
                }
            }
        }
        if x == everything {
            break;
        }
        x += 1;
    }
    (best, best_mask)
}

fn max_deficiency(g: &Graph, kind: DeficiencyKind, cap: usize) -> Result<DeficiencyWitness> {
    let adj = capped_masks(g, cap)?;
    let (deficiency, mask) = sweep(&adj, kind, None);
    Ok(DeficiencyWitness {
        x: VertexSet::from_mask(mask),
        kind,
        deficiency,
    })
}

/// `max_X i(G - X) - |X|`; positive iff no `{K2, cycle}`-factor exists.
pub fn max_isolated_deficiency(g: &Graph) -> Result<DeficiencyWitness> {
    max_deficiency(g, DeficiencyKind::Isolated, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn max_isolated_deficiency_with_cap(g: &Graph, cap: usize) -> Result<DeficiencyWitness> {
    max_deficiency(g, DeficiencyKind::Isolated, cap)
}

pub use crate::blocks::count_triangular_cactus_components;

/// `max_X c_tc(G - X) - |X|`; positive iff no `{K2, odd cycle >= 5}`-factor.
pub fn max_tc_deficiency(g: &Graph) -> Result<DeficiencyWitness> {
    max_deficiency(g, DeficiencyKind::TriangularCactus, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn max_tc_deficiency_with_cap(g: &Graph, cap: usize) -> Result<DeficiencyWitness> {
    max_deficiency(g, DeficiencyKind::TriangularCactus, cap)
}

/// Decides the `{K2, odd cycle >= 5}`-factor by the cactus criterion,
/// stopping at the first positive deficiency.
pub fn has_k2_oddcycle_factor(g: &Graph) -> Result<bool> {
    has_k2_oddcycle_factor_with_cap(g, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn has_k2_oddcycle_factor_with_cap(g: &Graph, cap: usize) -> Result<bool> {
    let adj = capped_masks(g, cap)?;
    Ok(sweep(&adj, DeficiencyKind::TriangularCactus, Some(1)).0 <= 0)
}

/// Factor existence by the fastest route for `kind`.
pub fn has_factor(g: &Graph, kind: FactorKind, cap: usize) -> Result<bool> {
    match kind {
        FactorKind::K2Cycles => Ok(has_k2_cycle_factor(g)),
        FactorKind::K2OddCyclesGe5 => has_k2_oddcycle_factor_with_cap(g, cap),
    }
}

/// The maximum deficiency matching `kind`'s criterion.
pub fn max_deficiency_for(g: &Graph, kind: FactorKind, cap: usize) -> Result<DeficiencyWitness> {
    max_deficiency(g, kind.deficiency_kind(), cap)
}

/// Explicit backtracking search for a spanning partition into edges and
/// `kind`-admissible cycles. Exponential; independent of both criteria.
pub fn search_factor(g: &Graph, kind: FactorKind) -> Result<Option<FactorCertificate>> {
    search_factor_with_cap(g, kind, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn search_factor_with_cap(
    g: &Graph,
    kind: FactorKind,
    cap: usize,
) -> Result<Option<FactorCertificate>> {
    let adj = capped_masks(g, cap)?;
    let mut search = PartitionSearch {
        adj: &adj,
        kind,
        failed: HashSet::new(),
        parts: Vec::new(),
    };
    if !search.cover(full(g.n())) {
        return Ok(None);
    }
    let mut cert = FactorCertificate::default();
    for part in search.parts {
        if part.len() == 2 {
            cert.pairs.push(Edge::new(part[0], part[1])?);
        } else {
            cert.cycles.push(part);
        }
    }
    Ok(Some(cert))
}

struct PartitionSearch<'a> {
    adj: &'a [u64],
    kind: FactorKind,
    failed: HashSet<u64>,
    parts: Vec<Vec<usize>>,
}

impl PartitionSearch<'_> {
    fn cover(&mut self, uncovered: u64) -> bool {
        if uncovered == 0 {
            return true;
        }
        if self.failed.contains(&uncovered) {
            return false;
        }
        let v = uncovered.trailing_zeros() as usize;
        let rest = uncovered & !(1 << v);
        for w in crate::graph::Bits(self.adj[v] & rest) {
            self.parts.push(vec![v, w]);
            if self.cover(rest & !(1 << w)) {
                return true;
            }
            self.parts.pop();
        }
        let mut path = vec![v];
        if self.extend_cycle(&mut path, rest) {
            return true;
        }
        self.failed.insert(uncovered);
        false
    }

    /// Grows a simple path from `path[0]` through `free`, closing it into a
    /// cycle whenever the length is admissible.
    fn extend_cycle(&mut self, path: &mut Vec<usize>, free: u64) -> bool {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        if path.len() >= 3 && self.kind.allows_cycle(path.len()) && self.adj[last] >> start & 1 == 1
        {
            // each cycle is met in both directions; keep one
            if path[1] < last {
                self.parts.push(path.clone());
                if self.cover(free) {
                    return true;
                }
                self.parts.pop();
            }
        }
        for w in crate::graph::Bits(self.adj[last] & free) {
            path.push(w);
            if self.extend_cycle(path, free & !(1 << w)) {
                return true;
            }
            path.pop();
        }
        false
    }
}
