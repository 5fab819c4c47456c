//! Factor avoidable and `(F, n)`-factor critical avoidable graphs.
//!
//! `G` is `(F, n)`-factor critical avoidable when `G - W - e` has an
//! `F`-factor for every `W` with `|W| = n` and every edge `e` of `G - W`.
//! Sets `W` are scanned in increasing bitmask order and edges
//! lexicographically; the first failure is reported together with a
//! deficiency witness, all in the original vertex labels.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factors::{
    has_factor, max_deficiency_for, DeficiencyKind, DeficiencyWitness, FactorKind,
};
use crate::graph::{Edge, Graph, VertexSet};
use crate::kernel::{k_subsets, DEFAULT_EXHAUSTIVE_CAP, MASK_LIMIT};

/// A deleted set `W` and edge `e` after which no factor exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    #[serde(rename = "W")]
    pub w: VertexSet,
    pub e: Edge,
    /// Witness inside `G - W - e`, in the original labels of `G`.
    #[serde(flatten)]
    pub witness: DeficiencyWitness,
}

impl Violation {
    /// Deficiency of the witness recomputed in `G - W - e` from scratch.
    pub fn recompute_deficiency(&self, g: &Graph) -> Result<i64> {
        let h = g.delete_edge(self.e)?;
        let gone: VertexSet = self.w.iter().chain(self.witness.x.iter()).collect();
        if gone.len() != self.w.len() + self.witness.x.len() {
            return Err(Error::InvalidArgument("witness set overlaps W".into()));
        }
        let (rest, _) = h.delete_vertices(&gone);
        let count = match self.witness.kind {
            DeficiencyKind::Isolated => rest.isolated_count(),
            DeficiencyKind::TriangularCactus => {
                crate::blocks::count_triangular_cactus_components(&rest)
            }
        };
        Ok(count as i64 - self.witness.x.len() as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityVerdict {
    pub holds: bool,
    pub violation: Option<Violation>,
}

impl CriticalityVerdict {
    fn from_first(violation: Option<Violation>) -> Self {
        CriticalityVerdict {
            holds: violation.is_none(),
            violation,
        }
    }
}

/// Every `G - e` has an `F`-factor. Edgeless graphs hold vacuously.
pub fn is_factor_avoidable(g: &Graph, kind: FactorKind) -> Result<CriticalityVerdict> {
    is_n_factor_critical_avoidable(g, 0, kind)
}

pub fn is_n_factor_critical_avoidable(
    g: &Graph,
    n: usize,
    kind: FactorKind,
) -> Result<CriticalityVerdict> {
    is_n_factor_critical_avoidable_with_cap(g, n, kind, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn is_n_factor_critical_avoidable_with_cap(
    g: &Graph,
    n: usize,
    kind: FactorKind,
    cap: usize,
) -> Result<CriticalityVerdict> {
    let deleted = deletion_sets(g, n)?;
    let first = deleted
        .par_iter()
        .map(|&w| first_failure(g, w, kind, cap))
        .find_map_first(|r| r.transpose());
    Ok(CriticalityVerdict::from_first(first.transpose()?))
}

/// Every violation, in enumeration order.
pub fn all_violations(g: &Graph, n: usize, kind: FactorKind, cap: usize) -> Result<Vec<Violation>> {
    let deleted = deletion_sets(g, n)?;
    let per_set: Vec<Vec<Violation>> = deleted
        .par_iter()
        .map(|&w| failures(g, w, kind, cap, false))
        .collect::<Result<_>>()?;
    Ok(per_set.into_iter().flatten().collect())
}

fn deletion_sets(g: &Graph, n: usize) -> Result<Vec<u64>> {
    if n > g.n() {
        return Err(Error::InvalidArgument(format!(
            "cannot delete {n} vertices from a graph on {}",
            g.n()
        )));
    }
    if g.n() > MASK_LIMIT {
        return Err(Error::ResourceLimit {
            n: g.n(),
            cap: MASK_LIMIT,
        });
    }
    Ok(k_subsets(g.n(), n))
}

fn first_failure(g: &Graph, w: u64, kind: FactorKind, cap: usize) -> Result<Option<Violation>> {
    Ok(failures(g, w, kind, cap, true)?.into_iter().next())
}

fn failures(
    g: &Graph,
    w: u64,
    kind: FactorKind,
    cap: usize,
    first_only: bool,
) -> Result<Vec<Violation>> {
    let w = VertexSet::from_mask(w);
    let (h, labels) = g.delete_vertices(&w);
    let mut out = Vec::new();
    for e in h.edges() {
        let he = h.delete_edge(e)?;
        if has_factor(&he, kind, cap)? {
            continue;
        }
        let local = max_deficiency_for(&he, kind, cap)?;
        debug_assert!(local.deficiency >= 1);
        out.push(Violation {
            w: w.clone(),
            e: e.relabel(&labels),
            witness: DeficiencyWitness {
                x: local.x.relabel(&labels),
                ..local
            },
        });
        if first_only {
            break;
        }
    }
    Ok(out)
}
