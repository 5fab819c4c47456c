//! Exact toughness `t(G)` and isolated toughness `I(G)`.
//!
//! Both minimize `|S| / d(G - S)` over vertex sets `S`, where `d` counts
//! components (toughness) or isolated vertices (isolated toughness), subject
//! to `d(G - S) >= 2`. Candidates are swept by increasing `|S|`; since
//! `d(G - S) <= n - |S|`, once `s / (n - s)` exceeds the incumbent no larger
//! set can win and the sweep stops. Among optimal sets the smallest bitmask
//! is reported.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::kernel::{self, capped_masks, full, DEFAULT_EXHAUSTIVE_CAP};
use crate::rational::Rat;

/// Optimal value with its minimizing set (`None` exactly when infinite).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToughnessResult {
    pub value: Rat,
    pub witness: Option<VertexSet>,
}

#[derive(Clone, Copy)]
enum Denominator {
    Components,
    Isolated,
}

impl Denominator {
    #[inline]
    fn eval(self, adj: &[u64], alive: u64) -> usize {
        match self {
            Denominator::Components => kernel::component_count(adj, alive),
            Denominator::Isolated => kernel::isolated_count(adj, alive),
        }
    }
}

fn minimize(g: &Graph, cap: usize, denominator: Denominator) -> Result<ToughnessResult> {
    if g.is_complete() {
        return Ok(ToughnessResult {
            value: Rat::Infinity,
            witness: None,
        });
    }
    let adj = capped_masks(g, cap)?;
    let n = g.n();
    let everything = full(n);
    // (|S|, d, mask) of the incumbent
    let mut best: Option<(usize, usize, u64)> = None;
    for size in 0..n {
        if let Some((bs, bd, _)) = best {
            // size / (n - size) > bs / bd
            if size * bd > bs * (n - size) {
                break;
            }
        }
        kernel::for_each_k_subset(n, size, |s| {
            let d = denominator.eval(&adj, everything & !s);
            if d >= 2 {
                let better = match best {
                    None => true,
                    Some((bs, bd, bm)) => {
                        let lhs = size * bd;
                        let rhs = bs * d;
                        lhs < rhs || (lhs == rhs && s < bm)
                    }
                };
                if better {
                    best = Some((size, d, s));
                }
            }
            true
        });
    }
    let (size, d, mask) = best.expect("every non-complete graph has a feasible set");
    Ok(ToughnessResult {
        value: Rat::ratio(size, d),
        witness: Some(VertexSet::from_mask(mask)),
    })
}

/// Chvátal toughness, exact. `+∞` for complete graphs (including `K_0`, `K_1`).
pub fn toughness(g: &Graph) -> Result<ToughnessResult> {
    toughness_with_cap(g, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn toughness_with_cap(g: &Graph, cap: usize) -> Result<ToughnessResult> {
    minimize(g, cap, Denominator::Components)
}

/// Isolated toughness, exact. `+∞` for complete graphs.
pub fn isolated_toughness(g: &Graph) -> Result<ToughnessResult> {
    isolated_toughness_with_cap(g, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn isolated_toughness_with_cap(g: &Graph, cap: usize) -> Result<ToughnessResult> {
    minimize(g, cap, Denominator::Isolated)
}
