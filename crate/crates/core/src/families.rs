//! Extremal join constructions showing the connectivity and toughness
//! conditions cannot be relaxed, together with their claimed invariants.
//!
//! For nonnegative `n >= k + 1`:
//!
//! | family    | graph                                   | claimed values                              |
//! |-----------|-----------------------------------------|---------------------------------------------|
//! | `Remark1` | `K_{n+k+3} + ((k+2) K_1 ∪ K_2)`          | `I = t = (n+k+4)/(k+3)`, `κ >= n+k+3`        |
//! | `Remark2` | `K_{n+k+2} + ((k+1) K_1 ∪ K_2)`          | `I = (n+k+3)/(k+2)`, `κ >= n+k+2`            |
//! | `Remark4` | `K_{n+k+3} + ((k+2) K_3 ∪ K_2)`          | `I = (3(k+3)+n-1)/(k+3)`, `κ >= n+k+3`       |
//!
//! None of them is `(F, n)`-factor critical avoidable: `F = {K2, cycles}` for
//! the first two, `F = {K2, odd cycles >= 5}` for the last. The expectation
//! records the closed forms as stated; [`check_family`] recomputes every one.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connectivity::vertex_connectivity;
use crate::criticality::{is_n_factor_critical_avoidable_with_cap, Violation};
use crate::error::{Error, Result};
use crate::factors::FactorKind;
use crate::graph::{complete_graph, disjoint_union, empty_graph, join, repeat, Graph};
use crate::graph6::write_graph6;
use crate::invariants::{isolated_toughness_with_cap, toughness_with_cap};
use crate::kernel::DEFAULT_EXHAUSTIVE_CAP;
use crate::rational::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Remark1,
    Remark2,
    Remark4,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Remark1 => "remark1",
            Family::Remark2 => "remark2",
            Family::Remark4 => "remark4",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> Result<FamilySpec> {
        if n < k + 1 {
            return Err(Error::InvalidArgument(format!(
                "family parameters need n >= k + 1, got n = {n}, k = {k}"
            )));
        }
        Ok(FamilySpec { family, n, k })
    }
}

/// Claimed non-avoidability: `holds` is the expected verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalClaim {
    pub kind: FactorKind,
    pub deleted: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyExpectation {
    pub connectivity_at_least: usize,
    pub toughness: Option<Rat>,
    pub isolated_toughness: Option<Rat>,
    /// Strict lower bound claimed for the isolated toughness.
    pub isolated_toughness_exceeds: Option<Rat>,
    pub critical_avoidable: CriticalClaim,
}

fn frac(num: usize, den: usize) -> Rat {
    Rat::ratio(num, den)
}

pub fn build_family(spec: FamilySpec) -> Result<(Graph, FamilyExpectation)> {
    let FamilySpec { family, n, k } = FamilySpec::new(spec.family, spec.n, spec.k)?;
    let edge = complete_graph(2);
    let (graph, expectation) = match family {
        Family::Remark1 => {
            let side = disjoint_union(&[empty_graph(k + 2), edge]);
            let value = frac(n + k + 4, k + 3);
            (
                join(&complete_graph(n + k + 3), &side),
                FamilyExpectation {
                    connectivity_at_least: n + k + 3,
                    toughness: Some(value),
                    isolated_toughness: Some(value),
                    isolated_toughness_exceeds: None,
                    critical_avoidable: CriticalClaim {
                        kind: FactorKind::K2Cycles,
                        deleted: n,
                        holds: false,
                    },
                },
            )
        }
        Family::Remark2 => {
            let side = disjoint_union(&[empty_graph(k + 1), edge]);
            (
                join(&complete_graph(n + k + 2), &side),
                FamilyExpectation {
                    connectivity_at_least: n + k + 2,
                    toughness: None,
                    isolated_toughness: Some(frac(n + k + 3, k + 2)),
                    isolated_toughness_exceeds: Some(frac(n + k + 4, k + 3)),
                    critical_avoidable: CriticalClaim {
                        kind: FactorKind::K2Cycles,
                        deleted: n,
                        holds: false,
                    },
                },
            )
        }
        Family::Remark4 => {
            let side = disjoint_union(&[repeat(&complete_graph(3), k + 2), edge]);
            (
                join(&complete_graph(n + k + 3), &side),
                FamilyExpectation {
                    connectivity_at_least: n + k + 3,
                    toughness: None,
                    isolated_toughness: Some(frac(3 * (k + 3) + n - 1, k + 3)),
                    isolated_toughness_exceeds: None,
                    critical_avoidable: CriticalClaim {
                        kind: FactorKind::K2OddCyclesGe5,
                        deleted: n,
                        holds: false,
                    },
                },
            )
        }
    };
    Ok((graph, expectation))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub graph6: String,
    pub vertices: usize,
    pub expectation: FamilyExpectation,
    pub claims: Vec<ClaimCheck>,
    pub violation: Option<Violation>,
    pub all_pass: bool,
}

pub fn check_family(spec: FamilySpec) -> Result<FamilyReport> {
    check_family_with_cap(spec, DEFAULT_EXHAUSTIVE_CAP)
}

pub fn check_family_with_cap(spec: FamilySpec, cap: usize) -> Result<FamilyReport> {
    let (g, exp) = build_family(spec)?;
    let mut claims = Vec::new();
    let mut push = |claim: &str, expected: String, computed: String, pass: bool| {
        claims.push(ClaimCheck {
            claim: claim.into(),
            expected,
            computed,
            pass,
        });
    };

    let kappa = vertex_connectivity(&g);
    push(
        "connectivity",
        format!(">= {}", exp.connectivity_at_least),
        kappa.to_string(),
        kappa >= exp.connectivity_at_least,
    );

    if let Some(t) = exp.toughness {
        let got = toughness_with_cap(&g, cap)?.value;
        push("toughness", t.to_string(), got.to_string(), got == t);
    }
    let iso = isolated_toughness_with_cap(&g, cap)?.value;
    if let Some(i) = exp.isolated_toughness {
        push(
            "isolated_toughness",
            i.to_string(),
            iso.to_string(),
            iso == i,
        );
    }
    if let Some(bound) = exp.isolated_toughness_exceeds {
        push(
            "isolated_toughness_exceeds",
            format!("> {bound}"),
            iso.to_string(),
            iso > bound,
        );
    }

    let claim = exp.critical_avoidable;
    let verdict = is_n_factor_critical_avoidable_with_cap(&g, claim.deleted, claim.kind, cap)?;
    // a reported violation must survive recomputation
    let rechecked = match &verdict.violation {
        Some(v) => v.recompute_deficiency(&g)? >= 1,
        None => true,
    };
    push(
        "critical_avoidable",
        format!("{} ({}, n = {})", claim.holds, claim.kind, claim.deleted),
        verdict.holds.to_string(),
        verdict.holds == claim.holds && rechecked,
    );

    let all_pass = claims.iter().all(|c| c.pass);
    Ok(FamilyReport {
        spec,
        graph6: write_graph6(&g)?,
        vertices: g.n(),
        expectation: exp,
        claims,
        violation: verdict.violation,
        all_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: u64, b: u64) -> Rat {
        Rat::new(a, b).unwrap()
    }

    fn claim<'a>(report: &'a FamilyReport, name: &str) -> &'a ClaimCheck {
        report.claims.iter().find(|c| c.claim == name).unwrap()
    }

    #[test]
    fn sizes_and_closed_forms() {
        let (g, e) = build_family(FamilySpec::new(Family::Remark1, 1, 0).unwrap()).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(
            (e.isolated_toughness, e.toughness),
            (Some(r(5, 3)), Some(r(5, 3)))
        );

        let (g, e) = build_family(FamilySpec::new(Family::Remark2, 1, 0).unwrap()).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(e.isolated_toughness, Some(r(2, 1)));

        let (g, e) = build_family(FamilySpec::new(Family::Remark4, 1, 0).unwrap()).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(e.isolated_toughness, Some(r(3, 1)));

        let (g, e) = build_family(FamilySpec::new(Family::Remark1, 2, 1).unwrap()).unwrap();
        assert_eq!(g.n(), 11);
        assert_eq!(e.isolated_toughness, Some(r(7, 4)));
    }

    #[test]
    fn rejects_small_n() {
        assert!(matches!(
            FamilySpec::new(Family::Remark1, 1, 1),
            Err(Error::InvalidArgument(_))
        ));
        let raw = FamilySpec {
            family: Family::Remark4,
            n: 0,
            k: 0,
        };
        assert!(build_family(raw).is_err());
    }

    #[test]
    fn remark4_all_claims_pass() {
        let report = check_family(FamilySpec::new(Family::Remark4, 1, 0).unwrap()).unwrap();
        assert!(report.all_pass, "{report:#?}");
        assert_eq!(claim(&report, "isolated_toughness").computed, "3/1");
    }

    #[test]
    fn remark1_isolated_and_connectivity_claims_pass() {
        let report = check_family(FamilySpec::new(Family::Remark1, 1, 0).unwrap()).unwrap();
        assert!(claim(&report, "isolated_toughness").pass);
        assert!(claim(&report, "connectivity").pass);
        assert!(claim(&report, "critical_avoidable").pass);
        // removing the clique leaves k + 3 components: t = (n+k+3)/(k+3)
        assert_eq!(claim(&report, "toughness").computed, "4/3");
        assert!(!claim(&report, "toughness").pass);
    }
}
