//! Verification campaigns for the isolated-toughness and toughness
//! sufficient conditions.
//!
//! For every graph from the source and every `(n, k)` the campaign checks the
//! hypothesis `κ(G) >= n + k + 3` plus the theorem's strict rational bound,
//! and whenever it holds decides `(F, n)`-factor critical avoidability. A
//! graph satisfying the hypothesis but failing the conclusion is a
//! counterexample: the campaign stops after it and dumps the violation.
//!
//! | theorem | bound                         | factor family              |
//! |---------|-------------------------------|----------------------------|
//! | `t1`    | `I(G) > (n+k+4)/(k+3)`        | `{K2, cycles}`             |
//! | `t2t`   | `t(G) > (n+k+4)/(k+3)`        | `{K2, odd cycles >= 5}`    |
//! | `t2i`   | `I(G) > (3(k+3)+n-1)/(k+3)`   | `{K2, odd cycles >= 5}`    |

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::connectivity::vertex_connectivity;
use crate::criticality::{is_n_factor_critical_avoidable_with_cap, Violation};
use crate::error::{Error, Result};
use crate::factors::FactorKind;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::invariants::{isolated_toughness_with_cap, toughness_with_cap};
use crate::kernel::DEFAULT_EXHAUSTIVE_CAP;
use crate::rational::Rat;
use crate::SCHEMA_VERSION;

/// Largest vertex count accepted by exhaustive sources.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 9;

const BATCH: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "t1")]
    T1,
    #[serde(rename = "t2t")]
    T2Toughness,
    #[serde(rename = "t2i")]
    T2Isolated,
}

impl Theorem {
    /// The strict lower bound the relevant invariant must exceed.
    pub fn threshold(self, n: usize, k: usize) -> Rat {
        match self {
            Theorem::T1 | Theorem::T2Toughness => Rat::ratio(n + k + 4, k + 3),
            Theorem::T2Isolated => Rat::ratio(3 * (k + 3) + n - 1, k + 3),
        }
    }

    pub fn factor_kind(self) -> FactorKind {
        match self {
            Theorem::T1 => FactorKind::K2Cycles,
            Theorem::T2Toughness | Theorem::T2Isolated => FactorKind::K2OddCyclesGe5,
        }
    }

    pub fn uses_toughness(self) -> bool {
        self == Theorem::T2Toughness
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T1 => "t1",
            Theorem::T2Toughness => "t2t",
            Theorem::T2Isolated => "t2i",
        })
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        match s {
            "t1" => Ok(Theorem::T1),
            "t2t" => Ok(Theorem::T2Toughness),
            "t2i" => Ok(Theorem::T2Isolated),
            _ => Err(Error::InvalidArgument(format!(
                "unknown theorem {s:?} (expected t1, t2t or t2i)"
            ))),
        }
    }
}

/// How exhaustive sources thin the labeled graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reduction {
    /// Every labeled graph.
    Labeled,
    /// Only labelings with `deg(0) >= deg(1) >= ...`; every isomorphism class
    /// still appears at least once.
    DegreeOrdered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphSource {
    /// All graphs on `1..=max_vertices` vertices.
    Exhaustive {
        max_vertices: usize,
        reduction: Reduction,
    },
    /// `count` samples of `G(vertices, p)`; sample `i` uses stream `i`.
    Gnp {
        vertices: usize,
        p: Rat,
        count: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordPolicy {
    All,
    /// Only graphs satisfying the hypothesis for some `(n, k)`.
    Hypothesis,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Campaign {
    pub theorem: Theorem,
    pub n_values: Vec<usize>,
    pub k_values: Vec<usize>,
    pub source: GraphSource,
    pub seed: u64,
    pub cap: usize,
    pub records: RecordPolicy,
}

impl Campaign {
    pub fn new(
        theorem: Theorem,
        n_values: Vec<usize>,
        k_values: Vec<usize>,
        source: GraphSource,
        seed: u64,
    ) -> Campaign {
        Campaign {
            theorem,
            n_values,
            k_values,
            source,
            seed,
            cap: DEFAULT_EXHAUSTIVE_CAP,
            records: RecordPolicy::All,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.k_values.is_empty() {
            return Err(Error::InvalidArgument(
                "parameter ranges for n and k must be nonempty".into(),
            ));
        }
        match &self.source {
            GraphSource::Exhaustive { max_vertices, .. }
                if *max_vertices > EXHAUSTIVE_MAX_VERTICES =>
            {
                Err(Error::InvalidArgument(format!(
                    "exhaustive sources support at most {EXHAUSTIVE_MAX_VERTICES} vertices"
                )))
            }
            GraphSource::Gnp { p, .. } if *p > Rat::ONE => Err(Error::InvalidArgument(format!(
                "edge probability {p} exceeds 1"
            ))),
            _ => Ok(()),
        }
    }

    fn parameters(&self) -> Vec<(usize, usize)> {
        self.n_values
            .iter()
            .flat_map(|&n| self.k_values.iter().map(move |&k| (n, k)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterCheck {
    pub n: usize,
    pub k: usize,
    pub hypothesis: bool,
    /// `None` when the hypothesis fails and nothing was decided.
    pub conclusion: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub index: u64,
    pub graph6: String,
    pub vertices: usize,
    pub connectivity: usize,
    pub toughness: Rat,
    pub isolated_toughness: Rat,
    pub checks: Vec<ParameterCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedGraph {
    pub index: u64,
    pub graph6: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub index: u64,
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub connectivity: usize,
    pub toughness: Rat,
    pub isolated_toughness: Rat,
    pub violation: Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSummary {
    pub n: usize,
    pub k: usize,
    pub hypothesis_satisfied: u64,
    pub verified: u64,
    /// Processed graphs for which the hypothesis fails.
    pub vacuous: u64,
    pub counterexamples: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: u64,
    pub processed: u64,
    pub skipped: u64,
    pub parameters: Vec<ParameterSummary>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub schema: u32,
    pub campaign: Campaign,
    pub summary: Summary,
    pub records: Vec<GraphRecord>,
    pub skipped: Vec<SkippedGraph>,
    pub counterexamples: Vec<Counterexample>,
    /// Set when a counterexample stopped the run early.
    pub aborted: bool,
}

impl CampaignReport {
    pub fn has_counterexample(&self) -> bool {
        !self.counterexamples.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// One `G(n, p)` sample on stream 0.
pub fn sample_gnp(n: usize, p: Rat, seed: u64) -> Result<Graph> {
    sample_gnp_stream(n, p, seed, 0)
}

/// `G(n, p)` from ChaCha8 keyed by `seed_from_u64(seed)` on `stream`.
///
/// Pair `j` in lexicographic order (`(0,1), (0,2), ..., (1,2), ...`) reads the
/// 64-bit word at word position `2j` and is an edge iff `word < p · 2^64`,
/// compared exactly as `word · den < num · 2^64`.
pub fn sample_gnp_stream(n: usize, p: Rat, seed: u64, stream: u64) -> Result<Graph> {
    let (num, den) = match p {
        Rat::Finite { num, den } if num <= den => (num as u128, den as u128),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "edge probability {p} is not in [0, 1]"
            )))
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let word = rng.next_u64() as u128;
            if word * den < num << 64 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Labeled graph with edge bit `j` set for the `j`-th pair in lexicographic order.
fn graph_from_edge_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (j, &(u, v)) in pairs.iter().enumerate() {
        if mask >> j & 1 == 1 {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
    }
    Graph::from_masks(&rows)
}

fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Visits every graph on exactly `n <= 9` vertices in increasing edge-mask
/// order (bit `j` is the `j`-th pair in lexicographic order), thinned by
/// `reduction`. `visit` returns false to stop early.
pub fn for_each_graph(
    n: usize,
    reduction: Reduction,
    mut visit: impl FnMut(Graph) -> bool,
) -> Result<()> {
    if n > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "exhaustive enumeration supports at most {EXHAUSTIVE_MAX_VERTICES} vertices"
        )));
    }
    let pairs = lex_pairs(n);
    let incident: Vec<u64> = (0..n)
        .map(|v| {
            pairs
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| a == v || b == v)
                .fold(0, |m, (j, _)| m | 1 << j)
        })
        .collect();
    let keep = |mask: u64| match reduction {
        Reduction::Labeled => true,
        Reduction::DegreeOrdered => {
            let mut prev = u32::MAX;
            incident.iter().all(|&inc| {
                let d = (mask & inc).count_ones();
                let ok = d <= prev;
                prev = d;
                ok
            })
        }
    };
    for mask in 0..1u64 << pairs.len() {
        if keep(mask) && !visit(graph_from_edge_mask(n, &pairs, mask)) {
            break;
        }
    }
    Ok(())
}

/// Streams the source's graphs in order, in batches, to `sink`; `sink`
/// returns false to stop.
fn stream_graphs(
    campaign: &Campaign,
    mut sink: impl FnMut(Vec<Graph>) -> Result<bool>,
) -> Result<()> {
    let mut batch = Vec::with_capacity(BATCH);
    let mut status: Result<bool> = Ok(true);
    match campaign.source {
        GraphSource::Exhaustive {
            max_vertices,
            reduction,
        } => {
            for n in 1..=max_vertices {
                for_each_graph(n, reduction, |g| {
                    batch.push(g);
                    if batch.len() == BATCH {
                        status = sink(std::mem::take(&mut batch));
                    }
                    matches!(status, Ok(true))
                })?;
                if !matches!(status, Ok(true)) {
                    return status.map(|_| ());
                }
            }
        }
        GraphSource::Gnp { vertices, p, count } => {
            for i in 0..count as u64 {
                batch.push(sample_gnp_stream(vertices, p, campaign.seed, i)?);
                if batch.len() == BATCH && !sink(std::mem::take(&mut batch))? {
                    return Ok(());
                }
            }
        }
    }
    if !batch.is_empty() {
        sink(batch)?;
    }
    Ok(())
}

enum Outcome {
    Processed {
        record: GraphRecord,
        counterexample: Option<Box<Counterexample>>,
    },
    Skipped(SkippedGraph),
}

fn evaluate(campaign: &Campaign, params: &[(usize, usize)], index: u64, g: &Graph) -> Outcome {
    let graph6 = write_graph6(g).unwrap_or_else(|_| format!("<{} vertices>", g.n()));
    let skip = |reason: String| {
        Outcome::Skipped(SkippedGraph {
            index,
            graph6: graph6.clone(),
            reason,
        })
    };
    let connectivity = vertex_connectivity(g);
    let (toughness, isolated) = match (
        toughness_with_cap(g, campaign.cap),
        isolated_toughness_with_cap(g, campaign.cap),
    ) {
        (Ok(t), Ok(i)) => (t.value, i.value),
        (Err(e), _) | (_, Err(e)) => return skip(e.to_string()),
    };
    let invariant = if campaign.theorem.uses_toughness() {
        toughness
    } else {
        isolated
    };

    let mut checks = Vec::with_capacity(params.len());
    let mut counterexample = None;
    for &(n, k) in params {
        let hypothesis = connectivity >= n + k + 3 && invariant > campaign.theorem.threshold(n, k);
        let mut conclusion = None;
        if hypothesis {
            match is_n_factor_critical_avoidable_with_cap(
                g,
                n,
                campaign.theorem.factor_kind(),
                campaign.cap,
            ) {
                Ok(verdict) => {
                    conclusion = Some(verdict.holds);
                    if let (Some(violation), None) = (verdict.violation, &counterexample) {
                        counterexample = Some(Counterexample {
                            index,
                            graph6: graph6.clone(),
                            n,
                            k,
                            connectivity,
                            toughness,
                            isolated_toughness: isolated,
                            violation,
                        });
                    }
                }
                Err(e) => return skip(format!("n = {n}, k = {k}: {e}")),
            }
        }
        checks.push(ParameterCheck {
            n,
            k,
            hypothesis,
            conclusion,
        });
    }
    Outcome::Processed {
        record: GraphRecord {
            index,
            graph6,
            vertices: g.n(),
            connectivity,
            toughness,
            isolated_toughness: isolated,
            checks,
        },
        counterexample: counterexample.map(Box::new),
    }
}

/// Runs `campaign` on the current rayon pool. The report depends only on
/// the campaign, never on the number of threads.
pub fn run_campaign(campaign: &Campaign) -> Result<CampaignReport> {
    campaign.validate()?;
    let params = campaign.parameters();
    let mut summary = Summary {
        total: 0,
        processed: 0,
        skipped: 0,
        parameters: params
            .iter()
            .map(|&(n, k)| ParameterSummary {
                n,
                k,
                hypothesis_satisfied: 0,
                verified: 0,
                vacuous: 0,
                counterexamples: 0,
            })
            .collect(),
    };
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    let mut counterexamples = Vec::new();
    let mut aborted = false;

    stream_graphs(campaign, |batch| {
        let base = summary.total;
        let outcomes: Vec<Outcome> = batch
            .par_iter()
            .enumerate()
            .map(|(i, g)| evaluate(campaign, &params, base + i as u64, g))
            .collect();
        for outcome in outcomes {
            summary.total += 1;
            match outcome {
                Outcome::Skipped(s) => {
                    summary.skipped += 1;
                    skipped.push(s);
                }
                Outcome::Processed {
                    record,
                    counterexample,
                } => {
                    summary.processed += 1;
                    for (slot, check) in summary.parameters.iter_mut().zip(&record.checks) {
                        match (check.hypothesis, check.conclusion) {
                            (false, _) => slot.vacuous += 1,
                            (true, Some(true)) => {
                                slot.hypothesis_satisfied += 1;
                                slot.verified += 1;
                            }
                            (true, _) => {
                                slot.hypothesis_satisfied += 1;
                                slot.counterexamples += 1;
                            }
                        }
                    }
                    let keep = match campaign.records {
                        RecordPolicy::All => true,
                        RecordPolicy::Hypothesis => record.checks.iter().any(|c| c.hypothesis),
                        RecordPolicy::None => false,
                    };
                    if keep || counterexample.is_some() {
                        records.push(record);
                    }
                    if let Some(c) = counterexample {
                        counterexamples.push(*c);
                        aborted = true;
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    })?;

    Ok(CampaignReport {
        schema: SCHEMA_VERSION,
        campaign: campaign.clone(),
        summary,
        records,
        skipped,
        counterexamples,
        aborted,
    })
}
