mod common;

use std::collections::HashSet;

use ftk::graph6::write_graph6;
use ftk::harness::{
    for_each_graph, run_campaign, sample_gnp, sample_gnp_stream, Campaign, CampaignReport,
    GraphSource, RecordPolicy, Reduction, Theorem,
};
use ftk::invariants::{isolated_toughness, toughness};
use ftk::{Graph, Rat};

fn p(text: &str) -> Rat {
    text.parse().unwrap()
}

/// Smallest adjacency bit string over all relabelings.
fn canonical(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                code = code << 1 | g.has_edge(perm[u], perm[v]) as u64;
            }
        }
        best = best.min(code);
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best
}

fn classes(n: usize, reduction: Reduction) -> (HashSet<u64>, usize) {
    let mut seen = HashSet::new();
    let mut visited = 0;
    for_each_graph(n, reduction, |g| {
        visited += 1;
        seen.insert(canonical(&g));
        true
    })
    .unwrap();
    (seen, visited)
}

#[test]
fn degree_ordered_enumeration_covers_every_isomorphism_class() {
    // number of unlabeled graphs on 1..=6 vertices
    let known = [1, 2, 4, 11, 34, 156];
    for n in 1..=6 {
        let (all, labeled) = classes(n, Reduction::Labeled);
        let (reduced, kept) = classes(n, Reduction::DegreeOrdered);
        assert_eq!(all.len(), known[n - 1]);
        assert_eq!(reduced, all, "n = {n}");
        assert!(kept <= labeled);
    }
}

#[test]
fn gnp_snapshot_is_stable() {
    let g = sample_gnp(10, p("1/2"), 42).unwrap();
    assert_eq!(g.edge_count(), 20);
    assert_eq!(write_graph6(&g).unwrap(), "ILMtTXLG?");
    let h = sample_gnp_stream(12, p("3/4"), 7, 3).unwrap();
    assert_eq!(write_graph6(&h).unwrap(), "KznujN~~^eix");
}

#[test]
fn gnp_edge_extremes() {
    assert_eq!(sample_gnp(9, Rat::ZERO, 1).unwrap().edge_count(), 0);
    assert!(sample_gnp(9, Rat::ONE, 1).unwrap().is_complete());
    assert!(sample_gnp(9, p("3/2"), 1).is_err());
    assert!(sample_gnp(9, Rat::Infinity, 1).is_err());
}

#[test]
fn streams_differ_and_repeat() {
    let a = sample_gnp_stream(14, p("1/2"), 5, 0).unwrap();
    let b = sample_gnp_stream(14, p("1/2"), 5, 1).unwrap();
    assert_ne!(a, b);
    assert_eq!(a, sample_gnp_stream(14, p("1/2"), 5, 0).unwrap());
}

fn report_in_pool(campaign: &Campaign, threads: usize) -> String {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    pool.install(|| run_campaign(campaign).unwrap().to_json())
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let exhaustive = Campaign::new(
        Theorem::T2Isolated,
        vec![0, 1],
        vec![0],
        GraphSource::Exhaustive {
            max_vertices: 6,
            reduction: Reduction::DegreeOrdered,
        },
        0,
    );
    let random = Campaign::new(
        Theorem::T1,
        vec![0],
        vec![0, 1],
        GraphSource::Gnp {
            vertices: 10,
            p: p("3/4"),
            count: 300,
        },
        99,
    );
    for c in [exhaustive, random] {
        let one = report_in_pool(&c, 1);
        assert_eq!(one, report_in_pool(&c, 2));
        assert_eq!(one, report_in_pool(&c, 4));
    }
}

#[test]
fn skips_reconcile_with_totals() {
    let mut c = Campaign::new(
        Theorem::T2Toughness,
        vec![0],
        vec![0],
        GraphSource::Exhaustive {
            max_vertices: 6,
            reduction: Reduction::Labeled,
        },
        0,
    );
    c.cap = 5;
    let report = run_campaign(&c).unwrap();
    let s = &report.summary;
    assert_eq!(s.processed + s.skipped, s.total);
    assert_eq!(s.skipped, 1 << 15);
    assert_eq!(report.skipped.len() as u64, s.skipped);
    assert!(report.skipped.iter().all(|r| !r.reason.is_empty()));
    let par = &s.parameters[0];
    assert_eq!(par.hypothesis_satisfied + par.vacuous, s.processed);
}

#[test]
fn records_agree_with_direct_computation() {
    let c = Campaign::new(
        Theorem::T1,
        vec![0],
        vec![0],
        GraphSource::Gnp {
            vertices: 9,
            p: p("2/3"),
            count: 40,
        },
        3,
    );
    let report: CampaignReport = run_campaign(&c).unwrap();
    assert_eq!(report.records.len(), 40);
    for rec in &report.records {
        let g = ftk::graph6::parse_graph6(&rec.graph6).unwrap();
        assert_eq!(g, sample_gnp_stream(9, p("2/3"), 3, rec.index).unwrap());
        assert_eq!(rec.toughness, toughness(&g).unwrap().value);
        assert_eq!(
            rec.isolated_toughness,
            isolated_toughness(&g).unwrap().value
        );
        let check = &rec.checks[0];
        let hyp = rec.connectivity >= 3 && rec.isolated_toughness > Theorem::T1.threshold(0, 0);
        assert_eq!(check.hypothesis, hyp);
        assert_eq!(check.conclusion.is_some(), hyp);
    }
}

#[test]
fn record_policies_filter() {
    let source = GraphSource::Exhaustive {
        max_vertices: 5,
        reduction: Reduction::DegreeOrdered,
    };
    let mut c = Campaign::new(Theorem::T1, vec![0], vec![0], source, 0);
    let all = run_campaign(&c).unwrap();
    c.records = RecordPolicy::Hypothesis;
    let hyp = run_campaign(&c).unwrap();
    c.records = RecordPolicy::None;
    let none = run_campaign(&c).unwrap();
    assert_eq!(all.records.len() as u64, all.summary.processed);
    assert_eq!(
        hyp.records.len() as u64,
        hyp.summary.parameters[0].hypothesis_satisfied
    );
    assert!(hyp
        .records
        .iter()
        .all(|r| r.checks.iter().any(|c| c.hypothesis)));
    assert!(none.records.is_empty());
    assert_eq!(all.summary, none.summary);
}

#[test]
fn complete_graphs_satisfy_the_hypothesis() {
    let c = Campaign::new(
        Theorem::T2Toughness,
        vec![0],
        vec![0],
        GraphSource::Exhaustive {
            max_vertices: 7,
            reduction: Reduction::DegreeOrdered,
        },
        0,
    );
    let report = run_campaign(&c).unwrap();
    assert!(!report.has_counterexample());
    assert!(report.summary.parameters[0].hypothesis_satisfied >= 1);
    let k7 = write_graph6(&ftk::graph::complete_graph(7)).unwrap();
    let rec = report.records.iter().find(|r| r.graph6 == k7).unwrap();
    assert!(rec.checks[0].hypothesis);
    assert_eq!(rec.checks[0].conclusion, Some(true));
}

#[test]
fn invalid_campaigns_are_rejected() {
    let src = GraphSource::Exhaustive {
        max_vertices: 12,
        reduction: Reduction::Labeled,
    };
    assert!(run_campaign(&Campaign::new(Theorem::T1, vec![0], vec![0], src, 0)).is_err());
    let src = GraphSource::Gnp {
        vertices: 5,
        p: Rat::ONE,
        count: 3,
    };
    assert!(run_campaign(&Campaign::new(Theorem::T1, vec![], vec![0], src, 0)).is_err());
}
