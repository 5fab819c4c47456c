//! A small verification campaign: every graph on up to 7 vertices plus
//! random samples, summarized per (n, k).

use ftk::harness::{run_campaign, Campaign, GraphSource, RecordPolicy, Reduction, Theorem};

fn main() -> ftk::Result<()> {
    let sources = [
        GraphSource::Exhaustive {
            max_vertices: 7,
            reduction: Reduction::DegreeOrdered,
        },
        GraphSource::Gnp {
            vertices: 11,
            p: "4/5".parse()?,
            count: 200,
        },
    ];
    for (label, source) in ["all graphs on <= 7 vertices", "200 samples of G(11, 4/5)"]
        .into_iter()
        .zip(sources)
    {
        let mut campaign = Campaign::new(Theorem::T2Isolated, vec![0, 1], vec![0], source, 17);
        campaign.records = RecordPolicy::None;
        let report = run_campaign(&campaign)?;
        println!("{label}: {} graphs visited", report.summary.total);
        for p in &report.summary.parameters {
            println!(
                "  n={} k={}: hypothesis {} verified {} vacuous {} counterexamples {}",
                p.n, p.k, p.hypothesis_satisfied, p.verified, p.vacuous, p.counterexamples
            );
        }
    }
    Ok(())
}
