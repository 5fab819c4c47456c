//! Build the extremal families and check every claimed value.
//!
//! cargo run --release --example families

use ftk::families::{check_family, Family, FamilySpec};

fn main() -> ftk::Result<()> {
    for family in [Family::Remark1, Family::Remark2, Family::Remark4] {
        for (n, k) in [(1, 0), (2, 1)] {
            let report = check_family(FamilySpec::new(family, n, k)?)?;
            println!(
                "{family}(n={n}, k={k}) {} on {} vertices",
                report.graph6, report.vertices
            );
            for c in &report.claims {
                let mark = if c.pass { "ok  " } else { "FAIL" };
                println!(
                    "  {mark} {:<28} expected {:<24} computed {}",
                    c.claim, c.expected, c.computed
                );
            }
        }
    }
    Ok(())
}
