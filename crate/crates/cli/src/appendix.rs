//! Golden check of the published profile tables against the engine.

use anyhow::Result;
use boxclique_core::fixtures::FixtureSet;
use boxclique_core::profiles::{check_profile_table, TableStatus};
use std::path::Path;

pub fn check(fixtures: &Path, strict: bool) -> Result<usize> {
    let fx = FixtureSet::new(fixtures);
    let mut failures = 0usize;
    println!("published profile tables:");
    for table in fx.profile_tables()? {
        let status = check_profile_table(&table)?;
        let (text, failed) = match &status {
            TableStatus::Pass => ("PASS".to_string(), false),
            TableStatus::PassRawOrbits { incompressible } => (
                format!(
                    "PASS (raw orbits; the published cardinality counts the {incompressible} incompressible-support ones)"
                ),
                strict,
            ),
            TableStatus::KnownDefect => (
                "KNOWN DEFECT (mislabelled columns in print; count and edge multiset agree)"
                    .to_string(),
                strict,
            ),
            TableStatus::Fail(detail) => (format!("FAIL ({detail})"), true),
        };
        println!("  ({},{}): {} rows: {text}", table.s, table.v, table.rows.len());
        if failed {
            failures += 1;
        }
    }
    Ok(failures)
}
