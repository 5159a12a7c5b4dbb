//! Run every consistency suite on small ranges.

use grassmann_hodge::enumeration::Enumerator;
use grassmann_hodge::verify::{run_suite, Ranges, Suite};

fn main() -> grassmann_hodge::Result<()> {
    let ranges = Ranges {
        nmax: Some(7),
        ..Ranges::default()
    };
    let en = Enumerator::default();
    for suite in Suite::ALL {
        let report = run_suite(suite, &ranges, &en)?;
        let status = if report.passed() { "ok" } else { "FAILED" };
        println!(
            "{:<16} {:>7} checks  {status}",
            suite.to_string(),
            report.checked
        );
        for c in report.counterexamples.iter().take(5) {
            println!("    {c}");
        }
    }
    Ok(())
}
