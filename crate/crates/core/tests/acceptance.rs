//! Runs every verification suite with its full parameter set and prints one line per suite.

use std::time::Instant;

use glnchar::verify::{run_suite, Suite, SuiteParams};

fn main() {
    let mut failed = Vec::new();
    for suite in Suite::ALL {
        let start = Instant::now();
        let line = match run_suite(suite, &SuiteParams::default()) {
            Ok(report) => {
                for f in report.failures().take(5) {
                    println!("    failed: {} {}", f.name, f.detail);
                }
                if !report.pass() {
                    failed.push(suite);
                }
                report.summary_line()
            }
            Err(e) => {
                failed.push(suite);
                format!("FAIL {} ({}): error {e}", suite, suite.number())
            }
        };
        println!("{line} [{:.1?}]", start.elapsed());
    }
    println!("{} of {} suites passed", Suite::ALL.len() - failed.len(), Suite::ALL.len());
    if !failed.is_empty() {
        eprintln!("failing suites: {failed:?}");
        std::process::exit(1);
    }
}
