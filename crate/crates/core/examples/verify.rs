//! Runs every verification suite on its default groups.
use glnchar::verify::{run_suite, Suite, SuiteParams};

fn main() -> glnchar::Result<()> {
    for suite in Suite::ALL {
        let report = run_suite(suite, &SuiteParams::default())?;
        println!("{}", report.summary_line());
    }
    Ok(())
}
