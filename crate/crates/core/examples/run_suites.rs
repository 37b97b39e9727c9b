//! Run every reproduction suite and print one line per check.
use drg_uniform::cli::{run_suite, Config, SUITES};

fn main() -> drg_uniform::Result<()> {
    let cfg = Config::default();
    for name in SUITES {
        let report = run_suite(name, &cfg)?;
        for c in &report.checks {
            println!("[{}] {name}: {} {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
    }
    Ok(())
}
