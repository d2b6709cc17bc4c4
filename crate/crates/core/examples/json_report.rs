//! Running a suite programmatically and printing its deterministic JSON.
use babyverma::report::{run_suite, Options};

fn main() -> babyverma::Result<()> {
    let report = run_suite("pyramid-1224", &Options::default())?;
    println!("{}", report.to_json()?);
    println!("passed: {}", report.passed());
    Ok(())
}
