//! Runs the theorem checks over small posets, as `hibi sweep` does.

use hibi::cli::{sweep, SweepOptions, POSET_CHECKS};

fn main() -> hibi::Result<()> {
    let opts = SweepOptions {
        max_elements: Some(4),
        planar_frame: Some((2, 2)),
        jobs: 2,
        ..SweepOptions::default()
    };
    let mut lines = Vec::new();
    let summary = sweep(&opts, &mut lines)?;
    println!("checks: {}", POSET_CHECKS.join(", "));
    println!(
        "{} instances, {} checks, {} violations, {} bytes of JSON lines",
        summary.instances,
        summary.checks_run,
        summary.violations.len(),
        lines.len()
    );
    Ok(())
}
