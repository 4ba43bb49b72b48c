//! Run the seeded verification suites the command-line tool exposes.
//!
//! ```not_rust
//! cargo run --release --example verification
//! ```

use celltrees::verify::{run_suite, Suite};

fn main() -> celltrees::Result<()> {
    for name in Suite::NAMES.iter().filter(|n| **n != "all") {
        let suite: Suite = name.parse()?;
        let report = run_suite(suite, 42, 3)?;
        println!("{name:<10} {:>4} checks, {:>4} passed ({} ms)", report.checks.len(), report.passed(), report.wall_time_ms);
        for c in report.checks.iter().filter(|c| !c.pass) {
            println!("  FAIL {} on {}: expected {}, got {}", c.name, c.complex, c.expected, c.actual);
        }
    }
    Ok(())
}
