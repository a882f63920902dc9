//! Exhaustive verification reports as JSON lines.

use qcatalan::bijmaps::{verify_phi_theorems, verify_psi_theorems};
use qcatalan::qseries::Family;

fn main() -> qcatalan::Result<()> {
    let max_a: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    for n in 1..=max_a {
        for report in [
            verify_phi_theorems(Family::A, n)?,
            verify_psi_theorems(Family::A, n)?,
        ] {
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
        }
    }
    for n in 1..=4 {
        for report in [
            verify_phi_theorems(Family::B, n)?,
            verify_psi_theorems(Family::B, n)?,
        ] {
            println!(
                "{}",
                serde_json::to_string(&report).expect("report serializes")
            );
        }
    }
    Ok(())
}
