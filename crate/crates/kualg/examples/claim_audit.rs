//! Auditing the cut-set laws on a concrete instance.
//!
//! Some of the laws circulate in a printed form that their own worked
//! examples refute (a union where only an intersection can hold, and the
//! like). The audit evaluates both the literal and the corrected form of
//! every law and prints a witness for each failure.
//!
//! ```bash
//! cargo run -p kualg --example claim_audit
//! ```

use kualg::audit::{audit_propositions, AuditConfig};
use kualg::samples;

fn main() {
    // two points x, y mapped to the incomparable elements 1 and 2 of the
    // order-5 sample: the smallest instance separating the variants
    let f = samples::pair_function();
    let report = audit_propositions(&f, &AuditConfig::default());

    println!("{:<20} {:<10} verdict", "claim", "variant");
    for entry in report.entries() {
        let verdict = if entry.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{:<20} {:<10} {verdict}",
            entry.claim.id(),
            entry.variant.to_string()
        );
        if let Some(w) = &entry.witness {
            line.push_str(&format!("  [{}]", w.detail));
        }
        println!("{line}");
    }

    println!(
        "\nall corrected forms hold: {}; all printed forms hold: {}",
        report.asserted_pass(),
        report.all_pass()
    );
}
