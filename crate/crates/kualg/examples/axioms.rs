//! Verifying the KU-algebra axioms on a Cayley table, and what the
//! checker reports when a table is broken.
//!
//! ```bash
//! cargo run -p kualg --example axioms
//! ```

use kualg::algebra::verify_axioms;
use kualg::samples;

fn main() {
    let alg = samples::five_element_a();
    let table = alg.rows();

    println!("table:");
    for row in &table {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  {}", cells.join(" "));
    }

    let report = verify_axioms(&table).unwrap();
    println!("axioms: {}", if report.passed() { "PASS" } else { "FAIL" });

    let identities = alg.check_derived_identities();
    println!(
        "derived identities (z*z = 0, z*(x*z) = 0, x*0 = 0, antitonicity, upper bound): {}",
        if identities.passed() { "PASS" } else { "FAIL" }
    );

    // break one diagonal entry: ku4 at x=y=z forces x*x = 0, so the
    // checker must object
    let mut broken = table.clone();
    broken[1][1] = 1;
    let report = verify_axioms(&broken).unwrap();
    println!("after setting 1*1 = 1:");
    for failure in report.failures() {
        println!("  {failure}");
    }
}
