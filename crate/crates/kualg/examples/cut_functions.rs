//! Cut sets of a KU-valued function: the cut matrix, the Θ-partition by
//! equal cuts, and recovering each value as an infimum of cuts.
//!
//! ```bash
//! cargo run -p kualg --example cut_functions
//! ```

use kualg::function::{cut_matrix, infimum_representation, theta_partition};
use kualg::samples;

fn main() {
    // five points a..e mapped to 4, 6, 7, 1, 2 in the divisor algebra on 1..9
    let f = samples::divisor_function();

    println!("cut matrix (rows are elements 1..9, columns a..e):");
    let matrix = cut_matrix(&f);
    for (q, row) in matrix.rows().iter().enumerate() {
        println!("  {} {row}", q + 1);
    }

    println!("\nΘ-classes (elements with equal cuts):");
    for class in theta_partition(&f).classes() {
        let members: Vec<String> = class.iter().map(|q| (q + 1).to_string()).collect();
        println!("  {{{}}}", members.join(","));
    }

    println!("\neach value is the infimum of the elements cutting its position:");
    for (i, label) in f.labels().iter().enumerate() {
        let value = infimum_representation(&f, i).unwrap();
        println!("  {label} -> {}", value + 1);
    }
}
