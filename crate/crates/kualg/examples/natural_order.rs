//! The natural order x <= y iff y*x = 0, its covering diagram, and the
//! canonical algebra a poset induces.
//!
//! ```bash
//! cargo run -p kualg --example natural_order
//! ```

use kualg::algebra::gcd_algebra;
use kualg::hasse::order_dot;
use kualg::order::from_poset;

fn main() {
    // the divisor algebra on 1..9 orders its elements by divisibility
    let alg = gcd_algebra(9);
    let ord = alg.natural_order();

    println!("strict pairs (indices are integers minus one):");
    for (x, y) in ord.strict_pairs() {
        println!("  {} < {}", x + 1, y + 1);
    }

    println!("\ncovering diagram:\n{}", order_dot(&ord));

    // the same poset fed back in yields a KU-algebra with that exact order
    let leq: Vec<Vec<bool>> = (0..9)
        .map(|x| (0..9).map(|y| ord.leq(x, y)).collect())
        .collect();
    let canonical = from_poset(&leq).unwrap();
    assert_eq!(canonical.natural_order(), ord);
    println!("canonical algebra of the divisibility poset, row for 2:");
    println!("  {:?}", canonical.row(1));
    println!("divisor algebra row for 2 (same order, different table):");
    println!("  {:?}", alg.row(1));
}
