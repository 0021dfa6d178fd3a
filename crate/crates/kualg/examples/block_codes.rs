//! Generating binary block codes from algebras and checking that the
//! codeword order mirrors the natural order exactly.
//!
//! ```bash
//! cargo run -p kualg --example block_codes
//! ```

use kualg::algebra::gcd_algebra;
use kualg::code::{generate_code, verify_order_isomorphism};
use kualg::function::KUFunction;
use kualg::hasse::code_dot;
use kualg::samples;

fn main() {
    let alg = samples::four_element();
    let code = generate_code(&KUFunction::identity(alg.clone()));
    println!("code of the four-element sample:");
    for word in code.words() {
        println!("  {word}");
    }

    let check = verify_order_isomorphism(&alg);
    println!("order isomorphism holds: {}", check.holds);
    for (q, word) in check.word_of.iter().enumerate() {
        println!("  element {q} <-> {word}");
    }

    println!("\ncovering diagram of the code:\n{}", code_dot(&code));

    // a larger instance: one codeword per element of the divisor algebra
    let code9 = generate_code(&KUFunction::identity(gcd_algebra(9)));
    println!("divisor-algebra code, one word per element of 1..9:");
    for (word, label) in code9.words().iter().zip(code9.labels()) {
        println!("  {word}   (element {})", label.unwrap() + 1);
    }
}
