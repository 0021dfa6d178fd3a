//! Small sample algebras and functions used throughout the tests, the
//! examples and the documentation.

use crate::algebra::FiniteKUAlgebra;
use crate::function::KUFunction;

/// Order-5 sample. Natural order: 0 < 1 < 3 < 4, 0 < 2 < 4, 1 < 4.
pub fn five_element_a() -> FiniteKUAlgebra {
    FiniteKUAlgebra::new(vec![
        vec![0, 1, 2, 3, 4],
        vec![0, 0, 2, 3, 4],
        vec![0, 1, 0, 3, 3],
        vec![0, 0, 2, 0, 2],
        vec![0, 0, 0, 0, 0],
    ])
    .expect("sample table is a KU-algebra")
}

/// Order-5 sample. Natural order: 0 < 1 < 3, 0 < 2 < 3, 1 < 4.
pub fn five_element_b() -> FiniteKUAlgebra {
    FiniteKUAlgebra::new(vec![
        vec![0, 1, 2, 3, 4],
        vec![0, 0, 2, 2, 1],
        vec![0, 1, 0, 1, 4],
        vec![0, 0, 0, 0, 1],
        vec![0, 0, 2, 2, 0],
    ])
    .expect("sample table is a KU-algebra")
}

/// Order-4 sample. Natural order: 0 < 1 < 2, 0 < 3. Not the canonical
/// algebra of its poset: `1*2 = 1` rather than `2`.
pub fn four_element() -> FiniteKUAlgebra {
    FiniteKUAlgebra::new(vec![
        vec![0, 1, 2, 3],
        vec![0, 0, 1, 3],
        vec![0, 0, 0, 3],
        vec![0, 1, 2, 0],
    ])
    .expect("sample table is a KU-algebra")
}

/// Two-point function x -> 1, y -> 2 into [`five_element_b`].
pub fn pair_function() -> KUFunction {
    KUFunction::new(
        five_element_b(),
        vec!["x".to_string(), "y".to_string()],
        vec![1, 2],
    )
    .expect("sample function is valid")
}

/// Three-point function x -> 1, y -> 2, z -> 3 into [`five_element_b`].
pub fn triple_function() -> KUFunction {
    KUFunction::new(
        five_element_b(),
        vec!["x".to_string(), "y".to_string(), "z".to_string()],
        vec![1, 2, 3],
    )
    .expect("sample function is valid")
}

/// Five-point function a..e -> 4, 6, 7, 1, 2 (as integers of the divisor
/// algebra on 1..9).
pub fn divisor_function() -> KUFunction {
    KUFunction::new(
        crate::algebra::gcd_algebra(9),
        ["a", "b", "c", "d", "e"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        vec![3, 5, 6, 0, 1],
    )
    .expect("sample function is valid")
}
