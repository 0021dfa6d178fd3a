//! Building a KU-algebra and KU-function back from a binary block code.
//!
//! The construction closes the code under column meets: the meet word of
//! column `i` is the bitwise AND of all words with bit `i` set. Adding
//! those meets (and a bottom, when the closure has no minimum) turns the
//! word set into the family of principal down-sets of a poset, on which
//! the canonical algebra together with the column-to-meet assignment
//! regenerates precisely the closed word set. The input code is therefore
//! always contained in the regenerated one, with equality exactly when
//! the closure added nothing.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::FiniteKUAlgebra;
use crate::code::{generate_code, BlockCode, Codeword};
use crate::error::KuError;
use crate::function::KUFunction;
use crate::order::{canonical_algebra, OrderRelation};

/// How an element of a reconstructed algebra came to exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// The word was part of the input code.
    Original,
    /// A column meet that the input was missing.
    SynthesizedMeet,
    /// The all-zeros bottom, adjoined because the closure had no minimum.
    BottomAdjoined,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Original => "original",
            Provenance::SynthesizedMeet => "synthesized-meet",
            Provenance::BottomAdjoined => "bottom-adjoined",
        })
    }
}

/// Outcome of [`reconstruct`].
#[derive(Debug, Clone)]
pub struct ReconstructionResult {
    pub algebra: FiniteKUAlgebra,
    /// Maps code column `i` (label `c<i>`) to the element of its meet word.
    pub function: KUFunction,
    /// Element index to word.
    pub word_of: Vec<Codeword>,
    /// Element index to origin.
    pub provenance: Vec<Provenance>,
    /// True iff the regenerated code equals the input as a set of words.
    pub exact: bool,
}

/// Certificate produced by [`exact_reconstructible`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCertificate {
    pub exact: bool,
    /// Columns whose meet word is missing from the input.
    pub missing_meet_columns: Vec<usize>,
    /// Whether the input has a bitwise least word.
    pub has_minimum: bool,
}

fn column_meets(code: &BlockCode) -> Result<Vec<Codeword>, KuError> {
    let m = code.word_length();
    let mut meets = Vec::with_capacity(m);
    for i in 0..m {
        let mut meet: Option<Codeword> = None;
        for w in code.words() {
            if w.bit(i) {
                meet = Some(match meet {
                    None => w.clone(),
                    Some(acc) => acc.and(w),
                });
            }
        }
        match meet {
            Some(meet) => meets.push(meet),
            None => return Err(KuError::ZeroColumn { column: i }),
        }
    }
    Ok(meets)
}

/// Builds an algebra whose generated code contains the input code.
///
/// Steps, all deterministic: compute the column meets; close the word set
/// under them; pick the bitwise minimum as bottom or adjoin the all-zeros
/// word; index elements with the bottom at 0 and the rest sorted by
/// popcount then lexicographically; equip the words with the canonical
/// algebra of their bitwise order; map column `i` to its meet word.
///
/// Every column of the input must contain a set bit, otherwise no element
/// could generate it and the input is rejected as [`KuError::ZeroColumn`].
pub fn reconstruct(code: &BlockCode) -> Result<ReconstructionResult, KuError> {
    let m = code.word_length();
    let meets = column_meets(code)?;

    let mut closure: BTreeSet<Codeword> = code.words().iter().cloned().collect();
    closure.extend(meets.iter().cloned());

    let minimum = closure
        .iter()
        .find(|w| closure.iter().all(|u| w.leq_bits(u)))
        .cloned();
    let (bottom, adjoined) = match minimum {
        Some(b) => (b, false),
        None => (Codeword::zeros(m), true),
    };
    if adjoined {
        closure.insert(bottom.clone());
    }

    let mut rest: Vec<Codeword> = closure.iter().filter(|w| **w != bottom).cloned().collect();
    rest.sort_by_key(|w| (w.count_ones(), w.clone()));
    let mut word_of = vec![bottom.clone()];
    word_of.extend(rest);

    let n = word_of.len();
    let leq: Vec<Vec<bool>> = (0..n)
        .map(|x| (0..n).map(|y| word_of[x].leq_bits(&word_of[y])).collect())
        .collect();
    let order = OrderRelation::new(leq).expect("bitwise order on distinct words is a poset");
    let algebra = canonical_algebra(&order);

    let image: Vec<usize> = meets
        .iter()
        .map(|meet| {
            word_of
                .iter()
                .position(|w| w == meet)
                .expect("meets are part of the closure")
        })
        .collect();
    let labels: Vec<String> = (0..m).map(|i| format!("c{i}")).collect();
    let function = KUFunction::new(algebra.clone(), labels, image)?;

    let provenance: Vec<Provenance> = word_of
        .iter()
        .map(|w| {
            if code.contains(w) {
                Provenance::Original
            } else if meets.contains(w) {
                Provenance::SynthesizedMeet
            } else {
                Provenance::BottomAdjoined
            }
        })
        .collect();

    // the generated code must reproduce the element words exactly
    let regenerated = generate_code(&function);
    assert_eq!(
        regenerated.words(),
        word_of.as_slice(),
        "regenerated code must list the element words"
    );

    let input_set: BTreeSet<&Codeword> = code.words().iter().collect();
    let exact = word_of.len() == input_set.len() && word_of.iter().all(|w| input_set.contains(w));

    Ok(ReconstructionResult {
        algebra,
        function,
        word_of,
        provenance,
        exact,
    })
}

/// Decides, without building the algebra, whether [`reconstruct`] will be
/// exact: every column meet must already be a word and the code must have
/// a bitwise minimum.
pub fn exact_reconstructible(code: &BlockCode) -> Result<ExactCertificate, KuError> {
    let meets = column_meets(code)?;
    let missing_meet_columns: Vec<usize> = (0..code.word_length())
        .filter(|&i| !code.contains(&meets[i]))
        .collect();
    let has_minimum = code
        .words()
        .iter()
        .any(|w| code.words().iter().all(|u| w.leq_bits(u)));
    Ok(ExactCertificate {
        exact: missing_meet_columns.is_empty() && has_minimum,
        missing_meet_columns,
        has_minimum,
    })
}

/// Regenerates an algebra from its identity-function code and checks the
/// round trip: the reconstruction must be exact and must recover the
/// natural order up to order isomorphism. (The operation table itself is
/// not recoverable: non-isomorphic algebras share a natural order, and a
/// code only determines the order.)
pub fn roundtrip_check(alg: &FiniteKUAlgebra) -> bool {
    let code = generate_code(&KUFunction::identity(alg.clone()));
    match reconstruct(&code) {
        Ok(result) => {
            result.exact
                && result
                    .algebra
                    .natural_order()
                    .isomorphism_to(&alg.natural_order())
                    .is_some()
        }
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gcd_algebra;
    use crate::enumerate;
    use crate::samples;

    fn code_of(words: &[&str]) -> BlockCode {
        BlockCode::new(words.iter().map(|w| w.parse().unwrap()).collect()).unwrap()
    }

    #[test]
    fn four_element_code_reconstructs_exactly() {
        let code = generate_code(&KUFunction::identity(samples::four_element()));
        let result = reconstruct(&code).unwrap();
        assert!(result.exact);
        assert_eq!(result.algebra.order(), 4);
        let strs: Vec<String> = result.word_of.iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, vec!["1000", "1001", "1100", "1110"]);
        assert!(result.provenance.iter().all(|p| *p == Provenance::Original));
        // the order comes back, the table itself does not: the sample is
        // not the canonical algebra of its poset
        assert_eq!(
            result
                .algebra
                .natural_order()
                .isomorphism_to(&samples::four_element().natural_order()),
            Some(vec![0, 3, 1, 2])
        );
        assert!(enumerate::are_isomorphic(&result.algebra, &samples::four_element()).is_none());
    }

    #[test]
    fn incomparable_pair_needs_a_bottom() {
        let result = reconstruct(&code_of(&["10", "01"])).unwrap();
        assert!(!result.exact);
        assert_eq!(result.algebra.order(), 3);
        let strs: Vec<String> = result.word_of.iter().map(|w| w.to_string()).collect();
        assert_eq!(strs, vec!["00", "01", "10"]);
        assert_eq!(
            result.provenance,
            vec![
                Provenance::BottomAdjoined,
                Provenance::Original,
                Provenance::Original,
            ]
        );
        let regenerated = generate_code(&result.function);
        assert_eq!(regenerated.len(), 3);
    }

    #[test]
    fn single_word_is_trivial() {
        let result = reconstruct(&code_of(&["1"])).unwrap();
        assert!(result.exact);
        assert_eq!(result.algebra.rows(), vec![vec![0]]);
    }

    #[test]
    fn synthesized_meets_are_marked() {
        // three pairwise incomparable words of weight two: all three
        // column meets and the bottom are missing, giving 3 + 3 + 1
        // elements, the size bound with equality
        let result = reconstruct(&code_of(&["110", "011", "101"])).unwrap();
        assert!(!result.exact);
        assert_eq!(result.algebra.order(), 7);
        assert_eq!(
            result
                .provenance
                .iter()
                .filter(|p| **p == Provenance::SynthesizedMeet)
                .count(),
            3
        );
        assert_eq!(
            result
                .provenance
                .iter()
                .filter(|p| **p == Provenance::BottomAdjoined)
                .count(),
            1
        );
    }

    #[test]
    fn zero_column_is_rejected() {
        let err = reconstruct(&code_of(&["100", "110"])).unwrap_err();
        assert_eq!(err, KuError::ZeroColumn { column: 2 });
        let err = exact_reconstructible(&code_of(&["01"])).unwrap_err();
        assert_eq!(err, KuError::ZeroColumn { column: 0 });
    }

    #[test]
    fn exactness_certificates() {
        let good = generate_code(&KUFunction::identity(samples::four_element()));
        let cert = exact_reconstructible(&good).unwrap();
        assert!(cert.exact && cert.has_minimum);
        assert!(cert.missing_meet_columns.is_empty());

        let cert = exact_reconstructible(&code_of(&["10", "01"])).unwrap();
        assert!(!cert.exact);
        assert!(!cert.has_minimum);
        assert!(cert.missing_meet_columns.is_empty());

        let cert = exact_reconstructible(&code_of(&["11"])).unwrap();
        assert!(cert.exact);
    }

    #[test]
    fn roundtrip_on_samples() {
        for alg in [
            samples::four_element(),
            samples::five_element_a(),
            samples::five_element_b(),
            gcd_algebra(9),
            FiniteKUAlgebra::new(vec![vec![0]]).unwrap(),
        ] {
            assert!(roundtrip_check(&alg));
        }
    }

    /// The identity code of the divisor algebra reconstructs to the
    /// canonical algebra of divisibility, which is order-isomorphic but
    /// not operation-isomorphic to the divisor algebra.
    #[test]
    fn roundtrip_recovers_order_not_table() {
        let alg = gcd_algebra(9);
        let code = generate_code(&KUFunction::identity(alg.clone()));
        let result = reconstruct(&code).unwrap();
        assert!(result.exact);
        assert!(enumerate::are_isomorphic(&result.algebra, &alg).is_none());
        assert!(result
            .algebra
            .natural_order()
            .isomorphism_to(&alg.natural_order())
            .is_some());
    }

    #[test]
    fn size_bound_holds_on_closure_cases() {
        for words in [
            vec!["10", "01"],
            vec!["110", "011", "101"],
            vec!["1100", "0110", "0011"],
        ] {
            let code = code_of(&words);
            let result = reconstruct(&code).unwrap();
            assert!(result.algebra.order() <= code.len() + code.word_length() + 1);
        }
    }
}
