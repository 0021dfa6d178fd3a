//! Binary block codes generated by KU-functions, and the bitwise codeword
//! order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::FiniteKUAlgebra;
use crate::error::KuError;
use crate::function::{cut_matrix, theta_partition, KUFunction};

/// A fixed-length binary word. The derived `Ord` is lexicographic with
/// `0 < 1`; the coordinatewise order of codes lives in [`codeword_leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    bits: Vec<bool>,
}

impl Codeword {
    pub fn new(bits: Vec<bool>) -> Self {
        Codeword { bits }
    }

    pub fn zeros(len: usize) -> Self {
        Codeword {
            bits: vec![false; len],
        }
    }

    /// Indicator word of `positions` within `0..len`.
    pub fn from_positions(len: usize, positions: &[usize]) -> Self {
        let mut bits = vec![false; len];
        for &p in positions {
            bits[p] = true;
        }
        Codeword { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Set-bit positions, ascending.
    pub fn positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.bits[i]).collect()
    }

    /// Coordinatewise comparison; both words must have equal length.
    pub(crate) fn leq_bits(&self, other: &Codeword) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Coordinatewise AND.
    pub fn and(&self, other: &Codeword) -> Codeword {
        debug_assert_eq!(self.len(), other.len());
        Codeword {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a && b)
                .collect(),
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = KuError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(false),
                '1' => bits.push(true),
                other => {
                    return Err(KuError::MalformedWord {
                        detail: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        if bits.is_empty() {
            return Err(KuError::MalformedWord {
                detail: "word is empty".to_string(),
            });
        }
        Ok(Codeword { bits })
    }
}

/// The codeword order `u <=_c v  iff  u_i <= v_i` for every coordinate.
pub fn codeword_leq(u: &Codeword, v: &Codeword) -> Result<bool, KuError> {
    if u.len() != v.len() {
        return Err(KuError::LengthMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.leq_bits(v))
}

/// A binary block code: distinct words of one common length, in a fixed
/// order. Codes produced by [`generate_code`] carry one word per Θ-class
/// (ordered by the smallest generating element) and label each row with
/// the class minimum when the class has one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCode {
    words: Vec<Codeword>,
    labels: Vec<Option<usize>>,
}

impl BlockCode {
    pub fn new(words: Vec<Codeword>) -> Result<Self, KuError> {
        if words.is_empty() {
            return Err(KuError::EmptyCode);
        }
        let len = words[0].len();
        if let Some(w) = words.iter().find(|w| w.len() != len) {
            return Err(KuError::LengthMismatch {
                expected: len,
                found: w.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(w) = words.iter().find(|w| !seen.insert((*w).clone())) {
            return Err(KuError::DuplicateWord {
                word: w.to_string(),
            });
        }
        let labels = vec![None; words.len()];
        Ok(BlockCode { words, labels })
    }

    fn with_labels(words: Vec<Codeword>, labels: Vec<Option<usize>>) -> Self {
        debug_assert_eq!(words.len(), labels.len());
        BlockCode { words, labels }
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// Per-row label: the generating Θ-class minimum, where defined.
    pub fn labels(&self) -> &[Option<usize>] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_length(&self) -> usize {
        self.words[0].len()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.words.contains(w)
    }
}

/// The block code of a KU-function: the distinct rows of its cut matrix,
/// one per Θ-class, emitted in order of the smallest element that
/// generates each row. Bit `i` of the word for `q` is the cut value of
/// `q` at domain position `i`.
pub fn generate_code(f: &KUFunction) -> BlockCode {
    let matrix = cut_matrix(f);
    let theta = theta_partition(f);
    let alg = f.algebra();
    let mut words = Vec::new();
    let mut labels = Vec::new();
    let mut seen: HashSet<Codeword> = HashSet::new();
    for q in 0..alg.order() {
        let row = matrix.row(q).clone();
        if seen.insert(row.clone()) {
            let class = theta.class_of(q);
            let min = class
                .iter()
                .copied()
                .find(|&c| class.iter().all(|&d| alg.leq(c, d)));
            words.push(row);
            labels.push(min);
        }
    }
    BlockCode::with_labels(words, labels)
}

/// Result of checking that an algebra's natural order and the codeword
/// order of its identity-function code coincide. `word_of[q]` is the
/// codeword assigned to element `q`; on a valid algebra `holds` is always
/// true.
#[derive(Debug, Clone)]
pub struct OrderIsoCheck {
    pub holds: bool,
    pub word_of: Vec<Codeword>,
    pub failure: Option<String>,
}

/// Maps each element `q` to the cut row of the identity function and
/// checks, exhaustively, that `q -> word_of[q]` is a bijection onto the
/// code with `p <= q  iff  word_of[p] <=_c word_of[q]`.
pub fn verify_order_isomorphism(alg: &FiniteKUAlgebra) -> OrderIsoCheck {
    let f = KUFunction::identity(alg.clone());
    let matrix = cut_matrix(&f);
    let n = alg.order();
    let word_of: Vec<Codeword> = (0..n).map(|q| matrix.row(q).clone()).collect();

    for p in 0..n {
        for q in (p + 1)..n {
            if word_of[p] == word_of[q] {
                return OrderIsoCheck {
                    holds: false,
                    word_of,
                    failure: Some(format!("elements {p} and {q} share codeword")),
                };
            }
        }
    }
    for p in 0..n {
        for q in 0..n {
            if alg.leq(p, q) != word_of[p].leq_bits(&word_of[q]) {
                let failure = format!("order mismatch at ({p}, {q})");
                return OrderIsoCheck {
                    holds: false,
                    word_of,
                    failure: Some(failure),
                };
            }
        }
    }
    OrderIsoCheck {
        holds: true,
        word_of,
        failure: None,
    }
}
