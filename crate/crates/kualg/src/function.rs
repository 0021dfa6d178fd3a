//! KU-valued functions on a labeled finite domain, their cut sets, and
//! the Θ equivalence induced by equal cuts.
//!
//! A cut collects the domain positions whose value sits below a given
//! element. Two operand orders are conceivable for "below"; the worked
//! examples in the literature consistently use `q * Ã(i) = 0` (value
//! under `q`, a down-set cut) even where the formal definition prints
//! `Ã(i) * q = 0`, so [`CutConvention::DownSet`] is the default and the
//! printed variant stays available for side-by-side comparison.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::FiniteKUAlgebra;
use crate::code::Codeword;
use crate::error::KuError;

/// Operand order used when computing cuts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CutConvention {
    /// `i` is cut by `q` iff `q * Ã(i) = 0`, i.e. `Ã(i) <= q`. This is
    /// what every worked example computes.
    #[default]
    DownSet,
    /// `i` is cut by `q` iff `Ã(i) * q = 0`, the operand order of the
    /// printed definition; yields up-sets instead.
    UpSet,
}

/// A map from a labeled finite domain into a KU-algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KUFunction {
    algebra: FiniteKUAlgebra,
    labels: Vec<String>,
    image: Vec<usize>,
}

impl KUFunction {
    ///`labels[i]` names domain position `i`, `image[i]` is its value.
    /// Labels must be distinct and values in range; the domain must be
    /// nonempty.
    pub fn new(
        algebra: FiniteKUAlgebra,
        labels: Vec<String>,
        image: Vec<usize>,
    ) -> Result<Self, KuError> {
        if labels.is_empty() {
            return Err(KuError::EmptySubset);
        }
        if labels.len() != image.len() {
            return Err(KuError::LengthMismatch {
                expected: labels.len(),
                found: image.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &labels {
            if !seen.insert(label.clone()) {
                return Err(KuError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        if let Some(&value) = image.iter().find(|&&v| v >= algebra.order()) {
            return Err(KuError::OutOfRange {
                value,
                order: algebra.order(),
            });
        }
        Ok(KUFunction {
            algebra,
            labels,
            image,
        })
    }

    /// The identity function on an algebra: domain positions are the
    /// elements themselves, labeled by their indices.
    pub fn identity(algebra: FiniteKUAlgebra) -> Self {
        let n = algebra.order();
        KUFunction {
            algebra,
            labels: (0..n).map(|i| i.to_string()).collect(),
            image: (0..n).collect(),
        }
    }

    pub fn algebra(&self) -> &FiniteKUAlgebra {
        &self.algebra
    }

    pub fn domain_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Value at domain position `i`.
    #[inline]
    pub fn value(&self, i: usize) -> usize {
        self.image[i]
    }

    /// The image as a set of elements.
    pub fn image_set(&self) -> BTreeSet<usize> {
        self.image.iter().copied().collect()
    }
}

/// The cut of `q`: domain positions `i` with `q * Ã(i) = 0`, ascending.
pub fn cut_set(f: &KUFunction, q: usize) -> Result<Vec<usize>, KuError> {
    cut_set_with(f, q, CutConvention::DownSet)
}

/// [`cut_set`] under an explicit operand convention.
pub fn cut_set_with(
    f: &KUFunction,
    q: usize,
    convention: CutConvention,
) -> Result<Vec<usize>, KuError> {
    let alg = f.algebra();
    if q >= alg.order() {
        return Err(KuError::OutOfRange {
            value: q,
            order: alg.order(),
        });
    }
    Ok((0..f.domain_size())
        .filter(|&i| match convention {
            CutConvention::DownSet => alg.op(q, f.value(i)) == 0,
            CutConvention::UpSet => alg.op(f.value(i), q) == 0,
        })
        .collect())
}

/// All cuts of a function, one row per algebra element, one column per
/// domain position (in domain order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutMatrix {
    rows: Vec<Codeword>,
}

impl CutMatrix {
    pub fn rows(&self) -> &[Codeword] {
        &self.rows
    }

    pub fn row(&self, q: usize) -> &Codeword {
        &self.rows[q]
    }

    pub fn element_count(&self) -> usize {
        self.rows.len()
    }

    pub fn domain_size(&self) -> usize {
        self.rows[0].len()
    }

    /// Row of `q` as a set of positions.
    pub fn positions(&self, q: usize) -> Vec<usize> {
        self.rows[q].positions()
    }
}

impl fmt::Display for CutMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Computes every cut row under the default convention.
pub fn cut_matrix(f: &KUFunction) -> CutMatrix {
    cut_matrix_with(f, CutConvention::DownSet)
}

/// [`cut_matrix`] under an explicit operand convention.
pub fn cut_matrix_with(f: &KUFunction, convention: CutConvention) -> CutMatrix {
    let n = f.algebra().order();
    let rows = (0..n)
        .map(|q| {
            let set = cut_set_with(f, q, convention).expect("q ranges over elements");
            Codeword::from_positions(f.domain_size(), &set)
        })
        .collect();
    CutMatrix { rows }
}

/// The principal down-set `(q] = {x : q*x = 0} = {x : x <= q}`.
pub fn principal_downset(alg: &FiniteKUAlgebra, q: usize) -> Result<Vec<usize>, KuError> {
    if q >= alg.order() {
        return Err(KuError::OutOfRange {
            value: q,
            order: alg.order(),
        });
    }
    Ok((0..alg.order()).filter(|&x| alg.leq(x, q)).collect())
}

/// The up-set `{x : x*q = 0}`, the literal reading of the `(q]` notation.
/// Used by the audit to demonstrate why that reading fails.
pub(crate) fn principal_upset(alg: &FiniteKUAlgebra, q: usize) -> Vec<usize> {
    (0..alg.order()).filter(|&x| alg.op(x, q) == 0).collect()
}

/// Recovers `Ã(i)` as the infimum of all elements whose cut contains `i`
/// and checks that the infimum really is the stored value.
pub fn infimum_representation(f: &KUFunction, i: usize) -> Result<usize, KuError> {
    if i >= f.domain_size() {
        return Err(KuError::OutOfRange {
            value: i,
            order: f.domain_size(),
        });
    }
    let alg = f.algebra();
    let above: Vec<usize> = (0..alg.order())
        .filter(|&q| alg.op(q, f.value(i)) == 0)
        .collect();
    // Ã(i) itself is in the set, so it is nonempty
    let inf = alg
        .infimum(&above)
        .expect("set of cuts through a position is nonempty");
    if inf != Some(f.value(i)) {
        return Err(KuError::RepresentationFailure { position: i });
    }
    Ok(f.value(i))
}

/// Partition of the algebra's elements by equal cut rows. Classes are
/// ordered by their smallest member; members are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaPartition {
    classes: Vec<Vec<usize>>,
}

impl ThetaPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The class containing `q`.
    pub fn class_of(&self, q: usize) -> &[usize] {
        self.classes
            .iter()
            .find(|c| c.contains(&q))
            .expect("every element lies in a class")
    }

    /// True iff `p` and `q` share a class.
    pub fn related(&self, p: usize, q: usize) -> bool {
        self.class_of(p).contains(&q)
    }
}

/// Groups elements by equal cut rows. Every class that meets the image
/// contains the image point as its least element; the debug build
/// re-checks that here.
pub fn theta_partition(f: &KUFunction) -> ThetaPartition {
    let matrix = cut_matrix(f);
    let n = f.algebra().order();
    let mut classes: Vec<(Codeword, Vec<usize>)> = Vec::new();
    for q in 0..n {
        let row = matrix.row(q);
        match classes.iter_mut().find(|(w, _)| w == row) {
            Some((_, members)) => members.push(q),
            None => classes.push((row.clone(), vec![q])),
        }
    }
    let partition = ThetaPartition {
        classes: classes.into_iter().map(|(_, members)| members).collect(),
    };
    #[cfg(debug_assertions)]
    {
        let alg = f.algebra();
        for &v in f.image() {
            let class = partition.class_of(v);
            debug_assert!(
                class.iter().all(|&q| alg.leq(v, q)),
                "image point {v} must be least in its class"
            );
        }
    }
    partition
}
