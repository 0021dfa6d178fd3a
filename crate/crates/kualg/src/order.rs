//! Partial orders with a least element, and the canonical algebra a poset
//! carries.

use crate::algebra::FiniteKUAlgebra;
use crate::error::KuError;

/// A partial order on `0..n` stored as a boolean matrix, with element `0`
/// required to be the least element. `leq(x, y)` reads "`x <= y`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// Validates reflexivity, antisymmetry, transitivity and the least
    /// element before wrapping the matrix.
    pub fn new(matrix: Vec<Vec<bool>>) -> Result<Self, KuError> {
        let n = matrix.len();
        if n == 0 {
            return Err(KuError::NotAPoset {
                detail: "relation is empty".to_string(),
            });
        }
        if let Some(x) = (0..n).find(|&x| matrix[x].len() != n) {
            return Err(KuError::NotAPoset {
                detail: format!("row {x} has {} entries, expected {n}", matrix[x].len()),
            });
        }
        if let Some(x) = (0..n).find(|&x| !matrix[x][x]) {
            return Err(KuError::NotAPoset {
                detail: format!("not reflexive at {x}"),
            });
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && matrix[x][y] && matrix[y][x] {
                    return Err(KuError::NotAPoset {
                        detail: format!("not antisymmetric at ({x}, {y})"),
                    });
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !matrix[x][y] {
                    continue;
                }
                for z in 0..n {
                    if matrix[y][z] && !matrix[x][z] {
                        return Err(KuError::NotAPoset {
                            detail: format!("not transitive at ({x}, {y}, {z})"),
                        });
                    }
                }
            }
        }
        if (0..n).any(|x| !matrix[0][x]) {
            return Err(KuError::NoLeastElement);
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &matrix {
            flat.extend_from_slice(row);
        }
        Ok(OrderRelation { n, leq: flat })
    }

    pub(crate) fn from_flat_unchecked(n: usize, leq: Vec<bool>) -> Self {
        debug_assert_eq!(leq.len(), n * n);
        OrderRelation { n, leq }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    /// All strict pairs `(x, y)` with `x < y`, lexicographically sorted.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if x != y && self.leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The covering relation: pairs `(x, y)` with `x < y` and nothing
    /// strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.strict_pairs()
            .into_iter()
            .filter(|&(x, y)| {
                !(0..self.n).any(|w| w != x && w != y && self.leq(x, w) && self.leq(w, y))
            })
            .collect()
    }

    /// Searches for a bijection `h` with `x <= y  iff  h(x) <= h(y)`.
    /// `h(0) = 0` always (least elements must correspond).
    pub fn isomorphism_to(&self, other: &OrderRelation) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let n = self.n;
        let degree = |ord: &OrderRelation, x: usize| {
            let up = (0..n).filter(|&y| ord.leq(x, y)).count();
            let down = (0..n).filter(|&y| ord.leq(y, x)).count();
            (up, down)
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;

        fn extend(
            a: &OrderRelation,
            b: &OrderRelation,
            degree: &dyn Fn(&OrderRelation, usize) -> (usize, usize),
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            x: usize,
        ) -> bool {
            let n = a.n;
            if x == n {
                return true;
            }
            for t in 0..n {
                if used[t] || degree(a, x) != degree(b, t) {
                    continue;
                }
                let consistent = (0..x)
                    .all(|u| a.leq(u, x) == b.leq(map[u], t) && a.leq(x, u) == b.leq(t, map[u]));
                if !consistent {
                    continue;
                }
                map[x] = t;
                used[t] = true;
                if extend(a, b, degree, map, used, x + 1) {
                    return true;
                }
                map[x] = usize::MAX;
                used[t] = false;
            }
            false
        }

        if extend(self, other, &degree, &mut map, &mut used, 1) {
            Some(map)
        } else {
            None
        }
    }
}

/// The canonical KU-algebra carried by a poset with bottom:
/// `x*y = 0` when `y <= x`, and `x*y = y` otherwise. The natural order of
/// the result is exactly the input poset.
pub fn from_poset(matrix: &[Vec<bool>]) -> Result<FiniteKUAlgebra, KuError> {
    let ord = OrderRelation::new(matrix.to_vec())?;
    Ok(canonical_algebra(&ord))
}

/// [`from_poset`] for an already validated [`OrderRelation`].
pub fn canonical_algebra(ord: &OrderRelation) -> FiniteKUAlgebra {
    let n = ord.size();
    let table: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| if ord.leq(y, x) { 0 } else { y }).collect())
        .collect();
    FiniteKUAlgebra::new(table).expect("canonical poset table satisfies the axioms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gcd_algebra;

    fn chain3() -> Vec<Vec<bool>> {
        vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ]
    }

    #[test]
    fn chain_gives_expected_table() {
        let alg = from_poset(&chain3()).unwrap();
        assert_eq!(
            alg.rows(),
            vec![vec![0, 1, 2], vec![0, 0, 2], vec![0, 0, 0]]
        );
    }

    #[test]
    fn singleton_gives_trivial_algebra() {
        let alg = from_poset(&[vec![true]]).unwrap();
        assert_eq!(alg.rows(), vec![vec![0]]);
    }

    #[test]
    fn divisibility_poset_round_trips_to_divisor_algebra_order() {
        let leq: Vec<Vec<bool>> = (1..=9usize)
            .map(|u| (1..=9usize).map(|v| v % u == 0).collect())
            .collect();
        let alg = from_poset(&leq).unwrap();
        let ord = alg.natural_order();
        let target = gcd_algebra(9).natural_order();
        assert_eq!(ord, target);
        assert_eq!(ord.isomorphism_to(&target), Some((0..9).collect()));
    }

    #[test]
    fn rejects_non_posets() {
        let mut m = chain3();
        m[2][0] = true; // 2 <= 0 and 0 <= 2
        assert!(matches!(from_poset(&m), Err(KuError::NotAPoset { .. })));
        let intransitive = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            from_poset(&intransitive),
            Err(KuError::NotAPoset { .. })
        ));
        let no_least = vec![
            vec![true, false, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            from_poset(&no_least),
            Err(KuError::NoLeastElement)
        ));
    }

    #[test]
    fn covers_of_divisibility() {
        let covers = gcd_algebra(9).natural_order().covers();
        let expected: Vec<(usize, usize)> = vec![
            (0, 1),
            (0, 2),
            (0, 4),
            (0, 6),
            (1, 3),
            (1, 5),
            (2, 5),
            (2, 8),
            (3, 7),
        ];
        assert_eq!(covers, expected);
    }

    #[test]
    fn isomorphism_respects_structure() {
        // 0 < 1 < 2 versus 0 < 2 < 1: isomorphic as posets
        let a = OrderRelation::new(chain3()).unwrap();
        let b = OrderRelation::new(vec![
            vec![true, true, true],
            vec![false, true, false],
            vec![false, true, true],
        ])
        .unwrap();
        assert_eq!(a.isomorphism_to(&b), Some(vec![0, 2, 1]));
        // chain vs fork: not isomorphic
        let fork = OrderRelation::new(vec![
            vec![true, true, true],
            vec![false, true, false],
            vec![false, false, true],
        ])
        .unwrap();
        assert_eq!(a.isomorphism_to(&fork), None);
    }
}
