//! Finite KU-algebras given by Cayley tables.
//!
//! A KU-algebra is an algebra `(X, *, 0)` satisfying
//!
//! * ku1: `0*x = x`
//! * ku2: `x*y = 0` implies `(y*z)*(x*z) = 0` and `(z*x)*(z*y) = 0`
//! * ku3: `x*(y*z) = y*(x*z)`
//! * ku4: `(x*y)*((y*z)*(x*z)) = 0`
//!
//! together with antisymmetry (`x*y = 0` and `y*x = 0` imply `x = y`),
//! which the original definition of these algebras includes and which the
//! natural order needs. Elements are indices `0..n` with `0` the constant.
//!
//! [`verify_axioms`] checks exactly the five laws above. A
//! [`FiniteKUAlgebra`] additionally requires `x*0 = 0` (all of column 0
//! zero): that identity is *not* a consequence of the axioms — see the
//! regression test `axioms_do_not_force_right_zero` — but every table in
//! the literature satisfies it and the natural order is useless without it.

use std::fmt;

use crate::error::KuError;
use crate::order::OrderRelation;

/// A finite KU-algebra: a Cayley table over elements `0..n` where
/// `table[x][y]` is `x*y` and element `0` is the distinguished constant.
///
/// Construction via [`FiniteKUAlgebra::new`] validates the axioms, so a
/// value of this type is always a genuine KU-algebra. All operations are
/// pure; instances can be shared freely between threads.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteKUAlgebra {
    n: usize,
    table: Vec<usize>,
}

impl FiniteKUAlgebra {
    /// Validates `table` and wraps it. Fails with [`KuError::MalformedTable`]
    /// for shape/range problems, [`KuError::AxiomsFailed`] when an axiom has
    /// a counterexample, and [`KuError::RightZeroFailed`] when the table
    /// passes the axioms but violates `x*0 = 0`.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, KuError> {
        let report = verify_axioms(&table)?;
        if !report.passed() {
            return Err(KuError::AxiomsFailed(report));
        }
        if let Some(x) = (0..table.len()).find(|&x| table[x][0] != 0) {
            return Err(KuError::RightZeroFailed { x });
        }
        Ok(Self::from_rows_unchecked(&table))
    }

    pub(crate) fn from_rows_unchecked(table: &[Vec<usize>]) -> Self {
        let n = table.len();
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            flat.extend_from_slice(row);
        }
        FiniteKUAlgebra { n, table: flat }
    }

    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        FiniteKUAlgebra { n, table }
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.n
    }

    /// The product `x*y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    /// Row `x` of the Cayley table (`x*0 .. x*(n-1)`).
    pub fn row(&self, x: usize) -> &[usize] {
        &self.table[x * self.n..(x + 1) * self.n]
    }

    /// The table as nested rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|x| self.row(x).to_vec()).collect()
    }

    /// `x <= y` in the natural order, i.e. `y*x = 0`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.op(y, x) == 0
    }

    /// The natural order `x <= y  iff  y*x = 0` as a relation matrix.
    /// On a valid algebra this is always a partial order with least
    /// element `0`.
    pub fn natural_order(&self) -> OrderRelation {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                leq[x * n + y] = self.leq(x, y);
            }
        }
        OrderRelation::from_flat_unchecked(n, leq)
    }

    /// Greatest lower bound of a nonempty subset under the natural order,
    /// if it exists. Lower bounds are scanned exhaustively.
    pub fn infimum(&self, subset: &[usize]) -> Result<Option<usize>, KuError> {
        if subset.is_empty() {
            return Err(KuError::EmptySubset);
        }
        self.check_range(subset)?;
        let lower: Vec<usize> = (0..self.n)
            .filter(|&x| subset.iter().all(|&y| self.leq(x, y)))
            .collect();
        Ok(lower
            .iter()
            .copied()
            .find(|&g| lower.iter().all(|&l| self.leq(l, g))))
    }

    /// True when every nonempty subset has an infimum. In a finite poset
    /// this is equivalent to every pair having one, which is what gets
    /// checked.
    pub fn is_meet_complete(&self) -> bool {
        (0..self.n).all(|p| {
            (p + 1..self.n).all(|q| {
                self.infimum(&[p, q])
                    .expect("pair is nonempty and in range")
                    .is_some()
            })
        })
    }

    /// True iff `subset` is closed under `*`. Closure alone: membership of
    /// `0` is not required (though `x*x = 0` forces it for nonempty sets).
    /// The empty set is vacuously a subalgebra.
    pub fn is_subalgebra(&self, subset: &[usize]) -> Result<bool, KuError> {
        self.check_range(subset)?;
        Ok(subset
            .iter()
            .all(|&a| subset.iter().all(|&b| subset.contains(&self.op(a, b)))))
    }

    /// True iff `subset` is a KU-ideal: it contains `0`, and whenever
    /// `x*(y*z)` and `y` are members, so is `x*z`. Checked exhaustively
    /// over all triples. The empty set is not an ideal.
    pub fn is_ku_ideal(&self, subset: &[usize]) -> Result<bool, KuError> {
        self.check_range(subset)?;
        let mut member = vec![false; self.n];
        for &s in subset {
            member[s] = true;
        }
        if !member[0] {
            return Ok(false);
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if !member[y] {
                    continue;
                }
                for z in 0..self.n {
                    if member[self.op(x, self.op(y, z))] && !member[self.op(x, z)] {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Exhaustively re-proves the standard derived identities on this
    /// algebra. All of them hold on any valid instance; a failure would
    /// mean the table was corrupted after construction.
    pub fn check_derived_identities(&self) -> IdentityReport {
        let n = self.n;
        let mut failures = Vec::new();
        if let Some(z) = (0..n).find(|&z| self.op(z, z) != 0) {
            failures.push(IdentityFailure::Ku5 { z });
        }
        'p1: for x in 0..n {
            for z in 0..n {
                if self.op(z, self.op(x, z)) != 0 {
                    failures.push(IdentityFailure::P1 { x, z });
                    break 'p1;
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| self.op(x, 0) != 0) {
            failures.push(IdentityFailure::RightZero { x });
        }
        // x <= y implies y*z <= x*z
        'anti: for x in 0..n {
            for y in 0..n {
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !self.leq(self.op(y, z), self.op(x, z)) {
                        failures.push(IdentityFailure::LeftAntitone { x, y, z });
                        break 'anti;
                    }
                }
            }
        }
        'ub: for x in 0..n {
            for y in 0..n {
                if self.op(y, self.op(self.op(y, x), x)) != 0 {
                    failures.push(IdentityFailure::UpperBound { x, y });
                    break 'ub;
                }
            }
        }
        IdentityReport { failures }
    }

    fn check_range(&self, subset: &[usize]) -> Result<(), KuError> {
        match subset.iter().find(|&&v| v >= self.n) {
            Some(&value) => Err(KuError::OutOfRange {
                value,
                order: self.n,
            }),
            None => Ok(()),
        }
    }
}

/// One of the five checked laws.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    Ku1,
    Ku2,
    Ku3,
    Ku4,
    Antisymmetry,
}

/// First counterexample found for an axiom, with the witnessing elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomFailure {
    Ku1 { x: usize },
    Ku2 { x: usize, y: usize, z: usize },
    Ku3 { x: usize, y: usize, z: usize },
    Ku4 { x: usize, y: usize, z: usize },
    Antisymmetry { x: usize, y: usize },
}

impl AxiomFailure {
    pub fn axiom(&self) -> Axiom {
        match self {
            AxiomFailure::Ku1 { .. } => Axiom::Ku1,
            AxiomFailure::Ku2 { .. } => Axiom::Ku2,
            AxiomFailure::Ku3 { .. } => Axiom::Ku3,
            AxiomFailure::Ku4 { .. } => Axiom::Ku4,
            AxiomFailure::Antisymmetry { .. } => Axiom::Antisymmetry,
        }
    }
}

impl fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AxiomFailure::Ku1 { x } => write!(f, "ku1 fails at x={x}"),
            AxiomFailure::Ku2 { x, y, z } => write!(f, "ku2 fails at x={x}, y={y}, z={z}"),
            AxiomFailure::Ku3 { x, y, z } => write!(f, "ku3 fails at x={x}, y={y}, z={z}"),
            AxiomFailure::Ku4 { x, y, z } => write!(f, "ku4 fails at x={x}, y={y}, z={z}"),
            AxiomFailure::Antisymmetry { x, y } => {
                write!(f, "antisymmetry fails at x={x}, y={y}")
            }
        }
    }
}

/// Outcome of [`verify_axioms`]: at most one (first-found) counterexample
/// per axiom, in the fixed order ku1, ku2, ku3, ku4, antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    /// True iff no axiom has a counterexample.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[AxiomFailure] {
        &self.failures
    }

    /// Verdict for one axiom.
    pub fn holds(&self, axiom: Axiom) -> bool {
        !self.failures.iter().any(|c| c.axiom() == axiom)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "all axioms hold");
        }
        let parts: Vec<String> = self.failures.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Checks ku1–ku4 and antisymmetry exhaustively against a raw table.
///
/// Scan order is lexicographic over `(x, y, z)`, so the recorded
/// counterexamples are reproducible bit-for-bit. Shape or range defects
/// are reported as [`KuError::MalformedTable`] before any axiom runs.
pub fn verify_axioms(table: &[Vec<usize>]) -> Result<AxiomReport, KuError> {
    let n = table.len();
    if n == 0 {
        return Err(KuError::MalformedTable {
            detail: "table is empty".to_string(),
        });
    }
    for (x, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(KuError::MalformedTable {
                detail: format!("row {x} has {} entries, expected {n}", row.len()),
            });
        }
        for (y, &v) in row.iter().enumerate() {
            if v >= n {
                return Err(KuError::MalformedTable {
                    detail: format!("entry {v} at ({x}, {y}) out of range for order {n}"),
                });
            }
        }
    }

    let op = |x: usize, y: usize| table[x][y];
    let mut failures = Vec::new();

    if let Some(x) = (0..n).find(|&x| op(0, x) != x) {
        failures.push(AxiomFailure::Ku1 { x });
    }
    'ku2: for x in 0..n {
        for y in 0..n {
            if op(x, y) != 0 {
                continue;
            }
            for z in 0..n {
                if op(op(y, z), op(x, z)) != 0 || op(op(z, x), op(z, y)) != 0 {
                    failures.push(AxiomFailure::Ku2 { x, y, z });
                    break 'ku2;
                }
            }
        }
    }
    'ku3: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(x, op(y, z)) != op(y, op(x, z)) {
                    failures.push(AxiomFailure::Ku3 { x, y, z });
                    break 'ku3;
                }
            }
        }
    }
    'ku4: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if op(op(x, y), op(op(y, z), op(x, z))) != 0 {
                    failures.push(AxiomFailure::Ku4 { x, y, z });
                    break 'ku4;
                }
            }
        }
    }
    'anti: for x in 0..n {
        for y in 0..n {
            if x != y && op(x, y) == 0 && op(y, x) == 0 {
                failures.push(AxiomFailure::Antisymmetry { x, y });
                break 'anti;
            }
        }
    }
    Ok(AxiomReport { failures })
}

/// First counterexample per derived identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityFailure {
    /// `z*z = 0`
    Ku5 { z: usize },
    /// `z*(x*z) = 0`
    P1 { x: usize, z: usize },
    /// `x*0 = 0`
    RightZero { x: usize },
    /// `x <= y` implies `y*z <= x*z`
    LeftAntitone { x: usize, y: usize, z: usize },
    /// `y*((y*x)*x) = 0`
    UpperBound { x: usize, y: usize },
}

impl fmt::Display for IdentityFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IdentityFailure::Ku5 { z } => write!(f, "z*z = 0 fails at z={z}"),
            IdentityFailure::P1 { x, z } => write!(f, "z*(x*z) = 0 fails at x={x}, z={z}"),
            IdentityFailure::RightZero { x } => write!(f, "x*0 = 0 fails at x={x}"),
            IdentityFailure::LeftAntitone { x, y, z } => {
                write!(f, "x<=y => y*z <= x*z fails at x={x}, y={y}, z={z}")
            }
            IdentityFailure::UpperBound { x, y } => {
                write!(f, "y*((y*x)*x) = 0 fails at x={x}, y={y}")
            }
        }
    }
}

/// Outcome of [`FiniteKUAlgebra::check_derived_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[IdentityFailure] {
        &self.failures
    }
}

/// The divisor algebra on `{1, .., n}`: element `i` (index `i-1`) composed
/// with `j` gives `j / gcd(i, j)`. Its natural order is divisibility, with
/// `1` (index 0) least.
pub fn gcd_algebra(n: usize) -> FiniteKUAlgebra {
    assert!(n >= 1, "order must be at least 1");
    let table: Vec<Vec<usize>> = (1..=n)
        .map(|i| (1..=n).map(|j| j / gcd(i, j) - 1).collect())
        .collect();
    FiniteKUAlgebra::new(table).expect("divisor table satisfies the axioms")
}

fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
