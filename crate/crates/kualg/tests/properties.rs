//! Property suites over the exhaustively enumerated small algebras, plus
//! randomized reconstruction cases.

use proptest::prelude::*;

use kualg::algebra::verify_axioms;
use kualg::code::{codeword_leq, generate_code, BlockCode, Codeword};
use kualg::enumerate::enumerate_algebras;
use kualg::function::{cut_set, infimum_representation, theta_partition, KUFunction};
use kualg::order::canonical_algebra;
use kualg::reconstruct::reconstruct;
use kualg::samples;
use kualg::KuError;

fn all_functions_3(alg: &kualg::FiniteKUAlgebra) -> Vec<KUFunction> {
    let n = alg.order();
    let labels: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
    (0..n * n * n)
        .map(|stamp| {
            let image = vec![stamp % n, stamp / n % n, stamp / (n * n)];
            KUFunction::new(alg.clone(), labels.clone(), image).unwrap()
        })
        .collect()
}

fn enumerated() -> Vec<kualg::FiniteKUAlgebra> {
    (1..=4)
        .flat_map(|n| enumerate_algebras(n, false).unwrap())
        .collect()
}

/// Cut monotonicity, the infimum representation of values, cut-level
/// injectivity and the Θ class-minimum law, exhaustively over every
/// enumerated algebra crossed with every function from a 3-point domain.
#[test]
fn cut_laws_across_all_small_instances() {
    for alg in enumerated() {
        let n = alg.order();
        for f in all_functions_3(&alg) {
            let cuts: Vec<Vec<usize>> = (0..n).map(|q| cut_set(&f, q).unwrap()).collect();
            for p in 0..n {
                for q in 0..n {
                    if alg.leq(p, q) {
                        assert!(cuts[p].iter().all(|i| cuts[q].contains(i)));
                    }
                }
            }
            for i in 0..3 {
                assert_eq!(infimum_representation(&f, i).unwrap(), f.value(i));
            }
            for x in 0..3 {
                for y in 0..3 {
                    assert_eq!(
                        f.value(x) == f.value(y),
                        cuts[f.value(x)] == cuts[f.value(y)]
                    );
                }
            }
            let theta = theta_partition(&f);
            for &v in f.image() {
                assert!(theta.class_of(v).iter().all(|&q| alg.leq(v, q)));
            }
        }
    }
}

/// Derived identities are theorems across every enumerated algebra, the
/// natural order always validates as a poset with bottom, and the
/// canonical algebra of that order is again a valid algebra with the
/// same order.
#[test]
fn derived_identities_and_canonical_round_trip() {
    for alg in enumerated() {
        assert!(alg.check_derived_identities().passed());
        let ord = alg.natural_order();
        let matrix: Vec<Vec<bool>> = (0..alg.order())
            .map(|x| (0..alg.order()).map(|y| ord.leq(x, y)).collect())
            .collect();
        assert!(kualg::OrderRelation::new(matrix).is_ok());
        let canonical = canonical_algebra(&ord);
        assert!(verify_axioms(&canonical.rows()).unwrap().passed());
        assert_eq!(canonical.natural_order(), ord);
    }
}

/// The two ideals every algebra has: the zero singleton and the whole
/// carrier.
#[test]
fn trivial_ideals_across_all_small_algebras() {
    for alg in enumerated() {
        let all: Vec<usize> = (0..alg.order()).collect();
        assert!(alg.is_ku_ideal(&[0]).unwrap());
        assert!(alg.is_ku_ideal(&all).unwrap());
        assert!(alg.is_subalgebra(&all).unwrap());
    }
}

/// Code shape across the enumerated algebras: codes have one word per
/// Θ-class, identity codes one word per element with the element's own
/// bit and the bottom bit set, and the codeword order is a partial order
/// on every generated code.
#[test]
fn code_shape_across_all_small_instances() {
    for alg in enumerated() {
        let n = alg.order();
        for f in all_functions_3(&alg) {
            let code = generate_code(&f);
            assert_eq!(code.len(), theta_partition(&f).len());
            let words = code.words();
            for u in words {
                assert!(codeword_leq(u, u).unwrap());
                for v in words {
                    if codeword_leq(u, v).unwrap() && codeword_leq(v, u).unwrap() {
                        assert_eq!(u, v);
                    }
                    for w in words {
                        if codeword_leq(u, v).unwrap() && codeword_leq(v, w).unwrap() {
                            assert!(codeword_leq(u, w).unwrap());
                        }
                    }
                }
            }
        }
        let id_code = generate_code(&KUFunction::identity(alg.clone()));
        assert_eq!(id_code.len(), n);
        for (q, w) in id_code.words().iter().enumerate() {
            assert!(w.bit(q));
            assert!(w.bit(0));
        }
    }
}

/// The cut matrix under the as-printed operand order yields up-sets: on
/// the three-point sample the two conventions genuinely disagree.
#[test]
fn cut_conventions_disagree_where_expected() {
    use kualg::function::{cut_set_with, CutConvention};
    let f = samples::triple_function();
    let down = cut_set_with(&f, 1, CutConvention::DownSet).unwrap();
    let up = cut_set_with(&f, 1, CutConvention::UpSet).unwrap();
    assert_eq!(down, vec![0]);
    assert_eq!(up, vec![0, 2]);
}

proptest! {
    /// Containment and the size bound on randomized larger codes: for any
    /// valid code, the reconstruction regenerates a superset, within the
    /// element budget, deterministically.
    #[test]
    fn reconstruction_containment_randomized(
        masks in proptest::collection::btree_set(1u32..256, 1..=6),
        width in 5usize..=8,
    ) {
        let words: Vec<Codeword> = masks
            .iter()
            .map(|&m| Codeword::new((0..width).map(|i| m >> (i % 8) & 1 == 1).collect()))
            .collect();
        let mut distinct = words.clone();
        distinct.sort();
        distinct.dedup();
        prop_assume!(distinct.len() == words.len());
        let code = BlockCode::new(words.clone()).unwrap();
        match reconstruct(&code) {
            Err(KuError::ZeroColumn { column }) => {
                prop_assert!(words.iter().all(|w| !w.bit(column)));
            }
            Err(other) => prop_assert!(false, "unexpected error {other}"),
            Ok(result) => {
                let regenerated = generate_code(&result.function);
                for w in &words {
                    prop_assert!(regenerated.contains(w));
                }
                prop_assert!(result.algebra.order() <= words.len() + width + 1);
                let again = reconstruct(&code).unwrap();
                prop_assert_eq!(result.word_of, again.word_of);
                prop_assert_eq!(result.algebra, again.algebra);
            }
        }
    }

    /// Antisymmetry of the codeword order on arbitrary word pairs.
    #[test]
    fn codeword_order_antisymmetric(a in "[01]{1,12}", b in "[01]{1,12}") {
        let u: Codeword = a.parse().unwrap();
        let v: Codeword = b.parse().unwrap();
        if u.len() == v.len() {
            if codeword_leq(&u, &v).unwrap() && codeword_leq(&v, &u).unwrap() {
                prop_assert_eq!(u, v);
            }
        } else {
            prop_assert!(codeword_leq(&u, &v).is_err());
        }
    }
}
