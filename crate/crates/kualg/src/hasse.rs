//! DOT export of covering diagrams for orders and codes.

use crate::code::BlockCode;
use crate::order::OrderRelation;

/// Covering diagram of an order relation in DOT format. Nodes are element
/// indices, edges run from the lower to the upper element of each cover,
/// bottom-up.
pub fn order_dot(ord: &OrderRelation) -> String {
    let names: Vec<String> = (0..ord.size()).map(|x| x.to_string()).collect();
    render(&names, &ord.covers())
}

/// Covering diagram of the bitwise order on a code's words.
pub fn code_dot(code: &BlockCode) -> String {
    let words = code.words();
    let names: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let k = words.len();
    let mut covers = Vec::new();
    for u in 0..k {
        for v in 0..k {
            if u == v || !words[u].leq_bits(&words[v]) {
                continue;
            }
            let between = (0..k).any(|w| {
                w != u && w != v && words[u].leq_bits(&words[w]) && words[w].leq_bits(&words[v])
            });
            if !between {
                covers.push((u, v));
            }
        }
    }
    render(&names, &covers)
}

fn render(names: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for name in names {
        out.push_str(&format!("  \"{name}\";\n"));
    }
    for &(u, v) in covers {
        out.push_str(&format!("  \"{}\" -> \"{}\";\n", names[u], names[v]));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::generate_code;
    use crate::function::KUFunction;
    use crate::samples;

    #[test]
    fn four_element_code_diagram() {
        let code = generate_code(&KUFunction::identity(samples::four_element()));
        let dot = code_dot(&code);
        assert_eq!(
            dot,
            "digraph hasse {\n  rankdir=BT;\n  \"1000\";\n  \"1100\";\n  \"1110\";\n  \"1001\";\n  \"1000\" -> \"1100\";\n  \"1000\" -> \"1001\";\n  \"1100\" -> \"1110\";\n}\n"
        );
    }

    #[test]
    fn single_node_has_no_edges() {
        let alg = crate::algebra::FiniteKUAlgebra::new(vec![vec![0]]).unwrap();
        let code = generate_code(&KUFunction::identity(alg.clone()));
        assert_eq!(
            code_dot(&code),
            "digraph hasse {\n  rankdir=BT;\n  \"1\";\n}\n"
        );
        assert_eq!(
            order_dot(&alg.natural_order()),
            "digraph hasse {\n  rankdir=BT;\n  \"0\";\n}\n"
        );
    }

    #[test]
    fn divisor_code_diagram_matches_divisibility_covers() {
        let alg = crate::algebra::gcd_algebra(9);
        let code = generate_code(&KUFunction::identity(alg.clone()));
        let dot = code_dot(&code);
        // edges correspond exactly to the covers of divisibility on 1..9
        let expected_edges: Vec<(usize, usize)> = alg.natural_order().covers();
        let words = code.words();
        for (u, v) in expected_edges {
            let line = format!("  \"{}\" -> \"{}\";\n", words[u], words[v]);
            assert!(dot.contains(&line), "missing {line:?}");
        }
        assert_eq!(dot.matches(" -> ").count(), 9);
    }

    #[test]
    fn chain_order_diagram() {
        let alg = crate::order::from_poset(&[
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ])
        .unwrap();
        assert_eq!(
            order_dot(&alg.natural_order()),
            "digraph hasse {\n  rankdir=BT;\n  \"0\";\n  \"1\";\n  \"2\";\n  \"0\" -> \"1\";\n  \"1\" -> \"2\";\n}\n"
        );
    }
}
