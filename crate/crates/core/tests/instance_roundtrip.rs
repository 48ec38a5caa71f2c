//! Property tests for the instance format.

use proptest::prelude::*;

use tecs::graph::Graph;
use tecs::instance::{format_instance, parse_instance};

fn arb_graph_and_weights() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<i64>)> {
    (2usize..12).prop_flat_map(|n| {
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let count = all_pairs.len();
        (
            Just(n),
            proptest::sample::subsequence(all_pairs, 0..=count),
        )
            .prop_flat_map(|(n, edges)| {
                let m = edges.len();
                (
                    Just(n),
                    Just(edges),
                    proptest::collection::vec(-1000i64..1000, m..=m),
                )
            })
    })
}

proptest! {
    #[test]
    fn format_then_parse_is_identity((n, edges, weights) in arb_graph_and_weights()) {
        let g = Graph::new(n, edges).unwrap();
        let text = format_instance(&g, &weights);
        let (g2, w2) = parse_instance(&text).unwrap();
        prop_assert_eq!(g.vertex_count(), g2.vertex_count());
        prop_assert_eq!(g.edges(), g2.edges());
        prop_assert_eq!(weights, w2);
    }

    #[test]
    fn parser_never_panics_on_arbitrary_text(text in "\\PC*") {
        let _ = parse_instance(&text);
    }

    #[test]
    fn parser_never_panics_on_line_noise(lines in proptest::collection::vec("[cpe] [0-9 ]{0,12}", 0..8)) {
        let _ = parse_instance(&lines.join("\n"));
    }
}
