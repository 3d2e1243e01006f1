use edgecrit::formats::{parse_dimacs, parse_structured, to_dimacs, to_structured};
use edgecrit_core::generators::{gn, kneser, mycielski_iter};
use edgecrit_core::Graph;
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1..=14usize).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(any::<bool>(), pairs),
            proptest::option::of(4u32..40),
        )
            .prop_map(move |(bits, hint)| {
                let edges: Vec<_> = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .zip(bits)
                    .filter_map(|(p, keep)| keep.then_some(p))
                    .collect();
                let mut g = Graph::from_edges(n, &edges).unwrap();
                g.set_n_hint(hint);
                g
            })
    })
}

proptest! {
    #[test]
    fn structured_round_trip_is_identical(g in arb_graph()) {
        let text = to_structured(&g);
        let back = parse_structured(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_structured(&back), text);
    }

    #[test]
    fn dimacs_round_trip_keeps_edges(g in arb_graph()) {
        let back = parse_dimacs(&to_dimacs(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert!(back.edges().eq(g.edges()));
    }
}

#[test]
fn family_graphs_round_trip() {
    for g in [
        gn(9).unwrap(),
        kneser(6, 2).unwrap(),
        mycielski_iter(5).unwrap(),
    ] {
        assert_eq!(parse_structured(&to_structured(&g)).unwrap(), g);
    }
}
