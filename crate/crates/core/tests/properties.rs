use forcing_core::{
    brute_force_oracle, canonical_code, closure, encode_edge_list, encode_graph6, is_forcing_set,
    parse_edge_list, parse_graph6, solve, trace, Graph, VertexSet,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).expect("valid edges")
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (
            Just(g),
            any::<u64>()
                .prop_map(move |b| VertexSet::from_bits(b).intersection(VertexSet::full(n))),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in graph(64)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trips(g in graph(20)) {
        prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn closure_is_extensive_idempotent_and_monotone((g, s) in graph_and_set(16), extra in any::<u64>(), k in 1usize..4) {
        let c = closure(&g, k, s).colored;
        prop_assert!(s.is_subset(c));
        prop_assert_eq!(closure(&g, k, c).colored, c);
        let bigger = s.union(VertexSet::from_bits(extra).intersection(g.vertices()));
        prop_assert!(c.is_subset(closure(&g, k, bigger).colored));
        prop_assert!(c.is_subset(closure(&g, k + 1, s).colored));
    }

    #[test]
    fn trace_replays_to_closure((g, s) in graph_and_set(16), k in 1usize..4) {
        let t = trace(&g, k, s);
        prop_assert_eq!(t.replay(&g).unwrap(), closure(&g, k, s).colored);
    }

    #[test]
    fn solver_matches_oracle(g in graph(8), k in 1usize..4) {
        let fast = solve(&g, k).unwrap();
        let slow = brute_force_oracle(&g, k).unwrap();
        prop_assert_eq!(fast.value, slow.value);
        prop_assert_eq!(fast.witness.len(), fast.value);
        prop_assert!(is_forcing_set(&g, k, fast.witness));
    }

    #[test]
    fn forcing_number_is_antimonotone_in_k(g in graph(9), k in 1usize..4) {
        prop_assert!(solve(&g, k + 1).unwrap().value <= solve(&g, k).unwrap().value);
    }

    #[test]
    fn edge_boundary_is_symmetric((g, s) in graph_and_set(20)) {
        let rest = s.complement(g.order());
        prop_assert_eq!(g.edge_boundary(s), g.edge_boundary(rest));
        prop_assert_eq!(
            g.induced_edge_count(s) + g.induced_edge_count(rest) + g.edge_boundary(s),
            g.edge_count()
        );
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(7), perm_seed in any::<u64>()) {
        let n = g.order();
        let mut order: Vec<usize> = (0..n).collect();
        let mut state = perm_seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (state >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&g.relabel(&order)), canonical_code(&g));
    }
}
