//! Randomized structural properties: format round-trips, permutation
//! algebra, and invariant orderings.

use proptest::prelude::*;
use symbreak::autsearch::isomorphic;
use symbreak::distinguishing::{distinguishing_number, theta};
use symbreak::graph::Graph;
use symbreak::perm::Perm;

/// Graph on `n` vertices whose upper-triangle edge bits come from `mask`.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0..(1u64 << bits).max(2))
    })
    .prop_map(|(n, mask)| graph_from_mask(n, mask))
}

/// Uniform permutation of degree `n`: argsort of random keys.
fn perm_from_keys(keys: &[u64]) -> Perm {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by_key(|&i| (keys[i], i));
    Perm::from_images(&order).unwrap()
}

fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
    proptest::collection::vec(any::<u64>(), n).prop_map(|keys| perm_from_keys(&keys))
}

fn arb_graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Perm)> {
    (2..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (
            Just(n),
            0..(1u64 << bits).max(2),
            proptest::collection::vec(any::<u64>(), n),
        )
    })
    .prop_map(|(n, mask, keys)| (graph_from_mask(n, mask), perm_from_keys(&keys)))
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(11)) {
        let text = g.to_graph6();
        let back = Graph::from_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(back.to_graph6(), text);
    }

    #[test]
    fn edge_list_roundtrip(g in arb_graph(11)) {
        let back = Graph::from_edge_list_text(&g.to_edge_list_text()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn complement_involution(g in arb_graph(11)) {
        let c = g.complement();
        let n = g.n();
        prop_assert_eq!(g.edge_count() + c.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn permutation_algebra(
        (p, q, r) in (2usize..=12).prop_flat_map(|n| (arb_perm(n), arb_perm(n), arb_perm(n)))
    ) {
        let n = p.degree();
        prop_assert_eq!(
            p.compose(&q).unwrap().compose(&r).unwrap(),
            p.compose(&q.compose(&r).unwrap()).unwrap()
        );
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(
            p.compose(&q).unwrap().inverse(),
            q.inverse().compose(&p.inverse()).unwrap()
        );
        let total: usize = p.cycles().iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, n);
        prop_assert_eq!(p.cycles().len(), p.raw_cycle_count());
    }

    #[test]
    fn invariant_ordering(g in arb_graph(6)) {
        let t = theta(&g).unwrap().theta;
        let d = distinguishing_number(&g).unwrap();
        prop_assert!(d <= t, "distinguishing number {} exceeds threshold {}", d, t);
        prop_assert!(t <= g.n(), "threshold {} exceeds vertex count {}", t, g.n());
        prop_assert!(d >= 1);
    }

    #[test]
    fn relabeling_preserves_isomorphism((g, p) in arb_graph_with_perm(9)) {
        let h = g.permuted(&p).unwrap();
        prop_assert!(isomorphic(&g, &h));
        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert_eq!(h.permuted(&p.inverse()).unwrap(), g);
    }
}
