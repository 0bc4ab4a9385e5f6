mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{naive_closure, naive_zero_forcing};
use zfbrush::brushing::{brushing_number, verify_brush_witness};
use zfbrush::format::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
use zfbrush::graph::{line_graph, Orientation};
use zfbrush::transfer::transfer;
use zfbrush::zero_forcing::{closure, record_process_random, zero_forcing_number};
use zfbrush::{Budget, Graph};

/// Arbitrary simple graph on up to `max_n` vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
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
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Connected graph: a random spanning tree plus random extra edges.
fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|v| 0..v).collect();
        let extra = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (parents, extra).prop_map(move |(parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if extra[i] && parents[v - 1] != u && edges.len() < 14 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(10)) {
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(text.as_bytes()).unwrap();
        prop_assert_eq!(back.n(), g.n());
        let mut a = g.edges().to_vec();
        let mut b = back.edges().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
        prop_assert_eq!(write_graph6(&back).unwrap(), text);
    }

    #[test]
    fn edgelist_round_trip(g in graph(10)) {
        let back = parse_edgelist(&write_edgelist(&g)).unwrap();
        prop_assert_eq!(back.n(), g.n());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn line_graph_degrees(g in graph(8)) {
        prop_assume!(g.m() > 0);
        let lg = line_graph(&g).unwrap();
        prop_assert_eq!(lg.graph.n(), g.m());
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            prop_assert_eq!(lg.graph.degree(lg.vertex_of(e)), g.degree(u) + g.degree(v) - 2);
        }
        let expected: usize = (0..g.n()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(lg.graph.m(), expected);
    }

    #[test]
    fn components_partition(g in graph(10)) {
        let comps = g.components();
        let mut seen = vec![0; g.n()];
        let mut edges = 0;
        for c in &comps {
            prop_assert!(c.graph.is_connected());
            for &v in &c.vertex_map {
                seen[v] += 1;
            }
            edges += c.graph.m();
        }
        prop_assert!(seen.iter().all(|&s| s == 1));
        prop_assert_eq!(edges, g.m());
    }

    #[test]
    fn topological_order_or_cycle(g in graph(8), mask in any::<u64>()) {
        let o = Orientation::from_mask(&g, mask);
        match o.topological_order() {
            Ok(order) => {
                prop_assert!(o.respects(&order));
                prop_assert!(order.positions(g.n()).is_some());
            }
            Err(cycle) => {
                let c = &cycle.0;
                prop_assert!(c.len() >= 3);
                for i in 0..c.len() {
                    let (a, b) = (c[i], c[(i + 1) % c.len()]);
                    let e = g.edge_between(a, b).unwrap();
                    prop_assert_eq!(o.direction(e), Some((a, b)));
                }
            }
        }
    }

    #[test]
    fn closure_agrees_with_naive(g in graph(10), picks in prop::collection::vec(any::<bool>(), 10)) {
        let s: Vec<usize> = (0..g.n()).filter(|&v| picks[v]).collect();
        let expected: Vec<usize> =
            naive_closure(&g, &s).iter().enumerate().filter(|(_, c)| **c).map(|(v, _)| v).collect();
        prop_assert_eq!(closure(&g, &s), expected);
    }

    #[test]
    fn random_schedules_are_valid(g in graph(9), seed in any::<u64>()) {
        let z = zero_forcing_number(&g, Budget::unlimited()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = record_process_random(&g, &z.witness, &mut rng).unwrap();
        prop_assert!(p.validate(&g).is_ok());
        prop_assert_eq!(p.events.len(), g.n() - z.k);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zero_forcing_additive(a in graph(5), b in graph(5)) {
        let u = a.disjoint_union(&b);
        let z = |g: &Graph| zero_forcing_number(g, Budget::unlimited()).unwrap().k;
        prop_assert_eq!(z(&u), z(&a) + z(&b));
        prop_assert_eq!(z(&u), naive_zero_forcing(&u).0);
    }

    #[test]
    fn brushing_additive(a in connected(4), b in connected(4)) {
        let u = a.disjoint_union(&b);
        let bn = |g: &Graph| brushing_number(g, Budget::unlimited()).unwrap().b;
        prop_assert_eq!(bn(&u), bn(&a) + bn(&b));
    }

    #[test]
    fn transfer_on_connected_graphs(g in connected(8)) {
        let r = transfer(&g, Budget::unlimited()).unwrap();
        prop_assert!(r.checks.all());
        prop_assert!(verify_brush_witness(&g, &r.brush_witness).is_ok());
        prop_assert!(r.y.len() <= r.k());
        prop_assert_eq!(closure(&g, &r.y).len(), g.n());
        if g.m() <= 10 {
            prop_assert!(brushing_number(&g, Budget::unlimited()).unwrap().b <= r.k());
        }
    }
}
