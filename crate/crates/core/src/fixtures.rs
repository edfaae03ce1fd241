//! Shared graphs and proptest strategies for unit tests.

use proptest::prelude::*;

use crate::extremal::{gen_friendship, gen_p3star};
use crate::graph::{Edge, Graph};

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner).map(|(u, v)| crate::graph::edge(u, v)))
        .unwrap()
}

pub fn bowtie() -> Graph {
    friendship(5)
}

pub fn friendship(n: usize) -> Graph {
    gen_friendship(n).unwrap()
}

pub fn p3star(n: usize) -> Graph {
    gen_p3star(n).unwrap()
}

fn all_pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = all_pairs(n);
            Graph::from_edges(n, pairs.into_iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
}

/// Random spanning tree plus random extra edges.
pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
                proptest::collection::vec(prop::bool::weighted(0.3), n * n.saturating_sub(1) / 2),
            )
        })
        .prop_map(|(n, parents, extra)| {
            let mut edges: Vec<Edge> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            for (e, keep) in all_pairs(n).into_iter().zip(extra) {
                if keep && !edges.contains(&e) {
                    edges.push(e);
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

pub fn arb_bipartite_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n),
                proptest::collection::vec(prop::bool::weighted(0.4), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, side, bits)| {
            let edges = all_pairs(n)
                .into_iter()
                .zip(bits)
                .filter(|&((u, v), b)| b && side[u] != side[v])
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
}

fn grow_ears(rng: &mut impl rand::Rng, mut g: Graph, max_n: usize, bipartite: bool) -> Graph {
    let steps = rng.gen_range(0..6);
    for _ in 0..steps {
        let n = g.n();
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut k = 2 * rng.gen_range(0..3) + 1;
        while n + k - 1 > max_n && k > 1 {
            k -= 2;
        }
        if u == v || (k == 1 && g.has_edge(u, v)) {
            continue;
        }
        if bipartite && g.bipartition().unwrap().same_part(u, v) {
            continue;
        }
        let mut path = vec![u];
        path.extend(n..n + k - 1);
        path.push(v);
        let edges: Vec<Edge> = path.windows(2).map(|w| crate::graph::edge(w[0], w[1])).collect();
        g = g.with_new_vertices(k - 1).with_edges(&edges).unwrap();
    }
    g
}

/// Matching covered bipartite graph grown by random ears from an even cycle.
pub fn random_bipartite_ear_graph(rng: &mut impl rand::Rng, max_n: usize) -> Graph {
    let len = 2 * rng.gen_range(2..=max_n / 2);
    grow_ears(rng, Graph::cycle(len), max_n, true)
}

/// Factor-critical graph without cut vertices, grown by random open ears
/// from an odd cycle.
pub fn random_odd_ear_graph(rng: &mut impl rand::Rng, max_n: usize) -> Graph {
    let len = 2 * rng.gen_range(1..=(max_n - 1) / 2) + 1;
    grow_ears(rng, Graph::cycle(len), max_n, false)
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges: Vec<Edge> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for (u, v) in all_pairs(n) {
        if !edges.contains(&(u, v)) && rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
