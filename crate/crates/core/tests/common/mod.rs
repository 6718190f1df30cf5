#![allow(dead_code)]

use bcl_core::{Graph, SimplicialComplex, VertexSet};
use proptest::prelude::*;

pub fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Random graph on up to `max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_index_edges(labels(n), edges).unwrap()
        })
    })
}

/// Random nonvoid complex on a ground set of up to `max_n` vertices.
pub fn arb_complex(max_n: usize, max_gens: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0u64..(1 << n), 1..=max_gens).prop_map(move |masks| {
            let gens = masks
                .into_iter()
                .map(|m| VertexSet::from_mask(n, m as u128))
                .collect();
            SimplicialComplex::new(labels(n), gens).unwrap()
        })
    })
}

/// Every subset of `0..n` as a bitmask-driven vertex set.
pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..(1 << n)).map(move |m| VertexSet::from_mask(n, m as u128))
}
