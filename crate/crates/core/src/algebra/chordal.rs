use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{VertexId, VertexSet};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// A perfect elimination order: each vertex is simplicial among the
    /// vertices after it.
    Chordal(Vec<VertexId>),
    /// An induced cycle of length at least four, in cyclic order.
    NotChordal(Vec<VertexId>),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal(_))
    }
}

fn is_clique(adj: &[VertexSet], s: &VertexSet) -> bool {
    s.iter().all(|u| s.without(u).is_subset(&adj[u.0]))
}

/// Greedy elimination of simplicial vertices (lowest index first) from the
/// subgraph induced on `within`. Returns the order and what is left.
fn eliminate(adj: &[VertexSet], within: &VertexSet) -> (Vec<VertexId>, VertexSet) {
    let mut rest = within.clone();
    let mut order = Vec::with_capacity(within.len());
    'outer: while !rest.is_empty() {
        for v in rest.iter() {
            if is_clique(adj, &(&adj[v.0] & &rest)) {
                order.push(v);
                rest.remove(v);
                continue 'outer;
            }
        }
        break;
    }
    (order, rest)
}

pub(crate) fn is_chordal_within(adj: &[VertexSet], within: &VertexSet) -> bool {
    eliminate(adj, within).1.is_empty()
}

/// Decides chordality and returns a witness either way.
pub fn is_chordal(g: &Graph) -> Chordality {
    let adj = g.adjacency();
    let (order, rest) = eliminate(adj, &g.vertices());
    if rest.is_empty() {
        return Chordality::Chordal(order);
    }
    Chordality::NotChordal(
        chordless_cycle(adj, &rest).expect("a graph without simplicial vertices has a hole"),
    )
}

/// For each vertex `v` and non-adjacent neighbours `x, y`, a shortest
/// `x`–`y` path avoiding the rest of `N[v]` closes an induced cycle.
fn chordless_cycle(adj: &[VertexSet], within: &VertexSet) -> Option<Vec<VertexId>> {
    for v in within.iter() {
        let nbrs: Vec<VertexId> = (&adj[v.0] & within).iter().collect();
        let mut closed = &adj[v.0] & within;
        closed.insert(v);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                if adj[x.0].contains(y) {
                    continue;
                }
                let mut allowed = within - &closed;
                allowed.insert(x);
                allowed.insert(y);
                if let Some(path) = shortest_path(adj, &allowed, x, y) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(
    adj: &[VertexSet],
    allowed: &VertexSet,
    from: VertexId,
    to: VertexId,
) -> Option<Vec<VertexId>> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from.0] = from.0;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to.0;
            while cur != from.0 {
                cur = parent[cur];
                path.push(VertexId(cur));
            }
            path.reverse();
            return Some(path);
        }
        for w in (&adj[u.0] & allowed).iter() {
            if parent[w.0] == usize::MAX {
                parent[w.0] = u.0;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Whether `cycle` lists an induced cycle of length at least four.
pub fn is_chordless_cycle(g: &Graph, cycle: &[VertexId]) -> bool {
    let k = cycle.len();
    if k < 4 || cycle.iter().any(|v| v.0 >= g.order()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if cycle[i] == cycle[j] {
                return false;
            }
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.is_adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}
