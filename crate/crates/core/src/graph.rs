//! Simple undirected graphs backed by adjacency bitsets.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::{VertexId, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::Error;

/// A labeled simple graph. Adjacency is symmetric and irreflexive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from distinct labels and label pairs. Repeated edges
    /// (in either orientation) collapse to one.
    pub fn new<L, E, S>(labels: L, edges: E) -> Result<Self, Error>
    where
        L: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut g = Graph::edgeless(labels)?;
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let u = g
                .index_of(&a)
                .ok_or_else(|| Error::UnknownLabel(a.clone()))?;
            let v = g.index_of(&b).ok_or(Error::UnknownLabel(b))?;
            if u == v {
                return Err(Error::LoopEdge(a));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from index pairs.
    pub fn from_index_edges<I>(labels: Vec<String>, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(labels)?;
        let n = g.order();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { index: w, size: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(g.labels[u].clone()));
            }
            g.link(VertexId(u), VertexId(v));
        }
        Ok(g)
    }

    pub fn edgeless(labels: Vec<String>) -> Result<Self, Error> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        })
    }

    /// Assembles a graph from parts already known to be consistent.
    pub(crate) fn from_parts(labels: Vec<String>, adj: Vec<VertexSet>) -> Self {
        debug_assert_eq!(labels.len(), adj.len());
        Graph { labels, adj }
    }

    pub(crate) fn link(&mut self, u: VertexId, v: VertexId) {
        self.adj[u.0].insert(v);
        self.adj[v.0].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn index_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.order()).map(VertexId)
    }

    pub(crate) fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    fn check(&self, v: VertexId) -> Result<(), Error> {
        if v.0 < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                index: v.0,
                size: self.order(),
            })
        }
    }

    pub fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u.0].contains(v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.0].len()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|v| v.0 > u).map(|v| (VertexId(u), v)));
        }
        out
    }

    pub fn open_neighborhood(&self, v: VertexId) -> Result<VertexSet, Error> {
        self.check(v)?;
        Ok(self.adj[v.0].clone())
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet, Error> {
        self.check(v)?;
        Ok(self.adj[v.0].with(v))
    }

    /// Union of the neighborhoods of the members of `s`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.order());
        for v in s {
            out.union_with(&self.adj[v.0]);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, nb)| nb.complement().without(VertexId(v)))
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// Adjacency is symmetric and irreflexive.
    pub fn is_well_formed(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, nb)| {
            !nb.contains(VertexId(u)) && nb.iter().all(|v| self.adj[v.0].contains(VertexId(u)))
        })
    }

    /// Subgraph induced on `keep`, compacted to a fresh vertex table in the
    /// original order. Labels carry over.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let kept: Vec<VertexId> = keep.iter().filter(|v| v.0 < self.order()).collect();
        let m = kept.len();
        let mut pos = alloc::vec![usize::MAX; self.order()];
        for (i, v) in kept.iter().enumerate() {
            pos[v.0] = i;
        }
        let adj = kept
            .iter()
            .map(|v| {
                VertexSet::from_indices(
                    m,
                    self.adj[v.0]
                        .iter()
                        .filter(|w| pos[w.0] != usize::MAX)
                        .map(|w| pos[w.0]),
                )
            })
            .collect();
        Graph {
            labels: kept.iter().map(|v| self.labels[v.0].clone()).collect(),
            adj,
        }
    }

    pub fn delete_vertex(&self, v: VertexId) -> Result<Graph, Error> {
        self.check(v)?;
        Ok(self.induced_subgraph(&self.vertices().without(v)))
    }

    pub fn delete_closed_neighborhood(&self, v: VertexId) -> Result<Graph, Error> {
        let n = self.closed_neighborhood(v)?;
        Ok(self.induced_subgraph(&(&self.vertices() - &n)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v.0].is_disjoint(s))
    }

    /// Inclusion-maximal independent sets, sorted lex-by-bitset.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        maximal_independent_sets_within(&self.adj, &self.vertices())
    }

    /// Complements of the maximal independent sets, sorted lex-by-bitset.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let all = self.vertices();
        let mut out: Vec<VertexSet> = self
            .maximal_independent_sets()
            .iter()
            .map(|s| &all - s)
            .collect();
        out.sort();
        out
    }

    pub fn is_vertex_cover(&self, c: &VertexSet) -> bool {
        self.edges()
            .iter()
            .all(|&(u, v)| c.contains(u) || c.contains(v))
    }

    /// Connected components ordered by their least vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        components_within(&self.adj, &self.vertices())
    }

    /// The complex of independent sets. Its facets are the maximal
    /// independent sets; for the graph with no vertices this is `{∅}`.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_normalized(
            Arc::from(self.labels.clone()),
            self.vertices(),
            self.maximal_independent_sets(),
        )
    }

    /// The complex of cliques, i.e. the independence complex of the complement.
    pub fn clique_complex(&self) -> SimplicialComplex {
        self.complement().independence_complex()
    }

    /// Vertices of degree one.
    pub fn end_vertices(&self) -> VertexSet {
        VertexSet::from_indices(
            self.order(),
            (0..self.order()).filter(|&v| self.adj[v].len() == 1),
        )
    }

    /// Whether some neighbor of `v` has degree one.
    pub fn has_whisker(&self, v: VertexId) -> Result<bool, Error> {
        self.check(v)?;
        Ok(self.adj[v.0].iter().any(|w| self.adj[w.0].len() == 1))
    }

    /// Disjoint union; labels of `other` must not clash with ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, Error> {
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let n = labels.len();
        let mut g = Graph::edgeless(labels)?;
        let off = self.order();
        for (u, v) in self.edges() {
            g.link(u, v);
        }
        for (u, v) in other.edges() {
            g.link(VertexId(u.0 + off), VertexId(v.0 + off));
        }
        debug_assert_eq!(g.order(), n);
        Ok(g)
    }
}

/// Bron–Kerbosch with pivoting, run on the complement implicitly: a clique of
/// the complement is an independent set of the graph given by `adj`.
pub(crate) fn maximal_independent_sets_within(
    adj: &[VertexSet],
    within: &VertexSet,
) -> Vec<VertexSet> {
    let n = within.universe();
    let mut out = Vec::new();
    let mut r = VertexSet::empty(n);
    bron_kerbosch(adj, &mut r, within.clone(), VertexSet::empty(n), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: &mut VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // Pivot: the vertex whose closed neighborhood leaves the fewest branches.
    let pivot = p
        .iter()
        .chain(x.iter())
        .min_by_key(|u| (&p & &adj[u.0]).len() + usize::from(p.contains(*u)))
        .expect("p is nonempty");
    let branch = &p & &adj[pivot.0].with(pivot);
    for v in branch.iter() {
        let closed = adj[v.0].with(v);
        r.insert(v);
        bron_kerbosch(adj, r, &p - &closed, &x - &closed, out);
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
}

pub(crate) fn components_within(adj: &[VertexSet], within: &VertexSet) -> Vec<VertexSet> {
    let n = within.universe();
    let mut seen = VertexSet::empty(n);
    let mut out = Vec::new();
    for s in within.iter() {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::singleton(n, s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let fresh = &(&adj[u.0] & within) - &comp;
            for w in fresh.iter() {
                comp.insert(w);
                queue.push_back(w);
            }
        }
        seen.union_with(&comp);
        out.push(comp);
    }
    out
}
