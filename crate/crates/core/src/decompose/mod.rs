//! Vertex decomposability: shedding vertices, an exhaustive memoized
//! decision procedure that emits replayable certificates, the layered
//! shedding schedules for Boolean graphs and their complements, and
//! shellability tests.

mod certificate;
mod schedule;
mod search;
mod shelling;

pub use certificate::{verify_certificate, Certificate, VerifyError, VerifyFailure};
pub use schedule::{
    layered_schedule, replay_schedule, Family, Provenance, ReplayError, SheddingSchedule,
};
pub use search::{
    check_join_property, is_vertex_decomposable, is_vertex_decomposable_graph, JoinReport,
    Refutation, SearchConfig, VdOutcome,
};
pub use shelling::{
    find_shelling_obstruction, is_shellable_bruteforce, is_shelling_order, ObstructionWitness,
    ShellOutcome, ShellingOrder, DEFAULT_FACET_CAP,
};

use alloc::vec::Vec;

use crate::bitset::{VertexId, VertexSet};
use crate::complex::SimplicialComplex;
use crate::error::Error;
use crate::graph::{maximal_independent_sets_within, Graph};

/// Condition (β): no facet of `lk(v)` is a facet of `Δ ∖ v`.
pub fn is_condition_beta(c: &SimplicialComplex, v: VertexId) -> Result<bool, Error> {
    let link = c.link(v)?;
    let deletion = c.deletion(v)?;
    Ok(!link.facets().iter().any(|f| deletion.facets().contains(f)))
}

/// (β) on a bare facet list: every facet through `v` loses `v` into some
/// facet avoiding `v`.
pub(crate) fn beta_on_facets(facets: &[VertexSet], v: VertexId) -> bool {
    let (with, without): (Vec<&VertexSet>, Vec<&VertexSet>) =
        facets.iter().partition(|f| f.contains(v));
    with.iter().all(|f| {
        let rest = f.without(v);
        without.iter().any(|g| rest.is_subset(g))
    })
}

/// Weak shedding in graph form: every independent set of `g ∖ N[v]` stays
/// independent after adding some neighbor of `v`.
pub fn is_weak_shedding_vertex_graph(g: &Graph, v: VertexId) -> Result<bool, Error> {
    let closed = g.closed_neighborhood(v)?;
    Ok(weak_shedding_within(g, &g.vertices(), v, &closed))
}

/// Weak shedding of `v` in the subgraph induced on `within`.
pub(crate) fn weak_shedding_within(
    g: &Graph,
    within: &VertexSet,
    v: VertexId,
    closed: &VertexSet,
) -> bool {
    let nbrs = &(closed & within).without(v) & within;
    let rest = within - closed;
    // Enough to check the maximal independent sets of the rest.
    maximal_independent_sets_within(g.adjacency(), &rest)
        .iter()
        .all(|s| !(&nbrs - &g.neighborhood_of_set(s)).is_empty())
}

/// Adjacency of the graph whose independence complex the facets would form:
/// two active vertices are adjacent when no facet holds both.
pub(crate) fn nonedge_graph(facets: &[VertexSet], active: &VertexSet) -> Vec<VertexSet> {
    let n = active.universe();
    (0..n)
        .map(|u| {
            let u = VertexId(u);
            if !active.contains(u) {
                return VertexSet::empty(n);
            }
            let mut cofaced = VertexSet::singleton(n, u);
            for f in facets.iter().filter(|f| f.contains(u)) {
                cofaced.union_with(f);
            }
            active - &cofaced
        })
        .collect()
}

/// Whether the facets are exactly the maximal independent sets of their
/// non-edge graph, and that graph is chordal.
pub(crate) fn is_chordal_flag(facets: &[VertexSet]) -> bool {
    let n = match facets.first() {
        Some(f) => f.universe(),
        None => return false,
    };
    let mut active = VertexSet::empty(n);
    for f in facets {
        active.union_with(f);
    }
    let adj = nonedge_graph(facets, &active);
    crate::algebra::is_chordal_within(&adj, &active)
        && maximal_independent_sets_within(&adj, &active) == facets
}
