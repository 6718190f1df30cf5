use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::certificate::{join_certificates, Certificate};
use super::{beta_on_facets, is_chordal_flag, nonedge_graph, weak_shedding_within};
use crate::bitset::{maximal_antichain, VertexId, VertexSet};
use crate::complex::SimplicialComplex;
use crate::graph::{components_within, maximal_independent_sets_within, Graph};
use crate::Verdict;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of memoized subcomplexes before giving up.
    pub memo_cap: usize,
    /// A vertex lying in every facet splits off as a join factor.
    pub cone_shortcut: bool,
    /// Accept flag complexes of chordal graphs as leaves.
    pub chordal_shortcut: bool,
    /// Try vertices that carry a whisker before the others.
    pub whisker_first: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            memo_cap: 10_000_000,
            cone_shortcut: true,
            chordal_shortcut: false,
            whisker_first: true,
        }
    }
}

impl SearchConfig {
    /// Plain definition-following search: no cone or chordal shortcuts.
    pub fn paranoid() -> Self {
        SearchConfig {
            cone_shortcut: false,
            chordal_shortcut: false,
            ..Self::default()
        }
    }
}

/// Why a complex was found not vertex decomposable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    /// Vertices at the top level that satisfy (β); the search showed that
    /// for each of them the deletion or the link is not decomposable. Every
    /// other vertex fails (β) outright.
    pub weak_shedding: Vec<VertexId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VdOutcome {
    Decomposable(Arc<Certificate>),
    NotDecomposable(Refutation),
    /// The memo table reached its cap before an answer was found.
    Undecided {
        memo_entries: usize,
    },
}

impl VdOutcome {
    pub fn verdict(&self) -> Verdict {
        match self {
            VdOutcome::Decomposable(_) => Verdict::True,
            VdOutcome::NotDecomposable(_) => Verdict::False,
            VdOutcome::Undecided { .. } => Verdict::Undecided,
        }
    }

    pub fn certificate(&self) -> Option<&Arc<Certificate>> {
        match self {
            VdOutcome::Decomposable(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_decomposable(&self) -> bool {
        matches!(self, VdOutcome::Decomposable(_))
    }
}

struct BudgetExceeded;

pub(crate) struct Searcher<'a> {
    config: &'a SearchConfig,
    leaf: Certificate,
    memo: BTreeMap<Vec<VertexSet>, Option<Arc<Certificate>>>,
}

type Step = Result<Option<Arc<Certificate>>, BudgetExceeded>;

impl<'a> Searcher<'a> {
    pub(crate) fn new(config: &'a SearchConfig, leaf: Certificate) -> Self {
        Searcher {
            config,
            leaf,
            memo: BTreeMap::new(),
        }
    }

    fn decide(&mut self, facets: Vec<VertexSet>) -> Step {
        if facets.len() == 1 {
            return Ok(Some(Arc::new(self.leaf.clone())));
        }
        if facets.is_empty() {
            return Ok(None);
        }
        if let Some(hit) = self.memo.get(&facets) {
            return Ok(hit.clone());
        }
        if self.memo.len() >= self.config.memo_cap {
            return Err(BudgetExceeded);
        }
        let result = self.decide_fresh(&facets)?;
        self.memo.insert(facets, result.clone());
        Ok(result)
    }

    fn decide_fresh(&mut self, facets: &[VertexSet]) -> Step {
        if self.config.chordal_shortcut && is_chordal_flag(facets) {
            return Ok(Some(Arc::new(Certificate::Chordal)));
        }
        let n = facets[0].universe();
        let mut active = VertexSet::empty(n);
        let mut common = facets[0].clone();
        for f in facets {
            active.union_with(f);
            common.intersect_with(f);
        }
        if self.config.cone_shortcut && !common.is_empty() {
            // Δ = simplex(common) * link(common); a certificate for the link
            // replays unchanged on Δ.
            let link = maximal_antichain(facets.iter().map(|f| f - &common).collect());
            return self.decide(link);
        }
        for v in candidate_order(facets, &active, self.config.whisker_first) {
            if !beta_on_facets(facets, v) {
                continue;
            }
            let deletion: Vec<VertexSet> =
                facets.iter().filter(|f| !f.contains(v)).cloned().collect();
            let Some(del_cert) = self.decide(deletion)? else {
                continue;
            };
            let link = maximal_antichain(
                facets
                    .iter()
                    .filter(|f| f.contains(v))
                    .map(|f| f.without(v))
                    .collect(),
            );
            let Some(link_cert) = self.decide(link)? else {
                continue;
            };
            return Ok(Some(Arc::new(Certificate::Shed {
                vertex: v,
                deletion: del_cert,
                link: link_cert,
            })));
        }
        Ok(None)
    }

    fn outcome(&mut self, facets: Vec<VertexSet>) -> VdOutcome {
        let probe = facets.clone();
        match self.decide(facets) {
            Ok(Some(c)) => VdOutcome::Decomposable(c),
            Ok(None) => VdOutcome::NotDecomposable(refutation(&probe)),
            Err(BudgetExceeded) => VdOutcome::Undecided {
                memo_entries: self.memo.len(),
            },
        }
    }

    /// Decides the independence complex of the subgraph of `g` induced on
    /// `within`, one connected component at a time.
    pub(crate) fn decide_graph(&mut self, g: &Graph, within: &VertexSet) -> GraphStep {
        let n = g.order();
        let mut acc: Option<Arc<Certificate>> = None;
        for comp in components_within(g.adjacency(), within) {
            let cert = if comp.len() == 1 {
                Arc::new(Certificate::Edgeless)
            } else {
                let facets = maximal_independent_sets_within(g.adjacency(), &comp);
                match self.decide(facets) {
                    Ok(Some(c)) => c,
                    Ok(None) => return GraphStep::No,
                    Err(BudgetExceeded) => {
                        return GraphStep::Undecided {
                            memo_entries: self.memo.len(),
                        }
                    }
                }
            };
            acc = Some(match acc {
                None => cert,
                Some(prev) => join_certificates(&prev, &cert),
            });
        }
        debug_assert!(within.universe() == n);
        GraphStep::Yes(acc.unwrap_or_else(|| Arc::new(Certificate::Edgeless)))
    }
}

pub(crate) enum GraphStep {
    Yes(Arc<Certificate>),
    /// Some component is not decomposable.
    No,
    Undecided {
        memo_entries: usize,
    },
}

fn refutation(facets: &[VertexSet]) -> Refutation {
    let mut active = VertexSet::empty(facets.first().map_or(0, VertexSet::universe));
    for f in facets {
        active.union_with(f);
    }
    Refutation {
        weak_shedding: active
            .iter()
            .filter(|&v| beta_on_facets(facets, v))
            .collect(),
    }
}

/// Active vertices in index order, those carrying a whisker in the non-edge
/// graph moved to the front.
fn candidate_order(facets: &[VertexSet], active: &VertexSet, whisker_first: bool) -> Vec<VertexId> {
    if !whisker_first {
        return active.iter().collect();
    }
    let adj = nonedge_graph(facets, active);
    let mut whiskered = VertexSet::empty(active.universe());
    for d in active.iter() {
        if adj[d.0].len() == 1 {
            whiskered.union_with(&adj[d.0]);
        }
    }
    let mut out: Vec<VertexId> = whiskered.iter().collect();
    out.extend((active - &whiskered).iter());
    out
}

/// Exhaustive memoized decision of vertex decomposability. Candidates are
/// tried in a fixed order and the first success wins, so equal inputs give
/// identical certificates.
pub fn is_vertex_decomposable(c: &SimplicialComplex, config: &SearchConfig) -> VdOutcome {
    Searcher::new(config, Certificate::Simplex).outcome(c.facets().to_vec())
}

/// Vertex decomposability of a graph, i.e. of its independence complex.
/// Edgeless graphs are decomposable outright and disconnected graphs are
/// decided per component.
pub fn is_vertex_decomposable_graph(g: &Graph, config: &SearchConfig) -> VdOutcome {
    let mut s = Searcher::new(config, Certificate::Edgeless);
    match s.decide_graph(g, &g.vertices()) {
        GraphStep::Yes(c) => VdOutcome::Decomposable(c),
        GraphStep::No => VdOutcome::NotDecomposable(Refutation {
            weak_shedding: g
                .vertex_ids()
                .filter(|&v| {
                    let closed = g.closed_neighborhood(v).expect("valid vertex");
                    weak_shedding_within(g, &g.vertices(), v, &closed)
                })
                .collect(),
        }),
        GraphStep::Undecided { memo_entries } => VdOutcome::Undecided { memo_entries },
    }
}

/// The three verdicts behind "a join is decomposable iff both factors are".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinReport {
    pub left: Verdict,
    pub right: Verdict,
    pub join: Verdict,
}

impl JoinReport {
    /// `None` while any of the three is undecided.
    pub fn biconditional_holds(&self) -> Option<bool> {
        let b = |v: Verdict| match v {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Undecided => None,
        };
        Some(b(self.join)? == (b(self.left)? && b(self.right)?))
    }
}

/// Decides the two factors and their join independently.
pub fn check_join_property(
    c1: &SimplicialComplex,
    c2: &SimplicialComplex,
    config: &SearchConfig,
) -> JoinReport {
    JoinReport {
        left: is_vertex_decomposable(c1, config).verdict(),
        right: is_vertex_decomposable(c2, config).verdict(),
        join: is_vertex_decomposable(&c1.join(c2), config).verdict(),
    }
}
