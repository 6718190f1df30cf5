use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use thiserror::Error;

use super::certificate::Certificate;
use super::search::{GraphStep, SearchConfig, Searcher};
use super::weak_shedding_within;
use crate::bitset::{VertexId, VertexSet};
use crate::boolean::{boolean_vertices, SubsetLabel};
use crate::error::Error as CoreError;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Boolean,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Singletons, then pairs, then triples, … each layer in descending
    /// pure lexicographic order.
    BooleanLayers,
    /// Complements of singletons, then of pairs, … (largest degree first),
    /// each layer in descending pure lexicographic order.
    ComplementLayers,
    UserSupplied,
}

/// An ordered list of vertices to shed one after another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheddingSchedule {
    pub labels: Vec<String>,
    pub provenance: Provenance,
}

impl SheddingSchedule {
    pub fn user(labels: Vec<String>) -> Self {
        SheddingSchedule {
            labels,
            provenance: Provenance::UserSupplied,
        }
    }
}

/// The layered shedding order for `B_n` or its complement.
///
/// For `B_n` the vertices are taken by increasing size, so `n, …, 1` come
/// first, then `n(n-1), …, 21`, and so on. For the complement the layers run
/// by decreasing size (`23…n, 13…n, …`), which is decreasing vertex degree.
/// Within a layer the order is descending pure lexicographic.
pub fn layered_schedule(n: usize, family: Family) -> Result<SheddingSchedule, CoreError> {
    if n < 2 {
        return Err(CoreError::OutOfRange {
            n,
            min: 2,
            max: crate::boolean::MAX_N,
        });
    }
    let mut vs: Vec<SubsetLabel> = boolean_vertices(n)?;
    let provenance = match family {
        Family::Boolean => {
            vs.sort_by(|a, b| {
                a.cardinality()
                    .cmp(&b.cardinality())
                    .then(b.mask().cmp(&a.mask()))
            });
            Provenance::BooleanLayers
        }
        Family::Complement => {
            vs.sort_by(|a, b| {
                b.cardinality()
                    .cmp(&a.cardinality())
                    .then(b.mask().cmp(&a.mask()))
            });
            Provenance::ComplementLayers
        }
    };
    Ok(SheddingSchedule {
        labels: vs.iter().map(alloc::string::ToString::to_string).collect(),
        provenance,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("schedule names unknown vertex `{0}`")]
    UnknownLabel(String),
    #[error("schedule names `{0}` twice")]
    DuplicateLabel(String),
    #[error("step {index}: `{label}` is not a weak shedding vertex of the residual graph")]
    NotWeakShedding { index: usize, label: String },
    #[error("step {index}: the link branch at `{label}` is not vertex decomposable")]
    LinkBranchFails { index: usize, label: String },
    #[error("the graph left after the schedule is not vertex decomposable")]
    ResidualFails,
    #[error("search budget exhausted after {memo_entries} memo entries")]
    Undecided { memo_entries: usize },
}

/// Sheds the scheduled vertices one at a time from the residual graph.
///
/// Each step checks that the vertex is weak shedding in the current residual
/// graph and settles its link branch `R ∖ N[v]` with the full checker. Once
/// the residual graph has no edges the remaining entries are not needed; if
/// the schedule runs out first, the residual graph is settled by the full
/// checker. The result is a complete certificate for the independence
/// complex of `g`.
pub fn replay_schedule(
    g: &Graph,
    sched: &SheddingSchedule,
    config: &SearchConfig,
) -> Result<Arc<Certificate>, ReplayError> {
    let mut ids = Vec::with_capacity(sched.labels.len());
    for (i, l) in sched.labels.iter().enumerate() {
        if sched.labels[..i].contains(l) {
            return Err(ReplayError::DuplicateLabel(l.clone()));
        }
        ids.push(
            g.index_of(l)
                .ok_or_else(|| ReplayError::UnknownLabel(l.clone()))?,
        );
    }
    let mut searcher = Searcher::new(config, Certificate::Edgeless);
    let mut residual = g.vertices();
    let mut steps: Vec<(VertexId, Arc<Certificate>)> = Vec::new();
    for (index, &v) in ids.iter().enumerate() {
        if is_edgeless_within(g, &residual) {
            break;
        }
        let label = || sched.labels[index].clone();
        let closed = g.closed_neighborhood(v).expect("validated id");
        if !weak_shedding_within(g, &residual, v, &closed) {
            return Err(ReplayError::NotWeakShedding {
                index,
                label: label(),
            });
        }
        let branch = &residual - &closed;
        let link_cert = match searcher.decide_graph(g, &branch) {
            GraphStep::Yes(c) => c,
            GraphStep::No => {
                return Err(ReplayError::LinkBranchFails {
                    index,
                    label: label(),
                })
            }
            GraphStep::Undecided { memo_entries } => {
                return Err(ReplayError::Undecided { memo_entries })
            }
        };
        steps.push((v, link_cert));
        residual.remove(v);
    }
    let mut cert = match searcher.decide_graph(g, &residual) {
        GraphStep::Yes(c) => c,
        GraphStep::No => return Err(ReplayError::ResidualFails),
        GraphStep::Undecided { memo_entries } => {
            return Err(ReplayError::Undecided { memo_entries })
        }
    };
    for (v, link) in steps.into_iter().rev() {
        cert = Arc::new(Certificate::Shed {
            vertex: v,
            deletion: cert,
            link,
        });
    }
    Ok(cert)
}

fn is_edgeless_within(g: &Graph, within: &VertexSet) -> bool {
    within
        .iter()
        .all(|v| g.adjacency()[v.0].is_disjoint(within))
}
