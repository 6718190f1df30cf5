use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::fmt;

use thiserror::Error;

use crate::bitset::VertexId;
use crate::complex::SimplicialComplex;

/// A witness that a complex is vertex decomposable.
///
/// Each `Shed` node names a vertex satisfying condition (β) for the complex
/// at that node; its children certify the deletion and the link. Leaves
/// certify single-facet complexes (`Simplex`, or `Edgeless` when the complex
/// came from an edgeless graph) or flag complexes of chordal graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Certificate {
    Simplex,
    Edgeless,
    Chordal,
    Shed {
        vertex: VertexId,
        deletion: Arc<Certificate>,
        link: Arc<Certificate>,
    },
}

impl Certificate {
    pub fn is_leaf(&self) -> bool {
        !matches!(self, Certificate::Shed { .. })
    }

    pub fn depth(&self) -> usize {
        match self {
            Certificate::Shed { deletion, link, .. } => 1 + deletion.depth().max(link.depth()),
            _ => 0,
        }
    }

    /// Number of nodes, counting shared subtrees once per occurrence.
    pub fn node_count(&self) -> usize {
        match self {
            Certificate::Shed { deletion, link, .. } => {
                1 + deletion.node_count() + link.node_count()
            }
            _ => 1,
        }
    }
}

/// Certificate for `Δ₁ * Δ₂` from certificates of the two factors, which
/// must live on the same vertex table with disjoint vertex sets.
pub(crate) fn join_certificates(a: &Arc<Certificate>, b: &Arc<Certificate>) -> Arc<Certificate> {
    let mut seen = BTreeMap::new();
    join_rec(a, b, &mut seen)
}

// Certificates are DAGs; `seen` keeps shared subtrees shared.
fn join_rec(
    a: &Arc<Certificate>,
    b: &Arc<Certificate>,
    seen: &mut BTreeMap<(usize, usize), Arc<Certificate>>,
) -> Arc<Certificate> {
    use Certificate::*;
    let key = (Arc::as_ptr(a) as usize, Arc::as_ptr(b) as usize);
    if let Some(hit) = seen.get(&key) {
        return hit.clone();
    }
    let out = match (&**a, &**b) {
        (Simplex | Edgeless, _) => b.clone(),
        (_, Simplex | Edgeless) => a.clone(),
        (
            Shed {
                vertex,
                deletion,
                link,
            },
            _,
        ) => Arc::new(Shed {
            vertex: *vertex,
            deletion: join_rec(deletion, b, seen),
            link: join_rec(link, b, seen),
        }),
        (
            Chordal,
            Shed {
                vertex,
                deletion,
                link,
            },
        ) => Arc::new(Shed {
            vertex: *vertex,
            deletion: join_rec(a, deletion, seen),
            link: join_rec(a, link, seen),
        }),
        (Chordal, Chordal) => a.clone(),
    };
    seen.insert(key, out.clone());
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    NotASimplex { facets: usize },
    NotChordalFlag,
    VertexNotInComplex(String),
    BetaFails(String),
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::NotASimplex { facets } => {
                write!(f, "leaf complex has {facets} facets, expected one")
            }
            VerifyFailure::NotChordalFlag => {
                f.write_str("leaf complex is not the independence complex of a chordal graph")
            }
            VerifyFailure::VertexNotInComplex(v) => write!(f, "vertex `{v}` is not in the complex"),
            VerifyFailure::BetaFails(v) => {
                write!(f, "a facet of the link of `{v}` is a facet of the deletion")
            }
        }
    }
}

/// A certificate node that does not hold, with its path from the root
/// (`root`, `root.deletion.link`, …).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("certificate rejected at {path}: {failure}")]
pub struct VerifyError {
    pub path: String,
    pub failure: VerifyFailure,
}

/// Replays a certificate against a complex, recomputing every deletion and
/// link from the definitions.
pub fn verify_certificate(c: &SimplicialComplex, cert: &Certificate) -> Result<(), VerifyError> {
    let mut path = String::from("root");
    verify_node(c, cert, &mut path)
}

fn verify_node(
    c: &SimplicialComplex,
    cert: &Certificate,
    path: &mut String,
) -> Result<(), VerifyError> {
    let fail = |path: &String, failure| {
        Err(VerifyError {
            path: path.clone(),
            failure,
        })
    };
    match cert {
        Certificate::Simplex | Certificate::Edgeless => {
            if c.is_simplex() {
                Ok(())
            } else {
                fail(
                    path,
                    VerifyFailure::NotASimplex {
                        facets: c.facets().len(),
                    },
                )
            }
        }
        Certificate::Chordal => {
            if super::is_chordal_flag(c.facets()) {
                Ok(())
            } else {
                fail(path, VerifyFailure::NotChordalFlag)
            }
        }
        Certificate::Shed {
            vertex,
            deletion,
            link,
        } => {
            let name = || {
                c.labels()
                    .get(vertex.0)
                    .cloned()
                    .unwrap_or_else(|| vertex.to_string())
            };
            let in_faces = c.facets().iter().any(|f| f.contains(*vertex));
            if !in_faces {
                return fail(path, VerifyFailure::VertexNotInComplex(name()));
            }
            let d = c.deletion(*vertex).expect("vertex checked");
            let l = c.link(*vertex).expect("vertex checked");
            if l.facets().iter().any(|f| d.facets().contains(f)) {
                return fail(path, VerifyFailure::BetaFails(name()));
            }
            let len = path.len();
            path.push_str(".deletion");
            verify_node(&d, deletion, path)?;
            path.truncate(len);
            path.push_str(".link");
            verify_node(&l, link, path)?;
            path.truncate(len);
            Ok(())
        }
    }
}
