//! JSON file formats for graphs, complexes, certificates and blow-up
//! conditions, plus DOT rendering of graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use bcl_core::algebra::LinearCondition;
use bcl_core::decompose::Certificate;
use bcl_core::{Graph, SimplicialComplex, VertexId, VertexSet};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `{"vertices": [...], "edges": [[i, j], ...]}` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edges().into_iter().map(|(u, v)| [u.0, v.0]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        Ok(Graph::from_index_edges(
            self.vertices.clone(),
            self.edges.iter().map(|[u, v]| (*u, *v)),
        )?)
    }
}

/// `{"ground": [...], "facets": [[label, ...], ...]}`. `vertices` lists the
/// active vertices and is present only when some of them lie in no face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub ground: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
}

impl ComplexJson {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let mut covered = VertexSet::empty(c.ground_size());
        for f in c.facets() {
            covered.union_with(f);
        }
        let vertices = (covered != *c.vertices()).then(|| {
            c.vertices()
                .iter()
                .map(|v| c.label(v).to_string())
                .collect()
        });
        ComplexJson {
            ground: c.labels().to_vec(),
            facets: c
                .facet_labels()
                .into_iter()
                .map(|f| f.into_iter().map(String::from).collect())
                .collect(),
            vertices,
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, CliError> {
        let c = SimplicialComplex::from_labeled(self.ground.clone(), &self.facets)?;
        match &self.vertices {
            None => Ok(c),
            Some(active) => {
                let mut extra = VertexSet::empty(c.ground_size());
                for l in active {
                    let v = c
                        .index_of(l)
                        .ok_or_else(|| bcl_core::Error::UnknownLabel(l.clone()))?;
                    extra.insert(v);
                }
                Ok(c.with_extra_vertices(&extra)?)
            }
        }
    }
}

/// A graph or a complex, as read from a file or built from a spec string.
#[derive(Clone, Debug)]
pub enum Object {
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Object {
    /// The complex the properties are evaluated on: a graph stands for its
    /// independence complex.
    pub fn complex(&self) -> SimplicialComplex {
        match self {
            Object::Graph(g) => g.independence_complex(),
            Object::Complex(c) => c.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Object::Graph(g) => serde_json::to_value(GraphJson::from_graph(g)),
            Object::Complex(c) => serde_json::to_value(ComplexJson::from_complex(c)),
        }
        .expect("plain data serializes")
    }

    /// Reads either format, telling them apart by their keys.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("edges").is_some() {
            let g: GraphJson = serde_json::from_value(value)?;
            Ok(Object::Graph(g.to_graph()?))
        } else if value.get("facets").is_some() {
            let c: ComplexJson = serde_json::from_value(value)?;
            Ok(Object::Complex(c.to_complex()?))
        } else {
            Err(CliError::Format(
                "expected a graph (`edges`) or a complex (`facets`)".into(),
            ))
        }
    }
}

/// Certificate node in JSON; vertices are referred to by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CertificateJson {
    Simplex,
    Edgeless,
    Chordal,
    Shed {
        vertex: String,
        deletion: Box<CertificateJson>,
        link: Box<CertificateJson>,
    },
}

impl CertificateJson {
    pub fn from_certificate(cert: &Certificate, labels: &[String]) -> Self {
        match cert {
            Certificate::Simplex => CertificateJson::Simplex,
            Certificate::Edgeless => CertificateJson::Edgeless,
            Certificate::Chordal => CertificateJson::Chordal,
            Certificate::Shed {
                vertex,
                deletion,
                link,
            } => CertificateJson::Shed {
                vertex: labels[vertex.0].clone(),
                deletion: Box::new(Self::from_certificate(deletion, labels)),
                link: Box::new(Self::from_certificate(link, labels)),
            },
        }
    }

    /// Resolves labels against `labels`; an unknown label is reported with
    /// the path of the node naming it.
    pub fn to_certificate(&self, labels: &[String]) -> Result<Arc<Certificate>, UnknownVertex> {
        self.resolve(labels, &mut String::from("root"))
    }

    fn resolve(
        &self,
        labels: &[String],
        path: &mut String,
    ) -> Result<Arc<Certificate>, UnknownVertex> {
        Ok(Arc::new(match self {
            CertificateJson::Simplex => Certificate::Simplex,
            CertificateJson::Edgeless => Certificate::Edgeless,
            CertificateJson::Chordal => Certificate::Chordal,
            CertificateJson::Shed {
                vertex,
                deletion,
                link,
            } => {
                let v = labels
                    .iter()
                    .position(|l| l == vertex)
                    .ok_or_else(|| UnknownVertex {
                        path: path.clone(),
                        label: vertex.clone(),
                    })?;
                let len = path.len();
                path.push_str(".deletion");
                let deletion = deletion.resolve(labels, path)?;
                path.truncate(len);
                path.push_str(".link");
                let link = link.resolve(labels, path)?;
                path.truncate(len);
                Certificate::Shed {
                    vertex: VertexId(v),
                    deletion,
                    link,
                }
            }
        }))
    }
}

/// A certificate node naming a vertex the object does not have.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("certificate rejected at {path}: vertex `{label}` is not in the complex")]
pub struct UnknownVertex {
    pub path: String,
    pub label: String,
}

/// A certificate file: the object it was issued for and the tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schedule: Option<String>,
    pub certificate: CertificateJson,
}

/// A blow-up condition as text and as a coefficient map keyed by symbol.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionJson {
    pub text: String,
    pub coefficients: BTreeMap<String, i64>,
}

impl ConditionJson {
    pub fn new(c: &LinearCondition, g: &Graph) -> Self {
        ConditionJson {
            text: c.render(g),
            coefficients: c
                .coefficients()
                .into_iter()
                .map(|(v, k)| (format!("x_{}", g.label(v)), k))
                .collect(),
        }
    }
}

/// Undirected DOT rendering.
pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for l in g.labels() {
        let _ = writeln!(out, "  \"{}\";", escape(l));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\";",
            escape(g.label(u)),
            escape(g.label(v))
        );
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
