//! Spec strings naming graphs and complexes, such as `bool:4`,
//! `dual:ind-complex:bool:4` or `blowup:{"1":2,"2":3}:bool:2`.
//!
//! A spec is a chain of colon-separated constructors ending in a generator:
//!
//! | spec | result |
//! |---|---|
//! | `bool:n`, `bool-complement:n`, `minus-top:n` | Boolean graphs |
//! | `cycle:n`, `path:n`, `complete:n` | small test graphs |
//! | `complement:G` | complement graph |
//! | `ind-complex:G`, `clique-complex:G` | complexes of a graph |
//! | `dual:C` | Alexander dual |
//! | `skeleton:s:C`, `pure-skeleton:s:C` | skeletons |
//! | `blowup:M:G`, `expand:M:G` | `M` a label→size JSON map or one size |
//! | `gblowup:M:G` | `M` a label→`[p1, p2]` map or one `[p1, p2]` pair |
//! | `file:PATH` | graph or complex JSON |

use std::collections::BTreeMap;

use bcl_core::boolean::{
    blow_up, boolean_complement_graph, boolean_graph, boolean_minus_top, expanding_graph,
    generalized_blow_up, BlowupSpec, GeneralizedBlowupSpec,
};
use bcl_core::{Graph, SimplicialComplex};
use serde::Deserialize;

use crate::error::CliError;
use crate::io::Object;

pub fn parse_object(spec: &str) -> Result<Object, CliError> {
    let (head, rest) = match spec.split_once(':') {
        Some((h, r)) => (h, Some(r)),
        None => (spec, None),
    };
    let need =
        |what: &str| rest.ok_or_else(|| CliError::spec(head, format!("expected `{head}:{what}`")));
    match head {
        "bool" | "bool-complement" | "minus-top" | "cycle" | "path" | "complete" => {
            let token = need("n")?;
            let n: usize = token
                .parse()
                .map_err(|_| CliError::spec(token, "expected a nonnegative integer"))?;
            let wrap = |e: bcl_core::Error| CliError::spec(token, e.to_string());
            let g = match head {
                "bool" => boolean_graph(n).map_err(wrap)?,
                "bool-complement" => boolean_complement_graph(n).map_err(wrap)?,
                "minus-top" => boolean_minus_top(n).map_err(wrap)?.graph,
                _ => small_graph(head, n).map_err(|r| CliError::spec(token, r))?,
            };
            Ok(Object::Graph(g))
        }
        "complement" => Ok(Object::Graph(parse_graph(need("GRAPH")?)?.complement())),
        "ind-complex" => Ok(Object::Complex(
            parse_graph(need("GRAPH")?)?.independence_complex(),
        )),
        "clique-complex" => Ok(Object::Complex(
            parse_graph(need("GRAPH")?)?.clique_complex(),
        )),
        "dual" => Ok(Object::Complex(
            parse_complex(need("COMPLEX")?)?.alexander_dual()?,
        )),
        "skeleton" | "pure-skeleton" => {
            let body = need("s:COMPLEX")?;
            let (s_tok, inner) = body
                .split_once(':')
                .ok_or_else(|| CliError::spec(body, "expected `s:COMPLEX`"))?;
            let s: isize = s_tok
                .parse()
                .map_err(|_| CliError::spec(s_tok, "expected an integer dimension"))?;
            let c = parse_complex(inner)?;
            let out = if head == "skeleton" {
                c.skeleton(s)
            } else {
                c.pure_skeleton(s)
            };
            Ok(Object::Complex(
                out.map_err(|e| CliError::spec(s_tok, e.to_string()))?,
            ))
        }
        "blowup" | "expand" | "gblowup" => {
            let body = need("MULTIPLICITIES:GRAPH")?;
            let (json, inner) = split_json(body)?;
            let g = parse_graph(inner)?;
            let bad = |e: bcl_core::Error| CliError::spec(json, e.to_string());
            let out = if head == "gblowup" {
                let spec = generalized_spec(&g, json)?;
                generalized_blow_up(&g, &spec).map_err(bad)?
            } else {
                let spec = plain_spec(&g, json)?;
                if head == "blowup" {
                    blow_up(&g, &spec).map_err(bad)?
                } else {
                    expanding_graph(&g, &spec).map_err(bad)?
                }
            };
            Ok(Object::Graph(out))
        }
        "file" => {
            let path = need("PATH")?;
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.to_string(),
                source,
            })?;
            Object::from_json(&text)
        }
        _ => Err(CliError::spec(head, "unknown constructor")),
    }
}

pub fn parse_graph(spec: &str) -> Result<Graph, CliError> {
    match parse_object(spec)? {
        Object::Graph(g) => Ok(g),
        Object::Complex(_) => Err(CliError::spec(spec, "expected a graph, found a complex")),
    }
}

/// A complex; a graph is not silently converted.
pub fn parse_complex(spec: &str) -> Result<SimplicialComplex, CliError> {
    match parse_object(spec)? {
        Object::Complex(c) => Ok(c),
        Object::Graph(_) => Err(CliError::spec(
            spec,
            "expected a complex, found a graph (wrap it in `ind-complex:`)",
        )),
    }
}

fn small_graph(kind: &str, n: usize) -> Result<Graph, String> {
    let min = if kind == "cycle" { 3 } else { 1 };
    if n < min {
        return Err(format!("{kind} needs n >= {min}"));
    }
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let edges: Vec<(usize, usize)> = match kind {
        "cycle" => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        "path" => (1..n).map(|i| (i - 1, i)).collect(),
        _ => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect(),
    };
    Graph::from_index_edges(labels, edges).map_err(|e| e.to_string())
}

/// Splits a leading JSON value from `rest`, which must continue with `:`.
fn split_json(body: &str) -> Result<(&str, &str), CliError> {
    let mut stream = serde_json::Deserializer::from_str(body).into_iter::<serde_json::Value>();
    match stream.next() {
        Some(Ok(_)) => {}
        _ => return Err(CliError::spec(body, "expected JSON multiplicities")),
    }
    let end = stream.byte_offset();
    let (json, tail) = body.split_at(end);
    let inner = tail
        .strip_prefix(':')
        .ok_or_else(|| CliError::spec(body, "expected `:GRAPH` after the multiplicities"))?;
    Ok((json.trim(), inner))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PlainJson {
    Uniform(usize),
    Map(BTreeMap<String, usize>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GeneralizedJson {
    Uniform((usize, usize)),
    Map(BTreeMap<String, (usize, usize)>),
}

fn plain_spec(g: &Graph, json: &str) -> Result<BlowupSpec, CliError> {
    let parsed: PlainJson = serde_json::from_str(json)
        .map_err(|_| CliError::spec(json, "expected a size or a label-to-size map"))?;
    let map = match parsed {
        PlainJson::Uniform(k) => g.labels().iter().map(|l| (l.clone(), k)).collect(),
        PlainJson::Map(m) => m,
    };
    BlowupSpec::from_labels(g, &map).map_err(|e| CliError::spec(json, e.to_string()))
}

fn generalized_spec(g: &Graph, json: &str) -> Result<GeneralizedBlowupSpec, CliError> {
    let parsed: GeneralizedJson = serde_json::from_str(json)
        .map_err(|_| CliError::spec(json, "expected a [p1, p2] pair or a label-to-pair map"))?;
    let map = match parsed {
        GeneralizedJson::Uniform(p) => g.labels().iter().map(|l| (l.clone(), p)).collect(),
        GeneralizedJson::Map(m) => m,
    };
    GeneralizedBlowupSpec::from_labels(g, &map).map_err(|e| CliError::spec(json, e.to_string()))
}
