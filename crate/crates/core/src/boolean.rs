//! Boolean graphs and the vertex-replacement constructions built on them.
//!
//! `B_n` has one vertex per nonempty proper subset of `{1, …, n}`, two
//! subsets being adjacent exactly when they are disjoint. Vertices are
//! ordered by their bitmask, which is the pure lexicographic order with
//! `n > n-1 > … > 1`, and rendered with their members in descending order
//! (`{1,2,4}` is `421`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bitset::{VertexId, VertexSet};
use crate::error::Error;
use crate::graph::Graph;

/// Largest `n` accepted by the generators (`2^7 - 2 = 126` vertices).
pub const MAX_N: usize = 7;

/// A nonempty proper subset of `{1, …, n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetLabel {
    mask: u64,
    n: usize,
}

impl SubsetLabel {
    pub fn new(n: usize, mask: u64) -> Result<Self, Error> {
        let full = full_mask(n);
        if n == 0 || n > 63 || mask == 0 || mask == full || mask & !full != 0 {
            return Err(Error::BadSubsetLabel(format!("{mask:#b} in [{n}]")));
        }
        Ok(SubsetLabel { mask, n })
    }

    pub fn from_members(n: usize, members: &[usize]) -> Result<Self, Error> {
        let mut mask = 0u64;
        for &m in members {
            if m == 0 || m > n {
                return Err(Error::BadSubsetLabel(format!("{m} in [{n}]")));
            }
            mask |= 1 << (m - 1);
        }
        Self::new(n, mask)
    }

    /// Parses `421` or `{10,4,2,1}` as a subset of `[n]`.
    pub fn parse(n: usize, s: &str) -> Result<Self, Error> {
        let bad = || Error::BadSubsetLabel(s.into());
        let members: Vec<usize> = if let Some(inner) = s.strip_prefix('{') {
            let inner = inner.strip_suffix('}').ok_or_else(bad)?;
            inner
                .split(',')
                .map(|t| usize::from_str(t.trim()).map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            if n > 9 {
                return Err(bad());
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Self::from_members(n, &members).map_err(|_| bad())
    }

    pub fn mask(self) -> u64 {
        self.mask
    }

    pub fn ambient(self) -> usize {
        self.n
    }

    pub fn cardinality(self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Members in descending order.
    pub fn members(self) -> Vec<usize> {
        (1..=self.n)
            .rev()
            .filter(|i| self.mask >> (i - 1) & 1 == 1)
            .collect()
    }

    /// `[n] ∖ self`, again a vertex of `B_n`.
    pub fn complement(self) -> Self {
        SubsetLabel {
            mask: full_mask(self.n) & !self.mask,
            n: self.n,
        }
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.mask & other.mask == 0
    }
}

impl fmt::Display for SubsetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.members();
        if self.n <= 9 {
            for d in m {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = m.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize, min: usize) -> Result<(), Error> {
    if n < min || n > MAX_N {
        Err(Error::OutOfRange { n, min, max: MAX_N })
    } else {
        Ok(())
    }
}

/// Vertex labels of `B_n` in vertex order.
pub fn boolean_vertices(n: usize) -> Result<Vec<SubsetLabel>, Error> {
    check_n(n, 1)?;
    Ok((1..full_mask(n))
        .map(|mask| SubsetLabel { mask, n })
        .collect())
}

fn graph_on_subsets(subsets: &[SubsetLabel]) -> Graph {
    let m = subsets.len();
    let adj = subsets
        .iter()
        .map(|a| {
            VertexSet::from_indices(
                m,
                subsets
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.is_disjoint(**b))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    Graph::from_parts(subsets.iter().map(ToString::to_string).collect(), adj)
}

/// The Boolean graph `B_n`, `1 ≤ n ≤ MAX_N`.
pub fn boolean_graph(n: usize) -> Result<Graph, Error> {
    Ok(graph_on_subsets(&boolean_vertices(n)?))
}

pub fn boolean_complement_graph(n: usize) -> Result<Graph, Error> {
    Ok(boolean_graph(n)?.complement())
}

/// Recovers the subset named by a vertex of a Boolean graph.
pub fn subset_of(n: usize, g: &Graph, v: VertexId) -> Result<SubsetLabel, Error> {
    SubsetLabel::parse(n, g.label(v))
}

/// Per-vertex multiplicities `|T_v|` of a blow-up, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn uniform(g: &Graph, k: usize) -> Self {
        BlowupSpec {
            sizes: alloc::vec![k; g.order()],
        }
    }

    /// Builds a spec from a label-keyed map, which must cover every vertex.
    pub fn from_labels(g: &Graph, sizes: &BTreeMap<String, usize>) -> Result<Self, Error> {
        for k in sizes.keys() {
            if g.index_of(k).is_none() {
                return Err(Error::UnknownLabel(k.clone()));
            }
        }
        let sizes = g
            .labels()
            .iter()
            .map(|l| {
                sizes
                    .get(l)
                    .copied()
                    .ok_or_else(|| Error::MissingMultiplicity(l.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let spec = BlowupSpec { sizes };
        spec.validate(g)?;
        Ok(spec)
    }

    fn validate(&self, g: &Graph) -> Result<(), Error> {
        if self.sizes.len() != g.order() {
            let l = g
                .labels()
                .get(self.sizes.len())
                .cloned()
                .unwrap_or_else(|| format!("#{}", self.sizes.len()));
            return Err(Error::MissingMultiplicity(l));
        }
        if let Some(i) = self.sizes.iter().position(|&s| s == 0) {
            return Err(Error::ZeroMultiplicity(g.labels()[i].clone()));
        }
        Ok(())
    }
}

/// Split multiplicities `|S_1v| ≥ 1` and `|S_2v| ≥ 0` of a generalized
/// blow-up, indexed by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedBlowupSpec {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl GeneralizedBlowupSpec {
    pub fn from_labels(g: &Graph, parts: &BTreeMap<String, (usize, usize)>) -> Result<Self, Error> {
        for k in parts.keys() {
            if g.index_of(k).is_none() {
                return Err(Error::UnknownLabel(k.clone()));
            }
        }
        let mut part1 = Vec::with_capacity(g.order());
        let mut part2 = Vec::with_capacity(g.order());
        for l in g.labels() {
            let (a, b) = parts
                .get(l)
                .copied()
                .ok_or_else(|| Error::MissingMultiplicity(l.clone()))?;
            part1.push(a);
            part2.push(b);
        }
        let spec = GeneralizedBlowupSpec { part1, part2 };
        spec.validate(g)?;
        Ok(spec)
    }

    fn validate(&self, g: &Graph) -> Result<(), Error> {
        BlowupSpec {
            sizes: self.part1.clone(),
        }
        .validate(g)?;
        if self.part2.len() != g.order() {
            return Err(Error::MissingMultiplicity(
                g.labels()
                    .get(self.part2.len())
                    .cloned()
                    .unwrap_or_default(),
            ));
        }
        Ok(())
    }
}

fn replace_vertices(g: &Graph, part1: &[usize], part2: &[usize], cliques: bool) -> Graph {
    // (origin, is second part) per new vertex
    let mut origin: Vec<(usize, bool)> = Vec::new();
    let mut labels = Vec::new();
    for v in 0..g.order() {
        for k in 1..=part1[v] {
            origin.push((v, false));
            labels.push(format!("{}#{k}", g.labels()[v]));
        }
        for k in 1..=part2[v] {
            origin.push((v, true));
            labels.push(format!("{}~{k}", g.labels()[v]));
        }
    }
    let m = origin.len();
    let adj = origin
        .iter()
        .enumerate()
        .map(|(i, &(u, second_u))| {
            VertexSet::from_indices(
                m,
                origin.iter().enumerate().filter_map(|(j, &(v, second_v))| {
                    let hit = if u == v {
                        cliques && i != j
                    } else {
                        g.is_adjacent(VertexId(u), VertexId(v)) && !(second_u && second_v)
                    };
                    hit.then_some(j)
                }),
            )
        })
        .collect();
    Graph::from_parts(labels, adj)
}

/// Replaces each vertex `v` by an independent set `T_v`; `T_u` and `T_v` are
/// completely joined exactly when `uv` is an edge. Copies are labelled
/// `v#1, v#2, …`.
pub fn blow_up(g: &Graph, spec: &BlowupSpec) -> Result<Graph, Error> {
    spec.validate(g)?;
    let zeros = alloc::vec![0; g.order()];
    Ok(replace_vertices(g, &spec.sizes, &zeros, false))
}

/// As [`blow_up`] but each `T_v` becomes a clique.
pub fn expanding_graph(g: &Graph, spec: &BlowupSpec) -> Result<Graph, Error> {
    spec.validate(g)?;
    let zeros = alloc::vec![0; g.order()];
    Ok(replace_vertices(g, &spec.sizes, &zeros, true))
}

/// Replaces `v` by `S_v = S_1v ⊔ S_2v`. For an edge `uv`, `S_1u` is joined to
/// all of `S_v` and `S_1v` to all of `S_u`, while `S_2u` and `S_2v` stay
/// non-adjacent. Second-part copies are labelled `v~1, v~2, …`.
pub fn generalized_blow_up(g: &Graph, spec: &GeneralizedBlowupSpec) -> Result<Graph, Error> {
    spec.validate(g)?;
    Ok(replace_vertices(g, &spec.part1, &spec.part2, false))
}

/// `B_n ∖ {n} ∖ [n-1]` together with the pairing `A ↦ (A, A ∪ {n})` over the
/// vertices `A` of `B_{n-1}`.
#[derive(Clone, Debug)]
pub struct MinusTop {
    pub graph: Graph,
    /// One entry per vertex `A` of `B_{n-1}`, in its vertex order: the label
    /// of `A` and the ids of `A` and `A ∪ {n}` in `graph`.
    pub pairing: Vec<(String, VertexId, VertexId)>,
}

pub fn boolean_minus_top(n: usize) -> Result<MinusTop, Error> {
    check_n(n, 2)?;
    let top = SubsetLabel::from_members(n, &[n])?;
    let kept: Vec<SubsetLabel> = boolean_vertices(n)?
        .into_iter()
        .filter(|s| *s != top && *s != top.complement())
        .collect();
    let graph = graph_on_subsets(&kept);
    let find = |mask: u64| {
        VertexId(
            kept.iter()
                .position(|s| s.mask == mask)
                .expect("paired subset survives the deletion"),
        )
    };
    let pairing = if n >= 3 {
        boolean_vertices(n - 1)?
            .into_iter()
            .map(|a| (a.to_string(), find(a.mask), find(a.mask | top.mask)))
            .collect()
    } else {
        Vec::new()
    };
    Ok(MinusTop { graph, pairing })
}

/// Attaches `parts[i].0` to the `i`-th vertex of `base` by an edge to the
/// part's vertex `parts[i].1`. Part vertices are relabelled `x/label` where
/// `x` is the base vertex they hang from.
pub fn glue(base: &Graph, parts: &[(Graph, VertexId)]) -> Result<Graph, Error> {
    if parts.len() != base.order() {
        return Err(Error::PartCount {
            expected: base.order(),
            got: parts.len(),
        });
    }
    let mut out = base.clone();
    for (i, (part, attach)) in parts.iter().enumerate() {
        if part.order() < 2 {
            return Err(Error::PartTooSmall(i));
        }
        if attach.0 >= part.order() {
            return Err(Error::InvalidVertex {
                index: attach.0,
                size: part.order(),
            });
        }
        let prefix = &base.labels()[i];
        let renamed = Graph::from_index_edges(
            part.labels()
                .iter()
                .map(|l| format!("{prefix}/{l}"))
                .collect(),
            part.edges().into_iter().map(|(u, v)| (u.0, v.0)),
        )?;
        let off = out.order();
        out = out.disjoint_union(&renamed)?;
        out.link(VertexId(i), VertexId(off + attach.0));
    }
    Ok(out)
}
