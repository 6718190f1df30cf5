use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::linalg::{independent_rows_rational, SparseRow};
use crate::bitset::{VertexId, VertexSet};
use crate::boolean::{blow_up, generalized_blow_up, BlowupSpec, GeneralizedBlowupSpec};
use crate::error::Error;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnmixedReport {
    pub is_unmixed: bool,
    /// Cardinality of minimal vertex covers mapped to how many have it.
    pub cover_sizes: BTreeMap<usize, usize>,
    /// Size shared by all maximal independent sets, when unmixed.
    pub independent_size: Option<usize>,
    /// A smallest and a largest minimal vertex cover, when mixed.
    pub witness: Option<(VertexSet, VertexSet)>,
}

/// Unmixedness via maximal independent sets, whose complements are the
/// minimal vertex covers.
pub fn is_unmixed(g: &Graph) -> UnmixedReport {
    let all = g.vertices();
    let covers: Vec<VertexSet> = g
        .maximal_independent_sets()
        .iter()
        .map(|s| &all - s)
        .collect();
    let mut cover_sizes = BTreeMap::new();
    for c in &covers {
        *cover_sizes.entry(c.len()).or_insert(0) += 1;
    }
    let is_unmixed = cover_sizes.len() <= 1;
    let independent_size = if is_unmixed {
        Some(g.order() - cover_sizes.keys().next().copied().unwrap_or(0))
    } else {
        None
    };
    let witness = (!is_unmixed).then(|| {
        let lo = covers.iter().min_by_key(|c| c.len()).expect("mixed");
        let hi = covers.iter().max_by_key(|c| c.len()).expect("mixed");
        (lo.clone(), hi.clone())
    });
    UnmixedReport {
        is_unmixed,
        cover_sizes,
        independent_size,
        witness,
    }
}

/// `Σ_{v ∈ lhs} x_v = Σ_{v ∈ rhs} x_v` over the blow-up multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCondition {
    pub lhs: Vec<VertexId>,
    pub rhs: Vec<VertexId>,
}

impl LinearCondition {
    /// Coefficients by vertex: `+1` on the left, `-1` on the right.
    pub fn coefficients(&self) -> Vec<(VertexId, i64)> {
        let mut out: Vec<(VertexId, i64)> = self
            .lhs
            .iter()
            .map(|&v| (v, 1))
            .chain(self.rhs.iter().map(|&v| (v, -1)))
            .collect();
        out.sort();
        out
    }

    pub fn holds(&self, sizes: &[usize]) -> bool {
        let sum = |s: &[VertexId]| s.iter().map(|v| sizes[v.0]).sum::<usize>();
        sum(&self.lhs) == sum(&self.rhs)
    }

    /// `x_1 + x_23 = x_2 + x_13`, symbols sorted by name on each side.
    pub fn render(&self, g: &Graph) -> String {
        let side = |s: &[VertexId]| {
            let mut names: Vec<&str> = s.iter().map(|&v| g.label(v)).collect();
            names.sort();
            names
                .iter()
                .map(|n| format!("x_{n}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        format!("{} = {}", side(&self.lhs), side(&self.rhs))
    }
}

/// The equations `Σ_{S_1} x = Σ_{S_k} x` for the maximal independent sets
/// `S_1 < S_2 < …` of `g`, with shared symbols cancelled and conditions
/// implied by earlier ones dropped. A blow-up of `g` is unmixed exactly
/// when its multiplicities satisfy all of them.
pub fn blowup_unmixed_conditions(g: &Graph) -> Vec<LinearCondition> {
    let mis = g.maximal_independent_sets();
    let Some(first) = mis.first() else {
        return Vec::new();
    };
    let conds: Vec<LinearCondition> = mis[1..]
        .iter()
        .map(|s| LinearCondition {
            lhs: (first - s).iter().collect(),
            rhs: (s - first).iter().collect(),
        })
        .collect();
    let rows: Vec<SparseRow> = conds
        .iter()
        .map(|c| {
            c.coefficients()
                .into_iter()
                .map(|(v, k)| (v.0, k))
                .collect()
        })
        .collect();
    independent_rows_rational(&rows)
        .into_iter()
        .map(|i| conds[i].clone())
        .collect()
}

pub fn conditions_hold(conds: &[LinearCondition], sizes: &[usize]) -> bool {
    conds.iter().all(|c| c.holds(sizes))
}

#[derive(Clone, Copy, Debug)]
pub enum BlowupKind<'a> {
    Plain(&'a BlowupSpec),
    Generalized(&'a GeneralizedBlowupSpec),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupCheck {
    /// Unmixedness of the constructed graph.
    pub report: UnmixedReport,
    /// What the conditions of `g` predict; plain blow-ups only.
    pub predicted: Option<bool>,
}

impl BlowupCheck {
    /// Whether the direct check and the prediction agree (vacuous when
    /// there is no prediction).
    pub fn agrees(&self) -> bool {
        self.predicted.is_none_or(|p| p == self.report.is_unmixed)
    }
}

/// Builds the blow-up and tests its unmixedness directly.
pub fn check_blowup_unmixed(g: &Graph, kind: BlowupKind<'_>) -> Result<BlowupCheck, Error> {
    match kind {
        BlowupKind::Plain(spec) => {
            let h = blow_up(g, spec)?;
            let conds = blowup_unmixed_conditions(g);
            Ok(BlowupCheck {
                report: is_unmixed(&h),
                predicted: Some(conditions_hold(&conds, &spec.sizes)),
            })
        }
        BlowupKind::Generalized(spec) => Ok(BlowupCheck {
            report: is_unmixed(&generalized_blow_up(g, spec)?),
            predicted: None,
        }),
    }
}
