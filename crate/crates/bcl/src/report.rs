//! The regression report behind `bcl reproduce`: one row per claim about
//! Boolean graphs, each recomputed from scratch.

use std::time::Instant;

use bcl_core::algebra::linalg::{rank_rational, SparseRow};
use bcl_core::algebra::{
    blowup_unmixed_conditions, check_blowup_unmixed, find_nonpure_induced_subcomplex,
    is_cohen_macaulay, is_matroid, is_unmixed, BlowupKind, CmOutcome, Field, MatroidOutcome,
};
use bcl_core::boolean::{
    blow_up, boolean_complement_graph, boolean_graph, boolean_minus_top, generalized_blow_up,
    BlowupSpec, GeneralizedBlowupSpec,
};
use bcl_core::decompose::{
    find_shelling_obstruction, is_shellable_bruteforce, is_shelling_order, is_vertex_decomposable,
    is_vertex_decomposable_graph, layered_schedule, replay_schedule, verify_certificate, Family,
    ReplayError, SearchConfig, ShellOutcome, VdOutcome,
};
use bcl_core::{Graph, VertexId, VertexSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::check::Budgets;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

#[derive(Clone, Debug, Serialize)]
pub struct RowResult {
    pub key: String,
    pub claim: &'static str,
    pub n: usize,
    pub status: Status,
    pub detail: String,
    pub millis: f64,
}

type RowFn = Box<dyn Fn(&Budgets) -> (Status, String) + Send + Sync>;

struct Row {
    key: String,
    claim: &'static str,
    n: usize,
    run: RowFn,
}

fn row(
    key: impl Into<String>,
    claim: &'static str,
    n: usize,
    run: impl Fn(&Budgets) -> (Status, String) + Send + Sync + 'static,
) -> Row {
    Row {
        key: key.into(),
        claim,
        n,
        run: Box::new(run),
    }
}

fn pass_if(ok: bool, detail: impl Into<String>) -> (Status, String) {
    (if ok { Status::Pass } else { Status::Fail }, detail.into())
}

fn config(b: &Budgets) -> SearchConfig {
    SearchConfig {
        memo_cap: b.memo_cap,
        ..SearchConfig::default()
    }
}

fn vd_row(g: &Graph, b: &Budgets) -> (Status, String) {
    match is_vertex_decomposable_graph(g, &config(b)) {
        VdOutcome::Decomposable(cert) => {
            let ok = verify_certificate(&g.independence_complex(), &cert).is_ok();
            pass_if(
                ok,
                format!("certificate verified, {} nodes", cert.node_count()),
            )
        }
        VdOutcome::NotDecomposable(_) => (Status::Fail, "not vertex decomposable".into()),
        VdOutcome::Undecided { memo_entries } => (
            Status::Undecided,
            format!("memo cap reached at {memo_entries} entries"),
        ),
    }
}

fn replay_row(g: &Graph, n: usize, family: Family, b: &Budgets) -> (Status, String) {
    let sched = layered_schedule(n, family).expect("n in range");
    match replay_schedule(g, &sched, &config(b)) {
        Ok(cert) => {
            let ok = verify_certificate(&g.independence_complex(), &cert).is_ok();
            pass_if(
                ok,
                format!("schedule replayed, {} nodes", cert.node_count()),
            )
        }
        Err(ReplayError::Undecided { memo_entries }) => (
            Status::Undecided,
            format!("memo cap reached at {memo_entries} entries"),
        ),
        Err(e) => (Status::Fail, e.to_string()),
    }
}

fn cm_row(g: &Graph, b: &Budgets) -> (Status, String) {
    let c = g.independence_complex();
    for field in [Field::Gf2, Field::Rational] {
        match is_cohen_macaulay(&c, field, b.face_cap) {
            CmOutcome::CohenMacaulay => {}
            CmOutcome::Fails { face, .. } => {
                return (
                    Status::Fail,
                    format!("{field:?}: link of a {}-face fails", face.len()),
                )
            }
            CmOutcome::Undecided { face_cap } => {
                return (Status::Undecided, format!("more than {face_cap} faces"))
            }
        }
    }
    (Status::Pass, "Reisner scan clean over GF(2) and Q".into())
}

fn rows() -> Vec<Row> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push(row(
            format!("unmixed/n{n}"),
            "B_n is unmixed with independent sets of size 2^(n-1)-1",
            n,
            move |_| {
                let r = is_unmixed(&boolean_graph(n).expect("n in range"));
                let want = (1usize << (n - 1)) - 1;
                pass_if(
                    r.is_unmixed && r.independent_size == Some(want),
                    format!("size {:?}", r.independent_size),
                )
            },
        ));
    }
    out.push(row(
        "mis-census/n4",
        "B_4 has exactly the maximal independent sets found by a subset scan",
        4,
        |_| {
            let g = boolean_graph(4).expect("n in range");
            let found = g.maximal_independent_sets().len();
            let scanned = (0u32..1 << g.order())
                .map(|m| VertexSet::from_mask(g.order(), m as u128))
                .filter(|s| {
                    g.is_independent(s)
                        && g.vertex_ids()
                            .all(|v| s.contains(v) || !g.is_independent(&s.with(v)))
                })
                .count();
            pass_if(found == scanned, format!("{found} sets"))
        },
    ));
    for n in 2..=4 {
        out.push(row(
            format!("vd/n{n}"),
            "B_n is vertex decomposable (exhaustive checker)",
            n,
            move |b| vd_row(&boolean_graph(n).expect("n in range"), b),
        ));
    }
    for n in 5..=6 {
        out.push(row(
            format!("vd-schedule/n{n}"),
            "B_n is vertex decomposable (layered schedule)",
            n,
            move |b| {
                replay_row(
                    &boolean_graph(n).expect("n in range"),
                    n,
                    Family::Boolean,
                    b,
                )
            },
        ));
    }
    for n in 3..=4 {
        out.push(row(
            format!("cm/n{n}"),
            "Ind(B_n) is Cohen-Macaulay",
            n,
            move |b| cm_row(&boolean_graph(n).expect("n in range"), b),
        ));
    }
    for n in 3..=4 {
        out.push(row(
            format!("complement-vd/n{n}"),
            "the complement of B_n is vertex decomposable (exhaustive checker)",
            n,
            move |b| vd_row(&boolean_complement_graph(n).expect("n in range"), b),
        ));
    }
    for n in 5..=6 {
        out.push(row(
            format!("complement-vd-schedule/n{n}"),
            "the complement of B_n is vertex decomposable (layered schedule)",
            n,
            move |b| {
                let g = boolean_complement_graph(n).expect("n in range");
                replay_row(&g, n, Family::Complement, b)
            },
        ));
    }
    for n in 3..=4 {
        out.push(row(
            format!("skeletons/n{n}"),
            "every skeleton of Ind(B_n) is vertex decomposable",
            n,
            move |b| {
                let c = boolean_graph(n).expect("n in range").independence_complex();
                for s in -1..=c.dim() {
                    let sk = c.skeleton(s).expect("s in range");
                    match is_vertex_decomposable(&sk, &config(b)) {
                        VdOutcome::Decomposable(_) => {}
                        VdOutcome::NotDecomposable(_) => {
                            return (Status::Fail, format!("skeleton {s} fails"))
                        }
                        VdOutcome::Undecided { .. } => {
                            return (Status::Undecided, format!("skeleton {s} over budget"))
                        }
                    }
                }
                (Status::Pass, format!("{} skeletons", c.dim() + 2))
            },
        ));
    }
    out.push(row(
        "pure-skeletons/n3",
        "every pure skeleton of Ind(B_3) is shellable",
        3,
        |b| {
            let c = boolean_graph(3).expect("n in range").independence_complex();
            for s in -1..=c.dim() {
                let sk = c.pure_skeleton(s).expect("s in range");
                let ok = match is_shellable_bruteforce(&sk, b.facet_cap) {
                    ShellOutcome::Shellable(order) => is_shelling_order(&sk, &order.0),
                    ShellOutcome::NotShellable => false,
                    ShellOutcome::Undecided { .. } => {
                        is_vertex_decomposable(&sk, &config(b)).is_decomposable()
                    }
                };
                if !ok {
                    return (Status::Fail, format!("pure skeleton {s} fails"));
                }
            }
            (Status::Pass, format!("{} pure skeletons", c.dim() + 2))
        },
    ));
    out.push(row(
        "dual-shellable/n3",
        "at n = 3 both Alexander duals are shellable",
        3,
        |b| {
            for g in [boolean_graph(3), boolean_complement_graph(3)] {
                let d = g
                    .expect("n in range")
                    .independence_complex()
                    .alexander_dual()
                    .expect("not a simplex");
                let shellable = matches!(
                    is_shellable_bruteforce(&d, b.facet_cap),
                    ShellOutcome::Shellable(ref o) if is_shelling_order(&d, &o.0)
                );
                if !shellable || find_shelling_obstruction(&d) != Ok(None) {
                    return (Status::Fail, "dual not shellable".into());
                }
            }
            (Status::Pass, "shelling orders found".into())
        },
    ));
    for n in 4..=5 {
        out.push(row(
            format!("dual-obstruction/n{n}"),
            "the Alexander duals are not shellable for n >= 4",
            n,
            move |_| {
                for g in [boolean_graph(n), boolean_complement_graph(n)] {
                    let d = g
                        .expect("n in range")
                        .independence_complex()
                        .alexander_dual()
                        .expect("not a simplex");
                    if !matches!(find_shelling_obstruction(&d), Ok(Some(_))) {
                        return (Status::Fail, "no obstructing pair".into());
                    }
                }
                (Status::Pass, "obstructing facet pairs found".into())
            },
        ));
    }
    out.push(row(
        "non-matroid/n3",
        "Ind(B_3) restricted to {1,2,12,13} is <{1,12,13},{2,12}>, so not a matroid",
        3,
        |b| {
            let g = boolean_graph(3).expect("n in range");
            let c = g.independence_complex();
            let id = |l: &str| g.index_of(l).expect("label of B_3").0;
            let w = VertexSet::from_indices(g.order(), ["1", "2", "21", "31"].map(id));
            let sub = c.induced(&w);
            let mut want = vec![
                VertexSet::from_indices(g.order(), ["1", "21", "31"].map(id)),
                VertexSet::from_indices(g.order(), ["2", "21"].map(id)),
            ];
            want.sort();
            let exchange = matches!(
                is_matroid(&c, b.face_cap),
                MatroidOutcome::ExchangeFails { .. }
            );
            let nonpure = matches!(find_nonpure_induced_subcomplex(&c, 20), Some(Some(_)));
            pass_if(
                sub.facets() == want.as_slice() && !sub.is_pure() && exchange && nonpure,
                sub.describe(),
            )
        },
    ));
    for n in 2..=4 {
        out.push(row(
            format!("blowup-conditions/n{n}"),
            "blow-ups of B_n are unmixed exactly when x_A = x_([n]-A)",
            n,
            move |_| {
                let g = boolean_graph(n).expect("n in range");
                let conds: Vec<SparseRow> = blowup_unmixed_conditions(&g)
                    .iter()
                    .map(|c| {
                        c.coefficients()
                            .into_iter()
                            .map(|(v, k)| (v.0, k))
                            .collect()
                    })
                    .collect();
                // Vertex ids follow the subset bitmasks: id = mask - 1.
                let full = (1usize << n) - 1;
                let pairs: Vec<SparseRow> = (1..full)
                    .filter(|&m| m < full ^ m)
                    .map(|m| vec![(m - 1, 1), ((full ^ m) - 1, -1)])
                    .collect();
                let both: Vec<SparseRow> = conds.iter().chain(&pairs).cloned().collect();
                let (rc, rp, rb) = (
                    rank_rational(&conds),
                    rank_rational(&pairs),
                    rank_rational(&both),
                );
                pass_if(
                    rc == rp && rb == rp,
                    format!("{} conditions, rank {rc}", conds.len()),
                )
            },
        ));
    }
    for n in 3..=5 {
        out.push(row(
            format!("minus-top/n{n}"),
            "B_n minus n and [n-1] is a generalized blow-up of B_(n-1)",
            n,
            move |_| {
                let mt = boolean_minus_top(n).expect("n in range");
                let base = boolean_graph(n - 1).expect("n in range");
                let units = vec![1; base.order()];
                let gb = generalized_blow_up(
                    &base,
                    &GeneralizedBlowupSpec {
                        part1: units.clone(),
                        part2: units,
                    },
                )
                .expect("unit parts");
                let mut map = vec![VertexId(0); gb.order()];
                for (i, (_, a, a_top)) in mt.pairing.iter().enumerate() {
                    map[2 * i] = *a;
                    map[2 * i + 1] = *a_top;
                }
                let same = gb.order() == mt.graph.order()
                    && gb.vertex_ids().all(|u| {
                        gb.vertex_ids().all(|v| {
                            gb.is_adjacent(u, v) == mt.graph.is_adjacent(map[u.0], map[v.0])
                        })
                    });
                pass_if(same, format!("{} vertices", gb.order()))
            },
        ));
    }
    out.push(row(
        "generalized-blowup/n2",
        "the unit generalized blow-up of B_2 is unmixed and K_{2,3} is not",
        2,
        |_| {
            let b2 = boolean_graph(2).expect("n in range");
            let units = GeneralizedBlowupSpec {
                part1: vec![1, 1],
                part2: vec![1, 1],
            };
            let gen = check_blowup_unmixed(&b2, BlowupKind::Generalized(&units))
                .expect("valid spec")
                .report
                .is_unmixed;
            let k23 = blow_up(&b2, &BlowupSpec { sizes: vec![2, 3] }).expect("valid spec");
            pass_if(gen && !is_unmixed(&k23).is_unmixed, "")
        },
    ));
    out
}

/// Runs every row with `n <= max_n`, in parallel, reporting in row order.
pub fn reproduce(max_n: usize, budgets: &Budgets) -> Vec<RowResult> {
    let selected: Vec<Row> = rows().into_iter().filter(|r| r.n <= max_n).collect();
    selected
        .par_iter()
        .map(|r| {
            let start = Instant::now();
            let (status, detail) = (r.run)(budgets);
            RowResult {
                key: r.key.clone(),
                claim: r.claim,
                n: r.n,
                status,
                detail,
                millis: start.elapsed().as_secs_f64() * 1e3,
            }
        })
        .collect()
}
