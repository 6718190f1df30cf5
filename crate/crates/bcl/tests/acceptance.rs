//! Acceptance run: one PASS/FAIL line per criterion, each backed by the
//! reference implementations in `oracle`.

mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use bcl_core::algebra::{
    blowup_unmixed_conditions, check_blowup_unmixed, conditions_hold, is_cohen_macaulay,
    is_matroid, is_unmixed, BlowupKind, CmOutcome, Field, MatroidOutcome, DEFAULT_FACE_CAP,
};
use bcl_core::boolean::{
    boolean_complement_graph, boolean_graph, boolean_minus_top, generalized_blow_up, BlowupSpec,
    GeneralizedBlowupSpec,
};
use bcl_core::decompose::{
    check_join_property, find_shelling_obstruction, is_condition_beta, is_shellable_bruteforce,
    is_vertex_decomposable, is_vertex_decomposable_graph, is_weak_shedding_vertex_graph,
    layered_schedule, replay_schedule, Family, SearchConfig, ShellOutcome, VdOutcome,
};
use bcl_core::{Graph, SimplicialComplex, VertexId, VertexSet};
use oracle::{bit, maximal, members, subset_of_label, MaskComplex, MaskGraph};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn boolean(n: usize) -> Graph {
    boolean_graph(n).expect("n in range")
}

fn complement(n: usize) -> Graph {
    boolean_complement_graph(n).expect("n in range")
}

/// The independence complex of `g` computed by the oracle from subset labels.
fn oracle_ind(g: &Graph, complement: bool) -> MaskComplex {
    MaskComplex::new(MaskGraph::boolean_from_labels(g, complement).maximal_independent_sets())
}

fn certified_vd(c: &SimplicialComplex, oracle: &MaskComplex, what: &str) -> Result<usize, String> {
    ensure(MaskComplex::of(c) == *oracle, || {
        format!("{what}: facets differ from the oracle")
    })?;
    match is_vertex_decomposable(c, &SearchConfig::default()) {
        VdOutcome::Decomposable(cert) => {
            oracle
                .check_certificate(&cert)
                .map_err(|e| format!("{what}: certificate rejected: {e}"))?;
            Ok(cert.node_count())
        }
        other => Err(format!("{what}: verdict {:?}", other.verdict())),
    }
}

fn replayed_vd(g: &Graph, n: usize, family: Family, oracle: &MaskComplex) -> Result<usize, String> {
    let sched = layered_schedule(n, family).map_err(|e| e.to_string())?;
    let cert = replay_schedule(g, &sched, &SearchConfig::default())
        .map_err(|e| format!("n = {n}: replay failed: {e}"))?;
    oracle
        .check_certificate(&cert)
        .map_err(|e| format!("n = {n}: replayed certificate rejected: {e}"))?;
    Ok(cert.node_count())
}

/// Positions in `oracle` of the library facets at `idx`.
fn oracle_positions(c: &SimplicialComplex, oracle: &MaskComplex, idx: &[usize]) -> Vec<usize> {
    idx.iter()
        .map(|&i| {
            let f: u64 = c.facets()[i].iter().map(|v| bit(v.0)).sum();
            oracle
                .facets
                .iter()
                .position(|&g| g == f)
                .unwrap_or(usize::MAX)
        })
        .collect()
}

fn unmixedness() -> Outcome {
    for n in 2..=6 {
        let g = boolean(n);
        let r = is_unmixed(&g);
        let want = (1usize << (n - 1)) - 1;
        let sets = MaskGraph::boolean_from_labels(&g, false).maximal_independent_sets();
        let sizes: Vec<u32> = sets.iter().map(|s| s.count_ones()).collect();
        ensure(sizes.iter().all(|&k| k as usize == want), || {
            format!("n = {n}: oracle finds sizes other than {want}")
        })?;
        ensure(r.is_unmixed && r.independent_size == Some(want), || {
            format!("n = {n}: library reports {:?}", r.independent_size)
        })?;
        ensure(g.maximal_independent_sets().len() == sets.len(), || {
            format!("n = {n}: library and oracle disagree on the number of sets")
        })?;
    }
    Ok("sizes 1, 3, 7, 15, 31".into())
}

fn census() -> Outcome {
    let g = boolean(4);
    let masks: Vec<u64> = g.labels().iter().map(|l| subset_of_label(l)).collect();
    let k = masks.len();
    let independent =
        |s: u64| members(s).all(|i| members(s).all(|j| i == j || masks[i] & masks[j] != 0));
    let mut scanned = Vec::new();
    for s in 0..(1u64 << k) {
        if independent(s) && (0..k).all(|v| s & bit(v) != 0 || !independent(s | bit(v))) {
            scanned.push(s);
        }
    }
    let mut found: Vec<u64> = g
        .maximal_independent_sets()
        .iter()
        .map(|s| s.iter().map(|v| bit(v.0)).sum())
        .collect();
    found.sort();
    ensure(found == scanned, || {
        format!(
            "{} from the library, {} from the scan",
            found.len(),
            scanned.len()
        )
    })?;
    Ok(format!(
        "{} maximal independent sets over 2^{k} subsets",
        scanned.len()
    ))
}

fn vd_family(complementary: bool, family: Family) -> Outcome {
    let make = if complementary { complement } else { boolean };
    let first = if complementary { 3 } else { 2 };
    let mut nodes = Vec::new();
    for n in first..=4 {
        let g = make(n);
        let oracle = oracle_ind(&g, complementary);
        nodes.push(certified_vd(
            &g.independence_complex(),
            &oracle,
            &format!("n = {n}"),
        )?);
        ensure(
            is_vertex_decomposable_graph(&g, &SearchConfig::default()).is_decomposable(),
            || format!("n = {n}: graph-level checker disagrees"),
        )?;
    }
    let g = make(5);
    let replayed = replayed_vd(&g, 5, family, &oracle_ind(&g, complementary))?;
    Ok(format!(
        "certificate nodes {nodes:?}, n = 5 replay {replayed} nodes"
    ))
}

fn cohen_macaulay() -> Outcome {
    for n in 3..=4 {
        let g = boolean(n);
        let c = g.independence_complex();
        // Betti numbers over Q never exceed those over GF(2), so a clean
        // GF(2) scan covers both fields.
        ensure(oracle_ind(&g, false).cohen_macaulay_gf2(), || {
            format!("n = {n}: oracle finds a link with homology over GF(2)")
        })?;
        for field in [Field::Gf2, Field::Rational] {
            let out = is_cohen_macaulay(&c, field, DEFAULT_FACE_CAP);
            ensure(out == CmOutcome::CohenMacaulay, || {
                format!("n = {n}, {field:?}: {out:?}")
            })?;
        }
    }
    Ok("Ind(B_3), Ind(B_4) over GF(2) and Q".into())
}

fn dual_of(g: &Graph, complementary: bool) -> (SimplicialComplex, MaskComplex) {
    let c = g.independence_complex();
    let lib = c.alexander_dual().expect("not a simplex");
    let ground = bit(g.order()) - 1;
    let oracle = oracle_ind(g, complementary).alexander_dual(ground);
    (lib, oracle)
}

fn non_shellability() -> Outcome {
    let mut facets = Vec::new();
    for (g, comp) in [(boolean(4), false), (complement(4), true)] {
        let (d, oracle) = dual_of(&g, comp);
        ensure(MaskComplex::of(&d) == oracle, || {
            "n = 4: dual facets differ".into()
        })?;
        let w = find_shelling_obstruction(&d)
            .map_err(|e| e.to_string())?
            .ok_or("n = 4: no obstruction found")?;
        let [a, b] = oracle_positions(&d, &oracle, &[w.facet_a, w.facet_b])[..] else {
            unreachable!()
        };
        ensure(!oracle.supports(a, b) && !oracle.supports(b, a), || {
            format!("n = 4: pair ({}, {}) is supported", w.facet_a, w.facet_b)
        })?;
        facets.push(d.facets().len());
    }
    ensure(boolean(3).size() == 6, || {
        "B_3 has other than 6 edges".into()
    })?;
    for (g, comp) in [(boolean(3), false), (complement(3), true)] {
        let (d, oracle) = dual_of(&g, comp);
        ensure(MaskComplex::of(&d) == oracle, || {
            "n = 3: dual facets differ".into()
        })?;
        ensure(d.facets().len() == g.size(), || {
            format!("n = 3: {} facets", d.facets().len())
        })?;
        ensure(find_shelling_obstruction(&d) == Ok(None), || {
            "n = 3: unexpected obstruction".into()
        })?;
        match is_shellable_bruteforce(&d, 12) {
            ShellOutcome::Shellable(order) => ensure(
                oracle.is_shelling_order(&oracle_positions(&d, &oracle, &order.0)),
                || format!("n = 3: order {:?} is not a shelling", order.0),
            )?,
            other => return Err(format!("n = 3: {other:?}")),
        }
    }
    Ok(format!(
        "obstructions at n = 4 ({facets:?} facets), shellings at n = 3"
    ))
}

fn skeletons() -> Outcome {
    let mut count = 0;
    for n in 3..=4 {
        let g = boolean(n);
        let c = g.independence_complex();
        let oracle = oracle_ind(&g, false);
        for s in -1..=c.dim() {
            let sk = c.skeleton(s).map_err(|e| e.to_string())?;
            certified_vd(&sk, &oracle.skeleton(s), &format!("n = {n}, skeleton {s}"))?;
            count += 1;
        }
    }
    let g = boolean(3);
    let c = g.independence_complex();
    let oracle = oracle_ind(&g, false);
    for s in -1..=c.dim() {
        let sk = c.pure_skeleton(s).map_err(|e| e.to_string())?;
        let want = oracle.pure_skeleton(s);
        ensure(MaskComplex::of(&sk) == want, || {
            format!("pure skeleton {s} differs")
        })?;
        if sk.facets().len() <= 12 {
            match is_shellable_bruteforce(&sk, 12) {
                ShellOutcome::Shellable(order) => ensure(
                    want.is_shelling_order(&oracle_positions(&sk, &want, &order.0)),
                    || format!("pure skeleton {s}: invalid order"),
                )?,
                other => return Err(format!("pure skeleton {s}: {other:?}")),
            }
        } else {
            certified_vd(&sk, &want, &format!("pure skeleton {s}"))?;
        }
        count += 1;
    }
    Ok(format!("{count} skeletons"))
}

fn non_matroid() -> Outcome {
    let g = boolean(3);
    let c = g.independence_complex();
    let id = |l: &str| g.index_of(l).expect("label of B_3").0;
    // The subsets 1, 2, 12, 13 carry the labels 1, 2, 21, 31.
    let w: Vec<usize> = ["1", "2", "21", "31"].map(id).to_vec();
    let sub = c.induced(&VertexSet::from_indices(g.order(), w.iter().copied()));
    let oracle_graph = MaskGraph::boolean_from_labels(&g, false);
    let w_mask: u64 = w.iter().map(|&v| bit(v)).sum();
    let independent = |s: u64| members(s).all(|v| oracle_graph.adj[v] & s == 0);
    let want = maximal(oracle::subsets(w_mask).filter(|&s| independent(s)));
    let expected: Vec<u64> = {
        let mut e = vec![
            bit(id("1")) | bit(id("21")) | bit(id("31")),
            bit(id("2")) | bit(id("21")),
        ];
        e.sort();
        e
    };
    ensure(want == expected, || {
        "oracle facets differ from <{1,12,13},{2,12}>".into()
    })?;
    ensure(MaskComplex::of(&sub).facets == expected, || {
        format!("library facets {}", sub.describe())
    })?;
    ensure(!sub.is_pure(), || "induced complex flagged pure".into())?;
    match is_matroid(&c, DEFAULT_FACE_CAP) {
        MatroidOutcome::ExchangeFails { smaller, larger } => {
            let s: u64 = smaller.iter().map(|v| bit(v.0)).sum();
            let l: u64 = larger.iter().map(|v| bit(v.0)).sum();
            ensure(independent(s) && independent(l), || {
                "witness sets are not faces".into()
            })?;
            ensure(s.count_ones() < l.count_ones(), || {
                "witness sizes not increasing".into()
            })?;
            ensure(members(l & !s).all(|x| !independent(s | bit(x))), || {
                "witness can be extended".into()
            })?;
        }
        other => return Err(format!("is_matroid: {other:?}")),
    }
    Ok("W = {1,2,12,13} gives <{1,12,13},{2,12}>; exchange witness valid".into())
}

fn condition_rows(g: &Graph) -> Vec<Vec<i128>> {
    blowup_unmixed_conditions(g)
        .iter()
        .map(|c| {
            let mut row = vec![0i128; g.order()];
            for (v, k) in c.coefficients() {
                row[v.0] += k as i128;
            }
            row
        })
        .collect()
}

/// Rows `x_A - x_B` for the label pairs, over the vertices of `g`.
fn equality_rows(g: &Graph, pairs: &[(u64, u64)]) -> Vec<Vec<i128>> {
    let masks: Vec<u64> = g.labels().iter().map(|l| subset_of_label(l)).collect();
    let pos = |m: u64| {
        masks
            .iter()
            .position(|&x| x == m)
            .expect("subset is a vertex")
    };
    pairs
        .iter()
        .map(|&(a, b)| {
            let mut row = vec![0i128; g.order()];
            row[pos(a)] += 1;
            row[pos(b)] -= 1;
            row
        })
        .collect()
}

fn same_solutions(a: &[Vec<i128>], b: &[Vec<i128>]) -> bool {
    let both: Vec<Vec<i128>> = a.iter().chain(b).cloned().collect();
    let r = oracle::rank_rational(a);
    r == oracle::rank_rational(b) && r == oracle::rank_rational(&both)
}

/// Unmixedness of the blow-up, built and tested by the oracle.
fn oracle_blowup_unmixed(g: &Graph, sizes: &[usize]) -> bool {
    let base = MaskGraph::boolean_from_labels(g, false);
    let origin: Vec<usize> = (0..g.order())
        .flat_map(|v| std::iter::repeat_n(v, sizes[v]))
        .collect();
    let h = MaskGraph::from_relation(origin.len(), |i, j| {
        base.adj[origin[i]] & bit(origin[j]) != 0
    });
    let sizes: Vec<u32> = h
        .maximal_independent_sets()
        .iter()
        .map(|s| s.count_ones())
        .collect();
    sizes.windows(2).all(|w| w[0] == w[1])
}

fn blowup_conditions() -> Outcome {
    let b2 = boolean(2);
    let c2 = condition_rows(&b2);
    ensure(
        c2.len() == 1 && same_solutions(&c2, &equality_rows(&b2, &[(0b01, 0b10)])),
        || "B_2 conditions are not the single equation x_1 = x_2".into(),
    )?;
    for n in [3usize, 4] {
        let g = boolean(n);
        let full = bit(n) - 1;
        let pairs: Vec<(u64, u64)> = (1..full)
            .filter(|&m| m < full ^ m)
            .map(|m| (m, full ^ m))
            .collect();
        ensure(pairs.len() == (1 << (n - 1)) - 1, || "pair count".into())?;
        ensure(
            same_solutions(&condition_rows(&g), &equality_rows(&g, &pairs)),
            || format!("B_{n} conditions differ from x_A = x_(complement of A)"),
        )?;
    }

    let bases = [boolean(2), boolean(3), boolean(4)];
    let strategy = (
        0usize..3,
        any::<bool>(),
        proptest::collection::vec(1usize..=3, 14),
    )
        .prop_map(|(b, symmetric, raw)| (b, symmetric, raw))
        .prop_filter("at most 24 vertices", |(b, symmetric, raw)| {
            let order = [2usize, 6, 14][*b];
            let sizes = sizes_for(order, *b + 2, *symmetric, raw);
            sizes.iter().sum::<usize>() <= 24
        });
    let mut runner = TestRunner::deterministic();
    let (mut agree, mut unmixed) = (0, 0);
    for _ in 0..100 {
        let (b, symmetric, raw) = strategy
            .new_tree(&mut runner)
            .map_err(|e| e.to_string())?
            .current();
        let g = &bases[b];
        let sizes = sizes_for(g.order(), b + 2, symmetric, &raw);
        let direct = oracle_blowup_unmixed(g, &sizes);
        let predicted = conditions_hold(&blowup_unmixed_conditions(g), &sizes);
        let check = check_blowup_unmixed(
            g,
            BlowupKind::Plain(&BlowupSpec {
                sizes: sizes.clone(),
            }),
        )
        .map_err(|e| e.to_string())?;
        ensure(
            direct == predicted && check.report.is_unmixed == direct && check.agrees(),
            || {
                format!(
                    "B_{} with sizes {sizes:?}: direct {direct}, conditions {predicted}",
                    b + 2
                )
            },
        )?;
        agree += 1;
        unmixed += usize::from(direct);
    }
    Ok(format!(
        "B_2, B_3, B_4 systems match; {agree} random specs agree ({unmixed} unmixed)"
    ))
}

/// Sizes per vertex of `B_n` in id order (id = mask - 1); symmetric specs
/// give complementary subsets equal sizes.
fn sizes_for(order: usize, n: usize, symmetric: bool, raw: &[usize]) -> Vec<usize> {
    let full = (1usize << n) - 1;
    let cap = if n == 4 { 2 } else { 3 };
    (1..=order)
        .map(|m| {
            let key = if symmetric { m.min(full ^ m) } else { m };
            1 + (raw[key - 1] - 1) % cap
        })
        .collect()
}

fn generalized_blowups() -> Outcome {
    for n in 3..=5 {
        let top = bit(n - 1);
        let full = bit(n) - 1;
        let mt = boolean_minus_top(n).map_err(|e| e.to_string())?;
        let mt_masks: Vec<u64> = mt
            .graph
            .labels()
            .iter()
            .map(|l| subset_of_label(l))
            .collect();
        let mut want: Vec<u64> = (1..full).filter(|&m| m != top && m != full ^ top).collect();
        let mut got = mt_masks.clone();
        want.sort();
        got.sort();
        ensure(got == want, || {
            format!("n = {n}: minus-top vertex set differs")
        })?;
        ensure(
            MaskGraph::of(&mt.graph)
                == MaskGraph::from_relation(mt_masks.len(), |i, j| mt_masks[i] & mt_masks[j] == 0),
            || format!("n = {n}: minus-top edges are not disjointness"),
        )?;

        let base = boolean(n - 1);
        let units = vec![1; base.order()];
        let gb = generalized_blow_up(
            &base,
            &GeneralizedBlowupSpec {
                part1: units.clone(),
                part2: units,
            },
        )
        .map_err(|e| e.to_string())?;
        // A copy `A#1` stands for A and `A~1` for A together with n.
        let image: Vec<u64> = gb
            .labels()
            .iter()
            .map(|l| match l.split_once('#') {
                Some((a, _)) => subset_of_label(a),
                None => subset_of_label(l.split_once('~').expect("part label").0) | top,
            })
            .collect();
        let second: Vec<bool> = gb.labels().iter().map(|l| l.contains('~')).collect();
        let defined = MaskGraph::from_relation(gb.order(), |i, j| {
            let base_i = image[i] & !top;
            let base_j = image[j] & !top;
            base_i & base_j == 0 && !(second[i] && second[j])
        });
        ensure(MaskGraph::of(&gb) == defined, || {
            format!("n = {n}: generalized blow-up edges differ from the definition")
        })?;
        let mut img = image.clone();
        img.sort();
        ensure(img == want, || {
            format!("n = {n}: the map is not onto the minus-top vertices")
        })?;
        let pos = |m: u64| mt_masks.iter().position(|&x| x == m).expect("image vertex");
        let iso = (0..gb.order()).all(|i| {
            (0..gb.order()).all(|j| {
                gb.is_adjacent(VertexId(i), VertexId(j))
                    == mt
                        .graph
                        .is_adjacent(VertexId(pos(image[i])), VertexId(pos(image[j])))
            })
        });
        ensure(iso, || format!("n = {n}: the map is not an isomorphism"))?;
    }

    let b2 = boolean(2);
    let units = GeneralizedBlowupSpec {
        part1: vec![1, 1],
        part2: vec![1, 1],
    };
    let gb = generalized_blow_up(&b2, &units).map_err(|e| e.to_string())?;
    let sizes: Vec<u32> = MaskGraph::of(&gb)
        .maximal_independent_sets()
        .iter()
        .map(|s| s.count_ones())
        .collect();
    ensure(sizes.windows(2).all(|w| w[0] == w[1]), || {
        "unit blow-up mixed (oracle)".into()
    })?;
    ensure(
        check_blowup_unmixed(&b2, BlowupKind::Generalized(&units))
            .map_err(|e| e.to_string())?
            .report
            .is_unmixed,
        || "unit blow-up mixed (library)".into(),
    )?;
    let k23 = BlowupSpec { sizes: vec![2, 3] };
    ensure(!oracle_blowup_unmixed(&b2, &k23.sizes), || {
        "K_{2,3} unmixed (oracle)".into()
    })?;
    ensure(
        !check_blowup_unmixed(&b2, BlowupKind::Plain(&k23))
            .map_err(|e| e.to_string())?
            .report
            .is_unmixed,
        || "K_{2,3} unmixed (library)".into(),
    )?;
    Ok("minus-top for n = 3, 4, 5; unit blow-up of B_2 unmixed; K_{2,3} mixed".into())
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs
                .zip(bits)
                .filter(|(_, b)| *b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_index_edges(labels(n), edges).expect("valid edges")
        })
    })
}

fn arb_complex(max_n: usize, max_gens: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(0u64..(1 << n), 1..=max_gens).prop_map(move |masks| {
            let gens = masks
                .into_iter()
                .map(|m| VertexSet::from_mask(n, m as u128))
                .collect();
            SimplicialComplex::new(labels(n), gens).expect("valid generators")
        })
    })
}

fn property_suite() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let config = SearchConfig::default();
    let (mut vd, mut shellable) = (0, 0);
    for case in 0..200 {
        let g = arb_graph(9)
            .new_tree(&mut runner)
            .map_err(|e| e.to_string())?
            .current();
        let ind = g.independence_complex();
        let oracle = MaskComplex::new(MaskGraph::of(&g).maximal_independent_sets());
        ensure(MaskComplex::of(&ind) == oracle, || {
            format!("case {case}: complex differs")
        })?;

        for v in g.vertex_ids() {
            let graph_form = is_weak_shedding_vertex_graph(&g, v).map_err(|e| e.to_string())?;
            let complex_form = is_condition_beta(&ind, v).map_err(|e| e.to_string())?;
            ensure(
                graph_form == complex_form && complex_form == oracle.beta(v.0),
                || format!("case {case}: (a) fails at vertex {}", v.0),
            )?;
        }

        let whole = is_vertex_decomposable_graph(&g, &config);
        let mask_graph = MaskGraph::of(&g);
        let parts = mask_graph.components().into_iter().all(|comp| {
            let keep = VertexSet::from_indices(g.order(), members(comp));
            is_vertex_decomposable_graph(&g.induced_subgraph(&keep), &config).is_decomposable()
        });
        ensure(whole.is_decomposable() == parts, || {
            format!("case {case}: (b) fails")
        })?;
        if let Some(cert) = whole.certificate() {
            oracle
                .check_certificate(cert)
                .map_err(|e| format!("case {case}: certificate rejected: {e}"))?;
            vd += 1;
        }

        if whole.is_decomposable() && oracle.is_pure() && oracle.facets.len() <= 12 {
            match is_shellable_bruteforce(&ind, 12) {
                ShellOutcome::Shellable(order) => ensure(
                    oracle.is_shelling_order(&oracle_positions(&ind, &oracle, &order.0)),
                    || format!("case {case}: (c) invalid shelling order"),
                )?,
                other => return Err(format!("case {case}: (c) VD but {other:?}")),
            }
            shellable += 1;
            ensure(
                is_cohen_macaulay(&ind, Field::Rational, DEFAULT_FACE_CAP)
                    == CmOutcome::CohenMacaulay
                    && oracle.cohen_macaulay_gf2(),
                || format!("case {case}: (c) shellable but not Cohen-Macaulay"),
            )?;
        }

        let c = arb_complex(8, 6)
            .new_tree(&mut runner)
            .map_err(|e| e.to_string())?
            .current();
        let mc = MaskComplex::of(&c);
        let active: u64 = c.vertices().iter().map(|v| bit(v.0)).sum();
        if !c.is_simplex() {
            let d = c.alexander_dual().map_err(|e| e.to_string())?;
            let dd = d.alexander_dual().map_err(|e| e.to_string())?;
            ensure(MaskComplex::of(&dd) == mc, || {
                format!("case {case}: (d) not an involution")
            })?;
            ensure(MaskComplex::of(&d) == mc.alexander_dual(active), || {
                format!("case {case}: (d) dual differs from the oracle")
            })?;
        }

        let pair = (arb_complex(4, 4), arb_complex(4, 4));
        let (a, b) = pair
            .new_tree(&mut runner)
            .map_err(|e| e.to_string())?
            .current();
        let r = check_join_property(&a, &b, &config);
        ensure(r.biconditional_holds() == Some(true), || {
            format!("case {case}: (e) join verdicts {r:?}")
        })?;
    }
    Ok(format!("200 cases, {vd} decomposable, {shellable} shelled"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("unmixedness of B_2..B_6", unmixedness),
        ("maximal independent set census of B_4", census),
        ("vertex decomposability of B_n", || {
            vd_family(false, Family::Boolean)
        }),
        ("vertex decomposability of the complements", || {
            vd_family(true, Family::Complement)
        }),
        ("Cohen-Macaulayness of Ind(B_3), Ind(B_4)", cohen_macaulay),
        ("non-shellability of the Alexander duals", non_shellability),
        ("skeletons of Ind(B_3), Ind(B_4)", skeletons),
        ("non-matroid witness in Ind(B_3)", non_matroid),
        ("blow-up unmixedness conditions", blowup_conditions),
        ("generalized blow-ups", generalized_blowups),
        ("property and oracle suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name} ({secs:.2} s): {detail}",
                i + 1
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
