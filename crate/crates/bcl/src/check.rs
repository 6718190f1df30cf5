//! Property checks behind `bcl check`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use bcl_core::algebra::{
    is_chordal, is_cohen_macaulay, is_matroid, is_unmixed, Chordality, CmOutcome, Field,
    MatroidOutcome, DEFAULT_FACE_CAP,
};
use bcl_core::decompose::{
    find_shelling_obstruction, is_shellable_bruteforce, is_vertex_decomposable,
    is_vertex_decomposable_graph, SearchConfig, ShellOutcome, VdOutcome, DEFAULT_FACET_CAP,
};
use bcl_core::{SimplicialComplex, Verdict, VertexSet};
use serde::Serialize;

use crate::error::CliError;
use crate::io::Object;

/// Resource ceilings shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    pub memo_cap: usize,
    pub face_cap: usize,
    pub facet_cap: usize,
    pub field: Field,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            memo_cap: SearchConfig::default().memo_cap,
            face_cap: DEFAULT_FACE_CAP,
            facet_cap: DEFAULT_FACET_CAP,
            field: Field::Gf2,
        }
    }
}

impl Budgets {
    pub fn search_config(&self) -> SearchConfig {
        SearchConfig {
            memo_cap: self.memo_cap,
            ..SearchConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Vd,
    Shellable,
    Unmixed,
    Chordal,
    Matroid,
    Cm,
    Obstruction,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Vd,
        Property::Shellable,
        Property::Unmixed,
        Property::Chordal,
        Property::Matroid,
        Property::Cm,
        Property::Obstruction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Vd => "vd",
            Property::Shellable => "shellable",
            Property::Unmixed => "unmixed",
            Property::Chordal => "chordal",
            Property::Matroid => "matroid",
            Property::Cm => "cm",
            Property::Obstruction => "obstruction",
        }
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
                format!(
                    "unknown property `{s}` (expected one of {})",
                    names.join(", ")
                )
            })
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::True => "true",
        Verdict::False => "false",
        Verdict::Undecided => "undecided:budget",
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyResult {
    pub property: Property,
    #[serde(serialize_with = "serialize_verdict")]
    pub verdict: Verdict,
    pub detail: String,
    pub millis: f64,
}

fn serialize_verdict<S: serde::Serializer>(v: &Verdict, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(verdict_name(*v))
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub object: String,
    pub results: Vec<PropertyResult>,
}

impl PropertyReport {
    /// 0 when every verdict is true, 1 when any is false, otherwise 2.
    pub fn exit_code(&self) -> i32 {
        let verdicts: Vec<Verdict> = self.results.iter().map(|r| r.verdict).collect();
        if verdicts.contains(&Verdict::False) {
            1
        } else if verdicts.contains(&Verdict::Undecided) {
            2
        } else {
            0
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("object: {}\n", self.object);
        for r in &self.results {
            out.push_str(&format!(
                "{:<12} {:<17} {:>10.2} ms  {}\n",
                r.property.name(),
                verdict_name(r.verdict),
                r.millis,
                r.detail
            ));
        }
        out
    }
}

fn labels_of(c: &SimplicialComplex, s: &VertexSet) -> String {
    let names: Vec<&str> = s.iter().map(|v| c.label(v)).collect();
    format!("{{{}}}", names.join(","))
}

fn check_one(obj: &Object, p: Property, b: &Budgets) -> Result<(Verdict, String), CliError> {
    let complex = || obj.complex();
    Ok(match p {
        Property::Vd => {
            let out = match obj {
                Object::Graph(g) => is_vertex_decomposable_graph(g, &b.search_config()),
                Object::Complex(c) => is_vertex_decomposable(c, &b.search_config()),
            };
            let detail = match &out {
                VdOutcome::Decomposable(cert) => format!(
                    "certificate depth {}, {} nodes",
                    cert.depth(),
                    cert.node_count()
                ),
                VdOutcome::NotDecomposable(r) => format!(
                    "{} top-level vertices satisfy (beta), none leads to a decomposition",
                    r.weak_shedding.len()
                ),
                VdOutcome::Undecided { memo_entries } => {
                    format!("memo cap reached at {memo_entries} entries")
                }
            };
            (out.verdict(), detail)
        }
        Property::Shellable => {
            let c = complex();
            match is_shellable_bruteforce(&c, b.facet_cap) {
                ShellOutcome::Shellable(order) => {
                    (Verdict::True, format!("shelling order {:?}", order.0))
                }
                ShellOutcome::NotShellable => (Verdict::False, "no shelling order".into()),
                ShellOutcome::Undecided { facets } => (
                    Verdict::Undecided,
                    format!("{facets} facets exceed the facet cap {}", b.facet_cap),
                ),
            }
        }
        Property::Unmixed => match obj {
            Object::Graph(g) => {
                let r = is_unmixed(g);
                let sizes: Vec<String> = r
                    .cover_sizes
                    .iter()
                    .map(|(size, count)| format!("{count}x{size}"))
                    .collect();
                let v = if r.is_unmixed {
                    Verdict::True
                } else {
                    Verdict::False
                };
                (v, format!("minimal vertex cover sizes {}", sizes.join(" ")))
            }
            Object::Complex(c) => {
                let v = if c.is_pure() {
                    Verdict::True
                } else {
                    Verdict::False
                };
                (v, "purity of the complex".into())
            }
        },
        Property::Chordal => match obj {
            Object::Graph(g) => match is_chordal(g) {
                Chordality::Chordal(_) => (Verdict::True, "perfect elimination order found".into()),
                Chordality::NotChordal(cycle) => {
                    let mut names: Vec<&str> = cycle.iter().map(|&v| g.label(v)).collect();
                    names.push(names[0]);
                    (
                        Verdict::False,
                        format!("chordless cycle {}", names.join("-")),
                    )
                }
            },
            Object::Complex(_) => {
                return Err(CliError::Usage("`chordal` applies to graphs only".into()))
            }
        },
        Property::Matroid => {
            let c = complex();
            match is_matroid(&c, b.face_cap) {
                MatroidOutcome::Matroid => (Verdict::True, "exchange axiom holds".into()),
                MatroidOutcome::ExchangeFails { smaller, larger } => (
                    Verdict::False,
                    format!(
                        "exchange fails for {} and {}",
                        labels_of(&c, &smaller),
                        labels_of(&c, &larger)
                    ),
                ),
                MatroidOutcome::Undecided { face_cap } => {
                    (Verdict::Undecided, format!("more than {face_cap} faces"))
                }
            }
        }
        Property::Cm => {
            let c = complex();
            match is_cohen_macaulay(&c, b.field, b.face_cap) {
                CmOutcome::CohenMacaulay => {
                    (Verdict::True, format!("Reisner scan over {:?}", b.field))
                }
                CmOutcome::Fails {
                    face,
                    link_dim,
                    betti,
                } => (
                    Verdict::False,
                    format!(
                        "link of {} (dim {link_dim}) has reduced Betti numbers {:?}",
                        labels_of(&c, &face),
                        betti.betti
                    ),
                ),
                CmOutcome::Undecided { face_cap } => {
                    (Verdict::Undecided, format!("more than {face_cap} faces"))
                }
            }
        }
        Property::Obstruction => {
            let c = complex();
            match find_shelling_obstruction(&c) {
                Ok(Some(w)) => {
                    let f = c.facets();
                    (
                        Verdict::True,
                        format!(
                            "facets {} and {} cannot follow one another",
                            labels_of(&c, &f[w.facet_a]),
                            labels_of(&c, &f[w.facet_b])
                        ),
                    )
                }
                Ok(None) => (Verdict::False, "no obstructing facet pair".into()),
                Err(_) => (Verdict::False, "complex is not pure".into()),
            }
        }
    })
}

/// Runs each requested property once, in the order given.
pub fn check(
    object_name: &str,
    obj: &Object,
    props: &[Property],
    budgets: &Budgets,
) -> Result<PropertyReport, CliError> {
    let mut seen = Vec::new();
    let mut results = Vec::new();
    for &p in props {
        if seen.contains(&p) {
            continue;
        }
        seen.push(p);
        let start = Instant::now();
        let (verdict, detail) = check_one(obj, p, budgets)?;
        results.push(PropertyResult {
            property: p,
            verdict,
            detail,
            millis: start.elapsed().as_secs_f64() * 1e3,
        });
    }
    Ok(PropertyReport {
        object: object_name.to_string(),
        results,
    })
}
