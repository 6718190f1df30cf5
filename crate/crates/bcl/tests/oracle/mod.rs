//! Reference implementations written straight from the definitions, on
//! plain bitmasks, used to cross-examine the library.

#![allow(dead_code)]

use std::collections::BTreeSet;

use bcl_core::decompose::Certificate;
use bcl_core::{Graph, SimplicialComplex, VertexId};

pub fn bit(i: usize) -> u64 {
    1u64 << i
}

pub fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask & bit(i) != 0)
}

/// `{1,2,4}` from the digit label `"421"`.
pub fn subset_of_label(label: &str) -> u64 {
    label
        .chars()
        .map(|c| bit(c.to_digit(10).expect("digit label") as usize - 1))
        .fold(0, |a, b| a | b)
}

/// Adjacency lists as masks over vertex positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskGraph {
    pub adj: Vec<u64>,
}

impl MaskGraph {
    pub fn from_relation(k: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        MaskGraph {
            adj: (0..k)
                .map(|i| (0..k).filter(|&j| j != i && rel(i, j)).map(bit).sum())
                .collect(),
        }
    }

    /// Reads the edges of a library graph, keeping its vertex positions.
    pub fn of(g: &Graph) -> Self {
        Self::from_relation(g.order(), |i, j| g.is_adjacent(VertexId(i), VertexId(j)))
    }

    /// Disjointness (or, for the complement, overlap) of the subsets named
    /// by the labels of a Boolean graph.
    pub fn boolean_from_labels(g: &Graph, complement: bool) -> Self {
        let masks: Vec<u64> = g.labels().iter().map(|l| subset_of_label(l)).collect();
        Self::from_relation(masks.len(), |i, j| (masks[i] & masks[j] == 0) != complement)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn all(&self) -> u64 {
        if self.order() == 64 {
            u64::MAX
        } else {
            bit(self.order()) - 1
        }
    }

    /// Maximal independent sets by Bron–Kerbosch with pivoting on the
    /// complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<u64> {
        let all = self.all();
        let compat: Vec<u64> = (0..self.order())
            .map(|v| all & !self.adj[v] & !bit(v))
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&compat, 0, all, 0, &mut out);
        out.sort();
        out
    }

    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.order() {
            if seen & bit(v) != 0 {
                continue;
            }
            let mut comp = bit(v);
            let mut frontier = bit(v);
            while frontier != 0 {
                let next = members(frontier).fold(0, |a, u| a | self.adj[u]) & !comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }
}

fn bron_kerbosch(compat: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = members(p | x)
        .max_by_key(|&u| (compat[u] & p).count_ones())
        .expect("p or x is nonempty");
    for v in members(p & !compat[pivot]) {
        bron_kerbosch(compat, r | bit(v), p & compat[v], x & compat[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

/// Inclusion-maximal members, sorted and deduplicated.
pub fn maximal(sets: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let sets: BTreeSet<u64> = sets.into_iter().collect();
    sets.iter()
        .copied()
        .filter(|&s| !sets.iter().any(|&t| t != s && s & t == s))
        .collect()
}

/// A complex given by its facet masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaskComplex {
    pub facets: Vec<u64>,
}

impl MaskComplex {
    pub fn new(generators: impl IntoIterator<Item = u64>) -> Self {
        MaskComplex {
            facets: maximal(generators),
        }
    }

    /// The facets of a library complex, keeping its vertex positions.
    pub fn of(c: &SimplicialComplex) -> Self {
        Self::new(
            c.facets()
                .iter()
                .map(|f| f.iter().map(|v| bit(v.0)).sum::<u64>()),
        )
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .windows(2)
            .all(|w| w[0].count_ones() == w[1].count_ones())
    }

    pub fn deletion(&self, v: usize) -> Self {
        Self::new(self.facets.iter().map(|f| f & !bit(v)))
    }

    pub fn link(&self, v: usize) -> Self {
        Self::new(
            self.facets
                .iter()
                .filter(|&&f| f & bit(v) != 0)
                .map(|f| f & !bit(v)),
        )
    }

    pub fn link_of_face(&self, face: u64) -> Self {
        Self::new(
            self.facets
                .iter()
                .filter(|&&f| f & face == face)
                .map(|f| f & !face),
        )
    }

    /// No facet of the link is a facet of the deletion.
    pub fn beta(&self, v: usize) -> bool {
        let d = self.deletion(v);
        self.link(v).facets.iter().all(|f| !d.facets.contains(f))
    }

    pub fn faces(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for &f in &self.facets {
            let mut s = f;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out
    }

    pub fn skeleton(&self, s: isize) -> Self {
        Self::new(
            self.faces()
                .into_iter()
                .filter(|f| (f.count_ones() as isize) <= s + 1),
        )
    }

    pub fn pure_skeleton(&self, s: isize) -> Self {
        Self::new(
            self.faces()
                .into_iter()
                .filter(|f| f.count_ones() as isize == s + 1),
        )
    }

    /// Facets of the Alexander dual on the ground set `ground`: complements
    /// of the minimal nonfaces.
    pub fn alexander_dual(&self, ground: u64) -> Self {
        let faces = self.faces();
        let nonfaces: Vec<u64> = subsets(ground).filter(|s| !faces.contains(s)).collect();
        let minimal = nonfaces
            .iter()
            .copied()
            .filter(|&s| members(s).all(|v| faces.contains(&(s & !bit(v)))));
        Self::new(minimal.map(|s| ground & !s))
    }

    /// Checks a certificate node by node from the definition of vertex
    /// decomposability; chordal leaves are not accepted.
    pub fn check_certificate(&self, cert: &Certificate) -> Result<(), String> {
        match cert {
            Certificate::Simplex | Certificate::Edgeless => {
                if self.facets.len() == 1 {
                    Ok(())
                } else {
                    Err(format!("leaf with {} facets", self.facets.len()))
                }
            }
            Certificate::Chordal => Err("chordal leaf".into()),
            Certificate::Shed {
                vertex,
                deletion,
                link,
            } => {
                let v = vertex.0;
                if self.facets.iter().all(|f| f & bit(v) == 0) {
                    return Err(format!("vertex {v} not in the complex"));
                }
                if !self.beta(v) {
                    return Err(format!("vertex {v} fails (beta)"));
                }
                self.deletion(v).check_certificate(deletion)?;
                self.link(v).check_certificate(link)
            }
        }
    }

    /// Checks the shelling condition for `order` directly.
    pub fn is_shelling_order(&self, order: &[usize]) -> bool {
        let mut sorted = order.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != self.facets.len() || order.len() != self.facets.len() {
            return false;
        }
        (1..order.len()).all(|j| {
            let fj = self.facets[order[j]];
            order[..j].iter().all(|&i| {
                let meet = self.facets[i] & fj;
                order[..j].iter().any(|&k| {
                    let ck = self.facets[k] & fj;
                    meet & ck == meet && (fj & !ck).count_ones() == 1
                })
            })
        })
    }

    /// Whether some facet other than `later` gives `later` a codimension-one
    /// face containing its meet with `earlier`.
    pub fn supports(&self, earlier: usize, later: usize) -> bool {
        let fl = self.facets[later];
        let meet = self.facets[earlier] & fl;
        self.facets
            .iter()
            .enumerate()
            .any(|(k, &c)| k != later && (fl & !c).count_ones() == 1 && meet & c == meet)
    }

    /// Reisner's criterion over GF(2): every link has vanishing reduced
    /// homology below its dimension.
    pub fn cohen_macaulay_gf2(&self) -> bool {
        self.faces().into_iter().all(|f| {
            let link = self.link_of_face(f);
            let top = link
                .facets
                .iter()
                .map(|g| g.count_ones())
                .max()
                .unwrap_or(0) as isize
                - 1;
            let betti = link.reduced_betti_gf2();
            (0..betti.len()).all(|k| k as isize > top || betti[k] == 0)
        })
    }

    /// `betti[k]` is the GF(2) rank of reduced homology in dimension `k - 1`.
    pub fn reduced_betti_gf2(&self) -> Vec<usize> {
        let faces = self.faces();
        let top = faces
            .iter()
            .map(|f| f.count_ones() as usize)
            .max()
            .unwrap_or(0);
        let by_size: Vec<Vec<u64>> = (0..=top)
            .map(|k| {
                faces
                    .iter()
                    .copied()
                    .filter(|f| f.count_ones() as usize == k)
                    .collect()
            })
            .collect();
        // rank of the boundary from size-k faces to size-(k-1) faces
        let mut ranks = vec![0usize; top + 2];
        for k in 1..=top {
            let lower = &by_size[k - 1];
            let rows: Vec<Vec<u64>> = by_size[k]
                .iter()
                .map(|&f| {
                    let mut row = vec![0u64; lower.len().div_ceil(64)];
                    for v in members(f) {
                        let i = lower.binary_search(&(f & !bit(v))).expect("face of a face");
                        row[i / 64] |= bit(i % 64);
                    }
                    row
                })
                .collect();
            ranks[k] = rank_gf2(rows);
        }
        (0..=top)
            .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }
}

pub fn subsets(ground: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == ground {
            None
        } else {
            Some(((cur | !ground).wrapping_add(1)) & ground)
        };
        Some(cur)
    })
}

pub fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, |r| r.len() * 64);
    for col in 0..width {
        let (w, b) = (col / 64, bit(col % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over Q by fraction-free elimination on small integer matrices.
pub fn rank_rational(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let (a, b) = (m[rank][c], m[r][c]);
            if b != 0 {
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x = a * *x - b * y;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
