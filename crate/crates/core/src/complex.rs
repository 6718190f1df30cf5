//! Finite simplicial complexes stored by their facets.
//!
//! A complex keeps the vertex table it was built on. Deletion, link and the
//! other derived complexes reuse the parent's table and only shrink the
//! active vertex set, so vertex ids stay meaningful across a whole
//! decomposition tree.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::{maximal_antichain, VertexId, VertexSet};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Arc<[String]>,
    /// Active vertices. Every vertex of a facet is active; a vertex may be
    /// active without lying in any face only in an Alexander dual.
    vertices: VertexSet,
    /// Inclusion-maximal faces, sorted lex-by-bitset. Empty for the void
    /// complex, `[∅]` for the complex whose only face is the empty set.
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `generators` over the table `labels`.
    /// The generators are reduced to their maximal members.
    pub fn new(labels: Vec<String>, generators: Vec<VertexSet>) -> Result<Self, Error> {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        for g in &generators {
            if g.universe() != n {
                return Err(Error::InvalidVertex {
                    index: g.universe(),
                    size: n,
                });
            }
        }
        Ok(Self::generated(Arc::from(labels), generators))
    }

    /// Builds a complex from facets written with labels.
    pub fn from_labeled<S: AsRef<str>>(
        labels: Vec<String>,
        generators: &[Vec<S>],
    ) -> Result<Self, Error> {
        let n = labels.len();
        let mut sets = Vec::with_capacity(generators.len());
        for g in generators {
            let mut s = VertexSet::empty(n);
            for l in g {
                let i = labels
                    .iter()
                    .position(|x| x == l.as_ref())
                    .ok_or_else(|| Error::UnknownLabel(l.as_ref().into()))?;
                s.insert(VertexId(i));
            }
            sets.push(s);
        }
        Self::new(labels, sets)
    }

    /// The full simplex on the given labels.
    pub fn simplex(labels: Vec<String>) -> Result<Self, Error> {
        let n = labels.len();
        Self::new(labels, alloc::vec![VertexSet::full(n)])
    }

    pub(crate) fn generated(labels: Arc<[String]>, generators: Vec<VertexSet>) -> Self {
        let facets = maximal_antichain(generators);
        let mut vertices = VertexSet::empty(labels.len());
        for f in &facets {
            vertices.union_with(f);
        }
        SimplicialComplex {
            labels,
            vertices,
            facets,
        }
    }

    /// `facets` must already be a sorted antichain inside `vertices`.
    pub(crate) fn from_normalized(
        labels: Arc<[String]>,
        vertices: VertexSet,
        facets: Vec<VertexSet>,
    ) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        SimplicialComplex {
            labels,
            vertices,
            facets,
        }
    }

    /// Size of the underlying vertex table.
    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn index_of(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l == label).map(VertexId)
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facets rendered with vertex labels.
    pub fn facet_labels(&self) -> Vec<Vec<&str>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|v| self.label(v)).collect())
            .collect()
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, f: &VertexSet) -> bool {
        self.facets.iter().any(|g| f.is_subset(g))
    }

    fn check(&self, v: VertexId) -> Result<(), Error> {
        if v.0 >= self.ground_size() {
            return Err(Error::InvalidVertex {
                index: v.0,
                size: self.ground_size(),
            });
        }
        if !self.vertices.contains(v) {
            return Err(Error::NotInComplex(self.labels[v.0].clone()));
        }
        Ok(())
    }

    /// Number of faces, or `None` once it exceeds `cap`.
    pub fn face_count(&self, cap: usize) -> Option<usize> {
        self.faces(cap).map(|f| f.len())
    }

    /// All faces (the empty face included), sorted by size and then
    /// lex-by-bitset. `None` when there are more than `cap`.
    pub fn faces(&self, cap: usize) -> Option<Vec<VertexSet>> {
        let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
        for f in &self.facets {
            let members: Vec<VertexId> = f.iter().collect();
            if members.len() >= 63 {
                return None;
            }
            for mask in 0u64..(1 << members.len()) {
                let s = VertexSet::from_indices(
                    self.ground_size(),
                    members
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, v)| v.0),
                );
                seen.insert(s);
                if seen.len() > cap {
                    return None;
                }
            }
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Some(out)
    }

    /// `f[i+1]` counts the faces of dimension `i`, starting at `i = -1`.
    pub fn f_vector(&self, cap: usize) -> Option<Vec<usize>> {
        let faces = self.faces(cap)?;
        let mut f = alloc::vec![0usize; (self.dim() + 2).max(0) as usize];
        for face in faces {
            f[face.len()] += 1;
        }
        Some(f)
    }

    /// `Σ (-1)^i f_i` over `i = -1..=dim`.
    pub fn reduced_euler_characteristic(&self, cap: usize) -> Option<i64> {
        let f = self.f_vector(cap)?;
        Some(
            f.iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
                .sum(),
        )
    }

    /// Faces not containing `v`.
    pub fn deletion(&self, v: VertexId) -> Result<Self, Error> {
        self.check(v)?;
        let generators = self.facets.iter().map(|f| f.without(v)).collect();
        let mut out = Self::generated(self.labels.clone(), generators);
        out.vertices = self.vertices.without(v);
        out.vertices.intersect_with(&self.vertices);
        Ok(out)
    }

    /// Faces `F` with `v ∉ F` and `F ∪ {v}` a face. Vertices that occur in no
    /// face of the link are dropped from its active set.
    pub fn link(&self, v: VertexId) -> Result<Self, Error> {
        self.check(v)?;
        Ok(self.link_of_face(&VertexSet::singleton(self.ground_size(), v)))
    }

    /// Link of an arbitrary face; the void complex when `face` is not a face.
    pub fn link_of_face(&self, face: &VertexSet) -> Self {
        let generators = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f - face)
            .collect();
        Self::generated(self.labels.clone(), generators)
    }

    /// Restriction to the faces contained in `w`.
    pub fn induced(&self, w: &VertexSet) -> Self {
        let generators = self.facets.iter().map(|f| f & w).collect();
        let mut out = Self::generated(self.labels.clone(), generators);
        out.vertices = &self.vertices & w;
        out
    }

    /// Join with a complex on a disjoint copy of `other`'s table. Clashing
    /// labels from `other` get a trailing `'`.
    pub fn join(&self, other: &Self) -> Self {
        let n1 = self.ground_size();
        let n = n1 + other.ground_size();
        let mut labels: Vec<String> = self.labels.to_vec();
        for l in other.labels.iter() {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let shift = |s: &VertexSet| VertexSet::from_indices(n, s.iter().map(|v| v.0 + n1));
        let mut generators = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            let f = f.resized(n);
            for g in &other.facets {
                generators.push(&f | &shift(g));
            }
        }
        let mut out = Self::generated(Arc::from(labels), generators);
        out.vertices = &self.vertices.resized(n) | &shift(&other.vertices);
        out
    }

    fn check_skeleton(&self, s: isize) -> Result<(), Error> {
        if s < -1 || s > self.dim() {
            Err(Error::SkeletonOutOfRange { s, dim: self.dim() })
        } else {
            Ok(())
        }
    }

    /// All faces with at most `s + 1` vertices.
    pub fn skeleton(&self, s: isize) -> Result<Self, Error> {
        self.check_skeleton(s)?;
        let k = (s + 1) as usize;
        let mut generators = Vec::new();
        for f in &self.facets {
            if f.len() <= k {
                generators.push(f.clone());
            } else {
                k_subsets(f, k, &mut |x| generators.push(x));
            }
        }
        Ok(Self::generated(self.labels.clone(), generators))
    }

    /// The complex generated by the faces of dimension exactly `s`.
    pub fn pure_skeleton(&self, s: isize) -> Result<Self, Error> {
        self.check_skeleton(s)?;
        let k = (s + 1) as usize;
        let mut generators = Vec::new();
        for f in self.facets.iter().filter(|f| f.len() >= k) {
            k_subsets(f, k, &mut |x| generators.push(x));
        }
        Ok(Self::generated(self.labels.clone(), generators))
    }

    /// Inclusion-minimal sets of active vertices that are not faces, sorted
    /// lex-by-bitset.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let n = self.ground_size();
        if self.is_void() {
            return alloc::vec![VertexSet::empty(n)];
        }
        let faces = self.faces(usize::MAX).expect("uncapped");
        let face_set: BTreeSet<&VertexSet> = faces.iter().collect();
        let mut out = Vec::new();
        for f in &faces {
            // Extend only above the largest member so every candidate is
            // produced once.
            let top = f.iter().last().map_or(0, |v| v.0 + 1);
            for x in self.vertices.iter().filter(|x| x.0 >= top) {
                let cand = f.with(x);
                if face_set.contains(&cand) {
                    continue;
                }
                if cand.iter().all(|y| face_set.contains(&cand.without(y))) {
                    out.push(cand);
                }
            }
        }
        out.sort();
        out
    }

    /// `{V ∖ F : F ∉ Δ}` over the active vertex set `V`. Its facets are the
    /// complements of the minimal nonfaces.
    pub fn alexander_dual(&self) -> Result<Self, Error> {
        if self.facets.len() == 1 && self.facets[0] == self.vertices {
            return Err(Error::VoidDual);
        }
        let facets = self
            .minimal_nonfaces()
            .iter()
            .map(|nf| &self.vertices - nf)
            .collect();
        let mut out = Self::generated(self.labels.clone(), facets);
        out.vertices = self.vertices.clone();
        Ok(out)
    }

    /// The same faces with `extra` added to the active vertex set, as in an
    /// Alexander dual whose ground set is larger than its faces.
    pub fn with_extra_vertices(&self, extra: &VertexSet) -> Result<Self, Error> {
        if extra.universe() != self.ground_size() {
            return Err(Error::InvalidVertex {
                index: extra.universe(),
                size: self.ground_size(),
            });
        }
        let mut out = self.clone();
        out.vertices.union_with(extra);
        Ok(out)
    }

    /// The same complex on a table holding only the active vertices.
    pub fn compact(&self) -> Self {
        let kept: Vec<VertexId> = self.vertices.iter().collect();
        let m = kept.len();
        let mut pos = alloc::vec![usize::MAX; self.ground_size()];
        for (i, v) in kept.iter().enumerate() {
            pos[v.0] = i;
        }
        let map = |s: &VertexSet| VertexSet::from_indices(m, s.iter().map(|v| pos[v.0]));
        let labels: Vec<String> = kept.iter().map(|v| self.labels[v.0].clone()).collect();
        let facets = self.facets.iter().map(map).collect::<Vec<_>>();
        let mut out = Self::generated(Arc::from(labels), facets);
        out.vertices = VertexSet::full(m);
        out
    }

    /// The same complex over a different table that contains every active
    /// label; used to compare complexes built on different tables.
    pub fn relabeled_onto(&self, labels: &[String]) -> Result<Self, Error> {
        let n = labels.len();
        let mut pos = alloc::vec![0usize; self.ground_size()];
        for v in self.vertices.iter() {
            pos[v.0] = labels
                .iter()
                .position(|l| *l == self.labels[v.0])
                .ok_or_else(|| Error::UnknownLabel(self.labels[v.0].clone()))?;
        }
        let map = |s: &VertexSet| VertexSet::from_indices(n, s.iter().map(|v| pos[v.0]));
        let mut out = Self::generated(
            Arc::from(labels.to_vec()),
            self.facets.iter().map(map).collect(),
        );
        out.vertices = map(&self.vertices);
        Ok(out)
    }

    /// Human-readable facet list such as `<{1,12,13},{2,12}>`.
    pub fn describe(&self) -> String {
        let body: Vec<String> = self
            .facet_labels()
            .iter()
            .map(|f| format!("{{{}}}", f.join(",")))
            .collect();
        format!("<{}>", body.join(","))
    }
}

/// Calls `f` on every `k`-element subset of `s`.
pub(crate) fn k_subsets(s: &VertexSet, k: usize, f: &mut dyn FnMut(VertexSet)) {
    let members: Vec<VertexId> = s.iter().collect();
    if k > members.len() {
        return;
    }
    let n = s.universe();
    let mut idx: Vec<usize> = (0..k).collect();
    let m = members.len();
    loop {
        f(VertexSet::from_indices(
            n,
            idx.iter().map(|&i| members[i].0),
        ));
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + m - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
