use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidOutcome {
    Matroid,
    /// Faces `|larger| = |smaller| + 1` such that no `x ∈ larger ∖ smaller`
    /// makes `smaller ∪ {x}` a face.
    ExchangeFails {
        smaller: VertexSet,
        larger: VertexSet,
    },
    Undecided {
        face_cap: usize,
    },
}

impl MatroidOutcome {
    pub fn verdict(&self) -> crate::Verdict {
        match self {
            MatroidOutcome::Matroid => crate::Verdict::True,
            MatroidOutcome::ExchangeFails { .. } => crate::Verdict::False,
            MatroidOutcome::Undecided { .. } => crate::Verdict::Undecided,
        }
    }
}

/// The exchange axiom checked over all pairs of faces whose sizes differ by
/// one; the first failing pair in (size, lex) order is reported.
pub fn is_matroid(c: &SimplicialComplex, face_cap: usize) -> MatroidOutcome {
    let Some(faces) = c.faces(face_cap) else {
        return MatroidOutcome::Undecided { face_cap };
    };
    let all: BTreeSet<&VertexSet> = faces.iter().collect();
    let top = faces.last().map_or(0, VertexSet::len);
    let mut levels: Vec<Vec<&VertexSet>> = (0..=top).map(|_| Vec::new()).collect();
    for f in &faces {
        levels[f.len()].push(f);
    }
    for k in 0..top {
        for a in &levels[k] {
            for b in &levels[k + 1] {
                let ok = (*b - *a).iter().any(|x| all.contains(&a.with(x)));
                if !ok {
                    return MatroidOutcome::ExchangeFails {
                        smaller: (*a).clone(),
                        larger: (*b).clone(),
                    };
                }
            }
        }
    }
    MatroidOutcome::Matroid
}

/// A complex is a matroid exactly when every induced subcomplex is pure.
/// Returns the first vertex subset (by bitset order) whose induced
/// subcomplex is not pure, or `None` when there is none or when the complex
/// has more than `max_vertices` vertices.
pub fn find_nonpure_induced_subcomplex(
    c: &SimplicialComplex,
    max_vertices: usize,
) -> Option<Option<VertexSet>> {
    let verts: Vec<_> = c.vertices().iter().collect();
    if verts.len() > max_vertices.min(30) {
        return None;
    }
    for mask in 0u64..(1u64 << verts.len()) {
        let w = VertexSet::from_indices(
            c.ground_size(),
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, v)| v.0),
        );
        if !c.induced(&w).is_pure() {
            return Some(Some(w));
        }
    }
    Some(None)
}
