use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::linalg::{rank_gf2, rank_rational, SparseRow};
use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;

/// Face budget for homology and the Cohen–Macaulay scan.
pub const DEFAULT_FACE_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Gf2,
    Rational,
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub field: Field,
    /// `betti[k]` is the rank of `H̃_{k-1}`.
    pub betti: Vec<usize>,
}

impl BettiVector {
    /// `β̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    /// `Σ (-1)^i β̃_i`, which equals the reduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_zero_below(&self, i: isize) -> bool {
        (-1..i).all(|j| self.get(j) == 0)
    }
}

/// Reduced homology over `field`, or `None` when the complex has more than
/// `face_cap` faces. The void complex has no homology at all.
pub fn reduced_homology(
    c: &SimplicialComplex,
    field: Field,
    face_cap: usize,
) -> Option<BettiVector> {
    let faces = c.faces(face_cap)?;
    Some(homology_of_faces(&faces, field))
}

fn homology_of_faces(faces: &[VertexSet], field: Field) -> BettiVector {
    let top = faces.last().map_or(0, VertexSet::len);
    // faces of each size, indexed
    let mut by_size: Vec<BTreeMap<&VertexSet, usize>> = vec![BTreeMap::new(); top + 1];
    for f in faces {
        let level = &mut by_size[f.len()];
        let idx = level.len();
        level.insert(f, idx);
    }
    if faces.is_empty() {
        return BettiVector {
            field,
            betti: Vec::new(),
        };
    }
    // rank of the boundary from size k to size k-1, for k = 1..=top
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let rows: Vec<SparseRow> = by_size[k]
            .keys()
            .map(|f| {
                let mut row: SparseRow = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (by_size[k - 1][&f.without(v)], sign)
                    })
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                row
            })
            .collect();
        ranks[k] = match field {
            Field::Gf2 => rank_gf2(&rows, by_size[k - 1].len()),
            Field::Rational => rank_rational(&rows),
        };
    }
    let betti = (0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    BettiVector { field, betti }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CmOutcome {
    CohenMacaulay,
    /// A face whose link has homology below its top dimension.
    Fails {
        face: VertexSet,
        link_dim: isize,
        betti: BettiVector,
    },
    /// More faces than the budget allows.
    Undecided {
        face_cap: usize,
    },
}

impl CmOutcome {
    pub fn verdict(&self) -> crate::Verdict {
        match self {
            CmOutcome::CohenMacaulay => crate::Verdict::True,
            CmOutcome::Fails { .. } => crate::Verdict::False,
            CmOutcome::Undecided { .. } => crate::Verdict::Undecided,
        }
    }
}

/// Reisner's criterion: for every face `F` (the empty face included),
/// `H̃_i(lk F) = 0` for all `i < dim lk F`. Faces are scanned by increasing
/// dimension and then lex-by-bitset, stopping at the first failure.
pub fn is_cohen_macaulay(c: &SimplicialComplex, field: Field, face_cap: usize) -> CmOutcome {
    let Some(faces) = c.faces(face_cap) else {
        return CmOutcome::Undecided { face_cap };
    };
    for face in faces {
        let link = c.link_of_face(&face);
        let link_dim = link.dim();
        let link_faces = link
            .faces(face_cap)
            .expect("a link is smaller than the complex");
        let betti = homology_of_faces(&link_faces, field);
        if !betti.is_zero_below(link_dim) {
            return CmOutcome::Fails {
                face,
                link_dim,
                betti,
            };
        }
    }
    CmOutcome::CohenMacaulay
}
