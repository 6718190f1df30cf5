use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::complex::SimplicialComplex;
use crate::error::Error;

pub const DEFAULT_FACET_CAP: usize = 12;
// 2^26 bits of dead-state memory.
const HARD_FACET_CAP: usize = 26;

/// Facet indices in shelling order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellOutcome {
    Shellable(ShellingOrder),
    NotShellable,
    Undecided { facets: usize },
}

impl ShellOutcome {
    pub fn verdict(&self) -> crate::Verdict {
        match self {
            ShellOutcome::Shellable(_) => crate::Verdict::True,
            ShellOutcome::NotShellable => crate::Verdict::False,
            ShellOutcome::Undecided { .. } => crate::Verdict::Undecided,
        }
    }
}

/// Checks the shelling condition directly: for all `i < k` there are
/// `j < k` and `x ∈ F_k` with `F_i ∩ F_k ⊆ F_j ∩ F_k = F_k ∖ {x}`.
pub fn is_shelling_order(c: &SimplicialComplex, order: &[usize]) -> bool {
    let facets = c.facets();
    let mut seen = vec![false; facets.len()];
    for &i in order {
        if i >= facets.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    for k in 1..order.len() {
        let fk = &facets[order[k]];
        for i in 0..k {
            let meet_i = &facets[order[i]] & fk;
            let ok = (0..k).any(|j| {
                let meet_j = &facets[order[j]] & fk;
                fk.iter()
                    .any(|x| meet_j == fk.without(x) && meet_i.is_subset(&meet_j))
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Whether `next` may follow the facets in `placed`: every earlier facet
/// misses some `x ∈ next` for which `next ∖ {x}` lies in an earlier facet.
fn extends(facets: &[VertexSet], placed: u32, next: usize) -> bool {
    if placed == 0 {
        return true;
    }
    let fk = &facets[next];
    let mut ridge_points = VertexSet::empty(fk.universe());
    let earlier = || (0..facets.len()).filter(move |j| placed >> j & 1 == 1);
    for j in earlier() {
        let missing = fk - &facets[j];
        if missing.len() == 1 {
            ridge_points.union_with(&missing);
        }
    }
    earlier().all(|i| !(&(fk - &facets[i]) & &ridge_points).is_empty())
}

/// Exact shellability by search over sets of placed facets.
///
/// Whether a facet may be appended depends only on the set already placed,
/// not on its order, so the search memoizes dead sets and visits each at
/// most once.
pub fn is_shellable_bruteforce(c: &SimplicialComplex, facet_cap: usize) -> ShellOutcome {
    let facets = c.facets();
    let t = facets.len();
    if t > facet_cap.min(HARD_FACET_CAP) {
        return ShellOutcome::Undecided { facets: t };
    }
    let full: u32 = if t == 0 { 0 } else { (1u32 << t) - 1 };
    let mut dead = vec![false; 1usize << t];
    let mut order = Vec::with_capacity(t);
    if search(facets, 0, full, &mut dead, &mut order) {
        ShellOutcome::Shellable(ShellingOrder(order))
    } else {
        ShellOutcome::NotShellable
    }
}

fn search(
    facets: &[VertexSet],
    placed: u32,
    full: u32,
    dead: &mut [bool],
    order: &mut Vec<usize>,
) -> bool {
    if placed == full {
        return true;
    }
    if dead[placed as usize] {
        return false;
    }
    for k in 0..facets.len() {
        if placed >> k & 1 == 0 && extends(facets, placed, k) {
            order.push(k);
            if search(facets, placed | 1 << k, full, dead, order) {
                return true;
            }
            order.pop();
        }
    }
    dead[placed as usize] = true;
    false
}

/// Two facets neither of which can follow the other in any shelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub facet_a: usize,
    pub facet_b: usize,
    /// Whether some facet `C ≠ b` could justify `b` coming after `a`.
    pub b_after_a_supported: bool,
    /// Whether some facet `C ≠ a` could justify `a` coming after `b`.
    pub a_after_b_supported: bool,
}

/// A facet `C ≠ later` with `earlier ∩ later ⊆ C ∩ later = later ∖ {x}`.
fn has_support(facets: &[VertexSet], earlier: usize, later: usize) -> bool {
    let fl = &facets[later];
    let meet = &facets[earlier] & fl;
    facets
        .iter()
        .enumerate()
        .any(|(ci, c)| ci != later && (fl - c).len() == 1 && meet.is_subset(c))
}

/// Scans facet pairs in lex order for one whose shelling condition fails in
/// both orders, which rules out every shelling. Finding none proves nothing.
pub fn find_shelling_obstruction(
    c: &SimplicialComplex,
) -> Result<Option<ObstructionWitness>, Error> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let facets = c.facets();
    for a in 0..facets.len() {
        for b in a + 1..facets.len() {
            let ab = has_support(facets, a, b);
            let ba = has_support(facets, b, a);
            if !ab && !ba {
                return Ok(Some(ObstructionWitness {
                    facet_a: a,
                    facet_b: b,
                    b_after_a_supported: ab,
                    a_after_b_supported: ba,
                }));
            }
        }
    }
    Ok(None)
}
