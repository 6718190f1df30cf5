//! Exact ranks of sparse integer matrices over GF(2) and over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse row: `(column, coefficient)` pairs sorted by column, no zeros.
pub type SparseRow = Vec<(usize, i64)>;

/// Rank over GF(2); coefficients are reduced mod 2.
pub fn rank_gf2(rows: &[SparseRow], ncols: usize) -> usize {
    let words = ncols.div_ceil(64).max(1);
    // pivot column -> reduced row
    let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for row in rows {
        let mut bits = vec![0u64; words];
        for &(c, v) in row {
            if v.rem_euclid(2) == 1 {
                bits[c / 64] ^= 1 << (c % 64);
            }
        }
        while let Some(lead) = leading_bit(&bits) {
            match pivots.get(&lead) {
                Some(p) => {
                    for (a, b) in bits.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(lead, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn leading_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over the rationals.
pub fn rank_rational(rows: &[SparseRow]) -> usize {
    independent_rows_rational(rows).len()
}

/// Indices of the rows that raise the rank when the rows are taken in
/// order; these span the same space as all rows.
pub fn independent_rows_rational(rows: &[SparseRow]) -> Vec<usize> {
    match independent_rows::<i64>(rows) {
        Some(r) => r,
        None => independent_rows::<BigInt>(rows).expect("big integers do not overflow"),
    }
}

/// Integer arithmetic that may report overflow.
trait Coef: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// `a * b - c * d`
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_one(&self) -> bool;
}

impl Coef for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        *self == 1
    }
}

impl Coef for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
    fn cross(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        Some(a * b - c * d)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Fraction-free incremental echelon form. Each new row is reduced against
/// the pivot rows by eliminating its leading entry; rows are kept primitive
/// (content 1, positive leading entry) so entries stay small. `None` on
/// overflow.
fn independent_rows<T: Coef>(rows: &[SparseRow]) -> Option<Vec<usize>> {
    let mut pivots: BTreeMap<usize, Vec<(usize, T)>> = BTreeMap::new();
    let mut out = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r: Vec<(usize, T)> = row
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(c, v)| (c, T::from_i64(v)))
            .collect();
        r.sort_by_key(|(c, _)| *c);
        loop {
            let Some((lead, lead_val)) = r.first().cloned() else {
                break;
            };
            match pivots.get(&lead) {
                None => {
                    normalize(&mut r);
                    pivots.insert(lead, r);
                    out.push(idx);
                    break;
                }
                Some(p) => {
                    let p_lead = p[0].1.clone();
                    r = combine(&r, &p_lead, p, &lead_val)?;
                    normalize(&mut r);
                }
            }
        }
    }
    Some(out)
}

/// `pa * a - pb * b`, dropping zeros.
fn combine<T: Coef>(a: &[(usize, T)], pa: &T, b: &[(usize, T)], pb: &T) -> Option<Vec<(usize, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, va, vb) = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, &x.1, &y.1)
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                i += 1;
                (x.0, &x.1, &zero)
            }
            (Some(x), None) => {
                i += 1;
                (x.0, &x.1, &zero)
            }
            (_, Some(y)) => {
                j += 1;
                (y.0, &zero, &y.1)
            }
            (None, None) => unreachable!(),
        };
        let v = T::cross(pa, va, pb, vb)?;
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn normalize<T: Coef>(r: &mut [(usize, T)]) {
    let Some(first) = r.first() else {
        return;
    };
    let mut g = first.1.clone();
    for (_, v) in r.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(v);
    }
    if g.is_negative() {
        g = g.neg();
    }
    let flip = r[0].1.is_negative();
    if !g.is_one() && !g.is_zero() {
        for (_, v) in r.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
    if flip {
        for (_, v) in r.iter_mut() {
            *v = v.neg();
        }
    }
}
