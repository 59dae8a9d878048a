//! Exact sparse Gaussian elimination over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{One, Zero};

use crate::poly::Q;

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no
/// zero values.
pub type SparseVec = Vec<(usize, Q)>;

pub fn sparse_from_dense(v: &[Q]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// `a - c * b`
fn axpy(a: &[(usize, Q)], c: &Q, b: &[(usize, Q)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, -(c * &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let x = &a[i].1 - c * &b[j].1;
                if !x.is_zero() {
                    out.push((a[i].0, x));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|(k, x)| (*k, -(c * x))));
    out
}

/// Row-echelon accumulator: each stored row has leading coefficient 1 at a
/// distinct pivot column.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates pivot columns from the front of `v` until its leading
    /// column carries no pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.first().cloned() {
            match self.rows.get(&lead) {
                Some(row) => v = axpy(&v, &c, row),
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns false if it was already dependent.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        match v.first() {
            None => false,
            Some((lead, c)) => {
                let lead = *lead;
                let inv = c.recip();
                let v = if inv.is_one() {
                    v
                } else {
                    v.into_iter().map(|(k, x)| (k, x * &inv)).collect()
                };
                self.rows.insert(lead, v);
                true
            }
        }
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of the linear relations `Σ c_k v_k = 0` among `vectors`, whose
/// indices must all be below `dim`. Each relation is a sparse vector over
/// the vector positions `k`.
pub fn relations(vectors: &[SparseVec], dim: usize) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (k, v) in vectors.iter().enumerate() {
        debug_assert!(v.iter().all(|(i, _)| *i < dim));
        let mut aug = v.clone();
        aug.push((dim + k, Q::one()));
        let r = e.reduce(aug);
        match r.first() {
            Some((lead, _)) if *lead >= dim => {
                out.push(r.into_iter().map(|(i, x)| (i - dim, x)).collect());
            }
            Some(_) => {
                e.insert(r);
            }
            None => unreachable!("augmented vector cannot vanish"),
        }
    }
    out
}
