//! Graded polynomial rings and monomials.
//!
//! A [`GradedRing`] fixes an ordered list of variables together with a
//! strictly positive primary grading and an optional second integer grading.
//! Rings are shared behind an [`Arc`]; polynomials compare their rings by
//! value, so two rings built from the same data are interchangeable.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent vector of a monomial in a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Monomial(exps.into())
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e.into())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Σ exponent_i · weight_i.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial(exps.into()))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables with a positive exponent (first 64 only).
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << i))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A polynomial ring over the rationals with one or two integer gradings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedRing {
    names: Vec<String>,
    weights: Vec<i64>,
    second_weights: Option<Vec<i64>>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GradedRing {
    pub fn new(
        names: Vec<String>,
        weights: Vec<i64>,
        second_weights: Option<Vec<i64>>,
    ) -> Result<Arc<Self>> {
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        if weights.len() != names.len() {
            return Err(Error::LengthMismatch {
                what: "weights",
                got: weights.len(),
                expected: names.len(),
            });
        }
        if let Some(sw) = &second_weights {
            if sw.len() != names.len() {
                return Err(Error::LengthMismatch {
                    what: "second weights",
                    got: sw.len(),
                    expected: names.len(),
                });
            }
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        if let Some((index, &weight)) = weights.iter().enumerate().find(|(_, &w)| w <= 0) {
            return Err(Error::NonPositiveWeight { index, weight });
        }
        Ok(Arc::new(GradedRing {
            names,
            weights,
            second_weights,
        }))
    }

    /// Ring with variables `x0, x1, …` carrying the given weights.
    pub fn with_weights(weights: &[i64]) -> Result<Arc<Self>> {
        let names = (0..weights.len()).map(|i| format!("x{i}")).collect();
        GradedRing::new(names, weights.to_vec(), None)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn second_weights(&self) -> Option<&[i64]> {
        self.second_weights.as_deref()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.weights)
    }

    pub fn second_degree(&self, m: &Monomial) -> Option<i64> {
        self.second_weights.as_ref().map(|w| m.weighted_degree(w))
    }

    /// Weighted graded reverse lexicographic comparison: primary weighted
    /// degree first, ties broken by the smaller exponent in the last
    /// differing variable being larger.
    pub fn cmp_grevlex(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            for (ea, eb) in a.exps().iter().zip(b.exps()).rev() {
                if ea != eb {
                    return eb.cmp(ea);
                }
            }
            Ordering::Equal
        })
    }

    /// All monomials of primary weighted degree `d`, largest first.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = monomials_of_weighted_degree(&self.weights, d)
            .into_iter()
            .map(Monomial::new)
            .collect();
        out.sort_by(|a, b| self.cmp_grevlex(b, a));
        out
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars())
    }
}

/// `make_ring` under its plain name.
pub fn make_ring(
    names: &[&str],
    weights: &[i64],
    second_weights: Option<&[i64]>,
) -> Result<Arc<GradedRing>> {
    GradedRing::new(
        names.iter().map(|s| s.to_string()).collect(),
        weights.to_vec(),
        second_weights.map(|s| s.to_vec()),
    )
}

/// Exponent vectors `e` with `Σ e_i w_i = d` for strictly positive weights.
pub fn monomials_of_weighted_degree(weights: &[i64], d: i64) -> Vec<Vec<u32>> {
    fn go(weights: &[i64], i: usize, rest: i64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == weights.len() {
            if rest % weights[i] == 0 {
                cur.push((rest / weights[i]) as u32);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        let mut e = 0i64;
        while e * weights[i] <= rest {
            cur.push(e as u32);
            go(weights, i + 1, rest - e * weights[i], cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    if weights.is_empty() {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    debug_assert!(weights.iter().all(|&w| w > 0));
    go(
        weights,
        0,
        d,
        &mut Vec::with_capacity(weights.len()),
        &mut out,
    );
    out
}
