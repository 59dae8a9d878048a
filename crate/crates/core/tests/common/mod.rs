#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use wcilab_core::linalg::{rank, SparseVec};
use wcilab_core::poly::q;
use wcilab_core::{GradedRing, Monomial, Poly, Q};

pub fn weights_strategy(
    n: std::ops::RangeInclusive<usize>,
    max_w: i64,
) -> impl Strategy<Value = Vec<i64>> {
    n.prop_flat_map(move |k| prop::collection::vec(1..=max_w, k))
}

/// Random homogeneous polynomial of degree `d`: a random subset of the
/// degree-`d` monomials with small nonzero integer coefficients. May be zero
/// if the degree has no monomials.
pub fn homogeneous(ring: &Arc<GradedRing>, d: i64, picks: &[(usize, i64)]) -> Poly {
    let monos = ring.monomials_of_degree(d);
    if monos.is_empty() {
        return Poly::zero(ring);
    }
    Poly::from_terms(
        ring,
        picks.iter().map(|&(i, c)| {
            (
                monos[i % monos.len()].clone(),
                q(if c == 0 { 1 } else { c }),
            )
        }),
    )
}

pub fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 1..4)
}

/// Arbitrary (possibly inhomogeneous) polynomial of total exponent ≤ 3.
pub fn any_poly(ring: &Arc<GradedRing>, terms: &[(Vec<u32>, i64)]) -> Poly {
    Poly::from_terms(
        ring,
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e[..ring.nvars()].to_vec()), q(*c))),
    )
}

pub fn poly_terms(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..=3, n), -4i64..=4), 0..5)
}

/// `f ∈ (gens)` for homogeneous data, decided by linear algebra in the
/// degree of `f`: `f` lies in the span of all `μ·g`.
pub fn in_ideal_by_linear_algebra(f: &Poly, gens: &[Poly]) -> bool {
    let ring = f.ring();
    let d = f.homogeneous_degree().unwrap();
    let monos = ring.monomials_of_degree(d);
    let coords = |p: &Poly| -> SparseVec {
        monos
            .iter()
            .enumerate()
            .filter_map(|(i, m)| {
                let c = p.coeff(m);
                (c != Q::from_integer(0.into())).then_some((i, c))
            })
            .collect()
    };
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in gens {
        let gd = g.homogeneous_degree().unwrap();
        for mu in ring.monomials_of_degree(d - gd) {
            rows.push(coords(&(&Poly::term(ring, mu, q(1)) * g)));
        }
    }
    let r = rank(rows.clone());
    rows.push(coords(f));
    rank(rows) == r
}
