//! Saturation of ideals in Cox rings.
//!
//! Two notions are provided. [`saturate_smooth`] is the classical
//! `(I : B^∞)` with respect to an irrelevant ideal `B`. [`saturate_cl_one`]
//! is the index-`m` saturation for a weighted projective space, where
//! `m = lcm(a_i)` is the index of `Pic` in `Cl ≅ ℤ`:
//!
//! `I^∞ = { x : (R·x)_{mk} ⊆ I for all k ≫ 0 }`.
//!
//! It is computed degree by degree up to an explicit bound.
//!
//! # Finite certificate
//!
//! Let `J = (I : B^∞)` for the maximal ideal `B = (x_0, …, x_N)`. Since
//! `J/I` has finite length, `J` and `I` agree in large degrees, so
//! `I^∞ = J^∞`. For homogeneous `x` of degree `d`, let `e*` be the smallest
//! integer `≥ (N+1)·m` with `d + e* ≡ 0 (mod m)`. Then
//!
//! `x ∈ I^∞  ⇔  x·μ ∈ J for every monomial μ of degree e*`.
//!
//! (⇐) Any monomial of degree `≥ (N+1)·m − Σ a_i + 1` is divisible by some
//! `x_i^{m/a_i}`: otherwise every exponent is below `m/a_i` and the degree
//! is at most `Σ a_i (m/a_i − 1)`. Hence a monomial of degree `e* + km`
//! factors as a product of a degree-`e*` monomial and `k` such powers, and
//! the condition propagates upwards.
//!
//! (⇒) If `x·V_{e} ⊆ J` for some large `e ≡ e* (mod m)`, then for each `μ`
//! of degree `e*` the element `x·μ` times every `x_i^{(e−e*)/a_i}` lies in
//! `J`. Those powers generate a `B`-primary ideal and `J` is `B`-saturated,
//! so `x·μ ∈ J`.
//!
//! The kernel of `x ↦ (NF_J(x·μ))_μ` on the standard monomials of degree
//! `d` is therefore exactly `(I^∞)_d / J_d`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::One;

use crate::error::{Error, Result};
use crate::groebner::{is_regular_sequence, saturate_wrt, standard_monomials, GbConfig, Ideal};
use crate::linalg::{relations, SparseVec};
use crate::par;
use crate::poly::{Poly, Q};
use crate::ring::{GradedRing, Monomial};
use crate::wps::{WciData, WeightedSpace};

/// `(I : B^∞)`, exact.
pub fn saturate_smooth(ideal: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    Ok(saturate_wrt(ideal, b, cfg)?.0)
}

/// The irrelevant ideal `(x_0, …, x_N)` of a weighted projective space.
pub fn irrelevant_ideal(space: &WeightedSpace) -> Ideal {
    Ideal::maximal(space.ring())
}

/// `(N+1)·m`: every monomial of at least this degree is divisible by some
/// `x_i^{m/a_i}`.
pub fn pigeonhole_threshold(space: &WeightedSpace) -> i64 {
    (space.dim() as i64 + 1) * space.picard_index()
}

/// Smallest `e ≥ (N+1)·m` with `d + e ≡ 0 (mod m)`.
pub fn test_degree(space: &WeightedSpace, d: i64) -> i64 {
    let base = pigeonhole_threshold(space);
    base + (-d - base).rem_euclid(space.picard_index())
}

#[derive(Clone, Debug)]
pub struct SaturationResult {
    pub saturated_ideal: Ideal,
    /// Generators added to the input, in degree order, each monic and
    /// reduced against everything found before it.
    pub new_generators: Vec<Poly>,
    pub degree_bound_used: i64,
    pub complete_up_to: i64,
    /// `None` when the bound is below the largest input degree.
    pub is_fixed_point: Option<bool>,
    /// Largest input generator degree.
    pub needed_bound: i64,
}

impl SaturationResult {
    /// Turns an insufficient bound into an error.
    pub fn require_bound(&self) -> Result<()> {
        if self.is_fixed_point.is_none() {
            return Err(Error::DegreeBoundTooSmall {
                bound: self.degree_bound_used,
                needed: self.needed_bound,
            });
        }
        Ok(())
    }
}

fn check_input(ideal: &Ideal, ring: &Arc<GradedRing>) -> Result<()> {
    if **ideal.ring() != **ring {
        return Err(Error::RingMismatch);
    }
    for g in ideal.generators() {
        if g.weighted_degree()?.is_none() {
            return Err(Error::Inhomogeneous(g.to_string()));
        }
    }
    Ok(())
}

/// Degree-`d` part of `I^∞` modulo `J_d`, as polynomials in `J`-standard
/// monomials.
fn kernel_slice(j: &Ideal, space: &WeightedSpace, d: i64) -> Result<Vec<Poly>> {
    let ring = space.ring();
    let basis = j.basis().ok_or(Error::MissingBasis)?;
    let std = standard_monomials(j, d)?;
    if std.is_empty() {
        return Ok(Vec::new());
    }
    let mus = ring.monomials_of_degree(test_degree(space, d));
    let mut columns: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut cache: HashMap<Monomial, Poly> = HashMap::new();
    let mut vectors: Vec<SparseVec> = Vec::with_capacity(std.len());
    for s in &std {
        let mut v: SparseVec = Vec::new();
        for (k, mu) in mus.iter().enumerate() {
            let prod = s.mul(mu)?;
            let nf = cache
                .entry(prod.clone())
                .or_insert_with(|| basis.normal_form_monomial(&prod));
            for (m, c) in nf.terms() {
                let next = columns.len();
                let col = *columns.entry((k, m.clone())).or_insert(next);
                v.push((col, c.clone()));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        vectors.push(v);
    }
    let rels = relations(&vectors, columns.len());
    Ok(rels
        .into_iter()
        .map(|r| Poly::from_terms(ring, r.into_iter().map(|(k, c)| (std[k].clone(), c))).monic())
        .collect())
}

/// `I^∞` in degrees `0..=degree_bound` for `P(a_0,…,a_N)`.
pub fn saturate_cl_one(
    ideal: &Ideal,
    space: &WeightedSpace,
    degree_bound: i64,
    cfg: &GbConfig,
) -> Result<SaturationResult> {
    let ring = space.ring();
    check_input(ideal, ring)?;
    let needed = ideal.max_generator_degree().unwrap_or(0);
    let j = saturate_wrt(ideal, &irrelevant_ideal(space), cfg)?
        .0
        .buchberger(cfg.order, &cfg.budget)?;
    let j_basis = j.basis().ok_or(Error::MissingBasis)?;
    let degrees: Vec<i64> = (0..=degree_bound.max(-1)).collect();
    let slices = par::try_map(&degrees, |&d| {
        let mut cands: Vec<Poly> = j_basis
            .polys()
            .into_iter()
            .filter(|g| g.max_degree() == Some(d))
            .collect();
        if !j_basis.is_unit() {
            cands.extend(kernel_slice(&j, space, d)?);
        }
        Ok::<_, Error>(cands)
    })?;

    let mut current = ideal.buchberger(cfg.order, &cfg.budget)?;
    let mut new_generators = Vec::new();
    for cands in slices {
        for c in cands {
            let r = current.normal_form(&c)?;
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            current = current
                .with_generators([r.clone()])?
                .buchberger(cfg.order, &cfg.budget)?;
            new_generators.push(r);
        }
    }
    let bound_ok = degree_bound >= needed;
    Ok(SaturationResult {
        saturated_ideal: current,
        is_fixed_point: bound_ok.then_some(new_generators.is_empty()),
        new_generators,
        degree_bound_used: degree_bound,
        complete_up_to: degree_bound,
        needed_bound: needed,
    })
}

/// No new generators up to the bound. An insufficient bound is an error.
pub fn is_saturated_cl_one(
    ideal: &Ideal,
    space: &WeightedSpace,
    degree_bound: i64,
    cfg: &GbConfig,
) -> Result<bool> {
    let r = saturate_cl_one(ideal, space, degree_bound, cfg)?;
    r.require_bound()?;
    Ok(r.new_generators.is_empty())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strictness {
    Strict,
    NonStrict,
    /// Undecided with the given degree bound.
    Unknown(i64),
}

impl fmt::Display for Strictness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strictness::Strict => f.write_str("strict"),
            Strictness::NonStrict => f.write_str("non_strict"),
            Strictness::Unknown(b) => write!(f, "unknown({b})"),
        }
    }
}

/// Which check settled the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The generators are not a regular sequence.
    NotRegularSequence,
    /// Saturation produced a generator outside the ideal.
    NewGenerator,
    /// Regular sequence and `I = I^∞` up to the bound. This stands in for
    /// the radical hypothesis.
    SaturationFixedPoint,
    /// The bound is below the largest generator degree.
    BoundTooSmall,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::NotRegularSequence => "not-regular-sequence",
            Certificate::NewGenerator => "new-generator",
            Certificate::SaturationFixedPoint => "saturation-fixed-point",
            Certificate::BoundTooSmall => "bound-too-small",
        }
    }
}

#[derive(Clone, Debug)]
pub struct StrictnessReport {
    pub verdict: Strictness,
    pub certificate: Certificate,
    pub new_generators: Vec<Poly>,
}

pub fn strictness_verdict(
    x: &WciData,
    degree_bound: i64,
    cfg: &GbConfig,
) -> Result<StrictnessReport> {
    let space = x.space();
    if !is_regular_sequence(x.generators(), space.ring(), cfg)? {
        return Ok(StrictnessReport {
            verdict: Strictness::NonStrict,
            certificate: Certificate::NotRegularSequence,
            new_generators: Vec::new(),
        });
    }
    let r = saturate_cl_one(&x.ideal(), space, degree_bound, cfg)?;
    let (verdict, certificate) = match (r.new_generators.is_empty(), r.is_fixed_point) {
        (false, _) => (Strictness::NonStrict, Certificate::NewGenerator),
        (true, Some(_)) => (Strictness::Strict, Certificate::SaturationFixedPoint),
        (true, None) => (
            Strictness::Unknown(degree_bound),
            Certificate::BoundTooSmall,
        ),
    };
    Ok(StrictnessReport {
        verdict,
        certificate,
        new_generators: r.new_generators,
    })
}

/// `x·μ` reduces to zero modulo `ideal` for every given monomial.
pub fn passes_membership(x: &Poly, mus: &[Monomial], ideal: &Ideal) -> Result<bool> {
    let one = Q::one();
    for mu in mus {
        if !ideal.normal_form(&x.mul_term(mu, &one)?)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
