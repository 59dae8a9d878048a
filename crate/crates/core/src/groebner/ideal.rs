use std::sync::Arc;

use super::basis::{Budget, GbConfig, GroebnerBasis};
use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::{GradedRing, Monomial};

/// A finitely generated ideal, optionally carrying a reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<GradedRing>,
    gens: Vec<Poly>,
    basis: Option<Arc<GroebnerBasis>>,
}

impl PartialEq for Ideal {
    /// Equality of generator lists, not of ideals; see [`Ideal::same_ideal`].
    fn eq(&self, other: &Self) -> bool {
        *self.ring == *other.ring && self.gens == other.gens
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<GradedRing>, gens: Vec<Poly>) -> Result<Ideal> {
        if gens.iter().any(|g| **g.ring() != **ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            basis: None,
        })
    }

    pub fn zero(ring: &Arc<GradedRing>) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            basis: None,
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &Arc<GradedRing>) -> Ideal {
        let gens = (0..ring.nvars()).map(|i| Poly::var(ring, i)).collect();
        Ideal {
            ring: ring.clone(),
            gens,
            basis: None,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn basis(&self) -> Option<&GroebnerBasis> {
        self.basis.as_deref()
    }

    fn require_basis(&self) -> Result<&GroebnerBasis> {
        self.basis().ok_or(Error::MissingBasis)
    }

    /// Returns a copy carrying the reduced basis for `order`.
    pub fn buchberger(&self, order: MonomialOrder, budget: &Budget) -> Result<Ideal> {
        if let Some(b) = &self.basis {
            if b.order() == order {
                return Ok(self.clone());
            }
        }
        let b = GroebnerBasis::compute(&self.ring, &self.gens, order, budget)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            basis: Some(Arc::new(b)),
        })
    }

    /// Keeps any cached basis; computes one under `cfg` only if missing.
    pub fn with_basis(&self, cfg: &GbConfig) -> Result<Ideal> {
        if self.basis.is_some() {
            Ok(self.clone())
        } else {
            self.buchberger(cfg.order, &cfg.budget)
        }
    }

    /// Ideal generated by the basis itself (same ideal, basis kept).
    pub fn from_basis(basis: GroebnerBasis) -> Ideal {
        Ideal {
            ring: basis.ring().clone(),
            gens: basis.polys(),
            basis: Some(Arc::new(basis)),
        }
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        Ok(self.require_basis()?.normal_form(f))
    }

    /// Membership against the cached basis.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.require_basis()?.is_unit())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if *self.ring != *other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Poly>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// `other ⊆ self`, using the cached basis of `self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let b = self.require_basis()?;
        Ok(other.gens.iter().all(|g| b.normal_form(g).is_zero()))
    }

    /// Two-sided containment; both ideals must carry bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// Largest primary weighted degree among the generators.
    pub fn max_generator_degree(&self) -> Option<i64> {
        self.gens.iter().filter_map(|g| g.max_degree()).max()
    }

    /// True if every generator is weighted-homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.gens
            .iter()
            .all(|g| matches!(g.weighted_degree(), Ok(Some(_))))
    }
}

/// `f ∈ I`, computing a basis under `cfg` if `I` has none.
pub fn ideal_membership(f: &Poly, ideal: &Ideal, cfg: &GbConfig) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    ideal.with_basis(cfg)?.contains(f)
}

/// Ring with one extra variable in front, used for elimination.
fn with_aux_variable(ring: &Arc<GradedRing>) -> Result<Arc<GradedRing>> {
    let mut t = String::from("t");
    while ring.index_of(&t).is_some() {
        t.push('_');
    }
    let mut names = vec![t];
    names.extend(ring.names().iter().cloned());
    let mut weights = vec![1];
    weights.extend_from_slice(ring.weights());
    GradedRing::new(names, weights, None)
}

/// `I ∩ J` via `t·I + (1 − t)·J` with `t` eliminated.
pub fn intersect(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    if *a.ring != *b.ring {
        return Err(Error::RingMismatch);
    }
    let ring = &a.ring;
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ideal::zero(ring).buchberger(cfg.order, &cfg.budget);
    }
    let ext = with_aux_variable(ring)?;
    let shift: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Poly::var(&ext, 0);
    let one_minus_t = &Poly::one(&ext) - &t;
    let mut gens = Vec::with_capacity(a.gens.len() + b.gens.len());
    for g in &a.gens {
        gens.push(t.checked_mul(&g.embed(&ext, &shift))?);
    }
    for g in &b.gens {
        gens.push(one_minus_t.checked_mul(&g.embed(&ext, &shift))?);
    }
    let eb = GroebnerBasis::compute(&ext, &gens, MonomialOrder::Elimination(1), &cfg.budget)?;
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.nvars()).collect();
    let kept: Vec<Poly> = eb
        .polys()
        .into_iter()
        .filter(|p| p.supported_in(|i| i != 0))
        .map(|p| p.embed(ring, &back))
        .collect();
    Ideal::new(ring, kept)?.buchberger(cfg.order, &cfg.budget)
}

/// Exact quotient `h / f`; `f` must divide `h`.
fn exact_div(h: &Poly, f: &Poly) -> Result<Poly> {
    let ring = h.ring();
    let (lf, cf) = f.terms().first().ok_or(Error::ZeroPolynomial)?;
    let mut rest = h.clone();
    let mut quot = Vec::new();
    while let Some((lh, ch)) = rest.terms().first().cloned() {
        if !lf.divides(&lh) {
            return Err(Error::InvalidInput(format!("{f} does not divide {h}")));
        }
        let m = lf.quotient_of(&lh);
        let c = ch / cf;
        rest = &rest - &f.mul_term(&m, &c)?;
        quot.push((m, c));
    }
    Ok(Poly::from_terms(ring, quot))
}

/// `(I : f) = {g : g·f ∈ I}`, computed as `(I ∩ (f)) / f`.
pub fn colon_ideal(ideal: &Ideal, f: &Poly, cfg: &GbConfig) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ring = &ideal.ring;
    if f.is_constant() {
        return ideal.buchberger(cfg.order, &cfg.budget);
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let cap = intersect(ideal, &principal, cfg)?;
    let quot = cap
        .basis()
        .expect("intersection carries a basis")
        .polys()
        .iter()
        .map(|h| exact_div(h, f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, quot)?.buchberger(cfg.order, &cfg.budget)
}

/// `(I : J) = ∩_g (I : g)` over the generators of `J`.
pub fn colon_by_ideal(ideal: &Ideal, by: &Ideal, cfg: &GbConfig) -> Result<Ideal> {
    let mut gens = by.gens.iter();
    let first = gens
        .next()
        .ok_or_else(|| Error::InvalidInput("colon by the zero ideal".into()))?;
    let mut acc = colon_ideal(ideal, first, cfg)?;
    for g in gens {
        acc = intersect(&acc, &colon_ideal(ideal, g, cfg)?, cfg)?;
    }
    Ok(acc)
}

/// `(I : J^∞)` by iterating `S ← (S : J)` until `(S : J) ⊆ S`. Returns the
/// saturation and the number of colon rounds performed.
pub fn saturate_wrt(ideal: &Ideal, by: &Ideal, cfg: &GbConfig) -> Result<(Ideal, usize)> {
    if by.is_zero_ideal() {
        return Err(Error::InvalidInput("saturation by the zero ideal".into()));
    }
    let mut current = ideal.buchberger(cfg.order, &cfg.budget)?;
    let mut steps = 0;
    loop {
        let next = colon_by_ideal(&current, by, cfg)?;
        steps += 1;
        if current.contains_ideal(&next)? {
            return Ok((current, steps));
        }
        current = next;
    }
}

/// Krull dimension of `R/I`: the largest set of variables containing the
/// support of no leading monomial. The unit ideal has dimension −1.
pub fn krull_dim(ideal: &Ideal) -> Result<i64> {
    let b = ideal.require_basis()?;
    if b.is_unit() {
        return Ok(-1);
    }
    let masks: Vec<u64> = b
        .leading_monomials()
        .iter()
        .map(Monomial::support_mask)
        .collect();
    Ok(max_independent_set(ideal.ring.nvars(), &masks)? as i64)
}

/// Size of the largest subset `S ⊆ {0..n}` such that no mask is contained
/// in `S`. Exhaustive over all subsets.
pub(crate) fn max_independent_set(n: usize, masks: &[u64]) -> Result<usize> {
    if n > 26 {
        return Err(Error::BudgetExceeded {
            what: "variables for subset search",
            limit: 26,
        });
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    for s in 0..=full {
        let size = s.count_ones() as usize;
        if size > best && masks.iter().all(|&m| m & !s != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// True iff `fs` is a regular sequence, i.e. the ideal they generate has
/// codimension equal to their number (the ambient ring is Cohen–Macaulay
/// and the `fs` are weighted-homogeneous).
pub fn is_regular_sequence(fs: &[Poly], ring: &Arc<GradedRing>, cfg: &GbConfig) -> Result<bool> {
    for f in fs {
        if f.weighted_degree()?.is_none() {
            return Err(Error::Inhomogeneous(f.to_string()));
        }
    }
    if fs.is_empty() {
        return Ok(true);
    }
    let ideal = Ideal::new(ring, fs.to_vec())?.buchberger(cfg.order, &cfg.budget)?;
    let dim = krull_dim(&ideal)?;
    Ok(dim == ring.nvars() as i64 - fs.len() as i64)
}

/// Dimension of `(R/I)_degree`: the number of standard monomials of that
/// weighted degree.
pub fn hilbert_component_dim(ideal: &Ideal, degree: i64) -> Result<usize> {
    let b = ideal.require_basis()?;
    Ok(ideal
        .ring
        .monomials_of_degree(degree)
        .iter()
        .filter(|m| b.is_standard(m))
        .count())
}

/// Standard monomials of the given weighted degree, largest first.
pub fn standard_monomials(ideal: &Ideal, degree: i64) -> Result<Vec<Monomial>> {
    let b = ideal.require_basis()?;
    Ok(ideal
        .ring
        .monomials_of_degree(degree)
        .into_iter()
        .filter(|m| b.is_standard(m))
        .collect())
}
