//! Buchberger's algorithm with sugar pair selection, the coprime and chain
//! criteria, and final interreduction.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use num::{One, Zero};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{Poly, Q};
use crate::ring::{GradedRing, Monomial};

/// Resource limits for a basis computation. Exceeding a limit is an error,
/// never a silently truncated basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of reduction steps (one step = one subtraction of a
    /// monomial multiple of a basis element).
    pub max_steps: u64,
    /// Maximum number of elements the working basis may reach.
    pub max_basis: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_steps: 5_000_000,
            max_basis: 5_000,
        }
    }
}

/// Order plus budget: everything a basis computation needs besides input.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct GbConfig {
    pub order: MonomialOrder,
    pub budget: Budget,
}

impl GbConfig {
    pub fn with_order(order: MonomialOrder) -> Self {
        GbConfig {
            order,
            budget: Budget::default(),
        }
    }
}

/// Monomial paired with its order key; ordered by the key alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct OMono {
    key: Box<[i64]>,
    mono: Monomial,
}

impl Ord for OMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for OMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl OMono {
    fn new(order: MonomialOrder, weights: &[i64], mono: Monomial) -> Self {
        OMono {
            key: order.key(weights, mono.exps()),
            mono,
        }
    }

    fn mul(&self, other: &OMono) -> Result<OMono> {
        Ok(OMono {
            key: self
                .key
                .iter()
                .zip(other.key.iter())
                .map(|(a, b)| a + b)
                .collect(),
            mono: self.mono.mul(&other.mono)?,
        })
    }

    /// `other / self`, assuming divisibility.
    fn quotient_of(&self, other: &OMono) -> OMono {
        OMono {
            key: other
                .key
                .iter()
                .zip(self.key.iter())
                .map(|(a, b)| a - b)
                .collect(),
            mono: self.mono.quotient_of(&other.mono),
        }
    }
}

type Terms = BTreeMap<OMono, Q>;

/// Monic basis element: leading monomial plus tail in decreasing order.
#[derive(Clone, Debug)]
pub(crate) struct Elem {
    lead: OMono,
    mask: u64,
    tail: Vec<(OMono, Q)>,
    sugar: i64,
}

impl Elem {
    fn from_terms(mut t: Terms, sugar: i64) -> Option<Elem> {
        let (lead, lc) = t.pop_last()?;
        let inv = lc.recip();
        let tail = t.into_iter().rev().map(|(m, c)| (m, c * &inv)).collect();
        Some(Elem {
            mask: lead.mono.support_mask(),
            lead,
            tail,
            sugar,
        })
    }

    fn to_terms(&self) -> Terms {
        let mut t: Terms = self.tail.iter().cloned().collect();
        t.insert(self.lead.clone(), Q::one());
        t
    }
}

fn find_reducer<'a>(elems: &'a [Elem], m: &OMono) -> Option<&'a Elem> {
    let mask = m.mono.support_mask();
    elems
        .iter()
        .find(|g| g.mask & !mask == 0 && g.lead.mono.divides(&m.mono))
}

/// Subtracts `c · q · g` from `h`, where the lead of `q·g` has already been
/// removed from `h`.
fn sub_tail(h: &mut Terms, c: &Q, q: &OMono, g: &Elem) -> Result<()> {
    for (t, a) in &g.tail {
        let m = t.mul(q)?;
        let delta = c * a;
        match h.get_mut(&m) {
            Some(v) => {
                *v -= delta;
                if v.is_zero() {
                    h.remove(&m);
                }
            }
            None => {
                h.insert(m, -delta);
            }
        }
    }
    Ok(())
}

struct StepCounter {
    used: u64,
    limit: Option<u64>,
}

impl StepCounter {
    fn unlimited() -> Self {
        StepCounter {
            used: 0,
            limit: None,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Error::BudgetExceeded {
                what: "reduction steps",
                limit: l,
            }),
            _ => Ok(()),
        }
    }
}

/// Full reduction of `h` against `elems`.
fn reduce(mut h: Terms, elems: &[Elem], steps: &mut StepCounter) -> Result<Terms> {
    let mut rem = Terms::new();
    while let Some((m, c)) = h.pop_last() {
        match find_reducer(elems, &m) {
            Some(g) => {
                let q = g.lead.quotient_of(&m);
                sub_tail(&mut h, &c, &q, g)?;
                steps.tick()?;
            }
            None => {
                rem.insert(m, c);
            }
        }
    }
    Ok(rem)
}

fn sugar_of(weights: &[i64], t: &Terms) -> i64 {
    t.keys()
        .map(|m| m.mono.weighted_degree(weights))
        .max()
        .unwrap_or(0)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: i64,
    lcm: Box<[i64]>,
    i: usize,
    j: usize,
}

/// A reduced Gröbner basis together with the ring and order it belongs to.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<GradedRing>,
    order: MonomialOrder,
    elems: Vec<Elem>,
    steps_used: u64,
}

impl GroebnerBasis {
    /// Runs Buchberger's algorithm on `gens` and returns the reduced basis,
    /// sorted by increasing leading monomial.
    pub fn compute(
        ring: &Arc<GradedRing>,
        gens: &[Poly],
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<GroebnerBasis> {
        let weights = ring.weights();
        let mut steps = StepCounter {
            used: 0,
            limit: Some(budget.max_steps),
        };
        let mut elems: Vec<Elem> = Vec::new();
        for g in gens {
            let t = to_terms(order, weights, g);
            let sugar = sugar_of(weights, &t);
            if let Some(e) = Elem::from_terms(t, sugar) {
                elems.push(e);
            }
        }

        let mut queue: BTreeSet<Pair> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();
        let make_pair = |elems: &[Elem], i: usize, j: usize| {
            let (a, b) = (&elems[i], &elems[j]);
            let lcm = OMono::new(order, weights, a.lead.mono.lcm(&b.lead.mono));
            let dl = lcm.mono.weighted_degree(weights);
            let sa = a.sugar + dl - a.lead.mono.weighted_degree(weights);
            let sb = b.sugar + dl - b.lead.mono.weighted_degree(weights);
            Pair {
                sugar: sa.max(sb),
                lcm: lcm.key,
                i,
                j,
            }
        };
        for j in 0..elems.len() {
            for i in 0..j {
                queue.insert(make_pair(&elems, i, j));
                pending.insert((i, j));
            }
        }

        while let Some(pair) = queue.pop_first() {
            let (i, j) = (pair.i, pair.j);
            pending.remove(&(i, j));
            let (a, b) = (&elems[i], &elems[j]);
            if a.lead.mono.is_coprime(&b.lead.mono) {
                continue;
            }
            let lcm = a.lead.mono.lcm(&b.lead.mono);
            let chain = (0..elems.len()).any(|k| {
                k != i
                    && k != j
                    && elems[k].lead.mono.divides(&lcm)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let lcm = OMono::new(order, weights, lcm);
            let qa = a.lead.quotient_of(&lcm);
            let qb = b.lead.quotient_of(&lcm);
            let mut s = Terms::new();
            for (t, c) in &a.tail {
                s.insert(t.mul(&qa)?, c.clone());
            }
            sub_tail(&mut s, &Q::one(), &qb, b)?;
            let h = reduce(s, &elems, &mut steps)?;
            if let Some(e) = Elem::from_terms(h, pair.sugar) {
                if elems.len() >= budget.max_basis {
                    return Err(Error::BudgetExceeded {
                        what: "basis size",
                        limit: budget.max_basis as u64,
                    });
                }
                elems.push(e);
                let n = elems.len() - 1;
                for k in 0..n {
                    queue.insert(make_pair(&elems, k, n));
                    pending.insert((k, n));
                }
            }
        }

        let elems = interreduce(elems, &mut steps)?;
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order,
            elems,
            steps_used: steps.used,
        })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Reduction steps spent computing this basis.
    pub fn steps_used(&self) -> u64 {
        self.steps_used
    }

    /// True if the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|e| e.lead.mono.is_one())
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.elems
            .iter()
            .map(|e| self.to_poly(e.to_terms()))
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|e| e.lead.mono.clone()).collect()
    }

    /// True if no leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        let mask = m.support_mask();
        !self
            .elems
            .iter()
            .any(|g| g.mask & !mask == 0 && g.lead.mono.divides(m))
    }

    fn to_poly(&self, t: Terms) -> Poly {
        Poly::from_terms(&self.ring, t.into_iter().map(|(m, c)| (m.mono, c)))
    }

    /// Unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert!(**f.ring() == *self.ring, "polynomial from a different ring");
        let t = to_terms(self.order, self.ring.weights(), f);
        let r = reduce(t, &self.elems, &mut StepCounter::unlimited())
            .expect("exponent overflow during normal form");
        self.to_poly(r)
    }

    /// Normal form of a single monomial.
    pub fn normal_form_monomial(&self, m: &Monomial) -> Poly {
        self.normal_form(&Poly::term(&self.ring, m.clone(), Q::one()))
    }

    /// Checks the defining property directly: every S-polynomial of a pair
    /// of basis elements reduces to zero.
    pub fn spolys_reduce_to_zero(&self) -> bool {
        let w = self.ring.weights();
        for j in 0..self.elems.len() {
            for i in 0..j {
                let (a, b) = (&self.elems[i], &self.elems[j]);
                let lcm = OMono::new(self.order, w, a.lead.mono.lcm(&b.lead.mono));
                let qa = a.lead.quotient_of(&lcm);
                let qb = b.lead.quotient_of(&lcm);
                let mut s = Terms::new();
                for (t, c) in &a.tail {
                    s.insert(t.mul(&qa).expect("overflow"), c.clone());
                }
                sub_tail(&mut s, &Q::one(), &qb, b).expect("overflow");
                if !reduce(s, &self.elems, &mut StepCounter::unlimited())
                    .expect("overflow")
                    .is_empty()
                {
                    return false;
                }
            }
        }
        true
    }

    /// Reducedness: no leading monomial divides any other term of the basis.
    pub fn is_reduced(&self) -> bool {
        self.elems.iter().enumerate().all(|(i, e)| {
            self.elems.iter().enumerate().all(|(j, g)| {
                (i == j || !g.lead.mono.divides(&e.lead.mono))
                    && e.tail.iter().all(|(t, _)| !g.lead.mono.divides(&t.mono))
            })
        })
    }
}

pub(crate) fn to_terms(order: MonomialOrder, weights: &[i64], f: &Poly) -> Terms {
    f.terms()
        .iter()
        .map(|(m, c)| (OMono::new(order, weights, m.clone()), c.clone()))
        .collect()
}

fn interreduce(mut elems: Vec<Elem>, steps: &mut StepCounter) -> Result<Vec<Elem>> {
    elems.sort_by(|a, b| a.lead.cmp(&b.lead));
    let mut minimal: Vec<Elem> = Vec::new();
    for e in elems {
        if !minimal.iter().any(|g| g.lead.mono.divides(&e.lead.mono)) {
            minimal.push(e);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Elem> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce(minimal[i].to_terms(), &others, steps)?;
        let e =
            Elem::from_terms(r, minimal[i].sugar).expect("minimal element cannot reduce to zero");
        debug_assert_eq!(e.lead, minimal[i].lead);
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn gb(ring: &Arc<GradedRing>, gens: &[&str], order: MonomialOrder) -> GroebnerBasis {
        let polys: Vec<Poly> = gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect();
        GroebnerBasis::compute(ring, &polys, order, &Budget::default()).unwrap()
    }

    fn as_strings(b: &GroebnerBasis) -> Vec<String> {
        b.polys().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = GradedRing::with_weights(&[1, 1, 3, 6]).unwrap();
        for order in [MonomialOrder::WeightedGrevlex, MonomialOrder::Lex] {
            let b = gb(&r, &["x0^3", "x1^3"], order);
            let mut s = as_strings(&b);
            s.sort();
            assert_eq!(s, vec!["x0^3", "x1^3"]);
        }
    }

    #[test]
    fn linear_elimination() {
        let r = GradedRing::with_weights(&[1, 1, 1]).unwrap();
        let b = gb(&r, &["x0 - x1", "x1 - x2"], MonomialOrder::Lex);
        assert_eq!(as_strings(&b), vec!["x1 - x2", "x0 - x2"]);
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = crate::ring::make_ring(&["x", "y", "z"], &[1, 1, 1], None).unwrap();
        let b = gb(&r, &["y - x^2", "z - x^3"], MonomialOrder::Lex);
        let z2y3 = parse_poly("z^2 - y^3", &r).unwrap();
        assert!(b.polys().iter().any(|p| *p == z2y3 || *p == -&z2y3));
        assert!(b.spolys_reduce_to_zero());
        assert!(b.is_reduced());
        // substitution x = t, y = t^2, z = t^3 kills every element
        for p in b.polys() {
            for t in [-2i64, 3, 5] {
                let pt = [
                    crate::poly::q(t),
                    crate::poly::q(t * t),
                    crate::poly::q(t * t * t),
                ];
                assert!(p.eval(&pt).is_zero());
            }
        }
    }

    #[test]
    fn normal_forms() {
        let r = GradedRing::with_weights(&[1, 1, 3, 6]).unwrap();
        let b = gb(&r, &["x0^3", "x1^3"], MonomialOrder::WeightedGrevlex);
        let nf = |s| b.normal_form(&parse_poly(s, &r).unwrap()).to_string();
        assert_eq!(nf("x0^3"), "0");
        assert_eq!(nf("x0^2*x1^2"), "x0^2*x1^2");
        assert_eq!(nf("x0^4 + x0*x1^3"), "0");
        assert_eq!(nf("x0^4 + x2"), "x2");
    }

    #[test]
    fn unit_ideal() {
        let r = GradedRing::with_weights(&[1, 1]).unwrap();
        let b = gb(&r, &["x0 + 1", "x0"], MonomialOrder::WeightedGrevlex);
        assert!(b.is_unit());
        assert_eq!(as_strings(&b), vec!["1"]);
    }

    #[test]
    fn step_budget_is_enforced() {
        let r = crate::ring::make_ring(&["x", "y", "z"], &[1, 1, 1], None).unwrap();
        let polys: Vec<Poly> = ["x^3 - y*z^2 + 1", "y^3 - x^2*z", "z^3 - x*y + 2"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        let tiny = Budget {
            max_steps: 3,
            max_basis: 1000,
        };
        assert!(matches!(
            GroebnerBasis::compute(&r, &polys, MonomialOrder::Lex, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
        let small_basis = Budget {
            max_steps: u64::MAX,
            max_basis: 3,
        };
        assert!(matches!(
            GroebnerBasis::compute(&r, &polys, MonomialOrder::Lex, &small_basis),
            Err(Error::BudgetExceeded {
                what: "basis size",
                ..
            })
        ));
    }
}
