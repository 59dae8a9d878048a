//! Exact multivariate polynomials over the rationals.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{GradedRing, Monomial};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial in a [`GradedRing`].
///
/// Terms are kept sorted by weighted graded reverse lexicographic order,
/// largest first, with no zero coefficients; equal polynomials therefore
/// have identical term lists.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<GradedRing>,
    terms: Vec<(Monomial, Q)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ring == *other.ring
    }
}

impl Eq for Poly {}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<GradedRing>, c: Q) -> Self {
        Poly::term(ring, ring.one(), c)
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Poly::constant(ring, Q::one())
    }

    pub fn term(ring: &Arc<GradedRing>, m: Monomial, c: Q) -> Self {
        assert_eq!(m.len(), ring.nvars(), "monomial length");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Arc<GradedRing>, index: usize) -> Self {
        Poly::term(ring, Monomial::var(ring.nvars(), index), Q::one())
    }

    /// Collects arbitrary (possibly repeated, possibly zero) terms into
    /// canonical form.
    pub fn from_terms(
        ring: &Arc<GradedRing>,
        terms: impl IntoIterator<Item = (Monomial, Q)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length");
            *acc.entry(m).or_insert_with(Q::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_grevlex(&b.0, &a.0));
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Q)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms
            .binary_search_by(|(t, _)| self.ring.cmp_grevlex(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    fn same_ring(&self, other: &Poly) {
        assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring,
            "polynomials from different rings"
        );
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Q) -> Result<Poly> {
        if c.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        // multiplication by a monomial preserves the order
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.mul(m)?, a * c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other);
        let mut acc: HashMap<Monomial, Q> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)?).or_insert_with(Q::zero) += ca * cb;
            }
        }
        Ok(Poly::from_terms(&self.ring, acc))
    }

    pub fn pow(&self, mut e: u32) -> Result<Poly> {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn merge(&self, other: &Poly, sign: &Q) -> Poly {
        self.same_ring(other);
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ring.cmp_grevlex(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb * sign));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb * sign;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), c * sign)));
        Poly {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Primary weighted degree: `Ok(Some(d))` if every term has degree `d`,
    /// `Ok(None)` if the polynomial is inhomogeneous.
    pub fn weighted_degree(&self) -> Result<Option<i64>> {
        let mut degs = self.terms.iter().map(|(m, _)| self.ring.degree(m));
        let first = degs.next().ok_or(Error::ZeroPolynomial)?;
        Ok(degs.all(|d| d == first).then_some(first))
    }

    /// Like [`Poly::weighted_degree`] but turns inhomogeneity into an error.
    pub fn homogeneous_degree(&self) -> Result<i64> {
        self.weighted_degree()?
            .ok_or_else(|| Error::Inhomogeneous(self.to_string()))
    }

    /// Largest primary weighted degree among the terms.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| self.ring.degree(m)).max()
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Poly> {
        let index = self
            .ring
            .index_of(var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        Ok(self.partial(index))
    }

    pub fn partial(&self, index: usize) -> Poly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exps()[index];
            (e > 0).then(|| {
                let mut exps = m.exps().to_vec();
                exps[index] -= 1;
                (Monomial::new(exps), c * q(e as i64))
            })
        });
        Poly::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.ring.nvars());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exps().iter().zip(point).fold(c.clone(), |acc, (&e, x)| {
                    acc * num::pow(x.clone(), e as usize)
                })
            })
            .fold(Q::zero(), |a, b| a + b)
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `map[i]`.
    pub fn embed(&self, target: &Arc<GradedRing>, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.ring.nvars());
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0u32; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                exps[map[i]] += e;
            }
            (Monomial::new(exps), c.clone())
        });
        Poly::from_terms(target, terms)
    }

    /// True if every variable in the support has index in `allowed`.
    pub fn supported_in(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.terms.iter().all(|(m, _)| {
            m.exps()
                .iter()
                .enumerate()
                .all(|(i, &e)| e == 0 || allowed(i))
        })
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.merge(rhs, &Q::one())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.merge(rhs, &-Q::one())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    /// Panics on exponent overflow; use [`Poly::checked_mul`] to handle it.
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub(crate) fn fmt_rational(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn fmt_monomial(ring: &GradedRing, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (name, &e) in ring.names().iter().zip(m.exps()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                f.write_str(&fmt_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&fmt_monomial(&self.ring, m))?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), fmt_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring1136() -> Arc<GradedRing> {
        GradedRing::with_weights(&[1, 1, 3, 6]).unwrap()
    }

    #[test]
    fn weighted_degrees() {
        let r = ring1136();
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("x0^3").weighted_degree(), Ok(Some(3)));
        assert_eq!(p("x2 + x0^3").weighted_degree(), Ok(Some(3)));
        assert_eq!(p("x0 + x2").weighted_degree(), Ok(None));
        assert_eq!(Poly::zero(&r).weighted_degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn derivatives() {
        let r = GradedRing::with_weights(&[1, 1, 2, 3]).unwrap();
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("x3^2").partial_derivative("x3").unwrap(), p("2*x3"));
        assert_eq!(
            p("x0^6 + x1^6 + x2^3 + x3^2")
                .partial_derivative("x2")
                .unwrap(),
            p("3*x2^2")
        );
        assert_eq!(
            p("x0").partial_derivative("z"),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn euler_identity_for_x0_x1_to_the_4() {
        let r = GradedRing::with_weights(&[1, 2, 2, 3]).unwrap();
        let f = parse_poly("x0*x1^4", &r).unwrap();
        let d = f.homogeneous_degree().unwrap();
        assert_eq!(d, 9);
        let mut lhs = Poly::zero(&r);
        for i in 0..4 {
            let xi = Poly::var(&r, i);
            lhs = &lhs + &(&xi * &f.partial(i)).scale(&q(r.weights()[i]));
        }
        assert_eq!(lhs, f.scale(&q(d)));
    }

    #[test]
    fn negative_square_expansion() {
        let r = ring1136();
        let p = parse_poly("2*x0*x1 - x0^2 - x1^2", &r).unwrap();
        let diff = &Poly::var(&r, 0) - &Poly::var(&r, 1);
        assert_eq!(p, -(&diff * &diff));
        assert_eq!(p.to_string(), "-x0^2 + 2*x0*x1 - x1^2");
    }

    #[test]
    fn printing() {
        let r = ring1136();
        let p = |s| parse_poly(s, &r).unwrap();
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("-3/2").to_string(), "-3/2");
        assert_eq!(p("x1^3 + x0^3").to_string(), "x0^3 + x1^3");
        assert_eq!(p("x2 + 1/2*x0^3 - 4").to_string(), "1/2*x0^3 + x2 - 4");
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let r = GradedRing::with_weights(&[1]).unwrap();
        let big = Poly::term(&r, Monomial::new(vec![u32::MAX]), q(1));
        assert_eq!(
            big.checked_mul(&Poly::var(&r, 0)),
            Err(Error::ExponentOverflow)
        );
    }

    #[test]
    fn evaluation() {
        let r = GradedRing::with_weights(&[1, 1, 2, 3]).unwrap();
        let f = parse_poly("x0^6 + x1^6 + x2^3 + x3^2", &r).unwrap();
        assert_eq!(f.eval(&[q(0), q(0), q(1), q(0)]), q(1));
        assert_eq!(f.eval(&[q(1), q(-1), q(0), q(2)]), q(6));
    }
}
