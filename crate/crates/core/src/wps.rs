//! Weighted projective spaces and checks on weighted complete intersections.
//!
//! Dimensions of projective subschemes are affine-cone dimensions minus
//! one; a cone of dimension ≤ 0 is the empty scheme, encoded as
//! [`ProjDim::Empty`] rather than a negative number.
//!
//! The singular locus of a well-formed `P(a_0,…,a_N)` is the union of the
//! coordinate strata `Π_S = {x_i = 0 for i ∉ S}` over supports `S` whose
//! weights share a common factor. We list each such closed stratum once, as
//! `S = {i : g | a_i}` together with `g = gcd{a_i : i ∈ S} > 1`.

use std::fmt;
use std::sync::Arc;

use num::integer::{gcd, lcm};

use crate::error::{Error, Result};
use crate::groebner::{is_regular_sequence, krull_dim, GbConfig, Ideal};
use crate::par;
use crate::poly::Poly;
use crate::ring::GradedRing;

/// `P(a_0, …, a_N)` with its Cox ring `R^ρ`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSpace {
    weights: Vec<i64>,
    picard_index: i64,
    ring: Arc<GradedRing>,
}

impl WeightedSpace {
    /// Variables are named `x0, …, xN`.
    pub fn new(weights: &[i64]) -> Result<Self> {
        Self::from_ring(GradedRing::with_weights(weights)?)
    }

    pub fn from_ring(ring: Arc<GradedRing>) -> Result<Self> {
        let weights = ring.weights().to_vec();
        if weights.len() < 2 {
            return Err(Error::InvalidInput(
                "a weighted projective space needs at least two weights".into(),
            ));
        }
        let picard_index = weights.iter().fold(1, |m, &a| lcm(m, a));
        Ok(WeightedSpace {
            weights,
            picard_index,
            ring,
        })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `m = lcm(a_0, …, a_N)`, the index of `Pic` in `Cl ≅ ℤ`.
    pub fn picard_index(&self) -> i64 {
        self.picard_index
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    /// `N`, the projective dimension.
    pub fn dim(&self) -> usize {
        self.weights.len() - 1
    }
}

impl fmt::Display for WeightedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({})", join(&self.weights))
    }
}

pub(crate) fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Every `N` of the `N + 1` weights are coprime.
pub fn is_well_formed_space(space: &WeightedSpace) -> bool {
    weights_well_formed(&space.weights)
}

pub(crate) fn weights_well_formed(w: &[i64]) -> bool {
    (0..w.len()).all(|skip| {
        w.iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .fold(0, |g, (_, &a)| gcd(g, a))
            == 1
    })
}

/// A closed coordinate stratum of `Sing(P(ρ))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Stratum {
    pub support: Vec<usize>,
    pub gcd_value: i64,
}

/// Closed singular strata, sorted by support.
pub fn singular_strata(space: &WeightedSpace) -> Result<Vec<Stratum>> {
    if !is_well_formed_space(space) {
        return Err(Error::NotWellFormed(join(&space.weights)));
    }
    Ok(strata_of(&space.weights))
}

pub(crate) fn strata_of(w: &[i64]) -> Vec<Stratum> {
    let mut out: Vec<Stratum> = Vec::new();
    for &a in w {
        for g in 2..=a {
            if a % g != 0 {
                continue;
            }
            let support: Vec<usize> = (0..w.len()).filter(|&i| w[i] % g == 0).collect();
            let gcd_value = support.iter().fold(0, |acc, &i| gcd(acc, w[i]));
            let s = Stratum { support, gcd_value };
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// Dimension of a projective scheme; the empty scheme has no dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ProjDim {
    Empty,
    Dim(i64),
}

impl ProjDim {
    /// From the Krull dimension of the affine cone.
    pub fn from_cone(krull: i64) -> ProjDim {
        if krull <= 0 {
            ProjDim::Empty
        } else {
            ProjDim::Dim(krull - 1)
        }
    }
}

impl fmt::Display for ProjDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjDim::Empty => f.write_str("empty"),
            ProjDim::Dim(d) => write!(f, "{d}"),
        }
    }
}

/// A weighted complete intersection candidate: explicit generators in
/// `R^ρ` and their degrees.
#[derive(Clone, Debug)]
pub struct WciData {
    space: WeightedSpace,
    gens: Vec<Poly>,
    multidegree: Vec<i64>,
}

impl WciData {
    pub fn new(space: WeightedSpace, gens: Vec<Poly>) -> Result<Self> {
        let mut multidegree = Vec::with_capacity(gens.len());
        for g in &gens {
            if **g.ring() != **space.ring() {
                return Err(Error::RingMismatch);
            }
            let d = g.homogeneous_degree()?;
            if d < 1 {
                return Err(Error::InvalidInput(format!(
                    "generator {g} has degree {d} < 1"
                )));
            }
            multidegree.push(d);
        }
        Ok(WciData {
            space,
            gens,
            multidegree,
        })
    }

    pub fn space(&self) -> &WeightedSpace {
        &self.space
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn multidegree(&self) -> &[i64] {
        &self.multidegree
    }

    pub fn codim(&self) -> usize {
        self.gens.len()
    }

    /// Expected dimension `N − c`.
    pub fn expected_dim(&self) -> i64 {
        self.space.dim() as i64 - self.codim() as i64
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.space.ring(), self.gens.clone()).expect("same ring")
    }
}

fn cone_dim(ideal: &Ideal, cfg: &GbConfig) -> Result<i64> {
    krull_dim(&ideal.buchberger(cfg.order, &cfg.budget)?)
}

/// `dim(X ∩ Π_S)`.
pub fn stratum_intersection_dim(x: &WciData, stratum: &Stratum, cfg: &GbConfig) -> Result<ProjDim> {
    let ring = x.space.ring();
    let extra = (0..ring.nvars())
        .filter(|i| !stratum.support.contains(i))
        .map(|i| Poly::var(ring, i));
    Ok(ProjDim::from_cone(cone_dim(
        &x.ideal().with_generators(extra)?,
        cfg,
    )?))
}

pub fn projective_dim(x: &WciData, cfg: &GbConfig) -> Result<ProjDim> {
    Ok(ProjDim::from_cone(cone_dim(&x.ideal(), cfg)?))
}

/// `det` of a square matrix of polynomials by cofactor expansion.
fn determinant(m: &[Vec<Poly>], ring: &Arc<GradedRing>) -> Result<Poly> {
    match m.len() {
        0 => Ok(Poly::one(ring)),
        1 => Ok(m[0][0].clone()),
        n => {
            let mut acc = Poly::zero(ring);
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][col].checked_mul(&determinant(&minor, ring)?)?;
                acc = if col % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            Ok(acc)
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Maximal minors of the Jacobian matrix `(∂f_j/∂x_i)`.
pub fn jacobian_minors(fs: &[Poly], ring: &Arc<GradedRing>) -> Result<Vec<Poly>> {
    let jac: Vec<Vec<Poly>> = fs
        .iter()
        .map(|f| (0..ring.nvars()).map(|i| f.partial(i)).collect())
        .collect();
    let mut out = Vec::new();
    for cols in combinations(ring.nvars(), fs.len()) {
        let sub: Vec<Vec<Poly>> = jac
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let d = determinant(&sub, ring)?;
        if !d.is_zero() {
            out.push(d);
        }
    }
    Ok(out)
}

fn require_complete_intersection(x: &WciData, cfg: &GbConfig) -> Result<()> {
    let ring = x.space.ring();
    if !is_regular_sequence(&x.gens, ring, cfg)? {
        let got = cone_dim(&x.ideal(), cfg)?;
        return Err(Error::NotCompleteIntersection {
            expected: x.codim() as i64,
            got: ring.nvars() as i64 - got,
        });
    }
    Ok(())
}

/// The affine cone is smooth away from the origin: the ideal plus the
/// maximal Jacobian minors has cone dimension ≤ 0.
pub fn is_quasi_smooth(x: &WciData, cfg: &GbConfig) -> Result<bool> {
    require_complete_intersection(x, cfg)?;
    let ring = x.space.ring();
    let sing = x.ideal().with_generators(jacobian_minors(&x.gens, ring)?)?;
    Ok(cone_dim(&sing, cfg)? <= 0)
}

fn codim_in_x_at_least_two(dim_x: ProjDim, meets: ProjDim) -> bool {
    match (dim_x, meets) {
        (_, ProjDim::Empty) => true,
        (ProjDim::Empty, _) => true,
        (ProjDim::Dim(a), ProjDim::Dim(b)) => a - b >= 2,
    }
}

/// `codim_X(X ∩ Sing P(ρ)) ≥ 2`.
pub fn is_well_formed_subscheme(x: &WciData, cfg: &GbConfig) -> Result<bool> {
    let strata = singular_strata(&x.space)?;
    let dim_x = projective_dim(x, cfg)?;
    let dims = par::try_map(&strata, |s| stratum_intersection_dim(x, s, cfg))?;
    let worst = dims.into_iter().max().unwrap_or(ProjDim::Empty);
    Ok(codim_in_x_at_least_two(dim_x, worst))
}

/// Smooth and well-formed: ambient well-formed, quasi-smooth, and disjoint
/// from every singular stratum.
pub fn is_smooth_well_formed(x: &WciData, cfg: &GbConfig) -> Result<bool> {
    if !is_well_formed_space(&x.space) {
        return Ok(false);
    }
    if !is_quasi_smooth(x, cfg)? {
        return Ok(false);
    }
    for s in strata_of(x.space.weights()) {
        if stratum_intersection_dim(x, &s, cfg)? != ProjDim::Empty {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KodairaClass {
    GeneralType,
    CalabiYau,
    Fano,
}

impl KodairaClass {
    pub fn of_canonical_degree(alpha: i64) -> KodairaClass {
        match alpha.signum() {
            1 => KodairaClass::GeneralType,
            0 => KodairaClass::CalabiYau,
            _ => KodairaClass::Fano,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            KodairaClass::GeneralType => "general-type",
            KodairaClass::CalabiYau => "calabi-yau",
            KodairaClass::Fano => "fano",
        }
    }
}

impl fmt::Display for KodairaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Adjunction data for `X`. The numeric fields are always filled in; the
/// `*_valid` flags say whether the hypotheses behind them hold for the
/// supplied generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReport {
    /// `α = Σ d_j − Σ a_i`, so that `ω_X ≅ O_X(α)`.
    pub canonical_degree: i64,
    pub kodaira_class: KodairaClass,
    /// `|{i : a_i = 1}|`.
    pub h0_o1: i64,
    pub linear_system_dim: i64,
    /// Some `a_i` equals some `d_j`.
    pub linear_cone: bool,
    /// Some `d_j = 1`.
    pub degenerate: bool,
    pub ambient_well_formed: bool,
    pub well_formed: bool,
    pub quasi_smooth: bool,
    /// Quasi-smooth and well-formed, so adjunction applies.
    pub adjunction_valid: bool,
    /// Adjunction valid and non-degenerate, so `h0_o1` is `h^0(O_X(1))`.
    pub h0_valid: bool,
}

/// Numeric part of the report, from weights and degrees alone.
pub fn combinatorial_report(weights: &[i64], multidegree: &[i64]) -> CanonicalReport {
    let alpha = multidegree.iter().sum::<i64>() - weights.iter().sum::<i64>();
    let h0 = weights.iter().filter(|&&a| a == 1).count() as i64;
    CanonicalReport {
        canonical_degree: alpha,
        kodaira_class: KodairaClass::of_canonical_degree(alpha),
        h0_o1: h0,
        linear_system_dim: h0 - 1,
        linear_cone: weights.iter().any(|a| multidegree.contains(a)),
        degenerate: multidegree.contains(&1),
        ambient_well_formed: weights_well_formed(weights),
        well_formed: false,
        quasi_smooth: false,
        adjunction_valid: false,
        h0_valid: false,
    }
}

pub fn canonical_report(x: &WciData, cfg: &GbConfig) -> Result<CanonicalReport> {
    let mut r = combinatorial_report(x.space.weights(), &x.multidegree);
    r.quasi_smooth = match is_quasi_smooth(x, cfg) {
        Ok(b) => b,
        Err(Error::NotCompleteIntersection { .. }) => false,
        Err(e) => return Err(e),
    };
    r.well_formed = r.ambient_well_formed && is_well_formed_subscheme(x, cfg)?;
    r.adjunction_valid = r.quasi_smooth && r.well_formed;
    r.h0_valid = r.adjunction_valid && !r.degenerate;
    Ok(r)
}

/// Which sign of the canonical degree the enumerator keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassFilter {
    Any,
    Only(KodairaClass),
}

impl ClassFilter {
    fn accepts(&self, c: KodairaClass) -> bool {
        match self {
            ClassFilter::Any => true,
            ClassFilter::Only(k) => *k == c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CandidateBounds {
    pub max_weight: i64,
    pub max_codim: usize,
    pub dim: usize,
    /// Upper bound on `Σ d_j`.
    pub max_degree_sum: i64,
    pub class: ClassFilter,
    /// Abort with a budget error past this many results.
    pub max_results: usize,
}

/// A combinatorial candidate; no polynomial has been checked for it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub weights: Vec<i64>,
    pub multidegree: Vec<i64>,
    pub canonical_degree: i64,
    pub kodaira_class: KodairaClass,
}

fn nondecreasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for v in start..=hi {
            cur.push(v);
            go(len, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo <= hi {
        go(len, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Degree tuples `2 ≤ d_1 ≤ … ≤ d_c` with `Σ d ≤ max_sum`.
fn degree_tuples(c: usize, max_sum: i64) -> Vec<Vec<i64>> {
    fn go(c: usize, rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == c {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(2);
        let left = (c - cur.len()) as i64;
        let mut d = start;
        while d * left <= rest {
            cur.push(d);
            go(c, rest - d, cur, out);
            cur.pop();
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(c, max_sum, &mut Vec::new(), &mut out);
    out
}

/// All (weights, multidegree) pairs passing the combinatorial filters:
/// well-formed ambient, no linear cone, no degree-1 equation, and the
/// requested sign of the canonical degree. Sorted.
pub fn enumerate_candidates(b: &CandidateBounds) -> Result<Vec<Candidate>> {
    let mut spaces = Vec::new();
    for c in 1..=b.max_codim {
        for w in nondecreasing(b.dim + c + 1, 1, b.max_weight) {
            if weights_well_formed(&w) {
                spaces.push((c, w));
            }
        }
    }
    let per_space = par::map(&spaces, |(c, w)| {
        let wsum: i64 = w.iter().sum();
        degree_tuples(*c, b.max_degree_sum)
            .into_iter()
            .filter(|d| !d.iter().any(|x| w.contains(x)))
            .filter_map(|d| {
                let alpha = d.iter().sum::<i64>() - wsum;
                let k = KodairaClass::of_canonical_degree(alpha);
                b.class.accepts(k).then(|| Candidate {
                    weights: w.clone(),
                    multidegree: d,
                    canonical_degree: alpha,
                    kodaira_class: k,
                })
            })
            .collect::<Vec<_>>()
    });
    let mut out: Vec<Candidate> = per_space.into_iter().flatten().collect();
    if out.len() > b.max_results {
        return Err(Error::BudgetExceeded {
            what: "enumerated candidates",
            limit: b.max_results as u64,
        });
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn wci(weights: &[i64], gens: &[&str]) -> WciData {
        let space = WeightedSpace::new(weights).unwrap();
        let gens = gens
            .iter()
            .map(|s| parse_poly(s, space.ring()).unwrap())
            .collect();
        WciData::new(space, gens).unwrap()
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    #[test]
    fn well_formed_spaces() {
        let wf = |w: &[i64]| is_well_formed_space(&WeightedSpace::new(w).unwrap());
        assert!(wf(&[1, 1, 3, 6]));
        assert!(wf(&[1, 2, 2, 3]));
        assert!(!wf(&[2, 2, 3]));
        assert!(wf(&[2, 3, 5]));
        assert!(WeightedSpace::new(&[1]).is_err());
    }

    #[test]
    fn picard_index_is_lcm() {
        assert_eq!(WeightedSpace::new(&[1, 1, 3, 6]).unwrap().picard_index(), 6);
        assert_eq!(WeightedSpace::new(&[1, 1, 1]).unwrap().picard_index(), 1);
        assert_eq!(WeightedSpace::new(&[2, 3, 5]).unwrap().picard_index(), 30);
    }

    /// Independent oracle: every subset with gcd > 1 that is closed under
    /// adding indices whose weight the gcd divides.
    fn strata_by_subsets(w: &[i64]) -> Vec<Stratum> {
        let n = w.len();
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let support: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let g = support.iter().fold(0, |acc, &i| gcd(acc, w[i]));
            if g > 1 && (0..n).all(|i| support.contains(&i) || w[i] % g != 0) {
                out.push(Stratum {
                    support,
                    gcd_value: g,
                });
            }
        }
        out.sort();
        out
    }

    #[test]
    fn strata_examples() {
        let s = |w: &[i64]| singular_strata(&WeightedSpace::new(w).unwrap()).unwrap();
        assert_eq!(
            s(&[1, 1, 3, 6]),
            vec![
                Stratum {
                    support: vec![2, 3],
                    gcd_value: 3
                },
                Stratum {
                    support: vec![3],
                    gcd_value: 6
                },
            ]
        );
        assert!(s(&[1, 1, 1, 1]).is_empty());
        assert_eq!(
            s(&[1, 2, 2, 3]),
            vec![
                Stratum {
                    support: vec![1, 2],
                    gcd_value: 2
                },
                Stratum {
                    support: vec![3],
                    gcd_value: 3
                },
            ]
        );
        assert!(matches!(
            singular_strata(&WeightedSpace::new(&[2, 2, 3]).unwrap()),
            Err(Error::NotWellFormed(_))
        ));
        for w in [
            vec![1, 1, 3, 6],
            vec![1, 2, 2, 3],
            vec![1, 2, 3, 4, 6],
            vec![2, 3, 5],
            vec![1, 4, 6, 10],
        ] {
            assert_eq!(strata_of(&w), strata_by_subsets(&w), "weights {w:?}");
        }
    }

    #[test]
    fn fermat_sextic_in_p1123() {
        let x = wci(&[1, 1, 2, 3], &["x0^6 + x1^6 + x2^3 + x3^2"]);
        assert!(is_quasi_smooth(&x, &cfg()).unwrap());
        assert!(is_well_formed_subscheme(&x, &cfg()).unwrap());
        assert!(is_smooth_well_formed(&x, &cfg()).unwrap());
        // both singular points lie off X
        let f = &x.generators()[0];
        use crate::poly::q;
        assert_eq!(f.eval(&[q(0), q(0), q(1), q(0)]), q(1));
        assert_eq!(f.eval(&[q(0), q(0), q(0), q(1)]), q(1));
        let r = canonical_report(&x, &cfg()).unwrap();
        assert_eq!(r.canonical_degree, -1);
        assert_eq!(r.kodaira_class, KodairaClass::Fano);
        assert_eq!((r.h0_o1, r.linear_system_dim), (2, 1));
        assert!(r.adjunction_valid && r.h0_valid);
        assert!(!r.linear_cone && !r.degenerate);
    }

    #[test]
    fn degree_nine_in_p1223_is_not_well_formed() {
        let x = wci(
            &[1, 2, 2, 3],
            &["x0^9 + x0*x1^4 + x0*x2^4 + x3^3 + x3*x1^3 + x3*x2^3"],
        );
        assert!(is_quasi_smooth(&x, &cfg()).unwrap());
        assert!(!is_well_formed_subscheme(&x, &cfg()).unwrap());
        assert!(!is_smooth_well_formed(&x, &cfg()).unwrap());
        let s = Stratum {
            support: vec![1, 2],
            gcd_value: 2,
        };
        assert_eq!(
            stratum_intersection_dim(&x, &s, &cfg()).unwrap(),
            ProjDim::Dim(1)
        );
        let r = canonical_report(&x, &cfg()).unwrap();
        assert_eq!(r.canonical_degree, 1);
        assert!(!r.well_formed && !r.adjunction_valid);
    }

    #[test]
    fn sextic_curve_in_p235() {
        let x = wci(&[2, 3, 5], &["x0^3 + x1^2"]);
        assert!(!is_quasi_smooth(&x, &cfg()).unwrap());
        assert!(!is_well_formed_subscheme(&x, &cfg()).unwrap());
        assert!(!is_smooth_well_formed(&x, &cfg()).unwrap());
    }

    #[test]
    fn fermat_dectic_in_p1115() {
        let x = wci(&[1, 1, 1, 5], &["x0^10 + x1^10 + x2^10 + x3^2"]);
        assert!(is_smooth_well_formed(&x, &cfg()).unwrap());
        let r = canonical_report(&x, &cfg()).unwrap();
        assert_eq!(r.canonical_degree, 2);
        assert_eq!(r.kodaira_class, KodairaClass::GeneralType);
        assert_eq!((r.h0_o1, r.linear_system_dim), (3, 2));
    }

    #[test]
    fn non_complete_intersection_is_rejected() {
        let x = wci(&[1, 1, 1], &["x0^2", "x0*x1"]);
        assert!(matches!(
            is_quasi_smooth(&x, &cfg()),
            Err(Error::NotCompleteIntersection {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn report_flags() {
        let r = combinatorial_report(&[1, 1, 2, 3], &[2]);
        assert!(r.linear_cone && !r.degenerate);
        let r = combinatorial_report(&[1, 1, 1], &[1]);
        assert!(r.degenerate && r.linear_cone);
        assert_eq!(
            combinatorial_report(&[1, 1, 1, 1], &[4]).kodaira_class,
            KodairaClass::CalabiYau
        );
    }

    #[test]
    fn minors_of_two_quadrics() {
        let r = GradedRing::with_weights(&[1, 1, 1]).unwrap();
        let fs = vec![
            parse_poly("x0*x1", &r).unwrap(),
            parse_poly("x2^2", &r).unwrap(),
        ];
        let m = jacobian_minors(&fs, &r).unwrap();
        let strs: Vec<String> = m.iter().map(|p| p.to_string()).collect();
        assert_eq!(strs, vec!["2*x1*x2", "2*x0*x2"]);
    }

    fn bounds(max_weight: i64, dim: usize, sum: i64, class: ClassFilter) -> CandidateBounds {
        CandidateBounds {
            max_weight,
            max_codim: 1,
            dim,
            max_degree_sum: sum,
            class,
            max_results: 100_000,
        }
    }

    #[test]
    fn enumerator_examples() {
        let gt = ClassFilter::Only(KodairaClass::GeneralType);
        let c = enumerate_candidates(&bounds(1, 3, 8, gt)).unwrap();
        assert_eq!(c[0].weights, vec![1, 1, 1, 1, 1]);
        assert_eq!(c[0].multidegree, vec![6]);
        assert_eq!(
            c.iter().map(|x| x.multidegree[0]).collect::<Vec<_>>(),
            vec![6, 7, 8]
        );

        let fano = ClassFilter::Only(KodairaClass::Fano);
        let c = enumerate_candidates(&bounds(3, 2, 6, fano)).unwrap();
        let p1123: Vec<i64> = c
            .iter()
            .filter(|x| x.weights == [1, 1, 2, 3])
            .map(|x| x.multidegree[0])
            .collect();
        assert_eq!(p1123, vec![4, 5, 6]);

        assert!(enumerate_candidates(&bounds(1, 3, 5, gt))
            .unwrap()
            .is_empty());
        for x in enumerate_candidates(&bounds(3, 2, 12, ClassFilter::Any)).unwrap() {
            assert_eq!(
                x.kodaira_class == KodairaClass::GeneralType,
                x.canonical_degree > 0
            );
            assert!(weights_well_formed(&x.weights));
        }
    }

    #[test]
    fn enumerator_budget() {
        let mut b = bounds(3, 2, 20, ClassFilter::Any);
        b.max_results = 5;
        assert!(matches!(
            enumerate_candidates(&b),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
