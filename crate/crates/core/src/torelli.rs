//! The bigraded Jacobi ring of a weighted complete intersection and the
//! infinitesimal Torelli map.
//!
//! For `X = V(f_1, …, f_c) ⊂ P(a_0, …, a_N)` put `F = Σ y_j f_j` in
//! `ℚ[y_1, …, y_c, x_0, …, x_N]` with `deg x_i = (0, a_i)` and
//! `deg y_j = (1, −d_j)`, so that `F` has bidegree `(1, 0)`. The Jacobi ring
//! is `R = ℚ[x; y] / (∂F/∂x_i, f_j)`.
//!
//! Internally the ring carries primary weight `L·q + t` with `L = max d_j + 1`
//! (positive on every variable) and second weight `t`. Monomials of
//! bidegree `(q, t)` are exactly those with y-degree `q` and primary degree
//! `L·q + t`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num::One;

use crate::error::{Error, Result};
use crate::groebner::{GbConfig, GroebnerBasis, Ideal, MonomialOrder};
use crate::linalg::{rank, Echelon, SparseVec};
use crate::par;
use crate::poly::{Poly, Q};
use crate::ring::{monomials_of_weighted_degree, GradedRing, Monomial};
use crate::wps::{is_quasi_smooth, is_well_formed_subscheme, WciData};

/// Stated in every report.
pub const CONVENTION: &str = "deg x_i = (0, a_i), deg y_j = (1, -d_j)";

#[derive(Clone, Debug)]
pub struct JacobiRing {
    base: WciData,
    ambient: Arc<GradedRing>,
    f: Poly,
    ideal: Ideal,
    s: i64,
    /// Hypotheses that failed at construction; the ring is built anyway.
    pub warnings: Vec<String>,
    /// Some `d_j = 1`.
    pub degenerate: bool,
}

/// Bidegree `(y-degree, second degree)` of a monomial in the Jacobi ambient.
fn bidegree(ring: &GradedRing, c: usize, m: &Monomial) -> (i64, i64) {
    let q = m.exps()[..c].iter().map(|&e| e as i64).sum();
    (q, ring.second_degree(m).expect("bigraded ring"))
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('_');
    }
    name
}

/// Builds the ring, `F` and the Jacobian ideal with a cached basis under the
/// block order with the y-variables first.
pub fn build_jacobi(x: &WciData, cfg: &GbConfig) -> Result<JacobiRing> {
    let base_ring = x.space().ring();
    let c = x.codim();
    let ds = x.multidegree();
    let l = ds.iter().copied().max().unwrap_or(0) + 1;

    let mut names: Vec<String> = Vec::new();
    for j in 0..c {
        let n = fresh_name(&format!("y{}", j + 1), base_ring.names());
        names.push(n);
    }
    names.extend(base_ring.names().iter().cloned());
    let mut primary: Vec<i64> = ds.iter().map(|d| l - d).collect();
    primary.extend(base_ring.weights());
    let mut second: Vec<i64> = ds.iter().map(|d| -d).collect();
    second.extend(base_ring.weights());
    let ambient = GradedRing::new(names, primary, Some(second))?;

    let map: Vec<usize> = (0..base_ring.nvars()).map(|i| c + i).collect();
    let fs: Vec<Poly> = x
        .generators()
        .iter()
        .map(|g| g.embed(&ambient, &map))
        .collect();
    let mut f = Poly::zero(&ambient);
    for (j, fj) in fs.iter().enumerate() {
        f = &f + &(&Poly::var(&ambient, j) * fj);
    }
    let mut gens: Vec<Poly> = (c..ambient.nvars()).map(|i| f.partial(i)).collect();
    gens.extend(fs);
    let ideal =
        Ideal::new(&ambient, gens)?.buchberger(MonomialOrder::Elimination(c), &cfg.budget)?;

    let mut warnings = Vec::new();
    match is_quasi_smooth(x, cfg) {
        Ok(true) => {}
        Ok(false) => warnings.push("not quasi-smooth".to_string()),
        Err(Error::NotCompleteIntersection { .. }) => {
            warnings.push("not a complete intersection".to_string())
        }
        Err(e) => return Err(e),
    }
    match is_well_formed_subscheme(x, cfg) {
        Ok(true) => {}
        Ok(false) => warnings.push("not well-formed".to_string()),
        Err(Error::NotWellFormed(_)) => warnings.push("ambient not well-formed".to_string()),
        Err(e) => return Err(e),
    }

    let s = x.space().weights().iter().sum::<i64>() - ds.iter().sum::<i64>();
    Ok(JacobiRing {
        base: x.clone(),
        ambient,
        f,
        ideal,
        s,
        warnings,
        degenerate: ds.contains(&1),
    })
}

impl JacobiRing {
    pub fn base(&self) -> &WciData {
        &self.base
    }

    pub fn ambient(&self) -> &Arc<GradedRing> {
        &self.ambient
    }

    /// `F = Σ y_j f_j`.
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn jacobian_ideal(&self) -> &Ideal {
        &self.ideal
    }

    fn basis(&self) -> &GroebnerBasis {
        self.ideal.basis().expect("built with a basis")
    }

    /// `S = Σ a_i − Σ d_j`.
    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn codim(&self) -> usize {
        self.base.codim()
    }

    pub fn bidegree(&self, m: &Monomial) -> (i64, i64) {
        bidegree(&self.ambient, self.codim(), m)
    }

    /// Bidegree of a bihomogeneous polynomial, `None` otherwise.
    pub fn poly_bidegree(&self, p: &Poly) -> Option<(i64, i64)> {
        let mut it = p.terms().iter().map(|(m, _)| self.bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// All monomials of bidegree `(q, t)`.
    pub fn monomials_of_bidegree(&self, q: i64, t: i64) -> Vec<Monomial> {
        if q < 0 {
            return Vec::new();
        }
        let c = self.codim();
        let ds = self.base.multidegree();
        let ys = monomials_of_weighted_degree(&vec![1; c], q);
        let mut out = Vec::new();
        for y in ys {
            let shift: i64 = y.iter().zip(ds).map(|(&e, &d)| e as i64 * d).sum();
            for xm in monomials_of_weighted_degree(self.base.space().weights(), t + shift) {
                let mut e = y.clone();
                e.extend(xm);
                out.push(Monomial::new(e));
            }
        }
        out.sort();
        out
    }

    /// Standard monomials of bidegree `(q, t)`, sorted.
    pub fn standard_monomials(&self, q: i64, t: i64) -> Vec<Monomial> {
        let b = self.basis();
        self.monomials_of_bidegree(q, t)
            .into_iter()
            .filter(|m| b.is_standard(m))
            .collect()
    }

    /// `dim R_{(q,t)}` by counting standard monomials.
    pub fn component_dim(&self, q: i64, t: i64) -> usize {
        self.standard_monomials(q, t).len()
    }

    /// `dim R_{(q,t)}` without Gröbner bases: the monomial count minus the
    /// rank of all products (generator × monomial) landing in bidegree
    /// `(q, t)`. Fails when the dense size `rows × cols` exceeds `max_entries`.
    pub fn component_dim_oracle(&self, q: i64, t: i64, max_entries: usize) -> Result<usize> {
        let target = self.monomials_of_bidegree(q, t);
        let index: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut products: Vec<(&Poly, Monomial)> = Vec::new();
        for g in self.ideal.generators() {
            let (gq, gt) = self
                .poly_bidegree(g)
                .expect("jacobian generators are bihomogeneous");
            for m in self.monomials_of_bidegree(q - gq, t - gt) {
                products.push((g, m));
            }
        }
        let (rows, cols) = (products.len(), target.len());
        if rows.saturating_mul(cols) > max_entries {
            return Err(Error::ComponentTooLarge {
                q,
                t,
                rows,
                cols,
                limit: max_entries,
            });
        }
        let one = Q::one();
        let mut vecs = Vec::with_capacity(rows);
        for (g, m) in products {
            let p = g.mul_term(&m, &one)?;
            let mut v: SparseVec = p
                .terms()
                .iter()
                .map(|(mm, c)| (index[mm], c.clone()))
                .collect();
            v.sort_by_key(|(i, _)| *i);
            vecs.push(v);
        }
        Ok(cols - rank(vecs))
    }

    /// `Σ a_i x_i ∂F/∂x_i = Σ d_j y_j f_j`.
    pub fn euler_holds(&self) -> bool {
        let c = self.codim();
        let w = self.base.space().weights();
        let mut lhs = Poly::zero(&self.ambient);
        for (i, &a) in w.iter().enumerate() {
            let xi = Poly::var(&self.ambient, c + i);
            lhs = &lhs + &(&xi * &self.f.partial(c + i)).scale(&Q::from_integer(a.into()));
        }
        let mut rhs = Poly::zero(&self.ambient);
        for (j, &d) in self.base.multidegree().iter().enumerate() {
            let yj = Poly::var(&self.ambient, j);
            rhs = &rhs + &(&yj * &self.f.partial(j)).scale(&Q::from_integer(d.into()));
        }
        lhs == rhs
    }

    /// Every reduced basis element is bihomogeneous.
    pub fn basis_is_bihomogeneous(&self) -> bool {
        self.basis()
            .polys()
            .iter()
            .all(|p| self.poly_bidegree(p).is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorelliReport {
    pub convention: &'static str,
    pub s: i64,
    /// Component dimensions keyed by `(q, t)`.
    pub dims: BTreeMap<(i64, i64), usize>,
    /// Values of `q` whose multiplication block enters `Ψ`.
    pub q_range: Vec<i64>,
    pub psi_domain_dim: usize,
    pub kernel_dim: usize,
    pub injective: bool,
    /// No `q` qualified, so `Ψ` has zero target.
    pub vacuous: bool,
}

/// Multiplication block `R_{(1,0)} × R_{(q−1,−S)} → R_{(q,−S)}`, one sparse
/// row per element of the `R_{(1,0)}` basis.
fn mult_block(
    j: &JacobiRing,
    domain: &[Monomial],
    src: &[Monomial],
    dst: &[Monomial],
) -> Result<Vec<SparseVec>> {
    let b = j.basis();
    let index: HashMap<&Monomial, usize> = dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::with_capacity(domain.len());
    for r in domain {
        let mut v: SparseVec = Vec::new();
        for (ai, a) in src.iter().enumerate() {
            let nf = b.normal_form_monomial(&r.mul(a)?);
            for (m, c) in nf.terms() {
                v.push((ai * dst.len() + index[m], c.clone()));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        rows.push(v);
    }
    Ok(rows)
}

/// Kernel of `Ψ: R_{(1,0)} → ⊕_q Hom(R_{(q−1,−S)}, R_{(q,−S)})`.
pub fn torelli_test(j: &JacobiRing) -> Result<TorelliReport> {
    let s = j.s();
    if s >= 0 {
        return Err(Error::NotGeneralType(s));
    }
    let dim_x = j.base.expected_dim();
    let domain = j.standard_monomials(1, 0);
    let comps: Vec<Vec<Monomial>> = (0..=dim_x + 1)
        .map(|q| j.standard_monomials(q, -s))
        .collect();

    let mut dims = BTreeMap::new();
    dims.insert((1, 0), domain.len());
    for (q, comp) in comps.iter().enumerate() {
        dims.insert((q as i64, -s), comp.len());
    }
    let q_range: Vec<i64> = (1..=dim_x + 1)
        .filter(|&q| !comps[q as usize - 1].is_empty() && !comps[q as usize].is_empty())
        .collect();

    let blocks = par::try_map(&q_range, |&q| {
        mult_block(j, &domain, &comps[q as usize - 1], &comps[q as usize])
    })?;
    let mut rows: Vec<SparseVec> = vec![Vec::new(); domain.len()];
    let mut offset = 0;
    for (q, block) in q_range.iter().zip(blocks) {
        for (row, part) in rows.iter_mut().zip(block) {
            row.extend(part.into_iter().map(|(i, c)| (i + offset, c)));
        }
        offset += comps[*q as usize - 1].len() * comps[*q as usize].len();
    }
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    let kernel_dim = domain.len() - e.rank();
    Ok(TorelliReport {
        convention: CONVENTION,
        s,
        dims,
        vacuous: q_range.is_empty(),
        q_range,
        psi_domain_dim: domain.len(),
        kernel_dim,
        injective: kernel_dim == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::hilbert_component_dim;
    use crate::parse::parse_poly_list;
    use crate::wps::WeightedSpace;

    fn wci(weights: &[i64], gens: &str) -> WciData {
        let sp = WeightedSpace::new(weights).unwrap();
        let g = parse_poly_list(gens, sp.ring()).unwrap();
        WciData::new(sp, g).unwrap()
    }

    fn jac(weights: &[i64], gens: &str) -> JacobiRing {
        build_jacobi(&wci(weights, gens), &GbConfig::default()).unwrap()
    }

    /// Coefficient of `t^n` in `Π (1 − t^{e_i}) / (1 − t^{w_i})`.
    fn series_coeff(ws: &[i64], es: &[i64], n: i64) -> i64 {
        let mut c = vec![0i64; n as usize + 1];
        c[0] = 1;
        for &w in ws {
            for k in w as usize..=n as usize {
                c[k] += c[k - w as usize];
            }
        }
        for &e in es {
            for k in (e as usize..=n as usize).rev() {
                c[k] -= c[k - e as usize];
            }
        }
        c[n as usize]
    }

    #[test]
    fn series_oracle() {
        assert_eq!(series_coeff(&[1; 4], &[5; 4], 6), 68);
        assert_eq!(series_coeff(&[1; 4], &[5; 4], 8), 85);
        assert_eq!(series_coeff(&[1; 3], &[9; 3], 10), 57);
    }

    const SEXTIC: &str = "x0^6 + x1^6 + x2^6 + x3^6";

    #[test]
    fn sextic_surface() {
        let j = jac(&[1, 1, 1, 1], SEXTIC);
        assert_eq!(j.s(), -2);
        assert!(j.warnings.is_empty());
        assert!(j.euler_holds());
        assert!(j.basis_is_bihomogeneous());
        assert_eq!(j.poly_bidegree(j.f()), Some((1, 0)));
        assert_eq!(
            j.component_dim(1, 0),
            series_coeff(&[1; 4], &[5; 4], 6) as usize
        );
        assert_eq!(j.component_dim(0, 2), 10);
        assert_eq!(
            j.component_dim(1, 2),
            series_coeff(&[1; 4], &[5; 4], 8) as usize
        );
        assert_eq!(j.component_dim(2, 2), 10);
        assert_eq!(j.component_dim(0, -1), 0);
        assert_eq!(j.component_dim(0, 0), 1);
        let r = torelli_test(&j).unwrap();
        assert_eq!(r.psi_domain_dim, 68);
        assert_eq!(r.kernel_dim, 0);
        assert!(r.injective && !r.vacuous);
        assert_eq!(r.q_range, vec![1, 2]);
        assert_eq!(r.dims[&(1, 2)], 85);
    }

    #[test]
    fn oracle_agrees_on_sextic() {
        let j = jac(&[1, 1, 1, 1], SEXTIC);
        for (q, t) in [(0, 0), (0, 2), (1, 0), (1, 2), (2, 2), (0, 7)] {
            assert_eq!(
                j.component_dim_oracle(q, t, 50_000_000).unwrap(),
                j.component_dim(q, t),
                "({q},{t})"
            );
        }
        assert!(matches!(
            j.component_dim_oracle(1, 2, 10),
            Err(Error::ComponentTooLarge { .. })
        ));
    }

    #[test]
    fn dectic_in_p1115() {
        let j = jac(&[1, 1, 1, 5], "x0^10 + x1^10 + x2^10 + x3^2");
        assert_eq!(j.s(), -2);
        let r = torelli_test(&j).unwrap();
        assert_eq!(
            r.psi_domain_dim,
            series_coeff(&[1; 3], &[9; 3], 10) as usize
        );
    }

    #[test]
    fn milnor_algebra_matches_for_hypersurfaces() {
        let x = wci(&[1, 1, 2, 3], "x0^6 + x1^6 + x2^3 + x3^2 + x0^2*x1^2*x2");
        let j = build_jacobi(&x, &GbConfig::default()).unwrap();
        let r = x.space().ring();
        let f = &x.generators()[0];
        let partials: Vec<Poly> = (0..r.nvars()).map(|i| f.partial(i)).collect();
        let m = Ideal::new(r, partials)
            .unwrap()
            .with_basis(&GbConfig::default())
            .unwrap();
        assert_eq!(j.component_dim(1, 0), hilbert_component_dim(&m, 6).unwrap());
    }

    #[test]
    fn codim_two() {
        let j = jac(
            &[1, 1, 1, 1, 1],
            "x0^3 + x1^3 + x2^3 + x3^3 + x4^3, x0^3 + 2*x1^3 + 3*x2^3 + 4*x3^3 + 5*x4^3",
        );
        assert!(j.euler_holds());
        assert!(j.basis_is_bihomogeneous());
        for (q, t) in [(0, 1), (1, 0), (1, 1), (2, 1), (0, 3)] {
            assert_eq!(
                j.component_dim_oracle(q, t, 50_000_000).unwrap(),
                j.component_dim(q, t)
            );
        }
        assert_eq!(j.s(), -1);
        let r = torelli_test(&j).unwrap();
        assert_eq!(r.psi_domain_dim, j.component_dim(1, 0));
        assert_eq!(r.injective, r.kernel_dim == 0);
    }

    #[test]
    fn rejects_non_negative_s() {
        let j = jac(&[1, 1, 1, 1], "x0^4 + x1^4 + x2^4 + x3^4");
        assert!(matches!(torelli_test(&j), Err(Error::NotGeneralType(0))));
    }

    #[test]
    fn scaling_a_generator_changes_nothing() {
        let a = torelli_test(&jac(&[1, 1, 1, 5], "x0^10 + x1^10 + x2^10 + x3^2")).unwrap();
        let b = torelli_test(&jac(&[1, 1, 1, 5], "3*x0^10 + 3*x1^10 + 3*x2^10 + 3*x3^2")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_guard() {
        let j = jac(&[1, 1, 1], "x0");
        assert!(j.degenerate);
        assert_eq!(j.s(), 2);
    }

    #[test]
    fn name_clash_with_y() {
        let sp = WeightedSpace::from_ring(
            crate::ring::make_ring(&["y1", "x", "z"], &[1, 1, 1], None).unwrap(),
        )
        .unwrap();
        let g = parse_poly_list("y1^4 + x^4 + z^4", sp.ring()).unwrap();
        let j = build_jacobi(&WciData::new(sp, g).unwrap(), &GbConfig::default()).unwrap();
        assert_eq!(j.ambient().names()[0], "y1_");
        assert!(j.euler_holds());
    }
}
