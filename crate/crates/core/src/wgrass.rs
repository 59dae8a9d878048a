//! The weighted Grassmannian `wGr(2,4)`.
//!
//! Given `(a_0, a_1, a_2, a_3)` with `a_i + a_j > a_0` for `i < j`, the
//! Plücker coordinates `T_{ij}` get weights `a_{ij} = −a_0 + a_i + a_j`
//! and `Y ⊂ P(a_{01}, …, a_{23})` is cut out by the Plücker relation
//! `T01*T23 + T12*T03 − T02*T13` of degree `p = −a_0 + a_1 + a_2 + a_3`.
//!
//! Anticanonical degrees: `3p` for the ambient, `2p` for `Y`, and `2p − d`
//! for a hypersurface `X ⊂ Y` of degree `d`. Being of general type means
//! `−K_X` is negative, i.e. `d > 2p`. The weaker inequality `d > p` is
//! reported separately as [`WgrHypersurfaceReport::exceeds_plucker_degree`].

use crate::error::{Error, Result};
use crate::groebner::GbConfig;
use crate::par;
use crate::parse::parse_poly;
use crate::poly::Poly;
use crate::ring::GradedRing;
use crate::wps::{
    canonical_report, is_well_formed_space, is_well_formed_subscheme, projective_dim,
    CanonicalReport, ProjDim, WciData, WeightedSpace,
};

/// Index pairs of the Plücker coordinates, in variable order.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub const PLUCKER_RELATION: &str = "T01*T23 + T12*T03 - T02*T13";

#[derive(Clone, Debug)]
pub struct WGrData {
    pub input_weights: [i64; 4],
    pub plucker_weights: [i64; 6],
    pub ambient: WeightedSpace,
    pub plucker_poly: Poly,
    pub plucker_degree: i64,
    pub antican_p: i64,
    pub antican_y: i64,
    pub ambient_well_formed: bool,
}

pub fn build_wgr24(a: [i64; 4]) -> Result<WGrData> {
    for &(i, j) in &PAIRS[3..] {
        if a[i] + a[j] <= a[0] {
            return Err(Error::PluckerHypothesis { i, j });
        }
    }
    if let Some(index) = (0..4).find(|&i| a[i] <= 0) {
        return Err(Error::NonPositiveWeight {
            index,
            weight: a[index],
        });
    }
    let mut plucker_weights = [0; 6];
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        plucker_weights[k] = -a[0] + a[i] + a[j];
    }
    let names = PAIRS.iter().map(|(i, j)| format!("T{i}{j}")).collect();
    let ring = GradedRing::new(names, plucker_weights.to_vec(), None)?;
    let ambient = WeightedSpace::from_ring(ring)?;
    let plucker_poly = parse_poly(PLUCKER_RELATION, ambient.ring())?;
    let p = -a[0] + a[1] + a[2] + a[3];
    let deg = plucker_poly.homogeneous_degree()?;
    debug_assert_eq!(deg, p);
    Ok(WGrData {
        input_weights: a,
        plucker_weights,
        ambient_well_formed: is_well_formed_space(&ambient),
        ambient,
        plucker_poly,
        plucker_degree: p,
        antican_p: 3 * p,
        antican_y: 2 * p,
    })
}

impl WGrData {
    /// `Y` as a hypersurface in the ambient.
    pub fn y(&self) -> WciData {
        WciData::new(self.ambient.clone(), vec![self.plucker_poly.clone()]).expect("ambient ring")
    }

    /// `X = Y ∩ {f = 0}` as a codimension-two complete intersection.
    pub fn hypersurface(&self, f: Poly) -> Result<WciData> {
        WciData::new(self.ambient.clone(), vec![self.plucker_poly.clone(), f])
    }
}

/// Ambient well-formed and `codim_Y(Y ∩ Sing P) ≥ 2`.
pub fn wgr_wellformed(g: &WGrData, cfg: &GbConfig) -> Result<bool> {
    if !g.ambient_well_formed {
        return Ok(false);
    }
    let y = g.y();
    debug_assert_eq!(projective_dim(&y, cfg)?, ProjDim::Dim(4));
    is_well_formed_subscheme(&y, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WgrHypersurfaceReport {
    pub d: i64,
    /// `deg(−K_X) = deg(−K_Y) − d`.
    pub antican_x: i64,
    /// `antican_x < 0`.
    pub general_type: bool,
    /// `d > −a_0 + a_1 + a_2 + a_3`.
    pub exceeds_plucker_degree: bool,
    /// Multidegree of `X` in the ambient, ascending.
    pub multidegree: [i64; 2],
    /// `d` equals the Plücker degree.
    pub degree_coincidence: bool,
}

pub fn wgr_hypersurface_report(g: &WGrData, d: i64) -> WgrHypersurfaceReport {
    let antican_x = g.antican_y - d;
    let mut multidegree = [d, g.plucker_degree];
    multidegree.sort();
    WgrHypersurfaceReport {
        d,
        antican_x,
        general_type: antican_x < 0,
        exceeds_plucker_degree: d > g.plucker_degree,
        multidegree,
        degree_coincidence: d == g.plucker_degree,
    }
}

/// Runs the weighted-projective checks on `(Plücker, f)`.
pub fn wgr_witness_report(g: &WGrData, f: Poly, cfg: &GbConfig) -> Result<CanonicalReport> {
    canonical_report(&g.hypersurface(f)?, cfg)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WgrCandidate {
    pub a: [i64; 4],
    pub d: i64,
    pub report: WgrHypersurfaceReport,
}

/// Every `(a, d)` with `1 ≤ a_i ≤ max_a`, `a_1 ≤ a_2 ≤ a_3`, the Plücker
/// hypothesis, a well-formed ambient, `wgr_wellformed`, `d ≤ max_d`, and
/// `X` of general type. Sorted by `(a, d)`.
pub fn enumerate_wgr_general_type(
    max_a: i64,
    max_d: i64,
    max_results: usize,
    cfg: &GbConfig,
) -> Result<Vec<WgrCandidate>> {
    let mut tuples = Vec::new();
    for a0 in 1..=max_a {
        for a1 in 1..=max_a {
            for a2 in a1..=max_a {
                for a3 in a2..=max_a {
                    tuples.push([a0, a1, a2, a3]);
                }
            }
        }
    }
    let per_tuple = par::try_map(&tuples, |&a| {
        let g = match build_wgr24(a) {
            Ok(g) => g,
            Err(Error::PluckerHypothesis { .. }) => return Ok(Vec::new()),
            Err(e) => return Err(e),
        };
        if !wgr_wellformed(&g, cfg)? {
            return Ok(Vec::new());
        }
        Ok((1..=max_d)
            .map(|d| wgr_hypersurface_report(&g, d))
            .filter(|r| r.general_type)
            .map(|report| WgrCandidate {
                a,
                d: report.d,
                report,
            })
            .collect::<Vec<_>>())
    })?;
    let out: Vec<WgrCandidate> = per_tuple.into_iter().flatten().collect();
    if out.len() > max_results {
        return Err(Error::BudgetExceeded {
            what: "enumerated wGr candidates",
            limit: max_results as u64,
        });
    }
    Ok(out)
}
