use wcilab_core::coxsat::{saturate_cl_one, saturate_smooth, strictness_verdict};
use wcilab_core::torelli::{build_jacobi, torelli_test};
use wcilab_core::wgrass::{
    build_wgr24, enumerate_wgr_general_type, wgr_hypersurface_report, wgr_wellformed,
    wgr_witness_report,
};
use wcilab_core::wps::{
    canonical_report, enumerate_candidates, is_quasi_smooth, is_smooth_well_formed,
    is_well_formed_space, is_well_formed_subscheme, singular_strata, stratum_intersection_dim,
    CandidateBounds, ClassFilter, KodairaClass, WciData, WeightedSpace,
};
use wcilab_core::{parse::parse_poly_list, Error, GbConfig, Ideal, Poly};

use crate::{CliError, Options, ProblemFile, Report, Status, Task, Value};

pub(crate) fn dispatch(
    p: &ProblemFile,
    task: Task,
    opts: &Options,
    cfg: &GbConfig,
    r: &mut Report,
) -> Result<(), CliError> {
    match task {
        Task::Check => check(p, cfg, r),
        Task::Saturate => saturate(p, opts, cfg, r),
        Task::Strict => strict(p, opts, cfg, r),
        Task::Torelli => torelli(p, cfg, r),
        Task::Wgr => wgr(p, cfg, r),
        Task::Enum => enumerate(p, cfg, r),
    }
}

fn strs(ps: &[Poly]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn ints(v: &[i64]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn wci(p: &ProblemFile) -> Result<WciData, CliError> {
    let space = p.space()?;
    let gens = p.generators(space.ring())?;
    if gens.is_empty() {
        return Err(CliError::Usage("at least one gen line is required".into()));
    }
    Ok(WciData::new(space, gens)?)
}

fn push_space(r: &mut Report, space: &WeightedSpace) {
    r.push("space", space.to_string());
    r.push("picard_index", space.picard_index());
}

fn check(p: &ProblemFile, cfg: &GbConfig, r: &mut Report) -> Result<(), CliError> {
    let x = wci(p)?;
    push_space(r, x.space());
    r.push("multidegree", ints(x.multidegree()));
    let ambient_wf = is_well_formed_space(x.space());
    if ambient_wf {
        let strata = singular_strata(x.space())?;
        let mut labels = Vec::new();
        let mut dims = Vec::new();
        for s in &strata {
            labels.push(format!(
                "{}:{}",
                ints(&s.support.iter().map(|&i| i as i64).collect::<Vec<_>>()).join(" "),
                s.gcd_value
            ));
            dims.push(stratum_intersection_dim(&x, s, cfg)?.to_string());
        }
        r.push("singular_strata", labels);
        r.push("stratum_intersection_dims", dims);
    }
    let (ci, qs) = match is_quasi_smooth(&x, cfg) {
        Ok(b) => (true, b),
        Err(Error::NotCompleteIntersection { .. }) => (false, false),
        Err(e) => return Err(e.into()),
    };
    let wf = ambient_wf && is_well_formed_subscheme(&x, cfg)?;
    let smooth = ci && is_smooth_well_formed(&x, cfg)?;
    let c = canonical_report(&x, cfg)?;
    r.push("complete_intersection", ci);
    r.push("quasi_smooth", qs);
    r.push("well_formed", wf);
    r.push("smooth", smooth);
    r.push("canonical_degree", c.canonical_degree);
    r.push("class", c.kodaira_class.name());
    r.push("h0_O1", c.h0_o1);
    r.push("linear_system_dim", c.linear_system_dim);
    r.push("linear_cone", c.linear_cone);
    r.push("degenerate", c.degenerate);
    r.push("adjunction_valid", c.adjunction_valid);
    r.push("h0_valid", c.h0_valid);
    if !(wf && qs) {
        r.escalate(Status::Violated);
    }
    Ok(())
}

fn degree_bound(p: &ProblemFile, opts: &Options, x: &WciData) -> Result<i64, CliError> {
    if let Some(b) = opts.bound {
        return Ok(b);
    }
    if let Some(b) = p.int_param("bound")? {
        return Ok(b);
    }
    Ok(2 * x.multidegree().iter().copied().max().unwrap_or(1))
}

fn saturate(
    p: &ProblemFile,
    opts: &Options,
    cfg: &GbConfig,
    r: &mut Report,
) -> Result<(), CliError> {
    let x = wci(p)?;
    let space = x.space();
    let ring = space.ring();
    push_space(r, space);
    let ideal = x.ideal().with_basis(cfg)?;
    let b = match p.param("irrelevant") {
        Some(text) => Ideal::new(ring, parse_poly_list(text, ring)?)?,
        None => Ideal::maximal(ring),
    };
    let smooth = saturate_smooth(&ideal, &b, cfg)?;
    let smooth_basis = smooth.basis().expect("saturation carries a basis").polys();
    let mut smooth_new = Vec::new();
    for g in &smooth_basis {
        if !ideal.contains(g)? {
            smooth_new.push(g.clone());
        }
    }
    r.push("smooth_saturation", strs(&smooth_basis));
    r.push("smooth_new_generators", strs(&smooth_new));

    let bound = degree_bound(p, opts, &x)?;
    let cl = saturate_cl_one(&ideal, space, bound, cfg)?;
    r.push("degree_bound", bound);
    r.push("complete_up_to", cl.complete_up_to);
    r.push("new_generators", strs(&cl.new_generators));
    r.push(
        "saturated_basis",
        strs(&cl.saturated_ideal.basis().expect("basis").polys()),
    );
    match cl.is_fixed_point {
        Some(fixed) => {
            r.push("is_fixed_point", fixed);
            if !fixed {
                r.escalate(Status::Violated);
            }
        }
        None => {
            r.push("is_fixed_point", "unset");
            r.push("error", cl.require_bound().unwrap_err().to_string());
            r.escalate(Status::Unknown);
        }
    }
    Ok(())
}

fn strict(p: &ProblemFile, opts: &Options, cfg: &GbConfig, r: &mut Report) -> Result<(), CliError> {
    let x = wci(p)?;
    push_space(r, x.space());
    let bound = degree_bound(p, opts, &x)?;
    let v = strictness_verdict(&x, bound, cfg)?;
    r.push("degree_bound", bound);
    r.push("verdict", v.verdict.to_string());
    r.push("certificate", v.certificate.name());
    r.push("new_generators", strs(&v.new_generators));
    r.escalate(match v.verdict {
        wcilab_core::coxsat::Strictness::Strict => Status::Ok,
        wcilab_core::coxsat::Strictness::NonStrict => Status::Violated,
        wcilab_core::coxsat::Strictness::Unknown(_) => Status::Unknown,
    });
    Ok(())
}

fn components(p: &ProblemFile) -> Result<Vec<(i64, i64)>, CliError> {
    let Some((line, text)) = p.params.get("components") else {
        return Ok(Vec::new());
    };
    text.split(',')
        .map(|item| {
            let (a, b) = item.trim().split_once(':')?;
            Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
        })
        .collect::<Option<Vec<_>>>()
        .ok_or(CliError::Problem {
            line: *line,
            msg: "components must look like q:t,q:t".into(),
        })
}

fn torelli(p: &ProblemFile, cfg: &GbConfig, r: &mut Report) -> Result<(), CliError> {
    let x = wci(p)?;
    push_space(r, x.space());
    r.push("multidegree", ints(x.multidegree()));
    let j = build_jacobi(&x, cfg)?;
    r.push("convention", wcilab_core::torelli::CONVENTION);
    r.push("S", j.s());
    r.push("warnings", j.warnings.clone());
    r.push("degenerate", j.degenerate);
    let oracle = p.int_param("oracle_budget")?;
    for (q, t) in components(p)? {
        r.push(format!("dim_{q}_{t}"), j.component_dim(q, t));
        if let Some(limit) = oracle {
            r.push(
                format!("oracle_dim_{q}_{t}"),
                j.component_dim_oracle(q, t, limit.max(0) as usize)?,
            );
        }
    }
    let t = torelli_test(&j)?;
    for (&(q, tt), &d) in &t.dims {
        let key = format!("dim_{q}_{tt}");
        if r.get(&key).is_none() {
            r.push(key, d);
        }
    }
    r.push("q_range", ints(&t.q_range));
    r.push("psi_domain_dim", t.psi_domain_dim);
    r.push("kernel_dim", t.kernel_dim);
    r.push("injective", t.injective);
    r.push("vacuous", t.vacuous);
    if !t.injective {
        r.escalate(Status::Violated);
    }
    Ok(())
}

fn wgr(p: &ProblemFile, cfg: &GbConfig, r: &mut Report) -> Result<(), CliError> {
    if p.weights.is_some() || p.vars.is_some() {
        return Err(CliError::Usage(
            "wgr builds its own ambient; remove space and vars lines".into(),
        ));
    }
    let a = p
        .int_list_param("a")?
        .ok_or_else(|| CliError::Usage("wgr needs 'param a a0 a1 a2 a3'".into()))?;
    let a: [i64; 4] = a
        .try_into()
        .map_err(|_| CliError::Usage("param a needs exactly four integers".into()))?;
    let g = build_wgr24(a)?;
    r.push("input_weights", ints(&a));
    r.push("plucker_weights", ints(&g.plucker_weights));
    r.push("plucker_poly", g.plucker_poly.to_string());
    r.push("plucker_degree", g.plucker_degree);
    r.push("antican_P", g.antican_p);
    r.push("antican_Y", g.antican_y);
    r.push("ambient_well_formed", g.ambient_well_formed);
    let wf = wgr_wellformed(&g, cfg)?;
    r.push("wgr_well_formed", wf);
    if !wf {
        r.escalate(Status::Violated);
    }
    if let Some(d) = p.int_param("degree")? {
        let h = wgr_hypersurface_report(&g, d);
        r.push("degree", d);
        r.push("antican_X", h.antican_x);
        r.push("general_type", h.general_type);
        r.push("exceeds_plucker_degree", h.exceeds_plucker_degree);
        r.push("multidegree", ints(&h.multidegree));
        r.push("degree_coincidence", h.degree_coincidence);
        if !h.general_type {
            r.escalate(Status::Violated);
        }
    }
    let gens = p.generators(g.ambient.ring())?;
    match gens.len() {
        0 => {}
        1 => {
            let f = gens.into_iter().next().expect("one generator");
            if let Some(d) = p.int_param("degree")? {
                if f.homogeneous_degree()? != d {
                    return Err(CliError::Usage(
                        "witness degree differs from param degree".into(),
                    ));
                }
            }
            let c = wgr_witness_report(&g, f, cfg)?;
            r.push("witness_quasi_smooth", c.quasi_smooth);
            r.push("witness_well_formed", c.well_formed);
            r.push("witness_canonical_degree", c.canonical_degree);
            if !(c.quasi_smooth && c.well_formed) {
                r.escalate(Status::Violated);
            }
        }
        _ => {
            return Err(CliError::Usage(
                "wgr takes at most one witness gen line".into(),
            ))
        }
    }
    Ok(())
}

fn parse_class(text: &str) -> Result<ClassFilter, CliError> {
    Ok(match text {
        "any" => ClassFilter::Any,
        "general-type" => ClassFilter::Only(KodairaClass::GeneralType),
        "calabi-yau" => ClassFilter::Only(KodairaClass::CalabiYau),
        "fano" => ClassFilter::Only(KodairaClass::Fano),
        other => return Err(CliError::Usage(format!("unknown class '{other}'"))),
    })
}

fn positive(p: &ProblemFile, name: &str, default: i64) -> Result<i64, CliError> {
    let v = p.int_param(name)?.unwrap_or(default);
    if v < 0 {
        return Err(CliError::Usage(format!(
            "parameter '{name}' must be non-negative"
        )));
    }
    Ok(v)
}

fn enumerate(p: &ProblemFile, cfg: &GbConfig, r: &mut Report) -> Result<(), CliError> {
    let kind = p.param("kind").unwrap_or("wps");
    r.push("kind", kind);
    let max_results = positive(p, "max_results", 100_000)? as usize;
    let lines: Vec<String> = match kind {
        "wps" => {
            let b = CandidateBounds {
                max_weight: positive(p, "max_weight", 3)?,
                max_codim: positive(p, "max_codim", 1)? as usize,
                dim: positive(p, "dim", 2)? as usize,
                max_degree_sum: positive(p, "max_degree_sum", 12)?,
                class: parse_class(p.param("class").unwrap_or("any"))?,
                max_results,
            };
            r.push("witness_checked", false);
            enumerate_candidates(&b)?
                .iter()
                .map(|c| {
                    format!(
                        "P({});{};{};{}",
                        ints(&c.weights).join(","),
                        ints(&c.multidegree).join(","),
                        c.canonical_degree,
                        c.kodaira_class
                    )
                })
                .collect()
        }
        "wgr" => {
            let max_a = positive(p, "max_a", 2)?;
            let max_d = positive(p, "max_d", 8)?;
            enumerate_wgr_general_type(max_a, max_d, max_results, cfg)?
                .iter()
                .map(|c| {
                    format!(
                        "wGr({});{};{}",
                        ints(&c.a).join(","),
                        c.d,
                        c.report.antican_x
                    )
                })
                .collect()
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown enumeration kind '{other}'"
            )))
        }
    };
    r.push("count", lines.len());
    let width = lines.len().to_string().len();
    for (i, l) in lines.into_iter().enumerate() {
        r.push(format!("candidate_{:0width$}", i + 1), Value::Str(l));
    }
    Ok(())
}
