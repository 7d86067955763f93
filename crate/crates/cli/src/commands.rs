//! Dispatch from parsed arguments to the library, building a [`Report`].

use dashu_int::IBig;
use periodlab_core::error::Result;
use periodlab_core::galois::{
    self, OrbitParams, PeriodSpec, consistency_probe, describe, detect_cm, sample_conjugates,
};
use periodlab_core::mzv::{
    Composition, admissible_compositions, dimension_table, double_shuffle_relations,
};
use periodlab_core::periods::{
    EllipticCurveQ, compute_gamma_rational, compute_log_rational, compute_mzv, compute_pi,
    compute_zeta, elliptic_periods, hypergeometric_pfq,
};
use periodlab_core::relations::{
    AlgebraicityResult, CensusParams, CensusReport, RelationOutcome, RelationQuery,
    algebraicity_check, monomial_census, pslq,
};
use serde_json::json;

use crate::args::*;
use crate::cache::Cache;
use crate::format::Report;
use crate::valuespec;

pub struct Ctx {
    pub digits: usize,
    pub bits: usize,
    pub cache: Option<Cache>,
    pub echo: String,
}

impl Ctx {
    fn report(&self) -> Report {
        Report::new(self.echo.clone(), self.digits, self.bits)
    }

    fn cached_real(
        &mut self,
        tag: &str,
        compute: impl FnOnce(usize) -> Result<periodlab_core::real::Real>,
    ) -> Result<periodlab_core::real::Real> {
        let key = format!("{tag}@{}", self.digits);
        if let Some(cache) = &mut self.cache
            && let Some(hit) = cache.get(&key)
                && hit.precision_bits() >= self.bits {
                    return Ok(hit);
                }
        let value = compute(self.bits)?;
        if let Some(cache) = &mut self.cache {
            cache.put(&key, &value);
        }
        Ok(value)
    }
}

pub fn dispatch(cmd: &Command, ctx: &mut Ctx) -> Result<Report> {
    match cmd {
        Command::Period { command: PeriodCommand::Compute { what } } => period_compute(what, ctx),
        Command::Mzv { command } => mzv_cmd(command, ctx),
        Command::Relation { command } => relation_cmd(command, ctx),
        Command::Galois { command } => galois_cmd(command, ctx),
        Command::Suite { .. } => unreachable!("suite handled by the caller"),
    }
}

fn period_compute(what: &PeriodKind, ctx: &mut Ctx) -> Result<Report> {
    let mut report = ctx.report();
    let digits = ctx.digits;
    match what {
        PeriodKind::Pi => {
            let v = ctx.cached_real("pi", |bits| Ok(compute_pi(bits)))?;
            report.push_real("pi", &v, digits)?;
        }
        PeriodKind::Log(q) => {
            let q: periodlab_core::rational::Rational = q.q.parse()?;
            let tag = format!("log({q})");
            let v = ctx.cached_real(&tag, |bits| compute_log_rational(&q, bits))?;
            report.push_real(&tag, &v, digits)?;
        }
        PeriodKind::Zeta(s) => {
            let s = s.s;
            let tag = format!("zeta({s})");
            let v = ctx.cached_real(&tag, |bits| compute_zeta(s, bits))?;
            report.push_real(&tag, &v, digits)?;
        }
        PeriodKind::Mzv(c) => {
            let comp = Composition::parse(&c.comp)?;
            let tag = format!("zeta{comp}");
            let v = ctx.cached_real(&tag, |bits| compute_mzv(&comp, bits))?;
            report.push_real(&tag, &v, digits)?;
        }
        PeriodKind::Gamma(x) => {
            let x: periodlab_core::rational::Rational = x.x.parse()?;
            let tag = format!("gamma({x})");
            let v = ctx.cached_real(&tag, |bits| compute_gamma_rational(&x, bits))?;
            report.push_real(&tag, &v, digits)?;
        }
        PeriodKind::Elliptic(curve) => {
            let e = EllipticCurveQ::new(curve.g2.parse()?, curve.g3.parse()?)?;
            let data = elliptic_periods(&e, ctx.bits)?;
            report.push(
                format!("curve: {e}"),
                json!({"kind": "curve", "g2": e.g2().to_string(), "g3": e.g3().to_string(),
                       "discriminant": e.discriminant().to_string(),
                       "j": e.j_invariant().to_string(), "status": "ok"}),
            );
            report.push_complex("omega1", &data.omega1, digits)?;
            report.push_complex("omega2", &data.omega2, digits)?;
            report.push_complex("eta1", &data.eta1, digits)?;
            report.push_complex("eta2", &data.eta2, digits)?;
            report.push_complex("tau", &data.tau, digits)?;
        }
        PeriodKind::Hyp(h) => {
            let upper = parse_rational_list(&h.upper)?;
            let lower = parse_rational_list(&h.lower)?;
            let z: periodlab_core::rational::Rational = h.z.parse()?;
            let zr = z.to_real(ctx.bits + 32);
            let v = hypergeometric_pfq(&upper, &lower, &zr, ctx.bits)?;
            let tag = format!(
                "{}F{}({};{};{z})",
                upper.len(),
                lower.len(),
                join_rationals(&upper),
                join_rationals(&lower)
            );
            report.push_real(&tag, &v, digits)?;
        }
    }
    Ok(report)
}

fn parse_rational_list(s: &str) -> Result<Vec<periodlab_core::rational::Rational>> {
    s.split(',').map(|p| p.trim().parse()).collect()
}

fn join_rationals(rs: &[periodlab_core::rational::Rational]) -> String {
    rs.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

fn mzv_cmd(cmd: &MzvCommand, ctx: &mut Ctx) -> Result<Report> {
    let mut report = ctx.report();
    match cmd {
        MzvCommand::Dims { max_weight, rank_up_to } => {
            let table = dimension_table(*max_weight, *rank_up_to)?;
            report.push(
                format!("{:<7} {:<11} {:<6} {:<6} {:<5}", "weight", "admissible", "rank", "bound", "d_s"),
                json!({"kind": "header", "columns": ["weight","admissible","rank","bound","d_s"]}),
            );
            // d_0 and d_1 rows for completeness of the Zagier sequence
            for s in 0..=1u32 {
                if *max_weight >= 2 {
                    let d = periodlab_core::mzv::zagier_d(s as i64)?;
                    report.push(
                        format!("{:<7} {:<11} {:<6} {:<6} {:<5}", s, "-", "-", "-", d),
                        json!({"kind": "dim_row", "weight": s, "admissible": null,
                               "rank": null, "bound": null, "d": d}),
                    );
                }
            }
            for e in &table {
                let rank = e.relation_rank.map_or("-".to_string(), |r| r.to_string());
                let bound = e.upper_bound.map_or("-".to_string(), |b| b.to_string());
                report.push(
                    format!(
                        "{:<7} {:<11} {:<6} {:<6} {:<5}",
                        e.weight, e.admissible_count, rank, bound, e.zagier_d
                    ),
                    json!({"kind": "dim_row", "weight": e.weight,
                           "admissible": e.admissible_count,
                           "rank": e.relation_rank, "bound": e.upper_bound,
                           "d": e.zagier_d}),
                );
            }
        }
        MzvCommand::Value(c) => {
            let comp = Composition::parse(&c.comp)?;
            let digits = ctx.digits;
            let tag = format!("zeta{comp}");
            let v = ctx.cached_real(&tag, |bits| compute_mzv(&comp, bits))?;
            report.push_real(&tag, &v, digits)?;
        }
        MzvCommand::Relations { weight } => {
            let m = double_shuffle_relations(*weight)?;
            let basis = admissible_compositions(*weight)?;
            report.push(
                format!(
                    "finite double-shuffle relations at weight {weight}: {} rows, rank {}",
                    m.rows(),
                    m.exact_rank()
                ),
                json!({"kind": "relation_matrix", "weight": weight, "rows": m.rows(),
                       "rank": m.exact_rank(),
                       "basis": basis.iter().map(|c| c.to_string()).collect::<Vec<_>>()}),
            );
            for i in 0..m.rows() {
                let terms: Vec<String> = m
                    .row(i)
                    .iter()
                    .zip(&basis)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, b)| format!("{c}·ζ{b}"))
                    .collect();
                report.push(
                    format!("  {} = 0", terms.join(" + ")),
                    json!({"kind": "relation_row", "index": i,
                           "coefficients": m.row(i).iter().map(|c| c.to_string()).collect::<Vec<_>>()}),
                );
            }
        }
    }
    Ok(report)
}

fn relation_cmd(cmd: &RelationCommand, ctx: &mut Ctx) -> Result<Report> {
    let mut report = ctx.report();
    match cmd {
        RelationCommand::Hunt { values, max_norm, threshold_exp } => {
            let vals = valuespec::parse_value_list(values)?;
            let names: Vec<String> = vals.iter().map(|v| v.name().to_string()).collect();
            let query = RelationQuery {
                values: vals,
                precision_bits: ctx.bits,
                max_coeff_norm: *max_norm,
                detect_threshold_exp: *threshold_exp,
            };
            let result = pslq(&query)?;
            push_relation_outcome(&mut report, &result.outcome, &names);
            for d in &result.diagnostics {
                report.push(
                    format!("note: {d}"),
                    json!({"kind": "diagnostic", "message": d}),
                );
            }
        }
        RelationCommand::Minpoly { value, max_degree, max_norm } => {
            let v = valuespec::parse_value_expr(value)?;
            match algebraicity_check(&v, *max_degree, *max_norm, ctx.bits)? {
                AlgebraicityResult::Found { polynomial, degree, residual_exp } => {
                    let poly_str = render_poly(&polynomial);
                    report.push(
                        format!(
                            "minimal polynomial (degree {degree}): {poly_str} \
                             (residual <= 2^{residual_exp} at doubled precision)"
                        ),
                        json!({"kind": "minpoly", "value": v.name(), "degree": degree,
                               "coefficients": polynomial.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                               "residual_exp": residual_exp, "status": "found"}),
                    );
                }
                AlgebraicityResult::Excluded { max_degree, coeff_norm } => {
                    report.push(
                        format!(
                            "no polynomial of degree <= {max_degree} with coefficient \
                             max-norm <= {coeff_norm} at this precision"
                        ),
                        json!({"kind": "minpoly", "value": v.name(), "status": "excluded",
                               "max_degree": max_degree, "coeff_norm": coeff_norm}),
                    );
                }
            }
        }
        RelationCommand::Census { gens, degree, max_norm } => {
            let generators = valuespec::parse_value_list(gens)?;
            let params = CensusParams {
                degree_bound: *degree,
                precision_bits: ctx.bits,
                max_coeff_norm: *max_norm,
            };
            let census = monomial_census(&generators, &params)?;
            push_census(&mut report, &census);
        }
    }
    Ok(report)
}

fn push_relation_outcome(report: &mut Report, outcome: &RelationOutcome, names: &[String]) {
    match outcome {
        RelationOutcome::Found { coefficients, residual_exp } => {
            let combo = render_combination(coefficients, names);
            report.push(
                format!("relation: {combo} = 0 (residual <= 2^{residual_exp} at doubled precision)"),
                json!({"kind": "relation", "status": "found",
                       "coefficients": coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                       "names": names, "residual_exp": residual_exp}),
            );
        }
        RelationOutcome::Excluded { exclusion_norm } => {
            report.push(
                format!("no relation with coefficient max-norm <= {exclusion_norm} at this precision"),
                json!({"kind": "relation", "status": "excluded",
                       "exclusion_norm": exclusion_norm, "names": names}),
            );
        }
    }
}

fn render_combination(coeffs: &[IBig], names: &[String]) -> String {
    let mut out = String::new();
    for (c, n) in coeffs.iter().zip(names) {
        if *c == IBig::ZERO {
            continue;
        }
        let mag = if *c < IBig::ZERO { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if *c < IBig::ZERO {
                out.push('-');
            }
        } else if *c < IBig::ZERO {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format!("{mag}·{n}"));
    }
    if out.is_empty() { "0".into() } else { out }
}

fn render_poly(coeffs: &[IBig]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != IBig::ZERO)
        .map(|(k, c)| match k {
            0 => format!("{c}"),
            1 => format!("{c}·x"),
            _ => format!("{c}·x^{k}"),
        })
        .collect();
    terms.join(" + ")
}

fn monomial_name(names: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|&(_, &e)| e > 0)
        .map(|(n, &e)| if e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if parts.is_empty() { "1".into() } else { parts.join("*") }
}

fn push_census(report: &mut Report, census: &CensusReport) {
    report.push(
        format!(
            "census: {} generators, degree <= {}, {} monomials",
            census.generator_names.len(),
            census.degree_bound,
            census.monomial_count
        ),
        serde_json::to_value(census).unwrap_or_else(|_| json!({"kind": "census"})),
    );
    for rel in &census.relations_found {
        let names: Vec<String> = census
            .monomial_exponents
            .iter()
            .map(|e| monomial_name(&census.generator_names, e))
            .collect();
        let combo = render_combination(&rel.raw, &names);
        report.push(format!("  relation: {combo} = 0"), json!({"kind": "census_relation"}));
    }
    report.push(
        format!(
            "independent relations: {}; empirical trdeg estimate: {}; \
             exclusion max-norm on the remaining set: {}",
            census.independent_relation_count,
            census.empirical_trdeg_estimate,
            census.exclusion_norm
        ),
        json!({"kind": "census_summary",
               "independent_relations": census.independent_relation_count,
               "empirical_trdeg_estimate": census.empirical_trdeg_estimate,
               "exclusion_norm": census.exclusion_norm}),
    );
}

fn galois_cmd(cmd: &GaloisCommand, ctx: &mut Ctx) -> Result<Report> {
    let mut report = ctx.report();
    match cmd {
        GaloisCommand::Describe { class } => {
            let spec = valuespec::parse_class_spec(class)?;
            let cm = resolve_cm(&spec, ctx)?;
            let d = describe(&spec, cm.as_ref())?;
            push_descriptor(&mut report, &d);
        }
        GaloisCommand::Conjugates { class, params } => {
            let spec = valuespec::parse_class_spec(class)?;
            let params = valuespec::parse_orbit_params(params)?;
            let sample = sample_conjugates(&spec, &params, ctx.bits)?;
            let digits = ctx.digits;
            let labels: Vec<String> = match &sample.parameters {
                OrbitParams::Scalars(rs) => rs.iter().map(|r| format!("r={r}")).collect(),
                OrbitParams::Pairs(ps) => {
                    ps.iter().map(|(a, b)| format!("(a,b)=({a},{b})")).collect()
                }
            };
            for (label, v) in labels.iter().zip(&sample.values) {
                report.push_complex(&format!("conjugate[{label}]"), v, digits)?;
            }
        }
        GaloisCommand::Cm(curve) => {
            let e = EllipticCurveQ::new(curve.g2.parse()?, curve.g3.parse()?)?;
            let decision = detect_cm(&e, ctx.bits, 10_000)?;
            let text = if decision.is_cm {
                let fd = decision.field_disc.unwrap();
                let radicand = if fd % 4 == 0 { fd / 4 } else { fd };
                format!(
                    "CM curve: j = {}, order discriminant {}, field Q(√({radicand})), tau minimal polynomial {}",
                    decision.j,
                    decision.order_disc.unwrap(),
                    render_poly(decision.tau_minpoly.as_ref().unwrap())
                )
            } else {
                format!(
                    "non-CM curve: j = {} is not one of the thirteen rational CM j-invariants \
                     (exact check)",
                    decision.j
                )
            };
            report.push(
                text,
                serde_json::to_value(&decision).unwrap_or_else(|_| json!({"kind": "cm"})),
            );
        }
        GaloisCommand::Probe { class, degree, max_norm } => {
            let spec = valuespec::parse_class_spec(class)?;
            let cm = resolve_cm(&spec, ctx)?;
            let probe = consistency_probe(&spec, cm.as_ref(), *degree, ctx.bits, *max_norm)?;
            report.push(
                format!(
                    "probe of {}: period set {{{}}}, degree <= {degree}",
                    probe.class_tag,
                    probe.period_set.join(", ")
                ),
                json!({"kind": "probe", "class": probe.class_tag,
                       "period_set": probe.period_set, "degree": degree}),
            );
            let names: Vec<String> = probe
                .census
                .monomial_exponents
                .iter()
                .map(|e| monomial_name(&probe.period_set, e))
                .collect();
            for f in &probe.findings {
                let combo = render_combination(&f.raw, &names);
                report.push(
                    format!("  [{}] {combo} = 0 — {}", class_label(&f.class), f.description),
                    json!({"kind": "probe_finding", "class": f.class,
                           "coefficients": f.coefficients, "description": f.description}),
                );
            }
            report.push(
                format!(
                    "findings: {} relation(s), {} unexpected; exclusion max-norm {} on the rest",
                    probe.findings.len(),
                    probe.unexpected_count,
                    probe.census.exclusion_norm
                ),
                json!({"kind": "probe_summary", "relations": probe.findings.len(),
                       "unexpected": probe.unexpected_count,
                       "exclusion_norm": probe.census.exclusion_norm}),
            );
        }
    }
    Ok(report)
}

fn class_label(c: &galois::RelationClass) -> &'static str {
    use galois::RelationClass::*;
    match c {
        Legendre => "legendre",
        CmPeriod => "cm-period",
        CmQuasiPeriod => "cm-quasi-period",
        CmMixed => "cm-mixed",
        EulerEven => "euler",
        GammaHalf => "gamma-half",
        MzvPiPower => "mzv-pi-power",
        Unexpected => "UNEXPECTED",
    }
}

fn resolve_cm(
    spec: &PeriodSpec,
    ctx: &Ctx,
) -> Result<Option<periodlab_core::galois::CmDecision>> {
    match spec {
        PeriodSpec::EllipticPeriod { curve } => {
            Ok(Some(detect_cm(curve, ctx.bits.max(200), 10_000)?))
        }
        _ => Ok(None),
    }
}

fn push_descriptor(report: &mut Report, d: &periodlab_core::galois::GaloisDescriptor) {
    report.push(
        format!("class: {}", d.class_tag),
        serde_json::to_value(d).unwrap_or_else(|_| json!({"kind": "descriptor"})),
    );
    report.push(format!("  group: {}", d.group_name), json!({"kind": "descriptor_detail"}));
    report.push(
        format!(
            "  dim G_mot: {}",
            d.dim_gmot.map_or("not catalogued".into(), |v| v.to_string())
        ),
        json!({"kind": "descriptor_detail"}),
    );
    report.push(format!("  orbit: {}", d.orbit_rule), json!({"kind": "descriptor_detail"}));
    report.push(
        format!(
            "  predicted trdeg: {}",
            d.predicted_trdeg.map_or("not catalogued".into(), |v| v.to_string())
        ),
        json!({"kind": "descriptor_detail"}),
    );
    let status = match &d.status {
        periodlab_core::galois::LedgerStatus::Theorem { attribution } => {
            format!("theorem ({attribution})")
        }
        periodlab_core::galois::LedgerStatus::Conjectural { attribution } => {
            format!("conjectural ({attribution})")
        }
    };
    report.push(format!("  status: {status}"), json!({"kind": "descriptor_detail"}));
    report.push(format!("  notes: {}", d.notes), json!({"kind": "descriptor_detail"}));
}
