use liftlog_core::chart::{
    chart_liftable, direct_lift, lifts_into_valuation_ring, lifts_regularly, tangency_check, ChartLift, MonomialMap,
};
use liftlog_core::derivation::{tangent_module, GradedDerivation};
use liftlog_core::parse::{parse_derivation, parse_map};
use liftlog_core::valuation::{log_module, sandwich_report};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use super::{ideal_input, int_list, verifier};
use crate::encode;
use crate::error::{usage, CliResult};
use crate::report::{Report, Verification};
use crate::{LiftOp, Settings};

/// Random monomial derivations tried per chart verification.
const CHART_PROBES: usize = 40;

pub fn run(op: &LiftOp, s: Settings) -> CliResult<Report> {
    match op {
        LiftOp::Blowup(i) => blowup(&i.ideal, s),
        LiftOp::Chart {
            map,
            critical,
            check,
            target_weight,
        } => chart(map, critical, check.as_deref(), target_weight.as_deref(), s),
    }
}

fn blowup(text: &str, s: Settings) -> CliResult<Report> {
    let mut r = Report::new(&["lift", "blowup"]);
    let ideal = ideal_input(&mut r, "I", text)?;
    let rep = sandwich_report(&ideal, s.opts, s.n_max)?;
    let rees: Vec<_> = rep
        .rees
        .iter()
        .map(|(v, d)| json!({ "weight": v.weights(), "value": d }))
        .collect();
    let rr_is_bar = rep.rr.closure == rep.integral_closure;
    r.output("rees_valuations", rees);
    r.output("rr_closure", encode::ideal(&rep.rr.closure));
    r.output("integral_closure", encode::ideal(&rep.integral_closure));
    r.output("radical", encode::ideal(&rep.radical));
    r.output("t_i", encode::module(&rep.t_i));
    r.output("t_rr", encode::module(&rep.t_rr));
    r.output("liftable", encode::module(&rep.l));
    r.output("t_bar", encode::module(&rep.t_bar));
    r.output("t_rad", encode::module(&rep.t_rad));
    r.output("chain_ok", rep.chain_ok);
    r.output("rr_equals_integral_closure", rr_is_bar);
    r.output("uniformly_ramified", rep.uniformly_ramified);
    r.output("differentially_ramified", rep.differentially_ramified);
    r.output(
        "sandwich",
        format!("{} ⊆ {} ⊆ {} ⊆ {}", rep.t_i, rep.t_rr, rep.l, rep.t_bar),
    );
    r.cite(&["blow-up-thm", "mainthm-L1", "mainthm-L2", "log-der-lemma2", "blowup1", "cor:blow"]);
    if let Some(mut v) = verifier(&s) {
        v.push("T(I) ⊆ T(Î) ⊆ L ⊆ T(Ī)", rep.chain_ok, None);
        if rr_is_bar {
            v.push(
                "T(Î) = L = T(Ī) when Î = Ī",
                rep.t_rr.equals(&rep.l) && rep.l.equals(&rep.t_bar),
                None,
            );
        }
        v.push("L ⊆ T(√I)", rep.l.is_submodule_of(&rep.t_rad), None);
        if ideal.is_m_primary() {
            v.push(
                "uniformly ramified implies differentially ramified",
                !rep.uniformly_ramified || rep.differentially_ramified,
                None,
            );
            let ones = rep.rees.iter().all(|(w, _)| w.weights().iter().all(|&x| x == 1));
            v.push(
                "differentially ramified iff every Rees normal is (1,...,1)",
                rep.differentially_ramified == ones,
                None,
            );
        }
        let squared = ideal.power(2);
        let radical = &rep.radical;
        let mut bad = None;
        for (w, _) in &rep.rees {
            let base = log_module(w, &ideal, s.opts)?;
            let same = base.equals(&log_module(w, &squared, s.opts)?) && base.equals(&log_module(w, radical, s.opts)?);
            if !same && bad.is_none() {
                bad = Some(encode::tuple(w.weights()));
            }
        }
        v.push("log modules independent of the defining ideal", bad.is_none(), bad);
        let rebuilt = tangent_module(&rep.integral_closure, s.opts)?;
        v.push("T(Ī) recomputed", rebuilt.equals(&rep.t_bar), None);
        r.verification = Some(v);
    }
    Ok(r)
}

fn critical_indices(map: &MonomialMap, text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(|name| {
            let name = name.trim();
            map.target()
                .index_of(name)
                .ok_or_else(|| usage(format!("--critical: `{name}` is not a target variable")))
        })
        .collect()
}

fn chart(
    map_text: &str,
    critical_text: &str,
    check: Option<&str>,
    target_weight: Option<&str>,
    s: Settings,
) -> CliResult<Report> {
    let mut r = Report::new(&["lift", "chart"]);
    let map = parse_map(map_text, None)?;
    let critical = critical_indices(&map, critical_text)?;
    r.ring = Some(map.source().names().to_vec());
    r.input("map", map.format());
    r.input(
        "critical",
        critical.iter().map(|&j| map.target().name(j).to_string()).collect::<Vec<_>>(),
    );
    let lift = chart_liftable(&map, &critical, s.opts)?;
    r.output("module", encode::module(&lift.module));
    r.output(
        "weights",
        lift.weights
            .iter()
            .map(|(j, w)| json!({ "divisor": map.target().name(*j), "weight": w.weights() }))
            .collect::<Vec<_>>(),
    );
    let unramified: Vec<String> = lift.unramified.iter().map(|&j| map.target().name(j).to_string()).collect();
    if !unramified.is_empty() {
        r.output(
            "warnings",
            unramified
                .iter()
                .map(|x| format!("the chart is unramified along {x} = 0; its constraint is vacuous"))
                .collect::<Vec<_>>(),
        );
    }
    r.cite(&["fund-thm-4", "mainthm-L1", "mainthm-L3"]);

    let omega = target_weight.map(|t| int_list("--target-weight", t)).transpose()?;
    if let Some(w) = &omega {
        r.input("target_weight", json!(w));
    }
    if let Some(text) = check {
        let pieces = parse_derivation(map.source(), text)?;
        r.input("check", text);
        let member = pieces.iter().all(|d| lift.module.contains(d));
        let mut regular = true;
        let mut tangent = true;
        let mut lifts = Vec::new();
        for d in &pieces {
            let l = direct_lift(&map, d)?;
            lifts.push(l.to_text());
            let reg = lifts_regularly(&map, d, &critical)?;
            regular &= reg;
            tangent &= reg && tangency_check(&map, d, &critical)?;
        }
        let mut out = json!({
            "member": member,
            "lifts_regularly": regular,
            "tangent_to_critical_locus": tangent,
            "lift": lifts,
        });
        if let Some(w) = &omega {
            let mut ok = true;
            for d in &pieces {
                ok &= lifts_into_valuation_ring(&direct_lift(&map, d)?, w)?;
            }
            out["valuation_ring_oracle"] = json!(ok);
        }
        r.output("check", out);
    }
    if let Some(mut v) = verifier(&s) {
        verify_chart(&mut v, &map, &critical, &lift, omega.as_deref(), s)?;
        r.verification = Some(v);
    }
    Ok(r)
}

fn verify_chart(
    v: &mut Verification,
    map: &MonomialMap,
    critical: &[usize],
    lift: &ChartLift,
    omega: Option<&[i64]>,
    s: Settings,
) -> CliResult<()> {
    let src = map.source();
    let mut irregular = None;
    let mut not_tangent = None;
    for g in lift.module.generators() {
        if !lifts_regularly(map, g, critical)? {
            irregular.get_or_insert_with(|| g.to_text(src));
        } else if !tangency_check(map, g, critical)? {
            not_tangent.get_or_insert_with(|| g.to_text(src));
        }
    }
    v.push("generators lift regularly", irregular.is_none(), irregular);
    v.push("lifts are tangent to the critical locus", not_tangent.is_none(), not_tangent);
    if let Some(w) = omega {
        let mut bad = None;
        for g in lift.module.generators() {
            if !lifts_into_valuation_ring(&direct_lift(map, g)?, w)? {
                bad.get_or_insert_with(|| g.to_text(src));
            }
        }
        v.push("generators lift into the valuation ring", bad.is_none(), bad);
    }
    if lift.unramified.is_empty() {
        let mut rng = StdRng::seed_from_u64(s.seed);
        let n = src.n();
        let top: u32 = lift
            .module
            .box_upper()
            .iter()
            .map(|&b| (b + 1).clamp(1, 8) as u32)
            .max()
            .unwrap_or(1);
        let mut disagree = None;
        for _ in 0..CHART_PROBES {
            let u: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=top)).collect();
            let d = GradedDerivation::monomial(&u, rng.gen_range(0..n));
            if lifts_regularly(map, &d, critical)? != lift.module.contains(&d) {
                disagree.get_or_insert_with(|| d.to_text(src));
            }
        }
        let passed = disagree.is_none();
        let detail = disagree.map_or_else(
            || format!("{CHART_PROBES} random monomial probes, seed {}", s.seed),
            |d| format!("disagreement at {d}"),
        );
        v.push("criterion matches the direct-lift oracle", passed, Some(detail));
    }
    Ok(())
}
