use liftlog_core::closures::{
    default_oracle_bound, integral_closure, integral_member_oracle, newton_polyhedron, rr_closure,
};
use serde_json::json;

use super::{for_each_point, ideal_input, verifier};
use crate::encode;
use crate::error::CliResult;
use crate::report::Report;
use crate::{ClosureOp, NewtonOp, Settings};

pub fn run_closure(op: &ClosureOp, s: Settings) -> CliResult<Report> {
    match op {
        ClosureOp::Rr { i, window } => {
            let mut r = Report::new(&["closure", "rr"]);
            let ideal = ideal_input(&mut r, "I", &i.ideal)?;
            r.input("window", *window);
            r.input("n_max", s.n_max);
            let rep = rr_closure(&ideal, s.n_max, *window)?;
            r.output("closure", encode::ideal(&rep.closure));
            r.output("stabilized_at", rep.stabilized_at);
            r.output("checked_window", rep.checked_window);
            r.output("power_check_passed", rep.power_check_passed);
            r.output("powers_agree_from", json!(rep.powers_agree_from));
            r.cite(&["ratliff-rush-ideal"]);
            if let Some(mut v) = verifier(&s) {
                let bar = integral_closure(&ideal)?;
                v.push("I ⊆ Î", ideal.is_subset_of(&rep.closure), None);
                v.push("Î ⊆ Ī", rep.closure.is_subset_of(&bar), None);
                v.push("high powers of Î and I agree", rep.power_check_passed, None);
                let again = rr_closure(&rep.closure, s.n_max, *window)?;
                v.push("Î is Ratliff-Rush closed", again.closure == rep.closure, None);
                r.verification = Some(v);
            }
            Ok(r)
        }
        ClosureOp::Integral(i) => {
            let mut r = Report::new(&["closure", "integral"]);
            let ideal = ideal_input(&mut r, "I", &i.ideal)?;
            let bar = integral_closure(&ideal)?;
            r.output("closure", encode::ideal(&bar));
            r.cite(&["int-clos-lemma", "newton-polyhedron"]);
            if let Some(mut v) = verifier(&s) {
                let k = default_oracle_bound(&ideal);
                let mut bad = None;
                let mut count = 0usize;
                for_each_point(&ideal.max_exponents(), |a| {
                    count += 1;
                    if bad.is_none() && bar.member(a).unwrap_or(false) != integral_member_oracle(&ideal, a, k) {
                        bad = Some(ideal.ctx().format_monomial(a));
                    }
                });
                let passed = bad.is_none();
                let detail = match bad {
                    Some(m) => format!("disagreement at {m}"),
                    None => format!("{count} points, k_max = {k}"),
                };
                v.push("integral-equation oracle on the generator box", passed, Some(detail));
                v.push("I ⊆ Ī ⊆ √I", ideal.is_subset_of(&bar) && bar.is_subset_of(&ideal.radical()?), None);
                v.push("Ī is integrally closed", integral_closure(&bar)? == bar, None);
                r.verification = Some(v);
            }
            Ok(r)
        }
    }
}

pub fn run_newton(op: &NewtonOp, s: Settings) -> CliResult<Report> {
    let NewtonOp::Facets(i) = op;
    let mut r = Report::new(&["newton", "facets"]);
    let ideal = ideal_input(&mut r, "I", &i.ideal)?;
    let np = newton_polyhedron(&ideal)?;
    let facets: Vec<_> = np
        .facets()
        .iter()
        .map(|f| json!({ "normal": f.normal, "rhs": f.rhs }))
        .collect();
    r.output("facets", facets);
    r.cite(&["newton-polyhedron", "rees-valuations"]);
    if let Some(mut v) = verifier(&s) {
        let bar = integral_closure(&ideal)?;
        let sound = ideal.gens().iter().chain(bar.gens()).all(|g| np.contains(g));
        v.push("generators of I and Ī satisfy every facet", sound, None);
        let tight = np.facets().iter().all(|f| ideal.gens().iter().any(|g| f.is_tight(g)));
        v.push("every facet is tight on a generator", tight, None);
        r.verification = Some(v);
    }
    Ok(r)
}
