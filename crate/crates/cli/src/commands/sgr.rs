use liftlog_core::semigroup::{
    sgr_is_regular, sgr_quotient, sgr_rr_closure, sgr_tangent, sgr_tangent_ring, NumericalSemigroup, OrderSet,
    SemigroupIdeal,
};
use serde_json::json;

use super::{int_list, verifier};
use crate::encode;
use crate::error::CliResult;
use crate::report::{Report, Verification};
use crate::{SgrArgs, SgrOp, Settings};

pub const TANGENT_FLAG: &str = "sgr-tangent-maximal";

pub fn run(args: &SgrArgs, s: Settings) -> CliResult<Report> {
    let sgr = NumericalSemigroup::new(&int_list("--gens", &args.gens)?)?;
    let ideal = |text: &str| -> CliResult<SemigroupIdeal> { Ok(SemigroupIdeal::new(&sgr, &int_list("--ideal", text)?)?) };
    let name = match &args.op {
        SgrOp::Rr { .. } => "rr",
        SgrOp::Tangent { .. } => "tangent",
        SgrOp::Quotient { .. } => "quotient",
        SgrOp::Power { .. } => "power",
        SgrOp::Regular => "regular",
    };
    let mut r = Report::new(&["sgr", name]);
    r.input("semigroup", json!(sgr.generators()));
    r.output("frobenius", sgr.frobenius());
    match &args.op {
        SgrOp::Rr { ideal: text, window } => {
            let e = ideal(text)?;
            r.input("ideal", e.to_string());
            r.input("window", *window);
            let rep = sgr_rr_closure(&e, s.n_max, *window)?;
            let mut quotients = Vec::new();
            let mut lower = e.clone();
            for _ in 0..rep.stabilized_at + rep.checked_window - 1 {
                let upper = lower.product(&e)?;
                quotients.push(upper.quotient(&lower)?.to_string());
                lower = upper;
            }
            r.output("closure", encode::sgr_ideal(&rep.closure));
            r.output("quotients", quotients);
            r.output("stabilized_at", rep.stabilized_at);
            r.output("power_check_passed", rep.power_check_passed);
            r.output("powers_agree_from", json!(rep.powers_agree_from));
            r.cite(&["ratliff-rush-ideal", "rr-closure-ex"]);
            if let Some(mut v) = verifier(&s) {
                v.push("E ⊆ Ê", e.is_subset_of(&rep.closure), None);
                v.push("high powers of Ê and E agree", rep.power_check_passed, None);
                r.verification = Some(v);
            }
        }
        SgrOp::Tangent { ideal: text } => {
            let (e, k) = match text {
                Some(t) => {
                    let e = ideal(t)?;
                    r.input("ideal", e.to_string());
                    let k = sgr_tangent(&e)?;
                    (e, k)
                }
                None => (SemigroupIdeal::unit(&sgr), sgr_tangent_ring(&sgr)),
            };
            r.output("orders", encode::order_set(&k));
            r.cite(&["rr-closure-ex", "seidenberg", "1-dim"]);
            if sgr.generators() == [4, 5, 6, 7] && e == SemigroupIdeal::maximal(&sgr) {
                r.flag(
                    TANGENT_FLAG,
                    format!(
                        "literature value R t∂t + R t^2∂t for the maximal ideal of Q[t^4, t^5, t^6, t^7]; \
                         the derived order set is {k} (orders {:?}), since t^3∂t and t^4∂t also preserve it",
                        k.generators()
                    ),
                );
            }
            if let Some(mut v) = verifier(&s) {
                verify_orders(&mut v, &sgr, &e, &k);
                if text.is_none() && !sgr.is_regular() {
                    let m = sgr_tangent(&SemigroupIdeal::maximal(&sgr))?;
                    v.push("T(R) = T(m) for a singular ring", m == k, None);
                    v.push("every derivation vanishes at the singular point", k.min_order() >= 1, None);
                }
                r.verification = Some(v);
            }
        }
        SgrOp::Quotient { ideal: text, by } => {
            let e = ideal(text)?;
            let f = ideal(by)?;
            r.input("ideal", e.to_string());
            r.input("by", f.to_string());
            let result = sgr_quotient(&e, &f)?;
            r.output("result", encode::sgr_ideal(&result));
            if let Some(mut v) = verifier(&s) {
                let bound = sgr.frobenius() + 3 * sgr.generators().iter().max().copied().unwrap_or(1)
                    + e.threshold()
                    + f.threshold();
                let bad = (0..=bound).find(|&m| {
                    let want = (0..=bound).filter(|&x| f.contains(x)).all(|x| e.contains(m + x));
                    want != result.contains(m)
                });
                v.push("brute-force quotient membership", bad.is_none(), bad.map(|m| format!("t^{m}")));
                r.verification = Some(v);
            }
        }
        SgrOp::Power { ideal: text, k } => {
            let e = ideal(text)?;
            r.input("ideal", e.to_string());
            r.input("k", *k);
            let p = e.power(*k);
            r.output("result", encode::sgr_ideal(&p));
            if let Some(mut v) = verifier(&s) {
                let mut acc = SemigroupIdeal::unit(&sgr);
                for _ in 0..*k {
                    acc = acc.product(&e)?;
                }
                v.push("power equals repeated product", acc == p, None);
                r.verification = Some(v);
            }
        }
        SgrOp::Regular => {
            r.output("regular", sgr_is_regular(&sgr));
            r.cite(&["seidenberg"]);
        }
    }
    Ok(r)
}

/// Rescans orders element by element rather than generator by generator.
fn verify_orders(v: &mut Verification, sgr: &NumericalSemigroup, e: &SemigroupIdeal, k: &OrderSet) {
    let top = sgr.generators().iter().max().copied().unwrap_or(1);
    let bound = e.threshold() + sgr.frobenius() + 2 * top + 2;
    let bad = (0..=bound).find(|&ord| {
        let ring_ok = (1..=bound).filter(|&s| sgr.contains(s)).all(|s| sgr.contains(s + ord - 1));
        let ideal_ok = (1..=bound).filter(|&s| e.contains(s)).all(|s| e.contains(s + ord - 1));
        (ring_ok && ideal_ok) != k.contains(ord)
    });
    v.push("order set matches an elementwise scan", bad.is_none(), bad.map(|o| format!("order {o}")));
}
