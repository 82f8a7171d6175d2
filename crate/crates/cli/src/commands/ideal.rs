use liftlog_core::parse::parse_ideal;
use liftlog_core::MonomialIdeal;

use super::{for_each_point, ideal_input, second_ideal, verifier};
use crate::encode;
use crate::error::{usage, CliResult};
use crate::report::Report;
use crate::{IdealOp, Settings};

#[derive(Clone, Copy)]
enum Binary {
    Sum,
    Product,
    Quotient,
    Intersect,
}

pub fn run(op: &IdealOp, s: Settings) -> CliResult<Report> {
    match op {
        IdealOp::Show(a) => {
            let mut r = Report::new(&["ideal", "show"]);
            let i = ideal_input(&mut r, "I", &a.ideal)?;
            r.output("result", encode::ideal(&i));
            r.output("m_primary", i.is_m_primary());
            r.output("radical", i.is_radical());
            Ok(r)
        }
        IdealOp::Sum(p) => binary(&["ideal", "sum"], Binary::Sum, &p.i.ideal, &p.j, s),
        IdealOp::Product(p) => binary(&["ideal", "product"], Binary::Product, &p.i.ideal, &p.j, s),
        IdealOp::Quotient(p) => binary(&["ideal", "quotient"], Binary::Quotient, &p.i.ideal, &p.j, s),
        IdealOp::Intersect(p) => binary(&["ideal", "intersect"], Binary::Intersect, &p.i.ideal, &p.j, s),
        IdealOp::Power { i, k } => {
            let mut r = Report::new(&["ideal", "power"]);
            let ideal = ideal_input(&mut r, "I", &i.ideal)?;
            r.input("k", *k);
            let result = ideal.power(*k);
            r.output("result", encode::ideal(&result));
            if let Some(mut v) = verifier(&s) {
                let mut acc = MonomialIdeal::unit(ideal.ctx());
                for _ in 0..*k {
                    acc = acc.product(&ideal)?;
                }
                v.push("power equals repeated product", acc == result, None);
                r.verification = Some(v);
            }
            Ok(r)
        }
        IdealOp::Radical(a) => {
            let mut r = Report::new(&["ideal", "radical"]);
            let ideal = ideal_input(&mut r, "I", &a.ideal)?;
            let result = ideal.radical()?;
            r.output("result", encode::ideal(&result));
            if let Some(mut v) = verifier(&s) {
                // x^a is in the radical iff x^{k a} is in I for k = max degree.
                let k = ideal.max_degree().max(1);
                let upper: Vec<u32> = ideal.max_exponents().iter().map(|e| e + 1).collect();
                let mut bad = None;
                for_each_point(&upper, |a| {
                    let scaled: Vec<u32> = a.iter().map(|x| x * k).collect();
                    let want = !ideal.is_zero() && ideal.member(&scaled).unwrap_or(false);
                    if bad.is_none() && result.member(a).unwrap_or(false) != want {
                        bad = Some(ideal.ctx().format_monomial(a));
                    }
                });
                v.push("brute-force membership on the generator box", bad.is_none(), bad);
                r.verification = Some(v);
            }
            Ok(r)
        }
        IdealOp::Member { i, monomial } => {
            let mut r = Report::new(&["ideal", "member"]);
            let ideal = ideal_input(&mut r, "I", &i.ideal)?;
            let m = parse_ideal(ideal.ctx(), monomial)?;
            let [a] = m.gens() else {
                return Err(usage("--monomial must be a single monomial"));
            };
            r.input("monomial", ideal.ctx().format_monomial(a));
            r.output("member", ideal.member(a)?);
            Ok(r)
        }
    }
}

fn binary(cmd: &[&str], op: Binary, i_text: &str, j_text: &str, s: Settings) -> CliResult<Report> {
    let mut r = Report::new(cmd);
    let i = ideal_input(&mut r, "I", i_text)?;
    let j = second_ideal(&mut r, "J", i.ctx(), j_text)?;
    let result = match op {
        Binary::Sum => i.sum(&j)?,
        Binary::Product => i.product(&j)?,
        Binary::Quotient => i.quotient(&j)?,
        Binary::Intersect => i.intersect(&j)?,
    };
    r.output("result", encode::ideal(&result));
    if let Some(mut v) = verifier(&s) {
        let n = i.ctx().n();
        let upper: Vec<u32> = (0..n)
            .map(|k| {
                [&i, &j, &result]
                    .iter()
                    .flat_map(|x| x.gens().iter().map(move |g| g[k]))
                    .max()
                    .unwrap_or(0)
                    * 2
                    + 1
            })
            .collect();
        let in_i = |a: &[u32]| i.gens().iter().any(|g| g.divides(a));
        let in_j = |a: &[u32]| j.gens().iter().any(|g| g.divides(a));
        let mut bad = None;
        for_each_point(&upper, |a| {
            let want = match op {
                Binary::Sum => in_i(a) || in_j(a),
                Binary::Intersect => in_i(a) && in_j(a),
                Binary::Product => i.gens().iter().any(|g| {
                    j.gens()
                        .iter()
                        .any(|h| g.iter().zip(h.iter()).zip(a).all(|((x, y), z)| x + y <= *z))
                }),
                Binary::Quotient => j.gens().iter().all(|h| {
                    let shifted: Vec<u32> = a.iter().zip(h.iter()).map(|(x, y)| x + y).collect();
                    in_i(&shifted)
                }),
            };
            let got = result.gens().iter().any(|g| g.divides(a));
            if bad.is_none() && got != want {
                bad = Some(i.ctx().format_monomial(a));
            }
        });
        v.push("brute-force membership on a bounding box", bad.is_none(), bad);
        r.verification = Some(v);
    }
    Ok(r)
}
