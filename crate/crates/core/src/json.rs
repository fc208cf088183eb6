//! JSON output.
//!
//! Coefficients are exact rational strings (`"3"`, `"-1/2"`). Object keys
//! come out sorted, so equal values always serialize to identical bytes.

use serde_json::{json, Map, Value};

use crate::element::Element;
use crate::grading::GradeKey;
use crate::ideal::{ClosureReport, ExperimentSummary, Finding, Lemma2Trace, Stats, Trace};
use crate::monomial::{MonoKey, Monomial};
use crate::structure::{AdDiagonalReport, AutomorphismVerdict, DerivationReport};
use crate::window::TruncationCaps;
use crate::Rational;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn key(k: &MonoKey) -> Value {
    let exp: Map<String, Value> = k.exp.iter().map(|(s, a)| (s.to_string(), json!(a))).collect();
    let poly: Map<String, Value> = k.poly.iter().map(|(v, p)| (v.to_string(), json!(p))).collect();
    json!({
        "exp": exp,
        "poly": poly,
        "d": k.deriv.map(|t| t + 1),
    })
}

pub fn term(m: &Monomial) -> Value {
    let mut v = key(&m.key);
    v["coeff"] = rational(&m.coeff);
    v
}

pub fn element_with_meta(e: &Element, meta: Value) -> Value {
    json!({
        "algebra": e.sig().to_string(),
        "terms": e.terms().iter().map(term).collect::<Vec<_>>(),
        "text": e.to_string(),
        "meta": meta,
    })
}

pub fn element(e: &Element) -> Value {
    element_with_meta(e, json!({}))
}

pub fn grade(g: &GradeKey) -> Value {
    json!(g.0)
}

pub fn caps(c: &TruncationCaps) -> Value {
    json!({
        "max_poly": c.max_poly,
        "min_poly": c.min_poly,
        "max_exp": c.max_exp,
        "max_window": c.max_window,
    })
}

pub fn stats(s: &Stats) -> Value {
    json!({
        "components": s.components,
        "w_h": s.w_h(),
        "h_h": s.h_h(),
        "hp": s.hp(),
        "lp": s.lp(),
        "max_grade": s.max_grade.as_ref().map(grade),
        "min_grade": s.min_grade.as_ref().map(grade),
        "has_zero_component": s.has_zero_component,
    })
}

pub fn trace(t: &Trace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| {
            json!({
                "tactic": s.tactic.name(),
                "multiplier": element(&s.multiplier),
                "times": s.times,
                "before": stats(&s.before),
                "after": stats(&s.after),
            })
        })
        .collect();
    json!({
        "input": element(&t.input),
        "steps": steps,
        "output": element(&t.output),
    })
}

pub fn finding(f: &Finding) -> Value {
    json!({
        "tactic": f.tactic.name(),
        "input": element(&f.input),
        "error": f.error.to_string(),
    })
}

pub fn closure(r: &ClosureReport) -> Value {
    json!({
        "seed": element(&r.seed),
        "caps": caps(&r.caps),
        "working_caps": caps(&r.working_caps),
        "escalations": r.escalations,
        "bracket": r.bracket,
        "multiplier_budget": r.multiplier_budget,
        "multiplier_count": r.multiplier_count,
        "reached_count": r.reached_count,
        "window_size": r.window_size,
        "working_size": r.working_size,
        "coverage": rational(&r.coverage()),
        "coverage_bound": rational(&r.coverage_bound),
        "attains_bound": r.attains_bound(),
        "unreached": r.unreached.iter().map(key).collect::<Vec<_>>(),
        "rank": r.rank,
        "rounds": r.rounds,
        "reached_by_round": r.reached_by_round,
        "evaluated": r.evaluated,
        "discarded": r.discarded,
        "discard_rate": rational(&r.discard_rate()),
        "fixed_point": r.fixed_point,
        "round_limit_hit": r.round_limit_hit,
        "tactic_trace": r.tactic_trace.as_ref().map(trace),
        "findings": r.findings.iter().map(finding).collect::<Vec<_>>(),
    })
}

pub fn experiment(s: &ExperimentSummary) -> Value {
    json!({
        "algebra": s.algebra,
        "caps": caps(&s.caps),
        "rng_seed": s.rng_seed,
        "seeds": s.reports.len(),
        "coverages": s.coverages().iter().map(rational).collect::<Vec<_>>(),
        "min_coverage": rational(&s.min_coverage()),
        "corroborated": s.corroborated(),
        "attains_bounds": s.attains_bounds(),
        "reports": s.reports.iter().map(closure).collect::<Vec<_>>(),
    })
}

pub fn derivation(r: &DerivationReport) -> Value {
    let residuals: Vec<Value> = r
        .residuals
        .iter()
        .map(|res| {
            json!({
                "a": key(&res.a),
                "b": key(&res.b),
                "residual": element(&res.residual),
            })
        })
        .collect();
    json!({
        "is_derivation": r.is_derivation(),
        "pairs_checked": r.pairs_checked,
        "pairs_skipped": r.pairs_skipped,
        "coverage": rational(&r.coverage()),
        "residuals": residuals,
    })
}

pub fn ad_diagonal(r: &AdDiagonalReport) -> Value {
    let eigenvalues: Vec<Value> = r
        .eigenvalues
        .iter()
        .map(|(k, l)| json!({"monomial": key(k), "eigenvalue": rational(l)}))
        .collect();
    json!({
        "candidate": element(&r.candidate),
        "diagonal": r.diagonal,
        "eigenvalues": eigenvalues,
        "witness": r.witness.as_ref().map(|(k, e)| json!({"monomial": key(k), "bracket": element(e)})),
    })
}

pub fn automorphism(v: &AutomorphismVerdict) -> Value {
    json!({
        "accepted": v.accepted(),
        "relation_holds": v.relation_holds,
        "shape_holds": v.shape_holds,
        "alpha": v.alpha.as_ref().map(rational),
        "beta": v.beta.as_ref().map(rational),
        "relation_residual": element(&v.relation_residual),
    })
}

pub fn lemma2(t: &Lemma2Trace) -> Value {
    let combination: Vec<Value> = t
        .combination
        .iter()
        .map(|(c, a, b)| json!({"coeff": rational(c), "left": element(a), "right": element(b)}))
        .collect();
    json!({
        "target": element(&t.target),
        "pattern": format!("{:?}", t.pattern),
        "combination": combination,
        "multiple": rational(&t.multiple),
    })
}

/// Pretty-printed with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built here always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_element;
    use std::sync::Arc;

    #[test]
    fn element_shape() {
        let sig = Arc::new("W(1; x1:[1])".parse().unwrap());
        let e = parse_element("-1/2*e^{2*x1}*x1^3 D1", sig).unwrap();
        let v = element(&e);
        assert_eq!(v["algebra"], "W(1; x1:[1])");
        let t = &v["terms"][0];
        assert_eq!(t["coeff"], "-1/2");
        assert_eq!(t["exp"]["x1^1"], 2);
        assert_eq!(t["poly"]["x1"], 3);
        assert_eq!(t["d"], 1);
    }

    #[test]
    fn rendering_is_stable() {
        let sig = Arc::new("H(1,1)".parse().unwrap());
        let e = parse_element("e^{y1}*x1 + 3*y1^-1", sig).unwrap();
        assert_eq!(render(&element(&e)), render(&element(&e.clone())));
    }
}
