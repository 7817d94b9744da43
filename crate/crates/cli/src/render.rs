//! Text and JSON rendering of command results.
//!
//! JSON objects are emitted with sorted keys; term lists follow the
//! canonical order of each type. Every rendering ends with a newline.

use compoly::{
    BivariatePoly, BranchSet, ComposedResult, DecompositionResult, DiamondKind, Fe, HomogDecomposition, HomogeneousElement, Membership,
    PuiseuxSeries, UniPoly, Q64,
};
use serde_json::{json, Value};

use crate::Format;

fn q(t: Q64) -> String {
    t.to_string()
}

fn coeff(c: &Fe) -> Value {
    Value::String(c.to_string())
}

pub fn series_json(s: &PuiseuxSeries) -> Value {
    let n = s.ramification();
    let terms: Vec<Value> = s
        .terms()
        .iter()
        .map(|(u, c)| json!({"num": u, "den": n, "coeff": coeff(c)}))
        .collect();
    json!({
        "ramification": n,
        "truncation": s.precision().map(q),
        "terms": terms,
    })
}

/// Terms in canonical order: y-degree descending, then x-degree ascending.
pub fn bivariate_json(p: &BivariatePoly) -> Value {
    let mut terms: Vec<(i64, u32, &Fe)> = p.terms().collect();
    terms.sort_by_key(|&(i, j, _)| (std::cmp::Reverse(j), i));
    let terms: Vec<Value> = terms
        .into_iter()
        .map(|(i, j, c)| json!({"xexp": i, "yexp": j, "coeff": coeff(c)}))
        .collect();
    json!({"text": p.to_string(), "terms": terms})
}

/// Coefficients listed from the constant term up.
pub fn univariate_json(p: &UniPoly) -> Value {
    json!({
        "text": p.to_string(),
        "var": p.var().to_string(),
        "coeffs": p.coeffs().iter().map(coeff).collect::<Vec<_>>(),
    })
}

fn finish(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("json values always serialise");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

pub fn branches(bs: &BranchSet, t: Q64, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(json!({
            "degree": bs.degree,
            "truncation": q(t),
            "branches": bs.branches.iter().map(|(s, m)| json!({"series": series_json(s), "multiplicity": m})).collect::<Vec<_>>(),
        })),
        _ => lines(bs.branches.iter().map(|(s, m)| if *m == 1 { s.to_string() } else { format!("{s} (multiplicity {m})") })),
    }
}

fn factor_line(s: &PuiseuxSeries) -> String {
    format!("y - ({s})")
}

pub fn composed(r: &ComposedResult, field: &str, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(json!({
            "operation": r.op.name(),
            "field": field,
            "truncation": q(r.truncation),
            "validity": r.validity.map(q),
            "degree": r.degree(),
            "factored": r.factored.iter().map(series_json).collect::<Vec<_>>(),
            "expanded": r.expanded.iter().map(series_json).collect::<Vec<_>>(),
            "exact": r.exact.as_ref().map(bivariate_json),
        })),
        Format::Factored => lines(r.factored.iter().map(factor_line)),
        Format::Text => format!("{r}\n"),
    }
}

pub fn univariate(p: &UniPoly, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(univariate_json(p)),
        _ => format!("{p}\n"),
    }
}

fn kind_name(k: DiamondKind) -> &'static str {
    match k {
        DiamondKind::Addition => "add",
        DiamondKind::Multiplication => "mul",
    }
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ; ")
}

fn units_text(units: &[Fe]) -> String {
    units.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

pub fn decomposition(d: &DecompositionResult, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(json!({
            "kind": kind_name(d.kind),
            "factors": d.factors.iter().map(univariate_json).collect::<Vec<_>>(),
            "alternates": d.alternates.iter().map(|a| json!({
                "factors": a.factors.iter().map(univariate_json).collect::<Vec<_>>(),
                "permutation": a.permutation,
                "units": a.units.iter().map(coeff).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = vec![joined(&d.factors)];
            out.extend(
                d.alternates
                    .iter()
                    .map(|a| format!("alternate: {} [units {}]", joined(&a.factors), units_text(&a.units))),
            );
            lines(out)
        }
    }
}

fn homog_json(h: &HomogeneousElement) -> Value {
    json!({"poly": bivariate_json(h.poly()), "associated": univariate_json(h.associated())})
}

pub fn homogeneous(h: &HomogeneousElement, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(homog_json(h)),
        _ => format!("{h}\n"),
    }
}

pub fn homog_decomposition(d: &HomogDecomposition, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(json!({
            "factors": d.factors.iter().map(homog_json).collect::<Vec<_>>(),
            "alternates": d.alternates.iter().map(|a| json!({
                "factors": a.factors.iter().map(homog_json).collect::<Vec<_>>(),
                "permutation": a.permutation,
                "units": a.units.iter().map(coeff).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = vec![joined(&d.factors)];
            out.extend(
                d.alternates
                    .iter()
                    .map(|a| format!("alternate: {} [units {}]", joined(&a.factors), units_text(&a.units))),
            );
            lines(out)
        }
    }
}

pub fn associate(unit: Option<&Fe>, fmt: Format) -> String {
    match fmt {
        Format::Json => finish(json!({"associate": unit.is_some(), "unit": unit.map(coeff)})),
        _ => match unit {
            Some(u) => format!("associate (unit {u})\n"),
            None => "not associate\n".into(),
        },
    }
}

pub fn membership(m: &Membership, fmt: Format) -> String {
    let reason = match m {
        Membership::NotMember(r) => Some(r.clone()),
        _ => None,
    };
    match fmt {
        Format::Json => finish(json!({"membership": m.label(), "reason": reason})),
        _ => match reason {
            Some(r) => format!("{}: {r}\n", m.label()),
            None => format!("{}\n", m.label()),
        },
    }
}
