use std::collections::BTreeSet;

use salem_core::brauer::{BrauerClass, HilbertPair};
use salem_core::exact::{fmt_rat, Int, RatMatrix, UniPoly};
use salem_core::exhibitor::IsometryWitness;
use salem_core::places::{Place, SplittingProfile};
use salem_core::quadform::{form_invariants, QuadForm};
use salem_core::realizer::RealizationCertificate;
use salem_core::Result;
use serde_json::{json, Map, Value};

pub fn int(n: &Int) -> Value {
    Value::String(n.to_string())
}

pub fn places(set: &BTreeSet<Place>) -> Value {
    Value::Array(set.iter().map(|v| Value::String(v.to_string())).collect())
}

pub fn class(c: &BrauerClass) -> Value {
    places(c.ram())
}

pub fn matrix(m: &RatMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|x| Value::String(fmt_rat(x))).collect()))
            .collect(),
    )
}

pub fn poly(p: &UniPoly) -> Value {
    Value::String(p.to_csv())
}

pub fn invariants(q: &QuadForm) -> Result<Value> {
    let inv = form_invariants(q)?;
    Ok(json!({
        "rank": inv.rank,
        "det_class": int(&inv.det_class),
        "disc_class": int(&inv.disc_class),
        "signature": [inv.signature.0, inv.signature.1],
        "hasse_ram": class(&inv.hasse),
        "witt_ram": class(&inv.witt),
    }))
}

pub fn class_key(key: &(Option<Int>, BTreeSet<Place>)) -> Value {
    let mut m = Map::new();
    if let Some(d) = &key.0 {
        m.insert("disc_class".into(), int(d));
        m.insert("split_witt_ram".into(), places(&key.1));
    } else {
        m.insert("witt_ram".into(), places(&key.1));
    }
    Value::Object(m)
}

pub fn hilbert_pair(p: &HilbertPair) -> Value {
    json!({ "a": int(&p.a), "b": int(&p.b), "ram": class(&p.class) })
}

pub fn certificate(c: &RealizationCertificate) -> Result<Value> {
    let checks: Map<String, Value> = c
        .checks
        .iter()
        .map(|ch| (ch.name.to_string(), Value::Bool(ch.pass)))
        .collect();
    Ok(json!({
        "salem_poly": poly(&c.ctx.f),
        "n": c.n,
        "case_tag": c.case_tag.as_str(),
        "A": c.a_set.iter().copied().collect::<Vec<u64>>(),
        "hilbert_pair": hilbert_pair(&c.hilbert_pair),
        "form_diag": c.q.diag_strings(),
        "char_poly": poly(&c.char_poly),
        "invariants": invariants(&c.q)?,
        "class_key": class_key(&c.class_key()?),
        "checks": checks,
    }))
}

pub fn witness(w: &IsometryWitness) -> Value {
    let mut v = json!({
        "gamma": matrix(&w.gamma),
        "gram": matrix(w.q.gram()),
        "char_poly": poly(&w.char_poly),
        "det_gamma": w.det_gamma,
        "ell": w.length.ell_string(),
        "salem_factor": poly(&w.length.factor),
        "class_key": class_key(&w.class_key),
    });
    if let Some(b) = &w.b {
        v["b"] = poly(b);
    }
    v
}

pub fn profile(p: &SplittingProfile) -> Value {
    json!({
        "p": p.p,
        "entries": p.entries.iter().map(|e| json!({
            "degree": e.degree,
            "behavior": e.behavior.as_str(),
        })).collect::<Vec<_>>(),
        "in_sigma_ns": p.in_sigma_ns,
        "in_spl_h": p.in_spl_h,
        "critical": p.ramified_in_k_or_e,
    })
}
