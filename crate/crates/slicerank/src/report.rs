//! Machine-readable run reports.
//!
//! Payloads are deterministic: subspaces appear as RREF rows, counts as
//! integers and rationals as `"num/den"` strings. Wall-clock time lives in
//! `timing`, outside the payload, so rerunning a command reproduces the
//! payload byte for byte.

use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use slicerank_core::ideal::EssentialVariables;
use slicerank_core::slicerank::{irredundant_sum_check, BoundProfile, LfReport, SearchStats, SliceCertificate};
use slicerank_core::{Field, FieldSpec, Subspace};

use crate::parse::{format_linear_form, format_polynomial, VariableOrder};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    #[default]
    Pretty,
    Compact,
}

#[derive(Clone, Debug, Serialize)]
pub struct Versions {
    pub slicerank: &'static str,
    pub slicerank_core: &'static str,
}

impl Default for Versions {
    fn default() -> Self {
        Versions {
            slicerank: env!("CARGO_PKG_VERSION"),
            slicerank_core: slicerank_core::VERSION,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub wall_seconds: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub format_version: u32,
    pub command: Vec<String>,
    pub field: Option<String>,
    pub inputs_sha256: String,
    pub seed: Option<u64>,
    pub payload: Value,
    pub search_stats: Option<Value>,
    pub timing: Timing,
    pub versions: Versions,
}

impl RunReport {
    pub fn new(command: Vec<String>, field: Option<FieldSpec>, inputs: &[u8], payload: Value) -> Self {
        RunReport {
            format_version: FORMAT_VERSION,
            command,
            field: field.map(|f| f.to_string()),
            inputs_sha256: sha256_hex(inputs),
            seed: None,
            payload,
            search_stats: None,
            timing: Timing { wall_seconds: 0.0 },
            versions: Versions::default(),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn emit_report<T: Serialize>(report: &T, format: ReportFormat) -> String {
    let out = match format {
        ReportFormat::Pretty => serde_json::to_string_pretty(report),
        ReportFormat::Compact => serde_json::to_string(report),
    };
    out.expect("report values serialize")
}

pub fn ratio(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn subspace_rows<K: Field>(s: &Subspace<K>) -> Vec<Vec<String>> {
    s.basis().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

pub fn subspace_json<K: Field>(s: &Subspace<K>, vars: &VariableOrder) -> Value {
    let forms: Vec<String> = s.basis().iter().map(|r| format_linear_form(s.field(), r, vars)).collect();
    json!({ "dim": s.dim(), "rows": subspace_rows(s), "forms": forms })
}

pub fn bound_json(b: &BoundProfile) -> Value {
    json!({
        "r": b.r,
        "n_of_r": ratio(b.n_of_r),
        "c_lower_intro": b.c_lower_intro,
        "c_lower_fn": b.c_lower_fn,
        "estimate_r33": ratio(b.estimate_r33),
        "w_bound": ratio(b.w_bound),
    })
}

pub fn stats_json(s: &SearchStats) -> Value {
    json!({ "visits": s.visits, "visits_per_rank": s.visits_per_rank, "shards": s.shards })
}

const FIELD_NOTE: &str = "rank and subspaces are rational over the named field; they may differ over an extension";

pub fn certificate_json(c: &SliceCertificate, vars: &VariableOrder) -> Value {
    let decomposition = c.decomposition.as_ref().map(|terms| {
        terms
            .iter()
            .map(|(l, q)| {
                json!({
                    "linear": format_linear_form(c.f.field(), l, vars),
                    "quotient": format_polynomial(q, vars),
                })
            })
            .collect::<Vec<_>>()
    });
    json!({
        "polynomial": format_polynomial(&c.f, vars),
        "num_vars": c.f.num_vars(),
        "rank": c.rank,
        "ranks_excluded": c.ranks_excluded,
        "witness": subspace_json(&c.witness, vars),
        "decomposition": decomposition,
        "field_note": FIELD_NOTE,
    })
}

pub fn lf_report_json(r: &LfReport, vars: &VariableOrder) -> Value {
    let irredundant = irredundant_sum_check(r).map(|c| {
        json!({ "members": c.members, "w_dim": c.w_dim, "bound": ratio(c.bound), "holds": c.holds })
    });
    json!({
        "polynomial": format_polynomial(&r.f, vars),
        "num_vars": r.f.num_vars(),
        "rank": r.rank,
        "minimal_spaces": r.minimal_spaces.iter().map(|s| subspace_json(s, vars)).collect::<Vec<_>>(),
        "minimal_space_count": r.minimal_spaces.len(),
        "l_space": subspace_json(&r.l_space, vars),
        "l_dim": r.l_dim,
        "bound": bound_json(&r.bound),
        "satisfies_bound": r.satisfies_bound(),
        "irredundant_check": irredundant,
        "field_note": FIELD_NOTE,
    })
}

pub fn essential_json<K: Field>(e: &EssentialVariables<K>, vars: &VariableOrder) -> Value {
    json!({ "count": e.count, "witness": subspace_json(&e.witness, vars) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use slicerank_core::fixtures::{build_fn, fn_variable_names};
    use slicerank_core::slicerank::{bound_profile, l_space, SearchBudget};
    use slicerank_core::Fp;

    #[test]
    fn lf_report_for_f2() {
        let f = build_fn(&Fp::gf2(), 2).unwrap();
        let vars = VariableOrder::new(fn_variable_names(2)).unwrap();
        let report = l_space(&f, &SearchBudget::default()).unwrap();
        let text = emit_report(&lf_report_json(&report, &vars), ReportFormat::Pretty);
        assert!(text.contains("\"rank\": 1"));
        assert!(text.contains("\"l_dim\": 3"));
    }

    #[test]
    fn bound_profile_serializes_exactly() {
        let text = emit_report(&bound_json(&bound_profile(2)), ReportFormat::Compact);
        assert!(text.contains("\"n_of_r\":\"33/4\""));
        assert!(text.contains("\"w_bound\":\"17/4\""));
        assert_eq!(ratio(bound_profile(3).n_of_r), "16");
    }

    #[test]
    fn envelope_fields() {
        let r = RunReport::new(vec!["bounds".into(), "2".into()], None, b"", json!({}));
        let v: Value = serde_json::from_str(&emit_report(&r, ReportFormat::Compact)).unwrap();
        assert_eq!(v["format_version"], 1);
        assert_eq!(v["inputs_sha256"], "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        assert!(v["versions"]["slicerank_core"].is_string());
    }
}
