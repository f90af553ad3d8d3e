//! Report rendering.
//!
//! Every command produces both a stable text form and a canonical JSON form.
//! JSON objects use sorted keys and contain only data derived
//! deterministically from the input, so identical inputs yield
//! byte-identical reports regardless of run or thread count.

use serde_json::{Map, Value};

use twisted_yd::boson::{BiproductTruncation, BraidedTables, CoquasiReport};
use twisted_yd::groups::Elem;
use twisted_yd::nichols::{
    scalar_label, BraidingMatrix, DynkinDiagram, HilbertData, NicholsReport, RefusalWitness,
    SimpleVerdict, Verdict,
};
use twisted_yd::scalars::CycScalar;
use twisted_yd::yd::YDModule;

use crate::json::{elem_value, scalar_value};

/// A finished report with both renderings; main picks one by format.
pub struct Report {
    /// Human-readable rendering.
    pub text: String,
    /// Machine-readable rendering with deterministically ordered keys.
    pub json: Value,
}

/// A JSON object from key-value pairs; key order in the output is sorted,
/// so rendering is byte-deterministic.
pub fn obj(entries: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

/// A group element as `(a,b,c)`.
pub fn elem_text(e: &Elem) -> String {
    let inner: Vec<String> = e.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(","))
}

/// A scalar in the same vocabulary the JSON schema accepts.
pub fn scalar_text(s: &CycScalar) -> String {
    match s.as_root_power() {
        Some(k) => scalar_label(s.root_order(), k as i64),
        None => format!("{}", s),
    }
}

/// A finiteness verdict as a tagged JSON object.
pub fn verdict_value(v: &Verdict) -> Value {
    match v {
        Verdict::Finite { total, top } => obj(vec![
            ("kind", Value::from("finite")),
            ("total_dimension", Value::from(*total)),
            ("top_degree", Value::from(*top as u64)),
        ]),
        Verdict::Infinite { reason } => obj(vec![
            ("kind", Value::from("infinite")),
            ("reason", Value::from(reason.as_str())),
        ]),
        Verdict::Unknown { cutoff, reason } => obj(vec![
            ("kind", Value::from("unknown-at-cutoff")),
            ("cutoff", Value::from(*cutoff as u64)),
            ("reason", Value::from(reason.as_str())),
        ]),
    }
}

/// A finiteness verdict as one line of text.
pub fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Finite { total, top } => {
            format!("finite: total dimension {}, top degree {}", total, top)
        }
        Verdict::Infinite { reason } => format!("infinite ({})", reason),
        Verdict::Unknown { cutoff, reason } => {
            format!("unknown at cutoff {} ({})", cutoff, reason)
        }
    }
}

/// The token printed for the simple-module finiteness criterion.
pub fn simple_verdict_str(v: SimpleVerdict) -> &'static str {
    match v {
        SimpleVerdict::FiniteC1 => "finite-C1",
        SimpleVerdict::FiniteC2 => "finite-C2",
        SimpleVerdict::Infinite => "infinite",
    }
}

/// A braiding matrix as JSON (root order plus exponent rows).
pub fn braiding_value(q: &BraidingMatrix) -> Value {
    let rows: Vec<Value> = (0..q.dim)
        .map(|i| Value::Array((0..q.dim).map(|j| Value::from(q.exp_at(i, j))).collect()))
        .collect();
    obj(vec![
        ("root_order", Value::from(q.n_root)),
        ("exponents", Value::Array(rows)),
    ])
}

/// Hilbert data (graded dims and verdict) as JSON.
pub fn hilbert_value(h: &HilbertData) -> Value {
    let mut entries = vec![
        ("dims", Value::Array(h.dims.iter().map(|&d| Value::from(d)).collect())),
        ("verdict", verdict_value(&h.verdict)),
    ];
    if !h.heights.is_empty() {
        let heights: Vec<Value> = h
            .heights
            .iter()
            .map(|(content, ord)| {
                obj(vec![
                    (
                        "multidegree",
                        Value::Array(content.iter().map(|&c| Value::from(c)).collect()),
                    ),
                    ("self_braiding_order", Value::from(*ord)),
                ])
            })
            .collect();
        entries.push(("heights", Value::Array(heights)));
    }
    obj(entries)
}

/// A generalized Dynkin diagram as JSON (vertices, edges, components,
/// canonical class).
pub fn dynkin_value(d: &DynkinDiagram) -> Value {
    let vertices: Vec<Value> = d
        .vertex_exps
        .iter()
        .map(|&e| {
            obj(vec![
                ("exponent", Value::from(e)),
                ("label", Value::from(scalar_label(d.n_root, e))),
            ])
        })
        .collect();
    let edges: Vec<Value> = d
        .edges
        .iter()
        .map(|&(i, j, e)| {
            obj(vec![
                ("ends", Value::Array(vec![Value::from(i as u64), Value::from(j as u64)])),
                ("exponent", Value::from(e)),
                ("label", Value::from(scalar_label(d.n_root, e))),
            ])
        })
        .collect();
    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|comp| Value::Array(comp.iter().map(|&i| Value::from(i as u64)).collect()))
        .collect();
    obj(vec![
        ("root_order", Value::from(d.n_root)),
        ("vertices", Value::Array(vertices)),
        ("edges", Value::Array(edges)),
        ("components", Value::Array(components)),
        ("canonical_class", Value::from(d.canonical_class())),
    ])
}

/// A full reduction report as JSON.
pub fn nichols_report_value(r: &NicholsReport) -> Value {
    obj(vec![
        (
            "support_orders",
            Value::Array(r.support_orders.iter().map(|&o| Value::from(o)).collect()),
        ),
        ("used_cover", Value::from(r.used_cover)),
        (
            "twist_root",
            match r.twist_root {
                Some(n) => Value::from(n),
                None => Value::Null,
            },
        ),
        ("braiding", braiding_value(&r.braiding)),
        ("degrees", Value::Array(r.degrees.iter().map(elem_value).collect())),
        ("hilbert", hilbert_value(&r.hilbert)),
        ("dynkin", dynkin_value(&r.dynkin)),
    ])
}

/// A full reduction report as text lines.
pub fn nichols_report_text(r: &NicholsReport) -> String {
    let mut out = String::new();
    let orders: Vec<String> = r.support_orders.iter().map(|o| o.to_string()).collect();
    out.push_str(&format!("support subgroup factors: [{}]\n", orders.join(", ")));
    out.push_str(&format!(
        "cover and coboundary twist used: {}\n",
        if r.used_cover { "yes" } else { "no" }
    ));
    if let Some(n) = r.twist_root {
        out.push_str(&format!("twist root order: {}\n", n));
    }
    out.push_str(&format!(
        "diagonal braiding: {} letters at root order {}\n",
        r.braiding.dim, r.braiding.n_root
    ));
    let dims: Vec<String> = r.hilbert.dims.iter().map(|d| d.to_string()).collect();
    out.push_str(&format!("hilbert dims: [{}]\n", dims.join(", ")));
    out.push_str(&format!("verdict: {}\n", verdict_text(&r.hilbert.verdict)));
    out.push_str("dynkin:\n");
    for line in r.dynkin.to_text().lines() {
        out.push_str(&format!("  {}\n", line));
    }
    out.push_str(&format!("dynkin class: {}\n", r.dynkin.canonical_class()));
    out
}

/// A nondiagonal-summand refusal as JSON.
pub fn refusal_value(witnesses: &[RefusalWitness]) -> Value {
    let list: Vec<Value> = witnesses
        .iter()
        .map(|w| {
            obj(vec![
                ("component", Value::from(w.component as u64)),
                ("degree", elem_value(&w.degree)),
                (
                    "asymmetric_pair",
                    Value::Array(vec![elem_value(&w.pair.0), elem_value(&w.pair.1)]),
                ),
            ])
        })
        .collect();
    obj(vec![
        ("refusal", Value::from("summands of nondiagonal type")),
        ("witnesses", Value::Array(list)),
    ])
}

/// A nondiagonal-summand refusal as text lines.
pub fn refusal_text(witnesses: &[RefusalWitness]) -> String {
    let mut out = String::new();
    out.push_str("refusal: the module has summands of nondiagonal type\n");
    for w in witnesses {
        out.push_str(&format!(
            "  component {} at degree {}: derived 2-cochain distinguishes {} vs {}\n",
            w.component,
            elem_text(&w.degree),
            elem_text(&w.pair.0),
            elem_text(&w.pair.1)
        ));
    }
    out
}

/// One line summarizing a module (group, component degrees, dimension).
pub fn module_summary_text(m: &YDModule) -> String {
    let orders: Vec<String> = m.group.orders().iter().map(|o| o.to_string()).collect();
    let degs: Vec<String> = m.components.iter().map(|c| elem_text(&c.degree)).collect();
    format!(
        "module over Z{} with {} component(s) at degree(s) {}, total dimension {}",
        orders.join("xZ"),
        m.components.len(),
        degs.join(", "),
        m.total_dim()
    )
}

/// Braided-part tables summarized as JSON (dims, degrees, completeness).
pub fn braided_value(b: &BraidedTables) -> Value {
    obj(vec![
        ("dims", Value::Array(b.dims.iter().map(|&d| Value::from(d as u64)).collect())),
        ("total_dimension", Value::from(b.dim() as u64)),
        ("complete", Value::from(b.complete)),
        ("root_order", Value::from(b.n_root)),
    ])
}

/// A biproduct truncation summarized as JSON.
pub fn biproduct_value(m: &BiproductTruncation) -> Value {
    obj(vec![
        ("braided", braided_value(&m.braided)),
        ("group_order", Value::from(m.group.size())),
        ("total_dimension", Value::from(m.dim as u64)),
        ("root_order", Value::from(m.n_root)),
        (
            "alpha",
            Value::Array(m.alpha.iter().map(scalar_value).collect()),
        ),
        (
            "beta",
            Value::Array(m.beta.iter().map(scalar_value).collect()),
        ),
    ])
}

/// Axiom-check tallies and failures as JSON.
pub fn coquasi_value(r: &CoquasiReport) -> Value {
    let tallies: Vec<Value> = r
        .tallies
        .iter()
        .map(|t| {
            obj(vec![
                ("family", Value::from(t.name)),
                ("checked", Value::from(t.checked)),
                ("skipped", Value::from(t.skipped)),
            ])
        })
        .collect();
    obj(vec![
        ("pass", Value::from(r.pass())),
        ("tallies", Value::Array(tallies)),
        (
            "failures",
            Value::Array(r.failures.iter().map(|f| Value::from(f.as_str())).collect()),
        ),
    ])
}

/// Render a JSON value with a trailing newline; the canonical byte form of
/// every JSON report.
pub fn print_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialization cannot fail");
    s.push('\n');
    s
}
