//! Human-readable and machine-readable query results.
//!
//! The machine encoding is one JSON object per query with sorted keys:
//!
//! ```text
//! {
//!   "counterexample": {"bottom": [[b, y], ...], "top": [[a, x], ...]} | null,
//!   "format": 1,
//!   "holds": true | false | null,
//!   "kind": "lift" | "check" | "orthogonal" | "mono" | "epi" | "hom" | "enumerate",
//!   "query": "<canonical query text>",
//!   ...kind-specific fields
//! }
//! ```
//!
//! Kind-specific fields: `check` adds `oracle` (the direct definition) and
//! `property`; `mono`/`epi` add `cancellation`; `orthogonal`/`hom` add
//! `count` and `maps` (each `{"source", "target", "assign"}` with spaces as
//! literals); `enumerate` adds `counts` (per size) and `count`.

use serde_json::{json, Value};

use crate::lifting::{LiftResult, Square};
use crate::map::MonotoneMap;

use super::eval::{Outcome, QueryResult};
use super::print::{map_literal, print_query, space_literal};

pub const FORMAT_VERSION: u64 = 1;

fn pairs(f: &MonotoneMap) -> Value {
    Value::Array(
        f.labeled_pairs()
            .into_iter()
            .map(|(x, y)| json!([x, y]))
            .collect(),
    )
}

fn encode_square(sq: &Square) -> Value {
    json!({ "top": pairs(&sq.top), "bottom": pairs(&sq.bottom) })
}

fn encode_counterexample(r: &LiftResult) -> Value {
    r.counterexample.as_ref().map_or(Value::Null, encode_square)
}

fn encode_map(f: &MonotoneMap) -> Value {
    json!({
        "source": space_literal(f.source()),
        "target": space_literal(f.target()),
        "assign": pairs(f),
    })
}

pub fn encode_result(r: &QueryResult) -> Value {
    let mut record = json!({
        "format": FORMAT_VERSION,
        "kind": r.query.kind(),
        "query": print_query(&r.query),
        "holds": r.outcome.holds(),
        "counterexample": r.outcome.lift_result().map_or(Value::Null, encode_counterexample),
    });
    let extra = record.as_object_mut().expect("object");
    match &r.outcome {
        Outcome::Check { property, oracle, .. } => {
            extra.insert("oracle".into(), json!(oracle));
            extra.insert("property".into(), json!(property.id()));
        }
        Outcome::Mono { cancellation, .. } | Outcome::Epi { cancellation, .. } => {
            extra.insert("cancellation".into(), json!(cancellation));
        }
        Outcome::Orthogonal(maps) | Outcome::Hom(maps) => {
            extra.insert("count".into(), json!(maps.len()));
            extra.insert("maps".into(), Value::Array(maps.iter().map(encode_map).collect()));
        }
        Outcome::Enumerate(counts) => {
            extra.insert("count".into(), json!(counts.iter().sum::<usize>()));
            extra.insert("counts".into(), json!(counts));
        }
        Outcome::Lift(_) => {}
    }
    record
}

/// Single-line JSON of [`encode_result`].
pub fn encode_result_line(r: &QueryResult) -> String {
    serde_json::to_string(&encode_result(r)).expect("json values serialize")
}

fn verdict(holds: bool) -> &'static str {
    if holds {
        "HOLDS"
    } else {
        "FAILS"
    }
}

fn push_square(out: &mut String, r: &LiftResult) {
    if let Some(sq) = &r.counterexample {
        out.push_str(&format!("  counterexample: no diagonal for\n    top    {}\n    bottom {}\n", map_literal(&sq.top), map_literal(&sq.bottom)));
    }
}

fn push_maps(out: &mut String, maps: &[MonotoneMap]) {
    for f in maps {
        out.push_str(&format!(
            "  {} -> {} : {}\n",
            space_literal(f.source()),
            space_literal(f.target()),
            map_literal(f)
        ));
    }
}

pub fn print_result(r: &QueryResult) -> String {
    let head = print_query(&r.query);
    let mut out = String::new();
    match &r.outcome {
        Outcome::Lift(res) => {
            out.push_str(&format!("{head}: {}\n", verdict(res.holds)));
            push_square(&mut out, res);
        }
        Outcome::Check { result, oracle, .. } => {
            out.push_str(&format!("{head}: {} (direct definition: {})\n", verdict(result.holds), oracle));
            push_square(&mut out, result);
        }
        Outcome::Mono { lifting, cancellation } | Outcome::Epi { lifting, cancellation } => {
            out.push_str(&format!("{head}: {} (cancellation: {})\n", verdict(*lifting), cancellation));
        }
        Outcome::Orthogonal(maps) | Outcome::Hom(maps) => {
            out.push_str(&format!("{head}: {} maps\n", maps.len()));
            push_maps(&mut out, maps);
        }
        Outcome::Enumerate(counts) => {
            let per: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
            out.push_str(&format!(
                "{head}: {} preorders (by size: {})\n",
                counts.iter().sum::<usize>(),
                per.join(", ")
            ));
        }
    }
    out
}
