//! Rendering of results as JSON (sorted keys, 12 significant digits), TSV
//! or plain text.

use std::collections::BTreeSet;

use clap::ValueEnum;
use serde_json::{json, Value};

use earspec::ear::EarDecomposition;
use earspec::{to_graph6, Certificate, EnumerationReport, SpectralResult};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Human,
}

/// Rounds to 12 significant digits.
fn round12(x: f64) -> f64 {
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(round12(x))
    } else {
        Value::Null
    }
}

fn text(x: f64) -> String {
    round12(x).to_string()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn certificates(format: Format, code: &str, certs: &[(&str, Certificate)]) -> String {
    match format {
        Format::Json => {
            let list: Vec<Value> = certs
                .iter()
                .map(|(property, c)| {
                    json!({
                        "property": property,
                        "verdict": c.verdict,
                        "witness": serde_json::to_value(&c.witness).expect("witnesses serialize"),
                        "note": c.note.as_str(),
                    })
                })
                .collect();
            json!({ "graph": code, "certificates": list }).to_string()
        }
        Format::Tsv => certs
            .iter()
            .map(|(property, c)| {
                let witness = serde_json::to_string(&c.witness).expect("witnesses serialize");
                format!("{code}\t{property}\t{}\t{}\t{witness}", c.verdict, c.note.as_str())
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Human => {
            let parts: Vec<String> = certs
                .iter()
                .map(|(property, c)| format!("{property}: {} ({})", yes_no(c.verdict), c.note.as_str()))
                .collect();
            format!("{code}: {}", parts.join(", "))
        }
    }
}

pub fn spectral(format: Format, code: &str, r: &SpectralResult<f64>) -> String {
    match format {
        Format::Json => json!({
            "graph": code,
            "rho": num(r.rho),
            "perron": r.perron.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "iterations": r.iterations,
            "residual": num(r.residual),
        })
        .to_string(),
        Format::Tsv => format!("{code}\t{}\t{}\t{}", text(r.rho), r.iterations, text(r.residual)),
        Format::Human => format!(
            "{code}: rho = {} after {} iterations (residual {:e})",
            text(r.rho),
            r.iterations,
            round12(r.residual)
        ),
    }
}

pub fn failure(format: Format, code: &str, message: &str) -> String {
    match format {
        Format::Json => json!({ "graph": code, "error": message }).to_string(),
        Format::Tsv => format!("{code}\terror\t{message}"),
        Format::Human => format!("{code}: error: {message}"),
    }
}

/// Plain graph6 unless a structured format was requested.
pub fn generated(format: Option<Format>, code: &str) -> String {
    match format {
        Some(Format::Json) => json!({ "graph6": code }).to_string(),
        _ => code.to_string(),
    }
}

fn decomposition_json(d: &EarDecomposition) -> Value {
    let ears: Vec<&[usize]> = d.ears.iter().map(|e| e.path()).collect();
    json!({
        "kind": d.kind.as_str(),
        "base": to_graph6(&d.base).expect("bases are small"),
        "base_vertices": d.base_vertices,
        "ears": ears,
        "grades": d.grades,
    })
}

pub fn decomposition(
    format: Format,
    code: &str,
    found: Result<Option<EarDecomposition>, String>,
) -> String {
    let d = match found {
        Ok(d) => d,
        Err(message) => return failure(format, code, &message),
    };
    match (format, d) {
        (Format::Json, d) => {
            json!({ "graph": code, "decomposition": d.as_ref().map(decomposition_json) }).to_string()
        }
        (Format::Tsv, None) => format!("{code}\tnone"),
        (Format::Tsv, Some(d)) => {
            let lengths: Vec<String> = d.ears.iter().map(|e| e.len().to_string()).collect();
            let grades: Vec<String> = d.grades.iter().map(usize::to_string).collect();
            format!("{code}\t{}\t{}\t{}", d.kind.as_str(), lengths.join(","), grades.join(","))
        }
        (Format::Human, None) => format!("{code}: no decomposition"),
        (Format::Human, Some(d)) => {
            let ears: Vec<String> = d
                .ears
                .iter()
                .map(|e| e.path().iter().map(usize::to_string).collect::<Vec<_>>().join("-"))
                .collect();
            format!(
                "{code}: {} decomposition, base {:?}, ears [{}], grades {:?}",
                d.kind.as_str(),
                d.base_vertices,
                ears.join(", "),
                d.grades
            )
        }
    }
}

pub fn enumeration(format: Option<Format>, class: &str, n: usize, codes: &BTreeSet<String>) -> Vec<String> {
    match format {
        Some(Format::Json) => {
            vec![json!({ "class": class, "n": n, "count": codes.len(), "graphs": codes }).to_string()]
        }
        Some(Format::Human) => {
            let mut lines = vec![format!("# {class}, n = {n}: {} graphs", codes.len())];
            lines.extend(codes.iter().cloned());
            lines
        }
        _ => codes.iter().cloned().collect(),
    }
}

pub fn report(format: Format, theorem: u8, r: &EnumerationReport<f64>) -> Vec<String> {
    match format {
        Format::Json => vec![json!({
            "n": r.n,
            "class": r.class_name.as_str(),
            "count": r.count,
            "max_rho": num(r.max_rho),
            "argmax": r.argmax,
            "bound": num(r.bound),
            "bound_met": r.bound_met,
            "extremal_match": r.extremal_match,
        })
        .to_string()],
        Format::Tsv => vec![
            "# n\tclass\tcount\tmax_rho\tbound\tbound_met\textremal_match\targmax".to_string(),
            format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.n,
                r.class_name.as_str(),
                r.count,
                text(r.max_rho),
                text(r.bound),
                r.bound_met,
                r.extremal_match,
                r.argmax.join(",")
            ),
        ],
        Format::Human => vec![
            format!("theorem {theorem}, n = {}: {} graphs in {}", r.n, r.count, r.class_name.as_str()),
            format!("max rho {} (bound {}), attained by {}", text(r.max_rho), text(r.bound), r.argmax.join(" ")),
            format!("bound met: {}, extremal graph unique: {}", yes_no(r.bound_met), yes_no(r.extremal_match)),
        ],
    }
}
