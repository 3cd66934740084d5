use std::fmt::Display;

use goldentiles::exactnum::numeric::decimal15;
use goldentiles::exactnum::Scalar;
use goldentiles::{GoldenNumber, Matrix};
use serde_json::{json, Value};

/// `{"exact": "a+bτ", "decimal": "…"}`.
pub fn exact(g: &GoldenNumber) -> Value {
    json!({ "exact": g.to_string(), "decimal": decimal15(g.to_f64()) })
}

/// `a+bτ ≈ d`.
pub fn inline(g: &GoldenNumber) -> String {
    format!("{g} ≈ {}", decimal15(g.to_f64()))
}

pub fn matrix_json<T: Scalar + Display>(m: &Matrix<T>) -> Value {
    json!((0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn labeled_matrix<T: Scalar + Display>(labels: &[&str], m: &Matrix<T>) -> String {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (r, row) in cells.iter().enumerate() {
        let label = labels.get(r).copied().unwrap_or("");
        let pad = label_width - label.chars().count();
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(&format!("{label}{} [ {} ]\n", " ".repeat(pad), line.join("  ")));
    }
    out
}
