//! Output formats shared by the commands.

use clap::ValueEnum;
use qpoly::exactpoly::UniPoly;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

/// Triangle of polynomials keyed by `(n, k)` with `1 <= k <= n <= n_max`.
pub struct Triangle {
    /// Symbol used in plain output, e.g. `J` or `S`.
    pub symbol: &'static str,
    pub n_max: usize,
    pub entries: Vec<(usize, usize, UniPoly)>,
}

pub fn poly_text(p: &UniPoly, unicode: bool) -> String {
    p.render("q", unicode)
}

/// Coefficients as a JSON array: integers bare, other rationals as strings.
pub fn coeffs_json(p: &UniPoly) -> String {
    let items: Vec<String> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_integer() {
                c.to_integer().to_string()
            } else {
                format!("\"{c}\"")
            }
        })
        .collect();
    format!("[{}]", items.join(","))
}

/// Always quoted, so the array survives as one CSV field.
fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn degree_text(p: &UniPoly) -> String {
    p.degree().map_or_else(|| "-1".to_string(), |d| d.to_string())
}

pub fn poly_json(p: &UniPoly) -> Value {
    serde_json::to_value(p).expect("polynomials serialize")
}

/// A single polynomial in the requested format, newline-terminated.
pub fn render_poly(p: &UniPoly, format: Format, unicode: bool) -> String {
    match format {
        Format::Plain => format!("{}\n", poly_text(p, unicode)),
        Format::Json => format!("{}\n", json!({ "degree": p.degree(), "poly": poly_json(p) })),
        Format::Csv => format!("degree,coeffs\n{},{}\n", degree_text(p), csv_field(&coeffs_json(p))),
        Format::Latex => format!("${}$\n", p.render_latex()),
    }
}

pub fn render_triangle(t: &Triangle, format: Format, unicode: bool) -> String {
    let mut out = String::new();
    match format {
        Format::Plain => {
            for (n, k, p) in &t.entries {
                out.push_str(&format!("{}_{n}^({k}) = {}\n", t.symbol, poly_text(p, unicode)));
            }
        }
        Format::Json => {
            let rows: Vec<Value> = t
                .entries
                .iter()
                .map(|(n, k, p)| json!({ "n": n, "r": k, "degree": p.degree(), "poly": poly_json(p) }))
                .collect();
            out.push_str(&serde_json::to_string_pretty(&rows).expect("json"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("n,r,degree,coeffs\n");
            for (n, k, p) in &t.entries {
                out.push_str(&format!("{n},{k},{},{}\n", degree_text(p), csv_field(&coeffs_json(p))));
            }
        }
        Format::Latex => out.push_str(&latex_triangle(t)),
    }
    out
}

/// Grid with `n` down the side and `r` across the top, one cell per entry.
fn latex_triangle(t: &Triangle) -> String {
    let cols = t.n_max + 1;
    let mut out = format!("\\begin{{tabular}}{{|{}}}\n\\hline\n", "l|".repeat(cols));
    out.push_str("$n \\backslash r$");
    for r in 1..=t.n_max {
        out.push_str(&format!(" & ${r}$"));
    }
    out.push_str(" \\\\ \\hline\n");
    for n in 1..=t.n_max {
        out.push_str(&format!("${n}$"));
        for r in 1..=t.n_max {
            match t.entries.iter().find(|(a, b, _)| (*a, *b) == (n, r)) {
                Some((_, _, p)) => out.push_str(&format!(" & ${}$", p.render_latex())),
                None => out.push_str(" & "),
            }
        }
        out.push_str(" \\\\ \\hline\n");
    }
    out.push_str("\\end{tabular}\n");
    out
}
