//! Text, TSV and JSON renderings of results.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::{Grading, Variant};
use crate::diagram::CohomologyClass;
use crate::homology::{format_c, GradedDims};
use crate::obstruct::{ObstructionReport, TntResult, REPORT_SCHEMA};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format `{s}` (expected text, json or tsv)")),
        }
    }
}

/// One homology table for one class.
#[derive(Clone, Debug)]
pub struct Table {
    pub variant: Variant,
    pub gamma: CohomologyClass,
    pub dims: GradedDims,
}

fn grading_json(g: &Grading) -> Value {
    json!({ "i": g.i, "j": g.j, "c": format_c(g.c2) })
}

fn rows_json(t: &Table) -> Value {
    let rows: Vec<Value> =
        t.dims.rows().map(|(g, n)| json!({ "i": g.i, "j": g.j, "c": format_c(g.c2), "dim": n })).collect();
    json!({ "variant": t.variant.short_name(), "gamma": t.gamma.to_string(), "total": t.dims.total(), "rows": rows })
}

pub fn render_tables(tables: &[Table], format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => {
            let v = json!({ "schema": REPORT_SCHEMA, "tables": tables.iter().map(rows_json).collect::<Vec<_>>() });
            s = serde_json::to_string_pretty(&v).expect("json") + "\n";
        }
        Format::Tsv => {
            let multi = tables.len() > 1;
            s.push_str(if multi { "gamma\ti\tj\tc\tdim\n" } else { "i\tj\tc\tdim\n" });
            for t in tables {
                for (g, n) in t.dims.rows() {
                    if multi {
                        write!(s, "{}\t", t.gamma).unwrap();
                    }
                    writeln!(s, "{}\t{}\t{}\t{}", g.i, g.j, format_c(g.c2), n).unwrap();
                }
            }
        }
        Format::Text => {
            for (k, t) in tables.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                writeln!(s, "{} gamma={} total={}", t.variant.short_name(), t.gamma, t.dims.total()).unwrap();
                writeln!(s, "{:>4} {:>5} {:>6} {:>5}", "i", "j", "c", "dim").unwrap();
                for (g, n) in t.dims.rows() {
                    writeln!(s, "{:>4} {:>5} {:>6} {:>5}", g.i, g.j, format_c(g.c2), n).unwrap();
                }
            }
        }
    }
    s
}

fn tnt_json(t: &TntResult) -> Value {
    let per: Vec<Value> = t
        .per_gamma
        .iter()
        .map(|v| {
            json!({
                "gamma": v.gamma.to_string(),
                "collapsed": v.collapsed(),
                "prefiltered": v.prefiltered,
                "witness": v.witness().map(|g| grading_json(&g)),
                "witnesses": v.witnesses.iter().map(grading_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "genus": t.genus, "overall": t.overall, "warning": t.warning, "per_gamma": per })
}

pub fn render_tnt(t: &TntResult, format: Format) -> String {
    let mut s = String::new();
    match format {
        Format::Json => {
            let mut v = tnt_json(t);
            v["schema"] = json!(REPORT_SCHEMA);
            s = serde_json::to_string_pretty(&v).expect("json") + "\n";
        }
        Format::Tsv => {
            s.push_str("gamma\tverdict\ti\tj\tc\n");
            for v in &t.per_gamma {
                match v.witness() {
                    Some(g) => writeln!(s, "{}\twitness\t{}\t{}\t{}", v.gamma, g.i, g.j, format_c(g.c2)).unwrap(),
                    None => writeln!(s, "{}\tcollapsed\t\t\t", v.gamma).unwrap(),
                }
            }
            writeln!(s, "overall\t{}\t\t\t", t.overall).unwrap();
        }
        Format::Text => {
            writeln!(s, "totally nontrivial: {}", t.overall).unwrap();
            if let Some(w) = &t.warning {
                writeln!(s, "warning: {w}").unwrap();
            }
            for v in &t.per_gamma {
                match v.witness() {
                    Some(g) => writeln!(
                        s,
                        "  gamma={} witness (i,j,c)=({},{},{}) [{} off-diagonal bidegrees]",
                        v.gamma,
                        g.i,
                        g.j,
                        format_c(g.c2),
                        v.witnesses.len()
                    )
                    .unwrap(),
                    None => writeln!(
                        s,
                        "  gamma={} collapsed{}",
                        v.gamma,
                        if v.prefiltered { " (every arc pairs to zero)" } else { "" }
                    )
                    .unwrap(),
                }
            }
        }
    }
    s
}

pub fn report_json(r: &ObstructionReport) -> Value {
    json!({
        "schema": r.schema,
        "tnt": tnt_json(&r.tnt),
        "elementary_rank": r.elementary_rank,
        "genus_pair": [r.genus_pair.0, r.genus_pair.1],
        "conclusion": r.conclusion,
        "assumptions": r.assumptions,
        "notes": r.notes,
    })
}

pub fn render_report(r: &ObstructionReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&report_json(r)).expect("json") + "\n",
        Format::Tsv => {
            let mut s = String::from("key\tvalue\n");
            writeln!(s, "conclusion\t{}", r.conclusion).unwrap();
            writeln!(s, "totally_nontrivial\t{}", r.tnt.overall).unwrap();
            writeln!(s, "elementary_rank\t{}", r.elementary_rank).unwrap();
            writeln!(s, "genus_pair\t{},{}", r.genus_pair.0, r.genus_pair.1).unwrap();
            s
        }
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "conclusion: {}", r.conclusion).unwrap();
            writeln!(s, "genus: {} -> {}", r.genus_pair.0, r.genus_pair.1).unwrap();
            writeln!(s, "elementary rank: {}", r.elementary_rank).unwrap();
            let a: Vec<String> = r.assumptions.iter().map(|a| a.to_string()).collect();
            writeln!(s, "assumptions: {}", if a.is_empty() { "none".into() } else { a.join(", ") }).unwrap();
            for n in &r.notes {
                writeln!(s, "note: {n}").unwrap();
            }
            s.push_str(&render_tnt(&r.tnt, Format::Text));
            s
        }
    }
}
