use std::fmt::{self, Write};

use dkh_core::corpus::{corpus_list, CorpusError};
use dkh_core::diagram::applicable_moves;
use dkh_core::obstruct::{is_totally_nontrivial_with, TntOptions, REPORT_SCHEMA};
use dkh_core::report::{render_report, render_tables, render_tnt, Format, Table};
use dkh_core::smoothing::MAX_CROSSINGS;
use dkh_core::{
    apply_move, ascent_report, assemble_complex, build_cube, corpus_get, elementary_rank, homology_perturbed,
    homology_plain, parse_diagram, serialize_diagram, CohomologyClass, EdgeKind, GradedDims, Move, SurfaceDiagram,
    Variant,
};
use rayon::prelude::*;
use serde_json::json;

use crate::{Command, CorpusAction, MovesAction};

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments. Exit code 2.
    Usage(String),
    /// Invalid input or an operation that does not apply. Exit code 1.
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        CliError::Domain(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn load(input: &str) -> Result<SurfaceDiagram> {
    let d = match input.strip_prefix("corpus:") {
        Some(name) => corpus_get(name)?,
        None => {
            let text =
                std::fs::read_to_string(input).map_err(|e| CliError::Domain(format!("cannot read {input}: {e}")))?;
            parse_diagram(&text).map_err(|e| CliError::Domain(format!("{input}: {e}")))?
        }
    };
    for w in d.warnings() {
        eprintln!("dkh: warning: {input}: {w}");
    }
    if d.crossing_count() > MAX_CROSSINGS {
        return Err(CliError::Domain(format!(
            "{input}: {} crossings exceeds the supported maximum {MAX_CROSSINGS}",
            d.crossing_count()
        )));
    }
    Ok(d)
}

fn parse_class(s: &str, genus: u32) -> Result<CohomologyClass> {
    let c: CohomologyClass = s.parse().map_err(CliError::Usage)?;
    if c.len() != 2 * genus as usize {
        return Err(CliError::Usage(format!(
            "class {s:?} has {} bits but the surface has genus {genus}, which needs {}",
            c.len(),
            2 * genus
        )));
    }
    Ok(c)
}

/// `all` means every nonzero class; at genus 0 that list is empty, so the
/// zero class stands in.
fn classes(gamma: Option<&str>, genus: u32) -> Result<Vec<CohomologyClass>> {
    match gamma {
        None => Ok(vec![CohomologyClass::zero(genus)]),
        Some("all") if genus == 0 => Ok(vec![CohomologyClass::zero(0)]),
        Some("all") => Ok(CohomologyClass::nonzero(genus).collect()),
        Some(s) => Ok(vec![parse_class(s, genus)?]),
    }
}

fn table(d: &SurfaceDiagram, gamma: CohomologyClass, variant: Variant) -> Table {
    let cx = assemble_complex(&build_cube(d, gamma), variant);
    let dims = match variant {
        Variant::Plain => homology_plain(&cx).expect("plain complex"),
        Variant::Perturbed => GradedDims::from_gradings(homology_perturbed(&cx).expect("perturbed complex").gens),
    };
    Table { variant, gamma, dims }
}

pub fn run(cmd: Command) -> Result<String> {
    match cmd {
        Command::Compute { input, variant, gamma, out } => {
            let d = load(&input)?;
            let cs = classes(gamma.as_deref(), d.genus())?;
            let tables: Vec<Table> = cs.into_par_iter().map(|g| table(&d, g, variant)).collect();
            Ok(render_tables(&tables, out.format))
        }
        Command::Tnt { input, no_prefilter, out } => {
            let d = load(&input)?;
            let t = is_totally_nontrivial_with(&d, TntOptions { prefilter: !no_prefilter, ..TntOptions::default() });
            if let Some(w) = &t.warning {
                eprintln!("dkh: warning: {w}");
            }
            Ok(render_tnt(&t, out.format))
        }
        Command::Rank { input, out } => {
            let r = elementary_rank(&load(&input)?);
            Ok(match out.format {
                Format::Json => {
                    serde_json::to_string_pretty(&json!({ "schema": REPORT_SCHEMA, "rank": r })).unwrap() + "\n"
                }
                Format::Tsv => format!("rank\n{r}\n"),
                Format::Text => format!("{r}\n"),
            })
        }
        Command::Report { source, target, assume, out } => {
            let (d1, d2) = (load(&source)?, load(&target)?);
            Ok(render_report(&ascent_report(&d1, &d2, &assume), out.format))
        }
        Command::Moves { action: MovesAction::List { input, max_crossings } } => {
            let d = load(&input)?;
            let mut s = String::new();
            for m in applicable_moves(&d, max_crossings) {
                writeln!(s, "{m}").unwrap();
            }
            Ok(s)
        }
        Command::Moves { action: MovesAction::Apply { input, moves } } => {
            let mut d = load(&input)?;
            let parsed: Vec<Move> = moves.iter().map(|m| m.parse().map_err(CliError::Usage)).collect::<Result<_>>()?;
            for m in &parsed {
                d = apply_move(&d, m).map_err(|e| CliError::Domain(format!("{m}: {e}")))?;
            }
            Ok(serialize_diagram(&d))
        }
        Command::Corpus { action } => corpus(action),
        Command::DumpCube { input, gamma, matrix, variant } => {
            let d = load(&input)?;
            let gamma = match gamma {
                Some(s) => parse_class(&s, d.genus())?,
                None => CohomologyClass::zero(d.genus()),
            };
            Ok(dump_cube(&d, gamma, matrix.then_some(variant)))
        }
    }
}

fn corpus(action: CorpusAction) -> Result<String> {
    match action {
        CorpusAction::List => {
            let mut s = String::new();
            for e in corpus_list() {
                let kind = if e.is_placeholder() {
                    "placeholder"
                } else if e.heavy {
                    "heavy"
                } else {
                    "builtin"
                };
                writeln!(s, "{}\t{kind}\t{}", e.name, e.description).unwrap();
            }
            Ok(s)
        }
        CorpusAction::Get { name } => Ok(serialize_diagram(&corpus_get(&name)?)),
        CorpusAction::Show { name } => {
            let d = corpus_get(&name)?;
            let mut s = String::new();
            writeln!(s, "name: {name}").unwrap();
            writeln!(s, "genus: {}", d.genus()).unwrap();
            writeln!(s, "crossings: {}", d.crossing_count()).unwrap();
            writeln!(s, "components: {}", d.component_count()).unwrap();
            writeln!(s, "writhe: {}", d.writhe()).unwrap();
            let classes: Vec<String> = d
                .component_classes()
                .iter()
                .map(|c| format!("({})", c.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
                .collect();
            writeln!(s, "component classes: {}", classes.join(" ")).unwrap();
            writeln!(s, "elementary rank: {}", elementary_rank(&d)).unwrap();
            Ok(s)
        }
    }
}

fn resolution_word(r: u32, n: usize) -> String {
    (0..n).map(|k| if r >> k & 1 == 1 { '1' } else { '0' }).collect()
}

fn dump_cube(d: &SurfaceDiagram, gamma: CohomologyClass, variant: Option<Variant>) -> String {
    let n = d.crossing_count();
    let width = 2 * d.genus() as usize;
    let cube = build_cube(d, gamma);
    let mut s = String::new();
    writeln!(s, "cube crossings={n} gamma={gamma} vertices={} edges={}", cube.vertices.len(), cube.edges.len())
        .unwrap();
    for v in &cube.vertices {
        writeln!(s, "vertex {} height={} circles={}", resolution_word(v.resolution, n), v.height, v.circles.len())
            .unwrap();
        for (k, c) in v.circles.iter().enumerate() {
            let class = CohomologyClass::from_bits(c.z2_class, width);
            writeln!(s, "  circle {k} arcs={:?} class={class}{}", c.arcs, if c.dotted { " dotted" } else { "" })
                .unwrap();
        }
    }
    for e in &cube.edges {
        let kind = match e.kind {
            EdgeKind::Merge => "merge",
            EdgeKind::Split => "split",
            EdgeKind::SingleCycle => "single-cycle",
        };
        writeln!(
            s,
            "edge {} -> {} crossing={} {kind} sign={:+}",
            resolution_word(e.source, n),
            resolution_word(e.target, n),
            e.bit,
            e.sign
        )
        .unwrap();
    }
    if let Some(variant) = variant {
        let cx = assemble_complex(&cube, variant);
        writeln!(s, "differential {variant} generators={} nonzero={}", cx.len(), cx.d.nnz()).unwrap();
        let mut basis = (u32::MAX, Vec::new());
        for (x, g) in cx.gens.iter().enumerate() {
            if basis.0 != g.vertex {
                basis = (g.vertex, dkh_core::state_basis(&cube, g.vertex));
            }
            let st = &basis.1[g.state as usize];
            writeln!(
                s,
                "  gen {x} vertex={} state={st} (i,j,2c)=({},{},{})",
                resolution_word(g.vertex, n),
                g.grading.i,
                g.grading.j,
                g.grading.c2
            )
            .unwrap();
        }
        for (c, col) in cx.d.columns().iter().enumerate() {
            for (r, v) in col {
                writeln!(s, "  d[{r},{c}] = {v}").unwrap();
            }
        }
    }
    s
}
