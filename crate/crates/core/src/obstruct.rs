//! Totally nontrivial test, elementary rank and the ascent report.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{assemble_complex, Grading, Variant};
use crate::diagram::{CohomologyClass, SurfaceDiagram};
use crate::homology::homology_perturbed;
use crate::linalg::{Scalar, SparseMatrix};
use crate::smoothing::build_cube;

pub const REPORT_SCHEMA: u32 = 1;

fn ser_class<S: Serializer>(c: &CohomologyClass, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaVerdict {
    #[serde(serialize_with = "ser_class")]
    pub gamma: CohomologyClass,
    /// Distinct off-diagonal bidegrees, sorted. Empty when collapsed.
    pub witnesses: Vec<Grading>,
    /// Decided by the arc-label check alone.
    pub prefiltered: bool,
}

impl GammaVerdict {
    pub fn witness(&self) -> Option<Grading> {
        self.witnesses.first().copied()
    }

    pub fn collapsed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TntResult {
    pub genus: u32,
    pub per_gamma: Vec<GammaVerdict>,
    pub overall: bool,
    pub warning: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TntOptions {
    /// Skip the homology run for classes that pair to zero with every arc.
    pub prefilter: bool,
    /// Stop after the first collapsed class.
    pub short_circuit: bool,
}

impl Default for TntOptions {
    fn default() -> Self {
        TntOptions { prefilter: true, short_circuit: false }
    }
}

/// True when `gamma` pairs to zero with every arc label, so no circle of any
/// smoothing is dotted.
pub fn labels_collapse(d: &SurfaceDiagram, gamma: &CohomologyClass) -> bool {
    d.arcs().iter().all(|a| !gamma.pairs_odd(a.z2()))
}

/// Off-diagonal bidegrees of the perturbed homology for one class.
pub fn witnesses(d: &SurfaceDiagram, gamma: &CohomologyClass) -> Vec<Grading> {
    let cube = build_cube(d, *gamma);
    let h = homology_perturbed(&assemble_complex(&cube, Variant::Perturbed)).expect("perturbed complex");
    let mut w: Vec<Grading> = h.gens.into_iter().filter(|g| g.c2 != g.j).collect();
    w.dedup();
    w
}

pub fn is_totally_nontrivial(d: &SurfaceDiagram) -> TntResult {
    is_totally_nontrivial_with(d, TntOptions::default())
}

pub fn is_totally_nontrivial_with(d: &SurfaceDiagram, opts: TntOptions) -> TntResult {
    let g = d.genus();
    if g == 0 {
        return TntResult {
            genus: 0,
            per_gamma: Vec::new(),
            overall: true,
            warning: Some("genus 0: there are no nonzero classes, so the condition holds vacuously".into()),
        };
    }
    let classes: Vec<CohomologyClass> = CohomologyClass::nonzero(g).collect();
    let mut per_gamma: Vec<GammaVerdict> = Vec::new();
    let mut todo = Vec::new();
    for c in classes {
        if opts.prefilter && labels_collapse(d, &c) {
            per_gamma.push(GammaVerdict { gamma: c, witnesses: Vec::new(), prefiltered: true });
        } else {
            todo.push(c);
        }
    }
    if !(opts.short_circuit && !per_gamma.is_empty()) {
        if opts.short_circuit {
            for c in todo {
                let w = witnesses(d, &c);
                let stop = w.is_empty();
                per_gamma.push(GammaVerdict { gamma: c, witnesses: w, prefiltered: false });
                if stop {
                    break;
                }
            }
        } else {
            let runs: Vec<GammaVerdict> = todo
                .into_par_iter()
                .map(|c| {
                    let w = witnesses(d, &c);
                    GammaVerdict { gamma: c, witnesses: w, prefiltered: false }
                })
                .collect();
            per_gamma.extend(runs);
        }
    }
    per_gamma.sort_by_key(|v| v.gamma.bits());
    let complete = per_gamma.len() == (1usize << (2 * g)) - 1;
    let overall = complete && per_gamma.iter().all(|v| !v.collapsed());
    TntResult { genus: g, per_gamma, overall, warning: None }
}

/// Rank over ℚ of the span of the component classes.
pub fn elementary_rank(d: &SurfaceDiagram) -> usize {
    let classes = d.component_classes();
    let rows = 2 * d.genus() as usize;
    let cols = classes
        .iter()
        .map(|v| v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(r, x)| (r, Scalar::from_int(*x))).collect())
        .collect();
    SparseMatrix::from_columns(rows, cols).rank()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Assumption {
    /// The concordance under study is not pseudostrict. Asserted by the user,
    /// never checked here.
    NotPseudostrict,
}

impl FromStr for Assumption {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "not_pseudostrict" | "not-pseudostrict" => Ok(Assumption::NotPseudostrict),
            _ => Err(format!("unknown assumption `{s}`")),
        }
    }
}

impl fmt::Display for Assumption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("not_pseudostrict")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Conclusion {
    /// `case` is 1 for a genus drop, 2 for equal genus without pseudostrictness.
    AscentByTheorem {
        case: u8,
    },
    AscentByElementary,
    Inconclusive,
}

impl Conclusion {
    pub fn is_ascent(self) -> bool {
        self != Conclusion::Inconclusive
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::AscentByTheorem { case: 1 } => f.write_str("ascent (totally nontrivial, genus drops)"),
            Conclusion::AscentByTheorem { .. } => {
                f.write_str("ascent (totally nontrivial, equal genus, not pseudostrict)")
            }
            Conclusion::AscentByElementary => f.write_str("ascent (component classes span rank at least 2)"),
            Conclusion::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub schema: u32,
    pub tnt: TntResult,
    pub elementary_rank: usize,
    pub genus_pair: (u32, u32),
    pub conclusion: Conclusion,
    pub assumptions: Vec<Assumption>,
    pub notes: Vec<String>,
}

/// Classifies any concordance from `d1` to `d2`. Never claims that one exists.
pub fn ascent_report(d1: &SurfaceDiagram, d2: &SurfaceDiagram, assumptions: &[Assumption]) -> ObstructionReport {
    let tnt = is_totally_nontrivial(d1);
    let mut assumptions = assumptions.to_vec();
    assumptions.sort();
    assumptions.dedup();
    decide(tnt, elementary_rank(d1), (d1.genus(), d2.genus()), assumptions)
}

/// Decision logic of [`ascent_report`] on precomputed inputs.
pub fn decide(tnt: TntResult, rank: usize, (g1, g2): (u32, u32), assumptions: Vec<Assumption>) -> ObstructionReport {
    let nps = assumptions.contains(&Assumption::NotPseudostrict);
    let tnt_holds = tnt.overall && g1 > 0;
    let elementary = g1 == 1 && g2 == 1 && nps && rank >= 2;
    let mut notes = Vec::new();
    let conclusion = if tnt_holds && g1 > g2 {
        Conclusion::AscentByTheorem { case: 1 }
    } else if tnt_holds && g1 == g2 && nps {
        Conclusion::AscentByTheorem { case: 2 }
    } else if elementary {
        Conclusion::AscentByElementary
    } else {
        Conclusion::Inconclusive
    };
    if elementary && conclusion != Conclusion::AscentByElementary {
        notes.push("the elementary rank argument also applies".into());
    }
    if tnt_holds && g1 == g2 && !nps {
        notes.push("totally nontrivial, but equal genus needs the not_pseudostrict assumption".into());
    }
    if g1 < g2 {
        notes.push("the source genus is below the target genus; no case applies".into());
    }
    if let Some(w) = &tnt.warning {
        notes.push(w.clone());
    }
    ObstructionReport {
        schema: REPORT_SCHEMA,
        tnt,
        elementary_rank: rank,
        genus_pair: (g1, g2),
        conclusion,
        assumptions,
        notes,
    }
}
