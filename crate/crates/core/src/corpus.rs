//! Bundled example diagrams.
//!
//! Some names are placeholders for links that exist only as drawings. They
//! resolve when a file `<name>.json` is found in the directory named by
//! [`FIGURE_DIR_VAR`].

use std::path::PathBuf;

use crate::diagram::{
    apply_move, apply_r1, parse_diagram, Arc, BraidOp, Chirality, DiagramError, Endpoint, GridBuilder, Move,
    SurfaceDiagram,
};

pub const FIGURE_DIR_VAR: &str = "DKH_FIGURE_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("unknown corpus entry `{0}`")]
    Unknown(String),
    #[error("`{0}` is a placeholder; put an encoding at $DKH_FIGURE_DIR/{0}.json")]
    Placeholder(String),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid encoding for `{name}`: {source}")]
    Diagram { name: String, source: DiagramError },
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub name: &'static str,
    pub description: &'static str,
    /// Too large for exhaustive test sweeps.
    pub heavy: bool,
    build: Option<fn() -> SurfaceDiagram>,
}

impl Entry {
    pub fn is_placeholder(&self) -> bool {
        self.build.is_none()
    }
}

const fn entry(name: &'static str, description: &'static str, build: fn() -> SurfaceDiagram) -> Entry {
    Entry { name, description, heavy: false, build: Some(build) }
}

const fn placeholder(name: &'static str, description: &'static str) -> Entry {
    Entry { name, description, heavy: false, build: None }
}

fn loops(genus: u32, labels: &[&[i64]]) -> SurfaceDiagram {
    let arcs = labels.iter().map(|l| Arc::new(None, None, l.to_vec())).collect();
    SurfaceDiagram::new(genus, 0, arcs).expect("valid loops")
}

fn kink(base: SurfaceDiagram, chirality: Chirality) -> SurfaceDiagram {
    apply_r1(&base, 0, chirality, false).expect("kink on a loop")
}

fn sigma(i: usize, positive: bool) -> BraidOp {
    BraidOp::Sigma { i, positive }
}

fn vertical(over: bool) -> BraidOp {
    BraidOp::Vertical { over }
}

fn grid(b: GridBuilder, ops: &[BraidOp]) -> SurfaceDiagram {
    b.build(ops).expect("valid braid word")
}

fn genus2(strands: usize, core: [i64; 4], vert: [i64; 4]) -> GridBuilder {
    GridBuilder { genus: 2, strands, core_label: core.to_vec(), vertical_label: vert.to_vec() }
}

/// The `(1,0)` and `(0,1)` curves on the torus meeting once.
pub fn single_cycle() -> SurfaceDiagram {
    let ep = |c, s| Some(Endpoint::new(c, s));
    let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![1, 0]), Arc::new(ep(0, 1), ep(0, 3), vec![0, 1])];
    SurfaceDiagram::new(1, 1, arcs).expect("valid single-cycle diagram")
}

fn clasp() -> SurfaceDiagram {
    let m = Move::R2AddLoops { a: 0, b: 1, a_reversed: false, b_reversed: true, finger_over: true };
    apply_move(&loops(1, &[&[1, 0], &[1, 0]]), &m).expect("finger between parallel loops")
}

pub const ENTRIES: &[Entry] = &[
    entry("unknot", "crossingless loop in the plane", || loops(0, &[&[]])),
    entry("essential-10-loop", "crossingless (1,0) loop on the torus", || loops(1, &[&[1, 0]])),
    entry("essential-01-loop", "crossingless (0,1) loop on the torus", || loops(1, &[&[0, 1]])),
    entry("essential-11-loop", "crossingless (1,1) loop on the torus", || loops(1, &[&[1, 1]])),
    entry("null-loop", "crossingless null-homotopic loop on the torus", || loops(1, &[&[0, 0]])),
    entry("two-parallel", "two parallel (1,0) loops on the torus", || loops(1, &[&[1, 0], &[1, 0]])),
    entry("single-cycle-11", "(1,0) and (0,1) loops meeting in one crossing", single_cycle),
    entry("positive-kink", "positive kink on a null-homotopic loop", || {
        kink(loops(1, &[&[0, 0]]), Chirality::Positive)
    }),
    entry("negative-kink", "negative kink on a null-homotopic loop", || {
        kink(loops(1, &[&[0, 0]]), Chirality::Negative)
    }),
    entry("essential-kink", "positive kink on a (1,0) loop", || kink(loops(1, &[&[1, 0]]), Chirality::Positive)),
    entry("clasp", "two (1,0) loops with a finger of one pushed over the other", clasp),
    entry("trefoil", "right-handed trefoil in the plane, closure of s1^3", || {
        grid(GridBuilder::planar(2), &[sigma(0, true); 3])
    }),
    entry("trefoil-left", "left-handed trefoil in the plane", || grid(GridBuilder::planar(2), &[sigma(0, false); 3])),
    entry("hopf", "positive Hopf link in the plane", || grid(GridBuilder::planar(2), &[sigma(0, true); 2])),
    entry("annular-hopf", "closure of s1^2 around the (1,0) curve", || {
        grid(GridBuilder::torus(2), &[sigma(0, true); 2])
    }),
    entry("annular-trefoil", "closure of s1^3 around the (1,0) curve", || {
        grid(GridBuilder::torus(2), &[sigma(0, true); 3])
    }),
    entry("annular-figure-eight", "closure of s1 s2^-1 s1 s2^-1 around the (1,0) curve", || {
        grid(GridBuilder::torus(3), &[sigma(0, true), sigma(1, false), sigma(0, true), sigma(1, false)])
    }),
    entry("vertical-over-2", "two (1,0) strands with s1 and a (0,1) strand passing over", || {
        grid(GridBuilder::torus(2), &[sigma(0, true), vertical(true)])
    }),
    entry("vertical-mixed", "two (1,0) strands, s1, a (0,1) strand over, s1^-1", || {
        grid(GridBuilder::torus(2), &[sigma(0, true), vertical(true), sigma(0, false)])
    }),
    entry("vertical-under-kink", "(1,0) strand, (0,1) strand under, then a kink", || {
        kink(grid(GridBuilder::torus(1), &[vertical(false)]), Chirality::Negative)
    }),
    entry("genus2-braid", "two strands along a1 with s1 and a b1 strand on the genus-2 surface", || {
        grid(genus2(2, [1, 0, 0, 0], [0, 1, 0, 0]), &[sigma(0, true), vertical(true)])
    }),
    entry("genus2-diagonal", "a1+a2 strand crossed by a b1+b2 strand on the genus-2 surface", || {
        grid(genus2(1, [1, 0, 1, 0], [0, 1, 0, 1]), &[vertical(true)])
    }),
    entry("grid-2x2", "two (1,0) strands crossed by two (0,1) strands, under then over", || {
        grid(GridBuilder::torus(2), &[vertical(false), vertical(true)])
    }),
    Entry {
        name: "perf-10",
        description: "closure of s1^10 around the (1,0) curve",
        heavy: true,
        build: Some(|| grid(GridBuilder::torus(2), &[sigma(0, true); 10])),
    },
    Entry {
        name: "perf-10-vertical",
        description: "ten crossings on the torus: two (1,0) strands, two (0,1) strands",
        heavy: true,
        build: Some(|| {
            let ops = [
                sigma(0, true),
                sigma(0, true),
                vertical(true),
                sigma(0, false),
                sigma(0, true),
                sigma(0, true),
                vertical(false),
                sigma(0, true),
            ];
            grid(GridBuilder::torus(2), &ops)
        }),
    },
    placeholder("ascent-L", "two-component link L on the torus from the first ascent family"),
    placeholder("ascent-L-prime", "the Dehn-twisted partner L' of ascent-L"),
    placeholder("ascent-J", "two-component link J on the torus, not detected by the rank method"),
    placeholder("ascent-J-prime", "the Dehn-twisted partner J' of ascent-J"),
    placeholder("ascent-J-k-l", "J(k,l) with k and l full twists; encode one member of the family"),
    placeholder("genus2-tnt", "totally nontrivial link on the genus-2 surface"),
];

pub fn corpus_list() -> &'static [Entry] {
    ENTRIES
}

pub fn corpus_get(name: &str) -> Result<SurfaceDiagram, CorpusError> {
    let e = ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| CorpusError::Unknown(name.to_string()))?;
    match e.build {
        Some(f) => Ok(f()),
        None => figure(name)?.ok_or_else(|| CorpusError::Placeholder(name.to_string())),
    }
}

/// A user-supplied encoding from the figure directory, if present.
pub fn figure(name: &str) -> Result<Option<SurfaceDiagram>, CorpusError> {
    let Some(dir) = std::env::var_os(FIGURE_DIR_VAR) else { return Ok(None) };
    let path = PathBuf::from(dir).join(format!("{name}.json"));
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path).map_err(|source| CorpusError::Io { path: path.clone(), source })?;
    parse_diagram(&text).map(Some).map_err(|source| CorpusError::Diagram { name: name.to_string(), source })
}

/// All constructible entries, heavy ones included.
pub fn constructible() -> impl Iterator<Item = (&'static Entry, SurfaceDiagram)> {
    ENTRIES.iter().filter_map(|e| e.build.map(|f| (e, f())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for (e, d) in constructible() {
            assert!(!d.arcs().is_empty(), "{}", e.name);
        }
        assert_eq!(corpus_get("perf-10").unwrap().crossing_count(), 10);
        assert_eq!(corpus_get("perf-10-vertical").unwrap().crossing_count(), 10);
    }

    #[test]
    fn lookups() {
        assert_eq!(corpus_get("essential-10-loop").unwrap().component_classes(), vec![vec![1, 0]]);
        assert_eq!(corpus_get("single-cycle-11").unwrap().crossing_count(), 1);
        assert!(matches!(corpus_get("no-such"), Err(CorpusError::Unknown(_))));
    }

    #[test]
    fn clasp_shape() {
        let d = corpus_get("clasp").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.component_classes(), vec![vec![1, 0], vec![1, 0]]);
    }
}
