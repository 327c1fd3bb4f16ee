//! Link diagrams on a closed orientable surface.
//!
//! A diagram is a 4-valent graph: crossings with four slots in
//! counterclockwise order, joined by directed arcs. The under-strand enters a
//! crossing at slot 0 and leaves at slot 2; the over-strand uses slots 1 and 3.
//! Each arc carries an integer vector of length `2g`, its signed intersection
//! numbers with a fixed system of dual curves.

mod build;
mod cohomology;
mod faces;
mod format;
mod moves;

use std::fmt;

use thiserror::Error;

pub use build::{BraidOp, GridBuilder};
pub use cohomology::CohomologyClass;
pub use faces::{Dart, Face};
pub use format::{parse_diagram, serialize_diagram};
pub use moves::{applicable_moves, apply_move, apply_r1, apply_r2, apply_r3, Chirality, Move, MoveError};

/// Largest supported genus; classes are packed into a `u64`.
pub const MAX_GENUS: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum End {
    Tail,
    Head,
}

/// One end of one arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArcEnd {
    pub arc: usize,
    pub end: End,
}

/// A slot of a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endpoint {
    pub crossing: usize,
    pub slot: u8,
}

impl Endpoint {
    pub fn new(crossing: usize, slot: u8) -> Self {
        Endpoint { crossing, slot }
    }
}

/// A directed arc. Both ends are `None` for a closed loop without crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: Option<Endpoint>,
    pub head: Option<Endpoint>,
    pub label: Vec<i64>,
}

impl Arc {
    pub fn new(tail: Option<Endpoint>, head: Option<Endpoint>, label: Vec<i64>) -> Self {
        Arc { tail, head, label }
    }

    pub fn is_free(&self) -> bool {
        self.tail.is_none()
    }

    /// Label reduced mod 2, bit `k` for coordinate `k`.
    pub fn z2(&self) -> u64 {
        self.label.iter().enumerate().filter(|(_, v)| *v % 2 != 0).fold(0u64, |acc, (k, _)| acc | (1 << k))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub slots: [ArcEnd; 4],
}

impl Crossing {
    /// `+1` when the over-strand enters at slot 3.
    pub fn sign(&self) -> i32 {
        if self.slots[3].end == End::Head {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("genus {0} exceeds the supported maximum {MAX_GENUS}")]
    GenusTooLarge(u32),
    #[error("diagram has no arcs")]
    Empty,
    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: i64 },
    #[error("arc {arc} references unknown crossing {crossing}")]
    DanglingEndpoint { arc: i64, crossing: i64 },
    #[error("crossing {crossing} references unknown arc {arc}")]
    UnknownArc { crossing: i64, arc: i64 },
    #[error("arc {arc} uses slot {slot} outside 0..3")]
    SlotOutOfRange { arc: i64, slot: i64 },
    #[error("slot {slot} of crossing {crossing} is used twice")]
    SlotUsedTwice { crossing: i64, slot: u8 },
    #[error("slot {slot} of crossing {crossing} is not used by any arc")]
    SlotUnused { crossing: i64, slot: u8 },
    #[error("crossing {crossing} slot {slot} disagrees with the arc endpoints")]
    SlotMismatch { crossing: i64, slot: u8 },
    #[error("arc {arc} has label of length {found}, expected {expected}")]
    LabelLength { arc: i64, expected: usize, found: usize },
    #[error("arc {arc} has exactly one free end")]
    HalfFree { arc: i64 },
    #[error("orientation inconsistent at crossing {crossing}: {detail}")]
    Orientation { crossing: i64, detail: String },
}

/// A validated diagram. Immutable; transformations return new values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceDiagram {
    genus: u32,
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    component_of_arc: Vec<usize>,
    component_count: usize,
}

impl SurfaceDiagram {
    /// Builds and validates a diagram from its arcs. Crossing slot tables are
    /// derived from the arc endpoints.
    pub fn new(genus: u32, crossing_count: usize, arcs: Vec<Arc>) -> Result<Self, DiagramError> {
        if genus > MAX_GENUS {
            return Err(DiagramError::GenusTooLarge(genus));
        }
        if arcs.is_empty() {
            return Err(DiagramError::Empty);
        }
        let width = 2 * genus as usize;
        let mut table: Vec<[Option<ArcEnd>; 4]> = vec![[None; 4]; crossing_count];
        for (a, arc) in arcs.iter().enumerate() {
            if arc.label.len() != width {
                return Err(DiagramError::LabelLength { arc: a as i64, expected: width, found: arc.label.len() });
            }
            if arc.tail.is_none() != arc.head.is_none() {
                return Err(DiagramError::HalfFree { arc: a as i64 });
            }
            for (ep, end) in [(arc.tail, End::Tail), (arc.head, End::Head)] {
                let Some(ep) = ep else { continue };
                if ep.crossing >= crossing_count {
                    return Err(DiagramError::DanglingEndpoint { arc: a as i64, crossing: ep.crossing as i64 });
                }
                if ep.slot > 3 {
                    return Err(DiagramError::SlotOutOfRange { arc: a as i64, slot: ep.slot as i64 });
                }
                let cell = &mut table[ep.crossing][ep.slot as usize];
                if cell.is_some() {
                    return Err(DiagramError::SlotUsedTwice { crossing: ep.crossing as i64, slot: ep.slot });
                }
                *cell = Some(ArcEnd { arc: a, end });
            }
        }
        let mut crossings = Vec::with_capacity(crossing_count);
        for (c, row) in table.iter().enumerate() {
            let mut slots = [ArcEnd { arc: 0, end: End::Tail }; 4];
            for s in 0..4 {
                slots[s] = row[s].ok_or(DiagramError::SlotUnused { crossing: c as i64, slot: s as u8 })?;
            }
            check_orientation(c, &slots)?;
            crossings.push(Crossing { slots });
        }
        let mut d = SurfaceDiagram { genus, crossings, arcs, component_of_arc: Vec::new(), component_count: 0 };
        d.trace_components();
        Ok(d)
    }

    fn trace_components(&mut self) {
        let mut comp = vec![usize::MAX; self.arcs.len()];
        let mut count = 0;
        for start in 0..self.arcs.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut a = start;
            loop {
                comp[a] = count;
                a = self.next_arc(a);
                if a == start {
                    break;
                }
            }
            count += 1;
        }
        self.component_of_arc = comp;
        self.component_count = count;
    }

    /// The arc that continues the strand after arc `a`.
    pub fn next_arc(&self, a: usize) -> usize {
        match self.arcs[a].head {
            None => a,
            Some(h) => {
                let out = self.crossings[h.crossing].slots[((h.slot + 2) % 4) as usize];
                debug_assert_eq!(out.end, End::Tail);
                out.arc
            }
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of_arc(&self, a: usize) -> usize {
        self.component_of_arc[a]
    }

    pub fn n_minus(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign() < 0).count()
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    /// The arc end occupying a slot.
    pub fn slot(&self, e: Endpoint) -> ArcEnd {
        self.crossings[e.crossing].slots[e.slot as usize]
    }

    /// The endpoint at the far end of the arc attached at `e`.
    pub fn across(&self, e: Endpoint) -> Endpoint {
        let ae = self.slot(e);
        let arc = &self.arcs[ae.arc];
        match ae.end {
            End::Tail => arc.head.expect("attached arc has two ends"),
            End::Head => arc.tail.expect("attached arc has two ends"),
        }
    }

    /// Integer homology class of each component: the sum of its arc labels.
    pub fn component_classes(&self) -> Vec<Vec<i64>> {
        let width = 2 * self.genus as usize;
        let mut out = vec![vec![0i64; width]; self.component_count];
        for (a, arc) in self.arcs.iter().enumerate() {
            let row = &mut out[self.component_of_arc[a]];
            for (x, v) in row.iter_mut().zip(&arc.label) {
                *x += v;
            }
        }
        out
    }

    /// Diagnostic warnings that do not make the diagram invalid.
    pub fn warnings(&self) -> Vec<String> {
        let mut w = Vec::new();
        if self.genus > 0 {
            for (k, class) in self.component_classes().iter().enumerate() {
                if class.iter().all(|v| *v == 0) {
                    w.push(format!("component {k} has zero homology class on a genus {} surface", self.genus));
                }
            }
        }
        w
    }

    /// Sum of all arc labels mod 2.
    pub fn total_z2(&self) -> u64 {
        self.arcs.iter().fold(0, |acc, a| acc ^ a.z2())
    }
}

fn check_orientation(c: usize, slots: &[ArcEnd; 4]) -> Result<(), DiagramError> {
    let err = |detail: &str| DiagramError::Orientation { crossing: c as i64, detail: detail.to_string() };
    if slots[0].end != End::Head {
        return Err(err("under-strand must enter at slot 0"));
    }
    if slots[2].end != End::Tail {
        return Err(err("under-strand must leave at slot 2"));
    }
    if slots[1].end == slots[3].end {
        return Err(err("over-strand must enter at one of slots 1, 3 and leave at the other"));
    }
    Ok(())
}

impl fmt::Display for SurfaceDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "genus {}, {} crossings, {} arcs, {} components, writhe {}",
            self.genus,
            self.crossings.len(),
            self.arcs.len(),
            self.component_count,
            self.writhe()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ep(c: usize, s: u8) -> Option<Endpoint> {
        Some(Endpoint::new(c, s))
    }

    #[test]
    fn free_loop_is_one_component() {
        let d = SurfaceDiagram::new(1, 0, vec![Arc::new(None, None, vec![1, 0])]).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.component_classes(), vec![vec![1, 0]]);
    }

    #[test]
    fn single_crossing_two_components() {
        let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![1, 0]), Arc::new(ep(0, 1), ep(0, 3), vec![0, 1])];
        let d = SurfaceDiagram::new(1, 1, arcs).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.writhe(), 1);
        assert_eq!(d.component_classes(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn rejects_bad_orientation() {
        let arcs = vec![Arc::new(ep(0, 0), ep(0, 2), vec![]), Arc::new(ep(0, 1), ep(0, 3), vec![])];
        assert!(matches!(SurfaceDiagram::new(0, 1, arcs), Err(DiagramError::Orientation { .. })));
    }

    #[test]
    fn rejects_dangling_and_reused_slots() {
        let arcs = vec![Arc::new(ep(5, 2), ep(0, 0), vec![])];
        assert!(matches!(SurfaceDiagram::new(0, 2, arcs), Err(DiagramError::DanglingEndpoint { .. })));
        let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![]), Arc::new(ep(0, 2), ep(0, 3), vec![])];
        assert!(matches!(SurfaceDiagram::new(0, 1, arcs), Err(DiagramError::SlotUsedTwice { .. })));
    }

    #[test]
    fn zero_class_warning() {
        let d = SurfaceDiagram::new(1, 0, vec![Arc::new(None, None, vec![0, 0])]).unwrap();
        assert_eq!(d.warnings().len(), 1);
    }
}
