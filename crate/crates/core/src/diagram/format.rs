//! JSON diagram files.
//!
//! ```text
//! {
//!   "genus": 1,
//!   "arcs": [ {"id": 0, "tail": [0, 2], "head": [0, 0], "label": [1, 0]}, ... ],
//!   "crossings": [ {"id": 0, "slots": [ {"arc": 0, "end": "head"}, ... ]}, ... ]
//! }
//! ```
//!
//! Ids are arbitrary distinct integers. `tail` and `head` are `[crossing id,
//! slot]` pairs, or `null` on both ends for a loop without crossings. The
//! crossing slot table must agree with the arc endpoints. Unknown keys are
//! rejected.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::{Arc, DiagramError, End, Endpoint, SurfaceDiagram};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileDiagram {
    genus: u32,
    arcs: Vec<FileArc>,
    crossings: Vec<FileCrossing>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileArc {
    id: i64,
    tail: Option<[i64; 2]>,
    head: Option<[i64; 2]>,
    label: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileCrossing {
    id: i64,
    slots: [FileArcEnd; 4],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileArcEnd {
    arc: i64,
    end: End,
}

pub fn parse_diagram(text: &str) -> Result<SurfaceDiagram, DiagramError> {
    let file: FileDiagram = serde_json::from_str(text).map_err(|e| DiagramError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;

    let mut crossing_index = FxHashMap::default();
    for (k, c) in file.crossings.iter().enumerate() {
        if crossing_index.insert(c.id, k).is_some() {
            return Err(DiagramError::DuplicateId { kind: "crossing", id: c.id });
        }
    }
    let mut arc_index = FxHashMap::default();
    for (k, a) in file.arcs.iter().enumerate() {
        if arc_index.insert(a.id, k).is_some() {
            return Err(DiagramError::DuplicateId { kind: "arc", id: a.id });
        }
    }

    let resolve = |arc_id: i64, p: Option<[i64; 2]>| -> Result<Option<Endpoint>, DiagramError> {
        let Some([c, s]) = p else { return Ok(None) };
        let &k = crossing_index.get(&c).ok_or(DiagramError::DanglingEndpoint { arc: arc_id, crossing: c })?;
        if !(0..4).contains(&s) {
            return Err(DiagramError::SlotOutOfRange { arc: arc_id, slot: s });
        }
        Ok(Some(Endpoint::new(k, s as u8)))
    };

    let mut arcs = Vec::with_capacity(file.arcs.len());
    for a in &file.arcs {
        arcs.push(Arc::new(resolve(a.id, a.tail)?, resolve(a.id, a.head)?, a.label.clone()));
    }
    let width = 2 * file.genus as usize;
    for (a, fa) in arcs.iter().zip(&file.arcs) {
        if a.label.len() != width {
            return Err(DiagramError::LabelLength { arc: fa.id, expected: width, found: a.label.len() });
        }
        if a.tail.is_none() != a.head.is_none() {
            return Err(DiagramError::HalfFree { arc: fa.id });
        }
    }

    let d = SurfaceDiagram::new(file.genus, file.crossings.len(), arcs).map_err(|e| relabel(e, &file))?;

    for (k, c) in file.crossings.iter().enumerate() {
        for (s, fe) in c.slots.iter().enumerate() {
            let &a = arc_index.get(&fe.arc).ok_or(DiagramError::UnknownArc { crossing: c.id, arc: fe.arc })?;
            let actual = d.crossings()[k].slots[s];
            if actual.arc != a || actual.end != fe.end {
                return Err(DiagramError::SlotMismatch { crossing: c.id, slot: s as u8 });
            }
        }
    }
    Ok(d)
}

/// Maps index-based error fields back to the ids used in the file.
fn relabel(e: DiagramError, file: &FileDiagram) -> DiagramError {
    let cid = |k: i64| file.crossings.get(k as usize).map_or(k, |c| c.id);
    let aid = |k: i64| file.arcs.get(k as usize).map_or(k, |a| a.id);
    match e {
        DiagramError::SlotUsedTwice { crossing, slot } => DiagramError::SlotUsedTwice { crossing: cid(crossing), slot },
        DiagramError::SlotUnused { crossing, slot } => DiagramError::SlotUnused { crossing: cid(crossing), slot },
        DiagramError::Orientation { crossing, detail } => DiagramError::Orientation { crossing: cid(crossing), detail },
        DiagramError::LabelLength { arc, expected, found } => {
            DiagramError::LabelLength { arc: aid(arc), expected, found }
        }
        DiagramError::HalfFree { arc } => DiagramError::HalfFree { arc: aid(arc) },
        other => other,
    }
}

/// Serializes with ids equal to indices. `parse_diagram` inverts this exactly.
pub fn serialize_diagram(d: &SurfaceDiagram) -> String {
    let pair = |e: Option<Endpoint>| e.map(|e| [e.crossing as i64, e.slot as i64]);
    let file = FileDiagram {
        genus: d.genus(),
        arcs: d
            .arcs()
            .iter()
            .enumerate()
            .map(|(k, a)| FileArc { id: k as i64, tail: pair(a.tail), head: pair(a.head), label: a.label.clone() })
            .collect(),
        crossings: d
            .crossings()
            .iter()
            .enumerate()
            .map(|(k, c)| FileCrossing {
                id: k as i64,
                slots: c.slots.map(|ae| FileArcEnd { arc: ae.arc as i64, end: ae.end }),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("diagram serializes");
    s.push('\n');
    s
}
