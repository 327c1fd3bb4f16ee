//! Resolutions, circles and the dotted cube.
//!
//! Crossing `k` is resolved by bit `k` of the resolution index. With slots in
//! counterclockwise order and the under-strand entering at slot 0, the
//! 0-resolution joins slots (0,1) and (2,3), and the 1-resolution joins (0,3)
//! and (1,2). This holds for both crossing signs: the oriented resolution
//! is the 0-resolution of a positive crossing and the 1-resolution of a
//! negative one.

use rayon::prelude::*;

use crate::diagram::{CohomologyClass, End, Endpoint, SurfaceDiagram};

/// Largest crossing count accepted by [`build_cube`].
pub const MAX_CROSSINGS: usize = 24;

/// Slot joined to `slot` by resolution `bit`.
pub fn partner(slot: u8, bit: bool) -> u8 {
    if bit {
        3 - slot
    } else {
        slot ^ 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    /// Arcs in the order met while tracing.
    pub arcs: Vec<usize>,
    pub z2_class: u64,
    pub dotted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothing {
    pub resolution: u32,
    /// Ordered by smallest arc index.
    pub circles: Vec<Circle>,
    pub height: i32,
    arc_circle: Vec<u32>,
}

impl Smoothing {
    pub fn circle_of_arc(&self, arc: usize) -> usize {
        self.arc_circle[arc] as usize
    }

    pub fn dot_mask(&self) -> u64 {
        self.circles.iter().enumerate().filter(|(_, c)| c.dotted).fold(0, |m, (k, _)| m | (1 << k))
    }
}

/// `#1-bits − n₋`.
pub fn height(resolution: u32, n_minus: usize) -> i32 {
    resolution.count_ones() as i32 - n_minus as i32
}

pub fn resolve(d: &SurfaceDiagram, r: u32) -> Smoothing {
    let arcs = d.arcs();
    let mut arc_circle = vec![u32::MAX; arcs.len()];
    let mut circles = Vec::new();
    for start in 0..arcs.len() {
        if arc_circle[start] != u32::MAX {
            continue;
        }
        let id = circles.len() as u32;
        let mut members = Vec::new();
        let mut z2 = 0u64;
        let (mut a, mut toward) = (start, End::Head);
        loop {
            arc_circle[a] = id;
            members.push(a);
            z2 ^= arcs[a].z2();
            let far = match toward {
                End::Head => arcs[a].head,
                End::Tail => arcs[a].tail,
            };
            let Some(far) = far else { break };
            let bit = (r >> far.crossing) & 1 == 1;
            let next = d.slot(Endpoint::new(far.crossing, partner(far.slot, bit)));
            a = next.arc;
            toward = match next.end {
                End::Tail => End::Head,
                End::Head => End::Tail,
            };
            if a == start {
                break;
            }
        }
        circles.push(Circle { arcs: members, z2_class: z2, dotted: false });
    }
    Smoothing { resolution: r, circles, height: height(r, d.n_minus()), arc_circle }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeKind {
    Merge,
    Split,
    SingleCycle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeEdge {
    pub source: u32,
    pub target: u32,
    pub bit: usize,
    pub kind: EdgeKind,
    pub sign: i8,
    /// Circles at the source touching the flipped crossing, ascending.
    pub source_circles: Vec<usize>,
    /// Circles at the target touching the flipped crossing, ascending.
    pub target_circles: Vec<usize>,
    /// Untouched circles: (source index, target index).
    pub passive: Vec<(usize, usize)>,
}

/// Sign of the edge flipping `bit` out of `source`.
pub fn edge_sign(source: u32, bit: usize) -> i8 {
    if (source & ((1u32 << bit) - 1)).count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub struct DottedCube<'a> {
    pub diagram: &'a SurfaceDiagram,
    pub gamma: CohomologyClass,
    /// Indexed by resolution.
    pub vertices: Vec<Smoothing>,
    pub edges: Vec<CubeEdge>,
}

impl DottedCube<'_> {
    pub fn vertex(&self, r: u32) -> &Smoothing {
        &self.vertices[r as usize]
    }

    pub fn dimension(&self) -> usize {
        self.diagram.crossing_count()
    }
}

fn touching(d: &SurfaceDiagram, s: &Smoothing, k: usize) -> Vec<usize> {
    let mut v: Vec<usize> = d.crossings()[k].slots.iter().map(|ae| s.circle_of_arc(ae.arc)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn make_edge(d: &SurfaceDiagram, src: &Smoothing, tgt: &Smoothing, bit: usize) -> CubeEdge {
    let source_circles = touching(d, src, bit);
    let target_circles = touching(d, tgt, bit);
    let kind = match (source_circles.len(), target_circles.len()) {
        (2, 1) => EdgeKind::Merge,
        (1, 2) => EdgeKind::Split,
        (1, 1) => EdgeKind::SingleCycle,
        other => unreachable!("impossible circle change {other:?}"),
    };
    let passive = src
        .circles
        .iter()
        .enumerate()
        .filter(|(k, _)| !source_circles.contains(k))
        .map(|(k, c)| (k, tgt.circle_of_arc(c.arcs[0])))
        .collect();
    CubeEdge {
        source: src.resolution,
        target: tgt.resolution,
        bit,
        kind,
        sign: edge_sign(src.resolution, bit),
        source_circles,
        target_circles,
        passive,
    }
}

pub fn build_cube(d: &SurfaceDiagram, gamma: CohomologyClass) -> DottedCube<'_> {
    let n = d.crossing_count();
    assert!(n <= MAX_CROSSINGS, "{n} crossings exceeds the supported maximum {MAX_CROSSINGS}");
    assert_eq!(gamma.len(), 2 * d.genus() as usize, "class length must be twice the genus");
    let vertices: Vec<Smoothing> = (0..1u32 << n)
        .into_par_iter()
        .map(|r| {
            let mut s = resolve(d, r);
            for c in &mut s.circles {
                c.dotted = gamma.pairs_odd(c.z2_class);
            }
            s
        })
        .collect();
    let edges = (0..1u32 << n)
        .into_par_iter()
        .flat_map_iter(|r| {
            let vertices = &vertices;
            (0..n)
                .filter(move |k| r & (1 << k) == 0)
                .map(move |k| make_edge(d, &vertices[r as usize], &vertices[(r | 1 << k) as usize], k))
        })
        .collect();
    DottedCube { diagram: d, gamma, vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{apply_r1, Arc, Chirality};

    fn single_cycle() -> SurfaceDiagram {
        let ep = |c, s| Some(Endpoint::new(c, s));
        let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![1, 0]), Arc::new(ep(0, 1), ep(0, 3), vec![0, 1])];
        SurfaceDiagram::new(1, 1, arcs).unwrap()
    }

    #[test]
    fn single_cycle_resolutions() {
        let d = single_cycle();
        for r in 0..2 {
            let s = resolve(&d, r);
            assert_eq!(s.circles.len(), 1);
            assert_eq!(s.circles[0].z2_class, 0b11);
        }
        let cube = build_cube(&d, "1,0".parse().unwrap());
        assert_eq!(cube.edges.len(), 1);
        assert_eq!(cube.edges[0].kind, EdgeKind::SingleCycle);
        assert!(cube.vertices.iter().all(|v| v.circles[0].dotted));
    }

    #[test]
    fn kink_has_one_merge_or_split() {
        let l = SurfaceDiagram::new(1, 0, vec![Arc::new(None, None, vec![0, 0])]).unwrap();
        let k = apply_r1(&l, 0, Chirality::Positive, false).unwrap();
        let cube = build_cube(&k, CohomologyClass::zero(1));
        assert_eq!(cube.vertices.len(), 2);
        let counts: Vec<usize> = cube.vertices.iter().map(|v| v.circles.len()).collect();
        assert_eq!(counts, vec![2, 1]);
        assert_eq!(cube.edges[0].kind, EdgeKind::Merge);
        assert_eq!(cube.edges[0].sign, 1);
    }

    #[test]
    fn heights() {
        assert_eq!(height(0, 2), -2);
        assert_eq!(height(0b101, 1), 1);
        assert_eq!(height(0b111, 0), 3);
    }

    #[test]
    fn square_faces_anticommute() {
        for a in 0..4usize {
            for b in a + 1..4 {
                for r in 0..16u32 {
                    if r & (1 << a) != 0 || r & (1 << b) != 0 {
                        continue;
                    }
                    let p = edge_sign(r, a) * edge_sign(r | 1 << a, b);
                    let q = edge_sign(r, b) * edge_sign(r | 1 << b, a);
                    assert_eq!(p * q, -1);
                }
            }
        }
    }
}
