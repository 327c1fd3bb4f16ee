//! State bases, gradings and the doubled differential.
//!
//! A state at a vertex with `k` circles is indexed by a `u32`: bit `t < k` is
//! the sign of circle `t` (set for `v₋`), and bit `k` is set for the `ℓ`
//! superscript.

pub mod rg;
pub mod table;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::SurfaceDiagram;
use crate::linalg::{Scalar, SparseMatrix};
use crate::smoothing::{CubeEdge, DottedCube, EdgeKind, Smoothing};

pub use rg::{from_rg_matrix, to_rg_matrix};

/// Which components of the table contribute to the differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Degree-0 components only.
    Plain,
    /// All components.
    Perturbed,
}

impl Variant {
    pub fn short_name(self) -> &'static str {
        match self {
            Variant::Plain => "dkh",
            Variant::Perturbed => "trh",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dkh" | "plain" => Ok(Variant::Plain),
            "trh" | "perturbed" => Ok(Variant::Perturbed),
            _ => Err(format!("unknown variant `{s}` (expected dkh or trh)")),
        }
    }
}

/// Component of a table entry, named by its nominal degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    C0,
    C2,
    C4,
}

/// `(i, j, 2c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Grading {
    pub i: i32,
    pub j: i32,
    pub c2: i32,
}

impl Grading {
    pub fn new(i: i32, j: i32, c2: i32) -> Self {
        Grading { i, j, c2 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct State {
    pub vertex: u32,
    pub lower: bool,
    /// `true` for `v₋`.
    pub signs: Vec<bool>,
    pub dots: Vec<bool>,
}

impl State {
    pub fn index(&self) -> u32 {
        let k = self.signs.len();
        let s = self.signs.iter().enumerate().fold(0u32, |m, (t, &b)| m | (b as u32) << t);
        s | (self.lower as u32) << k
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v")?;
        for (s, d) in self.signs.iter().zip(&self.dots) {
            write!(f, "{}{}", if *d { "•" } else { "" }, if *s { '-' } else { '+' })?;
        }
        write!(f, "^{}", if self.lower { 'ℓ' } else { 'u' })
    }
}

pub fn state_basis(cube: &DottedCube<'_>, vertex: u32) -> Vec<State> {
    let v = cube.vertex(vertex);
    let k = v.circles.len();
    let dots: Vec<bool> = v.circles.iter().map(|c| c.dotted).collect();
    (0..1u32 << (k + 1))
        .map(|idx| State {
            vertex,
            lower: idx >> k & 1 == 1,
            signs: (0..k).map(|t| idx >> t & 1 == 1).collect(),
            dots: dots.clone(),
        })
        .collect()
}

pub fn grading(state: &State, d: &SurfaceDiagram) -> Grading {
    let i = crate::smoothing::height(state.vertex, d.n_minus());
    let minus = state.signs.iter().filter(|&&s| s).count() as i32;
    let plus = state.signs.len() as i32 - minus;
    let j = plus - minus + i + d.writhe() - state.lower as i32;
    let dm = state.signs.iter().zip(&state.dots).filter(|(s, d)| **s && **d).count() as i32;
    let dp = state.signs.iter().zip(&state.dots).filter(|(s, d)| !**s && **d).count() as i32;
    Grading { i, j, c2: 2 * (dm - dp) + j }
}

fn grading_at(v: &Smoothing, dots: u64, idx: u32, writhe: i32) -> Grading {
    let k = v.circles.len();
    let signs = idx as u64 & ((1u64 << k) - 1);
    let minus = signs.count_ones() as i32;
    let plus = k as i32 - minus;
    let lower = (idx >> k & 1) as i32;
    let j = plus - minus + v.height + writhe - lower;
    let dm = (signs & dots).count_ones() as i32;
    let dp = (!signs & dots).count_ones() as i32;
    Grading { i: v.height, j, c2: 2 * (dm - dp) + j }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MapEntry {
    pub source: u32,
    pub target: u32,
    /// Includes the edge sign.
    pub coef: i64,
    pub component: Component,
}

/// Local map of one cube edge, between state indices of its two vertices.
pub fn edge_map(cube: &DottedCube<'_>, e: &CubeEdge, variant: Variant) -> Vec<MapEntry> {
    let src = cube.vertex(e.source);
    let tgt = cube.vertex(e.target);
    let (ks, kt) = (src.circles.len(), tgt.circles.len());
    let sdot = |c: usize| src.circles[c].dotted;
    let tdot = |c: usize| tgt.circles[c].dotted;
    let sign = e.sign as i64;
    let mut out = Vec::new();
    for idx in 0..1u32 << (ks + 1) {
        let bit = |c: usize| (idx >> c & 1) as u8;
        let lower = idx >> ks & 1;
        let base = e.passive.iter().fold(0u32, |m, &(s, t)| m | (idx >> s & 1) << t);
        let mut push = |target: u32, coef: i64, component: Component| {
            if variant == Variant::Plain && component != Component::C0 {
                return;
            }
            out.push(MapEntry { source: idx, target, coef: sign * coef, component });
        };
        match e.kind {
            EdgeKind::Merge => {
                let (a, b, t) = (e.source_circles[0], e.source_circles[1], e.target_circles[0]);
                let (s, comp) = table::merge(sdot(a), sdot(b), bit(a), bit(b));
                push(base | (s as u32) << t | lower << kt, 1, comp);
            }
            EdgeKind::Split => {
                let (a, t1, t2) = (e.source_circles[0], e.target_circles[0], e.target_circles[1]);
                for (s1, s2, comp) in table::split(tdot(t1), tdot(t2), bit(a)) {
                    push(base | (s1 as u32) << t1 | (s2 as u32) << t2 | lower << kt, 1, comp);
                }
            }
            EdgeKind::SingleCycle => {
                let (a, t) = (e.source_circles[0], e.target_circles[0]);
                let (s, coef, comp) = table::eta(sdot(a), lower == 1, bit(a));
                push(base | (s as u32) << t | (1 - lower) << kt, coef, comp);
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    pub vertex: u32,
    pub state: u32,
    pub grading: Grading,
}

/// A chain complex with generators sorted by homological degree, then by
/// vertex index, then by state index. `d` maps column `x` to the span of
/// generators one degree higher.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub variant: Variant,
    pub gens: Vec<Generator>,
    pub d: SparseMatrix,
    vertex_offset: Vec<usize>,
}

impl ChainComplex {
    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, vertex: u32, state: u32) -> usize {
        self.vertex_offset[vertex as usize] + state as usize
    }

    /// Generator index ranges per homological degree, ascending.
    pub fn degrees(&self) -> Vec<(i32, std::ops::Range<usize>)> {
        let mut out: Vec<(i32, std::ops::Range<usize>)> = Vec::new();
        for (x, g) in self.gens.iter().enumerate() {
            match out.last_mut() {
                Some((i, r)) if *i == g.grading.i => r.end = x + 1,
                _ => out.push((g.grading.i, x..x + 1)),
            }
        }
        out
    }

    pub fn d_squared_is_zero(&self) -> bool {
        self.d.mul(&self.d).is_zero()
    }

    /// Entries of `d` as `(source grading, target grading, coefficient)`.
    pub fn entries(&self) -> impl Iterator<Item = (Grading, Grading, &Scalar)> + '_ {
        self.d
            .columns()
            .iter()
            .enumerate()
            .flat_map(move |(c, col)| col.iter().map(move |(r, v)| (self.gens[c].grading, self.gens[*r].grading, v)))
    }
}

pub fn assemble_complex(cube: &DottedCube<'_>, variant: Variant) -> ChainComplex {
    let writhe = cube.diagram.writhe();
    let mut order: Vec<u32> = (0..cube.vertices.len() as u32).collect();
    order.sort_by_key(|&r| (r.count_ones(), r));
    let mut vertex_offset = vec![0usize; cube.vertices.len()];
    let mut gens = Vec::new();
    for &r in &order {
        let v = cube.vertex(r);
        vertex_offset[r as usize] = gens.len();
        let dots = v.dot_mask();
        for idx in 0..1u32 << (v.circles.len() + 1) {
            gens.push(Generator { vertex: r, state: idx, grading: grading_at(v, dots, idx, writhe) });
        }
    }
    let n = gens.len();
    let triplets: Vec<(usize, usize, Scalar)> = cube
        .edges
        .par_iter()
        .flat_map_iter(|e| {
            let (so, to) = (vertex_offset[e.source as usize], vertex_offset[e.target as usize]);
            edge_map(cube, e, variant)
                .into_iter()
                .map(move |m| (to + m.target as usize, so + m.source as usize, Scalar::from_int(m.coef)))
        })
        .collect();
    let d = SparseMatrix::from_triplets(n, n, triplets);
    ChainComplex { variant, gens, d, vertex_offset }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{Arc, CohomologyClass, Endpoint};
    use crate::smoothing::build_cube;

    fn loop_diagram(label: Vec<i64>) -> SurfaceDiagram {
        let g = label.len() as u32 / 2;
        SurfaceDiagram::new(g, 0, vec![Arc::new(None, None, label)]).unwrap()
    }

    fn single_cycle() -> SurfaceDiagram {
        let ep = |c, s| Some(Endpoint::new(c, s));
        let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![1, 0]), Arc::new(ep(0, 1), ep(0, 3), vec![0, 1])];
        SurfaceDiagram::new(1, 1, arcs).unwrap()
    }

    #[test]
    fn unknot_gradings() {
        let d = loop_diagram(vec![]);
        let cube = build_cube(&d, CohomologyClass::zero(0));
        let basis = state_basis(&cube, 0);
        assert_eq!(basis.len(), 4);
        let g: Vec<Grading> = basis.iter().map(|s| grading(s, &d)).collect();
        assert_eq!(g[0], Grading::new(0, 1, 1));
        assert_eq!(g[3], Grading::new(0, -2, -2));
    }

    #[test]
    fn dotted_minus_breaks_the_diagonal() {
        let d = loop_diagram(vec![1, 0]);
        let cube = build_cube(&d, "1,0".parse().unwrap());
        let s = &state_basis(&cube, 0)[1];
        assert_eq!(s.to_string(), "v•-^u");
        assert_eq!(grading(s, &d), Grading::new(0, -1, 1));
    }

    #[test]
    fn fast_and_slow_gradings_agree() {
        let d = single_cycle();
        let cube = build_cube(&d, "1,0".parse().unwrap());
        let cx = assemble_complex(&cube, Variant::Perturbed);
        for g in &cx.gens {
            let s = &state_basis(&cube, g.vertex)[g.state as usize];
            assert_eq!(s.index(), g.state);
            assert_eq!(grading(s, &d), g.grading);
        }
    }

    #[test]
    fn single_cycle_ranks() {
        let d = single_cycle();
        let cases = [
            ("1,1", Variant::Plain, 3),
            ("1,0", Variant::Plain, 2),
            ("1,0", Variant::Perturbed, 4),
            ("1,1", Variant::Perturbed, 4),
        ];
        for (gamma, variant, rank) in cases {
            let cube = build_cube(&d, gamma.parse().unwrap());
            let cx = assemble_complex(&cube, variant);
            assert_eq!(cx.d.rank(), rank, "{gamma} {variant}");
            assert!(cx.d_squared_is_zero());
        }
    }

    #[test]
    fn merge_example_row() {
        // v•+ ⊗ v+ ↦ v•+ in degree 0
        assert_eq!(table::merge(true, false, 0, 0), (0, Component::C0));
        assert_eq!(table::eta(false, true, 0), (1, 2, Component::C0));
        assert_eq!(table::split(false, false, 1)[1], (0, 0, Component::C4));
    }
}
