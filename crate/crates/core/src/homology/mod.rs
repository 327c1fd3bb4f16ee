//! Homology of the plain complex and filtered bidegrees of the perturbed one.

mod reduce;
pub mod structure;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ChainComplex, Grading, Variant};
use crate::linalg::{span_dim, Scalar, SparseMatrix, SparseVec};

pub use reduce::{cancel_homogeneous, Reduced};
pub use structure::{has_bar_pairing, has_lower_shift_matching};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("expected a {expected} complex, got {found}")]
    VariantMismatch { expected: Variant, found: Variant },
}

/// Dimensions indexed by `(i, j, 2c)`. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub dims: BTreeMap<Grading, usize>,
}

impl GradedDims {
    pub fn from_gradings(gs: impl IntoIterator<Item = Grading>) -> Self {
        let mut dims = BTreeMap::new();
        for g in gs {
            *dims.entry(g).or_insert(0) += 1;
        }
        GradedDims { dims }
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn by_degree(&self) -> BTreeMap<i32, usize> {
        let mut m = BTreeMap::new();
        for (g, n) in &self.dims {
            *m.entry(g.i).or_insert(0) += n;
        }
        m
    }

    /// Sorted `(grading, dim)` rows.
    pub fn rows(&self) -> impl Iterator<Item = (Grading, usize)> + '_ {
        self.dims.iter().map(|(g, n)| (*g, *n))
    }
}

/// Associated-graded bidegrees of a basis of the perturbed homology, sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FilteredBidegrees {
    pub gens: Vec<Grading>,
}

impl FilteredBidegrees {
    pub fn total(&self) -> usize {
        self.gens.len()
    }

    pub fn counts(&self) -> GradedDims {
        GradedDims::from_gradings(self.gens.iter().copied())
    }

    /// Multiplicities by `(i, j)` with `c` forgotten.
    pub fn j_counts(&self) -> BTreeMap<(i32, i32), usize> {
        let mut m = BTreeMap::new();
        for g in &self.gens {
            *m.entry((g.i, g.j)).or_insert(0) += 1;
        }
        m
    }

    /// First generator with `2c ≠ j`, if any.
    pub fn off_diagonal(&self) -> Option<Grading> {
        self.gens.iter().copied().find(|g| g.c2 != g.j)
    }
}

fn check(cx: &ChainComplex, expected: Variant) -> Result<(), HomologyError> {
    if cx.variant != expected {
        return Err(HomologyError::VariantMismatch { expected, found: cx.variant });
    }
    Ok(())
}

/// Rank–nullity on each `(j, 2c)` summand.
pub fn homology_plain(cx: &ChainComplex) -> Result<GradedDims, HomologyError> {
    check(cx, Variant::Plain)?;
    let mut blocks: BTreeMap<(i32, i32), Vec<usize>> = BTreeMap::new();
    for (x, g) in cx.gens.iter().enumerate() {
        blocks.entry((g.grading.j, g.grading.c2)).or_default().push(x);
    }
    let parts: Vec<Vec<(Grading, usize)>> = blocks
        .par_iter()
        .map(|(&(j, c2), members)| {
            let mut by_deg: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
            for &x in members {
                by_deg.entry(cx.gens[x].grading.i).or_default().push(x);
            }
            let rank = |i: i32| -> usize {
                let (Some(src), Some(tgt)) = (by_deg.get(&i), by_deg.get(&(i + 1))) else { return 0 };
                let local: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(k, &x)| (x, k)).collect();
                let cols =
                    src.iter().map(|&x| cx.d.column(x).iter().map(|(r, v)| (local[r], v.clone())).collect()).collect();
                SparseMatrix::from_columns(tgt.len(), cols).rank()
            };
            by_deg
                .iter()
                .filter_map(|(&i, xs)| {
                    let dim = xs.len() - rank(i) - rank(i - 1);
                    (dim > 0).then_some((Grading { i, j, c2 }, dim))
                })
                .collect()
        })
        .collect();
    Ok(GradedDims { dims: parts.into_iter().flatten().collect() })
}

/// Homology of the associated graded complex, via cancellation. Agrees with
/// [`homology_plain`] on plain complexes.
pub fn associated_graded_dims(cx: &ChainComplex) -> GradedDims {
    GradedDims::from_gradings(cancel_homogeneous(cx).gens)
}

/// Generators of `C` (columns) restricted to a degree, as local vectors.
struct DegreeData {
    /// Grading of each local generator in degree `i`.
    gens: Vec<Grading>,
    /// `d` out of degree `i`, rows local to degree `i + 1`.
    out: Vec<SparseVec>,
    /// Basis of boundaries in degree `i`, local coordinates.
    boundaries: Vec<SparseVec>,
}

fn split_degrees(r: &Reduced) -> BTreeMap<i32, DegreeData> {
    let mut local = vec![0usize; r.gens.len()];
    let mut members: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for (x, g) in r.gens.iter().enumerate() {
        let m = members.entry(g.i).or_default();
        local[x] = m.len();
        m.push(x);
    }
    let to_local = |col: &[(usize, Scalar)]| -> SparseVec {
        let mut v: SparseVec = col.iter().map(|(w, s)| (local[*w], s.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    };
    members
        .iter()
        .map(|(&i, xs)| {
            let boundaries = members
                .get(&(i - 1))
                .map(|prev| prev.iter().map(|&z| to_local(r.d.column(z))).filter(|v| !v.is_empty()).collect())
                .unwrap_or_default();
            let data = DegreeData {
                gens: xs.iter().map(|&x| r.gens[x]).collect(),
                out: xs.iter().map(|&x| to_local(r.d.column(x))).collect(),
                boundaries,
            };
            (i, data)
        })
        .collect()
}

/// Cycles supported on the generators selected by `keep`, plus boundaries.
fn filtered_span(dd: &DegreeData, keep: impl Fn(&Grading) -> bool, rows: usize) -> Vec<SparseVec> {
    let sel: Vec<usize> = (0..dd.gens.len()).filter(|&x| keep(&dd.gens[x])).collect();
    let m = SparseMatrix::from_columns(rows, sel.iter().map(|&x| dd.out[x].clone()).collect());
    let mut v: Vec<SparseVec> = m
        .kernel_basis()
        .into_iter()
        .map(|k| {
            let mut w: SparseVec = k.into_iter().map(|(c, s)| (sel[c], s)).collect();
            w.sort_by_key(|e| e.0);
            w
        })
        .collect();
    v.extend(dd.boundaries.iter().cloned());
    v
}

/// Bidegrees of the perturbed homology.
///
/// Per degree, `H` carries two decreasing filtrations `Fʲ_a` (images of cycles
/// with `j ≥ a`) and `Fᶜ_b` (images of cycles with `2c ≥ b`). Two filtrations of
/// one space have a common adapted basis, and the multiplicity of `(a, b)` is
/// read off `dim(Fʲ_a ∩ Fᶜ_b)` by inclusion–exclusion over the next realized
/// values.
pub fn homology_perturbed(cx: &ChainComplex) -> Result<FilteredBidegrees, HomologyError> {
    check(cx, Variant::Perturbed)?;
    let reduced = cancel_homogeneous(cx);
    let degrees = split_degrees(&reduced);
    let next_rows: BTreeMap<i32, usize> = degrees.iter().map(|(i, dd)| (*i, dd.gens.len())).collect();

    let mut gens: Vec<Grading> = degrees
        .par_iter()
        .flat_map_iter(|(&i, dd)| {
            let rows = next_rows.get(&(i + 1)).copied().unwrap_or(0);
            let dim = dd.gens.len();
            let b = span_dim(dim, dd.boundaries.iter().cloned());
            let mut js: Vec<i32> = dd.gens.iter().map(|g| g.j).collect();
            let mut cs: Vec<i32> = dd.gens.iter().map(|g| g.c2).collect();
            js.sort_unstable();
            js.dedup();
            cs.sort_unstable();
            cs.dedup();
            let vj: Vec<Vec<SparseVec>> = js.iter().map(|&a| filtered_span(dd, |g| g.j >= a, rows)).collect();
            let vc: Vec<Vec<SparseVec>> = cs.iter().map(|&c| filtered_span(dd, |g| g.c2 >= c, rows)).collect();
            let dj: Vec<usize> = vj.iter().map(|v| span_dim(dim, v.iter().cloned())).collect();
            let dc: Vec<usize> = vc.iter().map(|v| span_dim(dim, v.iter().cloned())).collect();
            let f = |p: usize, q: usize| -> i64 {
                if p >= js.len() || q >= cs.len() {
                    return 0;
                }
                let sum = span_dim(dim, vj[p].iter().chain(&vc[q]).cloned());
                (dj[p] + dc[q]) as i64 - sum as i64 - b as i64
            };
            let mut out = Vec::new();
            #[allow(clippy::needless_range_loop)]
            for p in 0..js.len() {
                for q in 0..cs.len() {
                    let m = f(p, q) - f(p + 1, q) - f(p, q + 1) + f(p + 1, q + 1);
                    assert!(m >= 0, "negative multiplicity at ({i}, {}, {})", js[p], cs[q]);
                    out.extend(std::iter::repeat_n(Grading { i, j: js[p], c2: cs[q] }, m as usize));
                }
            }
            out
        })
        .collect();
    gens.sort_unstable();
    Ok(FilteredBidegrees { gens })
}

/// `c` from `2c`, printed as an integer or a half.
pub fn format_c(c2: i32) -> String {
    if c2 % 2 == 0 {
        (c2 / 2).to_string()
    } else {
        format!("{c2}/2")
    }
}
