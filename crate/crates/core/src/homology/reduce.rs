//! Cancellation of differential entries between generators of equal `(j, 2c)`.
//!
//! Each cancellation of an invertible entry `x → y` replaces the differential
//! on the remaining generators by `d − d(·→y) a⁻¹ d(x→·)`. The correction term
//! runs from something below `y` to something above `x`, so it never lowers
//! either filtration degree, and the result is filtered homotopy equivalent to
//! the input. When no homogeneous entries remain, the survivors span the
//! homology of the associated graded complex.

use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::algebra::{ChainComplex, Grading};
use crate::linalg::{Scalar, SparseMatrix};

#[derive(Clone, Debug)]
pub struct Reduced {
    /// Surviving generators, in their original order.
    pub gens: Vec<Grading>,
    /// Differential among survivors.
    pub d: SparseMatrix,
}

pub fn cancel_homogeneous(cx: &ChainComplex) -> Reduced {
    let n = cx.len();
    let key: Vec<(i32, i32)> = cx.gens.iter().map(|g| (g.grading.j, g.grading.c2)).collect();
    let mut out: Vec<FxHashMap<usize, Scalar>> = cx.d.columns().iter().map(|c| c.iter().cloned().collect()).collect();
    let mut inc: Vec<FxHashSet<usize>> = vec![FxHashSet::default(); n];
    for (x, col) in out.iter().enumerate() {
        for &w in col.keys() {
            inc[w].insert(x);
        }
    }
    let mut alive = vec![true; n];
    let mut queued = vec![true; n];
    let mut queue: VecDeque<usize> = (0..n).collect();

    while let Some(x) = queue.pop_front() {
        queued[x] = false;
        if !alive[x] {
            continue;
        }
        let pivot = out[x]
            .iter()
            .filter(|(y, _)| key[**y] == key[x])
            .min_by_key(|(y, _)| (inc[**y].len(), **y))
            .map(|(y, a)| (*y, a.clone()));
        let Some((y, a)) = pivot else { continue };
        let ainv = a.inv();
        let xout: Vec<(usize, Scalar)> =
            out[x].iter().filter(|(w, _)| **w != y).map(|(w, v)| (*w, v.clone())).collect();
        let zs: Vec<usize> = inc[y].iter().copied().filter(|&z| z != x).collect();

        for &z in &zs {
            let f = out[z].remove(&y).expect("incidence out of sync") * &ainv;
            for (w, b) in &xout {
                let entry = out[z].entry(*w).or_insert(Scalar::ZERO);
                *entry = &*entry - &(&f * b);
                if entry.is_zero() {
                    out[z].remove(w);
                    inc[*w].remove(&z);
                } else {
                    inc[*w].insert(z);
                }
            }
            if !queued[z] {
                queued[z] = true;
                queue.push_back(z);
            }
        }
        for v in [x, y] {
            for w in std::mem::take(&mut out[v]).into_keys() {
                inc[w].remove(&v);
            }
            for z in std::mem::take(&mut inc[v]) {
                out[z].remove(&v);
            }
            alive[v] = false;
        }
    }

    let survivors: Vec<usize> = (0..n).filter(|&x| alive[x]).collect();
    let mut local = vec![usize::MAX; n];
    for (k, &x) in survivors.iter().enumerate() {
        local[x] = k;
    }
    let cols = survivors
        .iter()
        .map(|&x| {
            let mut c: Vec<(usize, Scalar)> = out[x].iter().map(|(w, v)| (local[*w], v.clone())).collect();
            c.sort_by_key(|e| e.0);
            c
        })
        .collect();
    Reduced {
        gens: survivors.iter().map(|&x| cx.gens[x].grading).collect(),
        d: SparseMatrix::from_columns(survivors.len(), cols),
    }
}
