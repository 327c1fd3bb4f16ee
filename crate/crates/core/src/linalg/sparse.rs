use rustc_hash::FxHashMap;

use super::Scalar;

/// A sparse vector: `(index, value)` pairs sorted by index, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Returns `y + a·x`.
pub fn axpy(y: &[(usize, Scalar)], a: &Scalar, x: &[(usize, Scalar)]) -> SparseVec {
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut p, mut q) = (0, 0);
    while p < y.len() || q < x.len() {
        let take_y = q >= x.len() || (p < y.len() && y[p].0 < x[q].0);
        let take_x = p >= y.len() || (q < x.len() && x[q].0 < y[p].0);
        if take_y {
            out.push(y[p].clone());
            p += 1;
        } else if take_x {
            let v = a * &x[q].1;
            if !v.is_zero() {
                out.push((x[q].0, v));
            }
            q += 1;
        } else {
            let v = &y[p].1 + &(a * &x[q].1);
            if !v.is_zero() {
                out.push((y[p].0, v));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

/// Column-major sparse matrix over the rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.cols[i].push((i, Scalar::ONE));
        }
        m
    }

    /// Builds a matrix from columns. Entries in each column are sorted and
    /// duplicate rows summed.
    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        let cols = cols.into_iter().map(normalize).collect::<Vec<_>>();
        debug_assert!(cols.iter().all(|c| c.iter().all(|(r, _)| *r < nrows)));
        SparseMatrix { nrows, cols }
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Self {
        let mut cols = vec![Vec::new(); ncols];
        for (r, c, v) in entries {
            assert!(r < nrows && c < ncols, "entry ({r}, {c}) out of bounds");
            cols[c].push((r, v));
        }
        Self::from_columns(nrows, cols)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Scalar)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].binary_search_by_key(&r, |e| e.0).map(|k| self.cols[c][k].1.clone()).unwrap_or(Scalar::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn mul_vec(&self, x: &[(usize, Scalar)]) -> SparseVec {
        let mut acc: SparseVec = Vec::new();
        for (j, v) in x {
            acc = axpy(&acc, v, &self.cols[*j]);
        }
        acc
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch");
        let cols = rhs.cols.iter().map(|c| self.mul_vec(c)).collect();
        SparseMatrix { nrows: self.nrows, cols }
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                cols[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { nrows: self.ncols(), cols }
    }

    pub fn rank(&self) -> usize {
        column_reduce(self, false).rank
    }

    /// A basis of the kernel, as sparse vectors of length `ncols`.
    pub fn kernel_basis(&self) -> Vec<SparseVec> {
        column_reduce(self, true).kernel
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![Scalar::ZERO; self.ncols()]; self.nrows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                out[*i][j] = v.clone();
            }
        }
        out
    }
}

fn normalize(mut col: SparseVec) -> SparseVec {
    col.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(col.len());
    for (r, v) in col {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 = &last.1 + &v,
            _ => out.push((r, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

struct Reduction {
    rank: usize,
    kernel: Vec<SparseVec>,
}

/// Left-to-right column reduction keyed on the lowest nonzero row of each
/// column. Columns that reduce to zero yield kernel vectors when `track` is set.
fn column_reduce(m: &SparseMatrix, track: bool) -> Reduction {
    let mut pivots: FxHashMap<usize, (SparseVec, SparseVec)> = FxHashMap::default();
    let mut kernel = Vec::new();
    for (j, col) in m.cols.iter().enumerate() {
        let mut v = col.clone();
        let mut ops: SparseVec = if track { vec![(j, Scalar::ONE)] } else { Vec::new() };
        loop {
            let Some((low, lv)) = v.last().cloned() else {
                if track {
                    kernel.push(ops);
                }
                break;
            };
            match pivots.get(&low) {
                Some((pv, pops)) => {
                    let pl = &pv.last().expect("pivot column is nonzero").1;
                    let f = -(&lv / pl);
                    v = axpy(&v, &f, pv);
                    if track {
                        ops = axpy(&ops, &f, pops);
                    }
                }
                None => {
                    pivots.insert(low, (v, ops));
                    break;
                }
            }
        }
    }
    Reduction { rank: pivots.len(), kernel }
}

/// Dimension of the span of `vectors`, each living in a space of dimension `dim`.
pub fn span_dim(dim: usize, vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    SparseMatrix::from_columns(dim, vectors.into_iter().collect()).rank()
}
