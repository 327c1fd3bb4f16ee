use super::{Arc, DiagramError, Endpoint, SurfaceDiagram};

/// One column of a braid-like word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidOp {
    /// Crossing between positions `i` and `i + 1` (counted from the south).
    /// Positive when the strand rising from `i` passes under.
    Sigma { i: usize, positive: bool },
    /// A strand running north across every position, closed up through the
    /// rest of the surface.
    Vertical { over: bool },
}

/// Closes braid words inside an annulus on `Σ_g`.
///
/// Strands run east and close across a seam. Each strand picks up
/// `core_label` at the seam; each vertical strand picks up `vertical_label`
/// where it closes up.
#[derive(Clone, Debug)]
pub struct GridBuilder {
    pub genus: u32,
    pub strands: usize,
    pub core_label: Vec<i64>,
    pub vertical_label: Vec<i64>,
}

impl GridBuilder {
    /// Ordinary braid closure in the plane.
    pub fn planar(strands: usize) -> Self {
        GridBuilder { genus: 0, strands, core_label: Vec::new(), vertical_label: Vec::new() }
    }

    /// Closure around the `(1,0)` curve of the torus, verticals along `(0,1)`.
    pub fn torus(strands: usize) -> Self {
        GridBuilder { genus: 1, strands, core_label: vec![1, 0], vertical_label: vec![0, 1] }
    }

    pub fn build(&self, ops: &[BraidOp]) -> Result<SurfaceDiagram, DiagramError> {
        let width = 2 * self.genus as usize;
        for l in [&self.core_label, &self.vertical_label] {
            if l.len() != width && !(l.is_empty() && width == 0) {
                return Err(DiagramError::LabelLength { arc: -1, expected: width, found: l.len() });
            }
        }
        let mut arcs: Vec<Arc> = Vec::new();
        let fresh = |arcs: &mut Vec<Arc>, tail: Option<Endpoint>| {
            arcs.push(Arc::new(tail, None, vec![0; width]));
            arcs.len() - 1
        };
        let first: Vec<usize> = (0..self.strands).map(|_| fresh(&mut arcs, None)).collect();
        let mut current = first.clone();
        // (first arc, last arc, seam label) for each closed strand
        let mut closures: Vec<(usize, usize, Vec<i64>)> = Vec::new();
        let mut n = 0;

        for op in ops {
            match *op {
                BraidOp::Sigma { i, positive } => {
                    if i + 1 >= self.strands {
                        return Err(DiagramError::Orientation {
                            crossing: n as i64,
                            detail: format!("generator {i} out of range for {} strands", self.strands),
                        });
                    }
                    let x = n;
                    n += 1;
                    let (lower_in, lower_out, upper_in, upper_out) = if positive { (0, 2, 3, 1) } else { (1, 3, 0, 2) };
                    arcs[current[i]].head = Some(Endpoint::new(x, lower_in));
                    arcs[current[i + 1]].head = Some(Endpoint::new(x, upper_in));
                    let rising = fresh(&mut arcs, Some(Endpoint::new(x, lower_out)));
                    let falling = fresh(&mut arcs, Some(Endpoint::new(x, upper_out)));
                    current[i + 1] = rising;
                    current[i] = falling;
                }
                BraidOp::Vertical { over } => {
                    if self.genus == 0 {
                        return Err(DiagramError::Orientation {
                            crossing: n as i64,
                            detail: "vertical strands need positive genus".into(),
                        });
                    }
                    let (h_in, h_out, v_in, v_out) = if over { (0, 2, 1, 3) } else { (3, 1, 0, 2) };
                    let v_first = fresh(&mut arcs, None);
                    let mut v_cur = v_first;
                    for p in 0..self.strands {
                        let x = n;
                        n += 1;
                        arcs[current[p]].head = Some(Endpoint::new(x, h_in));
                        arcs[v_cur].head = Some(Endpoint::new(x, v_in));
                        current[p] = fresh(&mut arcs, Some(Endpoint::new(x, h_out)));
                        v_cur = fresh(&mut arcs, Some(Endpoint::new(x, v_out)));
                    }
                    closures.push((v_first, v_cur, self.vertical_label.clone()));
                }
            }
        }
        for p in 0..self.strands {
            closures.push((first[p], current[p], self.core_label.clone()));
        }

        let mut dead = vec![false; arcs.len()];
        for (f, l, seam) in closures {
            let seam = if seam.is_empty() { vec![0; width] } else { seam };
            if f == l {
                arcs[f].label = seam;
                continue;
            }
            let last = arcs[l].clone();
            let a = &mut arcs[f];
            a.tail = last.tail;
            #[allow(clippy::needless_range_loop)]
            for k in 0..width {
                a.label[k] += last.label[k] + seam[k];
            }
            dead[l] = true;
        }
        let arcs = arcs.into_iter().zip(dead).filter(|(_, d)| !d).map(|(a, _)| a).collect();
        SurfaceDiagram::new(self.genus, n, arcs)
    }
}
