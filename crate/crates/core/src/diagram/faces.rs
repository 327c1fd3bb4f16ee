use super::{End, Endpoint, SurfaceDiagram};

/// Leaving crossing `crossing` through `slot`, along the arc attached there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub crossing: usize,
    pub slot: u8,
}

/// A boundary walk of a region of the diagram complement. The region lies to
/// the right of the walk. Loops without crossings are not part of any walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
}

impl SurfaceDiagram {
    /// Arc travelled by a dart, and `+1` if the walk follows its orientation.
    pub fn dart_arc(&self, d: Dart) -> (usize, i64) {
        let ae = self.slot(Endpoint::new(d.crossing, d.slot));
        (ae.arc, if ae.end == End::Tail { 1 } else { -1 })
    }

    fn next_dart(&self, d: Dart) -> Dart {
        let far = self.across(Endpoint::new(d.crossing, d.slot));
        Dart { crossing: far.crossing, slot: (far.slot + 1) % 4 }
    }

    /// All boundary walks, in order of their smallest starting dart.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.crossing_count();
        let mut seen = vec![false; 4 * n];
        let mut out = Vec::new();
        for c in 0..n {
            for s in 0..4u8 {
                if seen[4 * c + s as usize] {
                    continue;
                }
                let start = Dart { crossing: c, slot: s };
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    seen[4 * d.crossing + d.slot as usize] = true;
                    darts.push(d);
                    d = self.next_dart(d);
                    if d == start {
                        break;
                    }
                }
                out.push(Face { darts });
            }
        }
        out
    }

    /// Signed label sum around a walk. Zero for the boundary of a disc.
    pub fn face_label_sum(&self, f: &Face) -> Vec<i64> {
        let mut sum = vec![0i64; 2 * self.genus() as usize];
        for &d in &f.darts {
            let (a, eps) = self.dart_arc(d);
            for (x, v) in sum.iter_mut().zip(&self.arcs()[a].label) {
                *x += eps * v;
            }
        }
        sum
    }
}
