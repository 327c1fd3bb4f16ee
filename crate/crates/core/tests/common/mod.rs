#![allow(dead_code)]

//! Shared test helpers: an independent classical Khovanov computation and
//! random diagram generators.

use std::collections::BTreeMap;

use dkh_core::diagram::{applicable_moves, apply_move, Arc, BraidOp, End, Endpoint, GridBuilder, SurfaceDiagram};
use dkh_core::{CohomologyClass, GradedDims, Grading};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Classical oracle over GF(P), from planar-diagram codes.

const P: u64 = 32_749;

/// `X[a,b,c,d]`: `a` is the incoming under-strand, then counterclockwise.
/// `positive` is true when the over-strand enters at `d`.
#[derive(Clone, Debug)]
pub struct Pd {
    pub crossings: Vec<([usize; 4], bool)>,
    pub free_loops: usize,
}

impl Pd {
    /// Right-handed trefoil `X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]`.
    pub fn trefoil() -> Pd {
        let x = [[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]];
        // consecutive labels along the orientation: positive iff b - d = 1 mod 6
        let crossings = x.iter().map(|&q| (q, (q[1] + 6 - q[3]) % 6 == 1)).collect();
        Pd { crossings, free_loops: 0 }
    }

    /// Reads the slot table of a genus-0 diagram directly.
    pub fn from_diagram(d: &SurfaceDiagram) -> Pd {
        assert_eq!(d.genus(), 0);
        let crossings = d
            .crossings()
            .iter()
            .map(|c| {
                let arcs = [c.slots[0].arc, c.slots[1].arc, c.slots[2].arc, c.slots[3].arc];
                (arcs, c.slots[3].end == End::Head)
            })
            .collect();
        let free_loops = d.arcs().iter().filter(|a| a.tail.is_none()).count();
        Pd { crossings, free_loops }
    }
}

fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
    let p = *parent.get(&x).unwrap_or(&x);
    if p == x {
        return x;
    }
    let r = find(parent, p);
    parent.insert(x, r);
    r
}

/// Circles of resolution `r`, as sorted lists of labels.
fn circles(pd: &Pd, r: usize) -> Vec<Vec<usize>> {
    let mut parent = BTreeMap::new();
    let mut labels = Vec::new();
    for (k, (x, _)) in pd.crossings.iter().enumerate() {
        labels.extend_from_slice(x);
        let pairs = if r >> k & 1 == 0 { [(x[0], x[1]), (x[2], x[3])] } else { [(x[0], x[3]), (x[1], x[2])] };
        for (a, b) in pairs {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
    }
    labels.sort_unstable();
    labels.dedup();
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for l in labels {
        let root = find(&mut parent, l);
        groups.entry(root).or_default().push(l);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    // free loops: label them past every real label
    for f in 0..pd.free_loops {
        out.push(vec![usize::MAX - f]);
    }
    out
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = pow(rows[rank][col], P - 2);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                #[allow(clippy::needless_range_loop)]
                for c in 0..ncols {
                    rows[r][c] = (rows[r][c] + P * P - f * rows[rank][c]) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Khovanov homology dims by `(i, q)`, brute force.
pub fn classical_khovanov(pd: &Pd) -> BTreeMap<(i32, i32), usize> {
    let n = pd.crossings.len();
    let n_plus = pd.crossings.iter().filter(|c| c.1).count() as i32;
    let n_minus = n as i32 - n_plus;
    let verts: Vec<Vec<Vec<usize>>> = (0..1usize << n).map(|r| circles(pd, r)).collect();
    let deg = |r: usize, s: usize| -> (i32, i32) {
        let k = verts[r].len() as i32;
        let minus = s.count_ones() as i32;
        let h = r.count_ones() as i32;
        (h - n_minus, k - 2 * minus + h + n_plus - 2 * n_minus)
    };
    // generators grouped by (i, q)
    let mut gens: BTreeMap<(i32, i32), Vec<(usize, usize)>> = BTreeMap::new();
    for (r, cs) in verts.iter().enumerate() {
        for s in 0..1usize << cs.len() {
            gens.entry(deg(r, s)).or_default().push((r, s));
        }
    }
    let circle_of = |r: usize, label: usize| verts[r].iter().position(|c| c.contains(&label)).unwrap();
    let image = |r: usize, s: usize| -> Vec<((usize, usize), i64)> {
        let mut out = Vec::new();
        for c in 0..n {
            if r >> c & 1 == 1 {
                continue;
            }
            let t = r | 1 << c;
            let sign = if (r & ((1 << c) - 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
            let src = &verts[r];
            let x = pd.crossings[c].0;
            let mut touched_s: Vec<usize> = x.iter().map(|&l| circle_of(r, l)).collect();
            touched_s.sort_unstable();
            touched_s.dedup();
            let mut touched_t: Vec<usize> = x.iter().map(|&l| circle_of(t, l)).collect();
            touched_t.sort_unstable();
            touched_t.dedup();
            let mut base = 0usize;
            for (k, circ) in src.iter().enumerate() {
                if !touched_s.contains(&k) && s >> k & 1 == 1 {
                    base |= 1 << circle_of(t, circ[0]);
                }
            }
            let bit = |k: usize| s >> k & 1;
            match (touched_s.len(), touched_t.len()) {
                (2, 1) => {
                    let (a, b, m) = (bit(touched_s[0]), bit(touched_s[1]), touched_t[0]);
                    if a + b < 2 {
                        out.push(((t, base | (a + b) << m), sign));
                    }
                }
                (1, 2) => {
                    let (t1, t2) = (touched_t[0], touched_t[1]);
                    if bit(touched_s[0]) == 0 {
                        out.push(((t, base | 1 << t2), sign));
                        out.push(((t, base | 1 << t1), sign));
                    } else {
                        out.push(((t, base | 1 << t1 | 1 << t2), sign));
                    }
                }
                other => panic!("planar edge changed circles by {other:?}"),
            }
        }
        out
    };
    let mut result = BTreeMap::new();
    for (&(i, q), src) in &gens {
        let rank_out = |i: i32| -> usize {
            let (Some(from), Some(to)) = (gens.get(&(i, q)), gens.get(&(i + 1, q))) else { return 0 };
            let index: BTreeMap<(usize, usize), usize> = to.iter().enumerate().map(|(k, g)| (*g, k)).collect();
            let rows = from
                .iter()
                .map(|&(r, s)| {
                    let mut row = vec![0u64; to.len()];
                    for (g, c) in image(r, s) {
                        let k = index[&g];
                        row[k] = (row[k] + (c.rem_euclid(P as i64)) as u64) % P;
                    }
                    row
                })
                .collect();
            rank_mod_p(rows)
        };
        let dim = src.len() - rank_out(i) - rank_out(i - 1);
        if dim > 0 {
            result.insert((i, q), dim);
        }
    }
    result
}

/// Two copies of classical homology, the second shifted down one in `j`,
/// with `2c = j`.
pub fn doubled(kh: &BTreeMap<(i32, i32), usize>) -> GradedDims {
    let mut dims = BTreeMap::new();
    for (&(i, q), &n) in kh {
        *dims.entry(Grading { i, j: q, c2: q }).or_insert(0) += n;
        *dims.entry(Grading { i, j: q - 1, c2: q - 1 }).or_insert(0) += n;
    }
    GradedDims { dims }
}

// ---------------------------------------------------------------------------
// Random diagrams.

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A braid-closure diagram with at most `max_n` crossings on a surface of the
/// given genus (0, 1 or 2), optionally followed by random moves.
pub fn random_diagram(r: &mut ChaCha8Rng, genus: u32, max_n: usize) -> SurfaceDiagram {
    let strands = r.gen_range(1..=3usize);
    let builder = match genus {
        0 => GridBuilder::planar(strands.max(2)),
        1 => GridBuilder::torus(strands),
        _ => {
            let cores = [[1, 0, 0, 0], [1, 0, 1, 0], [0, 0, 1, 0], [0, 0, 0, 0]];
            let verts = [[0, 1, 0, 0], [0, 0, 0, 1], [0, 1, 0, 1]];
            let core = cores[r.gen_range(0..cores.len())];
            // a vertical strand must meet the core once
            let vertical = if core[0] == 1 { verts[0] } else { verts[1] };
            GridBuilder { genus: 2, strands, core_label: core.to_vec(), vertical_label: vertical.to_vec() }
        }
    };
    let core_zero = builder.core_label.iter().all(|&x| x == 0);
    let strands = builder.strands;
    let mut ops = Vec::new();
    let mut n = 0;
    let target = r.gen_range(0..=max_n);
    while n < target {
        let vertical_ok = genus > 0 && !core_zero && n + strands <= max_n;
        if vertical_ok && r.gen_bool(0.3) {
            ops.push(BraidOp::Vertical { over: r.gen_bool(0.5) });
            n += strands;
        } else if strands >= 2 {
            ops.push(BraidOp::Sigma { i: r.gen_range(0..strands - 1), positive: r.gen_bool(0.5) });
            n += 1;
        } else {
            break;
        }
    }
    let mut d = builder.build(&ops).expect("random braid word");
    let moves = r.gen_range(0..=3);
    random_moves(r, &mut d, moves, max_n);
    d
}

/// Applies up to `count` random applicable moves, staying within `max_n`.
/// Returns the moves applied.
pub fn random_moves(r: &mut ChaCha8Rng, d: &mut SurfaceDiagram, count: usize, max_n: usize) -> Vec<String> {
    let mut log = Vec::new();
    for _ in 0..count {
        let options = applicable_moves(d, max_n);
        if options.is_empty() {
            break;
        }
        let m = &options[r.gen_range(0..options.len())];
        *d = apply_move(d, m).unwrap_or_else(|e| panic!("listed move {m} failed: {e}"));
        log.push(m.to_string());
    }
    log
}

/// `(1,0)` and `(0,1)` curves meeting once.
pub fn single_cycle() -> SurfaceDiagram {
    let ep = |c, s| Some(Endpoint::new(c, s));
    let arcs = vec![Arc::new(ep(0, 2), ep(0, 0), vec![1, 0]), Arc::new(ep(0, 1), ep(0, 3), vec![0, 1])];
    SurfaceDiagram::new(1, 1, arcs).unwrap()
}

pub fn classes(genus: u32) -> Vec<CohomologyClass> {
    CohomologyClass::all(genus).collect()
}

pub fn g(i: i32, j: i32, c2: i32) -> Grading {
    Grading { i, j, c2 }
}
