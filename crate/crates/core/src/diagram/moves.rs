//! Reidemeister moves on explicit sites.
//!
//! Sites are given by arc, crossing or face indices (faces as listed by
//! [`SurfaceDiagram::faces`]). Arcs created inside the disc of a move carry
//! zero labels; a split arc keeps its label on one piece.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{Arc, DiagramError, End, Endpoint, SurfaceDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Add a kink on `arc`. `over_first` selects whether the strand first
    /// passes over itself.
    R1Add { arc: usize, chirality: Chirality, over_first: bool },
    /// Remove the kink at `crossing`.
    R1Remove { crossing: usize },
    /// Push a finger from the arc at walk position `p` of `face` across the
    /// arc at position `q`, hugging the walk in between.
    R2Add { face: usize, p: usize, q: usize, finger_over: bool },
    /// Push a finger from free loop `a` across free loop `b`. The caller
    /// asserts the loops bound a common region, lying to the right of each
    /// loop unless the corresponding `reversed` flag is set.
    R2AddLoops { a: usize, b: usize, a_reversed: bool, b_reversed: bool, finger_over: bool },
    /// Remove the bigon `face`.
    R2Remove { face: usize },
    /// Slide a strand across the crossing opposite it in triangle `face`.
    R3 { face: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("site not applicable: {0}")]
    SiteNotApplicable(String),
    #[error("face {face} is not a disc: boundary label sum {sum:?}")]
    FaceNotADisc { face: usize, sum: Vec<i64> },
    #[error("move produced an invalid diagram: {0}")]
    Internal(#[from] DiagramError),
}

fn not_applicable(msg: impl Into<String>) -> MoveError {
    MoveError::SiteNotApplicable(msg.into())
}

// Compass rays in counterclockwise order.
const E: u8 = 0;
const N: u8 = 1;
const W: u8 = 2;
const S: u8 = 3;

/// Slot of a ray at a crossing whose under-strand enters from ray `under_in`.
fn slot_of(ray: u8, under_in: u8) -> u8 {
    (ray + 4 - under_in) % 4
}

fn add_into(dst: &mut [i64], src: &[i64], sign: i64) {
    for (x, v) in dst.iter_mut().zip(src) {
        *x += sign * v;
    }
}

pub fn apply_move(d: &SurfaceDiagram, m: &Move) -> Result<SurfaceDiagram, MoveError> {
    match *m {
        Move::R1Add { arc, chirality, over_first } => r1_add(d, arc, chirality, over_first),
        Move::R1Remove { crossing } => r1_remove(d, crossing),
        Move::R2Add { face, p, q, finger_over } => r2_add(d, face, p, q, finger_over),
        Move::R2AddLoops { a, b, a_reversed, b_reversed, finger_over } => {
            for x in [a, b] {
                if x >= d.arcs().len() || !d.arcs()[x].is_free() {
                    return Err(not_applicable(format!("arc {x} is not a loop without crossings")));
                }
            }
            if a == b {
                return Err(not_applicable("finger needs two distinct loops"));
            }
            let sign = |r: bool| if r { -1 } else { 1 };
            let zero = vec![0; 2 * d.genus() as usize];
            finger(d, a, sign(a_reversed), b, sign(b_reversed), zero, finger_over)
        }
        Move::R2Remove { face } => r2_remove(d, face),
        Move::R3 { face } => r3(d, face),
    }
}

pub fn apply_r1(
    d: &SurfaceDiagram,
    arc: usize,
    chirality: Chirality,
    over_first: bool,
) -> Result<SurfaceDiagram, MoveError> {
    r1_add(d, arc, chirality, over_first)
}

pub fn apply_r2(
    d: &SurfaceDiagram,
    face: usize,
    p: usize,
    q: usize,
    finger_over: bool,
) -> Result<SurfaceDiagram, MoveError> {
    r2_add(d, face, p, q, finger_over)
}

pub fn apply_r3(d: &SurfaceDiagram, face: usize) -> Result<SurfaceDiagram, MoveError> {
    r3(d, face)
}

fn r1_add(d: &SurfaceDiagram, a: usize, chirality: Chirality, over_first: bool) -> Result<SurfaceDiagram, MoveError> {
    if a >= d.arcs().len() {
        return Err(not_applicable(format!("no arc {a}")));
    }
    let x = d.crossing_count();
    let mut arcs = d.arcs().to_vec();
    let zero = vec![0; 2 * d.genus() as usize];
    let (in_slot, loop_from, loop_to, out_slot) = match (over_first, chirality) {
        (false, Chirality::Positive) => (0, 2, 3, 1),
        (false, Chirality::Negative) => (0, 2, 1, 3),
        (true, Chirality::Positive) => (3, 1, 0, 2),
        (true, Chirality::Negative) => (1, 3, 0, 2),
    };
    let ep = |s| Some(Endpoint::new(x, s));
    let old = arcs[a].clone();
    if old.is_free() {
        arcs[a] = Arc::new(ep(out_slot), ep(in_slot), old.label);
    } else {
        arcs[a].head = ep(in_slot);
        arcs.push(Arc::new(ep(out_slot), old.head, zero.clone()));
    }
    arcs.push(Arc::new(ep(loop_from), ep(loop_to), zero));
    Ok(SurfaceDiagram::new(d.genus(), x + 1, arcs)?)
}

fn face_at(d: &SurfaceDiagram, face: usize) -> Result<super::Face, MoveError> {
    d.faces().into_iter().nth(face).ok_or_else(|| not_applicable(format!("no face {face}")))
}

fn require_disc(d: &SurfaceDiagram, face: usize, f: &super::Face) -> Result<(), MoveError> {
    let sum = d.face_label_sum(f);
    if sum.iter().any(|v| *v != 0) {
        return Err(MoveError::FaceNotADisc { face, sum });
    }
    Ok(())
}

fn r1_remove(d: &SurfaceDiagram, x: usize) -> Result<SurfaceDiagram, MoveError> {
    if x >= d.crossing_count() {
        return Err(not_applicable(format!("no crossing {x}")));
    }
    let faces = d.faces();
    let monogons: Vec<(usize, &super::Face)> =
        faces.iter().enumerate().filter(|(_, f)| f.len() == 1 && f.darts[0].crossing == x).collect();
    let Some(&(first, f0)) = monogons.first() else {
        return Err(not_applicable(format!("crossing {x} has no monogon")));
    };
    if !monogons.iter().any(|(k, f)| require_disc(d, *k, f).is_ok()) {
        return Err(require_disc(d, first, f0).unwrap_err());
    }
    splice_out(d, &[x])
}

fn r2_add(d: &SurfaceDiagram, face: usize, p: usize, q: usize, finger_over: bool) -> Result<SurfaceDiagram, MoveError> {
    let f = face_at(d, face)?;
    let m = f.len();
    if p >= m || q >= m || p == q {
        return Err(not_applicable(format!("positions {p}, {q} invalid for a face of length {m}")));
    }
    let (ap, eps_p) = d.dart_arc(f.darts[p]);
    let (aq, eps_q) = d.dart_arc(f.darts[q]);
    if ap == aq {
        return Err(not_applicable("finger needs two distinct arcs"));
    }
    let mut s = vec![0; 2 * d.genus() as usize];
    let mut k = (p + 1) % m;
    while k != q {
        let (a, eps) = d.dart_arc(f.darts[k]);
        add_into(&mut s, &d.arcs()[a].label, eps);
        k = (k + 1) % m;
    }
    finger(d, ap, eps_p, aq, eps_q, s, finger_over)
}

/// The finger from `ep` runs near the walk end of `ep` to the walk start of
/// `eq`, along arcs whose signed labels sum to `s`. Picture `eq` running east
/// in walk direction with the region to the south; the finger crosses it
/// northwards and returns.
fn finger(
    d: &SurfaceDiagram,
    ep: usize,
    eps_p: i64,
    eq: usize,
    eps_q: i64,
    s: Vec<i64>,
    finger_over: bool,
) -> Result<SurfaceDiagram, MoveError> {
    let n = d.crossing_count();
    let (xw, xe) = (n, n + 1);
    let (q_in, q_out) = if eps_q > 0 { (W, E) } else { (E, W) };
    // the returning strand hugs the walk, so it crosses nearer the corner
    let (x_out, x_back) = if eps_p > 0 { (xe, xw) } else { (xw, xe) };
    let under_in = |finger_in: u8| if finger_over { q_in } else { finger_in };
    let u_out = under_in(S);
    let u_back = under_in(N);
    let u_of = |x: usize| if x == x_out { u_out } else { u_back };
    let at = |x: usize, ray: u8| Some(Endpoint::new(x, slot_of(ray, u_of(x))));

    let zero = vec![0; 2 * d.genus() as usize];
    let mut arcs = d.arcs().to_vec();
    let old_p = arcs[ep].clone();
    let old_q = arcs[eq].clone();

    if old_p.is_free() {
        arcs[ep] = Arc::new(at(x_back, S), at(x_out, S), old_p.label.clone());
    } else {
        let mut a1 = s.clone();
        let mut a3: Vec<i64> = s.iter().map(|v| -v).collect();
        if eps_p > 0 {
            add_into(&mut a1, &old_p.label, 1);
        } else {
            add_into(&mut a3, &old_p.label, 1);
        }
        arcs[ep] = Arc::new(old_p.tail, at(x_out, S), a1);
        arcs.push(Arc::new(at(x_back, S), old_p.head, a3));
    }
    arcs.push(Arc::new(at(x_out, N), at(x_back, N), zero.clone()));

    let (first, second) = if eps_q > 0 { (xw, xe) } else { (xe, xw) };
    arcs.push(Arc::new(at(first, q_out), at(second, q_in), zero.clone()));
    if old_q.is_free() {
        arcs[eq] = Arc::new(at(second, q_out), at(first, q_in), old_q.label.clone());
    } else {
        let (b1, b3) =
            if eps_q > 0 { (zero.clone(), old_q.label.clone()) } else { (old_q.label.clone(), zero.clone()) };
        arcs[eq] = Arc::new(old_q.tail, at(first, q_in), b1);
        arcs.push(Arc::new(at(second, q_out), old_q.head, b3));
    }
    Ok(SurfaceDiagram::new(d.genus(), n + 2, arcs)?)
}

fn r2_remove(d: &SurfaceDiagram, face: usize) -> Result<SurfaceDiagram, MoveError> {
    let f = face_at(d, face)?;
    if f.len() != 2 {
        return Err(not_applicable(format!("face {face} is not a bigon")));
    }
    let (x1, x2) = (f.darts[0].crossing, f.darts[1].crossing);
    if x1 == x2 {
        return Err(not_applicable(format!("face {face} meets a single crossing")));
    }
    let over = |dart: super::Dart| {
        let far = d.across(Endpoint::new(dart.crossing, dart.slot));
        (dart.slot % 2 == 1, far.slot % 2 == 1)
    };
    let (a0, a1) = over(f.darts[0]);
    let (b0, b1) = over(f.darts[1]);
    if a0 != a1 || b0 != b1 || a0 == b0 {
        return Err(not_applicable(format!("bigon {face} does not have one strand over the other")));
    }
    require_disc(d, face, &f)?;
    splice_out(d, &[x1, x2])
}

fn r3(d: &SurfaceDiagram, face: usize) -> Result<SurfaceDiagram, MoveError> {
    let f = face_at(d, face)?;
    if f.len() != 3 {
        return Err(not_applicable(format!("face {face} is not a triangle")));
    }
    let v: Vec<usize> = f.darts.iter().map(|x| x.crossing).collect();
    if v[0] == v[1] || v[1] == v[2] || v[0] == v[2] {
        return Err(not_applicable(format!("triangle {face} repeats a crossing")));
    }
    let s: Vec<u8> = f.darts.iter().map(|x| x.slot).collect();
    let t: Vec<u8> = f.darts.iter().map(|x| d.across(Endpoint::new(x.crossing, x.slot)).slot).collect();
    let (e, eps): (Vec<usize>, Vec<i64>) = f.darts.iter().map(|x| d.dart_arc(*x)).unzip();

    // strand k meets strand k+1 at v[k+1]; it is over there iff t[k] is odd
    let wins: Vec<bool> = t.iter().map(|x| x % 2 == 1).collect();
    if wins[0] == wins[1] && wins[1] == wins[2] {
        return Err(not_applicable(format!("triangle {face} has a cyclic crossing pattern")));
    }
    require_disc(d, face, &f)?;

    // coboundary making the triangle arcs carry zero labels
    let width = 2 * d.genus() as usize;
    let mut pot = vec![vec![0i64; width]; 3];
    for k in 0..2 {
        let mut next = pot[k].clone();
        add_into(&mut next, &d.arcs()[e[k]].label, -eps[k]);
        pot[k + 1] = next;
    }
    let pot_of = |p: Option<Endpoint>| p.and_then(|p| v.iter().position(|c| *c == p.crossing)).map(|k| &pot[k]);
    let mut arcs = d.arcs().to_vec();
    for arc in arcs.iter_mut() {
        if let Some(h) = pot_of(arc.head) {
            add_into(&mut arc.label, h, 1);
        }
        if let Some(tl) = pot_of(arc.tail) {
            add_into(&mut arc.label, tl, -1);
        }
    }

    let mut relocate: Vec<(Endpoint, Endpoint)> = Vec::with_capacity(6);
    let mut fresh = Vec::with_capacity(3);
    for k in 0..3 {
        let (vk, vn) = (v[k], v[(k + 1) % 3]);
        let alpha = Endpoint::new(vk, (s[k] + 2) % 4);
        let gamma = Endpoint::new(vn, (t[k] + 2) % 4);
        relocate.push((alpha, Endpoint::new(vn, t[k])));
        relocate.push((gamma, Endpoint::new(vk, s[k])));
        let arc = if d.slot(alpha).end == End::Head {
            Arc::new(Some(gamma), Some(alpha), vec![0; width])
        } else {
            Arc::new(Some(alpha), Some(gamma), vec![0; width])
        };
        fresh.push(arc);
    }
    let moved = |p: Option<Endpoint>| p.map(|p| relocate.iter().find(|(from, _)| *from == p).map_or(p, |(_, to)| *to));
    for (k, arc) in arcs.iter_mut().enumerate() {
        if e.contains(&k) {
            continue;
        }
        arc.tail = moved(arc.tail);
        arc.head = moved(arc.head);
    }
    for k in 0..3 {
        arcs[e[k]] = fresh[k].clone();
    }
    Ok(SurfaceDiagram::new(d.genus(), d.crossing_count(), arcs)?)
}

/// Deletes crossings, joining each strand through them. Labels add; a strand
/// that closes up becomes a loop without crossings.
fn splice_out(d: &SurfaceDiagram, removed: &[usize]) -> Result<SurfaceDiagram, MoveError> {
    let gone = |c: usize| removed.contains(&c);
    let old = d.arcs();
    let mut visited = vec![false; old.len()];
    let mut out: Vec<(usize, Arc)> = Vec::new();
    let walk = |start: usize, visited: &mut Vec<bool>| -> Arc {
        let mut label = old[start].label.clone();
        let mut cur = start;
        visited[cur] = true;
        loop {
            match old[cur].head {
                Some(h) if gone(h.crossing) => {
                    cur = d.next_arc(cur);
                    if cur == start {
                        return Arc::new(None, None, label);
                    }
                    visited[cur] = true;
                    add_into(&mut label, &old[cur].label, 1);
                }
                head => return Arc::new(old[start].tail, head, label),
            }
        }
    };
    for a in 0..old.len() {
        let starts_here = match old[a].tail {
            None => true,
            Some(t) => !gone(t.crossing),
        };
        if !visited[a] && starts_here {
            let arc = walk(a, &mut visited);
            out.push((a, arc));
        }
    }
    for a in 0..old.len() {
        if !visited[a] {
            let arc = walk(a, &mut visited);
            out.push((a, arc));
        }
    }
    out.sort_by_key(|(k, _)| *k);

    let mut index = vec![usize::MAX; d.crossing_count()];
    let mut next = 0;
    for (c, slot) in index.iter_mut().enumerate() {
        if !gone(c) {
            *slot = next;
            next += 1;
        }
    }
    let remap = |p: Option<Endpoint>| p.map(|p| Endpoint::new(index[p.crossing], p.slot));
    let arcs = out.into_iter().map(|(_, a)| Arc::new(remap(a.tail), remap(a.head), a.label)).collect();
    Ok(SurfaceDiagram::new(d.genus(), next, arcs)?)
}

/// Every move applicable to `d`, except finger moves between loops without
/// crossings (whose geometry cannot be checked). Additions are skipped when
/// they would exceed `max_crossings`.
pub fn applicable_moves(d: &SurfaceDiagram, max_crossings: usize) -> Vec<Move> {
    let n = d.crossing_count();
    let mut out = Vec::new();
    if n < max_crossings {
        for arc in 0..d.arcs().len() {
            for chirality in [Chirality::Positive, Chirality::Negative] {
                for over_first in [false, true] {
                    out.push(Move::R1Add { arc, chirality, over_first });
                }
            }
        }
    }
    let faces = d.faces();
    if n + 2 <= max_crossings {
        for (face, f) in faces.iter().enumerate() {
            for p in 0..f.len() {
                for q in 0..f.len() {
                    if p != q && d.dart_arc(f.darts[p]).0 != d.dart_arc(f.darts[q]).0 {
                        for finger_over in [false, true] {
                            out.push(Move::R2Add { face, p, q, finger_over });
                        }
                    }
                }
            }
        }
    }
    for crossing in 0..n {
        let m = Move::R1Remove { crossing };
        if apply_move(d, &m).is_ok() {
            out.push(m);
        }
    }
    for (face, f) in faces.iter().enumerate() {
        let m = match f.len() {
            2 => Move::R2Remove { face },
            3 => Move::R3 { face },
            _ => continue,
        };
        if apply_move(d, &m).is_ok() {
            out.push(m);
        }
    }
    out
}

fn over_word(b: bool) -> &'static str {
    if b {
        "over"
    } else {
        "under"
    }
}

fn dir_word(reversed: bool) -> &'static str {
    if reversed {
        "rev"
    } else {
        "fwd"
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::R1Add { arc, chirality, over_first } => {
                let c = if chirality == Chirality::Positive { "pos" } else { "neg" };
                write!(f, "r1+:{arc}:{c}:{}", over_word(over_first))
            }
            Move::R1Remove { crossing } => write!(f, "r1-:{crossing}"),
            Move::R2Add { face, p, q, finger_over } => write!(f, "r2+:{face}:{p}:{q}:{}", over_word(finger_over)),
            Move::R2AddLoops { a, b, a_reversed, b_reversed, finger_over } => write!(
                f,
                "r2+loops:{a}:{b}:{}:{}:{}",
                dir_word(a_reversed),
                dir_word(b_reversed),
                over_word(finger_over)
            ),
            Move::R2Remove { face } => write!(f, "r2-:{face}"),
            Move::R3 { face } => write!(f, "r3:{face}"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let bad = || format!("cannot parse move {s:?}");
        let num = |k: usize| parts.get(k).and_then(|p| p.parse::<usize>().ok()).ok_or_else(bad);
        let flag = |k: usize, yes: &str, no: &str| match parts.get(k) {
            Some(p) if *p == yes => Ok(true),
            Some(p) if *p == no => Ok(false),
            _ => Err(bad()),
        };
        let arity = |n: usize| if parts.len() == n { Ok(()) } else { Err(bad()) };
        match parts[0] {
            "r1+" => {
                arity(4)?;
                let chirality = if flag(2, "pos", "neg")? { Chirality::Positive } else { Chirality::Negative };
                Ok(Move::R1Add { arc: num(1)?, chirality, over_first: flag(3, "over", "under")? })
            }
            "r1-" => {
                arity(2)?;
                Ok(Move::R1Remove { crossing: num(1)? })
            }
            "r2+" => {
                arity(5)?;
                Ok(Move::R2Add { face: num(1)?, p: num(2)?, q: num(3)?, finger_over: flag(4, "over", "under")? })
            }
            "r2+loops" => {
                arity(6)?;
                Ok(Move::R2AddLoops {
                    a: num(1)?,
                    b: num(2)?,
                    a_reversed: flag(3, "rev", "fwd")?,
                    b_reversed: flag(4, "rev", "fwd")?,
                    finger_over: flag(5, "over", "under")?,
                })
            }
            "r2-" => {
                arity(2)?;
                Ok(Move::R2Remove { face: num(1)? })
            }
            "r3" => {
                arity(2)?;
                Ok(Move::R3 { face: num(1)? })
            }
            _ => Err(bad()),
        }
    }
}
