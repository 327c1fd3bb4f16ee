//! Pairing checks on bidegree multisets.

use std::collections::BTreeMap;

use crate::algebra::Grading;

/// Whether the multiset splits into pairs `{(i, j, 2c), (i, j−1, 2c−1)}`.
///
/// The shift keeps `(i, j − 2c)` fixed, so each class is a path ordered by
/// `j`, and a greedy sweep along each path decides it.
pub fn has_lower_shift_matching(gs: &[Grading]) -> bool {
    let mut paths: BTreeMap<(i32, i32), BTreeMap<i32, usize>> = BTreeMap::new();
    for g in gs {
        *paths.entry((g.i, g.j - g.c2)).or_default().entry(g.j).or_insert(0) += 1;
    }
    paths.values().all(|path| {
        let mut carry = 0usize;
        let mut prev: Option<i32> = None;
        for (&j, &n) in path {
            if carry > 0 && prev != Some(j - 1) {
                return false;
            }
            if n < carry {
                return false;
            }
            carry = n - carry;
            prev = Some(j);
        }
        carry == 0
    })
}

/// Whether, within each degree, the multiset splits into pairs whose
/// offsets are `(±2, ±2)` in `(j, 2c)`.
pub fn has_bar_pairing(gs: &[Grading]) -> bool {
    let mut by_deg: BTreeMap<i32, Vec<Grading>> = BTreeMap::new();
    for g in gs {
        by_deg.entry(g.i).or_default().push(*g);
    }
    by_deg.values().all(|v| perfect_bar_matching(v))
}

fn perfect_bar_matching(v: &[Grading]) -> bool {
    let (left, right): (Vec<Grading>, Vec<Grading>) = v.iter().partition(|g| g.j.rem_euclid(4) < 2);
    if left.len() != right.len() {
        return false;
    }
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|a| {
            (0..right.len()).filter(|&k| (a.j - right[k].j).abs() == 2 && (a.c2 - right[k].c2).abs() == 2).collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    (0..left.len()).all(|a| {
        let mut seen = vec![false; right.len()];
        augment(a, &adj, &mut owner, &mut seen)
    })
}

fn augment(a: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &b in &adj[a] {
        if seen[b] {
            continue;
        }
        seen[b] = true;
        if owner[b].is_none_or(|o| augment(o, adj, owner, seen)) {
            owner[b] = Some(a);
            return true;
        }
    }
    false
}
