//! The `r`/`g` basis: `r = (v₊ + v₋)/2`, `g = (v₊ − v₋)/2`, circle by circle.
//! State indices use the same layout as the `v` basis, with bit `t` set for
//! `g` on circle `t`.

use crate::linalg::{Scalar, SparseMatrix};

/// Maps `v`-coordinates to `r`/`g`-coordinates on `k` circles (both
/// superscripts). Uses `v₊ = r + g`, `v₋ = r − g`.
pub fn to_rg_matrix(k: usize) -> SparseMatrix {
    change(k, Scalar::ONE)
}

/// Inverse of [`to_rg_matrix`].
pub fn from_rg_matrix(k: usize) -> SparseMatrix {
    change(k, Scalar::new(1, 1i64 << k))
}

fn change(k: usize, scale: Scalar) -> SparseMatrix {
    let half = 1u32 << k;
    let n = 2 * half as usize;
    let mut trip = Vec::with_capacity(n * half as usize);
    for x in 0..n as u32 {
        for y in 0..half {
            let row = (x & half) | y;
            let s = if (x & y & (half - 1)).count_ones().is_multiple_of(2) { scale.clone() } else { -scale.clone() };
            trip.push((row as usize, x as usize, s));
        }
    }
    SparseMatrix::from_triplets(n, n, trip)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for k in 0..4 {
            let p = to_rg_matrix(k).mul(&from_rg_matrix(k));
            assert_eq!(p, SparseMatrix::identity(2 << k));
        }
    }

    #[test]
    fn plus_is_r_plus_g() {
        let m = to_rg_matrix(1);
        assert_eq!(m.column(0), &[(0, Scalar::ONE), (1, Scalar::ONE)]);
        assert_eq!(m.column(1), &[(0, Scalar::ONE), (1, -Scalar::ONE)]);
    }
}
