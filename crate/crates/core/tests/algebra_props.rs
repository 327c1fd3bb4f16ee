mod common;

use std::collections::BTreeMap;

use common::{random_diagram, rng};
use dkh_core::algebra::{edge_map, from_rg_matrix, to_rg_matrix, MapEntry};
use dkh_core::smoothing::{CubeEdge, DottedCube, EdgeKind};
use dkh_core::{assemble_complex, build_cube, CohomologyClass, Scalar, SparseMatrix, Variant};
use proptest::prelude::*;

fn edge_matrix(cube: &DottedCube<'_>, e: &CubeEdge, variant: Variant) -> SparseMatrix {
    let rows = 2usize << cube.vertex(e.target).circles.len();
    let cols = 2usize << cube.vertex(e.source).circles.len();
    let trip = edge_map(cube, e, variant)
        .into_iter()
        .map(|m: MapEntry| (m.target as usize, m.source as usize, Scalar::from_int(m.coef)));
    SparseMatrix::from_triplets(rows, cols, trip)
}

/// Expected image of an `r`/`g` basis state under the undotted perturbed map,
/// as `(target state, coefficient)`, before the edge sign.
fn lee_rg(e: &CubeEdge, ks: usize, kt: usize, x: u32) -> Option<(u32, i64)> {
    let bit = |c: usize| x >> c & 1;
    let lower = x >> ks & 1;
    let base = e.passive.iter().fold(0u32, |m, &(s, t)| m | bit(s) << t);
    match e.kind {
        EdgeKind::Merge => {
            let (a, b) = (bit(e.source_circles[0]), bit(e.source_circles[1]));
            (a == b).then(|| (base | a << e.target_circles[0] | lower << kt, 1))
        }
        EdgeKind::Split => {
            let a = bit(e.source_circles[0]);
            let y = base | a << e.target_circles[0] | a << e.target_circles[1] | lower << kt;
            Some((y, if a == 0 { 2 } else { -2 }))
        }
        EdgeKind::SingleCycle => {
            let a = bit(e.source_circles[0]);
            let y = base | a << e.target_circles[0] | (1 - lower) << kt;
            let c = match (lower, a) {
                (0, _) => 1,
                (_, 0) => 2,
                _ => -2,
            };
            Some((y, c))
        }
    }
}

fn check_diagram(seed: u64, genus: u32) {
    let mut r = rng(seed);
    let d = random_diagram(&mut r, genus, 8);
    let undotted = build_cube(&d, CohomologyClass::zero(genus));
    for gamma in CohomologyClass::all(genus) {
        let cube = build_cube(&d, gamma);
        for variant in [Variant::Plain, Variant::Perturbed] {
            let cx = assemble_complex(&cube, variant);
            assert!(cx.d_squared_is_zero(), "d^2 != 0: {variant} {gamma}\n{d}");
            for (s, t, _) in cx.entries() {
                assert_eq!(t.i, s.i + 1);
                let shift = (t.j - s.j, t.c2 - s.c2);
                match variant {
                    Variant::Plain => assert_eq!(shift, (0, 0), "{gamma}\n{d}"),
                    Variant::Perturbed => {
                        assert!(matches!(shift, (0, 0) | (0, 4) | (4, 0) | (4, 4)), "{shift:?} {gamma}\n{d}")
                    }
                }
            }
        }
        for (e, e0) in cube.edges.iter().zip(&undotted.edges) {
            // the sum of all components does not see the dots
            assert_eq!(edge_matrix(&cube, e, Variant::Perturbed), edge_matrix(&undotted, e0, Variant::Perturbed));
            for m in edge_map(&cube, e, Variant::Perturbed) {
                let ks = cube.vertex(e.source).circles.len();
                let kt = cube.vertex(e.target).circles.len();
                let flipped = (m.source >> ks & 1) != (m.target >> kt & 1);
                assert_eq!(flipped, e.kind == EdgeKind::SingleCycle);
            }
        }
    }
    for e in &undotted.edges {
        let ks = undotted.vertex(e.source).circles.len();
        let kt = undotted.vertex(e.target).circles.len();
        // the change of basis is dense; keep it small
        if ks.max(kt) > 4 {
            continue;
        }
        let rg = to_rg_matrix(kt).mul(&edge_matrix(&undotted, e, Variant::Perturbed)).mul(&from_rg_matrix(ks));
        for x in 0..(2u32 << ks) {
            let want: Vec<(usize, Scalar)> = lee_rg(e, ks, kt, x)
                .map(|(y, c)| vec![(y as usize, Scalar::from_int(c * e.sign as i64))])
                .unwrap_or_default();
            assert_eq!(rg.column(x as usize), &want[..], "edge {e:?} state {x}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn torus_complexes(seed in any::<u64>()) {
        check_diagram(seed, 1);
    }

    #[test]
    fn genus_two_complexes(seed in any::<u64>()) {
        check_diagram(seed, 2);
    }
}

#[test]
fn planar_complexes() {
    for seed in 0..20 {
        check_diagram(seed, 0);
    }
}

#[test]
fn state_counts() {
    let d = common::single_cycle();
    let cube = build_cube(&d, "1,0".parse().unwrap());
    for r in 0..2 {
        assert_eq!(dkh_core::state_basis(&cube, r).len(), 4);
    }
    let two = dkh_core::corpus_get("two-parallel").unwrap();
    let cube = build_cube(&two, CohomologyClass::zero(1));
    assert_eq!(dkh_core::state_basis(&cube, 0).len(), 8);
}

#[test]
fn single_cycle_matrices() {
    let d = common::single_cycle();
    let dense = |gamma: &str, v: Variant| -> BTreeMap<(u32, u32), i64> {
        let cube = build_cube(&d, gamma.parse().unwrap());
        edge_map(&cube, &cube.edges[0], v).into_iter().map(|m| ((m.source, m.target), m.coef)).collect()
    };
    // state index: bit 0 sign (1 = minus), bit 1 lower
    let plain_undotted: BTreeMap<(u32, u32), i64> = [((0, 2), 1), ((1, 3), 1), ((2, 1), 2)].into();
    assert_eq!(dense("1,1", Variant::Plain), plain_undotted);
    let perturbed_dotted: BTreeMap<(u32, u32), i64> = [((0, 2), 1), ((1, 3), 1), ((2, 1), 2), ((3, 0), 2)].into();
    assert_eq!(dense("1,0", Variant::Perturbed), perturbed_dotted);
}
