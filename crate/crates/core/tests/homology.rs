mod common;

use std::collections::BTreeMap;

use common::{classical_khovanov, doubled, g, random_diagram, rng, single_cycle, Pd};
use dkh_core::corpus::{constructible, corpus_get};
use dkh_core::homology::{associated_graded_dims, has_bar_pairing, has_lower_shift_matching};
use dkh_core::{assemble_complex, build_cube, dkh, dkh_perturbed, CohomologyClass, GradedDims, Variant};

#[test]
fn oracle_trefoil_by_hand() {
    let kh = classical_khovanov(&Pd::trefoil());
    let want: BTreeMap<(i32, i32), usize> = [((0, 1), 1), ((0, 3), 1), ((2, 5), 1), ((3, 9), 1)].into();
    assert_eq!(kh, want);
}

#[test]
fn oracle_reads_the_builder_trefoil_the_same_way() {
    let d = corpus_get("trefoil").unwrap();
    assert_eq!(classical_khovanov(&Pd::from_diagram(&d)), classical_khovanov(&Pd::trefoil()));
}

#[test]
fn genus_zero_is_two_shifted_copies() {
    let d = corpus_get("trefoil").unwrap();
    let h = dkh(&d, &CohomologyClass::zero(0));
    assert_eq!(h, doubled(&classical_khovanov(&Pd::trefoil())));
}

#[test]
fn random_planar_diagrams_match_the_oracle() {
    let mut r = rng(7);
    for _ in 0..40 {
        let d = random_diagram(&mut r, 0, 6);
        let h = dkh(&d, &CohomologyClass::zero(0));
        assert_eq!(h, doubled(&classical_khovanov(&Pd::from_diagram(&d))), "{d}");
    }
}

#[test]
fn trefoil_perturbed_has_one_quadruple() {
    let d = corpus_get("trefoil").unwrap();
    let p = dkh_perturbed(&d, &CohomologyClass::zero(0));
    assert_eq!(p.gens, vec![g(0, 0, 0), g(0, 1, 1), g(0, 2, 2), g(0, 3, 3)]);
}

#[test]
fn single_cycle_totals() {
    let d = single_cycle();
    let totals: Vec<usize> = common::classes(1).iter().map(|c| dkh(&d, c).total()).collect();
    assert_eq!(totals, [2, 4, 4, 2]);
    assert!(common::classes(1).iter().all(|c| dkh_perturbed(&d, c).total() == 0));
}

#[test]
fn cancellation_agrees_with_rank_nullity() {
    let mut r = rng(11);
    for k in 0..30 {
        let d = random_diagram(&mut r, 1 + k % 2, 6);
        for gamma in common::classes(d.genus()) {
            let cube = build_cube(&d, gamma);
            let plain = assemble_complex(&cube, Variant::Plain);
            let h = dkh_core::homology_plain(&plain).unwrap();
            assert_eq!(associated_graded_dims(&plain), h);
            // the perturbed complex has the plain one as associated graded
            assert_eq!(associated_graded_dims(&assemble_complex(&cube, Variant::Perturbed)), h);
        }
    }
}

#[test]
fn forgetting_c_is_gamma_blind() {
    let mut r = rng(13);
    for k in 0..30 {
        let d = random_diagram(&mut r, 1 + k % 2, 6);
        let base = dkh_perturbed(&d, &CohomologyClass::zero(d.genus()));
        for gamma in common::classes(d.genus()) {
            let p = dkh_perturbed(&d, &gamma);
            assert_eq!(p.j_counts(), base.j_counts(), "{d} {gamma}");
        }
    }
}

#[test]
fn no_dots_means_diagonal() {
    for (e, d) in constructible().filter(|(e, _)| !e.heavy) {
        for gamma in common::classes(d.genus()) {
            if d.arcs().iter().all(|a| !gamma.pairs_odd(a.z2())) {
                let p = dkh_perturbed(&d, &gamma);
                assert!(p.gens.iter().all(|x| x.c2 == x.j), "{} {gamma}", e.name);
            }
        }
    }
}

#[test]
fn pairing_structure_on_random_diagrams() {
    let mut r = rng(17);
    for k in 0..40 {
        let d = random_diagram(&mut r, 1 + k % 2, 6);
        for gamma in common::classes(d.genus()) {
            let p = dkh_perturbed(&d, &gamma);
            assert!(has_lower_shift_matching(&p.gens), "{d} {gamma} {:?}", p.gens);
            assert!(has_bar_pairing(&p.gens), "{d} {gamma} {:?}", p.gens);
        }
    }
}

#[test]
fn unknot_rows_in_both_variants() {
    let d = corpus_get("unknot").unwrap();
    let want = GradedDims::from_gradings([g(0, 1, 1), g(0, 0, 0), g(0, -1, -1), g(0, -2, -2)]);
    assert_eq!(dkh(&d, &CohomologyClass::zero(0)), want);
    assert_eq!(dkh_perturbed(&d, &CohomologyClass::zero(0)).counts(), want);
}
