use dkh_core::obstruct::{is_totally_nontrivial_with, TntOptions};
use dkh_core::{ascent_report, corpus_get, elementary_rank, is_totally_nontrivial, Assumption, Conclusion, Grading};

#[test]
fn grid_is_totally_nontrivial() {
    let d = corpus_get("grid-2x2").unwrap();
    let t = is_totally_nontrivial(&d);
    assert!(t.overall);
    assert_eq!(t.per_gamma.len(), 3);
    for v in &t.per_gamma {
        assert!(!v.prefiltered);
        assert_eq!(v.witness(), Some(Grading { i: 0, j: -3, c2: 1 }), "{}", v.gamma);
    }
    assert_eq!(elementary_rank(&d), 2);
}

#[test]
fn crossingless_loops_collapse_somewhere() {
    for name in ["essential-10-loop", "two-parallel", "null-loop", "annular-trefoil"] {
        let d = corpus_get(name).unwrap();
        let t = is_totally_nontrivial(&d);
        assert!(!t.overall, "{name}");
        assert!(t.per_gamma.iter().any(|v| v.collapsed()), "{name}");
    }
}

#[test]
fn prefilter_does_not_change_verdicts() {
    let off = TntOptions { prefilter: false, short_circuit: false };
    for name in ["essential-10-loop", "vertical-over-2", "clasp", "grid-2x2", "genus2-diagonal"] {
        let d = corpus_get(name).unwrap();
        let a = is_totally_nontrivial(&d);
        let b = is_totally_nontrivial_with(&d, off);
        assert_eq!(a.overall, b.overall, "{name}");
        for (x, y) in a.per_gamma.iter().zip(&b.per_gamma) {
            assert_eq!(x.witnesses, y.witnesses, "{name} {}", x.gamma);
        }
    }
}

#[test]
fn grid_as_source() {
    let d = corpus_get("grid-2x2").unwrap();
    let unknot = corpus_get("unknot").unwrap();
    assert_eq!(ascent_report(&d, &unknot, &[]).conclusion, Conclusion::AscentByTheorem { case: 1 });
    let bare = ascent_report(&d, &d, &[]);
    assert_eq!(bare.conclusion, Conclusion::Inconclusive);
    assert!(bare.notes.iter().any(|n| n.contains("not_pseudostrict")));
    let assumed = ascent_report(&d, &d, &[Assumption::NotPseudostrict]);
    assert_eq!(assumed.conclusion, Conclusion::AscentByTheorem { case: 2 });
    assert!(assumed.notes.iter().any(|n| n.contains("elementary")));
    let up = ascent_report(&unknot, &d, &[Assumption::NotPseudostrict]);
    assert_eq!(up.conclusion, Conclusion::Inconclusive);
}
