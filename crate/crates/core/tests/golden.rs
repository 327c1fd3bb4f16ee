//! Regression tables for the light corpus entries.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files after an intended change.

use std::path::PathBuf;

use dkh_core::corpus::constructible;
use dkh_core::report::{render_tables, Format, Table};
use dkh_core::{dkh, dkh_perturbed, CohomologyClass, GradedDims, SurfaceDiagram, Variant};

fn tables(d: &SurfaceDiagram, variant: Variant) -> String {
    let tables: Vec<Table> = CohomologyClass::all(d.genus())
        .map(|gamma| {
            let dims = match variant {
                Variant::Plain => dkh(d, &gamma),
                Variant::Perturbed => GradedDims::from_gradings(dkh_perturbed(d, &gamma).gens),
            };
            Table { variant, gamma, dims }
        })
        .collect();
    render_tables(&tables, Format::Tsv)
}

#[test]
fn corpus_tables_match_golden_files() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut checked = 0;
    for (e, d) in constructible().filter(|(e, _)| !e.heavy) {
        for variant in [Variant::Plain, Variant::Perturbed] {
            let path = dir.join(format!("{}.{}.tsv", e.name, variant.short_name()));
            let got = tables(&d, variant);
            if update {
                std::fs::write(&path, &got).unwrap();
            } else {
                let want = std::fs::read_to_string(&path)
                    .unwrap_or_else(|err| panic!("{}: {err}; rerun with UPDATE_GOLDEN=1", path.display()));
                assert_eq!(got, want, "{}", path.display());
            }
            checked += 1;
        }
    }
    assert!(checked >= 40, "only {checked} tables");
}
