//! Inputs shared by the benchmarks in `benches/`.

use dkh_core::{corpus_get, CohomologyClass, SurfaceDiagram};

/// Light corpus entries timed by every group.
pub const LIGHT: &[&str] = &["trefoil", "clasp", "grid-2x2", "annular-figure-eight", "genus2-braid"];

/// Entries near the top of the supported envelope.
pub const HEAVY: &[&str] = &["perf-10", "perf-10-vertical"];

pub fn diagram(name: &str) -> SurfaceDiagram {
    corpus_get(name).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// The all-ones class, which dots every circle of odd class.
pub fn full_class(d: &SurfaceDiagram) -> CohomologyClass {
    let n = 2 * d.genus() as usize;
    CohomologyClass::from_bits((1u64 << n) - 1, n)
}
