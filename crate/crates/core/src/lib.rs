//! Doubled Khovanov homology of links in thickened surfaces.
//!
//! Diagrams live in [`diagram`]. [`smoothing`] builds the dotted cube,
//! [`algebra`] turns it into a chain complex, and [`homology`] computes graded
//! dimensions or filtered bidegrees. [`obstruct`] uses those to decide total
//! nontriviality and to classify concordances.

pub mod algebra;
pub mod corpus;
pub mod diagram;
pub mod homology;
pub mod linalg;
pub mod obstruct;
pub mod report;
pub mod smoothing;

pub use algebra::{assemble_complex, edge_map, grading, state_basis, ChainComplex, Generator, Grading, State, Variant};
pub use corpus::{corpus_get, corpus_list, CorpusError};
pub use diagram::{
    apply_move, parse_diagram, serialize_diagram, Arc, ArcEnd, CohomologyClass, Crossing, DiagramError, End, Endpoint,
    Move, MoveError, SurfaceDiagram,
};
pub use homology::{homology_perturbed, homology_plain, FilteredBidegrees, GradedDims, HomologyError};
pub use linalg::{kernel_basis, rank_rational, Scalar, SparseMatrix};
pub use obstruct::{
    ascent_report, elementary_rank, is_totally_nontrivial, Assumption, Conclusion, ObstructionReport, TntResult,
};
pub use smoothing::{build_cube, resolve, CubeEdge, DottedCube, EdgeKind, Smoothing};

/// Plain homology of `d` for `gamma`.
pub fn dkh(d: &SurfaceDiagram, gamma: &CohomologyClass) -> GradedDims {
    let cube = build_cube(d, *gamma);
    homology_plain(&assemble_complex(&cube, Variant::Plain)).expect("plain complex")
}

/// Filtered bidegrees of the perturbed homology of `d` for `gamma`.
pub fn dkh_perturbed(d: &SurfaceDiagram, gamma: &CohomologyClass) -> FilteredBidegrees {
    let cube = build_cube(d, *gamma);
    homology_perturbed(&assemble_complex(&cube, Variant::Perturbed)).expect("perturbed complex")
}
