//! Young complexes, their homotopy types, and the squarefree powers of
//! t-path ideals whose Alexander duals they describe.

pub mod complex;
pub mod decomp;
pub mod error;
pub mod formulas;
pub mod homology;
pub mod homotopy;
pub mod hypergraph;
pub mod linalg;
pub mod pathideal;
pub mod young;

pub use complex::{Face, SimplicialComplex, Status, VertexId};
pub use decomp::{
    is_shellable, is_vertex_decomposable, shedding_vertices, CertificateKind, DecompCertificate,
};
pub use error::{Error, Result};
pub use formulas::{
    chi, chi_lemma_checks, helly_formula, krull_formula, leray_formula, linearity_characterization,
    pd_formula, vd_characterization, ChiRegime, LemmaRange, LemmaReport, Linearity, Regime,
};
pub use homology::{
    hochster_table, is_cohen_macaulay, leray_oracle, pd_oracle, reduced_betti, regularity_oracle,
    BettiVector, FieldTag, GradedBettiTable,
};
pub use homotopy::{
    binomial_wedge, build_reduction_graph, dual_homotopy, young_homotopy, HomotopyClass, PathCount,
    ReductionGraph,
};
pub use pathideal::{
    dual_complex, dual_complex_via_alexander, krull_height_oracle, matching_numbers,
    squarefree_power_generators, stanley_reisner_complex, KrullHeight, Matching, MonomialSet,
    PathIdealSpec,
};
pub use young::{order_complex_presentation, young_complex, ColumnPoset, Partition, YoungFilling};
