//! Weighted path ideals of graphs.
//!
//! Given a finite simple graph with positive integer edge weights, a path
//! length `r` and a symmetric combiner `f` (max, min, gcd or lcm), this crate
//! builds the weighted `r`-path ideal, decomposes it into m-irreducible
//! components (equivalently, minimal weighted `r`-path vertex covers), decides
//! unmixedness, and decides Cohen–Macaulayness combinatorially for trees
//! (any `r`) and complete graphs (`r = 2`). An independent homological oracle
//! based on Reisner's criterion cross-checks the combinatorial verdicts.
//!
//! ```
//! use wpi_core::{build_path_ideal, Combiner, WeightedGraph};
//!
//! let g = WeightedGraph::from_edges(3, &[(1, 2, 1), (2, 3, 2)]).unwrap();
//! let ideal = build_path_ideal(&g, Combiner::Max, 2).unwrap();
//! assert_eq!(ideal.to_string(), "(X1*X2^2*X3^2)");
//! ```

pub mod cm;
pub mod covers;
mod error;
pub mod graph;
pub mod monomial;
pub mod path_ideal;
pub mod reisner;

pub use cm::{
    clique3_cm, clique_mixedness_shortcut, cm_auto, cm_clique_r2, cm_tree, CmVerdict, CmWitness,
    EdgeCheck,
};
pub use covers::{
    component_to_cover, cover_to_component, is_cover, is_unmixed, minimal_covers,
    reduce_to_minimal, WeightedCover,
};
pub use error::{Error, Result};
pub use graph::{
    classify, detect_r_path_suspension, enumerate_r_paths, induced_subgraph, is_r_pathless_leaf,
    prune_pathless_leaves, GraphClass, Path, SuspensionWitness, WeightedGraph,
};
pub use monomial::{
    colon, contains, intersect, is_m_unmixed, krull_dimension_of_quotient, m_irreducible_decompose,
    minimalize, polarize, sum, MIrredComponent, Monomial, MonomialIdeal, Polarization,
};
pub use path_ideal::{build_path_ideal, locality_check, path_monomial, Combiner};
pub use reisner::{
    is_cm_rational, is_cm_rational_with_guard, reduced_homology_ranks, stanley_reisner_complex,
    SimplicialComplex, DEFAULT_SIZE_GUARD,
};
