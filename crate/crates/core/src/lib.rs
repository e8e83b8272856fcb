//! Oriented hypergraphs at the incidence level, contributor enumeration, and
//! exact matrix-tree identities.
//!
//! The crate computes the permanent and determinant of the Laplacian and
//! adjacency matrices (and of any of their minors) twice: once by exact
//! integer linear algebra ([`matrix`]) and once as signed sums over
//! contributors ([`contributor`]). For bidirected graphs the contributors
//! split into boolean lattices ([`activation`]), and the adjacency
//! completion ([`completion`]) recovers every minor from order-ideal cuts
//! and counts spanning trees.

pub mod activation;
pub mod completion;
pub mod contributor;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod matrix;
pub mod random;

pub use activation::{
    activation_classes, det_l_via_maximal_negatives, pack, unpack, ActivationClass, CutKind,
    CycleSet, OrderIdealCut,
};
pub use completion::{
    cofactor_tree_check, complete, spanning_tree_count_oracle, spanning_tree_ideals, universal_cut,
    CompletedGraph, TreeCheck,
};
pub use contributor::{
    classify, contributor_sums, enumerate_contributors, enumerate_strong_contributors,
    enumerate_sub_contributors, minor_sums, ComponentProfile, Contributor, DeterminantSums,
    MinorSums, PreContributor, SubContributor,
};
pub use error::{Error, Result};
pub use hypergraph::{
    edge_sign, from_signed_graph, validate, weak_walk_sign, EdgeId, HypergraphBuilder, Incidence,
    IncidenceId, OrientedHypergraph, StepKind, ValidationReport, VertexId, Violation, WeakWalk1,
};
pub use matrix::{
    adjacency_matrix, degree_matrix, determinant_exact, incidence_matrix, laplacian, minor,
    permanent_exact, ExactMatrix,
};

pub use num_bigint::BigInt;
