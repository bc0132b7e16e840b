//! Graphs built from permutation groups: coset and Cayley graphs, their
//! automorphism groups, s-arc transitivity and normal quotients.

pub mod arcs;
mod builder;
pub mod census;
pub mod cayley;
mod error;
mod graph;
pub mod partition;
pub mod quotient;
pub mod search;

pub use builder::{double_coset, CayleyGraph, CayleyGraphSpec, CosetGraph, CosetGraphSpec, DOUBLE_COSET_HASH_LIMIT};
pub use error::{GraphError, Result};
pub use graph::Graph;
pub use partition::VertexPartition;
pub use search::{automorphism_group, find_isomorphism, is_isomorphic, DEFAULT_VERTEX_CAP};
pub use arcs::{count_s_arcs, s_arc_orbits, transitivity_degree};
pub use cayley::{aut_g_s, is_normal_cayley, right_regular_representation};
pub use census::{census_pentavalent, Census, CensusEntry};
pub use quotient::{quotient_graph, QuotientResult, QuotientSummary};
