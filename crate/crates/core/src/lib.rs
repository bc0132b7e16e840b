//! Permutation groups for arc-transitive graph computations.
//!
//! Permutations act on the right (`p·q` applies `p` first); see [`perm`].

mod bigcount;
mod error;
pub mod genfile;
pub mod group;
pub mod perm;
pub mod structure;
pub mod tables;

pub use bigcount::BigCount;
pub use error::{Error, Result};
pub use genfile::GeneratorFile;
pub use group::PermGroup;
pub use perm::{parse_cycles, CycleDecomposition, Permutation};

pub use structure::{GroupFingerprint, StabilizerTag};
