//! Automorphism machinery: permutations, stabilizer chains, equitable
//! refinement, the individualization-refinement search and two oracles.

pub mod brute;
pub mod group;
pub mod partition;
pub mod perm;
pub mod search;
pub mod twins;

pub use brute::{brute_force_aut, brute_force_automorphisms, BRUTE_FORCE_MAX_VERTICES};
pub use group::{group_order, PermutationGroup, StabilizerChain};
pub use partition::{refine, OrderedPartition};
pub use perm::Permutation;
pub use search::{
    automorphism_group, search_automorphisms, SearchOptions, SearchResult, SearchStats,
    DEFAULT_NODE_BUDGET,
};
pub use twins::{closed_twin_classes, factorial, twin_lower_bound_order};
