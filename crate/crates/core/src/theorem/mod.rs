//! The closed-form automorphism order and executable checks of the facts it
//! rests on.

pub mod classes;
pub mod degrees;
pub mod formula;
pub mod neighborhoods;
pub mod report;

pub use classes::check_class_preservation;
pub use degrees::{check_prime_degree_dominance, sweep_prime_degree_dominance};
pub use formula::{aut_order_formula, AutDecomposition, Branch};
pub use neighborhoods::check_neighborhood_counts;
pub use report::{CheckReport, Comparison, Relation, Status};
