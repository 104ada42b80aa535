//! Exact quiver mutation, mutated reflections in the universal Coxeter group,
//! and reflection representations built from generalized intersection
//! matrices, with an exchange-graph verifier for type A quivers.
//!
//! ```
//! use pseudo_acyclic::{bfs_verify, build_pseudo_acyclic_ordering, BfsOptions, QuiverMatrix};
//!
//! let b = QuiverMatrix::oriented_triangle();
//! let ord = build_pseudo_acyclic_ordering(&b).unwrap();
//! assert_eq!(ord.to_string(), "1,3,2");
//! assert!(bfs_verify(&b, &ord, BfsOptions::default()).unwrap().passed());
//! ```

pub mod an_type;
pub mod cli;
pub mod error;
pub mod explorer;
pub mod gim;
pub mod matrix;
pub mod ordering;
pub mod quiver;
pub mod reflection;
pub mod word;

pub use an_type::{an_membership_oracle, validate_type_an, MembershipOracle, Rejection, TypeAReport};
pub use error::{Error, Result};
pub use explorer::{
    bfs_verify, check_closed_walk, check_stable_walk, check_swap_effect, check_swap_lemma_forms,
    elementary_swap_sequence, random_walk_fuzz, relation_failures, BfsOptions, Relation,
    VerificationReport, Violation, WalkState,
};
pub use gim::{
    build_gim, l_matrix, pi_generator, pi_of_word, rows_equal_up_to_sign, Gim, GimRep, LMatrix,
    LinearOrdering, PiMatrix,
};
pub use matrix::IntMatrix;
pub use ordering::{
    build_pseudo_acyclic_ordering, enumerate_valid_orderings, find_triangles, ordering_valid,
    TriangleConstraint,
};
pub use quiver::{
    apply_sequence, c_sign, mutate_matrix, mutate_seed, MutationSequence, Permutation, QuiverMatrix,
    Seed, Sign,
};
pub use reflection::{apply_sequence_with_reflections, mutate_reflections, ReflectionState};
pub use word::{word_inv, word_mul, GroupWord};
