//! Partial representations of finite groups that restrict to global
//! representations of a distinguished subgroup.
//!
//! Given a finite group `G` and a subgroup `H`, an *H-global G-partial
//! representation* is a map `π : G → End(V)` satisfying the partial
//! representation axioms, whose restriction to `H` is an honest (invertible)
//! representation.  Such representations are governed by a finite groupoid
//! `Γ_H(G)` whose objects are the unions of left `H`-cosets containing `H`;
//! this crate constructs that groupoid, decomposes its algebra into matrix
//! algebras over isotropy group algebras, classifies the irreducible
//! `H`-global partial representations by induction from isotropy subgroups,
//! and specializes the whole picture to the chain `S_{n-1} ⊂ S_n`, where the
//! combinatorics is controlled by pairs of partitions.
//!
//! All linear algebra is exact, over arbitrary-precision rationals; no
//! floating point is used anywhere.

pub mod group;
pub mod groupoid;
pub mod induction;
pub mod linalg;
pub mod oracle;
pub mod partial;
pub mod perm;
pub mod semigroup;
pub mod suites;
pub mod symmetric;

pub use group::{CosetSpace, FiniteGroup, HCosetSubset};
pub use linalg::{Matrix, Rational};
pub use partial::{PartialAction, PartialRep};
pub use perm::Permutation;

/// Size guards.  Most operations are exponential in the coset index or
/// factorial in the degree; these caps turn runaway inputs into clean errors.
pub mod caps {
    /// Largest group order `FiniteGroup::from_generators` will enumerate.
    pub const MAX_GROUP_ORDER: usize = 100_000;
    /// Largest permutation degree accepted.
    pub const MAX_DEGREE: usize = 1024;
    /// Default cap on the subgroup index `[G:H]` for operations that
    /// enumerate all unions of `H`-cosets (there are `2^([G:H]-1)` of them).
    pub const MAX_COSET_INDEX: usize = 20;
    /// Largest `n` for which Specht modules of partitions of `n` are built.
    pub const MAX_SPECHT_N: usize = 8;
    /// Largest number of arrows a groupoid is allowed to materialize.
    pub const MAX_GROUPOID_SIZE: usize = 2_000_000;
    /// Default cap on `n` for symmetric-group pipelines that build explicit
    /// matrices for every group element.
    pub const MAX_MATRIX_N: usize = 6;
}

/// Errors shared by every module in the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not bi-invariant: {0}")]
    NotBiInvariant(String),
    #[error("dimension mismatch: {0}")]
    DimError(String),
    #[error("oracle inconsistency: {0}")]
    OracleInconsistency(String),
    #[error("representation is not global on the subgroup: {0}")]
    NotHGlobal(String),
    #[error("input exceeds size cap: {0}")]
    TooLarge(String),
    #[error("operands belong to different coset contexts: {0}")]
    ContextMismatch(String),
    #[error("not a restriction of the given global representation: {0}")]
    NotARestriction(String),
    #[error("representation is not irreducible: {0}")]
    NotIrreducible(String),
    #[error("missing irreducibles for isotropy group: {0}")]
    MissingIrreducibles(String),
}

pub type Result<T> = std::result::Result<T, Error>;
