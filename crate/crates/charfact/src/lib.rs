//! Exact computation of classical-group characters (Schur, symplectic,
//! odd/even orthogonal) and their universal analogues as sparse Laurent
//! polynomials over cyclotomic integers, together with the integer-partition
//! combinatorics (beta-sets, t-cores, t-quotients, sorting signs) that
//! controls how these characters factorize at root-of-unity specializations.
//!
//! The [`factorizations`] module is a registry of factorization and
//! evaluation identities; every entry can build both sides of its identity
//! exactly and report whether they agree.

pub mod characters;
pub mod cyclotomic;
pub mod enumerate;
pub mod factorizations;
pub mod oracle;
pub mod partition;
pub mod poly;

pub use cyclotomic::CycInt;
pub use partition::{BetaSet, CoreQuotient, FrobeniusCoords, Partition, SigmaPerm};
pub use poly::{LaurentPoly, Monomial, ValueTuple};

use thiserror::Error;

/// Errors surfaced by operations with checked preconditions.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("partition parse error: {0}")]
    BadPartition(String),
    #[error("padding length {m} is smaller than the partition length {len}")]
    PadTooSmall { m: usize, len: usize },
    #[error("residue order list is malformed: {0}")]
    MalformedResidueOrder(String),
    #[error("first argument of the core/quotient inverse must be a t-core")]
    NotACore,
    #[error("coefficient not divisible by {0}")]
    NonDivisible(i64),
    #[error("atom is not a unit times a monomial; cannot invert")]
    NonUnitAtom,
    #[error("tuple spec error: {0}")]
    BadTupleSpec(String),
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),
    #[error("unknown character kind: {0}")]
    UnknownCharacter(String),
    #[error("parameter violates the identity's index ranges: {0}")]
    ArityViolation(String),
    #[error("identity does not apply to these parameters: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
