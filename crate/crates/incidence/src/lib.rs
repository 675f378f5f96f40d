//! Exact cohomology computations for line bundles on the incidence
//! correspondence in positive characteristic.
//!
//! Let `V = k^n` over a field of characteristic `p > 0` and let
//! `X ⊂ P(V) × P(V*)` be the incidence correspondence: pairs of a line
//! inside a hyperplane.  Line bundles on `X` are `O_X(a, b)`, pulled back
//! from the two projective factors, and their cohomology groups are
//! representations of `SL(V)` whose characters this crate computes exactly.
//!
//! The work happens in two complementary ways which check one another:
//!
//! * closed formulas and a recursion in the `SL_3` character ring
//!   ([`char_ring`], [`characters`], [`vanishing`], [`padic`]), and
//! * ground-truth linear algebra over `F_p`: the cohomology of the twisted
//!   divided powers `D^d R(e)` of the tautological subsheaf `R` on `P(V)`
//!   read off from ranks of explicit weight-block matrices ([`oracle`]).
//!
//! The `incidence` binary exposes both routes on the command line, including
//! a `verify` subcommand that replays every applicable formula/oracle pair
//! on a bounded grid.
//!
//! All arithmetic is exact: weights are integer vectors, multiplicities are
//! arbitrary-precision integers, and matrix ranks are computed mod `p`.

pub mod char_ring;
pub mod characters;
pub mod cli;
pub mod oracle;
pub mod padic;
pub mod vanishing;

pub use char_ring::{Character, Weight};
pub use characters::CharacterTable;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two characters (or a character and a weight) live in rings of
    /// different rank `n`.
    #[error("rank mismatch: expected n = {expected}, found n = {found}")]
    RankMismatch { expected: usize, found: usize },
    /// A modulus that must be prime is not.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// A twist that must be a prime power is not.
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    /// An argument is outside the domain of the requested computation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The zero character has no highest weight.
    #[error("the zero character has no highest weight")]
    ZeroCharacter,
    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Output could not be written.
    #[error("i/o failure: {0}")]
    Io(String),
    /// An internal invariant failed; this is a bug, not a user error.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
