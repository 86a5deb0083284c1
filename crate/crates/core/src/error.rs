use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two permutations (or a permutation and a group) of different degree.
    DegreeMismatch { expected: usize, found: usize },
    /// An image array that is not a bijection of `{1..n}`.
    NotBijective,
    /// Cycle notation could not be parsed.
    Parse(String),
    /// Closure enumeration reached the configured order bound.
    OrderBoundExceeded { bound: usize },
    /// Brute-force scan over `S_n` refused because `n` is too large.
    BruteForceBound { degree: usize, bound: usize },
    /// A group that should have been a subgroup is not contained in its parent.
    NotSubgroup,
    /// Generator images do not extend to an automorphism.
    NotAutomorphism(String),
    /// A group element was expected but the permutation lies outside the group.
    NotInGroup,
    /// Tuple data violates parity or sign constraints of Riemann-Hurwitz.
    MalformedTuple(String),
    /// Argument outside the documented domain (odd `n`, `r < 3`, ...).
    InvalidArgument(String),
    /// A search that must succeed came back empty.
    NoSolution(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotBijective => f.write_str("image array is not a bijection"),
            Error::Parse(msg) => write!(f, "cycle notation: {msg}"),
            Error::OrderBoundExceeded { bound } => {
                write!(f, "group order exceeds bound {bound}")
            }
            Error::BruteForceBound { degree, bound } => {
                write!(f, "degree {degree} exceeds brute-force bound {bound}")
            }
            Error::NotSubgroup => f.write_str("not a subgroup of the parent group"),
            Error::NotAutomorphism(msg) => write!(f, "not an automorphism: {msg}"),
            Error::NotInGroup => f.write_str("element is not in the group"),
            Error::MalformedTuple(msg) => write!(f, "malformed tuple: {msg}"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NoSolution(msg) => write!(f, "no solution: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
