//! Group-theoretic machinery for deciding when `f(x) - g(y)` is reducible for a
//! polynomial `f` and its rotation `g = ζ_v f`.
//!
//! Everything here is pure computation on permutations of `{1, .., n}`:
//!
//! * [`perm`]: permutation arithmetic, cycle structure, index.
//! * [`group`]: closure enumeration, conjugacy classes, coset actions, block
//!   systems, normalizers and automorphisms.
//! * [`nielsen`]: branch-cycle tuples, Riemann-Hurwitz genus, Nielsen class
//!   enumeration and the rotation action of `ζ_v`.
//! * [`schinzel`]: reducibility and newly-reducible verdicts, the trace lemma,
//!   the extension group `G*` and the Galois-closure criterion.
//! * [`dihedral`]: affine groups, the Chebyshev branch cycles and the outer
//!   automorphism of `D_n`.
//! * [`wreath`]: wreath products over `Z/v` and branch cycles of `μ ∘ f`.
//! * [`search`]: small-degree candidate enumeration and the normal-`⟨σ_∞⟩`
//!   classification.
//!
//! Composition convention: `p * q` is the functional product, apply `q` first
//! and then `p`. This is the order in which affine maps `x ↦ ax + b` compose as
//! matrices, and the order in which the product-one relation `σ_1 ⋯ σ_r = 1`
//! holds for the Chebyshev branch cycles. [`Perm::then`] is the opposite
//! (apply `self` first) and exists for callers who think left-to-right.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod dihedral;
mod error;
pub mod group;
pub mod nielsen;
pub mod perm;
pub mod schinzel;
pub mod search;
pub mod wreath;

pub use error::{Error, Result};
pub use group::{ClassTable, ConjClass, CosetAction, GroupAutomorphism, PermGroup};
pub use nielsen::BranchTuple;
pub use perm::Perm;

/// Default cap on the order of any group enumerated by closure.
pub const DEFAULT_ORDER_BOUND: usize = 100_000;

/// Largest degree for which `S_n` is scanned element by element.
pub const DEFAULT_BRUTE_FORCE_DEGREE: usize = 8;
