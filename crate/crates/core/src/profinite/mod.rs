//! Finite adeles over Ẑ, with the action of the ax+b-group over Q.
//!
//! Elements of Ẑ are finite residue towers: a value modulo `p^k` for each
//! tracked prime. Every operation propagates the minimum precision of its
//! inputs; the only operation that adds digits at `p` is multiplication by
//! `p`. Finite adeles are stored as an integral profinite part plus a
//! rational shift, which turns the affine action into one rational update
//! and a residue update per prime.

mod adele;
mod axb;
mod character;
mod cylinder;
mod integer;

pub use adele::FiniteAdele;
pub use axb::{precision_profile, AxbElement};
pub use character::{bc_character_covariance, BcCharacter};
pub use cylinder::{cylinder_measure, CylinderSet};
pub use integer::{Digits, ProfiniteInteger};

/// `mul_n` on Ẑ (the spectral picture of `x ↦ s_n x s_n*`).
pub fn mul_n(n: u64, x: &ProfiniteInteger) -> ProfiniteInteger {
    x.mul_n(n)
}
