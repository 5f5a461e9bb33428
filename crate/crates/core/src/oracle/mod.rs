//! The representation on `ℓ²(Z)`: `u ξ_k = ξ_{k+1}`, `s_n ξ_k = ξ_{nk}`,
//! `f ξ_k = ξ_{-k}`.
//!
//! Every word acts on basis vectors as a partial affine map, so operators
//! are stored structurally and compared exactly. Matrix windows appear only
//! in the density estimate of the trace and in the mapping-torus check.

mod map;
mod torus;
mod window;

pub use map::{generator_map, monomial_map, word_map, AffineCongruenceMap};
pub use torus::{
    mapping_torus_covariance, mapping_torus_covariance_with, Bump, TorusSample,
    TranslationConvention,
};
pub use window::{evaluate, oracle_equal, oracle_equal_exact, window_trace, WindowModel};

use crate::word::{Letter, Monomial};

/// Whether a word's normal form and its letter-by-letter action agree on
/// every index in `[-bound, bound]`. Returns the first disagreeing index.
pub fn word_agrees_with_oracle(
    word: &[Letter],
    normal_form: Option<&Monomial>,
    bound: i128,
) -> Result<(), i128> {
    let maps: Vec<AffineCongruenceMap> = word
        .iter()
        .rev()
        .map(|&l| generator_map(l).expect("word was validated"))
        .collect();
    for k in -bound..=bound {
        let direct = maps.iter().try_fold(k, |x, g| g.apply(x));
        if direct != normal_form.and_then(|m| m.apply(k)) {
            return Err(k);
        }
    }
    Ok(())
}
