use num_integer::Integer;
use num_rational::Ratio;

/// The function `e_γ(x) = ζ_b^{a·(x mod b)}` on Ẑ for `γ = a/b ∈ Q/Z`.
///
/// Roots of unity are kept as exponents modulo `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BcCharacter {
    numer: i64,
    denom: i64,
}

impl BcCharacter {
    /// Reduces `gamma` modulo 1 into `[0, 1)`.
    pub fn new(gamma: Ratio<i64>) -> Self {
        let denom = *gamma.denom();
        let numer = gamma.numer().mod_floor(&denom);
        Self { numer, denom }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Exponent `e` with `e_γ(x) = ζ_b^e`.
    pub fn exponent(&self, x: i64) -> i64 {
        (self.numer * x.mod_floor(&self.denom)).mod_floor(&self.denom)
    }

    /// Exponents over one full period `x = 0, ..., b-1`.
    pub fn exponents(&self) -> Vec<i64> {
        (0..self.denom).map(|x| self.exponent(x)).collect()
    }

    /// `e_γ(x + 1) = γ·e_γ(x)` for every residue class, i.e. the exponent
    /// grows by `a` modulo `b` under unit translation.
    pub fn translation_covariant(&self) -> bool {
        (0..self.denom)
            .all(|x| self.exponent(x + 1) == (self.exponent(x) + self.numer).mod_floor(&self.denom))
    }
}

/// Checks `u·e_γ = γ·e_γ·u` on the cyclotomic character of `γ`; `false`
/// when the denominator of `γ` exceeds `bound`.
pub fn bc_character_covariance(gamma: Ratio<i64>, bound: i64) -> bool {
    let chi = BcCharacter::new(gamma);
    chi.denom() <= bound && chi.translation_covariant()
}
