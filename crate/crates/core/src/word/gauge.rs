//! Gauge expectations, the trace `τ = τ_0 ∘ E` and the KMS condition.
//!
//! The circle integrals defining `E` and `F` act diagonally on monomials,
//! so both are computed by degree bookkeeping: `E` keeps monomials of
//! trivial `α`-weight (`n = m`), `F` keeps those of trivial `β`-weight
//! (`i + j = 0`).

use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::word::{Coeff, Monomial, NormalFormElement};

/// `E = ∫ α_t dt`: keeps the monomials with `n = m`.
pub fn expectation_e(x: &NormalFormElement) -> NormalFormElement {
    x.filter(Monomial::is_gauge_invariant)
}

/// `F = ∫ β_t dt` on the Bunce-Deddens part: keeps the monomials with
/// `i + j = 0`. Flip monomials are dropped as well, which composes `F`
/// with the expectation `Q_Z → Q_N` onto the flip-free part.
pub fn expectation_f(x: &NormalFormElement) -> Result<NormalFormElement> {
    if let Some((m, _)) = x.terms().find(|(m, _)| !m.is_gauge_invariant()) {
        return Err(Error::Domain(m.to_string()));
    }
    Ok(x.filter(|m| m.i + m.j == 0 && m.eps == 0))
}

/// `G = F ∘ E`, the expectation onto the diagonal algebra `D`.
pub fn expectation_g(x: &NormalFormElement) -> NormalFormElement {
    expectation_f(&expectation_e(x)).expect("E lands in the domain of F")
}

/// `τ` of a single monomial: `1/n` on `u^i e_n u^{-i}`, else 0.
pub fn monomial_trace(m: &Monomial) -> Ratio<i128> {
    if m.n == m.m && m.i + m.j == 0 && m.eps == 0 {
        Ratio::new(1, m.m)
    } else {
        Ratio::zero()
    }
}

/// `τ(x) = τ_0(G(x))`; the projection `u^i e_n u^{-i}` is the cylinder
/// `i mod n` and has measure `1/n`.
pub fn trace_tau(x: &NormalFormElement) -> Coeff {
    let mut acc = Coeff::zero();
    for (m, c) in expectation_g(x).terms() {
        acc += &(c * &Coeff::ratio(1, 1).scaled(m.m));
    }
    acc
}

/// `λ_i`, the analytic continuation of `λ_t(s_n) = n^{it} s_n` to `t = i`:
/// `s_n ↦ s_n / n`, `s_m* ↦ m·s_m*`, so a monomial is scaled by `m/n`.
pub fn lambda_i(y: &NormalFormElement) -> NormalFormElement {
    y.map_coeffs(|m, c| c * &Coeff::ratio(1, 1).times_ratio(m.m, m.n))
}

/// The 1-KMS boundary condition `τ(x·λ_i(y)) = τ(y·x)`.
pub fn kms_check(x: &NormalFormElement, y: &NormalFormElement) -> bool {
    trace_tau(&x.mul(&lambda_i(y))) == trace_tau(&y.mul(x))
}

/// [`kms_check`] for a pair of monomials, in machine rationals.
pub fn kms_check_monomials(x: &Monomial, y: &Monomial) -> bool {
    let lhs = x
        .mul(y)
        .map_or_else(Ratio::zero, |p| monomial_trace(&p) * Ratio::new(y.m, y.n));
    let rhs = y.mul(x).map_or_else(Ratio::zero, |p| monomial_trace(&p));
    lhs == rhs
}

impl Coeff {
    fn scaled(self, den: i128) -> Coeff {
        self.times_ratio(1, den)
    }

    fn times_ratio(self, num: i128, den: i128) -> Coeff {
        let r = num_rational::BigRational::new(num.into(), den.into());
        &self * &Coeff::real(r)
    }
}
