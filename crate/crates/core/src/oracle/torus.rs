use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// A rational hat function: `height·max(0, 1 - |t - center|/radius)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bump {
    pub center: BigRational,
    pub radius: BigRational,
    pub height: BigRational,
}

impl Bump {
    pub fn new(center: BigRational, radius: BigRational, height: BigRational) -> Self {
        assert!(radius.is_positive(), "bump radius must be positive");
        Self {
            center,
            radius,
            height,
        }
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let x = BigRational::from_integer(1.into()) - (t - &self.center).abs() / &self.radius;
        if x.is_positive() {
            x * &self.height
        } else {
            BigRational::zero()
        }
    }
}

/// Direction of the translation `τ_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TranslationConvention {
    /// `τ_k f(t) = f(t - k)`
    #[default]
    Backward,
    /// `τ_k f(t) = f(t + k)`
    Forward,
}

/// Coefficients `f_n` of `Σ f_n u^n` in `C_0(R) ⋊ Z`.
#[derive(Clone, Debug, Default)]
pub struct TorusSample {
    pub coefficients: BTreeMap<i64, Bump>,
}

impl TorusSample {
    /// Matrix entry `[a][b]` of the image `Σ τ_k(f_n) e_{k,k+n}` at time `t`.
    pub fn entry(
        &self,
        conv: TranslationConvention,
        t: &BigRational,
        a: i64,
        b: i64,
    ) -> BigRational {
        match self.coefficients.get(&(b - a)) {
            None => BigRational::zero(),
            Some(f) => {
                let k = BigRational::from_integer(a.into());
                match conv {
                    TranslationConvention::Backward => f.eval(&(t - k)),
                    TranslationConvention::Forward => f.eval(&(t + k)),
                }
            }
        }
    }
}

/// Checks `F(t + 1) = U F(t) U*` entrywise on the interior of the index
/// window `[-half_width, half_width]`, with `U ξ_k = ξ_{k+1}`.
pub fn mapping_torus_covariance(
    sample: &TorusSample,
    grid: &[BigRational],
    half_width: i64,
) -> bool {
    mapping_torus_covariance_with(sample, grid, half_width, TranslationConvention::Backward)
}

pub fn mapping_torus_covariance_with(
    sample: &TorusSample,
    grid: &[BigRational],
    half_width: i64,
    conv: TranslationConvention,
) -> bool {
    let one = BigRational::from_integer(1.into());
    // (U F U*)[a][b] = F[a-1][b-1], defined when a-1, b-1 stay in the window
    let interior = -half_width + 1..=half_width;
    grid.iter().all(|t| {
        let t1 = t + &one;
        interior.clone().all(|a| {
            interior
                .clone()
                .all(|b| sample.entry(conv, &t1, a, b) == sample.entry(conv, t, a - 1, b - 1))
        })
    })
}
