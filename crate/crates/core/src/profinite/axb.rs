use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::profinite::integer::{prime_power, rational_residue};
use crate::profinite::{FiniteAdele, ProfiniteInteger};

/// An element `x ↦ a·x + b` of the ax+b-group over Q.
///
/// `a` is any non-zero rational; the subgroup with `a > 0` is `P_Q^+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxbElement {
    a: BigRational,
    b: BigRational,
}

impl AxbElement {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Parse("the multiplier a must be non-zero".into()));
        }
        Ok(Self { a, b })
    }

    pub fn from_ints(a_num: i64, a_den: i64, b_num: i64, b_den: i64) -> Result<Self> {
        if a_den == 0 || b_den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Self::new(
            BigRational::new(a_num.into(), a_den.into()),
            BigRational::new(b_num.into(), b_den.into()),
        )
    }

    pub fn identity() -> Self {
        Self {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_positive(&self) -> bool {
        self.a.is_positive()
    }

    /// Group law `(a, b)·(a', b') = (aa', ab' + b)`, i.e. composition of maps.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: &self.a * &other.a,
            b: &self.a * &other.b + &self.b,
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.a.recip();
        Self {
            b: -(&self.b * &inv),
            a: inv,
        }
    }

    pub fn apply_rational(&self, x: &BigRational) -> BigRational {
        &self.a * x + &self.b
    }

    /// The affine action `x ↦ a·x + b` on finite adeles.
    ///
    /// Write `a = n/d` in lowest terms. At a tracked prime `p` the precision
    /// becomes `k + v_p(n) - v_p(d)`; every prime dividing `d` must carry at
    /// least `v_p(d)` digits or the division would invent digits. The
    /// fractional mass produced by dividing by `d` moves into the shift.
    pub fn act(&self, x: &FiniteAdele) -> Result<FiniteAdele> {
        let n = self.a.numer();
        let d = self.a.denom();
        let integral = x.integral_part();

        let d_factors = factor_big(d);
        let n_factors = factor_big(&n.abs());

        for &(p, v) in &d_factors {
            let have = integral.precision(p);
            if have < v {
                return Err(Error::InsufficientPrecision {
                    prime: p,
                    needed: v,
                    available: have,
                });
            }
        }

        // s = Σ_{p | d} t_p / p^{v_p} makes n·X/d - s integral at every p | d
        let mut s = BigRational::zero();
        for &(p, v) in &d_factors {
            let pv = prime_power(p, v);
            let d0 = d / &pv;
            let r = integral.residue(p).expect("checked above");
            let inv = d0.extended_gcd(&pv).x;
            let t = (n * r * inv).mod_floor(&pv);
            s += BigRational::new(t, pv);
        }

        let mut out = ProfiniteInteger::unconstrained();
        for (p, digits) in integral.digits() {
            let v = valuation_in(&d_factors, p);
            let w = valuation_in(&n_factors, p);
            let k = digits.precision + w - v;
            if k == 0 {
                continue;
            }
            let value = BigRational::new(n * &digits.residue, d.clone()) - &s;
            let r = rational_residue(&value, p, k).expect("p-integral by construction");
            out = out.with_digits(p, k, r);
        }
        // untracked p | n: n·X/d ∈ p^w Ẑ_p, so only -s survives
        for &(p, w) in &n_factors {
            if integral.precision(p) == 0 {
                let r = rational_residue(&(-&s), p, w).expect("s is p-integral for p ∤ d");
                out = out.with_digits(p, w, r);
            }
        }

        let shift = &self.a * x.shift() + &self.b + s;
        Ok(FiniteAdele::new(out, shift))
    }
}

fn valuation_in(factors: &[(u64, u32)], p: u64) -> u32 {
    factors
        .iter()
        .find(|&&(q, _)| q == p)
        .map_or(0, |&(_, v)| v)
}

fn factor_big(n: &BigInt) -> Vec<(u64, u32)> {
    let n = n.to_u128().expect("multiplier too large to factor");
    arith::factorize(n)
}

/// Per-prime precision summary, handy for reporting precision bookkeeping.
pub fn precision_profile(x: &FiniteAdele) -> BTreeMap<u64, u32> {
    x.integral_part()
        .digits()
        .map(|(p, d)| (p, d.precision))
        .collect()
}

impl fmt::Display for AxbElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}
