use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::profinite::integer::prime_power;
use crate::profinite::ProfiniteInteger;

/// A finite adele written as `integral + shift`, with `integral ∈ Ẑ`
/// (finite precision) and `shift ∈ Q ∩ [0, 1)`.
///
/// Text form: `1/3 + [2^3: 5, 3^2: 7]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAdele {
    integral: ProfiniteInteger,
    shift: BigRational,
}

impl FiniteAdele {
    /// Builds and canonicalizes: the integer part of `shift` is moved into
    /// the residues, leaving `0 <= shift < 1`.
    pub fn new(integral: ProfiniteInteger, shift: BigRational) -> Self {
        let whole = shift.floor().to_integer();
        let shift = shift - BigRational::from_integer(whole.clone());
        let integral = if whole.is_zero() {
            integral
        } else {
            integral.add_integer(&whole)
        };
        Self { integral, shift }
    }

    pub fn integral(x: ProfiniteInteger) -> Self {
        Self::new(x, BigRational::zero())
    }

    /// Diagonal embedding of a rational number, tracking `levels`.
    pub fn from_rational(q: &BigRational, levels: &[(u64, u32)]) -> Self {
        Self::new(
            ProfiniteInteger::from_integer(&BigInt::zero(), levels),
            q.clone(),
        )
    }

    pub fn integral_part(&self) -> &ProfiniteInteger {
        &self.integral
    }

    pub fn shift(&self) -> &BigRational {
        &self.shift
    }

    /// Whether the adele lies in the maximal compact subring Π Ẑ_p, i.e.
    /// the value of the characteristic function of Π Ẑ_p at this point.
    pub fn is_integral(&self) -> bool {
        self.shift.is_zero()
    }

    /// Agreement as adeles on the commonly tracked precision. Shifts are
    /// canonical in `[0, 1)`, and a non-integral shift difference can never
    /// be absorbed by integral parts, so the shifts must coincide.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.shift == other.shift && self.integral.agrees_with(&other.integral)
    }

    /// Whether the rational `q` (embedded diagonally) is compatible with this
    /// adele at every tracked prime power.
    pub fn contains_rational(&self, q: &BigRational) -> bool {
        let diff = q - &self.shift;
        if !diff.is_integer() {
            return false;
        }
        self.integral.contains_integer(&diff.to_integer())
    }
}

impl fmt::Display for FiniteAdele {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.shift, self.integral)
    }
}

impl FromStr for FiniteAdele {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("adele `{s}`: {msg}"));
        let (shift_txt, rest) = s
            .split_once('+')
            .ok_or_else(|| bad("expected `shift + [...]`"))?;
        let shift: BigRational = shift_txt
            .trim()
            .parse()
            .map_err(|_| bad("shift is not a rational number"))?;
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("residue list must be bracketed"))?;
        let mut integral = ProfiniteInteger::unconstrained();
        for entry in body.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let (pk, r) = entry
                .split_once(':')
                .ok_or_else(|| bad("entries look like `p^k: r`"))?;
            let (p, k) = pk
                .trim()
                .split_once('^')
                .ok_or_else(|| bad("missing `^`"))?;
            let p: u64 = p.trim().parse().map_err(|_| bad("bad prime"))?;
            let k: u32 = k.trim().parse().map_err(|_| bad("bad exponent"))?;
            let r: BigInt = r.trim().parse().map_err(|_| bad("bad residue"))?;
            if !crate::arith::is_prime(p) {
                return Err(bad(&format!("{p} is not prime")));
            }
            if k == 0 {
                return Err(bad("precision must be at least 1"));
            }
            if integral.precision(p) > 0 {
                return Err(bad(&format!("prime {p} listed twice")));
            }
            if r.is_negative() || r >= prime_power(p, k) {
                return Err(bad(&format!("residue {r} out of range for {p}^{k}")));
            }
            integral = integral.with_digits(p, k, r);
        }
        Ok(Self::new(integral, shift))
    }
}
