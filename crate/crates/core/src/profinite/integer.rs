use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::profinite::CylinderSet;

/// One tracked p-adic digit string: the value modulo `p^precision`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digits {
    pub precision: u32,
    pub residue: BigInt,
}

/// An element of Ẑ known modulo finitely many prime powers.
///
/// Primes that are not tracked are unconstrained. Equality in the profinite
/// sense is [`ProfiniteInteger::agrees_with`], i.e. agreement at every
/// commonly tracked prime power; the derived `PartialEq` is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProfiniteInteger {
    levels: BTreeMap<u64, Digits>,
}

pub(crate) fn prime_power(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

impl ProfiniteInteger {
    /// The completely unconstrained element.
    pub fn unconstrained() -> Self {
        Self::default()
    }

    /// Embeds an integer, tracking each `(p, k)` in `levels`.
    pub fn from_integer(n: &BigInt, levels: &[(u64, u32)]) -> Self {
        let mut out = Self::default();
        for &(p, k) in levels {
            out = out.with_digits(p, k, n.clone());
        }
        out
    }

    /// Adds (or replaces) the residue `r mod p^k`. `k = 0` removes `p`.
    pub fn with_digits(mut self, p: u64, k: u32, r: BigInt) -> Self {
        assert!(arith::is_prime(p), "{p} is not prime");
        if k == 0 {
            self.levels.remove(&p);
            return self;
        }
        let m = prime_power(p, k);
        self.levels.insert(
            p,
            Digits {
                precision: k,
                residue: r.mod_floor(&m),
            },
        );
        self
    }

    pub fn precision(&self, p: u64) -> u32 {
        self.levels.get(&p).map_or(0, |d| d.precision)
    }

    pub fn residue(&self, p: u64) -> Option<&BigInt> {
        self.levels.get(&p).map(|d| &d.residue)
    }

    pub fn digits(&self) -> impl Iterator<Item = (u64, &Digits)> {
        self.levels.iter().map(|(&p, d)| (p, d))
    }

    pub fn tracked_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.levels.keys().copied()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let mut out = Self::default();
        for (&p, a) in &self.levels {
            if let Some(b) = other.levels.get(&p) {
                let k = a.precision.min(b.precision);
                out = out.with_digits(p, k, f(&a.residue, &b.residue));
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for (&p, d) in out.levels.iter_mut() {
            d.residue = (-&d.residue).mod_floor(&prime_power(p, d.precision));
        }
        out
    }

    /// Adds an integer constant at every tracked prime.
    pub fn add_integer(&self, c: &BigInt) -> Self {
        let mut out = self.clone();
        for (&p, d) in out.levels.iter_mut() {
            d.residue = (&d.residue + c).mod_floor(&prime_power(p, d.precision));
        }
        out
    }

    /// Multiplication by a positive integer `n`. Precision at each `p | n`
    /// grows by `v_p(n)`; a prime dividing `n` that was untracked becomes
    /// tracked with residue 0, since `n·Ẑ_p ⊆ p^{v_p(n)} Ẑ_p`.
    pub fn mul_n(&self, n: u64) -> Self {
        assert!(n >= 1, "mul_n needs a positive multiplier");
        let mut out = Self::default();
        let nb = BigInt::from(n);
        for (&p, d) in &self.levels {
            let v = if n.is_multiple_of(p) {
                arith::valuation(n as i128, p as i128)
            } else {
                0
            };
            out = out.with_digits(p, d.precision + v, &d.residue * &nb);
        }
        for (p, v) in arith::factorize(n as u128) {
            if !self.levels.contains_key(&p) {
                out = out.with_digits(p, v, BigInt::zero());
            }
        }
        out
    }

    /// Agreement at every commonly tracked prime power.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.levels
            .iter()
            .all(|(&p, a)| match other.levels.get(&p) {
                None => true,
                Some(b) => {
                    let m = prime_power(p, a.precision.min(b.precision));
                    (&a.residue - &b.residue).mod_floor(&m).is_zero()
                }
            })
    }

    /// True iff `n` lies in the set described by this element.
    pub fn contains_integer(&self, n: &BigInt) -> bool {
        self.levels.iter().all(|(&p, d)| {
            (n - &d.residue)
                .mod_floor(&prime_power(p, d.precision))
                .is_zero()
        })
    }

    /// The cylinder `{x : x ≡ self}` as a single congruence class
    /// `residue mod Π p^k`, via CRT. `None` if the modulus overflows.
    pub fn to_cylinder(&self) -> Option<CylinderSet> {
        let mut c = CylinderSet::full();
        for (&p, d) in &self.levels {
            let m: i128 = (&prime_power(p, d.precision)).try_into().ok()?;
            let r: i128 = (&d.residue).try_into().ok()?;
            m.checked_mul(c.modulus())?;
            c = c.intersect(&CylinderSet::new(m, r))?;
        }
        Some(c)
    }

    /// Precision-preserving reduction; mostly for tests.
    pub fn truncate(&self, p: u64, k: u32) -> Self {
        match self.levels.get(&p) {
            Some(d) if d.precision > k => self.clone().with_digits(p, k, d.residue.clone()),
            _ => self.clone(),
        }
    }

    pub fn is_unconstrained(&self) -> bool {
        self.levels.is_empty()
    }
}

impl fmt::Display for ProfiniteInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, (p, d)) in self.levels.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}^{}: {}", d.precision, d.residue)?;
        }
        write!(f, "]")
    }
}

/// Residue of an ℓ-integral rational modulo `ℓ^k`.
pub(crate) fn rational_residue(q: &num_rational::BigRational, p: u64, k: u32) -> Option<BigInt> {
    let m = prime_power(p, k);
    let den = q.denom();
    if den.is_one() {
        return Some(q.numer().mod_floor(&m));
    }
    let e = den.extended_gcd(&m);
    if !e.gcd.abs().is_one() {
        return None;
    }
    Some((q.numer() * e.x).mod_floor(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn residues_are_reduced() {
        let x = ProfiniteInteger::unconstrained().with_digits(2, 3, b(-1));
        assert_eq!(x.residue(2), Some(&b(7)));
        assert_eq!(x.precision(3), 0);
    }

    #[test]
    fn precision_is_min_of_operands() {
        let x = ProfiniteInteger::from_integer(&b(5), &[(2, 4), (3, 1)]);
        let y = ProfiniteInteger::from_integer(&b(3), &[(2, 2), (5, 2)]);
        let s = x.add(&y);
        assert_eq!(s.precision(2), 2);
        assert_eq!(s.residue(2), Some(&b(0)));
        assert_eq!(s.precision(3), 0);
        assert_eq!(s.precision(5), 0);
    }

    #[test]
    fn mul_n_doubles_one() {
        let x = ProfiniteInteger::unconstrained().with_digits(2, 1, b(1));
        let y = x.mul_n(2);
        assert_eq!(y.precision(2), 2);
        assert_eq!(y.residue(2), Some(&b(2)));
        assert_eq!(
            ProfiniteInteger::from_integer(&b(9), &[(3, 2)]).mul_n(1),
            ProfiniteInteger::from_integer(&b(9), &[(3, 2)])
        );
    }

    #[test]
    fn mul_n_of_full_space_is_zero_class() {
        let img = ProfiniteInteger::unconstrained().mul_n(12);
        assert_eq!(img.to_cylinder(), Some(CylinderSet::new(12, 0)));
    }

    #[test]
    fn rational_residue_inverts_units() {
        let q = num_rational::BigRational::new(b(1), b(3));
        // 3 * 3 = 9 ≡ 1 mod 8
        assert_eq!(rational_residue(&q, 2, 3), Some(b(3)));
        assert_eq!(rational_residue(&q, 3, 1), None);
    }
}
