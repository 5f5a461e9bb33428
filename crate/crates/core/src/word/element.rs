use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::word::{AffineKey, Coeff, Monomial};

/// Upper bound on the common period examined while canonicalizing a group
/// of monomials with the same affine map.
const MAX_PERIOD: i128 = 1 << 24;

/// A finite linear combination of canonical monomials.
///
/// Monomials with the same underlying affine map (same [`AffineKey`]) are
/// merged into a periodic coefficient function on their domain classes and
/// rewritten at its minimal period. This absorbs every instance of
/// `Σ_k u^k e_n u^{-k} = 1`, so two elements are equal in the algebra iff
/// their term maps coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NormalFormElement {
    terms: BTreeMap<Monomial, Coeff>,
}

impl NormalFormElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Builds the canonical form of an arbitrary combination of monomials.
    pub fn from_terms(raw: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut groups: BTreeMap<AffineKey, BTreeMap<Monomial, Coeff>> = BTreeMap::new();
        for (m, c) in raw {
            *groups
                .entry(m.affine_key())
                .or_default()
                .entry(m)
                .or_default() += &c;
        }
        let mut terms = BTreeMap::new();
        for (key, mut group) in groups {
            group.retain(|_, c| !c.is_zero());
            match group.len() {
                0 => {}
                // a single class indicator already has minimal period m
                1 => terms.extend(group),
                _ => merge_group(&key, &group, &mut terms),
            }
        }
        Self { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut raw = Vec::with_capacity(self.term_count() * other.term_count());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(ab) = a.mul(b) {
                    raw.push((ab, ca * cb));
                }
            }
        }
        Self::from_terms(raw)
    }

    /// The involution: conjugate coefficients, adjoint monomials.
    pub fn adjoint(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.adjoint(), c.conj())))
    }

    /// Keeps only the monomials satisfying `keep`. Canonical form is
    /// preserved when `keep` depends only on the affine key.
    pub(crate) fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub(crate) fn map_coeffs(&self, f: impl Fn(&Monomial, &Coeff) -> Coeff) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(m, c))))
    }
}

fn merge_group(
    key: &AffineKey,
    group: &BTreeMap<Monomial, Coeff>,
    out: &mut BTreeMap<Monomial, Coeff>,
) {
    let period = group.keys().fold(1, |acc, m| arith::lcm(acc, m.m));
    assert!(
        period <= MAX_PERIOD,
        "common period {period} too large to canonicalize"
    );
    let len = period as usize;
    let mut values = vec![Coeff::zero(); len];
    for (m, c) in group {
        let step = m.m as usize;
        let mut r = m.domain_residue() as usize;
        while r < len {
            values[r] += c;
            r += step;
        }
    }
    let has_period = |d: usize| (d..len).all(|r| values[r] == values[r % d]);
    let mut p = len;
    for (q, e) in arith::factorize(period as u128) {
        let q = q as usize;
        for _ in 0..e {
            if p.is_multiple_of(q) && has_period(p / q) {
                p /= q;
            } else {
                break;
            }
        }
    }
    for (r, c) in values.iter().take(p).enumerate() {
        if !c.is_zero() {
            out.insert(Monomial::from_key(key, p as i128, r as i128), c.clone());
        }
    }
}

impl From<Monomial> for NormalFormElement {
    fn from(m: Monomial) -> Self {
        Self::monomial(m)
    }
}

impl fmt::Display for NormalFormElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_real() && c.re.is_negative() {
                (true, -c.clone())
            } else {
                (false, c.clone())
            };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
