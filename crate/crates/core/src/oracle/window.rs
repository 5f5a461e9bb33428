use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use crate::oracle::{generator_map, monomial_map};
use crate::word::{Coeff, Letter, NormalFormElement};

/// `x ξ_k` as a finitely supported vector `{output index: coefficient}`.
pub fn evaluate(x: &NormalFormElement, k: i128) -> BTreeMap<i128, Coeff> {
    let mut out: BTreeMap<i128, Coeff> = BTreeMap::new();
    for (m, c) in x.terms() {
        if let Some(y) = monomial_map(m).apply(k) {
            *out.entry(y).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Compares `x ξ_k` and `y ξ_k` for every `|k| <= bound`.
pub fn oracle_equal(x: &NormalFormElement, y: &NormalFormElement, bound: i128) -> bool {
    (-bound..=bound).all(|k| evaluate(x, k) == evaluate(y, k))
}

/// Decides `x = y` as operators on `ℓ²(Z)`.
///
/// Terms are grouped by their affine map `k ↦ (ak + b)/d`. Distinct maps
/// send a given index to the same place at most once, so they cannot
/// cancel along a whole residue class; within a group the coefficient of
/// `ξ_k` is periodic modulo the lcm of the domain moduli and is compared
/// on one full period.
pub fn oracle_equal_exact(x: &NormalFormElement, y: &NormalFormElement) -> bool {
    type Classes = Vec<(i128, i128, Coeff)>;
    let mut groups: BTreeMap<(i128, i128, i128), (Classes, Classes)> = BTreeMap::new();
    for (side, el) in [(0, x), (1, y)] {
        for (m, c) in el.terms() {
            let map = monomial_map(m);
            let entry = groups.entry(map.coefficients()).or_default();
            let class = (map.domain_modulus(), map.domain_residue(), c.clone());
            if side == 0 {
                entry.0.push(class)
            } else {
                entry.1.push(class)
            }
        }
    }
    let coefficient = |classes: &Classes, k: i128| {
        let mut acc = Coeff::zero();
        for (modulus, r, c) in classes {
            if crate::arith::mod_floor(k - r, *modulus) == 0 {
                acc += c;
            }
        }
        acc
    };
    groups.values().all(|(cx, cy)| {
        let period = cx
            .iter()
            .chain(cy)
            .fold(1, |l, (m, _, _)| crate::arith::lcm(l, *m));
        (0..period).all(|k| coefficient(cx, k) == coefficient(cy, k))
    })
}

/// The finite index set `[-W, W]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowModel {
    half_width: i128,
}

impl WindowModel {
    pub fn new(half_width: i128) -> Self {
        assert!(half_width >= 1, "window half-width must be positive");
        Self { half_width }
    }

    pub fn half_width(&self) -> i128 {
        self.half_width
    }

    pub fn contains(&self, k: i128) -> bool {
        k.abs() <= self.half_width
    }

    pub fn indices(&self) -> impl Iterator<Item = i128> {
        -self.half_width..=self.half_width
    }

    /// Applies a word letter by letter. `None` means the orbit of `k` left
    /// the window and the input is excluded; `Some(None)` means `ξ_k` is
    /// annihilated.
    pub fn apply_word(&self, word: &[Letter], k: i128) -> Option<Option<i128>> {
        if !self.contains(k) {
            return None;
        }
        let mut cur = k;
        for &l in word.iter().rev() {
            match generator_map(l).ok()?.apply(cur) {
                Some(next) if self.contains(next) => cur = next,
                Some(_) => return None,
                None => return Some(None),
            }
        }
        Some(Some(cur))
    }
}

/// Average of the diagonal `⟨x ξ_k, ξ_k⟩` over `|k| <= W`.
pub fn window_trace(x: &NormalFormElement, w: i128) -> Coeff {
    let window = WindowModel::new(w);
    let mut acc = Coeff::zero();
    for (m, c) in x.terms() {
        let map = monomial_map(m);
        let fixed = window
            .indices()
            .filter(|&k| map.apply(k) == Some(k))
            .count();
        acc += &(c * &Coeff::real(BigRational::new(fixed.into(), 1.into())));
    }
    &acc * &Coeff::real(BigRational::new(1.into(), (2 * w + 1).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, Algebra, Mode};

    fn q(s: &str) -> NormalFormElement {
        Algebra::new(Mode::N).parse(s).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let sum = q("s3 S3 + u s3 S3 U + u^2 s3 S3 U^2");
        assert!(oracle_equal(&sum, &q("1"), 100));
        assert!(oracle_equal(&q("s2 s3"), &q("s6"), 100));
        assert!(!oracle_equal(&q("s2 S2"), &q("1"), 100));
    }

    #[test]
    fn window_trace_examples() {
        assert_eq!(window_trace(&q("1"), 50), Coeff::int(1));
        assert_eq!(window_trace(&q("u"), 50), Coeff::int(0));
        // 51 even numbers in [-50, 50]
        assert_eq!(window_trace(&q("s2 S2"), 50), Coeff::ratio(51, 101));
    }

    #[test]
    fn window_excludes_escaping_orbits() {
        let win = WindowModel::new(10);
        let w = parse_word("s3").unwrap();
        assert_eq!(win.apply_word(&w, 3), Some(Some(9)));
        assert_eq!(win.apply_word(&w, 4), None);
        assert_eq!(win.apply_word(&parse_word("S2").unwrap(), 3), Some(None));
    }
}
