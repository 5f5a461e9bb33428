use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::word::{Letter, Monomial};

/// The partial map `k ↦ (a·k + b)/d` defined exactly on `k ≡ r (mod M)`.
///
/// Stored with `gcd(a, b, d) = 1`, `d > 0` and `0 <= r < M`; since an
/// affine function on an infinite progression fixes its slope and
/// intercept, two maps are equal as partial functions iff their fields are.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AffineCongruenceMap {
    modulus: i128,
    residue: i128,
    a: i128,
    b: i128,
    d: i128,
}

impl AffineCongruenceMap {
    /// Builds the map, checking that it sends its domain into `Z`.
    pub fn new(modulus: i128, residue: i128, a: i128, b: i128, d: i128) -> Option<Self> {
        if modulus <= 0 || d == 0 || a == 0 {
            return None;
        }
        let (a, b, d) = if d < 0 { (-a, -b, -d) } else { (a, b, d) };
        let g = arith::gcd(arith::gcd(a, b), d);
        let m = Self {
            modulus,
            residue: arith::mod_floor(residue, modulus),
            a: a / g,
            b: b / g,
            d: d / g,
        };
        // integrality on the whole class: at r and with step M
        let integral = arith::mod_floor(m.a * m.residue + m.b, m.d) == 0
            && arith::mod_floor(m.a * m.modulus, m.d) == 0;
        integral.then_some(m)
    }

    pub fn identity() -> Self {
        Self::total(1, 0)
    }

    fn total(a: i128, b: i128) -> Self {
        Self {
            modulus: 1,
            residue: 0,
            a,
            b,
            d: 1,
        }
    }

    pub fn domain_modulus(&self) -> i128 {
        self.modulus
    }

    pub fn domain_residue(&self) -> i128 {
        self.residue
    }

    /// `(a, b, d)` with the map being `k ↦ (a·k + b)/d`.
    pub fn coefficients(&self) -> (i128, i128, i128) {
        (self.a, self.b, self.d)
    }

    pub fn sign(&self) -> i128 {
        self.a.signum()
    }

    pub fn apply(&self, k: i128) -> Option<i128> {
        (arith::mod_floor(k - self.residue, self.modulus) == 0)
            .then(|| (self.a * k + self.b) / self.d)
    }

    /// `self ∘ inner`, or `None` for the empty map.
    pub fn compose(&self, inner: &Self) -> Option<Self> {
        // k = r + M t, inner(k) = c0 + c1 t
        let c0 = inner
            .apply(inner.residue)
            .expect("residue lies in the domain");
        let c1 = inner.a * inner.modulus / inner.d;
        let (t0, step) = arith::solve_linear_congruence(c1, self.residue - c0, self.modulus)?;
        let modulus = inner.modulus * step;
        let residue = inner.residue + inner.modulus * t0;
        let m = Self::new(
            modulus,
            residue,
            self.a * inner.a,
            self.a * inner.b + self.b * inner.d,
            self.d * inner.d,
        );
        Some(m.expect("composition of integral maps is integral"))
    }

    /// The inverse partial map from the image back to the domain.
    pub fn inverse(&self) -> Self {
        // image is the class of a·r' with step a·M/d, where r' = (a r + b)/d
        let image_r = self
            .apply(self.residue)
            .expect("residue lies in the domain");
        let image_m = (self.a * self.modulus / self.d).abs();
        Self::new(image_m, image_r, self.d, -self.b, self.a).expect("inverse of an injective map")
    }
}

impl fmt::Display for AffineCongruenceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k ↦ ({}k + {})/{} on k ≡ {} mod {}",
            self.a, self.b, self.d, self.residue, self.modulus
        )
    }
}

/// The map of a single generator on basis indices.
pub fn generator_map(letter: Letter) -> Result<AffineCongruenceMap> {
    let n = match letter {
        Letter::S(n) | Letter::SAdj(n) if n == 0 => return Err(Error::InvalidIndex(0)),
        Letter::S(n) | Letter::SAdj(n) => n as i128,
        _ => 0,
    };
    Ok(match letter {
        Letter::U => AffineCongruenceMap::total(1, 1),
        Letter::UAdj => AffineCongruenceMap::total(1, -1),
        Letter::F => AffineCongruenceMap::total(-1, 0),
        Letter::S(_) => AffineCongruenceMap::total(n, 0),
        // (s_n)* undoes k ↦ n k; for n < 0 this is k ↦ -k/|n|
        Letter::SAdj(_) => {
            AffineCongruenceMap::new(n.abs(), 0, n.signum(), 0, n.abs()).expect("valid adjoint map")
        }
    })
}

/// Composition of the letter maps of a word, rightmost letter first.
pub fn word_map(word: &[Letter]) -> Result<Option<AffineCongruenceMap>> {
    let mut acc = Some(AffineCongruenceMap::identity());
    for &l in word {
        let g = generator_map(l)?;
        acc = acc.and_then(|a| a.compose(&g));
    }
    Ok(acc)
}

/// The map of `u^i s_n s_m* u^j f^eps`, read off from its closed form
/// `k ↦ (σ n k + n j + m i)/m` on `σk + j ≡ 0 (mod m)`.
pub fn monomial_map(mono: &Monomial) -> AffineCongruenceMap {
    let sigma = mono.sign();
    AffineCongruenceMap::new(
        mono.m,
        -sigma * mono.j,
        sigma * mono.n,
        mono.n * mono.j + mono.m * mono.i,
        mono.m,
    )
    .expect("monomials are integral on their domain")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn w(s: &str) -> Option<AffineCongruenceMap> {
        word_map(&parse_word(s).unwrap()).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generator_map(Letter::S(2)).unwrap().apply(3), Some(6));
        assert_eq!(generator_map(Letter::U).unwrap().apply(0), Some(1));
        assert_eq!(generator_map(Letter::SAdj(3)).unwrap().apply(4), None);
        assert_eq!(generator_map(Letter::SAdj(3)).unwrap().apply(-6), Some(-2));
        assert_eq!(generator_map(Letter::SAdj(-3)).unwrap().apply(6), Some(-2));
        assert!(generator_map(Letter::S(0)).is_err());
    }

    #[test]
    fn compose_examples() {
        assert_eq!(w("S2 u s2"), None);
        assert_eq!(w("f f"), Some(AffineCongruenceMap::identity()));
        assert_eq!(w("S2 u u s2"), w("u"));
        assert_eq!(w("s2 s3"), w("s6"));
        assert_eq!(w("f u f"), w("U"));
    }

    #[test]
    fn composition_matches_pointwise() {
        let maps = [
            AffineCongruenceMap::new(4, 1, 3, 5, 2).unwrap(),
            AffineCongruenceMap::new(3, 2, -2, 1, 3).unwrap(),
            generator_map(Letter::SAdj(6)).unwrap(),
            generator_map(Letter::S(-5)).unwrap(),
        ];
        for a in &maps {
            for b in &maps {
                let ab = a.compose(b);
                for k in -300..=300 {
                    let direct = b.apply(k).and_then(|x| a.apply(x));
                    assert_eq!(ab.and_then(|m| m.apply(k)), direct, "{a} ∘ {b} at {k}");
                }
            }
            let inv = a.inverse();
            for k in -300..=300 {
                if let Some(x) = a.apply(k) {
                    assert_eq!(inv.apply(x), Some(k));
                }
            }
        }
    }

    #[test]
    fn rejects_non_integral_maps() {
        assert!(AffineCongruenceMap::new(1, 0, 1, 0, 2).is_none());
        assert!(AffineCongruenceMap::new(2, 1, 1, 1, 2).is_some());
    }
}
