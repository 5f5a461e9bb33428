//! The *-algebras `Q_N` and `Q_Z` in symbolic form.
//!
//! Words in `u`, `s_n`, `f` and their adjoints are rewritten to canonical
//! monomials `u^i s_n s_m* u^j f^eps`; linear combinations are kept in a
//! canonical form in which equality is decided by comparing coefficients.

mod coeff;
mod element;
mod gauge;
mod monomial;
mod parse;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

pub use coeff::Coeff;
pub use element::NormalFormElement;
pub use gauge::{
    expectation_e, expectation_f, expectation_g, kms_check, kms_check_monomials, lambda_i,
    monomial_trace, trace_tau,
};
pub use monomial::{AffineKey, GaugeDegree, Letter, Monomial};
pub use parse::{parse_element, parse_word};

use crate::error::{Error, Result};

/// Which algebra the letters live in: `Q_N`, or `Q_Z` which adds `f = s_{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    N,
    Z,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" | "n" => Ok(Mode::N),
            "Z" | "z" => Ok(Mode::Z),
            other => Err(Error::Parse(format!("unknown mode `{other}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::N => "N",
            Mode::Z => "Z",
        })
    }
}

/// Entry point for building elements in a fixed mode.
#[derive(Clone, Copy, Debug, Default)]
pub struct Algebra {
    mode: Mode,
}

impl Algebra {
    pub fn new(mode: Mode) -> Self {
        Self { mode }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn letter(&self, l: Letter) -> Result<Monomial> {
        match l {
            Letter::S(0) | Letter::SAdj(0) => Err(Error::InvalidIndex(0)),
            Letter::S(n) | Letter::SAdj(n) if n < 0 && self.mode == Mode::N => {
                Err(Error::InvalidIndex(n))
            }
            Letter::F if self.mode == Mode::N => Err(Error::FlipInNMode),
            l => Ok(Monomial::from_letter(l)),
        }
    }

    /// The monomial a word reduces to, or `None` if it is zero.
    pub fn word_monomial(&self, word: &[Letter]) -> Result<Option<Monomial>> {
        let mut acc = Some(Monomial::ONE);
        for &l in word {
            let m = self.letter(l)?;
            acc = acc.and_then(|a| a.mul(&m));
        }
        Ok(acc)
    }

    pub fn normal_form(&self, word: &[Letter]) -> Result<NormalFormElement> {
        Ok(self
            .word_monomial(word)?
            .map_or_else(NormalFormElement::zero, NormalFormElement::monomial))
    }

    /// Normal form with a random reduction order: adjacent factors are
    /// merged at randomly chosen positions until one factor remains.
    pub fn normal_form_shuffled<R: Rng>(
        &self,
        word: &[Letter],
        rng: &mut R,
    ) -> Result<NormalFormElement> {
        let mut factors: Vec<Option<Monomial>> = word
            .iter()
            .map(|&l| self.letter(l).map(Some))
            .collect::<Result<_>>()?;
        if factors.is_empty() {
            return Ok(NormalFormElement::one());
        }
        while factors.len() > 1 {
            let mut positions: Vec<usize> = (0..factors.len() - 1).collect();
            positions.shuffle(rng);
            let k = positions[0];
            let merged = match (factors[k], factors[k + 1]) {
                (Some(a), Some(b)) => a.mul(&b),
                _ => None,
            };
            factors.splice(k..k + 2, [merged]);
        }
        Ok(factors[0].map_or_else(NormalFormElement::zero, NormalFormElement::monomial))
    }

    pub fn parse(&self, src: &str) -> Result<NormalFormElement> {
        let mut out = NormalFormElement::zero();
        for (c, w) in parse_element(src)? {
            out = out.add(&self.normal_form(&w)?.scale(&c));
        }
        Ok(out)
    }
}

/// Adjoint of a word: reversed, each letter replaced by its adjoint.
pub fn word_adjoint(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.adjoint()).collect()
}

/// A uniformly random word of `len` letters with indices in `1..=max_index`.
/// In `Z` mode the flip and negative indices are included.
pub fn random_word<R: Rng>(rng: &mut R, len: usize, max_index: i64, mode: Mode) -> Vec<Letter> {
    let kinds = if mode == Mode::Z { 5 } else { 4 };
    let idx = |rng: &mut R| {
        let n = rng.gen_range(1..=max_index);
        if mode == Mode::Z && rng.gen_bool(0.25) {
            -n
        } else {
            n
        }
    };
    (0..len)
        .map(|_| match rng.gen_range(0..kinds) {
            0 => Letter::U,
            1 => Letter::UAdj,
            2 => Letter::S(idx(rng)),
            3 => Letter::SAdj(idx(rng)),
            _ => Letter::F,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn nf(mode: Mode, w: &str) -> NormalFormElement {
        Algebra::new(mode)
            .normal_form(&parse_word(w).unwrap())
            .unwrap()
    }

    #[test]
    fn rewrite_examples() {
        let a = Algebra::new(Mode::N);
        assert_eq!(nf(Mode::N, "s2 u"), a.parse("u^2 s2").unwrap());
        assert_eq!(nf(Mode::N, "S2 s3"), a.parse("s3 S2").unwrap());
        assert!(nf(Mode::N, "S2 u s2").is_zero());
        assert_eq!(nf(Mode::N, "S2 u u s2"), a.parse("u").unwrap());
        assert_eq!(nf(Mode::Z, "f u f"), a.parse("U").unwrap());
    }

    #[test]
    fn mode_switch_rejects_flip() {
        let n = Algebra::new(Mode::N);
        assert_eq!(n.normal_form(&[Letter::F]), Err(Error::FlipInNMode));
        assert_eq!(
            n.normal_form(&[Letter::S(-1)]),
            Err(Error::InvalidIndex(-1))
        );
        assert_eq!(n.normal_form(&[Letter::S(0)]), Err(Error::InvalidIndex(0)));
        let z = Algebra::new(Mode::Z);
        assert_eq!(
            z.normal_form(&[Letter::S(-1)]).unwrap(),
            z.normal_form(&[Letter::F]).unwrap()
        );
        assert_eq!(
            z.normal_form(&parse_word("s-3").unwrap()).unwrap(),
            z.normal_form(&parse_word("s3 f").unwrap()).unwrap()
        );
    }

    #[test]
    fn shuffled_reduction_matches() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for mode in [Mode::N, Mode::Z] {
            let a = Algebra::new(mode);
            for _ in 0..500 {
                let w = random_word(&mut rng, 10, 6, mode);
                assert_eq!(
                    a.normal_form(&w).unwrap(),
                    a.normal_form_shuffled(&w, &mut rng).unwrap()
                );
            }
        }
    }

    #[test]
    fn involution_on_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = Algebra::new(Mode::Z);
        for _ in 0..500 {
            let w = random_word(&mut rng, 8, 6, Mode::Z);
            assert_eq!(
                a.normal_form(&word_adjoint(&w)).unwrap(),
                a.normal_form(&w).unwrap().adjoint()
            );
        }
    }
}
