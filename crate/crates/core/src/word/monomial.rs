use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::arith;

/// A generator letter. `S(n)` is `s_n`, `SAdj(n)` is `s_n*`.
///
/// Negative indices are the `Q_Z` isometries `s_{-n} = s_n f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    U,
    UAdj,
    S(i64),
    SAdj(i64),
    F,
}

impl Letter {
    pub fn adjoint(self) -> Self {
        match self {
            Letter::U => Letter::UAdj,
            Letter::UAdj => Letter::U,
            Letter::S(n) => Letter::SAdj(n),
            Letter::SAdj(n) => Letter::S(n),
            Letter::F => Letter::F,
        }
    }

    pub fn uses_flip(self) -> bool {
        match self {
            Letter::F => true,
            Letter::S(n) | Letter::SAdj(n) => n < 0,
            _ => false,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::U => write!(f, "u"),
            Letter::UAdj => write!(f, "U"),
            Letter::S(n) => write!(f, "s{n}"),
            Letter::SAdj(n) => write!(f, "S{n}"),
            Letter::F => write!(f, "f"),
        }
    }
}

/// The canonical monomial `u^i s_n s_m* u^j f^eps` with `0 <= j < m`.
///
/// On `ℓ²(Z)` it acts by `ξ_k ↦ ξ_{n(σk + j)/m + i}` on the basis vectors
/// with `σk + j ≡ 0 (mod m)`, where `σ = (-1)^eps`, and kills the others.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    pub i: i128,
    pub n: i128,
    pub m: i128,
    pub j: i128,
    pub eps: u8,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        i: 0,
        n: 1,
        m: 1,
        j: 0,
        eps: 0,
    };

    /// `u^i s_n s_m* u^c f^eps` for arbitrary `c`, reduced so that `0 <= j < m`
    /// via `s_m* u^{mq + r} = u^q s_m* u^r` and `s_n u^q = u^{nq} s_n`.
    pub fn normalized(i: i128, n: i128, m: i128, c: i128, eps: u8) -> Self {
        assert!(n >= 1 && m >= 1, "monomial indices must be positive");
        let r = arith::mod_floor(c, m);
        let q = (c - r) / m;
        Monomial {
            i: i + n * q,
            n,
            m,
            j: r,
            eps: eps & 1,
        }
    }

    pub fn u_pow(k: i128) -> Self {
        Monomial { i: k, ..Self::ONE }
    }

    pub fn s(n: i128) -> Self {
        Monomial { n, ..Self::ONE }
    }

    pub fn s_adj(m: i128) -> Self {
        Monomial { m, ..Self::ONE }
    }

    pub fn flip() -> Self {
        Monomial {
            eps: 1,
            ..Self::ONE
        }
    }

    /// The range projection `u^k e_n u^{-k}`.
    pub fn projection(n: i128, k: i128) -> Self {
        Self::normalized(k, n, n, -k, 0)
    }

    pub fn sign(&self) -> i128 {
        if self.eps == 1 {
            -1
        } else {
            1
        }
    }

    pub fn from_letter(letter: Letter) -> Self {
        match letter {
            Letter::U => Self::u_pow(1),
            Letter::UAdj => Self::u_pow(-1),
            Letter::S(n) if n > 0 => Self::s(n as i128),
            Letter::S(n) => Monomial {
                eps: 1,
                ..Self::s(-(n as i128))
            },
            Letter::SAdj(n) if n > 0 => Self::s_adj(n as i128),
            // (s_n f)* = f s_n* = s_n* f
            Letter::SAdj(n) => Monomial {
                eps: 1,
                ..Self::s_adj(-(n as i128))
            },
            Letter::F => Self::flip(),
        }
    }

    /// Product in the algebra; `None` is zero.
    ///
    /// After moving `f^eps` to the right, the only non-trivial step is
    /// `s_m* u^c s_p`: with `g = gcd(m, p)` it vanishes unless `g | c`, and
    /// otherwise equals `u^a s_{p/g} s_{m/g}* u^b` where
    /// `(p/g)·b + (m/g)·a = c/g`.
    pub fn mul(&self, rhs: &Monomial) -> Option<Monomial> {
        let sigma = self.sign();
        let c = self.j + sigma * rhs.i;
        let g = arith::gcd(self.m, rhs.n);
        if arith::mod_floor(c, g) != 0 {
            return None;
        }
        let (m1, n1, c1) = (self.m / g, rhs.n / g, c / g);
        let b0 = if m1 == 1 {
            0
        } else {
            let inv = arith::mod_inverse(n1, m1).expect("coprime after gcd split");
            arith::mod_floor(c1 * inv, m1)
        };
        let a0 = (c1 - n1 * b0) / m1;
        // u^{i + n a0} s_{n n1} s_{m1}* u^{b0} s_{m'}* u^{σ j'}
        //   = u^{i + n a0} s_{n n1} s_{m1 m'}* u^{m' b0 + σ j'}
        Some(Monomial::normalized(
            self.i + self.n * a0,
            self.n * n1,
            m1 * rhs.m,
            rhs.m * b0 + sigma * rhs.j,
            self.eps ^ rhs.eps,
        ))
    }

    /// `(u^i s_n s_m* u^j f^ε)* = u^{-σj} s_m s_n* u^{-σi} f^ε`.
    pub fn adjoint(&self) -> Monomial {
        let sigma = self.sign();
        Monomial::normalized(-sigma * self.j, self.m, self.n, -sigma * self.i, self.eps)
    }

    /// Image of the basis index `k`, or `None` when `ξ_k` is annihilated.
    pub fn apply(&self, k: i128) -> Option<i128> {
        let t = self.sign() * k + self.j;
        (arith::mod_floor(t, self.m) == 0).then(|| self.n * (t / self.m) + self.i)
    }

    /// Slope `σ·n/m` and intercept `n·j/m + i` of the underlying affine map.
    /// Monomials sharing this key differ only in their domain class.
    pub fn affine_key(&self) -> AffineKey {
        AffineKey {
            eps: self.eps,
            slope: Ratio::new(self.n, self.m),
            intercept: Ratio::new(self.n * self.j, self.m) + self.i,
        }
    }

    /// Residue class mod `m` on which the monomial is non-zero.
    pub fn domain_residue(&self) -> i128 {
        arith::mod_floor(-self.sign() * self.j, self.m)
    }

    /// Monomial with the given affine key, supported on `k ≡ r (mod modulus)`.
    pub(crate) fn from_key(key: &AffineKey, modulus: i128, r: i128) -> Self {
        let n = key.slope * modulus;
        assert!(
            n.is_integer(),
            "period must be a multiple of the slope denominator"
        );
        let sigma = if key.eps == 1 { -1 } else { 1 };
        let j = arith::mod_floor(-sigma * r, modulus);
        let i = key.intercept - key.slope * j;
        assert!(i.is_integer(), "support class must map to integers");
        Monomial {
            i: i.to_integer(),
            n: n.to_integer(),
            m: modulus,
            j,
            eps: key.eps,
        }
    }

    /// Whether the monomial is fixed by the `α` gauge action (`n = m`).
    pub fn is_gauge_invariant(&self) -> bool {
        self.n == self.m
    }

    pub fn degree(&self) -> GaugeDegree {
        let mut s_multidegree = BTreeMap::new();
        for (p, e) in arith::factorize(self.n as u128) {
            *s_multidegree.entry(p).or_insert(0) += e as i64;
        }
        for (p, e) in arith::factorize(self.m as u128) {
            *s_multidegree.entry(p).or_insert(0) -= e as i64;
        }
        s_multidegree.retain(|_, v| *v != 0);
        GaugeDegree {
            u_degree: self.i + self.j,
            s_multidegree,
            flip_parity: self.eps,
        }
    }
}

/// Grouping key for canonicalization: the affine function of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineKey {
    pub eps: u8,
    pub slope: Ratio<i128>,
    pub intercept: Ratio<i128>,
}

/// Weights of a monomial under the gauge actions: `β` scales `u`, `α`
/// scales each `s_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaugeDegree {
    pub u_degree: i128,
    pub s_multidegree: BTreeMap<u64, i64>,
    pub flip_parity: u8,
}

impl GaugeDegree {
    pub fn alpha_trivial(&self) -> bool {
        self.s_multidegree.is_empty()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "u^{} s_{} S_{} u^{} f^{}",
            self.i, self.n, self.m, self.j, self.eps
        )
    }
}
