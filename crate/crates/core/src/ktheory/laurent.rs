use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

/// A Laurent polynomial `Σ c_k z^k` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i128, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn z() -> Self {
        Self::monomial(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> i128 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// `z ↦ z^{-1}` (coefficients are real).
    pub fn bar(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (-k, c)).collect(),
        }
    }

    /// For a unit `±z^k` of the Laurent ring, its degree `k`: the winding
    /// number of the loop `z ↦ ±z^k`.
    pub fn unit_degree(&self) -> Option<i64> {
        match self.coeffs.iter().next() {
            Some((&k, &c)) if self.coeffs.len() == 1 && c.abs() == 1 => Some(k),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    fn add_term(&mut self, k: i64, c: i128) {
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&k, &c) in &rhs.coeffs {
            out.add_term(k, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "z".into(),
                (1, -1) => "-z".into(),
                (k, 1) => format!("z^{k}"),
                (k, -1) => format!("-z^{k}"),
                (1, c) => format!("{c}z"),
                (k, c) => format!("{c}z^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Square matrix over `Z[z, z^{-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn scalar(n: usize, p: &LaurentPoly) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &LaurentPoly::one())
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i * self.n + j] = p;
    }

    /// Transpose with `z ↦ z^{-1}` in every entry.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j).bar());
            }
        }
        m
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| &acc * self)
    }

    /// Determinant by expansion over permutations, skipping zero entries;
    /// cheap for the sparse matrices used here.
    pub fn det(&self) -> LaurentPoly {
        fn go(m: &LaurentMatrix, row: usize, used: &mut Vec<bool>, sign: i128) -> LaurentPoly {
            if row == m.n {
                return LaurentPoly::monomial(sign, 0);
            }
            let mut acc = LaurentPoly::zero();
            for col in 0..m.n {
                if used[col] || m.get(row, col).is_zero() {
                    continue;
                }
                // columns already used to the right of `col` are inversions
                let inversions = used[col + 1..].iter().filter(|&&u| u).count();
                let s = if inversions % 2 == 0 { sign } else { -sign };
                used[col] = true;
                let rest = go(m, row + 1, used, s);
                used[col] = false;
                acc = &acc + &(m.get(row, col) * &rest);
            }
            acc
        }
        go(self, 0, &mut vec![false; self.n], 1)
    }
}

impl Mul for &LaurentMatrix {
    type Output = LaurentMatrix;

    fn mul(self, rhs: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, rhs.n, "Laurent matrix size mismatch");
        let n = self.n;
        let mut out = LaurentMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + &(a * b);
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }
}

/// The `k×k` image of `u` under the embedding of `C(S¹)` into
/// `M_k(C(S¹))`: ones on the subdiagonal and `z` in the top-right corner.
pub fn shift_embedding(k: usize) -> LaurentMatrix {
    assert!(k >= 1, "shift embedding needs k >= 1");
    let mut v = LaurentMatrix::zeros(k);
    for i in 1..k {
        v.set(i, i - 1, LaurentPoly::one());
    }
    v.set(0, k - 1, LaurentPoly::z());
    v
}

/// Outcome of [`shift_embedding_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftEmbeddingReport {
    pub unitary: bool,
    pub power_is_z: bool,
    pub det: LaurentPoly,
}

impl ShiftEmbeddingReport {
    pub fn passed(&self) -> bool {
        self.unitary && self.power_is_z && self.det_is_plus_minus_z()
    }

    pub fn det_is_plus_minus_z(&self) -> bool {
        self.det == LaurentPoly::z() || self.det == LaurentPoly::z().neg()
    }
}

/// Checks `V V* = V* V = 1`, `V^k = z·1` and computes `det V`.
pub fn shift_embedding_check(k: usize) -> ShiftEmbeddingReport {
    let v = shift_embedding(k);
    let id = LaurentMatrix::identity(k);
    let vs = v.adjoint();
    ShiftEmbeddingReport {
        unitary: &v * &vs == id && &vs * &v == id,
        power_is_z: v.pow(k as u32) == LaurentMatrix::scalar(k, &LaurentPoly::z()),
        det: v.det(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_degrees() {
        assert_eq!(LaurentPoly::z().neg().unit_degree(), Some(1));
        assert_eq!(LaurentPoly::monomial(1, -3).unit_degree(), Some(-3));
        assert_eq!(LaurentPoly::monomial(2, 1).unit_degree(), None);
        assert_eq!(
            (&LaurentPoly::one() + &LaurentPoly::z()).unit_degree(),
            None
        );
    }

    #[test]
    fn small_cases() {
        let v1 = shift_embedding(1);
        assert_eq!(v1.get(0, 0), &LaurentPoly::z());
        let v2 = shift_embedding(2);
        assert_eq!(v2.get(0, 1), &LaurentPoly::z());
        assert_eq!(v2.get(1, 0), &LaurentPoly::one());
        assert_eq!(v2.pow(2), LaurentMatrix::scalar(2, &LaurentPoly::z()));
        for k in [1, 2, 3, 12] {
            assert!(shift_embedding_check(k).passed(), "k = {k}");
        }
    }

    #[test]
    fn determinant_sign_alternates() {
        // det V = (-1)^{k-1} z, from the k-cycle permutation
        for k in 1..=9 {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(shift_embedding_check(k).det, LaurentPoly::monomial(sign, 1));
        }
    }

    #[test]
    fn determinant_matches_small_expansion() {
        let mut m = LaurentMatrix::zeros(2);
        m.set(0, 0, LaurentPoly::monomial(2, 1));
        m.set(0, 1, LaurentPoly::one());
        m.set(1, 0, LaurentPoly::monomial(3, -1));
        m.set(1, 1, LaurentPoly::one());
        // 2z - 3z^{-1}
        let expected = &LaurentPoly::monomial(2, 1) + &LaurentPoly::monomial(-3, -1);
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn wrong_corner_fails() {
        let mut v = shift_embedding(3);
        v.set(0, 2, LaurentPoly::one());
        assert_ne!(v.pow(3), LaurentMatrix::scalar(3, &LaurentPoly::z()));
    }
}
