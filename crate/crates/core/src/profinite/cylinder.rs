use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::arith;

/// The compact open set `{x ∈ Ẑ : x ≡ residue (mod modulus)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CylinderSet {
    modulus: i128,
    residue: i128,
}

impl CylinderSet {
    pub fn new(modulus: i128, residue: i128) -> Self {
        assert!(modulus > 0, "cylinder modulus must be positive");
        Self {
            modulus,
            residue: arith::mod_floor(residue, modulus),
        }
    }

    /// All of Ẑ.
    pub fn full() -> Self {
        Self::new(1, 0)
    }

    pub fn modulus(&self) -> i128 {
        self.modulus
    }

    pub fn residue(&self) -> i128 {
        self.residue
    }

    pub fn contains(&self, k: i128) -> bool {
        arith::mod_floor(k - self.residue, self.modulus) == 0
    }

    /// CRT intersection; `None` is the empty set.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        arith::crt(self.residue, self.modulus, other.residue, other.modulus)
            .map(|(r, m)| Self::new(m, r))
    }

    /// Haar measure, `1/modulus`.
    pub fn measure(&self) -> Ratio<i128> {
        Ratio::new(1, self.modulus)
    }

    /// Image under `x ↦ n·x`.
    pub fn scale(&self, n: i128) -> Self {
        assert!(n > 0);
        Self::new(self.modulus * n, self.residue * n)
    }

    /// Image under `x ↦ x + b`.
    pub fn translate(&self, b: i128) -> Self {
        Self::new(self.modulus, self.residue + b)
    }
}

/// Measure of a possibly empty cylinder.
pub fn cylinder_measure(c: Option<&CylinderSet>) -> Ratio<i128> {
    c.map_or_else(|| Ratio::from_integer(0), CylinderSet::measure)
}

impl fmt::Display for CylinderSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coprime_zero_classes_meet_in_product() {
        let c = CylinderSet::new(2, 0).intersect(&CylinderSet::new(3, 0));
        assert_eq!(c, Some(CylinderSet::new(6, 0)));
    }

    #[test]
    fn idempotent_and_disjoint() {
        let odd = CylinderSet::new(2, 1);
        assert_eq!(odd.intersect(&odd), Some(odd));
        assert_eq!(odd.intersect(&CylinderSet::new(4, 0)), None);
    }

    #[test]
    fn measures() {
        assert_eq!(CylinderSet::new(5, 0).measure(), Ratio::new(1, 5));
        assert_eq!(CylinderSet::full().measure(), Ratio::from_integer(1));
        let c = CylinderSet::new(2, 1).intersect(&CylinderSet::new(3, 0));
        assert_eq!(cylinder_measure(c.as_ref()), Ratio::new(1, 6));
        assert_eq!(cylinder_measure(None), Ratio::from_integer(0));
    }

    #[test]
    fn crt_measure_is_zero_or_reciprocal_lcm() {
        for n1 in 1..=24 {
            for n2 in 1..=24 {
                for r1 in 0..n1 {
                    for r2 in 0..n2 {
                        let c = CylinderSet::new(n1, r1).intersect(&CylinderSet::new(n2, r2));
                        let v = cylinder_measure(c.as_ref()) * arith::lcm(n1, n2);
                        assert!(v == Ratio::from_integer(0) || v == Ratio::from_integer(1));
                    }
                }
            }
        }
    }

    #[test]
    fn density_of_residue_classes() {
        let w: i128 = 1_000_000;
        for n in [1, 2, 3, 7, 10, 64, 97, 100] {
            for r in [0, n / 2, n - 1] {
                let c = CylinderSet::new(n, r);
                let hits = (-w..=w).filter(|&k| c.contains(k)).count() as f64;
                let density = hits / (2 * w + 1) as f64;
                assert!((density - 1.0 / n as f64).abs() < 1e-3, "n={n} r={r}");
            }
        }
    }
}
