use crate::arith;
use crate::error::{Error, Result};
use crate::ktheory::IntMatrix;

/// Order of the three `K_0` generators of the dihedral group algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum DihedralOrder {
    /// `([1], [(uf)⁺], [f⁺])`
    #[default]
    Standard,
    /// `([f⁺], [(uf)⁺], [1])`
    Reversed,
}

/// The map `K_0(A'_n) → K_0(A'_{pn})`; column `j` is the image of generator `j`.
pub fn dihedral_k0_matrix(p: u64, order: DihedralOrder) -> Result<IntMatrix> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let p = p as i64;
    let m = if p == 2 {
        IntMatrix::from_rows(&[vec![2, 1, 0], vec![0, 0, 1], vec![0, 0, 1]])
    } else {
        let h = (p - 1) / 2;
        IntMatrix::from_rows(&[vec![p, h, h], vec![0, 1, 0], vec![0, 0, 1]])
    };
    Ok(match order {
        DihedralOrder::Standard => m,
        DihedralOrder::Reversed => {
            let rev = IntMatrix::from_rows(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
            &(&rev * &m) * &rev
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_matrices() {
        let std = DihedralOrder::Standard;
        assert_eq!(
            dihedral_k0_matrix(2, std).unwrap(),
            IntMatrix::from_rows(&[vec![2, 1, 0], vec![0, 0, 1], vec![0, 0, 1]])
        );
        assert_eq!(
            dihedral_k0_matrix(3, std).unwrap(),
            IntMatrix::from_rows(&[vec![3, 1, 1], vec![0, 1, 0], vec![0, 0, 1]])
        );
        assert_eq!(
            dihedral_k0_matrix(5, std).unwrap(),
            IntMatrix::from_rows(&[vec![5, 2, 2], vec![0, 1, 0], vec![0, 0, 1]])
        );
        assert_eq!(dihedral_k0_matrix(9, std), Err(Error::NotPrime(9)));
        assert_eq!(dihedral_k0_matrix(1, std), Err(Error::NotPrime(1)));
    }

    #[test]
    fn reversed_order_is_a_relabelling() {
        for p in [2, 3, 5, 7] {
            let a = dihedral_k0_matrix(p, DihedralOrder::Standard).unwrap();
            let b = dihedral_k0_matrix(p, DihedralOrder::Reversed).unwrap();
            assert_eq!(a.det(), b.det());
            // the unit class is the last generator in reversed order
            assert_eq!(b[(2, 2)], a[(0, 0)]);
        }
    }
}
