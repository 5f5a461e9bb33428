use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ktheory::snf::{column_span_basis, kernel_basis, smith_normal_form, solve};
use crate::ktheory::IntMatrix;

/// `Z^gens / (column span of relations)`.
#[derive(Clone, Debug)]
pub struct AbGroup {
    gens: usize,
    relations: IntMatrix,
}

/// Rank and invariant factors `d_1 | d_2 | ...` (all `> 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupInvariants {
    pub rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

impl AbGroup {
    pub fn presented(gens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != gens {
            return Err(Error::Dimension(format!(
                "{} relation rows for {gens} generators",
                relations.rows()
            )));
        }
        Ok(Self { gens, relations })
    }

    pub fn free(rank: usize) -> Self {
        Self {
            gens: rank,
            relations: IntMatrix::zeros(rank, 0),
        }
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    pub fn cyclic(n: i64) -> Self {
        Self {
            gens: 1,
            relations: IntMatrix::from_rows(&[vec![n]]),
        }
    }

    /// `Z^rank ⊕ Z/d_1 ⊕ ...` with a diagonal presentation.
    pub fn from_invariants(inv: &GroupInvariants) -> Self {
        let t = inv.torsion.len();
        let mut rel = IntMatrix::zeros(inv.rank + t, t);
        for (k, d) in inv.torsion.iter().enumerate() {
            rel[(inv.rank + k, k)] = d.clone();
        }
        Self {
            gens: inv.rank + t,
            relations: rel,
        }
    }

    pub fn generators(&self) -> usize {
        self.gens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn invariants(&self) -> GroupInvariants {
        let s = smith_normal_form(&self.relations);
        GroupInvariants {
            rank: self.gens - s.rank,
            torsion: s.invariants().into_iter().filter(|d| !d.is_one()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gens - smith_normal_form(&self.relations).rank
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariants().torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion().is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        let inv = self.invariants();
        inv.rank == 0 && inv.torsion.is_empty()
    }

    pub fn isomorphic(&self, other: &Self) -> bool {
        self.invariants() == other.invariants()
    }

    /// The same group with its canonical diagonal presentation.
    pub fn canonical(&self) -> Self {
        Self::from_invariants(&self.invariants())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self {
            gens: self.gens + other.gens,
            relations: self.relations.block_diag(&other.relations),
        }
    }

    /// Whether the vector represents the zero class.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        v.iter().all(Zero::is_zero) || solve(&self.relations, v).is_some()
    }

    /// Some `y` with `v = d·y` in the group, if the class of `v` is divisible by `d`.
    pub fn divide(&self, v: &[BigInt], d: &BigInt) -> Option<Vec<BigInt>> {
        if self.relations.cols() == 0 {
            return v
                .iter()
                .map(|x| {
                    let (q, r) = num_integer::Integer::div_rem(x, d);
                    r.is_zero().then_some(q)
                })
                .collect();
        }
        let mut di = IntMatrix::zeros(self.gens, self.gens);
        for i in 0..self.gens {
            di[(i, i)] = d.clone();
        }
        let sol = solve(&di.hcat(&self.relations), v)?;
        Some(sol[..self.gens].to_vec())
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariants())
    }
}

/// A homomorphism given by an integer matrix on generators.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: AbGroup,
    target: AbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Checks shapes and that relations are sent into relations.
    pub fn new(source: AbGroup, target: AbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.gens || matrix.cols() != source.gens {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map Z^{} -> Z^{}",
                matrix.rows(),
                matrix.cols(),
                source.gens,
                target.gens
            )));
        }
        let images = &matrix * &source.relations;
        for j in 0..images.cols() {
            if !target.is_zero_element(&images.column(j)) {
                return Err(Error::Dimension(format!(
                    "relation {j} of the source is not sent to zero"
                )));
            }
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &AbGroup) -> Self {
        Self::scalar(g, 1)
    }

    pub fn scalar(g: &AbGroup, c: i64) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::scalar(g.gens, c),
        }
    }

    pub fn zero(source: &AbGroup, target: &AbGroup) -> Self {
        Self {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.gens, source.gens),
        }
    }

    pub fn source(&self) -> &AbGroup {
        &self.source
    }

    pub fn target(&self) -> &AbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GroupHom) -> Result<GroupHom> {
        if inner.target.gens != self.source.gens {
            return Err(Error::Dimension("composition of incompatible maps".into()));
        }
        Ok(GroupHom {
            source: inner.source.clone(),
            target: self.target.clone(),
            matrix: &self.matrix * &inner.matrix,
        })
    }

    /// `self - other`, for maps with the same source and target.
    pub fn sub(&self, other: &GroupHom) -> Result<GroupHom> {
        if (self.matrix.rows(), self.matrix.cols()) != (other.matrix.rows(), other.matrix.cols()) {
            return Err(Error::Dimension("difference of incompatible maps".into()));
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: self.matrix.sub(&other.matrix),
        })
    }

    /// Whether the two maps agree modulo the relations of the target.
    pub fn agrees_with(&self, other: &GroupHom) -> bool {
        let diff = self.matrix.sub(&other.matrix);
        (0..diff.cols()).all(|j| self.target.is_zero_element(&diff.column(j)))
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    /// A basis (columns) of `{x : M x ∈ relations of the target}`.
    fn preimage_of_zero(&self) -> IntMatrix {
        let big = self.matrix.hcat(&self.target.relations);
        let ker = kernel_basis(&big).row_block(0..self.source.gens);
        column_span_basis(&ker)
    }

    /// The kernel as a group, with its inclusion matrix into the source.
    pub fn kernel(&self) -> (AbGroup, IntMatrix) {
        let basis = self.preimage_of_zero();
        let l = basis.cols();
        let mut rels = Vec::new();
        for j in 0..self.source.relations.cols() {
            let r = self.source.relations.column(j);
            rels.push(solve(&basis, &r).expect("relations lie in the kernel lattice"));
        }
        let group = AbGroup {
            gens: l,
            relations: IntMatrix::from_columns(l, &rels),
        };
        (group, basis)
    }

    pub fn cokernel(&self) -> AbGroup {
        AbGroup {
            gens: self.target.gens,
            relations: self.target.relations.hcat(&self.matrix),
        }
    }

    /// The image, presented as a quotient of the source.
    pub fn image(&self) -> AbGroup {
        AbGroup {
            gens: self.source.gens,
            relations: self.preimage_of_zero(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().0.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }

    pub fn is_iso(&self) -> bool {
        self.is_surjective() && self.is_injective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_and_display() {
        let g = AbGroup::presented(
            3,
            IntMatrix::from_rows(&[vec![2, 0], vec![0, 3], vec![0, 0]]),
        )
        .unwrap();
        assert_eq!(g.to_string(), "Z ⊕ Z/6");
        assert_eq!(AbGroup::zero().to_string(), "0");
        assert_eq!(AbGroup::free(4).to_string(), "Z^4");
        assert!(AbGroup::cyclic(1).is_trivial());
        assert!(g.isomorphic(&g.canonical()));
    }

    #[test]
    fn kernel_cokernel_image() {
        // ×2 on Z/4: kernel Z/2, cokernel Z/2, image Z/2
        let z4 = AbGroup::cyclic(4);
        let two = GroupHom::scalar(&z4, 2);
        assert_eq!(two.kernel().0.to_string(), "Z/2");
        assert_eq!(two.cokernel().to_string(), "Z/2");
        assert_eq!(two.image().to_string(), "Z/2");
        assert!(!two.is_iso());
        // ×3 on Z/4 is invertible
        assert!(GroupHom::scalar(&z4, 3).is_iso());
    }

    #[test]
    fn ill_defined_map_is_rejected() {
        // Z/2 -> Z, 1 ↦ 1 does not respect 2 = 0
        let err = GroupHom::new(
            AbGroup::cyclic(2),
            AbGroup::free(1),
            IntMatrix::from_rows(&[vec![1]]),
        );
        assert!(err.is_err());
    }

    #[test]
    fn divisibility_in_presented_group() {
        let z6 = AbGroup::cyclic(6);
        let one = vec![BigInt::one()];
        // in Z/6, 1 = 5·5, so 1 is divisible by 5 but not by 2
        assert!(z6.divide(&one, &BigInt::from(5)).is_some());
        assert!(z6.divide(&one, &BigInt::from(2)).is_none());
        assert!(AbGroup::free(1)
            .divide(&[BigInt::from(6)], &BigInt::from(3))
            .is_some());
    }
}
