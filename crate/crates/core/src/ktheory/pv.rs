use serde::Serialize;

use crate::error::{Error, Result};
use crate::ktheory::snf::solve;
use crate::ktheory::{
    AbGroup, GroupHom, GroupInvariants, IndAbGroup, IntMatrix, PrimeSchedule, StageRule,
};
use crate::word::Mode;

/// A stagewise endomorphism `α_t : G_t → G_t` of an inductive system.
#[derive(Clone, Debug)]
pub struct IndHom {
    maps: Vec<GroupHom>,
}

impl IndHom {
    /// Builds `α` stage by stage and checks `φ_t α_t = α_{t+1} φ_t`.
    pub fn new(system: &IndAbGroup, maps: Vec<GroupHom>) -> Result<Self> {
        if maps.len() != system.stage_count() {
            return Err(Error::Dimension(format!(
                "{} stagewise maps for {} stages",
                maps.len(),
                system.stage_count()
            )));
        }
        for t in 0..system.stage_count().saturating_sub(1) {
            let phi = system.map(t);
            let lhs = phi.compose(&maps[t])?;
            let rhs = maps[t + 1].compose(phi)?;
            if !lhs.agrees_with(&rhs) {
                return Err(Error::Dimension(format!(
                    "α does not commute with the connecting map at stage {t}"
                )));
            }
        }
        Ok(Self { maps })
    }

    /// The same matrix at every stage.
    pub fn constant(system: &IndAbGroup, matrix: &IntMatrix) -> Result<Self> {
        let maps = system
            .stages()
            .iter()
            .map(|g| GroupHom::new(g.clone(), g.clone(), matrix.clone()))
            .collect::<Result<_>>()?;
        Self::new(system, maps)
    }

    pub fn identity(system: &IndAbGroup) -> Self {
        Self {
            maps: system.stages().iter().map(GroupHom::identity).collect(),
        }
    }

    pub fn stage(&self, t: usize) -> &GroupHom {
        &self.maps[t]
    }
}

/// How a colimit was identified with one of its stages.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub group: GroupInvariants,
    /// Stage from which every materialized connecting map is an isomorphism.
    pub iso_from: usize,
    pub stages: usize,
}

/// Data behind a [`pv_step`] result. The maps `α` are inputs to the
/// computation and are recorded as such.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PvCertificate {
    pub coker_id_minus_alpha0: Resolution,
    pub ker_id_minus_alpha1: Resolution,
    pub coker_id_minus_alpha1: Resolution,
    pub ker_id_minus_alpha0: Resolution,
    pub alpha_provenance: String,
}

#[derive(Clone, Debug)]
pub struct PvResult {
    pub k0: AbGroup,
    pub k1: AbGroup,
    pub certificate: PvCertificate,
}

/// Identifies the colimit of a system with its last stage when the tail of
/// connecting maps consists of isomorphisms.
fn resolve(groups: Vec<AbGroup>, maps: Vec<GroupHom>, what: &str) -> Result<(AbGroup, Resolution)> {
    let n = groups.len();
    let iso_from = (0..maps.len())
        .rev()
        .take_while(|&t| maps[t].is_iso())
        .last()
        .unwrap_or(n - 1);
    if n > 1 && iso_from == n - 1 {
        return Err(Error::NotStabilized(format!(
            "{what}: the last connecting map is not an isomorphism after {n} stages"
        )));
    }
    let g = groups[n - 1].canonical();
    let res = Resolution {
        group: g.invariants(),
        iso_from,
        stages: n,
    };
    Ok((g, res))
}

/// Stagewise kernels of `id - α` with the induced connecting maps.
fn kernel_system(g: &IndAbGroup, alpha: &IndHom) -> Result<(Vec<AbGroup>, Vec<GroupHom>)> {
    let mut groups = Vec::new();
    let mut incl = Vec::new();
    for t in 0..g.stage_count() {
        let d = GroupHom::identity(g.stage(t)).sub(alpha.stage(t))?;
        let (k, b) = d.kernel();
        groups.push(k);
        incl.push(b);
    }
    let mut maps = Vec::new();
    for t in 0..g.stage_count() - 1 {
        let images = g.map(t).matrix() * &incl[t];
        let cols = (0..images.cols())
            .map(|j| {
                solve(&incl[t + 1], &images.column(j)).ok_or_else(|| {
                    Error::Dimension("kernel not preserved by the connecting map".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let m = IntMatrix::from_columns(incl[t + 1].cols(), &cols);
        maps.push(GroupHom::new(groups[t].clone(), groups[t + 1].clone(), m)?);
    }
    Ok((groups, maps))
}

/// Stagewise cokernels of `id - α` with the induced connecting maps.
fn cokernel_system(g: &IndAbGroup, alpha: &IndHom) -> Result<(Vec<AbGroup>, Vec<GroupHom>)> {
    let groups = (0..g.stage_count())
        .map(|t| {
            Ok(GroupHom::identity(g.stage(t))
                .sub(alpha.stage(t))?
                .cokernel())
        })
        .collect::<Result<Vec<_>>>()?;
    let maps = (0..g.stage_count() - 1)
        .map(|t| {
            GroupHom::new(
                groups[t].clone(),
                groups[t + 1].clone(),
                g.map(t).matrix().clone(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((groups, maps))
}

/// One Pimsner-Voiculescu step for a crossed product by `Z`:
/// `K_0 = coker(1-α_0) ⊕ ker(1-α_1)`, `K_1 = coker(1-α_1) ⊕ ker(1-α_0)`.
///
/// The sums split because the kernels are required to be free; a kernel
/// with torsion is reported as [`Error::ExtensionAmbiguous`].
pub fn pv_step(
    k0: &IndAbGroup,
    alpha0: &IndHom,
    k1: &IndAbGroup,
    alpha1: &IndHom,
    provenance: &str,
) -> Result<PvResult> {
    let (c0, c0_res) = {
        let (g, m) = cokernel_system(k0, alpha0)?;
        resolve(g, m, "coker(1 - α_0)")?
    };
    let (c1, c1_res) = {
        let (g, m) = cokernel_system(k1, alpha1)?;
        resolve(g, m, "coker(1 - α_1)")?
    };
    let (n0, n0_res) = {
        let (g, m) = kernel_system(k0, alpha0)?;
        resolve(g, m, "ker(1 - α_0)")?
    };
    let (n1, n1_res) = {
        let (g, m) = kernel_system(k1, alpha1)?;
        resolve(g, m, "ker(1 - α_1)")?
    };
    for (k, name) in [(&n0, "ker(1 - α_0)"), (&n1, "ker(1 - α_1)")] {
        if !k.is_free() {
            return Err(Error::ExtensionAmbiguous(format!(
                "{name} = {k} has torsion"
            )));
        }
    }
    Ok(PvResult {
        k0: c0.direct_sum(&n1).canonical(),
        k1: c1.direct_sum(&n0).canonical(),
        certificate: PvCertificate {
            coker_id_minus_alpha0: c0_res,
            ker_id_minus_alpha1: n1_res,
            coker_id_minus_alpha1: c1_res,
            ker_id_minus_alpha0: n0_res,
            alpha_provenance: provenance.into(),
        },
    })
}

/// [`pv_step`] for finitely generated groups and single maps.
pub fn pv_step_groups(
    k0: &AbGroup,
    alpha0: &GroupHom,
    k1: &AbGroup,
    alpha1: &GroupHom,
    provenance: &str,
) -> Result<PvResult> {
    let s0 = IndAbGroup::single(k0.clone());
    let s1 = IndAbGroup::single(k1.clone());
    pv_step(
        &s0,
        &IndHom::new(&s0, vec![alpha0.clone()])?,
        &s1,
        &IndHom::new(&s1, vec![alpha1.clone()])?,
        provenance,
    )
}

const FIRST_STEP_N: &str = "α_* = 2 on K_0(F) = Q, α_* = 1 on K_1(F) = Z (input)";
const FIRST_STEP_Z: &str = "α_* = 2 ⊕ 1 on K_0(F') = Q ⊕ Z, K_1(F') = 0 (input)";
const LATER_STEP: &str = "α_* = 1 on K_0 and K_1 (input)";

/// `K_*(B_1), ..., K_*(B_n)` (or the primed algebras in `Z` mode).
///
/// The first step uses the inductive system of `K_0(F)` (resp. `K_0(F')`)
/// with `stages` materialized stages under the round-robin schedule.
pub fn iterate_bn(n: usize, mode: Mode, stages: usize) -> Result<Vec<PvResult>> {
    assert!(n >= 1, "iterate_bn needs n >= 1");
    let first = match mode {
        Mode::N => {
            let q = IndAbGroup::from_rule(StageRule::Multiply(PrimeSchedule::RoundRobin), stages)?;
            let a0 = IndHom::constant(&q, &IntMatrix::scalar(1, 2))?;
            let z = IndAbGroup::single(AbGroup::free(1));
            let a1 = IndHom::identity(&z);
            pv_step(&q, &a0, &z, &a1, FIRST_STEP_N)?
        }
        Mode::Z => {
            let qz =
                IndAbGroup::from_rule(StageRule::MultiplyFirst(PrimeSchedule::RoundRobin), stages)?;
            let a0 = IndHom::constant(&qz, &IntMatrix::diagonal(&[2, 1]))?;
            let zero = IndAbGroup::single(AbGroup::zero());
            let a1 = IndHom::identity(&zero);
            pv_step(&qz, &a0, &zero, &a1, FIRST_STEP_Z)?
        }
    };
    let mut out = vec![first];
    while out.len() < n {
        let prev = out.last().expect("non-empty");
        let (k0, k1) = (prev.k0.clone(), prev.k1.clone());
        let next = pv_step_groups(
            &k0,
            &GroupHom::identity(&k0),
            &k1,
            &GroupHom::identity(&k1),
            LATER_STEP,
        )?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_step_gives_z_z() {
        for mode in [Mode::N, Mode::Z] {
            let r = iterate_bn(1, mode, 8).unwrap();
            assert_eq!(r[0].k0.to_string(), "Z", "{mode}");
            assert_eq!(r[0].k1.to_string(), "Z", "{mode}");
        }
    }

    #[test]
    fn ranks_double() {
        let r = iterate_bn(4, Mode::N, 6).unwrap();
        let ranks: Vec<_> = r.iter().map(|x| (x.k0.rank(), x.k1.rank())).collect();
        assert_eq!(ranks, vec![(1, 1), (2, 2), (4, 4), (8, 8)]);
        let z = iterate_bn(2, Mode::Z, 6).unwrap();
        assert_eq!((z[1].k0.rank(), z[1].k1.rank()), (2, 2));
    }

    #[test]
    fn trivial_groups() {
        let zero = AbGroup::zero();
        let id = GroupHom::identity(&zero);
        let r = pv_step_groups(&zero, &id, &zero, &id, "test").unwrap();
        assert!(r.k0.is_trivial() && r.k1.is_trivial());
    }

    #[test]
    fn torsion_kernel_is_ambiguous() {
        // α = -1 on Z/4: 1 - α = 2 has kernel Z/2
        let z4 = AbGroup::cyclic(4);
        let a = GroupHom::scalar(&z4, -1);
        let z = AbGroup::free(1);
        let id = GroupHom::identity(&z);
        let r = pv_step_groups(&z, &id, &z4, &a, "test");
        assert!(matches!(r, Err(Error::ExtensionAmbiguous(_))));
    }

    #[test]
    fn alpha_must_commute() {
        let g = IndAbGroup::from_rule(StageRule::Multiply(PrimeSchedule::RoundRobin), 3).unwrap();
        let z = AbGroup::free(1);
        let bad = vec![
            GroupHom::scalar(&z, 2),
            GroupHom::scalar(&z, 3),
            GroupHom::scalar(&z, 2),
        ];
        assert!(IndHom::new(&g, bad).is_err());
    }

    #[test]
    fn unstable_tail_is_reported() {
        // α = 1 on Z --×2--> Z: coker(1 - α) = Z at every stage but ×2 is not an iso
        let g = IndAbGroup::from_rule(StageRule::Multiply(PrimeSchedule::Explicit(vec![2, 2])), 3)
            .unwrap();
        let z = IndAbGroup::single(AbGroup::zero());
        let r = pv_step(&g, &IndHom::identity(&g), &z, &IndHom::identity(&z), "test");
        assert!(matches!(r, Err(Error::NotStabilized(_))));
    }
}
