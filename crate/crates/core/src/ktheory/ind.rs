use num_bigint::BigInt;
use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::ktheory::{dihedral_k0_matrix, AbGroup, DihedralOrder, GroupHom, IntMatrix};

/// The prime applied at each stage of a Bunce-Deddens type system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSchedule {
    /// `2; 2, 3; 2, 3, 5; ...`: every prime recurs infinitely often.
    RoundRobin,
    /// A fixed finite list; stages beyond it do not exist.
    Explicit(Vec<u64>),
}

impl PrimeSchedule {
    pub fn prime(&self, stage: usize) -> Option<u64> {
        match self {
            PrimeSchedule::RoundRobin => Some(arith::round_robin_prime(stage)),
            PrimeSchedule::Explicit(ps) => ps.get(stage).copied(),
        }
    }

    pub fn primes(&self, count: usize) -> Result<Vec<u64>> {
        match self {
            PrimeSchedule::RoundRobin => Ok(arith::round_robin_primes(count)),
            PrimeSchedule::Explicit(ps) if ps.len() >= count => Ok(ps[..count].to_vec()),
            PrimeSchedule::Explicit(ps) => Err(Error::InsufficientStages {
                needed: count + 1,
                available: ps.len() + 1,
            }),
        }
    }
}

/// How further stages of an inductive system are generated.
#[derive(Clone, Debug)]
pub enum StageRule {
    /// `Z --×p--> Z`: the `K_0` system of the Bunce-Deddens algebra.
    Multiply(PrimeSchedule),
    /// `Z² --diag(p, 1)--> Z²`: a copy of the above next to a constant `Z`.
    MultiplyFirst(PrimeSchedule),
    /// `Z³` with the dihedral `K_0` matrices.
    Dihedral(PrimeSchedule, DihedralOrder),
    /// A fixed endomorphism repeated at every stage.
    Constant(GroupHom),
}

/// A sequence `G_0 → G_1 → ...` with finitely many materialized stages.
#[derive(Clone, Debug)]
pub struct IndAbGroup {
    rule: Option<StageRule>,
    stages: Vec<AbGroup>,
    maps: Vec<GroupHom>,
}

/// Witness that the class of `x ∈ G_s` is divisible by `d` in the colimit:
/// its image at `stage` equals `d·quotient`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisibilityWitness {
    pub divisor: String,
    pub stage: usize,
    pub image: Vec<String>,
    pub quotient: Vec<String>,
}

/// Ranks of the image of `G_s` in each later stage, and torsion of the
/// stages themselves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub source_stage: usize,
    pub image_ranks: Vec<usize>,
    pub stabilized_at: Option<usize>,
    pub torsion_free_stages: bool,
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl IndAbGroup {
    /// Materializes `stages` groups (so `stages - 1` connecting maps).
    pub fn from_rule(rule: StageRule, stages: usize) -> Result<Self> {
        assert!(stages >= 1, "an inductive system has at least one stage");
        let first = match &rule {
            StageRule::Multiply(_) => AbGroup::free(1),
            StageRule::MultiplyFirst(_) => AbGroup::free(2),
            StageRule::Dihedral(..) => AbGroup::free(3),
            StageRule::Constant(h) => h.source().clone(),
        };
        let mut g = Self {
            rule: Some(rule),
            stages: vec![first],
            maps: Vec::new(),
        };
        g.extend_to(stages)?;
        Ok(g)
    }

    /// A system with explicitly given stages and maps.
    pub fn from_parts(stages: Vec<AbGroup>, maps: Vec<GroupHom>) -> Result<Self> {
        if stages.is_empty() || maps.len() + 1 != stages.len() {
            return Err(Error::Dimension(format!(
                "{} stages need {} maps, got {}",
                stages.len(),
                stages.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (t, m) in maps.iter().enumerate() {
            if m.source().generators() != stages[t].generators()
                || m.target().generators() != stages[t + 1].generators()
            {
                return Err(Error::Dimension(format!(
                    "map {t} does not match its stages"
                )));
            }
        }
        Ok(Self {
            rule: None,
            stages,
            maps,
        })
    }

    /// The constant system on a single group.
    pub fn single(g: AbGroup) -> Self {
        Self {
            rule: None,
            stages: vec![g],
            maps: Vec::new(),
        }
    }

    pub fn bunce_deddens(schedule: PrimeSchedule, stages: usize) -> Result<Self> {
        Self::from_rule(StageRule::Multiply(schedule), stages)
    }

    pub fn dihedral(schedule: PrimeSchedule, order: DihedralOrder, stages: usize) -> Result<Self> {
        Self::from_rule(StageRule::Dihedral(schedule, order), stages)
    }

    fn next_map(&self, t: usize) -> Result<GroupHom> {
        let rule = self.rule.as_ref().ok_or(Error::InsufficientStages {
            needed: t + 2,
            available: self.stages.len(),
        })?;
        let prime = |s: &PrimeSchedule| {
            s.prime(t).ok_or(Error::InsufficientStages {
                needed: t + 2,
                available: t + 1,
            })
        };
        Ok(match rule {
            StageRule::Multiply(s) => GroupHom::scalar(&AbGroup::free(1), prime(s)? as i64),
            StageRule::MultiplyFirst(s) => {
                let z2 = AbGroup::free(2);
                GroupHom::new(z2.clone(), z2, IntMatrix::diagonal(&[prime(s)? as i64, 1]))?
            }
            StageRule::Dihedral(s, order) => {
                let z3 = AbGroup::free(3);
                GroupHom::new(z3.clone(), z3, dihedral_k0_matrix(prime(s)?, *order)?)?
            }
            StageRule::Constant(h) => h.clone(),
        })
    }

    /// Materializes stages up to `stages` in total.
    pub fn extend_to(&mut self, stages: usize) -> Result<()> {
        while self.stages.len() < stages {
            let t = self.stages.len() - 1;
            let m = self.next_map(t)?;
            self.stages.push(m.target().clone());
            self.maps.push(m);
        }
        Ok(())
    }

    pub fn stage_count(&self) -> usize {
        self.stages.len()
    }

    pub fn stage(&self, t: usize) -> &AbGroup {
        &self.stages[t]
    }

    pub fn stages(&self) -> &[AbGroup] {
        &self.stages
    }

    /// The connecting map `G_t → G_{t+1}`.
    pub fn map(&self, t: usize) -> &GroupHom {
        &self.maps[t]
    }

    pub fn maps(&self) -> &[GroupHom] {
        &self.maps
    }

    fn check_stage(&self, t: usize) -> Result<()> {
        if t >= self.stages.len() {
            return Err(Error::InsufficientStages {
                needed: t + 1,
                available: self.stages.len(),
            });
        }
        Ok(())
    }

    /// The composite `G_s → G_t` for `s <= t`.
    pub fn composite(&self, s: usize, t: usize) -> Result<GroupHom> {
        self.check_stage(t)?;
        assert!(s <= t, "composite needs s <= t");
        let mut acc = GroupHom::identity(&self.stages[s]);
        for m in &self.maps[s..t] {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Inserts an identity map after stage `pos`, duplicating that stage.
    pub fn with_identity_inserted(&self, pos: usize) -> Self {
        let mut stages = self.stages.clone();
        let mut maps = self.maps.clone();
        stages.insert(pos + 1, stages[pos].clone());
        maps.insert(pos, GroupHom::identity(&stages[pos]));
        Self {
            rule: None,
            stages,
            maps,
        }
    }

    /// Replaces maps `pos` and `pos + 1` by their composite, dropping stage `pos + 1`.
    pub fn with_maps_composed(&self, pos: usize) -> Result<Self> {
        if pos + 1 >= self.maps.len() {
            return Err(Error::InsufficientStages {
                needed: pos + 3,
                available: self.stages.len(),
            });
        }
        let mut stages = self.stages.clone();
        let mut maps = self.maps.clone();
        let c = maps[pos + 1].compose(&maps[pos])?;
        maps.splice(pos..pos + 2, [c]);
        stages.remove(pos + 1);
        Ok(Self {
            rule: None,
            stages,
            maps,
        })
    }

    /// Images of `x ∈ G_s` in `G_s, G_{s+1}, ..., G_upto`.
    pub fn orbit(&self, s: usize, x: &[BigInt], upto: usize) -> Result<Vec<Vec<BigInt>>> {
        self.check_stage(upto)?;
        let mut out = vec![x.to_vec()];
        for m in &self.maps[s..upto] {
            let next = m.apply(out.last().expect("non-empty orbit"));
            out.push(next);
        }
        Ok(out)
    }

    /// First stage `t <= upto` at which the image of `x ∈ G_s` is divisible
    /// by `d`. `Ok(None)` means no materialized stage witnesses it.
    pub fn divisibility(
        &self,
        s: usize,
        x: &[BigInt],
        d: &BigInt,
        upto: usize,
    ) -> Result<Option<DivisibilityWitness>> {
        let orbit = self.orbit(s, x, upto)?;
        Ok(self.divisibility_in_orbit(s, &orbit, d))
    }

    /// [`divisibility`](Self::divisibility) against a precomputed orbit.
    pub fn divisibility_in_orbit(
        &self,
        s: usize,
        orbit: &[Vec<BigInt>],
        d: &BigInt,
    ) -> Option<DivisibilityWitness> {
        orbit.iter().enumerate().find_map(|(k, v)| {
            let stage = s + k;
            self.stages[stage]
                .divide(v, d)
                .map(|q| DivisibilityWitness {
                    divisor: d.to_string(),
                    stage,
                    image: strings(v),
                    quotient: strings(&q),
                })
        })
    }

    /// Rank of the image of `G_s` in `G_t`.
    pub fn image_rank(&self, s: usize, t: usize) -> Result<usize> {
        Ok(self.composite(s, t)?.image().rank())
    }

    /// Image ranks of `G_s` in every materialized later stage.
    pub fn rank_certificate(&self, s: usize) -> Result<RankCertificate> {
        self.check_stage(s)?;
        let mut image_ranks = Vec::new();
        let mut acc = GroupHom::identity(&self.stages[s]);
        image_ranks.push(acc.image().rank());
        for m in &self.maps[s..] {
            acc = m.compose(&acc)?;
            image_ranks.push(acc.image().rank());
        }
        let last = *image_ranks.last().expect("at least one stage");
        let stabilized_at = image_ranks
            .iter()
            .rposition(|&r| r != last)
            .map_or(Some(s), |i| {
                (i + 1 < image_ranks.len()).then_some(s + i + 1)
            });
        Ok(RankCertificate {
            source_stage: s,
            image_ranks,
            stabilized_at,
            torsion_free_stages: self.stages.iter().all(AbGroup::is_free),
        })
    }
}
