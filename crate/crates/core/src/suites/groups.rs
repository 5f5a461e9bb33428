//! K-theory regression suites.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith;
use crate::error::Result;
use crate::ktheory::{
    iterate_bn, pv_step, shift_embedding_check, AbGroup, DihedralOrder, IndAbGroup, IndHom,
    IntMatrix, PrimeSchedule,
};
use crate::suites::CaseReport;
use crate::word::Mode;

fn error_report(suite: &str, case: &str, e: crate::Error) -> Vec<CaseReport> {
    vec![CaseReport::new(suite, case, false, 0, Some(e.to_string()))]
}

/// The first step over `N`: `K_0(F) = Q` with `α = 2`, `K_1(F) = Z` with `α = 1`.
pub fn pv_b1_suite(stages: usize) -> Vec<CaseReport> {
    let case = "K(B_1) = (Z, Z) from alpha = 2 on Q, 1 on Z";
    let run = || -> Result<(AbGroup, AbGroup)> {
        let q = IndAbGroup::bunce_deddens(PrimeSchedule::RoundRobin, stages)?;
        let a0 = IndHom::constant(&q, &IntMatrix::scalar(1, 2))?;
        let z = IndAbGroup::single(AbGroup::free(1));
        let r = pv_step(&q, &a0, &z, &IndHom::identity(&z), "test input")?;
        Ok((r.k0, r.k1))
    };
    match run() {
        Ok((k0, k1)) => {
            let ok = k0.invariants() == AbGroup::free(1).invariants()
                && k1.invariants() == AbGroup::free(1).invariants();
            vec![CaseReport::new(
                "ktheory",
                case,
                ok,
                1,
                Some(format!("({k0}, {k1})")),
            )]
        }
        Err(e) => error_report("ktheory", case, e),
    }
}

/// Ranks `2^{k-1}` and no torsion for `K_*(B_k)`, `k <= n`.
pub fn iterate_bn_suite(n: usize, mode: Mode, stages: usize) -> Vec<CaseReport> {
    let case = format!("K(B_k) = (Z^2^(k-1), Z^2^(k-1)) for k <= {n}, mode {mode}");
    match iterate_bn(n, mode, stages) {
        Ok(steps) => {
            let bad = steps.iter().enumerate().find(|(k, r)| {
                let want = 1usize << k;
                r.k0.rank() != want || r.k1.rank() != want || !r.k0.is_free() || !r.k1.is_free()
            });
            let witness = match bad {
                Some((k, r)) => format!("k = {}: ({}, {})", k + 1, r.k0, r.k1),
                None => {
                    let last = steps.last().expect("n >= 1");
                    format!("({}, {})", last.k0, last.k1)
                }
            };
            vec![CaseReport::new(
                "ktheory",
                &case,
                bad.is_none(),
                steps.len(),
                Some(witness),
            )]
        }
        Err(e) => error_report("ktheory", &case, e),
    }
}

/// Rounds of the round-robin schedule after which every `d <= max` divides
/// the accumulated product.
pub fn rounds_for_divisors(max: u64) -> usize {
    let primes = arith::primes_up_to(max);
    primes
        .iter()
        .enumerate()
        .map(|(idx, &p)| {
            let mut e = 0;
            let mut q = 1;
            while q * p <= max {
                q *= p;
                e += 1;
            }
            idx + e
        })
        .max()
        .unwrap_or(1)
}

/// The class of `1` in the Bunce-Deddens `K_0` system is divisible by
/// every `d <= max`, each with a stage witness.
pub fn bunce_deddens_suite(max: u64) -> Vec<CaseReport> {
    let case = format!("[1] divisible by every d <= {max}");
    let rounds = rounds_for_divisors(max);
    let stages = rounds * (rounds + 1) / 2 + 1;
    let g = match IndAbGroup::bunce_deddens(PrimeSchedule::RoundRobin, stages) {
        Ok(g) => g,
        Err(e) => return error_report("colimit", &case, e),
    };
    let one = vec![BigInt::one()];
    let orbit = g
        .orbit(0, &one, stages - 1)
        .expect("stages are materialized");
    let mut latest = 0;
    let report = CaseReport::run("colimit", &case, 2..=max, |&d| {
        match g.divisibility_in_orbit(0, &orbit, &BigInt::from(d)) {
            Some(w) => {
                latest = latest.max(w.stage);
                true
            }
            None => false,
        }
    });
    let mut report = report;
    if report.passed {
        report.witness = Some(format!(
            "latest witness at stage {latest} of {}",
            stages - 1
        ));
    }
    let constant = {
        let z = AbGroup::free(1);
        let id = crate::ktheory::GroupHom::identity(&z);
        let c = IndAbGroup::from_rule(crate::ktheory::StageRule::Constant(id), 8)
            .expect("constant rule never runs out");
        CaseReport::run(
            "colimit",
            "constant (Z, id): [1] never divisible by 2",
            [()],
            |_| c.divisibility(0, &one, &BigInt::from(2), 7).ok() == Some(None),
        )
    };
    vec![report, constant]
}

/// The dihedral `K_0` system over the given primes: the image of stage 0
/// has rank 2 from stage 1 on, the stages are torsion-free, and `[1]`
/// becomes divisible by every applied prime. Both generator orders.
pub fn fprime_suite(primes: &[u64]) -> Vec<CaseReport> {
    let mut out = Vec::new();
    for (order, unit) in [(DihedralOrder::Standard, 0), (DihedralOrder::Reversed, 2)] {
        let case = format!("F' image rank 2, torsion-free, {order:?} order");
        let g = match IndAbGroup::dihedral(
            PrimeSchedule::Explicit(primes.to_vec()),
            order,
            primes.len() + 1,
        ) {
            Ok(g) => g,
            Err(e) => {
                out.extend(error_report("colimit", &case, e));
                continue;
            }
        };
        let cert = g.rank_certificate(0).expect("stage 0 exists");
        let ranks_ok = cert.image_ranks[1..].iter().all(|&r| r == 2) && cert.image_ranks[0] == 3;
        out.push(CaseReport::new(
            "colimit",
            &case,
            ranks_ok && cert.torsion_free_stages,
            cert.image_ranks.len(),
            Some(format!("image ranks {:?}", cert.image_ranks)),
        ));
        let mut unit_class = vec![BigInt::from(0); 3];
        unit_class[unit] = BigInt::one();
        out.push(CaseReport::run(
            "colimit",
            &format!("F' [1] divisible by each applied prime, {order:?} order"),
            primes.iter(),
            |&&p| {
                g.divisibility(0, &unit_class, &BigInt::from(p), primes.len())
                    .is_ok_and(|w| w.is_some())
            },
        ));
    }
    out
}

/// `V` unitary, `V^k = z·1` and `det V = ±z` for `k <= max`.
pub fn shift_embedding_suite(max: usize) -> Vec<CaseReport> {
    let reports: Vec<_> = (1..=max).map(|k| (k, shift_embedding_check(k))).collect();
    vec![
        CaseReport::run(
            "shift",
            "V V* = V* V = 1 and V^k = z",
            reports.iter(),
            |(_, r)| r.unitary && r.power_is_z,
        ),
        CaseReport::run("shift", "det V = ±z", reports.iter(), |(_, r)| {
            r.det_is_plus_minus_z()
        }),
    ]
}
