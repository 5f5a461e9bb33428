//! Suites for the ax+b action on adeles and for the mapping torus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::oracle::{mapping_torus_covariance, Bump, TorusSample};
use crate::profinite::{bc_character_covariance, mul_n, AxbElement, FiniteAdele, ProfiniteInteger};
use crate::suites::CaseReport;

fn random_rational(rng: &mut ChaCha8Rng, max: i64, nonzero: bool) -> (i64, i64) {
    loop {
        let n = rng.gen_range(-max..=max);
        let d = rng.gen_range(1..=max);
        if !nonzero || n != 0 {
            return (n, d);
        }
    }
}

/// `g·(h·x) = (gh)·x` on `count` seeded pairs in `P_Q` with numerators and
/// denominators bounded by `max`. Test points are rationals embedded
/// diagonally with `precision` digits at every prime `<= max`; the
/// rational value `(gh)(q)` serves as the oracle.
pub fn adele_suite(count: usize, max: i64, precision: u32, seed: u64) -> Vec<CaseReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let levels: Vec<(u64, u32)> = arith::primes_up_to(max as u64)
        .into_iter()
        .map(|p| (p, precision))
        .collect();
    let mut cases = Vec::with_capacity(count);
    for _ in 0..count {
        let elem = |rng: &mut ChaCha8Rng| {
            let (an, ad) = random_rational(rng, max, true);
            let (bn, bd) = random_rational(rng, max, false);
            AxbElement::from_ints(an, ad, bn, bd).expect("a is non-zero")
        };
        let g = elem(&mut rng);
        let h = elem(&mut rng);
        let (qn, qd) = random_rational(&mut rng, max, false);
        cases.push((g, h, BigRational::new(qn.into(), qd.into())));
    }
    let suite = "adele";
    let law = CaseReport::run(suite, "g(hx) = (gh)x", cases.iter(), |(g, h, q)| {
        let x = FiniteAdele::from_rational(q, &levels);
        let gh = g.compose(h);
        match (h.act(&x).and_then(|hx| g.act(&hx)), gh.act(&x)) {
            (Ok(a), Ok(b)) => a.agrees_with(&b) && b.contains_rational(&gh.apply_rational(q)),
            _ => false,
        }
    });
    let inverse = CaseReport::run(suite, "g^-1 (g x) = x", cases.iter(), |(g, _, q)| {
        let x = FiniteAdele::from_rational(q, &levels);
        g.act(&x)
            .and_then(|gx| g.inverse().act(&gx))
            .is_ok_and(|y| y.agrees_with(&x))
    });
    vec![law, inverse]
}

/// The image of `Ẑ` under multiplication by `n` is the cylinder `0 mod n`
/// of measure `1/n`.
pub fn measure_scaling_suite(bound: u64) -> Vec<CaseReport> {
    vec![CaseReport::run(
        "adele",
        "mul_n(Z^) = (0 mod n), measure 1/n",
        1..=bound,
        |&n| {
            mul_n(n, &ProfiniteInteger::unconstrained())
                .to_cylinder()
                .is_some_and(|c| {
                    c.modulus() == n as i128
                        && c.residue() == 0
                        && c.measure() == Ratio::new(1, n as i128)
                })
        },
    )]
}

/// `u e_γ = γ e_γ u` for every `γ = a/b ∈ Q/Z` with `b <= bound`.
pub fn bc_suite(bound: i64) -> Vec<CaseReport> {
    let gammas = (1..=bound).flat_map(|b| {
        (0..b)
            .filter(move |&a| arith::gcd(a as i128, b as i128) == 1)
            .map(move |a| (a, b))
    });
    vec![CaseReport::run(
        "adele",
        "u e_gamma = gamma e_gamma u",
        gammas,
        |&(a, b)| bc_character_covariance(Ratio::new(a, b), bound),
    )]
}

/// `F(t + 1) = U F(t) U*` for seeded samples of hat-function coefficients.
pub fn torus_suite(samples: usize, seed: u64) -> Vec<CaseReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let grid: Vec<BigRational> = (-16..=16).map(|k| r(k, 4)).collect();
    let cases: Vec<TorusSample> = (0..samples)
        .map(|_| {
            let terms = rng.gen_range(0..=3);
            let coefficients: BTreeMap<i64, Bump> = (0..terms)
                .map(|_| {
                    let n = rng.gen_range(-3..=3);
                    let bump = Bump::new(
                        r(rng.gen_range(-8..=8), 4),
                        r(rng.gen_range(1..=8), 4),
                        r(rng.gen_range(-5..=5), rng.gen_range(1..=5)),
                    );
                    (n, bump)
                })
                .collect();
            TorusSample { coefficients }
        })
        .collect();
    vec![CaseReport::run(
        "torus",
        "F(t+1) = U F(t) U* on the window interior",
        cases.iter(),
        |s| mapping_torus_covariance(s, &grid, 6),
    )]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let all = [
            adele_suite(50, 30, 12, 2),
            measure_scaling_suite(30),
            bc_suite(20),
            torus_suite(10, 4),
        ];
        for r in all.iter().flatten() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn bc_counts_reduced_fractions() {
        // Σ_{b <= 6} φ(b) = 1 + 1 + 2 + 2 + 4 + 2
        assert_eq!(bc_suite(6)[0].checked, 12);
    }
}
