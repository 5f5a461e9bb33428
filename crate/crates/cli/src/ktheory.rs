use num_bigint::BigInt;
use serde_json::{json, Value};

use axb_core::arith;
use axb_core::ktheory::{
    iterate_bn, shift_embedding_check, AbGroup, DihedralOrder, IndAbGroup, PrimeSchedule,
};
use axb_core::suites::rounds_for_divisors;
use axb_core::{Error, Mode};

use crate::args::{Order, Scenario};
use crate::expect;
use crate::output::Record;

pub struct Options {
    pub stages: Option<usize>,
    pub bound: Option<i64>,
    pub n: usize,
    pub primes: Option<Vec<u64>>,
    pub order: Order,
}

const DEFAULT_STAGES: usize = 8;

fn group_json(g: &AbGroup) -> Value {
    let inv = g.invariants();
    json!({
        "group": {
            "rank": inv.rank,
            "torsion": inv.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        },
        "text": inv.to_string(),
    })
}

/// Runs a scenario. `bn` under `--mode Z` is the flip case `bnprime`.
pub fn run(scenario: Scenario, mode: Mode, opts: &Options) -> axb_core::Result<Vec<Record>> {
    let scenario = match (scenario, mode) {
        (Scenario::Bn, Mode::Z) => Scenario::Bnprime,
        (s, _) => s,
    };
    let file = expect::load(scenario);
    let mut out = vec![Record::value(
        "ktheory",
        &file.scenario,
        file.system.clone(),
    )];
    let computed = match scenario {
        Scenario::Bd => bunce_deddens(opts, &mut out)?,
        Scenario::Bn => bn(Mode::N, opts, &mut out)?,
        Scenario::Bnprime => bn(Mode::Z, opts, &mut out)?,
        Scenario::Fprime => fprime(opts, &mut out)?,
    };
    let refs: Vec<(&str, Value)> = computed.iter().map(|(c, v)| (*c, v.clone())).collect();
    out.extend(expect::compare(&file, &refs));
    Ok(out)
}

type Computed = Vec<(&'static str, Value)>;

fn unit_divisible(
    g: &IndAbGroup,
    unit: &[BigInt],
    primes: &[u64],
    out: &mut Vec<Record>,
) -> axb_core::Result<bool> {
    let last = g.stage_count() - 1;
    let mut all = true;
    for &p in primes {
        let w = g.divisibility(0, unit, &BigInt::from(p), last)?;
        all &= w.is_some();
        let witness = match w {
            Some(w) => json!({"stage": w.stage, "image": w.image, "quotient": w.quotient}),
            None => Value::Null,
        };
        let human = match &witness {
            Value::Null => format!("no witness within {} stages", last + 1),
            w => format!(
                "at stage {}: image {} = {p} * {}",
                w["stage"], w["image"], w["quotient"]
            ),
        };
        out.push(
            Record::check(
                "certificate",
                &format!("[1] divisible by {p}"),
                !witness.is_null(),
                witness,
            )
            .with_human(human),
        );
    }
    Ok(all)
}

fn bunce_deddens(opts: &Options, out: &mut Vec<Record>) -> axb_core::Result<Computed> {
    let mut stages = opts.stages.unwrap_or(DEFAULT_STAGES);
    if let Some(d) = opts.bound {
        let r = rounds_for_divisors(d as u64);
        let needed = r * (r + 1) / 2 + 1;
        if opts.stages.is_some_and(|s| s < needed) {
            return Err(Error::InsufficientStages {
                needed,
                available: stages,
            });
        }
        stages = stages.max(needed);
    }
    let g = IndAbGroup::bunce_deddens(PrimeSchedule::RoundRobin, stages)?;
    let applied: Vec<u64> = (0..stages - 1).map(arith::round_robin_prime).collect();
    for t in 0..stages {
        let mut w = group_json(g.stage(t));
        let mut human = g.stage(t).invariants().to_string();
        if t > 0 {
            w["map"] = json!(format!("x{}", applied[t - 1]));
            human.push_str(&format!(", map x{} from stage {}", applied[t - 1], t - 1));
        }
        out.push(Record::value("K_0", &format!("stage {t}"), w).with_human(human));
    }
    let one = vec![BigInt::from(1)];
    let mut distinct = applied.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let divisible = unit_divisible(&g, &one, &distinct, out)?;
    if let Some(d) = opts.bound {
        let orbit = g.orbit(0, &one, stages - 1)?;
        for k in 2..=d as u64 {
            let w = g.divisibility_in_orbit(0, &orbit, &BigInt::from(k));
            let witness = w.map_or(Value::Null, |w| json!({"stage": w.stage}));
            let human = match &witness {
                Value::Null => format!("no witness within {stages} stages"),
                w => format!("at stage {}", w["stage"]),
            };
            out.push(
                Record::check(
                    "certificate",
                    &format!("[1] divisible by {k}"),
                    !witness.is_null(),
                    witness,
                )
                .with_human(human),
            );
        }
    }
    let all_z = g.stages().iter().all(|s| s.invariants().to_string() == "Z");
    let mut degree = json!(1);
    for &p in &distinct {
        let r = shift_embedding_check(p as usize);
        if !r.passed() || r.det.unit_degree() != Some(1) {
            degree = json!(r.det.unit_degree());
        }
    }
    Ok(vec![
        ("stage_groups", json!(if all_z { "Z" } else { "other" })),
        ("unit_divisible_by_applied_primes", json!(divisible)),
        ("k1_connecting_degree", degree),
    ])
}

fn bn(mode: Mode, opts: &Options, out: &mut Vec<Record>) -> axb_core::Result<Computed> {
    if opts.n == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    let steps = iterate_bn(opts.n, mode, opts.stages.unwrap_or(DEFAULT_STAGES))?;
    let name = if mode == Mode::N { "B" } else { "B'" };
    for (k, r) in steps.iter().enumerate() {
        let human = format!(
            "K_0 = {}, K_1 = {}; {}",
            r.k0, r.k1, r.certificate.alpha_provenance
        );
        out.push(
            Record::value(
                "pv",
                &format!("{name}_{}", k + 1),
                json!({
                    "k0": group_json(&r.k0),
                    "k1": group_json(&r.k1),
                    "alpha": r.certificate.alpha_provenance,
                }),
            )
            .with_human(human),
        );
    }
    let ranks = |f: fn(&axb_core::ktheory::PvResult) -> &AbGroup| -> Value {
        steps.iter().map(|r| f(r).rank()).collect::<Vec<_>>().into()
    };
    let torsion: Vec<String> = steps
        .iter()
        .flat_map(|r| r.k0.torsion().into_iter().chain(r.k1.torsion()))
        .map(|t| t.to_string())
        .collect();
    Ok(vec![
        ("k0_ranks", ranks(|r| &r.k0)),
        ("k1_ranks", ranks(|r| &r.k1)),
        ("torsion", json!(torsion)),
    ])
}

fn fprime(opts: &Options, out: &mut Vec<Record>) -> axb_core::Result<Computed> {
    let primes = match (&opts.primes, opts.stages) {
        (Some(p), Some(s)) if s > p.len() + 1 => {
            return Err(Error::InsufficientStages {
                needed: s,
                available: p.len() + 1,
            })
        }
        (Some(p), Some(s)) => p[..s.saturating_sub(1)].to_vec(),
        (Some(p), None) => p.clone(),
        (None, s) => arith::first_primes(s.unwrap_or(7).saturating_sub(1)),
    };
    if primes.is_empty() {
        return Err(Error::InsufficientStages {
            needed: 2,
            available: 1,
        });
    }
    let order = match opts.order {
        Order::Standard => DihedralOrder::Standard,
        Order::Reversed => DihedralOrder::Reversed,
    };
    let stages = primes.len() + 1;
    let g = IndAbGroup::dihedral(PrimeSchedule::Explicit(primes.clone()), order, stages)?;
    for t in 0..stages {
        let mut w = group_json(g.stage(t));
        let mut human = g.stage(t).invariants().to_string();
        if t > 0 {
            let m = g.map(t - 1).matrix().to_string();
            human.push_str(&format!(
                ", map {m} (p = {}) from stage {}",
                primes[t - 1],
                t - 1
            ));
            w["map"] = json!(m);
            w["prime"] = json!(primes[t - 1]);
        }
        out.push(Record::value("K_0", &format!("stage {t}"), w).with_human(human));
    }
    let cert = g.rank_certificate(0)?;
    let human = format!(
        "{:?}, stable from stage {}, stages torsion-free: {}",
        cert.image_ranks,
        cert.stabilized_at
            .map_or("-".to_string(), |s| s.to_string()),
        cert.torsion_free_stages
    );
    out.push(Record::value("certificate", "image ranks of stage 0", json!(cert)).with_human(human));
    let unit_index = match order {
        DihedralOrder::Standard => 0,
        DihedralOrder::Reversed => 2,
    };
    let mut unit = vec![BigInt::from(0); 3];
    unit[unit_index] = BigInt::from(1);
    let mut distinct = primes.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let divisible = unit_divisible(&g, &unit, &distinct, out)?;
    Ok(vec![
        ("initial_image_rank", json!(cert.image_ranks[0])),
        ("stabilized_image_rank", json!(cert.image_ranks.last())),
        ("torsion_free_stages", json!(cert.torsion_free_stages)),
        ("unit_divisible_by_applied_primes", json!(divisible)),
    ])
}
