//! Acceptance run: one line per criterion with its time budget.
//!
//! Built with `harness = false` so the lines show up in `cargo test` output
//! without `--nocapture`. Exits non-zero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use axb_core::suites::{self, CaseReport};
use axb_core::Mode;
use num_rational::BigRational;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Vec<CaseReport>,
}

fn relations() -> Vec<CaseReport> {
    let mut out = suites::relation_suite(200, Mode::N);
    out.extend(suites::relation_suite(200, Mode::Z));
    out
}

fn lemma() -> Vec<CaseReport> {
    suites::lemma_comm_suite(50)
}

fn oracle() -> Vec<CaseReport> {
    [(Mode::N, 101), (Mode::Z, 202)]
        .into_iter()
        .map(|(mode, seed)| suites::oracle_suite(10_000, 12, 10, mode, seed, 1000))
        .collect()
}

fn trace_kms() -> Vec<CaseReport> {
    let tol = BigRational::new(1.into(), 1000.into());
    let mut out = suites::trace_suite(1000);
    out.extend(suites::kms_suite(20, 20, 10_000, 7));
    out.extend(suites::window_suite(100, 100_000, &tol));
    out
}

fn ktheory() -> Vec<CaseReport> {
    let mut out = suites::pv_b1_suite(8);
    out.extend(suites::iterate_bn_suite(8, Mode::N, 8));
    out.extend(suites::iterate_bn_suite(8, Mode::Z, 8));
    out
}

fn colimits() -> Vec<CaseReport> {
    let mut out = suites::bunce_deddens_suite(500);
    out.extend(suites::fprime_suite(&[2, 3, 5, 7, 11, 13]));
    out
}

fn shift() -> Vec<CaseReport> {
    suites::shift_embedding_suite(64)
}

fn adeles() -> Vec<CaseReport> {
    let mut out = suites::adele_suite(1000, 100, 16, 13);
    out.extend(suites::measure_scaling_suite(100));
    out.extend(suites::bc_suite(60));
    out.extend(suites::torus_suite(200, 17));
    out
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "defining relations, n, m <= 200",
        budget: Duration::from_secs(30),
        run: relations,
    },
    Criterion {
        id: 2,
        title: "commutation identities, n, m <= 50",
        budget: Duration::from_secs(30),
        run: lemma,
    },
    Criterion {
        id: 3,
        title: "oracle equivalence, 10^4 words per mode",
        budget: Duration::from_secs(60),
        run: oracle,
    },
    Criterion {
        id: 4,
        title: "trace, KMS and window trace",
        budget: Duration::from_secs(60),
        run: trace_kms,
    },
    Criterion {
        id: 5,
        title: "K-theory of B_n, n <= 8",
        budget: Duration::from_secs(10),
        run: ktheory,
    },
    Criterion {
        id: 6,
        title: "colimit certificates",
        budget: Duration::from_secs(30),
        run: colimits,
    },
    Criterion {
        id: 7,
        title: "shift embedding, k <= 64",
        budget: Duration::from_secs(5),
        run: shift,
    },
    Criterion {
        id: 8,
        title: "adele dynamics and mapping torus",
        budget: Duration::from_secs(30),
        run: adeles,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let reports = (c.run)();
        let elapsed = start.elapsed();
        let bad: Vec<&CaseReport> = reports.iter().filter(|r| !r.passed).collect();
        let in_time = elapsed <= c.budget;
        let ok = bad.is_empty() && in_time;
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {}: {} ({}; {} cases, {} instances, {:.2?} of {:?})",
            c.id,
            if ok { "pass" } else { "fail" },
            c.title,
            reports.len(),
            reports.iter().map(|r| r.checked).sum::<usize>(),
            elapsed,
            c.budget,
        );
        for r in &bad {
            println!(
                "    {} / {}: {}",
                r.suite,
                r.case,
                r.witness.as_deref().unwrap_or("-")
            );
        }
        if !in_time {
            println!("    over budget");
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
