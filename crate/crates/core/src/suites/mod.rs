//! Bounded verification suites shared by the command line and the tests.
//!
//! Each suite returns one [`CaseReport`] per identity family: how many
//! instances were checked and, on failure, the first counterexample. On
//! success `witness` may carry a certificate summary instead.

mod algebra;
mod analysis;
mod dynamics;
mod groups;

use serde::Serialize;

pub use algebra::{lemma_comm_suite, partition_of_unity_check, relation_suite};
pub use analysis::{
    kms_suite, oracle_pair_suite, oracle_suite, trace_suite, window_convergence, window_suite,
};
pub use dynamics::{adele_suite, bc_suite, measure_scaling_suite, torus_suite};
pub use groups::{
    bunce_deddens_suite, fprime_suite, iterate_bn_suite, pv_b1_suite, rounds_for_divisors,
    shift_embedding_suite,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub suite: String,
    pub case: String,
    pub passed: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

impl CaseReport {
    pub fn new(
        suite: &str,
        case: &str,
        passed: bool,
        checked: usize,
        witness: Option<String>,
    ) -> Self {
        Self {
            suite: suite.into(),
            case: case.into(),
            passed,
            checked,
            witness,
        }
    }

    /// Checks every instance, stopping at the first failure.
    pub fn run<I, F>(suite: &str, case: &str, instances: I, mut check: F) -> Self
    where
        I: IntoIterator,
        I::Item: std::fmt::Debug,
        F: FnMut(&I::Item) -> bool,
    {
        let mut checked = 0;
        for inst in instances {
            checked += 1;
            if !check(&inst) {
                return Self::new(suite, case, false, checked, Some(format!("{inst:?}")));
            }
        }
        Self::new(suite, case, true, checked, None)
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_records_witness() {
        let r = CaseReport::run("t", "c", 1..=5, |&k| k < 3);
        assert!(!r.passed);
        assert_eq!(r.witness.as_deref(), Some("3"));
        assert_eq!(r.checked, 3);
        assert_eq!(r.status(), "fail");
    }
}
