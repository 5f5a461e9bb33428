use serde::Deserialize;
use serde_json::{json, Value};

use crate::args::Scenario;
use crate::output::Record;

#[derive(Debug, Deserialize)]
pub struct ExpectationFile {
    pub scenario: String,
    pub system: String,
    pub expectations: Vec<Expectation>,
}

#[derive(Debug, Deserialize)]
pub struct Expectation {
    pub case: String,
    pub expected: Value,
    pub provenance: String,
    pub basis: String,
}

pub fn load(scenario: Scenario) -> ExpectationFile {
    let text = match scenario {
        Scenario::Bd => include_str!("../expectations/bd.json"),
        Scenario::Bn => include_str!("../expectations/bn.json"),
        Scenario::Fprime => include_str!("../expectations/fprime.json"),
        Scenario::Bnprime => include_str!("../expectations/bnprime.json"),
    };
    serde_json::from_str(text).expect("bundled expectation files are valid")
}

/// Compares computed values against the file. A computed list is matched
/// against the prefix of an expected list; cases without a computed value
/// are skipped.
pub fn compare(file: &ExpectationFile, computed: &[(&str, Value)]) -> Vec<Record> {
    let mut out = Vec::new();
    for e in &file.expectations {
        let Some((_, got)) = computed.iter().find(|(c, _)| *c == e.case) else {
            continue;
        };
        let expected = match (&e.expected, got) {
            (Value::Array(want), Value::Array(have)) if have.len() <= want.len() => {
                Value::Array(want[..have.len()].to_vec())
            }
            (want, _) => want.clone(),
        };
        let human = format!(
            "computed {got}, expected {expected} ({}: {})",
            e.provenance, e.basis
        );
        out.push(
            Record::check(
                "expectation",
                &e.case,
                &expected == got,
                json!({
                    "expected": expected,
                    "computed": got,
                    "provenance": e.provenance,
                    "basis": e.basis,
                }),
            )
            .with_human(human),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_files_parse_and_name_their_scenario() {
        for (s, name) in [
            (Scenario::Bd, "bd"),
            (Scenario::Bn, "bn"),
            (Scenario::Fprime, "fprime"),
            (Scenario::Bnprime, "bnprime"),
        ] {
            let f = load(s);
            assert_eq!(f.scenario, name);
            assert!(!f.expectations.is_empty());
            for e in &f.expectations {
                assert!(
                    matches!(e.provenance.as_str(), "published" | "derived"),
                    "{e:?}"
                );
            }
        }
    }

    #[test]
    fn lists_compare_by_prefix() {
        let f = load(Scenario::Bn);
        let r = compare(&f, &[("k0_ranks", json!([1, 2, 4]))]);
        assert_eq!(r.len(), 1);
        assert!(!r[0].failed());
        let r = compare(&f, &[("k0_ranks", json!([1, 2, 3]))]);
        assert!(r[0].failed());
    }
}
