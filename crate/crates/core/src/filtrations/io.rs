//! The filtration interchange format: a JSON document
//!
//! ```json
//! {
//!   "rank": 3,
//!   "arms": [
//!     [ {"index": 1, "basis": [["1","0","0"], ["0","1","0"]]},
//!       {"index": 2, "basis": [["1","0","0"]]} ],
//!     ...
//!   ]
//! }
//! ```
//!
//! with exactly three arms. Entries are exact rationals written as `"p/q"`
//! or `"p"`; decimals are rejected. The subspace at index `i` is that of the
//! last step with index `<= i` (the full space before the first step, zero
//! after the last).

use serde::{Deserialize, Serialize};

use super::{Filtration, FiltrationTriple, SubspaceBasis};
use crate::{format_rational, parse_rational, Int, Rational};

#[derive(Debug, Serialize, Deserialize)]
struct StepRecord {
    index: i64,
    basis: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TripleRecord {
    rank: usize,
    arms: Vec<Vec<StepRecord>>,
}

/// Parse a filtration triple from its JSON format. Error messages carry the
/// JSON position (for syntax errors) or the offending arm and step index.
pub fn triple_from_json(text: &str) -> Result<FiltrationTriple<Int>, String> {
    let record: TripleRecord =
        serde_json::from_str(text).map_err(|e| format!("invalid filtration file: {e}"))?;
    if record.arms.len() != 3 {
        return Err(format!(
            "a filtration triple needs exactly 3 arms, found {}",
            record.arms.len()
        ));
    }
    let mut arms: Vec<Filtration<Int>> = Vec::with_capacity(3);
    for (arm_no, arm) in record.arms.iter().enumerate() {
        let mut steps = Vec::with_capacity(arm.len());
        for step in arm {
            let mut vectors: Vec<Vec<Rational>> = Vec::with_capacity(step.basis.len());
            for (vec_no, vector) in step.basis.iter().enumerate() {
                let parsed: Result<Vec<Rational>, String> =
                    vector.iter().map(|s| parse_rational(s)).collect();
                let parsed = parsed.map_err(|e| {
                    format!(
                        "arm {}, step index {}, vector {}: {e}",
                        arm_no + 1,
                        step.index,
                        vec_no + 1
                    )
                })?;
                vectors.push(parsed);
            }
            let subspace = SubspaceBasis::new(record.rank, vectors)
                .map_err(|e| format!("arm {}, step index {}: {e}", arm_no + 1, step.index))?;
            steps.push((step.index, subspace));
        }
        let filtration =
            Filtration::new_for_arm(arm_no + 1, record.rank, steps).map_err(|e| e.to_string())?;
        arms.push(filtration);
    }
    FiltrationTriple::new([arms[0].clone(), arms[1].clone(), arms[2].clone()])
        .map_err(|e| e.to_string())
}

/// Serialize a triple back to its JSON format.
pub fn triple_to_json(t: &FiltrationTriple<Int>) -> String {
    let record = TripleRecord {
        rank: t.ambient_dim(),
        arms: t
            .arms()
            .iter()
            .map(|arm| {
                arm.steps()
                    .iter()
                    .map(|(index, subspace)| StepRecord {
                        index: *index,
                        basis: subspace
                            .basis()
                            .iter()
                            .map(|v| v.iter().map(format_rational).collect())
                            .collect(),
                    })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string_pretty(&record).expect("serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtrations::chern;

    const ALL_ONES: &str = r#"{
        "rank": 3,
        "arms": [
            [ {"index": 1, "basis": [["1","0","0"],["0","1","0"]]},
              {"index": 2, "basis": [["1","0","0"]]},
              {"index": 3, "basis": []} ],
            [ {"index": 1, "basis": [["0","1","0"],["0","0","1"]]},
              {"index": 2, "basis": [["0","0","1"]]},
              {"index": 3, "basis": []} ],
            [ {"index": 1, "basis": [["1","1","1"],["0","1","2"]]},
              {"index": 2, "basis": [["1","1","1"]]},
              {"index": 3, "basis": []} ]
        ]
    }"#;

    #[test]
    fn parse_and_compute() {
        let t = triple_from_json(ALL_ONES).unwrap();
        let c = chern(&t).unwrap();
        assert_eq!((c.c1, c.c2), (9, 30));
    }

    #[test]
    fn roundtrip() {
        let t = triple_from_json(ALL_ONES).unwrap();
        let again = triple_from_json(&triple_to_json(&t)).unwrap();
        assert_eq!(t, again);
    }

    #[test]
    fn errors_name_the_arm() {
        let bad = ALL_ONES.replace("\"0\",\"1\",\"2\"", "\"0\",\"1\",\"0.5\"");
        let err = triple_from_json(&bad).unwrap_err();
        assert!(err.contains("arm 3"), "{err}");
        assert!(err.contains("decimal"), "{err}");
    }

    #[test]
    fn wrong_arm_count_rejected() {
        let err = triple_from_json(r#"{"rank": 2, "arms": []}"#).unwrap_err();
        assert!(err.contains("3 arms"), "{err}");
    }
}
