//! Axiom reports: named pass/fail entries with a concrete witness on failure.

use std::fmt;

use serde::Serialize;

use crate::exactlin::{decode, Matrix};

/// The first coefficient where two maps differ. `indices` lists the input
/// basis multi-index followed by the output coordinate multi-index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub names: Vec<String>,
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(
            f,
            "({})=({}): lhs {} rhs {}",
            self.names.join(","),
            idx.join(","),
            self.lhs,
            self.rhs
        )
    }
}

/// Compares two maps with domain `⊗ input_dims` and codomain `⊗ output_dims`.
/// Returns the lexicographically first differing (input, output) pair.
pub fn compare(
    lhs: &Matrix,
    rhs: &Matrix,
    input_dims: &[usize],
    output_dims: &[usize],
) -> Option<Witness> {
    let names: Vec<String> = (0..input_dims.len())
        .map(|i| format!("in{i}"))
        .chain((0..output_dims.len()).map(|i| format!("out{i}")))
        .collect();
    compare_named(lhs, rhs, input_dims, output_dims, &names)
}

/// Like [`compare`] with caller-chosen index names (inputs then outputs).
pub fn compare_named<S: AsRef<str>>(
    lhs: &Matrix,
    rhs: &Matrix,
    input_dims: &[usize],
    output_dims: &[usize],
    names: &[S],
) -> Option<Witness> {
    assert_eq!(
        lhs.field(),
        rhs.field(),
        "compared maps over different fields"
    );
    assert_eq!(
        (lhs.rows(), lhs.cols()),
        (rhs.rows(), rhs.cols()),
        "compared maps differ in shape"
    );
    assert_eq!(
        input_dims.iter().product::<usize>(),
        lhs.cols(),
        "input dims do not match"
    );
    assert_eq!(
        output_dims.iter().product::<usize>(),
        lhs.rows(),
        "output dims do not match"
    );
    assert_eq!(names.len(), input_dims.len() + output_dims.len());
    for c in 0..lhs.cols() {
        for r in 0..lhs.rows() {
            if lhs.get(r, c) != rhs.get(r, c) {
                let mut indices = decode(c, input_dims);
                indices.extend(decode(r, output_dims));
                return Some(Witness {
                    names: names.iter().map(|s| s.as_ref().to_string()).collect(),
                    indices,
                    lhs: lhs.get(r, c).to_string(),
                    rhs: rhs.get(r, c).to_string(),
                });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn from_witness(id: impl Into<String>, witness: Option<Witness>) -> Check {
        Check {
            id: id.into(),
            passed: witness.is_none(),
            witness,
            note: None,
        }
    }

    pub fn boolean(id: impl Into<String>, passed: bool, note: Option<String>) -> Check {
        Check {
            id: id.into(),
            passed,
            witness: None,
            note,
        }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new() -> AxiomReport {
        AxiomReport::default()
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Whether the check `id` exists and passed.
    pub fn passed(&self, id: &str) -> bool {
        self.get(id).is_some_and(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{:<28} {}", c.id, if c.passed { "ok" } else { "FAIL" })?;
            if let Some(w) = &c.witness {
                write!(f, "  witness {w}")?;
            }
            if let Some(n) = &c.note {
                write!(f, "  ({n})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn first_difference_is_lexicographic_in_input() {
        let f = Field::Rational;
        let a = Matrix::from_ints(f, 2, 4, &[1, 0, 0, 0, 0, 0, 0, 0]);
        let b = Matrix::from_ints(f, 2, 4, &[1, 0, 0, 0, 0, 0, 5, 7]);
        let w = compare_named(&a, &b, &[2, 2], &[2], &["i", "j", "k"]).unwrap();
        assert_eq!(w.indices, vec![1, 0, 1]);
        assert_eq!(w.rhs, "5");
        assert!(compare(&a, &a, &[4], &[2]).is_none());
    }
}
