//! Problem files: a JSON document with `name`, exactly one of `semigroup`
//! or `lattice`, and optional `variables`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::{lattice_from_semigroup, DegreeClass, LatticeBasis, SemigroupMatrix};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    name: String,
    semigroup: Option<Vec<Vec<i64>>>,
    lattice: Option<Vec<Vec<i64>>>,
    variables: Option<Vec<String>>,
}

/// A validated problem with its pointed lattice.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    pub name: String,
    pub semigroup: Option<SemigroupMatrix>,
    pub lattice: LatticeBasis,
    pub variables: Vec<String>,
}

fn invalid(field: &str, err: impl std::fmt::Display) -> Error {
    Error::Invalid {
        field: field.to_string(),
        message: err.to_string(),
    }
}

pub fn parse_spec(path: &Path) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path).map_err(|e| invalid("path", format!("{}: {e}", path.display())))?;
    parse_spec_str(&text)
}

pub fn parse_spec_str(text: &str) -> Result<ProblemSpec> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let (semigroup, lattice, n) = match (raw.semigroup, raw.lattice) {
        (Some(_), Some(_)) => return Err(invalid("semigroup", "give either `semigroup` or `lattice`, not both")),
        (None, None) => return Err(invalid("semigroup", "one of `semigroup` or `lattice` is required")),
        (Some(rows), None) => {
            let a = SemigroupMatrix::new(rows).map_err(|e| invalid("semigroup", e))?;
            let l = lattice_from_semigroup(&a).map_err(|e| invalid("semigroup", e))?;
            let n = a.num_generators();
            (Some(a), l, n)
        }
        (None, Some(rows)) => {
            let n = match (&raw.variables, rows.first()) {
                (Some(v), _) => v.len(),
                (None, Some(r)) => r.len(),
                (None, None) => {
                    return Err(invalid("variables", "an empty lattice needs `variables` to fix n"))
                }
            };
            if n == 0 {
                return Err(invalid("variables", "at least one variable is required"));
            }
            let l = if rows.is_empty() {
                LatticeBasis::zero(n)
            } else {
                LatticeBasis::new(rows, n).map_err(|e| invalid("lattice", e))?
            };
            (None, l, n)
        }
    };
    let variables = match raw.variables {
        Some(v) if v.len() != n => {
            return Err(invalid(
                "variables",
                Error::DimensionMismatch {
                    expected: n,
                    found: v.len(),
                },
            ))
        }
        Some(v) => v,
        None => (1..=n).map(|i| format!("x{i}")).collect(),
    };
    Ok(ProblemSpec {
        name: raw.name,
        semigroup,
        lattice,
        variables,
    })
}

/// `"10,8"` → `[10, 8]`.
pub fn parse_vector(text: &str) -> Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| invalid("degree", format!("`{t}`: {e}")))
        })
        .collect()
}

impl ProblemSpec {
    /// Reads a degree as a semigroup degree when a semigroup is given, and
    /// as an exponent-vector representative otherwise.
    pub fn degree_class(&self, v: &[i64]) -> Result<DegreeClass> {
        match &self.semigroup {
            Some(a) => Ok(DegreeClass::new(a.preimage(v)?)),
            None => self.lattice.class_of(v),
        }
    }

    pub fn semigroup_degree(&self, b: &DegreeClass) -> Option<Vec<i64>> {
        self.semigroup
            .as_ref()
            .map(|a| a.degree_of(b.representative()))
    }
}
