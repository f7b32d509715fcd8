//! Command-line front end: problem files, commands and JSON reports.

mod spec;
mod verify;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fiber::{enumerate_fiber, DegreeScan, Fiber, Monomial};
use crate::homology::{gcd_complex, BettiTable, Field};
use crate::lattice::DegreeClass;
use crate::scarf::{
    algebraic_scarf_subcomplex, build_generalized_scarf_complex, indispensable_binomials_in,
    minimal_generators_in, strongly_algebraic_subcomplex, verify_zero_composition,
    AlgebraicComplex, BasicComponent, Binomial, ScarfPoset, StrongMode,
};

pub use spec::{parse_spec, parse_spec_str, parse_vector, ProblemSpec};
pub use verify::{verify_fixture, Check, Verification, FIXTURES};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Generalized,
    Scarf,
    Strong,
}

impl ComplexKind {
    fn name(self) -> &'static str {
        match self {
            ComplexKind::Generalized => "generalized",
            ComplexKind::Scarf => "scarf",
            ComplexKind::Strong => "strong",
        }
    }
}

fn mode_name(mode: StrongMode) -> &'static str {
    match mode {
        StrongMode::Strict => "strict",
        StrongMode::Paper => "paper",
    }
}

#[derive(Clone, Debug)]
pub enum Command {
    Fiber { degree: Vec<i64> },
    Betti { bound: i64, field: Field },
    Components { bound: i64 },
    Complex { kind: ComplexKind, bound: i64, mode: StrongMode },
    Indispensable { bound: i64 },
    Generators { bound: i64 },
    /// Returns the DOT text in the report's `dot` field; the caller writes it.
    ExportDot { degree: Vec<i64> },
}

/// A versioned JSON report.
#[derive(Clone, Debug)]
pub struct Report {
    pub command: &'static str,
    pub value: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.value).expect("reports are plain JSON")
    }
}

fn envelope(
    spec: &ProblemSpec,
    command: &'static str,
    bound: Option<i64>,
    field: Option<Field>,
    mode: Option<StrongMode>,
    result: Value,
) -> Report {
    Report {
        command,
        value: json!({
            "format": FORMAT_VERSION,
            "name": spec.name,
            "command": command,
            "provenance": {
                "version": env!("CARGO_PKG_VERSION"),
                "bound": bound,
                "field": field.map(|f| f.to_string()),
                "mode": mode.map(mode_name),
            },
            "result": result,
        }),
    }
}

fn degree_json(spec: &ProblemSpec, b: &DegreeClass) -> Value {
    let mut v = json!({ "representative": b.representative() });
    if let Some(d) = spec.semigroup_degree(b) {
        v["semigroup_degree"] = json!(d);
    }
    v
}

fn monomial_json(spec: &ProblemSpec, m: &Monomial) -> Value {
    json!(m.format(&spec.variables))
}

fn set_json(spec: &ProblemSpec, set: &[Monomial]) -> Value {
    Value::Array(set.iter().map(|m| monomial_json(spec, m)).collect())
}

/// The fiber of a user-supplied degree, labelled by its first monomial when nonempty.
fn fiber_for(spec: &ProblemSpec, degree: &[i64]) -> Result<Fiber> {
    let b = spec.degree_class(degree)?;
    let mut fiber = enumerate_fiber(&spec.lattice, b.representative())?;
    fiber.degree = match fiber.members.first() {
        Some(m) => DegreeClass::new(m.exponents().to_vec()),
        None => DegreeClass::new(spec.lattice.reduce(b.representative())),
    };
    Ok(fiber)
}

fn component_json(spec: &ProblemSpec, c: &BasicComponent) -> Value {
    json!({
        "degree": degree_json(spec, &c.degree),
        "size": c.len(),
        "monomials": set_json(spec, &c.monomials),
        "full_fiber": c.full_fiber,
        "witness": c.witness.members(),
    })
}

fn binomial_json(spec: &ProblemSpec, b: &Binomial) -> Value {
    json!({
        "degree": degree_json(spec, &b.degree),
        "binomial": b.format(&spec.variables),
        "lead": b.lead.exponents(),
        "trail": b.trail.exponents(),
    })
}

pub fn betti_json(spec: &ProblemSpec, table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .entries()
        .iter()
        .map(|e| {
            json!({
                "i": e.index,
                "degree": degree_json(spec, &e.degree),
                "value": e.value,
            })
        })
        .collect();
    json!({
        "scan_bound": table.scan_bound,
        "totals": table.totals(),
        "entries": entries,
    })
}

pub fn complex_json(spec: &ProblemSpec, x: &AlgebraicComplex) -> Value {
    let ranks = x.ranks();
    let basis: Vec<Value> = (0..ranks.len())
        .map(|i| {
            Value::Array(
                x.basis(i)
                    .iter()
                    .map(|c| {
                        json!({
                            "degree": degree_json(spec, &c.degree),
                            "monomials": set_json(spec, &c.monomials),
                        })
                    })
                    .collect(),
            )
        })
        .collect();
    let differentials: Vec<Value> = (1..ranks.len())
        .map(|i| {
            Value::Array(
                (0..ranks[i])
                    .map(|col| {
                        let entries: Vec<Value> = x
                            .differential(i, col)
                            .iter()
                            .map(|e| {
                                json!({
                                    "row": e.row,
                                    "sign": e.coefficient.sign,
                                    "monomial": monomial_json(spec, &e.coefficient.monomial),
                                })
                            })
                            .collect();
                        json!({ "column": col, "entries": entries })
                    })
                    .collect(),
            )
        })
        .collect();
    json!({
        "ranks": ranks,
        "zero_composition": verify_zero_composition(x),
        "basis": basis,
        "differentials": differentials,
    })
}

/// The 1-skeleton of `Δ_gcd(b)` as an undirected DOT graph.
pub fn export_dot(fiber: &Fiber, names: &[String]) -> Result<String> {
    let complex = gcd_complex(fiber)?;
    let mut out = String::from("graph gcd_complex {\n");
    for (k, m) in fiber.members.iter().enumerate() {
        out.push_str(&format!("  n{k} [label=\"{}\"];\n", m.format(names)));
    }
    for (a, b) in complex.edges() {
        out.push_str(&format!("  n{a} -- n{b};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

fn check_bound(bound: i64) -> Result<()> {
    if bound < 1 {
        return Err(Error::Invalid {
            field: "bound".into(),
            message: format!("must be at least 1, got {bound}"),
        });
    }
    Ok(())
}

pub fn build_complex(
    spec: &ProblemSpec,
    scan: &DegreeScan,
    kind: ComplexKind,
    mode: StrongMode,
) -> Result<AlgebraicComplex> {
    let full = build_generalized_scarf_complex(&ScarfPoset::from_scan(scan))?;
    Ok(match kind {
        ComplexKind::Generalized => full,
        ComplexKind::Scarf => algebraic_scarf_subcomplex(&full),
        ComplexKind::Strong => {
            let table = BettiTable::from_scan(&spec.lattice, scan, Field::Rational);
            strongly_algebraic_subcomplex(&spec.lattice, &full, &table, mode)
        }
    })
}

pub fn run_command(spec: &ProblemSpec, command: &Command) -> Result<Report> {
    let l = &spec.lattice;
    match command {
        Command::Fiber { degree } => {
            let fiber = fiber_for(spec, degree)?;
            let result = json!({
                "degree": degree_json(spec, &fiber.degree),
                "size": fiber.len(),
                "monomials": set_json(spec, &fiber.members),
                "exponents": fiber.members.iter().map(|m| m.exponents()).collect::<Vec<_>>(),
            });
            Ok(envelope(spec, "fiber", None, None, None, result))
        }
        Command::Betti { bound, field } => {
            check_bound(*bound)?;
            let scan = DegreeScan::new(l, *bound);
            let table = BettiTable::from_scan(l, &scan, *field);
            Ok(envelope(spec, "betti", Some(*bound), Some(*field), None, betti_json(spec, &table)))
        }
        Command::Components { bound } => {
            check_bound(*bound)?;
            let poset = ScarfPoset::from_scan(&DegreeScan::new(l, *bound));
            let n = poset.len();
            let relations: Vec<[usize; 2]> = (0..n)
                .flat_map(|j| (0..n).map(move |i| [i, j]))
                .filter(|&[i, j]| i != j && poset.leq(i, j))
                .collect();
            let result = json!({
                "counts_by_size": poset.counts_by_size(),
                "components": poset.elements().iter().map(|c| component_json(spec, c)).collect::<Vec<_>>(),
                "relations": relations,
            });
            Ok(envelope(spec, "components", Some(*bound), None, None, result))
        }
        Command::Complex { kind, bound, mode } => {
            check_bound(*bound)?;
            let scan = DegreeScan::new(l, *bound);
            let x = build_complex(spec, &scan, *kind, *mode)?;
            let mut result = complex_json(spec, &x);
            result["kind"] = json!(kind.name());
            let mode = (*kind == ComplexKind::Strong).then_some(*mode);
            Ok(envelope(spec, "complex", Some(*bound), None, mode, result))
        }
        Command::Indispensable { bound } | Command::Generators { bound } => {
            check_bound(*bound)?;
            let scan = DegreeScan::new(l, *bound);
            let table = BettiTable::from_scan(l, &scan, Field::Rational);
            let (name, bins) = match command {
                Command::Indispensable { .. } => {
                    ("indispensable", indispensable_binomials_in(l, &scan, &table))
                }
                _ => ("generators", minimal_generators_in(l, &scan, &table)),
            };
            let result = json!({
                "count": bins.len(),
                "binomials": bins.iter().map(|b| binomial_json(spec, b)).collect::<Vec<_>>(),
            });
            Ok(envelope(spec, name, Some(*bound), None, None, result))
        }
        Command::ExportDot { degree } => {
            let fiber = fiber_for(spec, degree)?;
            let dot = export_dot(&fiber, &spec.variables)?;
            let complex = gcd_complex(&fiber)?;
            let result = json!({
                "degree": degree_json(spec, &fiber.degree),
                "nodes": fiber.len(),
                "edges": complex.edges().len(),
                "dot": dot,
            });
            Ok(envelope(spec, "export-dot", None, None, None, result))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex63() -> ProblemSpec {
        parse_spec_str(include_str!("../../fixtures/ex63.json")).unwrap()
    }

    #[test]
    fn fiber_report() {
        let r = run_command(&ex63(), &Command::Fiber { degree: vec![10, 8] }).unwrap();
        let v = &r.value;
        assert_eq!(v["format"], 1);
        assert_eq!(v["result"]["size"], 4);
        assert_eq!(v["result"]["degree"]["semigroup_degree"], json!([10, 8]));
        assert_eq!(
            v["result"]["monomials"],
            json!(["a*b*d", "a*c^2", "b^2*c", "e^2"])
        );
        let zero = run_command(&ex63(), &Command::Fiber { degree: vec![0, 0] }).unwrap();
        assert_eq!(zero.value["result"]["monomials"], json!(["1"]));
    }

    #[test]
    fn dot_export() {
        let r = run_command(&ex63(), &Command::ExportDot { degree: vec![10, 8] }).unwrap();
        assert_eq!(r.value["result"]["nodes"], 4);
        assert_eq!(r.value["result"]["edges"], 3);
        let s = ex63();
        let fiber = fiber_for(&s, &[0, 0]).unwrap();
        let dot = export_dot(&fiber, &s.variables).unwrap();
        assert_eq!(dot, "graph gcd_complex {\n  n0 [label=\"1\"];\n}\n");
    }

    #[test]
    fn complex_report() {
        let r = run_command(
            &ex63(),
            &Command::Complex {
                kind: ComplexKind::Generalized,
                bound: 40,
                mode: StrongMode::Strict,
            },
        )
        .unwrap();
        assert_eq!(r.value["result"]["ranks"], json!([1, 3, 2]));
        assert_eq!(r.value["result"]["zero_composition"], true);
        assert_eq!(r.value["provenance"]["mode"], Value::Null);
    }

    #[test]
    fn bad_bound() {
        assert!(matches!(
            run_command(&ex63(), &Command::Components { bound: 0 }),
            Err(Error::Invalid { .. })
        ));
    }

    #[test]
    fn off_group_degree() {
        // (1,0) is not in the group generated by the columns
        assert!(matches!(
            run_command(&ex63(), &Command::Fiber { degree: vec![1, 0] }),
            Err(Error::NoPreimage(_))
        ));
    }
}
