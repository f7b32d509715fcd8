//! Golden checks for the bundled fixtures, compared structurally.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fiber::DegreeScan;
use crate::homology::{BettiTable, Field};
use crate::scarf::{
    algebraic_scarf_subcomplex, build_generalized_scarf_complex, indispensable_binomials_in,
    is_homogeneous, minimal_generators_in, strongly_algebraic_subcomplex,
    verify_zero_composition, AlgebraicComplex, ScarfPoset, StrongMode,
};

use super::spec::{parse_spec_str, ProblemSpec};

pub const FIXTURES: [(&str, &str); 3] = [
    ("ex61", include_str!("../../fixtures/ex61.json")),
    ("ex63", include_str!("../../fixtures/ex63.json")),
    ("ex64", include_str!("../../fixtures/ex64.json")),
];

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct Verification {
    pub fixture: String,
    pub bound: i64,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "format": super::FORMAT_VERSION,
            "name": self.fixture,
            "command": "verify",
            "provenance": {
                "version": env!("CARGO_PKG_VERSION"),
                "bound": self.bound,
                "field": Field::Rational.to_string(),
                "mode": null,
            },
            "result": {
                "passed": self.passed(),
                "checks": self.checks.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed(),
                    "expected": c.expected,
                    "actual": c.actual,
                })).collect::<Vec<_>>(),
            },
        })
    }
}

struct Suite<'a> {
    spec: &'a ProblemSpec,
    checks: Vec<Check>,
}

impl Suite<'_> {
    fn check(&mut self, name: &str, expected: Value, actual: Value) {
        self.checks.push(Check {
            name: name.to_string(),
            expected,
            actual,
        });
    }

    /// Sorted semigroup degrees of a list of classes.
    fn degrees<'b>(&self, classes: impl Iterator<Item = &'b crate::lattice::DegreeClass>) -> Value {
        let mut out: Vec<Vec<i64>> = classes
            .map(|b| self.spec.semigroup_degree(b).expect("fixtures are semigroups"))
            .collect();
        out.sort();
        json!(out)
    }

    fn basis_degrees(&self, x: &AlgebraicComplex, i: usize) -> Value {
        self.degrees(x.basis(i).iter().map(|c| &c.degree))
    }
}

fn bound_for(fixture: &str) -> i64 {
    match fixture {
        "ex64" => 600,
        _ => 40,
    }
}

pub fn verify_fixture(fixture: &str) -> Result<Verification> {
    let text = FIXTURES
        .iter()
        .find(|(name, _)| *name == fixture)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::Invalid {
            field: "fixture".into(),
            message: format!("unknown fixture `{fixture}` (expected ex61, ex63 or ex64)"),
        })?;
    let spec = parse_spec_str(text)?;
    let bound = bound_for(fixture);
    let l = &spec.lattice;
    let scan = DegreeScan::new(l, bound);
    let table = BettiTable::from_scan(l, &scan, Field::Rational);
    let poset = ScarfPoset::from_scan(&scan);
    let full = build_generalized_scarf_complex(&poset)?;
    let scarf = algebraic_scarf_subcomplex(&full);
    let strict = strongly_algebraic_subcomplex(l, &full, &table, StrongMode::Strict);
    let paper = strongly_algebraic_subcomplex(l, &full, &table, StrongMode::Paper);
    let gens = minimal_generators_in(l, &scan, &table);
    let indisp = indispensable_binomials_in(l, &scan, &table);

    let mut s = Suite {
        spec: &spec,
        checks: Vec::new(),
    };
    for (name, x) in [("generalized", &full), ("scarf", &scarf), ("strong/strict", &strict), ("strong/paper", &paper)] {
        s.check(&format!("{name}: differential squares to zero"), json!(true), json!(verify_zero_composition(x)));
    }
    s.check("generalized: homogeneous", json!(true), json!(is_homogeneous(l, &full)));

    let betti_degrees = |s: &Suite, i: usize| s.degrees(table.degrees(i).into_iter().map(|e| &e.degree));
    let gen_degrees = s.degrees(gens.iter().map(|b| &b.degree));
    let indisp_degrees = s.degrees(indisp.iter().map(|b| &b.degree));

    match fixture {
        "ex61" => {
            s.check("minimal generator degrees", json!([[3, 9], [4, 4], [6, 6], [9, 3]]), gen_degrees);
            s.check("scarf subcomplex equals generalized complex", json!(true), json!(scarf.same_basis(&full)));
            let mut totals = vec![1];
            totals.extend(table.totals());
            s.check("scarf ranks equal Betti totals", json!(totals), json!(scarf.ranks()));
            for i in 1..scarf.ranks().len() {
                s.check(
                    &format!("scarf degree-{i} basis equals {i}-Betti degrees"),
                    betti_degrees(&s, i),
                    s.basis_degrees(&scarf, i),
                );
            }
        }
        "ex63" => {
            s.check("1-Betti degrees", json!([[4, 8], [6, 6], [8, 4], [10, 8]]), betti_degrees(&s, 1));
            s.check(
                "2-Betti degrees",
                json!([[8, 10], [10, 8], [14, 16], [16, 14], [18, 12]]),
                betti_degrees(&s, 2),
            );
            s.check("3-Betti degrees", json!([[18, 18], [20, 16]]), betti_degrees(&s, 3));
            s.check("Betti totals", json!([4, 5, 2]), json!(table.totals()));
            s.check("generalized ranks", json!([1, 3, 2]), json!(full.ranks()));
            s.check("generalized degree-2 basis", json!([[8, 10], [10, 8]]), s.basis_degrees(&full, 2));
            s.check("generalized degree-1 basis is indispensable", indisp_degrees.clone(), s.basis_degrees(&full, 1));
            s.check("indispensable degrees", json!([[4, 8], [6, 6], [8, 4]]), indisp_degrees);
            s.check("minimal generator count", json!(4), json!(gens.len()));
            s.check("scarf subcomplex ranks", json!([1, 3, 1]), json!(scarf.ranks()));
            s.check("strong (paper) equals generalized", json!(true), json!(paper.same_basis(&full)));
        }
        "ex64" => {
            s.check("Betti totals", json!([7, 19, 25, 16, 4]), json!(table.totals()));
            let b182 = spec.degree_class(&[182])?;
            s.check("beta_{2,182}", json!(2), json!(table.value(l, 2, &b182)));
            s.check("generalized ranks", json!([1, 6, 4]), json!(full.ranks()));
            let basic3: Vec<_> = poset.elements().iter().filter(|c| c.len() == 3 && c.full_fiber).map(|c| &c.degree).collect();
            s.check("3-element basic fibers", json!([[169], [196]]), s.degrees(basic3.into_iter()));
            let at182 = poset.elements().iter().filter(|c| l.class_eq(&c.degree, &b182)).count();
            s.check("basic components at 182", json!(2), json!(at182));
            let large = poset.elements().iter().filter(|c| c.len() >= 4).count();
            s.check("basic components of size >= 4", json!(0), json!(large));
            s.check("scarf subcomplex ranks", json!([1, 6, 2]), json!(scarf.ranks()));
            s.check("strong (strict) equals scarf subcomplex", json!(true), json!(strict.same_basis(&scarf)));
            s.check("strong (paper) equals scarf subcomplex", json!(true), json!(paper.same_basis(&scarf)));
            s.check(
                "indispensable degrees",
                json!([[104], [112], [117], [126], [130], [140]]),
                indisp_degrees,
            );
        }
        _ => unreachable!("fixture names are checked above"),
    }
    Ok(Verification {
        fixture: fixture.to_string(),
        bound,
        checks: s.checks,
    })
}
