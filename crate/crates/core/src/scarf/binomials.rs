//! Indispensable binomials and a minimal binomial generating set.

use crate::fiber::{DegreeScan, Monomial};
use crate::homology::{connected_components, gcd_complex, minimal_betti_degrees, BettiTable, Field};
use crate::lattice::{DegreeClass, LatticeBasis};

/// `lead - trail`, both of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binomial {
    pub degree: DegreeClass,
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    pub fn format(&self, names: &[String]) -> String {
        format!("{} - {}", self.lead.format(names), self.trail.format(names))
    }
}

/// Two-element gcd-free fibers at minimal 1-Betti degrees.
pub fn indispensable_binomials_in(
    lattice: &LatticeBasis,
    scan: &DegreeScan,
    table: &BettiTable,
) -> Vec<Binomial> {
    minimal_betti_degrees(lattice, table, 1)
        .into_iter()
        .filter_map(|b| {
            let fiber = scan.lookup(lattice, b.representative())?;
            let [lead, trail] = fiber.members.as_slice() else {
                return None;
            };
            lead.coprime(trail).then(|| Binomial {
                degree: fiber.degree.clone(),
                lead: lead.clone(),
                trail: trail.clone(),
            })
        })
        .collect()
}

pub fn indispensable_binomials(lattice: &LatticeBasis, bound: i64) -> Vec<Binomial> {
    let scan = DegreeScan::new(lattice, bound);
    let table = BettiTable::from_scan(lattice, &scan, Field::Rational);
    indispensable_binomials_in(lattice, &scan, &table)
}

/// For each 1-Betti degree, binomials joining the component of the first
/// monomial to the first monomial of every other component of `Δ_gcd(b)`.
pub fn minimal_generators_in(
    lattice: &LatticeBasis,
    scan: &DegreeScan,
    table: &BettiTable,
) -> Vec<Binomial> {
    let mut out = Vec::new();
    for entry in table.degrees(1) {
        let fiber = scan
            .lookup(lattice, entry.degree.representative())
            .expect("Betti degrees come from the scan");
        let complex = gcd_complex(fiber).expect("nonempty fiber");
        let components = connected_components(&complex);
        let base = &fiber.members[components[0][0]];
        for comp in &components[1..] {
            out.push(Binomial {
                degree: fiber.degree.clone(),
                lead: base.clone(),
                trail: fiber.members[comp[0]].clone(),
            });
        }
    }
    out
}

pub fn minimal_generators(lattice: &LatticeBasis, bound: i64) -> Vec<Binomial> {
    let scan = DegreeScan::new(lattice, bound);
    let table = BettiTable::from_scan(lattice, &scan, Field::Rational);
    minimal_generators_in(lattice, &scan, &table)
}
