//! Basic fiber components and their poset under monomial translation.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fiber::{enumerate_fiber, gcd_of, DegreeScan, Fiber, Monomial};
use crate::homology::{connected_components, gcd_complex};
use crate::lattice::{sub, DegreeClass, LatticeBasis};

use super::subset::{scarf_conditions, LatticeSubset};

/// A basic component `C ⊂ C_b` together with a subset `J` such that `C = C_J`.
#[derive(Clone, Debug)]
pub struct BasicComponent {
    pub degree: DegreeClass,
    /// Canonically sorted; `gcd = 1`.
    pub monomials: Vec<Monomial>,
    /// `J = { e - u : x^u ∈ C }` where `x^e` is the first monomial of `C`.
    pub witness: LatticeSubset,
    /// Whether `C` is the whole fiber `C_b`.
    pub full_fiber: bool,
}

impl BasicComponent {
    fn new(degree: DegreeClass, monomials: Vec<Monomial>, full_fiber: bool) -> Self {
        let witness = witness_of(&monomials);
        Self {
            degree,
            monomials,
            witness,
            full_fiber,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Homological degree `|C| - 1`.
    pub fn homological_degree(&self) -> usize {
        self.monomials.len() - 1
    }
}

/// `J = { e - u : x^u ∈ C }` anchored at the first monomial `x^e`.
///
/// For `gcd(C) = 1` every coordinate of some member vanishes, so
/// `bmax(J) = e` and `C_J = C`.
pub fn witness_of(monomials: &[Monomial]) -> LatticeSubset {
    let e = monomials[0].exponents();
    LatticeSubset::from_members(monomials.iter().map(|m| sub(e, m.exponents())).collect())
}

fn is_c_basic(set: &[Monomial]) -> bool {
    let g = gcd_of(set).expect("nonempty");
    if !g.is_one() {
        return false;
    }
    if set.len() == 1 {
        return true;
    }
    (0..set.len()).all(|k| {
        let rest: Vec<Monomial> = set
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, m)| m.clone())
            .collect();
        !gcd_of(&rest).expect("nonempty").is_one()
    })
}

/// Basic components of an already enumerated fiber.
pub fn basic_components_of(fiber: &Fiber) -> Result<Vec<BasicComponent>> {
    if fiber.is_empty() {
        return Err(Error::EmptyFiber);
    }
    let members = &fiber.members;
    let accepted: Vec<Vec<Monomial>> = match members.len() {
        1 => {
            if members[0].is_one() {
                vec![members.clone()]
            } else {
                Vec::new()
            }
        }
        2 => {
            if members[0].coprime(&members[1]) {
                vec![members.clone()]
            } else {
                Vec::new()
            }
        }
        _ => connected_components(&gcd_complex(fiber)?)
            .into_iter()
            .map(|idx| idx.into_iter().map(|k| members[k].clone()).collect::<Vec<_>>())
            .filter(|g| is_c_basic(g))
            .collect(),
    };
    let out: Vec<BasicComponent> = accepted
        .into_iter()
        .map(|c| {
            let full = c.len() == members.len();
            BasicComponent::new(fiber.degree.clone(), c, full)
        })
        .collect();
    for comp in &out {
        assert!(
            scarf_conditions(&comp.witness, members),
            "c-basic component {:?} fails the Scarf conditions",
            comp.monomials
        );
    }
    Ok(out)
}

/// Basic components of the fiber of `b`.
pub fn basic_components(lattice: &LatticeBasis, b: &DegreeClass) -> Result<Vec<BasicComponent>> {
    let fiber = enumerate_fiber(lattice, b.representative())?;
    basic_components_of(&fiber)
}

/// Whether `C_b` itself is a basic component.
pub fn is_basic_fiber(lattice: &LatticeBasis, b: &DegreeClass) -> Result<bool> {
    Ok(basic_components(lattice, b)?.iter().any(|c| c.full_fiber))
}

/// `x^r C' ⊂ C` for some monomial `x^r`.
pub fn translate_leq(smaller: &[Monomial], larger: &[Monomial]) -> bool {
    if smaller.len() > larger.len() {
        return false;
    }
    larger.iter().any(|m| {
        let Some(r) = m.div(&smaller[0]) else {
            return false;
        };
        smaller
            .iter()
            .all(|s| larger.binary_search(&s.mul(&r)).is_ok())
    })
}

/// Basic components of every class in a bounded scan, one per translate class.
#[derive(Clone, Debug)]
pub struct ScarfPoset {
    pub bound: i64,
    elements: Vec<BasicComponent>,
    index: HashMap<Vec<Monomial>, usize>,
    /// `below[j]` lists every `i ≠ j` with `elements[i] ≤ elements[j]`.
    below: Vec<Vec<usize>>,
}

impl ScarfPoset {
    pub fn from_scan(scan: &DegreeScan) -> Self {
        let mut elements = Vec::new();
        for fiber in scan.fibers() {
            elements.extend(basic_components_of(fiber).expect("scanned fibers are nonempty"));
        }
        // A gcd-free set is the unique gcd-free member of its translate class,
        // so monomial sets identify classes.
        let mut index = HashMap::new();
        elements.retain(|c: &BasicComponent| index.insert(c.monomials.clone(), 0).is_none());
        elements.sort_by(|a, b| {
            (a.len(), &a.monomials[0], &a.monomials).cmp(&(b.len(), &b.monomials[0], &b.monomials))
        });
        let index: HashMap<Vec<Monomial>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, c)| (c.monomials.clone(), i))
            .collect();
        let below = (0..elements.len())
            .map(|j| {
                (0..elements.len())
                    .filter(|&i| i != j && translate_leq(&elements[i].monomials, &elements[j].monomials))
                    .collect()
            })
            .collect();
        Self {
            bound: scan.bound(),
            elements,
            index,
            below,
        }
    }

    pub fn elements(&self) -> &[BasicComponent] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn find(&self, monomials: &[Monomial]) -> Option<usize> {
        self.index.get(monomials).copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.below[j].contains(&i)
    }

    /// Number of elements per cardinality `1, 2, …`.
    pub fn counts_by_size(&self) -> Vec<usize> {
        let max = self.elements.iter().map(|c| c.len()).max().unwrap_or(0);
        (1..=max)
            .map(|s| self.elements.iter().filter(|c| c.len() == s).count())
            .collect()
    }
}

pub fn enumerate_scarf_poset(lattice: &LatticeBasis, bound: i64) -> ScarfPoset {
    ScarfPoset::from_scan(&DegreeScan::new(lattice, bound))
}
