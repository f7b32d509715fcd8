//! Finite lattice subsets `J ⊂ L`, their componentwise maxima, variable
//! supports, monomial sets `C_J`, and membership in the generalized Scarf
//! complex.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::fiber::{enumerate_fiber, Monomial};
use crate::lattice::{sub, LatticeBasis};

/// A finite set of lattice vectors, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeSubset {
    members: Vec<Vec<i64>>,
}

impl LatticeSubset {
    /// Checks every member for lattice membership.
    pub fn new(lattice: &LatticeBasis, members: Vec<Vec<i64>>) -> Result<Self> {
        for v in &members {
            if !lattice.contains(v)? {
                return Err(Error::NotInLattice(v.clone()));
            }
        }
        Ok(Self::from_members(members))
    }

    pub(crate) fn from_members(mut members: Vec<Vec<i64>>) -> Self {
        members.sort();
        members.dedup();
        Self { members }
    }

    pub fn members(&self) -> &[Vec<i64>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn without(&self, index: usize) -> LatticeSubset {
        let mut members = self.members.clone();
        members.remove(index);
        Self { members }
    }

    pub fn translate(&self, u: &[i64]) -> LatticeSubset {
        Self::from_members(
            self.members
                .iter()
                .map(|a| a.iter().zip(u).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }
}

/// Componentwise maximum of a finite set, with a bottom element for `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bmax {
    Bottom,
    Vector(Vec<i64>),
}

impl Bmax {
    pub fn vector(&self) -> Option<&[i64]> {
        match self {
            Bmax::Bottom => None,
            Bmax::Vector(v) => Some(v),
        }
    }
}

impl PartialOrd for Bmax {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Bmax::Bottom, Bmax::Bottom) => Some(Ordering::Equal),
            (Bmax::Bottom, _) => Some(Ordering::Less),
            (_, Bmax::Bottom) => Some(Ordering::Greater),
            (Bmax::Vector(a), Bmax::Vector(b)) => {
                let le = a.iter().zip(b).all(|(x, y)| x <= y);
                let ge = a.iter().zip(b).all(|(x, y)| x >= y);
                match (le, ge) {
                    (true, true) => Some(Ordering::Equal),
                    (true, false) => Some(Ordering::Less),
                    (false, true) => Some(Ordering::Greater),
                    (false, false) => None,
                }
            }
        }
    }
}

pub fn bmax(members: &[Vec<i64>]) -> Bmax {
    let Some((first, rest)) = members.split_first() else {
        return Bmax::Bottom;
    };
    let mut out = first.clone();
    for a in rest {
        for (o, x) in out.iter_mut().zip(a) {
            *o = (*o).max(*x);
        }
    }
    Bmax::Vector(out)
}

/// `vsupp_K(J) = { i : ∃ a ∈ J, bmax(K)_i - a_i > 0 }`, for `J ⊂ K`.
pub fn vsupp(k: &[Vec<i64>], j: &[Vec<i64>]) -> BTreeSet<usize> {
    let Bmax::Vector(ref top) = bmax(k) else {
        return BTreeSet::new();
    };
    j.iter()
        .flat_map(|a| (0..top.len()).filter(move |&i| top[i] > a[i]))
        .collect()
}

/// `C_J = { x^{bmax(J) - a} : a ∈ J }`, canonically sorted.
pub fn monomials_of(j: &LatticeSubset) -> Result<Vec<Monomial>> {
    let Bmax::Vector(top) = bmax(j.members()) else {
        return Err(Error::EmptySubset);
    };
    let mut out: Vec<Monomial> = j
        .members()
        .iter()
        .map(|a| Monomial::new(sub(&top, a)).expect("bmax dominates every member"))
        .collect();
    out.sort();
    Ok(out)
}

/// Membership of `J` in the generalized Scarf complex:
///
/// 1. every proper subset has strictly smaller `bmax`;
/// 2. if `|J| ≤ 2`, no `a ∈ L \ J` satisfies `a ≤ bmax(J)`;
/// 3. if `|J| > 2`, every `a ∈ L \ J` with `a ≤ bmax(J)` has
///    `supp(x^{bmax(J) - a}) ∩ vsupp_J(J) = ∅`.
///
/// The vectors `a ≤ bmax(J)` of `L` correspond to the monomials
/// `x^{bmax(J) - a}` of the fiber of `bmax(J)`.
pub fn in_generalized_scarf(lattice: &LatticeBasis, j: &LatticeSubset) -> Result<bool> {
    for a in j.members() {
        if !lattice.contains(a)? {
            return Err(Error::NotInLattice(a.clone()));
        }
    }
    let Bmax::Vector(top) = bmax(j.members()) else {
        return Err(Error::EmptySubset);
    };
    let fiber = enumerate_fiber(lattice, &top)?;
    Ok(scarf_conditions(j, &fiber.members))
}

/// The three conditions, given the full fiber of `bmax(J)`.
pub(crate) fn scarf_conditions(j: &LatticeSubset, fiber: &[Monomial]) -> bool {
    let whole = bmax(j.members());
    for k in 0..j.len() {
        let punctured = bmax(j.without(k).members());
        if punctured.partial_cmp(&whole) != Some(Ordering::Less) {
            return false;
        }
    }
    let c_j = monomials_of(j).expect("J is nonempty");
    let outside = fiber.iter().filter(|m| c_j.binary_search(m).is_err());
    if j.len() <= 2 {
        return outside.count() == 0;
    }
    let vs = vsupp(j.members(), j.members());
    outside.into_iter().all(|m| m.support().iter().all(|i| !vs.contains(i)))
}
