//! The generalized algebraic Scarf complex and its subcomplexes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fiber::{gcd_of, reduce_by_gcd, Monomial};
use crate::homology::BettiTable;
use crate::lattice::LatticeBasis;

use super::components::{is_basic_fiber, BasicComponent, ScarfPoset};

/// `±x^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i8,
    pub monomial: Monomial,
}

/// One nonzero differential entry: `θ(E_col)` has coefficient `coefficient` on `E_row`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub row: usize,
    pub coefficient: SignedMonomial,
}

/// A chain complex of free modules with one basis element `E_C` per basic
/// component, graded by homological degree `|C| - 1`.
#[derive(Clone, Debug)]
pub struct AlgebraicComplex {
    basis: Vec<Vec<BasicComponent>>,
    /// `differentials[i - 1][col]` lists the entries of `θ(E_col)` for a
    /// basis element `col` of degree `i ≥ 1`, indexed into `basis[i - 1]`.
    differentials: Vec<Vec<Vec<Entry>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrongMode {
    /// Minimality in the semigroup order among all `i`-Betti degrees.
    Strict,
    /// Also tolerate smaller `i`-Betti degrees whose fibers are basic.
    Paper,
}

impl AlgebraicComplex {
    pub fn basis(&self, i: usize) -> &[BasicComponent] {
        self.basis.get(i).map_or(&[], |b| b.as_slice())
    }

    /// Entries of `θ(E_col)` for `col` in degree `i ≥ 1`.
    pub fn differential(&self, i: usize, col: usize) -> &[Entry] {
        &self.differentials[i - 1][col]
    }

    /// Length of the complex: the largest degree with a nonzero module.
    pub fn length(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    /// Keeps the basis elements selected by `keep` and the entries between them.
    pub fn restrict(&self, keep: impl Fn(usize, &BasicComponent) -> bool) -> AlgebraicComplex {
        let kept: Vec<Vec<usize>> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| (0..b.len()).filter(|&k| keep(i, &b[k])).collect())
            .collect();
        let renumber: Vec<HashMap<usize, usize>> = kept
            .iter()
            .map(|ks| ks.iter().enumerate().map(|(new, &old)| (old, new)).collect())
            .collect();
        let mut basis: Vec<Vec<BasicComponent>> = kept
            .iter()
            .enumerate()
            .map(|(i, ks)| ks.iter().map(|&k| self.basis[i][k].clone()).collect())
            .collect();
        let mut differentials: Vec<Vec<Vec<Entry>>> = (1..basis.len())
            .map(|i| {
                kept[i]
                    .iter()
                    .map(|&col| {
                        self.differentials[i - 1][col]
                            .iter()
                            .filter_map(|e| {
                                renumber[i - 1].get(&e.row).map(|&row| Entry {
                                    row,
                                    coefficient: e.coefficient.clone(),
                                })
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        while basis.len() > 1 && basis.last().is_some_and(|b| b.is_empty()) {
            basis.pop();
            differentials.pop();
        }
        AlgebraicComplex {
            basis,
            differentials,
        }
    }

    /// Same basis in every degree, compared by monomial sets.
    pub fn same_basis(&self, other: &AlgebraicComplex) -> bool {
        self.basis.len() == other.basis.len()
            && self.basis.iter().zip(&other.basis).all(|(a, b)| {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.monomials == y.monomials)
            })
    }
}

/// `θ(E_C) = Σ_l (-1)^{l+1} gcd(C \ {m_l}) E_{[C \ {m_l}]}`, with `m_1, m_2, …`
/// the canonical order of `C`.
pub fn build_generalized_scarf_complex(poset: &ScarfPoset) -> Result<AlgebraicComplex> {
    let max = poset.elements().iter().map(|c| c.len()).max().unwrap_or(0);
    let mut basis: Vec<Vec<BasicComponent>> = vec![Vec::new(); max];
    for c in poset.elements() {
        basis[c.len() - 1].push(c.clone());
    }
    if basis.first().is_none_or(|b| b.is_empty()) {
        return Err(Error::MissingFace("{1}".into()));
    }
    let positions: Vec<HashMap<&[Monomial], usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(k, c)| (c.monomials.as_slice(), k)).collect())
        .collect();
    let mut differentials = Vec::with_capacity(max.saturating_sub(1));
    for i in 1..max {
        let mut columns = Vec::with_capacity(basis[i].len());
        for c in &basis[i] {
            let mut entries = Vec::with_capacity(c.len());
            for l in 0..c.len() {
                let rest: Vec<Monomial> = c
                    .monomials
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != l)
                    .map(|(_, m)| m.clone())
                    .collect();
                let g = gcd_of(&rest)?;
                let target = reduce_by_gcd(&rest)?;
                let row = *positions[i - 1]
                    .get(target.as_slice())
                    .ok_or_else(|| Error::MissingFace(format_set(&target)))?;
                entries.push(Entry {
                    row,
                    coefficient: SignedMonomial {
                        sign: if l % 2 == 0 { 1 } else { -1 },
                        monomial: g,
                    },
                });
            }
            columns.push(entries);
        }
        differentials.push(columns);
    }
    Ok(AlgebraicComplex {
        basis,
        differentials,
    })
}

fn format_set(set: &[Monomial]) -> String {
    let parts: Vec<String> = set.iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// `θ_{i-1} ∘ θ_i = 0` for every `i`, in signed-monomial arithmetic.
pub fn verify_zero_composition(x: &AlgebraicComplex) -> bool {
    for i in 2..x.basis.len() {
        for col in &x.differentials[i - 1] {
            let mut sums: HashMap<(usize, Monomial), i64> = HashMap::new();
            for e in col {
                for f in &x.differentials[i - 2][e.row] {
                    let m = e.coefficient.monomial.mul(&f.coefficient.monomial);
                    let s = i64::from(e.coefficient.sign * f.coefficient.sign);
                    *sums.entry((f.row, m)).or_default() += s;
                }
            }
            if sums.values().any(|&v| v != 0) {
                return false;
            }
        }
    }
    true
}

/// Every entry from `E_C` (degree `b`) to `E_{C'}` (degree `b'`) is a
/// monomial of degree `b - b'`, and `b' < b`.
pub fn is_homogeneous(lattice: &LatticeBasis, x: &AlgebraicComplex) -> bool {
    for i in 1..x.basis.len() {
        for (col, entries) in x.differentials[i - 1].iter().enumerate() {
            let source = &x.basis[i][col];
            for e in entries {
                let target = &x.basis[i - 1][e.row];
                let shifted: Vec<i64> = target
                    .degree
                    .representative()
                    .iter()
                    .zip(e.coefficient.monomial.exponents())
                    .map(|(a, b)| a + b)
                    .collect();
                let shifted = crate::lattice::DegreeClass::new(shifted);
                if !lattice.class_eq(&shifted, &source.degree)
                    || !lattice.class_lt(&target.degree, &source.degree)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// Restriction to the basic fibers: the algebraic Scarf complex.
pub fn algebraic_scarf_subcomplex(x: &AlgebraicComplex) -> AlgebraicComplex {
    x.restrict(|_, c| c.full_fiber)
}

/// Keeps `E_C` in degree `i = |C| - 1 ≥ 1` iff `β_{i,b(C)} = 1` and `b(C)` is
/// minimal among the `i`-Betti degrees (under `mode`); degree 0 is kept.
pub fn strongly_algebraic_subcomplex(
    lattice: &LatticeBasis,
    x: &AlgebraicComplex,
    table: &BettiTable,
    mode: StrongMode,
) -> AlgebraicComplex {
    x.restrict(|i, c| {
        if i == 0 {
            return true;
        }
        if table.value(lattice, i, &c.degree) != 1 {
            return false;
        }
        table
            .degrees(i)
            .iter()
            .filter(|d| lattice.class_lt(&d.degree, &c.degree))
            .all(|d| match mode {
                StrongMode::Strict => false,
                StrongMode::Paper => is_basic_fiber(lattice, &d.degree).unwrap_or(false),
            })
    })
}
