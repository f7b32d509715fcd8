//! Monomials (exponent vectors), fibers of the `Z^n / L` grading, and gcd
//! arithmetic on sets of monomials.
//!
//! A fiber `C_b` is the set of nonnegative points of a coset `u0 + L`. It is
//! enumerated as the integer points `z` of the bounded polyhedron
//! `{ z ∈ Q^r : u0 + zB ≥ 0 }` by recursive descent, with exact LP bounds on
//! each coordinate given the ones already fixed.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{sub, DegreeClass, LatticeBasis};
use crate::lp::{self, Constraint, LpOutcome, VarKind, Q};

/// A monomial `x^u`, stored as its exponent vector `u ∈ N^n`.
///
/// `Ord` is the canonical order used everywhere a deterministic ordering of
/// monomials is needed: lexicographic with coordinate 1 most significant and
/// larger exponents first (so `abd < ac² < b²c` in five variables).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Result<Self> {
        if exponents.iter().any(|&e| e < 0) {
            return Err(Error::NegativeExponent(exponents));
        }
        Ok(Self(exponents))
    }

    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(sub(&self.0, &other.0)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Renders e.g. `a^2*b*d`, or `1` for the unit monomial.
    pub fn format(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(&[]))
    }
}

/// All monomials of one degree class, canonically sorted.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub degree: DegreeClass,
    pub members: Vec<Monomial>,
}

impl Fiber {
    fn new(degree: DegreeClass, mut members: Vec<Monomial>) -> Self {
        members.sort();
        members.dedup();
        Self { degree, members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.members.binary_search(m).ok()
    }
}

/// `{ u ∈ N^n : u - u0 ∈ L }`.
pub fn enumerate_fiber(lattice: &LatticeBasis, u0: &[i64]) -> Result<Fiber> {
    lattice.check_len(u0)?;
    let mut out = Vec::new();
    descend(lattice, u0.to_vec(), 0, &mut out, false);
    let members = out.into_iter().map(Monomial).collect();
    Ok(Fiber::new(DegreeClass::new(u0.to_vec()), members))
}

/// True iff the class of `u0` contains a nonnegative vector.
pub fn fiber_is_nonempty(lattice: &LatticeBasis, u0: &[i64]) -> bool {
    if lattice.weight(u0) < 0 {
        return false;
    }
    let mut out = Vec::new();
    descend(lattice, u0.to_vec(), 0, &mut out, true)
}

/// Fixes `z_0 .. z_{k-1}` (folded into `current`) and branches on `z_k`.
fn descend(
    lattice: &LatticeBasis,
    current: Vec<i64>,
    k: usize,
    out: &mut Vec<Vec<i64>>,
    first_only: bool,
) -> bool {
    let rows = lattice.rows();
    let r = rows.len();
    if k == r {
        if current.iter().all(|&x| x >= 0) {
            out.push(current);
            return true;
        }
        return false;
    }
    let Some((lo, hi)) = coordinate_range(rows, &current, k) else {
        return false;
    };
    let mut found = false;
    for t in lo..=hi {
        let next: Vec<i64> = current
            .iter()
            .zip(&rows[k])
            .map(|(c, b)| c + t * b)
            .collect();
        if descend(lattice, next, k + 1, out, first_only) {
            found = true;
            if first_only {
                return true;
            }
        }
    }
    found
}

/// Integer range of `z_k` over `{ current + Σ_{i≥k} z_i B_i ≥ 0 }`, or
/// `None` when the slice is empty.
fn coordinate_range(rows: &[Vec<i64>], current: &[i64], k: usize) -> Option<(i64, i64)> {
    let r = rows.len();
    if k + 1 == r {
        // One free coordinate left: intersect half-lines directly.
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for (c, b) in current.iter().zip(&rows[k]) {
            match b.cmp(&0) {
                Ordering::Greater => lo = lo.max(div_ceil(-c, *b)),
                Ordering::Less => hi = hi.min(c.div_euclid(-b)),
                Ordering::Equal if *c < 0 => return None,
                Ordering::Equal => {}
            }
        }
        assert!(
            lo != i64::MIN && hi != i64::MAX,
            "fiber polyhedron is unbounded; lattice is not pointed"
        );
        return (lo <= hi).then_some((lo, hi));
    }
    let vars = r - k;
    let constraints: Vec<Constraint> = (0..current.len())
        .map(|j| Constraint {
            coeffs: (k..r).map(|i| lp::q(-rows[i][j])).collect(),
            rhs: lp::q(current[j]),
        })
        .collect();
    let kinds = vec![VarKind::Free; vars];
    let mut objective = vec![lp::q(0); vars];
    objective[0] = lp::q(1);
    let max = match lp::maximize(&objective, &constraints, &kinds) {
        LpOutcome::Optimal { value, .. } => value,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => panic!("fiber polyhedron is unbounded; lattice is not pointed"),
    };
    objective[0] = lp::q(-1);
    let min = match lp::maximize(&objective, &constraints, &kinds) {
        LpOutcome::Optimal { value, .. } => -value,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => panic!("fiber polyhedron is unbounded; lattice is not pointed"),
    };
    let lo = to_i64(min.ceil());
    let hi = to_i64(max.floor());
    (lo <= hi).then_some((lo, hi))
}

fn to_i64(x: Q) -> i64 {
    x.to_integer().to_i64().expect("fiber bound exceeds i64")
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Brute-force fiber: scans every `u ∈ [0, box_bound]^n` and keeps those
/// congruent to `u0`. Only complete when the box contains the fiber.
pub fn enumerate_fiber_box_oracle(lattice: &LatticeBasis, u0: &[i64], box_bound: i64) -> Fiber {
    let n = lattice.num_vars();
    let target = lattice.reduce(u0);
    let mut members = Vec::new();
    let mut u = vec![0i64; n];
    loop {
        if lattice.reduce(&u) == target {
            members.push(Monomial(u.clone()));
        }
        let mut i = 0;
        while i < n {
            if u[i] < box_bound {
                u[i] += 1;
                break;
            }
            u[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Fiber::new(DegreeClass::new(u0.to_vec()), members)
}

/// Componentwise minimum of the exponent vectors.
pub fn gcd_of(set: &[Monomial]) -> Result<Monomial> {
    let (first, rest) = set.split_first().ok_or(Error::EmptySet)?;
    Ok(rest.iter().fold(first.clone(), |g, m| g.gcd(m)))
}

/// `[T] = { m / gcd(T) : m ∈ T }`, canonically sorted.
pub fn reduce_by_gcd(set: &[Monomial]) -> Result<Vec<Monomial>> {
    let g = gcd_of(set)?;
    let mut out: Vec<Monomial> = set
        .iter()
        .map(|m| m.div(&g).expect("gcd divides every member"))
        .collect();
    out.sort();
    Ok(out)
}

/// Every fiber whose class has weight at most `bound`.
///
/// Fibers lie in level sets of the grading, so enumerating the monomials of
/// weight `≤ bound` and grouping them by coset yields complete fibers.
#[derive(Clone, Debug)]
pub struct DegreeScan {
    bound: i64,
    fibers: Vec<Fiber>,
    index: HashMap<Vec<i64>, usize>,
}

impl DegreeScan {
    pub fn new(lattice: &LatticeBasis, bound: i64) -> Self {
        let w = lattice.grading();
        let n = w.len();
        let mut groups: HashMap<Vec<i64>, Vec<Monomial>> = HashMap::new();
        let mut u = vec![0i64; n];
        collect_monomials(lattice, w, bound, 0, 0, &mut u, &mut groups);
        let mut fibers: Vec<(i64, Vec<i64>, Fiber)> = groups
            .into_iter()
            .map(|(key, members)| {
                let mut f = Fiber::new(DegreeClass::new(Vec::new()), members);
                f.degree = DegreeClass::new(f.members[0].exponents().to_vec());
                (lattice.weight(f.members[0].exponents()), key, f)
            })
            .collect();
        fibers.sort_by(|a, b| (a.0, &a.2.members[0]).cmp(&(b.0, &b.2.members[0])));
        let index = fibers
            .iter()
            .enumerate()
            .map(|(i, (_, key, _))| (key.clone(), i))
            .collect();
        Self {
            bound,
            fibers: fibers.into_iter().map(|(_, _, f)| f).collect(),
            index,
        }
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Fibers sorted by weight, then by their first monomial.
    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    /// The scanned fiber of the class of `u`, if its weight is within the bound.
    pub fn lookup(&self, lattice: &LatticeBasis, u: &[i64]) -> Option<&Fiber> {
        self.index
            .get(&lattice.reduce(u))
            .map(|&i| &self.fibers[i])
    }
}

fn collect_monomials(
    lattice: &LatticeBasis,
    w: &[i64],
    bound: i64,
    i: usize,
    used: i64,
    u: &mut Vec<i64>,
    groups: &mut HashMap<Vec<i64>, Vec<Monomial>>,
) {
    if i == w.len() {
        groups
            .entry(lattice.reduce(u))
            .or_default()
            .push(Monomial(u.clone()));
        return;
    }
    let mut e = 0;
    while used + e * w[i] <= bound {
        u[i] = e;
        collect_monomials(lattice, w, bound, i + 1, used + e * w[i], u, groups);
        e += 1;
    }
    u[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{lattice_from_semigroup, SemigroupMatrix};

    fn m(e: &[i64]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ex63() -> (SemigroupMatrix, LatticeBasis) {
        let a = SemigroupMatrix::new(vec![vec![6, 4, 2, 0, 5], vec![0, 2, 4, 6, 4]]).unwrap();
        let l = lattice_from_semigroup(&a).unwrap();
        (a, l)
    }

    #[test]
    fn canonical_order_is_descending_lex() {
        let mut v = vec![m(&[0, 2, 1, 0, 0]), m(&[1, 0, 2, 0, 0]), m(&[1, 1, 0, 1, 0])];
        v.sort();
        assert_eq!(
            v,
            vec![m(&[1, 1, 0, 1, 0]), m(&[1, 0, 2, 0, 0]), m(&[0, 2, 1, 0, 0])]
        );
    }

    #[test]
    fn negative_exponents_rejected() {
        assert!(Monomial::new(vec![1, -1]).is_err());
    }

    #[test]
    fn ex63_fiber_of_bc() {
        let (_, l) = ex63();
        let f = enumerate_fiber(&l, &[0, 1, 1, 0, 0]).unwrap();
        assert_eq!(f.members, vec![m(&[1, 0, 0, 1, 0]), m(&[0, 1, 1, 0, 0])]);
    }

    #[test]
    fn zero_degree_fiber_is_one() {
        let (_, l) = ex63();
        let f = enumerate_fiber(&l, &[0; 5]).unwrap();
        assert_eq!(f.members, vec![Monomial::one(5)]);
    }

    #[test]
    fn empty_fiber_from_negative_representative() {
        let (a, l) = ex63();
        let u = a.preimage(&[-2, 2]).unwrap();
        assert!(enumerate_fiber(&l, &u).unwrap().is_empty());
        assert!(!fiber_is_nonempty(&l, &u));
    }

    #[test]
    fn ex63_fiber_10_8_agrees_with_box_oracle() {
        let (a, l) = ex63();
        let u = a.preimage(&[10, 8]).unwrap();
        let f = enumerate_fiber(&l, &u).unwrap();
        assert_eq!(f.len(), 4);
        let oracle = enumerate_fiber_box_oracle(&l, &u, 3);
        assert_eq!(f.members, oracle.members);
    }

    #[test]
    fn ex64_fiber_182() {
        let a = SemigroupMatrix::new(vec![vec![39, 52, 65, 42, 56, 70]]).unwrap();
        let l = lattice_from_semigroup(&a).unwrap();
        let u = a.preimage(&[182]).unwrap();
        let f = enumerate_fiber(&l, &u).unwrap();
        let mut expected = vec![
            m(&[2, 2, 0, 0, 0, 0]),
            m(&[3, 0, 1, 0, 0, 0]),
            m(&[0, 1, 2, 0, 0, 0]),
            m(&[0, 0, 0, 0, 2, 1]),
            m(&[0, 0, 0, 1, 0, 2]),
            m(&[0, 0, 0, 3, 1, 0]),
        ];
        expected.sort();
        assert_eq!(f.members, expected);
    }

    #[test]
    fn fiber_of_zero_lattice_is_singleton() {
        let l = LatticeBasis::zero(3);
        assert_eq!(enumerate_fiber(&l, &[1, 2, 0]).unwrap().members, vec![m(&[1, 2, 0])]);
        assert!(enumerate_fiber(&l, &[1, -2, 0]).unwrap().is_empty());
    }

    #[test]
    fn box_oracle_trivial() {
        let (_, l) = ex63();
        let f = enumerate_fiber_box_oracle(&l, &[0; 5], 2);
        assert_eq!(f.members, vec![Monomial::one(5)]);
    }

    #[test]
    fn gcd_examples() {
        let abd = m(&[1, 1, 0, 1, 0]);
        let ac2 = m(&[1, 0, 2, 0, 0]);
        let b2c = m(&[0, 2, 1, 0, 0]);
        assert!(gcd_of(&[abd.clone(), ac2.clone(), b2c.clone()]).unwrap().is_one());
        assert_eq!(gcd_of(std::slice::from_ref(&abd)).unwrap(), abd);
        assert_eq!(gcd_of(&[abd.clone(), ac2.clone()]).unwrap(), m(&[1, 0, 0, 0, 0]));
        assert_eq!(gcd_of(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn reduce_examples() {
        let abd = m(&[1, 1, 0, 1, 0]);
        let ac2 = m(&[1, 0, 2, 0, 0]);
        let b2c = m(&[0, 2, 1, 0, 0]);
        assert_eq!(
            reduce_by_gcd(&[abd.clone(), ac2]).unwrap(),
            vec![m(&[0, 1, 0, 1, 0]), m(&[0, 0, 2, 0, 0])]
        );
        assert_eq!(reduce_by_gcd(std::slice::from_ref(&abd)).unwrap(), vec![Monomial::one(5)]);
        let reduced = reduce_by_gcd(&[abd, b2c]).unwrap();
        assert_eq!(reduced, vec![m(&[1, 0, 0, 1, 0]), m(&[0, 1, 1, 0, 0])]);
        assert_eq!(reduce_by_gcd(&[]), Err(Error::EmptySet));
    }

    #[test]
    fn scan_fibers_are_complete() {
        let (_, l) = ex63();
        let scan = DegreeScan::new(&l, 40);
        for f in scan.fibers() {
            let direct = enumerate_fiber(&l, f.degree.representative()).unwrap();
            assert_eq!(direct.members, f.members);
        }
        assert!(scan.lookup(&l, &[0, 0, 0, 0, 2]).unwrap().len() == 4);
    }
}
