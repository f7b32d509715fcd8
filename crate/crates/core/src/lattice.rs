//! Pointed integer lattices `L ⊂ Z^n`, their degree classes in `Z^n / L`, and
//! the partial order on the grading semigroup.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::fiber;
use crate::linalg;
use crate::lp::{self, Constraint, LpOutcome, VarKind, Q};

/// A `d × n` integer matrix whose columns generate the semigroup `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupMatrix {
    rows: Vec<Vec<i64>>,
    n: usize,
}

impl SemigroupMatrix {
    /// Builds the matrix from its rows (ambient coordinates).
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 {
            return Err(Error::NoGenerators);
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if let Some(column) = (0..n).find(|&j| rows.iter().all(|r| r[j] == 0)) {
            return Err(Error::ZeroGenerator { column });
        }
        Ok(Self { rows, n })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.n
    }

    pub fn generator(&self, j: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// `deg_A(x^u) = Σ u_j a_j`.
    pub fn degree_of(&self, u: &[i64]) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(u).map(|(a, x)| a * x).sum())
            .collect()
    }

    /// Some integer vector `u` with `A u = degree` (entries may be negative).
    pub fn preimage(&self, degree: &[i64]) -> Result<Vec<i64>> {
        if degree.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: degree.len(),
            });
        }
        let u = linalg::solve_integer(&self.rows, self.n, degree)
            .ok_or_else(|| Error::NoPreimage(degree.to_vec()))?;
        linalg::to_i64_vec(&u)
    }

    fn column_sums(&self) -> Vec<i64> {
        (0..self.n)
            .map(|j| self.rows.iter().map(|r| r[j]).sum())
            .collect()
    }
}

/// An integer basis of a pointed lattice `L ⊂ Z^n`.
///
/// Besides the user-facing rows, the basis caches its Hermite normal form
/// (for membership and canonical coset representatives) and a strictly
/// positive integer grading vector `w` with `w · l = 0` for all `l ∈ L`.
/// Every fiber lies in a single level set of `w`.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    rows: Vec<Vec<i64>>,
    n: usize,
    hnf: Vec<Vec<i64>>,
    pivots: Vec<usize>,
    grading: Vec<i64>,
}

/// A class `b ∈ Z^n / L`, carried by an arbitrary representative.
///
/// Equality of classes depends on the lattice; use [`LatticeBasis::class_eq`].
/// The derived `PartialEq` compares representatives only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClass {
    representative: Vec<i64>,
}

impl DegreeClass {
    pub fn new(representative: Vec<i64>) -> Self {
        Self { representative }
    }

    pub fn representative(&self) -> &[i64] {
        &self.representative
    }
}

impl LatticeBasis {
    pub fn new(rows: Vec<Vec<i64>>, n: usize) -> Result<Self> {
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        let h = linalg::hermite(&linalg::to_big(&rows), n);
        if h.rank() != rows.len() {
            return Err(Error::DependentRows);
        }
        if let Some(witness) = pointedness_witness(&rows, n) {
            return Err(Error::NotPointed { witness });
        }
        let hnf = h.hnf[..h.rank()]
            .iter()
            .map(|r| linalg::to_i64_vec(r))
            .collect::<Result<Vec<_>>>()?;
        let grading = positive_grading(&rows, n)?;
        Ok(Self {
            rows,
            n,
            hnf,
            pivots: h.pivots,
            grading,
        })
    }

    /// The zero lattice in `Z^n`.
    pub fn zero(n: usize) -> Self {
        Self {
            rows: Vec::new(),
            n,
            hnf: Vec::new(),
            pivots: Vec::new(),
            grading: vec![1; n],
        }
    }

    /// Replaces the grading vector; `w` must be strictly positive and orthogonal to `L`.
    pub fn with_grading(mut self, w: Vec<i64>) -> Result<Self> {
        let orthogonal = self
            .rows
            .iter()
            .all(|r| r.iter().zip(&w).map(|(a, b)| a * b).sum::<i64>() == 0);
        if w.len() != self.n || w.iter().any(|&x| x <= 0) || !orthogonal {
            return Err(Error::BadGrading(w));
        }
        self.grading = w;
        Ok(self)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn grading(&self) -> &[i64] {
        &self.grading
    }

    /// `w · v`, constant on every degree class.
    pub fn weight(&self, v: &[i64]) -> i64 {
        self.grading.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn is_pointed(&self) -> bool {
        pointedness_witness(&self.rows, self.n).is_none()
    }

    pub(crate) fn check_len(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Canonical representative of `v + L`: `v` reduced against the Hermite
    /// normal form so that each pivot coordinate lies in `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for (row, &p) in self.hnf.iter().zip(&self.pivots) {
            let q = Integer::div_floor(&out[p], &row[p]);
            if q != 0 {
                for (o, r) in out.iter_mut().zip(row) {
                    *o -= q * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.reduce(v).iter().all(|&x| x == 0))
    }

    pub fn class_of(&self, u: &[i64]) -> Result<DegreeClass> {
        self.check_len(u)?;
        Ok(DegreeClass::new(u.to_vec()))
    }

    pub fn class_eq(&self, a: &DegreeClass, b: &DegreeClass) -> bool {
        let diff = sub(&a.representative, &b.representative);
        self.reduce(&diff).iter().all(|&x| x == 0)
    }

    /// `d ≤ b` iff `b - d ∈ A`, i.e. the fiber of `b - d` is nonempty.
    pub fn class_leq(&self, d: &DegreeClass, b: &DegreeClass) -> bool {
        let diff = sub(&b.representative, &d.representative);
        match self.weight(&diff) {
            w if w < 0 => false,
            0 => self.reduce(&diff).iter().all(|&x| x == 0),
            _ => fiber::fiber_is_nonempty(self, &diff),
        }
    }

    /// `d < b`: `d ≤ b` and the classes differ.
    pub fn class_lt(&self, d: &DegreeClass, b: &DegreeClass) -> bool {
        !self.class_eq(d, b) && self.class_leq(d, b)
    }
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Decides `L ∩ N^n = {0}` for the lattice spanned by `rows`.
pub fn is_pointed(rows: &[Vec<i64>], n: usize) -> Result<bool> {
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    Ok(pointedness_witness(rows, n).is_none())
}

/// A nonzero vector of `L ∩ N^n`, if any.
///
/// Maximizes `Σ_j (zB)_j` over `0 ≤ zB ≤ 1`; a positive optimum yields a
/// rational point of the cone, which scales to an integer witness.
fn pointedness_witness(rows: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let r = rows.len();
    if r == 0 {
        return None;
    }
    let col = |j: usize| -> Vec<Q> { rows.iter().map(|row| lp::q(row[j])).collect() };
    let mut constraints = Vec::with_capacity(2 * n);
    for j in 0..n {
        let c = col(j);
        constraints.push(Constraint {
            coeffs: c.iter().map(|x| -x).collect(),
            rhs: lp::q(0),
        });
        constraints.push(Constraint {
            coeffs: c,
            rhs: lp::q(1),
        });
    }
    let objective: Vec<Q> = (0..r)
        .map(|i| lp::q(rows[i].iter().sum()))
        .collect();
    match lp::maximize(&objective, &constraints, &vec![VarKind::Free; r]) {
        LpOutcome::Optimal { value, point } if value.is_positive() => {
            let z = clear_denominators(&point);
            let v: Vec<BigInt> = (0..n)
                .map(|j| z.iter().zip(rows).map(|(zi, row)| zi * row[j]).sum())
                .collect();
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let v: Vec<BigInt> = v.into_iter().map(|x| x / &g).collect();
            Some(linalg::to_i64_vec(&v).unwrap_or_default())
        }
        _ => None,
    }
}

fn clear_denominators(point: &[Q]) -> Vec<BigInt> {
    let lcm = point
        .iter()
        .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    point
        .iter()
        .map(|x| (x * Q::from_integer(lcm.clone())).to_integer())
        .collect()
}

/// A strictly positive integer vector orthogonal to every row.
///
/// Exists exactly when the lattice is pointed. Minimizes `Σ w_j` subject to
/// `B w = 0, w ≥ 1` and scales the rational optimum to a primitive integer vector.
fn positive_grading(rows: &[Vec<i64>], n: usize) -> Result<Vec<i64>> {
    if rows.is_empty() {
        return Ok(vec![1; n]);
    }
    // w = 1 + v with v ≥ 0:  B v = -B 1.
    let mut constraints = Vec::with_capacity(2 * rows.len());
    for row in rows {
        let coeffs: Vec<Q> = row.iter().map(|&x| lp::q(x)).collect();
        let shift: i64 = row.iter().sum();
        constraints.push(Constraint {
            coeffs: coeffs.clone(),
            rhs: lp::q(-shift),
        });
        constraints.push(Constraint {
            coeffs: coeffs.iter().map(|x| -x).collect(),
            rhs: lp::q(shift),
        });
    }
    let objective = vec![lp::q(-1); n];
    match lp::maximize(&objective, &constraints, &vec![VarKind::NonNegative; n]) {
        LpOutcome::Optimal { point, .. } => {
            let w: Vec<Q> = point.iter().map(|v| v + lp::q(1)).collect();
            let w = clear_denominators(&w);
            let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let w: Vec<BigInt> = w.into_iter().map(|x| x / &g).collect();
            linalg::to_i64_vec(&w)
        }
        _ => Err(Error::NotPointed {
            witness: Vec::new(),
        }),
    }
}

/// An integer basis of `ker(A) ∩ Z^n`, checked for pointedness.
///
/// When every column sum of `A` is positive the grading is the column-sum
/// vector, so the weight of a class is the coordinate sum of its `A`-degree.
pub fn lattice_from_semigroup(a: &SemigroupMatrix) -> Result<LatticeBasis> {
    let n = a.num_generators();
    let kernel = linalg::integer_kernel(a.rows(), n)
        .iter()
        .map(|r| linalg::to_i64_vec(r))
        .collect::<Result<Vec<_>>>()?;
    let lattice = if kernel.is_empty() {
        LatticeBasis::zero(n)
    } else {
        LatticeBasis::new(kernel, n)?
    };
    let sums = a.column_sums();
    if sums.iter().all(|&s| s > 0) {
        lattice.with_grading(sums)
    } else {
        Ok(lattice)
    }
}
