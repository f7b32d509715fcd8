//! Exact integer and finite-field linear algebra: row-style Hermite normal
//! form with a unimodular transform, integer kernels, integer solving, and
//! matrix rank over Q (fraction-free) or GF(p).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Row-style Hermite normal form `transform * input = hnf`.
///
/// The first `pivots.len()` rows of `hnf` are nonzero, in echelon form, with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
/// The remaining rows are zero.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub hnf: Vec<Vec<BigInt>>,
    pub transform: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn to_big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

fn axpy_row(rows: &mut [Vec<BigInt>], target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    let src = rows[source].clone();
    for (t, s) in rows[target].iter_mut().zip(&src) {
        *t -= factor * s;
    }
}

fn negate_row(rows: &mut [Vec<BigInt>], i: usize) {
    for x in rows[i].iter_mut() {
        *x = -std::mem::take(x);
    }
}

/// Computes the row-style Hermite normal form of `input` (m rows, `cols` columns).
pub fn hermite(input: &[Vec<BigInt>], cols: usize) -> Hnf {
    let m = input.len();
    let mut a: Vec<Vec<BigInt>> = input.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        // Euclid on the column below row r.
        loop {
            let best = (r..m)
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(p) = best else { break };
            a.swap(r, p);
            u.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[r][col]);
                axpy_row(&mut a, i, r, &q);
                axpy_row(&mut u, i, r, &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            negate_row(&mut a, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            axpy_row(&mut a, i, r, &q);
            axpy_row(&mut u, i, r, &q);
        }
        pivots.push(col);
        r += 1;
    }
    Hnf {
        hnf: a,
        transform: u,
        pivots,
    }
}

/// A basis (as rows) of the integer kernel `{ x ∈ Z^n : A x = 0 }` of the
/// `d × n` matrix `a`, returned in Hermite normal form.
pub fn integer_kernel(a: &[Vec<i64>], n: usize) -> Vec<Vec<BigInt>> {
    // Rows of U with zero image under U A^T = H span the left kernel of A^T.
    let at: Vec<Vec<BigInt>> = (0..n)
        .map(|j| a.iter().map(|row| BigInt::from(row[j])).collect())
        .collect();
    let h = hermite(&at, a.len());
    let kernel: Vec<Vec<BigInt>> = h.transform[h.rank()..].to_vec();
    if kernel.is_empty() {
        return kernel;
    }
    let reduced = hermite(&kernel, n);
    reduced.hnf[..reduced.rank()].to_vec()
}

/// Some `u ∈ Z^n` with `A u = b`, if one exists.
pub fn solve_integer(a: &[Vec<i64>], n: usize, b: &[i64]) -> Option<Vec<BigInt>> {
    let d = a.len();
    let at: Vec<Vec<BigInt>> = (0..n)
        .map(|j| a.iter().map(|row| BigInt::from(row[j])).collect())
        .collect();
    let h = hermite(&at, d);
    let mut residual: Vec<BigInt> = b.iter().map(|&x| BigInt::from(x)).collect();
    let mut y = vec![BigInt::zero(); n];
    for (i, &p) in h.pivots.iter().enumerate() {
        let (q, rem) = residual[p].div_rem(&h.hnf[i][p]);
        if !rem.is_zero() {
            return None;
        }
        for (res, hv) in residual.iter_mut().zip(&h.hnf[i]) {
            *res -= &q * hv;
        }
        y[i] = q;
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // u^T = y^T U
    let mut u = vec![BigInt::zero(); n];
    for (yi, row) in y.iter().zip(&h.transform) {
        if yi.is_zero() {
            continue;
        }
        for (uj, t) in u.iter_mut().zip(row) {
            *uj += yi * t;
        }
    }
    Some(u)
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut a = to_big(rows);
    let m = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == m {
            break;
        }
        let Some(p) = (rank..m).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..m {
            for j in col + 1..cols {
                let v = (&a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over GF(p); `p` must be prime.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let pm = p as i128;
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| (x as i128).rem_euclid(pm) as u64).collect())
        .collect();
    let m = a.len();
    let mut rank = 0;
    for col in 0..cols {
        if rank == m {
            break;
        }
        let Some(piv) = (rank..m).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for j in col..cols {
            a[rank][j] = mul_mod(a[rank][j], inv, p);
        }
        for i in rank + 1..m {
            let f = a[i][col];
            if f == 0 {
                continue;
            }
            for j in col..cols {
                let sub = mul_mod(f, a[rank][j], p);
                a[i][j] = (a[i][j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
