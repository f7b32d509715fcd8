//! A small dense two-phase simplex over exact rationals (Bland's rule).
//!
//! Problems here have a handful of variables and constraints, so the tableau
//! is rebuilt freely and reduced costs are recomputed every pivot.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Free,
    NonNegative,
}

/// `coeffs · x ≤ rhs`
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal { value: Q, point: Vec<Q> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        self.rhs[row] /= &p;
        let prow = self.rows[row].clone();
        let prhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (x, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *x -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[row] = col;
    }

    /// Maximizes `cost · x` over the current basis. `allowed` masks entering columns.
    fn optimize(&mut self, cost: &[Q], allowed: &[bool]) -> bool {
        let ncols = cost.len();
        loop {
            let entering = (0..ncols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(col) = entering else { return true };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][col];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((row, _)) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective · x` subject to `constraints`, with per-variable sign
/// restrictions given by `kinds`.
pub fn maximize(objective: &[Q], constraints: &[Constraint], kinds: &[VarKind]) -> LpOutcome {
    let nvars = objective.len();
    debug_assert_eq!(kinds.len(), nvars);
    // Column layout: one or two columns per variable, then slacks, then artificials.
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(nvars);
    let mut ncols = 0;
    for kind in kinds {
        match kind {
            VarKind::NonNegative => {
                var_cols.push((ncols, None));
                ncols += 1;
            }
            VarKind::Free => {
                var_cols.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
    }
    let nstruct = ncols;
    let m = constraints.len();
    let slack0 = nstruct;
    ncols += m;
    let negative_rows: Vec<usize> = (0..m)
        .filter(|&i| constraints[i].rhs.is_negative())
        .collect();
    let art0 = ncols;
    ncols += negative_rows.len();

    let mut rows = vec![vec![Q::zero(); ncols]; m];
    let mut rhs = vec![Q::zero(); m];
    let mut basis = vec![0; m];
    for (i, c) in constraints.iter().enumerate() {
        let sign = if c.rhs.is_negative() { -Q::one() } else { Q::one() };
        for (v, a) in c.coeffs.iter().enumerate() {
            let (pos, neg) = var_cols[v];
            rows[i][pos] = &sign * a;
            if let Some(neg) = neg {
                rows[i][neg] = -(&sign * a);
            }
        }
        rows[i][slack0 + i] = sign.clone();
        rhs[i] = &sign * &c.rhs;
        basis[i] = slack0 + i;
    }
    for (k, &i) in negative_rows.iter().enumerate() {
        rows[i][art0 + k] = Q::one();
        basis[i] = art0 + k;
    }
    let mut tab = Tableau { rows, rhs, basis };

    if !negative_rows.is_empty() {
        let mut cost = vec![Q::zero(); ncols];
        for c in cost.iter_mut().skip(art0) {
            *c = -Q::one();
        }
        let allowed = vec![true; ncols];
        tab.optimize(&cost, &allowed);
        let infeasibility: Q = tab
            .basis
            .iter()
            .zip(&tab.rhs)
            .filter(|(&b, _)| b >= art0)
            .map(|(_, v)| v.clone())
            .sum();
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-valued artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= art0 {
                match (0..art0).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(j) => {
                        tab.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        tab.rows.remove(i);
                        tab.rhs.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut cost = vec![Q::zero(); ncols];
    for (v, c) in objective.iter().enumerate() {
        let (pos, neg) = var_cols[v];
        cost[pos] = c.clone();
        if let Some(neg) = neg {
            cost[neg] = -c.clone();
        }
    }
    let allowed: Vec<bool> = (0..ncols).map(|j| j < art0).collect();
    if !tab.optimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let mut col_values = vec![Q::zero(); ncols];
    for (i, &b) in tab.basis.iter().enumerate() {
        col_values[b] = tab.rhs[i].clone();
    }
    let point: Vec<Q> = var_cols
        .iter()
        .map(|&(pos, neg)| match neg {
            Some(neg) => &col_values[pos] - &col_values[neg],
            None => col_values[pos].clone(),
        })
        .collect();
    let value = objective.iter().zip(&point).map(|(c, x)| c * x).sum();
    LpOutcome::Optimal { value, point }
}
