#![allow(dead_code)]

pub mod checks;

use latscarf::cli::{parse_spec_str, ProblemSpec, FIXTURES};
use latscarf::fiber::{gcd_of, Monomial};
use latscarf::lattice::{is_pointed, LatticeBasis};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn fixture(name: &str) -> ProblemSpec {
    let text = FIXTURES.iter().find(|(n, _)| *n == name).unwrap().1;
    parse_spec_str(text).unwrap()
}

/// Fixture name, problem and a scan bound small enough for exhaustive subset checks.
pub fn fixtures_for_subsets() -> Vec<(&'static str, ProblemSpec, i64)> {
    vec![
        ("ex61", fixture("ex61"), 40),
        ("ex63", fixture("ex63"), 40),
        ("ex64", fixture("ex64"), 400),
    ]
}

pub fn fixtures_full() -> Vec<(&'static str, ProblemSpec, i64)> {
    vec![
        ("ex61", fixture("ex61"), 40),
        ("ex63", fixture("ex63"), 40),
        ("ex64", fixture("ex64"), 600),
    ]
}

/// Calls `f` on every nonempty subset of `items` with at most `max` elements.
pub fn for_each_subset<T: Clone>(items: &[T], max: usize, f: &mut impl FnMut(&[T])) {
    fn rec<T: Clone>(items: &[T], start: usize, max: usize, cur: &mut Vec<T>, f: &mut impl FnMut(&[T])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max {
            return;
        }
        for i in start..items.len() {
            cur.push(items[i].clone());
            rec(items, i + 1, max, cur, f);
            cur.pop();
        }
    }
    rec(items, 0, max, &mut Vec::new(), f);
}

pub fn gcd_is_one(set: &[Monomial]) -> bool {
    gcd_of(set).unwrap().is_one()
}

pub fn componentwise_max(vs: &[Vec<i64>]) -> Vec<i64> {
    let mut out = vs[0].clone();
    for v in &vs[1..] {
        for (o, x) in out.iter_mut().zip(v) {
            *o = (*o).max(*x);
        }
    }
    out
}

/// Condition 1 for `J`, written out directly: removing any one member
/// strictly lowers the componentwise maximum.
pub fn removal_lowers_max(j: &[Vec<i64>]) -> bool {
    if j.len() == 1 {
        return true;
    }
    let top = componentwise_max(j);
    (0..j.len()).all(|k| {
        let rest: Vec<Vec<i64>> = j
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, v)| v.clone())
            .collect();
        componentwise_max(&rest) != top
    })
}

/// A pointed lattice spanned by `rank` random rows of length `n`, entries in `[-3, 3]`.
pub fn random_pointed_lattice(rng: &mut ChaCha8Rng, rank: usize, n: usize) -> LatticeBasis {
    loop {
        let rows: Vec<Vec<i64>> = (0..rank)
            .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        if rows.iter().any(|r| r.iter().all(|&x| x == 0)) {
            continue;
        }
        if !matches!(is_pointed(&rows, n), Ok(true)) {
            continue;
        }
        if let Ok(l) = LatticeBasis::new(rows, n) {
            return l;
        }
    }
}

/// A scan bound giving every variable a few steps.
pub fn modest_bound(l: &LatticeBasis, steps: i64) -> i64 {
    steps * l.grading().iter().max().copied().unwrap_or(1)
}
