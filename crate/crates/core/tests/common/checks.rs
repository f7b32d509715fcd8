//! Exhaustive structural checks, each returning the number of cases checked
//! or a description of the first counterexample.

use latscarf::cli::ProblemSpec;
use latscarf::fiber::{
    enumerate_fiber, enumerate_fiber_box_oracle, gcd_of, reduce_by_gcd, DegreeScan, Monomial,
};
use latscarf::homology::{gcd_complex, reduced_homology_dims, support_complex, Field};
use latscarf::lattice::{DegreeClass, LatticeBasis};
use latscarf::scarf::{
    algebraic_scarf_subcomplex, basic_components_of, bmax, build_generalized_scarf_complex,
    in_generalized_scarf, is_basic_fiber, monomials_of, strongly_algebraic_subcomplex,
    verify_zero_composition, witness_of, Bmax, LatticeSubset, ScarfPoset, StrongMode,
};
use latscarf::BettiTable;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{for_each_subset, gcd_is_one, random_pointed_lattice, removal_lowers_max};

pub type Outcome = Result<usize, String>;

/// Δ_gcd(b) and Δ_b have the same reduced homology at every scanned degree.
pub fn gcd_vs_support(spec: &ProblemSpec, bound: i64) -> Outcome {
    let scan = DegreeScan::new(&spec.lattice, bound);
    for fiber in scan.fibers() {
        let g = reduced_homology_dims(&gcd_complex(fiber).unwrap(), Field::Rational);
        let s = reduced_homology_dims(&support_complex(fiber).unwrap(), Field::Rational);
        let trim = |v: &[usize]| {
            let mut v = v.to_vec();
            while v.last() == Some(&0) {
                v.pop();
            }
            v
        };
        if trim(g.as_slice()) != trim(s.as_slice()) {
            return Err(format!(
                "{}: degree {:?}: gcd {:?} vs support {:?}",
                spec.name,
                fiber.degree.representative(),
                g.as_slice(),
                s.as_slice()
            ));
        }
    }
    Ok(scan.fibers().len())
}

/// θ∘θ = 0 for the generalized complex and both subcomplexes.
pub fn zero_composition(lattice: &LatticeBasis, bound: i64, label: &str) -> Outcome {
    let scan = DegreeScan::new(lattice, bound);
    let full = build_generalized_scarf_complex(&ScarfPoset::from_scan(&scan)).map_err(|e| format!("{label}: {e}"))?;
    let table = BettiTable::from_scan(lattice, &scan, Field::Rational);
    let complexes = [
        ("generalized", full.clone()),
        ("scarf", algebraic_scarf_subcomplex(&full)),
        ("strong/strict", strongly_algebraic_subcomplex(lattice, &full, &table, StrongMode::Strict)),
        ("strong/paper", strongly_algebraic_subcomplex(lattice, &full, &table, StrongMode::Paper)),
    ];
    for (name, x) in &complexes {
        if !verify_zero_composition(x) {
            return Err(format!("{label}: {name} complex has θ∘θ ≠ 0 (ranks {:?})", x.ranks()));
        }
    }
    Ok(complexes.len())
}

pub fn zero_composition_random(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for k in 0..count {
        let n = if k % 2 == 0 { 4 } else { 5 };
        let l = random_pointed_lattice(&mut rng, 2, n);
        let bound = random_bound(&l);
        zero_composition(&l, bound, &format!("lattice {:?}", l.rows()))?;
        checked += 1;
    }
    Ok(checked)
}

/// Enough to reach several multiples of the heaviest generator, capped so
/// the scan stays small.
pub fn random_bound(l: &LatticeBasis) -> i64 {
    let w = l.grading();
    let max = *w.iter().max().unwrap();
    let min = *w.iter().min().unwrap();
    (3 * max).min(12 * min).max(2 * max)
}

/// G ⊂ C_b equals some C_J iff gcd(G) = 1, checked on every subset of size ≤ 6.
///
/// If `C_J = G` then `J` is a translate of `{e - u : x^u ∈ G}` for any
/// `x^e ∈ G`, so trying one anchor decides expressibility.
pub fn gcd_one_expressibility(spec: &ProblemSpec, bound: i64) -> Outcome {
    let scan = DegreeScan::new(&spec.lattice, bound);
    let mut checked = 0;
    let mut failure = None;
    for fiber in scan.fibers() {
        for_each_subset(&fiber.members, 6, &mut |g: &[Monomial]| {
            if failure.is_some() {
                return;
            }
            checked += 1;
            let mut sorted = g.to_vec();
            sorted.sort();
            let anchor = &sorted[0];
            let j: Vec<Vec<i64>> = sorted
                .iter()
                .map(|m| anchor.exponents().iter().zip(m.exponents()).map(|(a, b)| a - b).collect())
                .collect();
            let top = super::componentwise_max(&j);
            let mut c_j: Vec<Monomial> = j
                .iter()
                .map(|a| Monomial::new(top.iter().zip(a).map(|(t, x)| t - x).collect()).unwrap())
                .collect();
            c_j.sort();
            let expressible = c_j == sorted;
            if expressible != gcd_is_one(&sorted) {
                failure = Some(format!("{}: subset {:?}", spec.name, sorted));
            }
        });
    }
    failure.map_or(Ok(checked), Err)
}

/// `gcd(C_J \ {m}) = x^{bmax(J) - bmax(J \ {a})}`, and `[C \ I]` is a basic
/// fiber for every nonempty `I ⊊ C`, over every basic component.
pub fn punctures_and_closure(spec: &ProblemSpec, bound: i64) -> Outcome {
    let l = &spec.lattice;
    let poset = ScarfPoset::from_scan(&DegreeScan::new(l, bound));
    let mut checked = 0;
    for c in poset.elements() {
        let j = &c.witness;
        let Bmax::Vector(top) = bmax(j.members()) else {
            return Err("empty witness".into());
        };
        if monomials_of(j).unwrap() != c.monomials {
            return Err(format!("{}: witness does not reproduce {:?}", spec.name, c.monomials));
        }
        if j.len() >= 2 {
            for k in 0..j.len() {
                let a = &j.members()[k];
                let m = Monomial::new(top.iter().zip(a).map(|(t, x)| t - x).collect()).unwrap();
                let rest: Vec<Monomial> = c.monomials.iter().filter(|x| **x != m).cloned().collect();
                let Bmax::Vector(punct) = bmax(j.without(k).members()) else {
                    return Err("bottom".into());
                };
                let expected = Monomial::new(top.iter().zip(&punct).map(|(t, p)| t - p).collect()).unwrap();
                if gcd_of(&rest).unwrap() != expected {
                    return Err(format!("{}: punctured gcd of {:?} at {:?}", spec.name, c.monomials, m));
                }
                checked += 1;
            }
        }
        let idx: Vec<usize> = (0..c.len()).collect();
        let mut failure = None;
        for_each_subset(&idx, c.len() - 1, &mut |removed: &[usize]| {
            if failure.is_some() || removed.len() == c.len() {
                return;
            }
            let rest: Vec<Monomial> = (0..c.len())
                .filter(|i| !removed.contains(i))
                .map(|i| c.monomials[i].clone())
                .collect();
            let reduced = reduce_by_gcd(&rest).unwrap();
            let b = DegreeClass::new(reduced[0].exponents().to_vec());
            let fiber = enumerate_fiber(l, b.representative()).unwrap();
            if fiber.members != reduced || !is_basic_fiber(l, &b).unwrap() {
                failure = Some(format!("{}: [C \\ I] = {:?} is not a basic fiber", spec.name, reduced));
            }
            checked += 1;
        });
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(checked)
}

/// Components accepted by the connected-component test equal the gcd-free
/// subsets `G ⊂ C_b` whose anchored `J` lies in the generalized Scarf complex.
pub fn cbasic_vs_scarf(spec: &ProblemSpec, bound: i64) -> Outcome {
    let l = &spec.lattice;
    let n = l.num_vars();
    let scan = DegreeScan::new(l, bound);
    for fiber in scan.fibers() {
        let mut computed: Vec<Vec<Monomial>> = basic_components_of(fiber)
            .unwrap()
            .into_iter()
            .map(|c| c.monomials)
            .collect();
        computed.sort();
        let mut oracle: Vec<Vec<Monomial>> = Vec::new();
        let mut error = None;
        for_each_subset(&fiber.members, n, &mut |g: &[Monomial]| {
            if error.is_some() || !gcd_is_one(g) {
                return;
            }
            let j = witness_of(g);
            if !removal_lowers_max(j.members()) {
                return;
            }
            let j = match LatticeSubset::new(l, j.members().to_vec()) {
                Ok(j) => j,
                Err(e) => {
                    error = Some(e.to_string());
                    return;
                }
            };
            match in_generalized_scarf(l, &j) {
                Ok(true) => oracle.push(g.to_vec()),
                Ok(false) => {}
                Err(e) => error = Some(e.to_string()),
            }
        });
        if let Some(e) = error {
            return Err(e);
        }
        oracle.sort();
        if computed != oracle {
            return Err(format!(
                "{}: degree {:?}: c-basic {:?} vs Scarf {:?}",
                spec.name,
                fiber.degree.representative(),
                computed,
                oracle
            ));
        }
    }
    Ok(scan.fibers().len())
}

/// LP-guided fiber enumeration against a brute-force box scan.
pub fn box_oracle(count: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    while checked < count {
        let n = rng.gen_range(2..=4);
        let rank = rng.gen_range(1..n);
        let l = random_pointed_lattice(&mut rng, rank, n);
        let u0: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        let w = l.grading();
        let total: i64 = w.iter().zip(&u0).map(|(a, b)| a * b).sum();
        let side = w.iter().map(|&wj| total / wj).max().unwrap();
        if (side + 1).checked_pow(n as u32).is_none_or(|c| c > 200_000) {
            continue;
        }
        let fast = enumerate_fiber(&l, &u0).unwrap();
        let slow = enumerate_fiber_box_oracle(&l, &u0, side);
        if fast.members != slow.members {
            return Err(format!(
                "lattice {:?}, u0 {:?}: {:?} vs {:?}",
                l.rows(),
                u0,
                fast.members,
                slow.members
            ));
        }
        checked += 1;
    }
    Ok(checked)
}
