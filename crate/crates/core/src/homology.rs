//! Simplicial complexes attached to fibers, reduced homology over Q or GF(p),
//! and multigraded Betti tables.
//!
//! Index convention: `β_{i,b}(R/I_L) = dim H̃_{i-1}(Δ_gcd(b))` for `i ≥ 1`,
//! with standard reduced homology. Under this convention a two-element fiber
//! with coprime monomials (two points) gives `β_1 = 1`, a generator degree.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::fiber::{enumerate_fiber, DegreeScan, Fiber};
use crate::lattice::{DegreeClass, LatticeBasis};
use crate::linalg;

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if linalg::is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(p))
        }
    }

    fn rank(&self, rows: &[Vec<i64>]) -> usize {
        match self {
            Field::Rational => linalg::rank_rational(rows),
            Field::Prime(p) => linalg::rank_mod_p(rows, *p),
        }
    }
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// A simplicial complex on vertices `0..num_vertices`, given by its facets.
///
/// The face set is the downward closure of the facets together with the
/// empty face. A vertex lying in no facet is not a face of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `sets`; non-maximal sets are dropped.
    pub fn from_facets(num_vertices: usize, sets: Vec<Vec<usize>>) -> Self {
        let mut sets: Vec<Vec<usize>> = sets
            .into_iter()
            .filter(|s| !s.is_empty())
            .map(|s| s.into_iter().collect::<BTreeSet<_>>().into_iter().collect())
            .collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        sets.dedup();
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for s in sets {
            if !facets.iter().any(|f| is_subset(&s, f)) {
                facets.push(s);
            }
        }
        facets.sort();
        Self {
            num_vertices,
            facets,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Vertices that are faces, i.e. lie in some facet.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        face.is_empty() || self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Edges of the 1-skeleton, as sorted vertex pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = BTreeSet::new();
        for f in &self.facets {
            for (i, &a) in f.iter().enumerate() {
                for &b in &f[i + 1..] {
                    set.insert((a, b));
                }
            }
        }
        set.into_iter().collect()
    }

    /// All faces grouped by dimension: `result[k]` holds the faces with `k`
    /// vertices (so `result[0] = [∅]`).
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let mut sets: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new()];
        sets[0].insert(Vec::new());
        for f in &self.facets {
            let k = f.len();
            if sets.len() <= k {
                sets.resize_with(k + 1, BTreeSet::new);
            }
            for mask in 1u64..(1u64 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                sets[face.len()].insert(face);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    fn face_count_estimate(&self) -> usize {
        self.facets
            .iter()
            .map(|f| 1usize.checked_shl(f.len() as u32).unwrap_or(usize::MAX))
            .fold(1usize, |a, b| a.saturating_add(b))
    }

    /// Euler characteristic `Σ_k (-1)^k f_k` over nonempty faces of dimension `k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces_by_size()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(size, faces)| {
                let sign = if size % 2 == 1 { 1 } else { -1 };
                sign * faces.len() as i64
            })
            .sum()
    }

    /// The nerve of the facet cover: vertices are facets, faces are sets of
    /// facets with a common vertex. It has the homotopy type of the complex.
    pub fn nerve(&self) -> SimplicialComplex {
        let m = self.facets.len();
        let sets: Vec<Vec<usize>> = self
            .vertices()
            .into_iter()
            .map(|v| (0..m).filter(|&i| self.facets[i].contains(&v)).collect())
            .collect();
        SimplicialComplex::from_facets(m, sets)
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|x| big.binary_search(x).is_ok())
}

/// Reduced homology dimensions: `dims[k] = dim H̃_{k-1}`, so `dims[0]` is
/// `H̃_{-1}` (nonzero only for the complex whose only face is `∅`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    /// `dim H̃_j` for `j ≥ -1`.
    pub fn dim(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ_j (-1)^j dim H̃_j` over `j ≥ -1`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| {
                let j = k as i64 - 1;
                if j.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

/// Reduced simplicial homology from exact boundary-matrix ranks.
///
/// Works on whichever of the complex and the nerve of its facets is
/// smaller; the two are homotopy equivalent.
pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> ReducedHomology {
    if !complex.facets.is_empty() {
        let nerve = complex.nerve();
        if nerve.face_count_estimate() < complex.face_count_estimate() {
            return reduced_homology_dims(&nerve, field);
        }
    }
    let faces = complex.faces_by_size();
    let index: Vec<HashMap<&Vec<usize>, usize>> = faces
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();
    // ranks[k] = rank of the boundary from faces with k vertices to k-1 vertices.
    let mut ranks = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|face| {
                let mut row = vec![0i64; faces[k - 1].len()];
                for drop in 0..face.len() {
                    let mut sub = face.clone();
                    sub.remove(drop);
                    let col = index[k - 1][&sub];
                    row[col] = if drop % 2 == 0 { 1 } else { -1 };
                }
                row
            })
            .collect();
        ranks[k] = field.rank(&rows);
    }
    let dims = (0..faces.len())
        .map(|k| faces[k].len() - ranks[k] - ranks[k + 1])
        .collect();
    ReducedHomology { dims }
}

/// `Δ_gcd(b)`: vertices are the fiber's monomials (in fiber order); a set is
/// a face iff some variable divides all of its members, so the facets are
/// the maximal sets `V_i = { m : x_i | m }`.
pub fn gcd_complex(fiber: &Fiber) -> Result<SimplicialComplex> {
    let first = fiber.members.first().ok_or(Error::EmptyFiber)?;
    let n = first.len();
    let sets = (0..n)
        .map(|i| {
            (0..fiber.len())
                .filter(|&k| fiber.members[k].exponents()[i] > 0)
                .collect()
        })
        .collect();
    Ok(SimplicialComplex::from_facets(fiber.len(), sets))
}

/// `Δ_b`: vertices are the variables; facets are the supports of the fiber's monomials.
pub fn support_complex(fiber: &Fiber) -> Result<SimplicialComplex> {
    let first = fiber.members.first().ok_or(Error::EmptyFiber)?;
    let sets = fiber.members.iter().map(|m| m.support()).collect();
    Ok(SimplicialComplex::from_facets(first.len(), sets))
}

/// Vertex sets of the connected components of the 1-skeleton, including
/// every vertex index `0..num_vertices` (vertices in no facet are singletons).
pub fn connected_components(complex: &SimplicialComplex) -> Vec<Vec<usize>> {
    let n = complex.num_vertices;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for f in &complex.facets {
        for w in f.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for v in 0..n {
        let root = find(&mut parent, v);
        groups.entry(root).or_default().push(v);
    }
    groups.into_values().collect()
}

/// `β_{i,b} = dim H̃_{i-1}(Δ_gcd(b))`, for `i ≥ 1`.
pub fn betti_at(lattice: &LatticeBasis, i: usize, b: &DegreeClass, field: Field) -> Result<usize> {
    let fiber = enumerate_fiber(lattice, b.representative())?;
    if fiber.is_empty() || i == 0 {
        return Ok(0);
    }
    let h = reduced_homology_dims(&gcd_complex(&fiber)?, field);
    Ok(h.dim(i as isize - 1))
}

/// One nonzero Betti number.
#[derive(Clone, Debug)]
pub struct BettiEntry {
    pub index: usize,
    pub degree: DegreeClass,
    pub weight: i64,
    pub value: usize,
}

/// Nonzero `β_{i,b}` for `i ≥ 1` over all classes of weight `≤ scan_bound`.
#[derive(Clone, Debug)]
pub struct BettiTable {
    pub scan_bound: i64,
    pub field: Field,
    entries: Vec<BettiEntry>,
}

impl BettiTable {
    pub fn from_scan(lattice: &LatticeBasis, scan: &DegreeScan, field: Field) -> Self {
        let mut entries = Vec::new();
        for fiber in scan.fibers().iter().filter(|f| f.len() >= 2) {
            let complex = gcd_complex(fiber).expect("scanned fibers are nonempty");
            let h = reduced_homology_dims(&complex, field);
            for (k, &d) in h.as_slice().iter().enumerate().skip(1) {
                if d > 0 {
                    entries.push(BettiEntry {
                        index: k,
                        degree: fiber.degree.clone(),
                        weight: lattice.weight(fiber.degree.representative()),
                        value: d,
                    });
                }
            }
        }
        let mut table = Self {
            scan_bound: scan.bound(),
            field,
            entries,
        };
        table.sort();
        table
    }

    fn sort(&mut self) {
        self.entries.sort_by(|a, b| {
            (a.index, a.weight, a.degree.representative())
                .cmp(&(b.index, b.weight, b.degree.representative()))
        });
    }

    pub fn entries(&self) -> &[BettiEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry (0 if none).
    pub fn max_index(&self) -> usize {
        self.entries.iter().map(|e| e.index).max().unwrap_or(0)
    }

    pub fn degrees(&self, i: usize) -> Vec<&BettiEntry> {
        self.entries.iter().filter(|e| e.index == i).collect()
    }

    pub fn value(&self, lattice: &LatticeBasis, i: usize, b: &DegreeClass) -> usize {
        self.entries
            .iter()
            .find(|e| e.index == i && lattice.class_eq(&e.degree, b))
            .map_or(0, |e| e.value)
    }

    /// `Σ_b β_{i,b}` for `i = 1..=max_index`.
    pub fn totals(&self) -> Vec<usize> {
        (1..=self.max_index())
            .map(|i| self.degrees(i).iter().map(|e| e.value).sum())
            .collect()
    }
}

/// Betti numbers of every class of weight `≤ bound`.
pub fn betti_scan(lattice: &LatticeBasis, bound: i64, field: Field) -> BettiTable {
    let scan = DegreeScan::new(lattice, bound);
    betti_table(lattice, &scan, field)
}

pub fn betti_table(lattice: &LatticeBasis, scan: &DegreeScan, field: Field) -> BettiTable {
    BettiTable::from_scan(lattice, scan, field)
}

/// Minimal elements of `{ b : β_{i,b} ≠ 0 }` under the semigroup order.
pub fn minimal_betti_degrees(lattice: &LatticeBasis, table: &BettiTable, i: usize) -> Vec<DegreeClass> {
    let degrees = table.degrees(i);
    degrees
        .iter()
        .filter(|b| {
            !degrees
                .iter()
                .any(|d| d.weight < b.weight && lattice.class_lt(&d.degree, &b.degree))
        })
        .map(|e| e.degree.clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::Monomial;
    use crate::lattice::{lattice_from_semigroup, SemigroupMatrix};

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|f| f.to_vec()).collect())
    }

    fn ex63() -> (SemigroupMatrix, LatticeBasis) {
        let a = SemigroupMatrix::new(vec![vec![6, 4, 2, 0, 5], vec![0, 2, 4, 6, 4]]).unwrap();
        let l = lattice_from_semigroup(&a).unwrap();
        (a, l)
    }

    fn fiber_at(a: &SemigroupMatrix, l: &LatticeBasis, deg: &[i64]) -> Fiber {
        enumerate_fiber(l, &a.preimage(deg).unwrap()).unwrap()
    }

    #[test]
    fn facets_are_maximal() {
        let k = complex(4, &[&[0, 1], &[0, 1, 2], &[1], &[3]]);
        assert_eq!(k.facets(), &[vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn homology_of_small_complexes() {
        let two_edges = complex(4, &[&[0, 1], &[2, 3]]);
        let h = reduced_homology_dims(&two_edges, Field::Rational);
        assert_eq!((h.dim(-1), h.dim(0), h.dim(1)), (0, 1, 0));

        let hollow = complex(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let h = reduced_homology_dims(&hollow, Field::Rational);
        assert_eq!((h.dim(0), h.dim(1)), (0, 1));

        let solid_plus_point = complex(4, &[&[0, 1, 2], &[3]]);
        let h = reduced_homology_dims(&solid_plus_point, Field::Rational);
        assert_eq!((h.dim(0), h.dim(1), h.dim(2)), (1, 0, 0));

        let empty = complex(0, &[]);
        let h = reduced_homology_dims(&empty, Field::Rational);
        assert_eq!(h.dim(-1), 1);
        assert!(h.as_slice()[1..].iter().all(|&d| d == 0));
    }

    #[test]
    fn nerve_route_matches_direct_route() {
        // Two solid 13-simplices sharing a vertex plus a hollow triangle of big facets.
        let a: Vec<usize> = (0..13).collect();
        let b: Vec<usize> = (12..25).collect();
        let k = SimplicialComplex::from_facets(30, vec![a, b, vec![25, 26], vec![26, 27], vec![25, 27]]);
        assert!(k.nerve().face_count_estimate() < k.face_count_estimate());
        let h = reduced_homology_dims(&k, Field::Rational);
        assert_eq!((h.dim(0), h.dim(1)), (1, 1));
    }

    #[test]
    fn euler_characteristics_agree() {
        let k = complex(5, &[&[0, 1, 2], &[2, 3], &[3, 4], &[2, 4]]);
        let h = reduced_homology_dims(&k, Field::Rational);
        assert_eq!(k.euler_characteristic() - 1, h.euler_characteristic());
    }

    #[test]
    fn ex63_gcd_complex_hollow_triangle_and_point() {
        let (a, l) = ex63();
        let f = fiber_at(&a, &l, &[10, 8]);
        let k = gcd_complex(&f).unwrap();
        let e2 = f.position(&Monomial::new(vec![0, 0, 0, 0, 2]).unwrap()).unwrap();
        // no variable divides all of abd, ac^2, b^2c, so only the edges appear
        assert_eq!(k.facets().len(), 4);
        assert!(k.facets().contains(&vec![e2]));
        assert_eq!(connected_components(&k).len(), 2);
        let h = reduced_homology_dims(&k, Field::Rational);
        assert_eq!((h.dim(0), h.dim(1)), (1, 1));
    }

    #[test]
    fn single_monomial_fiber_is_one_vertex() {
        let (a, l) = ex63();
        let f = fiber_at(&a, &l, &[6, 0]);
        let k = gcd_complex(&f).unwrap();
        assert_eq!(k.facets(), &[vec![0]]);
        assert_eq!(connected_components(&k), vec![vec![0]]);
    }

    #[test]
    fn support_complexes() {
        let (a, l) = ex63();
        let k = support_complex(&fiber_at(&a, &l, &[6, 6])).unwrap();
        assert_eq!(k.facets(), &[vec![0, 3], vec![1, 2]]);
        let k = support_complex(&fiber_at(&a, &l, &[10, 8])).unwrap();
        assert_eq!(
            k.facets(),
            &[vec![0, 1, 3], vec![0, 2], vec![1, 2], vec![4]]
        );
        let k = support_complex(&fiber_at(&a, &l, &[0, 0])).unwrap();
        assert!(k.facets().is_empty());
        assert_eq!(reduced_homology_dims(&k, Field::Rational).dim(-1), 1);
    }

    #[test]
    fn betti_at_examples() {
        let (a, l) = ex63();
        let b = l.class_of(&a.preimage(&[10, 8]).unwrap()).unwrap();
        assert_eq!(betti_at(&l, 1, &b, Field::Rational).unwrap(), 1);
        let single = l.class_of(&a.preimage(&[6, 0]).unwrap()).unwrap();
        for i in 1..5 {
            assert_eq!(betti_at(&l, i, &single, Field::Rational).unwrap(), 0);
        }
    }

    #[test]
    fn minimal_first_betti_degrees() {
        let (a, l) = ex63();
        let t = betti_scan(&l, 40, Field::Rational);
        let mut mins: Vec<Vec<i64>> = minimal_betti_degrees(&l, &t, 1)
            .iter()
            .map(|b| a.degree_of(b.representative()))
            .collect();
        mins.sort();
        // (10,8) = (6,6) + (4,2) is dominated
        assert_eq!(mins, vec![vec![4, 8], vec![6, 6], vec![8, 4]]);
        let mins2 = minimal_betti_degrees(&l, &t, 2);
        let ten_eight = l.class_of(&a.preimage(&[10, 8]).unwrap()).unwrap();
        assert!(mins2.iter().any(|b| l.class_eq(b, &ten_eight)));
    }

    #[test]
    fn empty_fiber_rejected_by_complex_builders() {
        let l = LatticeBasis::zero(2);
        let f = enumerate_fiber(&l, &[-1, 0]).unwrap();
        assert_eq!(gcd_complex(&f), Err(Error::EmptyFiber));
        assert_eq!(support_complex(&f), Err(Error::EmptyFiber));
    }

    #[test]
    fn zero_lattice_has_empty_table() {
        let l = LatticeBasis::zero(3);
        assert!(betti_scan(&l, 10, Field::Rational).is_empty());
    }

    #[test]
    fn invalid_field_rejected() {
        assert_eq!(Field::prime(10), Err(Error::InvalidField(10)));
        assert_eq!(Field::prime(7), Ok(Field::Prime(7)));
    }
}
