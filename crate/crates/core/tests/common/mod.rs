//! Brute-force oracles and seeded random inputs shared by the integration
//! tests. Nothing here calls the algorithms under test; every answer comes
//! from the definitions, scanned over finite boxes.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use agraded::grading::GradingMap;
use agraded::{ExponentVector, Face, MonomialIdeal, StandardPair};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ev(v: &[u32]) -> ExponentVector {
    ExponentVector::new(v.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::with_default_names(n, gens.iter().map(|g| ev(g)).collect()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every point of `[0, bound]`, as plain vectors.
pub fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out.into_iter().flat_map(|p| (0..=b).map(move |t| [p.clone(), vec![t]].concat())).collect();
    }
    out
}

fn divides(g: &[u32], a: &[u32]) -> bool {
    g.iter().zip(a).all(|(x, y)| x <= y)
}

pub fn in_ideal(gens: &[Vec<u32>], a: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, a))
}

pub fn raw_generators(i: &MonomialIdeal) -> Vec<Vec<u32>> {
    i.generators().iter().map(|g| g.as_slice().to_vec()).collect()
}

/// Largest exponent of each variable over the generators.
pub fn max_exponents(gens: &[Vec<u32>], n: usize) -> Vec<u32> {
    (0..n).map(|j| gens.iter().map(|g| g[j]).max().unwrap_or(0)).collect()
}

/// A random monomial ideal with `n <= 5` variables and exponents `<= 4`.
/// The unit ideal is never produced.
pub fn random_monomial_ideal(r: &mut ChaCha8Rng) -> MonomialIdeal {
    let n = r.gen_range(1..=5);
    let k = r.gen_range(1..=5);
    let mut gens = Vec::new();
    while gens.len() < k {
        let g: Vec<u32> = (0..n).map(|_| if r.gen_bool(0.6) { r.gen_range(0..=4) } else { 0 }).collect();
        if g.iter().any(|&x| x > 0) {
            gens.push(ExponentVector::new(g));
        }
    }
    MonomialIdeal::with_default_names(n, gens).unwrap()
}

/// The shared corpus: `count` ideals from a fixed seed.
pub fn corpus(count: usize) -> Vec<MonomialIdeal> {
    let mut r = rng(0x5eed_0001);
    (0..count).map(|_| random_monomial_ideal(&mut r)).collect()
}

/// Standard monomials of `[0, bound]`, grown from `1` one variable at a time
/// (they form a down-set).
pub fn standard_in_box(gens: &[Vec<u32>], bound: &[u32]) -> Vec<Vec<u32>> {
    let n = bound.len();
    let mut out = Vec::new();
    let mut stack = vec![vec![0u32; n]];
    let mut seen = HashSet::new();
    while let Some(r) = stack.pop() {
        if in_ideal(gens, &r) || !seen.insert(r.clone()) {
            continue;
        }
        for j in 0..n {
            if r[j] < bound[j] {
                let mut up = r.clone();
                up[j] += 1;
                stack.push(up);
            }
        }
        out.push(r);
    }
    out.sort();
    out
}

/// `(r, ℓ)` with `r` supported off `ℓ` and `r + N^ℓ` disjoint from the ideal.
///
/// A generator `g` meets `r + N^ℓ` exactly when it divides `r` off `ℓ`, since
/// the coordinates in `ℓ` can be raised freely.
fn admissible(gens: &[Vec<u32>], r: &[u32], face: u64) -> bool {
    !gens.iter().any(|g| g.iter().enumerate().all(|(j, &x)| face >> j & 1 == 1 || x <= r[j]))
}

/// Standard pairs by definition: all admissible pairs with roots in the
/// box `[0, D]` (`D` the largest generator exponents), kept when no other
/// admissible pair contains them.
///
/// A root coordinate `r_j >= D_j` off the face can be traded for `j` in the
/// face, so the box holds every root of a maximal pair. Roots are standard
/// monomials and admissible faces are closed under taking subsets, so both
/// are grown from below instead of scanning every candidate.
pub fn brute_standard_pairs(i: &MonomialIdeal) -> Vec<StandardPair> {
    let n = i.n();
    let gens = raw_generators(i);
    let d = max_exponents(&gens, n);
    let mut admissible_set: HashSet<(Vec<u32>, u64)> = HashSet::new();
    for r in standard_in_box(&gens, &d) {
        let mut faces = vec![0u64];
        while let Some(face) = faces.pop() {
            if !admissible(&gens, &r, face) {
                continue;
            }
            let top = (0..n).rev().find(|&j| face >> j & 1 == 1).map_or(0, |j| j + 1);
            for j in top..n {
                if r[j] == 0 {
                    faces.push(face | 1 << j);
                }
            }
            admissible_set.insert((r.clone(), face));
        }
    }
    let faces: BTreeSet<u64> = admissible_set.iter().map(|(_, f)| *f).collect();
    let mut out: Vec<StandardPair> = admissible_set
        .iter()
        .filter(|(r, face)| {
            // (r', ℓ') ⊋ (r, ℓ) forces ℓ ⊊ ℓ' and r' = r with the ℓ' coordinates zeroed
            !faces.iter().any(|&bigger| {
                if bigger == *face || bigger & face != *face {
                    return false;
                }
                let r2: Vec<u32> = (0..n).map(|j| if bigger >> j & 1 == 1 { 0 } else { r[j] }).collect();
                admissible_set.contains(&(r2, bigger))
            })
        })
        .map(|(r, face)| StandardPair::new(ExponentVector::new(r.clone()), Face::from_bits(*face)))
        .collect();
    out.sort();
    out
}

/// Faces `ℓ` such that `(I : m) = (x_i | i ∉ ℓ)` for some monomial `m`.
///
/// Colon ideals stabilise once `m` exceeds the generator exponents, so the
/// box `[0, D]` reaches every associated prime.
pub fn colon_associated_faces(i: &MonomialIdeal) -> Vec<Face> {
    let n = i.n();
    let gens = raw_generators(i);
    let d = max_exponents(&gens, n);
    let mut faces = BTreeSet::new();
    for m in standard_in_box(&gens, &d) {
        let colon: Vec<Vec<u32>> = gens.iter().map(|g| g.iter().zip(&m).map(|(x, y)| x.saturating_sub(*y)).collect()).collect();
        // prime exactly when every minimal generator is a single variable
        let minimal: Vec<&Vec<u32>> =
            colon.iter().filter(|g| !colon.iter().any(|h| h != *g && divides(h, g))).collect();
        let mut vars = BTreeSet::new();
        let linear = minimal.iter().all(|g| {
            let support: Vec<usize> = (0..n).filter(|&j| g[j] > 0).collect();
            if support.len() == 1 && g[support[0]] == 1 {
                vars.insert(support[0]);
                true
            } else {
                false
            }
        });
        if linear && !vars.is_empty() {
            faces.insert(Face::from_members((0..n).filter(|j| !vars.contains(j))));
        }
    }
    if gens.is_empty() {
        // the zero ideal has the single associated prime (0)
        faces.insert(Face::full(n));
    }
    faces.into_iter().collect()
}

/// Points of `r + N^ℓ` inside `[0, bound]`.
pub fn pair_points(p: &StandardPair, bound: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (j, &b) in bound.iter().enumerate() {
        let r = p.root.get(j);
        let range = if p.face.contains(j) { r..=b } else { r..=r.min(b) };
        if r > b {
            return BTreeSet::new();
        }
        out = out.into_iter().flat_map(|v: Vec<u32>| range.clone().map(move |t| [v.clone(), vec![t]].concat())).collect();
    }
    out.into_iter().collect()
}

/// Primary: every zero divisor modulo `Q` is nilpotent. The zero divisors of
/// a monomial ideal form a union of monomial primes, so it is enough to test
/// the variables, each against the standard monomials of the box.
pub fn is_primary_oracle(q: &MonomialIdeal) -> bool {
    let gens = raw_generators(q);
    let n = q.n();
    let d = max_exponents(&gens, n);
    for m in standard_in_box(&gens, &d) {
        for j in 0..n {
            let mut up = m.clone();
            up[j] += 1;
            if in_ideal(&gens, &up) {
                // x_j is a zero divisor modulo Q and must be nilpotent
                let mut pure = vec![0u32; n];
                pure[j] = d[j].max(1);
                if !in_ideal(&gens, &pure) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `a` with `A a = q`, scanned over the box cut out by positive weights.
pub fn brute_fiber(map: &GradingMap, weights: &[i64], q: &[i64], certificate: &[i64]) -> Vec<ExponentVector> {
    let target: i64 = certificate.iter().zip(q).map(|(c, x)| c * x).sum();
    if target < 0 {
        return Vec::new();
    }
    let bound: Vec<u32> = weights.iter().map(|&w| (target / w) as u32).collect();
    box_points(&bound)
        .into_iter()
        .map(ExponentVector::new)
        .filter(|a| map.apply(a).unwrap() == q)
        .collect()
}

/// A random pointed `d x n` matrix with `d ∈ {1, 2}`, `n <= 6`: the first
/// row is positive, so `(1, 0)` certifies pointedness.
pub fn random_pointed_matrix(r: &mut ChaCha8Rng) -> GradingMap {
    let d = r.gen_range(1..=2);
    let n = r.gen_range(2..=6);
    let mut rows = vec![(0..n).map(|_| r.gen_range(1..=3)).collect::<Vec<i64>>()];
    if d == 2 {
        rows.push((0..n).map(|_| r.gen_range(-2..=4)).collect());
    }
    GradingMap::from_rows(&rows).unwrap()
}

/// Random positive weights with a random tiebreak permutation.
pub fn random_order(r: &mut ChaCha8Rng, n: usize) -> (Vec<i64>, Vec<usize>) {
    let weight = (0..n).map(|_| r.gen_range(1..=20)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, r.gen_range(0..=i));
    }
    (weight, perm)
}

/// The degree box used for random gradings: `[0, 12]` for one row,
/// `[0, 6] x [-6, 12]` for two.
pub fn degree_box(map: &GradingMap) -> agraded::grading::DegreeBox {
    if map.d() == 1 {
        agraded::grading::DegreeBox::upto(vec![12])
    } else {
        agraded::grading::DegreeBox::new(vec![0, -6], vec![6, 12]).unwrap()
    }
}

/// Membership in a binomial ideal generated by monomials and differences
/// that are homogeneous for total degree, by connectivity.
///
/// Over a field, `x^a - x^b` lies in such an ideal exactly when `a` and `b`
/// are joined by moves `c + u <-> c + v` (one per binomial `x^u - x^v`), or
/// both reach a multiple of a monomial generator. Moves keep the total
/// degree, so each degree is a finite graph.
pub struct DegreeGraph {
    pub degree: u32,
    pub points: Vec<Vec<u32>>,
    component: Vec<usize>,
    /// Components containing a multiple of a monomial generator.
    zero: BTreeSet<usize>,
}

impl DegreeGraph {
    pub fn new(n: usize, monomials: &[Vec<u32>], binomials: &[(Vec<u32>, Vec<u32>)], degree: u32) -> Self {
        let points: Vec<Vec<u32>> =
            box_points(&vec![degree; n]).into_iter().filter(|p| p.iter().sum::<u32>() == degree).collect();
        let index: std::collections::HashMap<&Vec<u32>, usize> = points.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut parent: Vec<usize> = (0..points.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for (i, p) in points.iter().enumerate() {
            for (u, v) in binomials {
                for (from, to) in [(u, v), (v, u)] {
                    if divides(from, p) {
                        let q: Vec<u32> = (0..n).map(|j| p[j] - from[j] + to[j]).collect();
                        let (a, b) = (find(&mut parent, i), find(&mut parent, index[&q]));
                        parent[a] = b;
                    }
                }
            }
        }
        let component: Vec<usize> = (0..points.len()).map(|i| find(&mut parent, i)).collect();
        let zero = (0..points.len()).filter(|&i| in_ideal(monomials, &points[i])).map(|i| component[i]).collect();
        DegreeGraph { degree, points, component, zero }
    }

    fn id(&self, a: &[u32]) -> usize {
        self.component[self.points.iter().position(|p| p.as_slice() == a).expect("point of this degree")]
    }

    pub fn contains_monomial(&self, a: &[u32]) -> bool {
        self.zero.contains(&self.id(a))
    }

    pub fn contains_difference(&self, a: &[u32], b: &[u32]) -> bool {
        let (x, y) = (self.id(a), self.id(b));
        x == y || (self.zero.contains(&x) && self.zero.contains(&y))
    }
}
