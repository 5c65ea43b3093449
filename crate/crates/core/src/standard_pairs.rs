//! Standard pairs of a monomial ideal.
//!
//! A standard pair `(r, ℓ)` is an inclusion-maximal translated orthant
//! `r + N^ℓ` inside the staircase `T` of standard monomials, with the root
//! `r` vanishing on the face `ℓ`. Finitely many of them cover `T`.
//!
//! Computation: a maximal pair has `r_i < D_i` outside its face, where `D` is
//! the staircase bound, so only roots in that box are candidates. For a root
//! `r ∈ T`, each generator `g` blocks the coordinates `S_g(r) = {i : g_i > r_i}`;
//! a face `ℓ` is admissible iff its complement meets every `S_g(r)` and
//! contains `supp(r)`. The maximal admissible faces are therefore the
//! complements of `supp(r) ∪ H` for the minimal transversals `H` of the
//! blocking sets not already met by `supp(r)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, MonomialIdeal};
use crate::hitting::minimal_hitting_sets;

/// Largest supported variable count; faces are stored as 64-bit masks.
pub const MAX_VARS: usize = 64;

/// A subset of the variable indices `{0, …, n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub fn empty() -> Self {
        Face(0)
    }

    /// The face containing every index `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        if n == MAX_VARS {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut bits = 0u64;
        for i in members {
            assert!(i < MAX_VARS, "index {i} out of range");
            bits |= 1 << i;
        }
        Face(bits)
    }

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    pub fn insert(self, i: usize) -> Face {
        Face(self.0 | 1 << i)
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    /// Complement within `0..n`.
    pub fn complement(self, n: usize) -> Face {
        Face(Face::full(n).0 & !self.0)
    }

    pub fn display_with(self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .members()
            .map(|i| names.get(i).cloned().unwrap_or_else(|| format!("x{}", i + 1)))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Ord for Face {
    /// Lexicographic order on the sorted index lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.members().cmp(other.members())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn support_mask(a: &[u32]) -> u64 {
    a.iter().enumerate().filter(|(_, &c)| c > 0).fold(0, |m, (i, _)| m | 1 << i)
}

/// The set `root + N^face`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardPair {
    pub root: ExponentVector,
    pub face: Face,
}

impl StandardPair {
    pub fn new(root: ExponentVector, face: Face) -> Self {
        StandardPair { root, face }
    }

    /// Whether `a ∈ root + N^face`.
    pub fn contains(&self, a: &ExponentVector) -> bool {
        a.len() == self.root.len()
            && (0..a.len()).all(|j| self.face.contains(j) || a.get(j) == self.root.get(j))
    }

    pub fn display_with(&self, names: &[String]) -> String {
        format!("{} + <{}>", self.root.display_with(names), {
            let f = self.face.display_with(names);
            f[1..f.len() - 1].to_string()
        })
    }
}

fn check_root(ideal: &MonomialIdeal, r: &ExponentVector, face: Face) -> Result<()> {
    if r.len() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: r.len() });
    }
    if support_mask(r.as_slice()) & face.bits() != 0 {
        return Err(Error::SupportOverlap(face));
    }
    Ok(())
}

/// Whether `r + N^ℓ` avoids the ideal: every generator exceeds `r` at some
/// coordinate outside `ℓ`.
pub fn admissible(ideal: &MonomialIdeal, r: &ExponentVector, face: Face) -> Result<bool> {
    check_root(ideal, r, face)?;
    Ok(admissible_raw(ideal, r.as_slice(), face.bits()))
}

fn admissible_raw(ideal: &MonomialIdeal, r: &[u32], face: u64) -> bool {
    ideal.generators().iter().all(|g| {
        g.as_slice()
            .iter()
            .zip(r)
            .enumerate()
            .any(|(i, (gi, ri))| face >> i & 1 == 0 && gi > ri)
    })
}

/// Whether `(r, ℓ)` is a standard pair of the ideal.
///
/// Maximality is tested one step at a time: `(r, ℓ)` is maximal iff no
/// `(r with r_i = 0, ℓ ∪ {i})` is admissible. Any strictly larger admissible
/// orthant `s + N^m` has `ℓ ⊊ m`, and for `i ∈ m ∖ ℓ` that one-step extension
/// sits inside it.
pub fn is_standard_pair(ideal: &MonomialIdeal, r: &ExponentVector, face: Face) -> bool {
    if check_root(ideal, r, face).is_err() {
        return false;
    }
    is_standard_raw(ideal, r.as_slice(), face.bits())
}

fn is_standard_raw(ideal: &MonomialIdeal, r: &[u32], face: u64) -> bool {
    if !admissible_raw(ideal, r, face) {
        return false;
    }
    let mut scratch = r.to_vec();
    for i in 0..r.len() {
        if face >> i & 1 == 1 {
            continue;
        }
        let saved = scratch[i];
        scratch[i] = 0;
        let extends = admissible_raw(ideal, &scratch, face | 1 << i);
        scratch[i] = saved;
        if extends {
            return false;
        }
    }
    true
}

/// The finite set of standard pairs of a monomial ideal, in canonical order
/// (by root, then face).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPairBasis {
    ideal: MonomialIdeal,
    pairs: Vec<StandardPair>,
}

/// The roots of the standard pairs with a fixed face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layer {
    pub face: Face,
    pub roots: Vec<ExponentVector>,
}

impl Layer {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.roots.iter().any(|r| StandardPair::new(r.clone(), self.face).contains(a))
    }
}

/// Down-closure of a layer: every `r <= r^i` shifted by `N^face`. Stored by
/// the maximal roots of the layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedLayer {
    pub face: Face,
    pub roots: Vec<ExponentVector>,
}

impl ClosedLayer {
    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.roots.iter().any(|r| {
            a.len() == r.len() && (0..a.len()).all(|j| self.face.contains(j) || a.get(j) <= r.get(j))
        })
    }

    /// Every point of the closure supported outside the face, i.e. the
    /// down-set of the roots. Finite and sorted.
    pub fn down_set(&self) -> Vec<ExponentVector> {
        let mut out: Vec<ExponentVector> = Vec::new();
        for r in &self.roots {
            out.extend(crate::exponents::BoxIter::new(r));
        }
        out.sort();
        out.dedup();
        out
    }
}

impl StandardPairBasis {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn pairs(&self) -> &[StandardPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    /// Distinct faces occurring among the pairs, canonically ordered.
    pub fn faces(&self) -> Vec<Face> {
        let mut faces: Vec<Face> = self.pairs.iter().map(|p| p.face).collect();
        faces.sort();
        faces.dedup();
        faces
    }

    pub fn layer(&self, face: Face) -> Layer {
        let roots = self.pairs.iter().filter(|p| p.face == face).map(|p| p.root.clone()).collect();
        Layer { face, roots }
    }

    pub fn closed_layer(&self, face: Face) -> ClosedLayer {
        let layer = self.layer(face);
        ClosedLayer { face, roots: maximal_elements(layer.roots) }
    }

    /// Pairs whose root is maximal, under the componentwise order, among the
    /// roots sharing its face.
    pub fn maximal_pairs(&self) -> Vec<StandardPair> {
        let by_face = self.pairs.iter().fold(BTreeMap::<Face, Vec<&StandardPair>>::new(), |mut m, p| {
            m.entry(p.face).or_default().push(p);
            m
        });
        let mut out: Vec<StandardPair> = by_face
            .values()
            .flat_map(|group| {
                group
                    .iter()
                    .filter(|p| !group.iter().any(|q| q.root != p.root && p.root.divides(&q.root)))
                    .map(|p| (*p).clone())
                    .collect::<Vec<_>>()
            })
            .collect();
        out.sort();
        out
    }

    /// Whether `T ∩ box` is exactly the union of the pair orthants inside the box.
    ///
    /// Every pair is checked to avoid the ideal entirely (admissibility is a
    /// statement about the whole orthant), then every standard monomial of the
    /// box is checked to be covered.
    pub fn cover_check(&self, bound: &ExponentVector) -> Result<bool> {
        if self.pairs.iter().any(|p| !admissible_raw(&self.ideal, p.root.as_slice(), p.face.bits())) {
            return Ok(false);
        }
        let standard = self.ideal.standard_monomials_in_box(bound)?;
        Ok(standard.iter().all(|a| self.pairs.iter().any(|p| p.contains(a))))
    }
}

pub(crate) fn maximal_elements(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    points.sort();
    points.dedup();
    let keep: Vec<bool> = points
        .iter()
        .map(|p| !points.iter().any(|q| q != p && p.divides(q)))
        .collect();
    points.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect()
}

/// Computes every standard pair of a monomial ideal.
pub fn compute_standard_pairs(ideal: &MonomialIdeal) -> Result<StandardPairBasis> {
    let n = ideal.n();
    if n > MAX_VARS {
        return Err(Error::TooManyVariables { max: MAX_VARS, found: n });
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let d = ideal.staircase_bounds();
    let root_bound = ExponentVector::new(d.as_slice().iter().map(|&x| x.saturating_sub(1)).collect());
    let full = Face::full(n).bits();

    let mut pairs = Vec::new();
    for root in ideal.standard_monomials_in_box(&root_bound)? {
        let r = root.as_slice();
        let supp = support_mask(r);
        let edges: Vec<u64> = ideal
            .generators()
            .iter()
            .map(|g| {
                g.as_slice().iter().zip(r).enumerate().filter(|(_, (gi, ri))| gi > ri).fold(0u64, |m, (i, _)| m | 1 << i)
            })
            .filter(|&s| s & supp == 0)
            .collect();
        for h in minimal_hitting_sets(&edges) {
            let face = full & !(supp | h);
            if is_standard_raw(ideal, r, face) {
                pairs.push(StandardPair::new(root.clone(), Face(face)));
            }
        }
    }
    pairs.sort();
    pairs.dedup();
    Ok(StandardPairBasis { ideal: ideal.clone(), pairs })
}

/// Intersection of two orthants `r + N^ℓ` and `s + N^m`.
///
/// Empty iff the roots differ somewhere outside `ℓ ∪ m`; otherwise it is
/// `p + N^{ℓ∩m}` where `p` agrees with both roots outside `ℓ ∪ m`, takes `s`
/// on `ℓ ∖ m` and `r` on `m ∖ ℓ`. For two distinct standard pairs the face
/// `ℓ ∩ m` is strictly smaller than both faces.
pub fn intersect_pairs(p: &StandardPair, q: &StandardPair) -> Option<StandardPair> {
    let n = p.root.len();
    let union = p.face.union(q.face);
    let mut root = vec![0u32; n];
    for (j, slot) in root.iter_mut().enumerate() {
        let (in_l, in_m) = (p.face.contains(j), q.face.contains(j));
        *slot = match (in_l, in_m) {
            (false, false) => {
                if p.root.get(j) != q.root.get(j) {
                    return None;
                }
                p.root.get(j)
            }
            (true, false) => q.root.get(j),
            (false, true) => p.root.get(j),
            (true, true) => 0,
        };
    }
    debug_assert!(union.is_subset(Face::full(n)));
    Some(StandardPair::new(ExponentVector::new(root), p.face.intersection(q.face)))
}
