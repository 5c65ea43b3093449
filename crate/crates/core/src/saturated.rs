//! Ideals generated by monomials and pure differences `x^a - x^b`: the
//! difference lattice `K(I)`, saturation, the fiber properties, and a bounded
//! check of the decomposition `I = ⋂ I^(ℓ)`.
//!
//! Only coefficients `±1` are supported. Every "for all `a, b ∈ T`" condition
//! is evaluated on a finite box of exponents, and each report echoes the box.
//! `T` is the set of exponents of monomials outside `I`; a fiber is the part
//! of `T` lying in one coset of `K`.

use std::collections::BTreeMap;
use std::fmt;

use crate::decomposition::component_ideal;
use crate::error::{Error, Result};
use crate::exponents::{minimalize, BoxIter, ExponentVector, MonomialIdeal};
use crate::groebner::{buchberger, Element, GroebnerBasis, TermOrder};
use crate::linalg::{hermite_rows, rank, IntMatrix};
use crate::standard_pairs::{compute_standard_pairs, Face, StandardPairBasis};

/// `x^a - x^b` with `a > b` lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureBinomial {
    a: ExponentVector,
    b: ExponentVector,
}

impl PureBinomial {
    pub fn new(a: ExponentVector, b: ExponentVector) -> Result<Self> {
        a.check_len(&b)?;
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Err(Error::invalid("a binomial needs two distinct terms")),
            std::cmp::Ordering::Greater => Ok(PureBinomial { a, b }),
            std::cmp::Ordering::Less => Ok(PureBinomial { a: b, b: a }),
        }
    }

    pub fn a(&self) -> &ExponentVector {
        &self.a
    }

    pub fn b(&self) -> &ExponentVector {
        &self.b
    }

    /// `a - b`.
    pub fn difference(&self) -> Vec<i64> {
        self.a.difference(&self.b)
    }
}

/// An ideal generated by monomials and pure differences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialIdeal {
    names: Vec<String>,
    monomials: Vec<ExponentVector>,
    binomials: Vec<PureBinomial>,
}

impl BinomialIdeal {
    pub fn new(names: Vec<String>, monomials: Vec<ExponentVector>, mut binomials: Vec<PureBinomial>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::invalid("an ideal needs at least one variable"));
        }
        for m in &monomials {
            if m.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.len() });
            }
        }
        for b in &binomials {
            if b.a.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.a.len() });
            }
        }
        let monomials = minimalize(monomials)?;
        binomials.sort();
        binomials.dedup();
        Ok(BinomialIdeal { names, monomials, binomials })
    }

    pub fn from_monomial_ideal(ideal: &MonomialIdeal) -> Self {
        BinomialIdeal { names: ideal.names().to_vec(), monomials: ideal.generators().to_vec(), binomials: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn monomials(&self) -> &[ExponentVector] {
        &self.monomials
    }

    pub fn binomials(&self) -> &[PureBinomial] {
        &self.binomials
    }

    pub fn is_monomial(&self) -> bool {
        self.binomials.is_empty()
    }

    pub fn elements(&self) -> Vec<Element> {
        let mut out: Vec<Element> = self.monomials.iter().cloned().map(Element::Monomial).collect();
        out.extend(self.binomials.iter().map(|b| Element::Difference(b.a.clone(), b.b.clone())));
        out
    }

    /// Reduced Gröbner basis under the graded lexicographic order.
    pub fn groebner(&self) -> Result<GroebnerBasis> {
        buchberger(self.names.clone(), self.elements(), &TermOrder::graded_lex(self.n()))
    }

    /// `I + (extra)`.
    pub fn with_monomials(&self, extra: &[ExponentVector]) -> Result<Self> {
        let mut monomials = self.monomials.clone();
        monomials.extend_from_slice(extra);
        BinomialIdeal::new(self.names.clone(), monomials, self.binomials.clone())
    }

    /// Largest exponent in the generators and the reduced basis, plus two.
    pub fn default_box(&self) -> Result<ExponentVector> {
        let mut bound = self.groebner()?.exponent_bounds();
        for e in self.elements() {
            bound = bound.lcm(e.lead());
            if let Some(t) = e.tail() {
                bound = bound.lcm(t);
            }
        }
        Ok(ExponentVector::new(bound.as_slice().iter().map(|&x| x.saturating_add(2)).collect()))
    }
}

impl fmt::Display for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.monomials.iter().map(|m| m.display_with(&self.names).to_string()).collect();
        parts.extend(
            self.binomials.iter().map(|b| format!("{} - {}", b.a.display_with(&self.names), b.b.display_with(&self.names))),
        );
        write!(f, "({})", parts.join(", "))
    }
}

fn check_box(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<()> {
    if bound.len() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: bound.len() });
    }
    Ok(())
}

/// Minimal generators, inside the box, of the monomials contained in `I`.
pub fn monomial_part(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<MonomialIdeal> {
    check_box(ideal, bound)?;
    let g = ideal.groebner()?;
    monomial_part_with(ideal, &g, bound)
}

fn monomial_part_with(ideal: &BinomialIdeal, g: &GroebnerBasis, bound: &ExponentVector) -> Result<MonomialIdeal> {
    let inside: Vec<ExponentVector> = BoxIter::new(bound).filter(|u| g.contains_monomial(u)).collect();
    MonomialIdeal::new(ideal.names.clone(), inside)
}

/// A sublattice of `Z^n`, stored by its Hermite basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeK {
    n: usize,
    basis: Vec<Vec<i64>>,
}

impl LatticeK {
    pub fn zero(n: usize) -> Self {
        LatticeK { n, basis: Vec::new() }
    }

    pub fn from_generators(n: usize, gens: &[Vec<i64>]) -> Result<Self> {
        if let Some(bad) = gens.iter().find(|g| g.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let h = hermite_rows(&IntMatrix::from_rows(gens, n));
        Ok(LatticeK { n, basis: h.to_i64_rows()? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical representative of `v + K`: each pivot coordinate
    /// reduced into `[0, pivot)`.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let mut out = v.to_vec();
        for row in &self.basis {
            let p = row.iter().position(|&x| x != 0).expect("basis rows are nonzero");
            let q = out[p].div_euclid(row[p]);
            if q != 0 {
                for (o, &r) in out.iter_mut().zip(row) {
                    *o -= q * r;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        v.len() == self.n && self.reduce(v).iter().all(|&x| x == 0)
    }

    pub fn with(&self, extra: &[Vec<i64>]) -> Result<Self> {
        let mut gens = self.basis.clone();
        gens.extend_from_slice(extra);
        LatticeK::from_generators(self.n, &gens)
    }
}

impl fmt::Display for LatticeK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("Z({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `K(I)` with the differences the audit had to add, and the audit box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KReport {
    pub lattice: LatticeK,
    pub audit_additions: Vec<Vec<i64>>,
    pub bound: ExponentVector,
}

fn t_points(g: &GroebnerBasis, bound: &ExponentVector) -> Vec<(ExponentVector, ExponentVector)> {
    BoxIter::new(bound).filter_map(|u| g.reduce_monomial(&u).map(|nf| (u, nf))).collect()
}

/// `K(I)`: generated by `a - b` over the basis differences with both terms in
/// `T`, then audited on the box. Two points of `T` with equal normal forms
/// span a difference lying in `I`, and any such `a - b` missing from the
/// lattice is added.
pub fn lattice_k(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<KReport> {
    check_box(ideal, bound)?;
    let g = ideal.groebner()?;
    lattice_k_with(ideal, &g, bound)
}

fn lattice_k_with(ideal: &BinomialIdeal, g: &GroebnerBasis, bound: &ExponentVector) -> Result<KReport> {
    let n = ideal.n();
    let in_t = |u: &ExponentVector| !g.contains_monomial(u);
    let mut seeds: Vec<Vec<i64>> = Vec::new();
    for e in g.elements().iter().chain(ideal.elements().iter()) {
        if let Element::Difference(a, b) = e {
            if in_t(a) && in_t(b) {
                seeds.push(a.difference(b));
            }
        }
    }
    let mut lattice = LatticeK::from_generators(n, &seeds)?;
    let mut groups: BTreeMap<ExponentVector, Vec<ExponentVector>> = BTreeMap::new();
    for (u, nf) in t_points(g, bound) {
        groups.entry(nf).or_default().push(u);
    }
    let mut additions = Vec::new();
    // every pass either finds nothing or strictly enlarges the lattice
    for _ in 0..=n {
        let missing: Vec<Vec<i64>> = groups
            .values()
            .flat_map(|members| members[1..].iter().map(|u| u.difference(&members[0])))
            .filter(|d| !lattice.contains(d))
            .collect();
        if missing.is_empty() {
            break;
        }
        lattice = lattice.with(&missing)?;
        additions.extend(missing);
    }
    Ok(KReport { lattice, audit_additions: additions, bound: bound.clone() })
}

/// Outcome of the saturation test on a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationReport {
    pub saturated: bool,
    /// The first `a, b ∈ T` (by `a`, then `b`, lexicographically) with
    /// `a - b ∈ K` but `x^a - x^b ∉ I`.
    pub witness: Option<(ExponentVector, ExponentVector)>,
    pub lattice: LatticeK,
    pub bound: ExponentVector,
}

pub fn is_saturated(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<SaturationReport> {
    check_box(ideal, bound)?;
    let g = ideal.groebner()?;
    let lattice = lattice_k_with(ideal, &g, bound)?.lattice;
    let mut by_coset: BTreeMap<Vec<i64>, Vec<(ExponentVector, ExponentVector)>> = BTreeMap::new();
    let mut witness = None;
    for (a, nf) in t_points(&g, bound) {
        let class = by_coset.entry(lattice.reduce(&a.to_signed())).or_default();
        if witness.is_none() {
            if let Some((b, _)) = class.iter().find(|(_, other)| *other != nf) {
                witness = Some((a.clone(), b.clone()));
            }
        }
        class.push((a, nf));
    }
    Ok(SaturationReport { saturated: witness.is_none(), witness, lattice, bound: bound.clone() })
}

/// `T ∩ box` split into the cosets of a lattice.
#[derive(Debug, Clone)]
pub struct FiberSystem {
    staircase: MonomialIdeal,
    lattice: LatticeK,
    bound: ExponentVector,
    /// Fibers sorted by their smallest member, members sorted.
    fibers: Vec<Vec<ExponentVector>>,
}

/// A fiber and a shift that moves it partly into `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftWitness {
    pub fiber: Vec<ExponentVector>,
    pub shift: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub holds: bool,
    pub witness: Option<ShiftWitness>,
    pub bound: ExponentVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberStructureViolation {
    /// Sums of two fibers landing both inside and outside `T`.
    Sums { p: Vec<ExponentVector>, q: Vec<ExponentVector> },
    /// A fiber meeting a layer without lying in it.
    Layer { face: Face, fiber: Vec<ExponentVector> },
    /// A fiber meeting a closed layer without lying in it.
    ClosedLayer { face: Face, fiber: Vec<ExponentVector> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberStructureReport {
    pub sums_hold: bool,
    pub layers_hold: bool,
    pub closed_layers_hold: bool,
    /// The first few violations of each kind.
    pub violations: Vec<FiberStructureViolation>,
    pub bound: ExponentVector,
}

impl FiberStructureReport {
    pub fn holds(&self) -> bool {
        self.sums_hold && self.layers_hold && self.closed_layers_hold
    }
}

const KEEP_VIOLATIONS: usize = 5;

impl FiberSystem {
    /// `T` is the complement of `staircase`.
    pub fn new(staircase: MonomialIdeal, lattice: LatticeK, bound: ExponentVector) -> Result<Self> {
        if lattice.n() != staircase.n() {
            return Err(Error::DimensionMismatch { expected: staircase.n(), found: lattice.n() });
        }
        let points = staircase.standard_monomials_in_box(&bound)?;
        let mut classes: BTreeMap<Vec<i64>, Vec<ExponentVector>> = BTreeMap::new();
        for p in points {
            classes.entry(lattice.reduce(&p.to_signed())).or_default().push(p);
        }
        let mut fibers: Vec<Vec<ExponentVector>> = classes.into_values().collect();
        fibers.sort();
        Ok(FiberSystem { staircase, lattice, bound, fibers })
    }

    pub fn of_ideal(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<Self> {
        check_box(ideal, bound)?;
        let g = ideal.groebner()?;
        let staircase = monomial_part_with(ideal, &g, bound)?;
        let lattice = lattice_k_with(ideal, &g, bound)?.lattice;
        FiberSystem::new(staircase, lattice, bound.clone())
    }

    pub fn fibers(&self) -> &[Vec<ExponentVector>] {
        &self.fibers
    }

    pub fn lattice(&self) -> &LatticeK {
        &self.lattice
    }

    fn in_t(&self, a: &ExponentVector) -> bool {
        !self.staircase.contains_slice(a.as_slice())
    }

    fn in_box(&self, a: &ExponentVector) -> bool {
        a.divides(&self.bound)
    }

    /// Every shift of a fiber that stays in the box lies wholly in `T` or
    /// wholly outside it.
    pub fn property_ii(&self) -> PropertyReport {
        for fiber in &self.fibers {
            let top = fiber.iter().fold(ExponentVector::zeros(self.bound.len()), |acc, a| acc.lcm(a));
            let room = self.bound.saturating_sub(&top);
            for g in BoxIter::new(&room) {
                let inside = fiber.iter().filter(|a| self.in_t(&add(a, &g))).count();
                if inside != 0 && inside != fiber.len() {
                    return PropertyReport {
                        holds: false,
                        witness: Some(ShiftWitness { fiber: fiber.clone(), shift: g }),
                        bound: self.bound.clone(),
                    };
                }
            }
        }
        PropertyReport { holds: true, witness: None, bound: self.bound.clone() }
    }

    /// The three fiber statements: sums of two fibers lie all in or all out
    /// of `T`, and fibers are all in or all out of each layer and closed layer.
    pub fn fiber_structure(&self) -> Result<FiberStructureReport> {
        let mut violations = Vec::new();
        let mut sums_bad = 0;
        for (i, p) in self.fibers.iter().enumerate() {
            for q in &self.fibers[i..] {
                let mut seen = [false, false];
                for a in p {
                    for g in q {
                        let s = add(a, g);
                        if self.in_box(&s) {
                            seen[usize::from(self.in_t(&s))] = true;
                        }
                    }
                }
                if seen[0] && seen[1] {
                    if sums_bad < KEEP_VIOLATIONS {
                        violations.push(FiberStructureViolation::Sums { p: p.clone(), q: q.clone() });
                    }
                    sums_bad += 1;
                }
            }
        }
        let (mut layer_bad, mut closed_bad) = (0, 0);
        if !self.staircase.is_unit() {
            let basis = compute_standard_pairs(&self.staircase)?;
            for face in basis.faces() {
                let layer = basis.layer(face);
                let closed = basis.closed_layer(face);
                for fiber in &self.fibers {
                    let hits = fiber.iter().filter(|a| layer.contains(a)).count();
                    if hits != 0 && hits != fiber.len() {
                        if layer_bad < KEEP_VIOLATIONS {
                            violations.push(FiberStructureViolation::Layer { face, fiber: fiber.clone() });
                        }
                        layer_bad += 1;
                    }
                    let hits = fiber.iter().filter(|a| closed.contains(a)).count();
                    if hits != 0 && hits != fiber.len() {
                        if closed_bad < KEEP_VIOLATIONS {
                            violations.push(FiberStructureViolation::ClosedLayer { face, fiber: fiber.clone() });
                        }
                        closed_bad += 1;
                    }
                }
            }
        }
        Ok(FiberStructureReport {
            sums_hold: sums_bad == 0,
            layers_hold: layer_bad == 0,
            closed_layers_hold: closed_bad == 0,
            violations,
            bound: self.bound.clone(),
        })
    }
}

fn add(a: &ExponentVector, b: &ExponentVector) -> ExponentVector {
    a.checked_add(b).expect("box exponents are small")
}

pub fn property_ii_check(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<PropertyReport> {
    Ok(FiberSystem::of_ideal(ideal, bound)?.property_ii())
}

pub fn fiber_structure_check(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<FiberStructureReport> {
    FiberSystem::of_ideal(ideal, bound)?.fiber_structure()
}

fn standard_pairs_of(ideal: &BinomialIdeal, g: &GroebnerBasis, bound: &ExponentVector) -> Result<Option<StandardPairBasis>> {
    let m = monomial_part_with(ideal, g, bound)?;
    if m.is_unit() {
        return Ok(None);
    }
    compute_standard_pairs(&m).map(Some)
}

/// `I^(ℓ) = I + (x^a | a outside the closed layer of ℓ)`; the unit ideal when
/// `ℓ` does not occur.
pub fn binomial_component(ideal: &BinomialIdeal, face: Face, bound: &ExponentVector) -> Result<BinomialIdeal> {
    check_box(ideal, bound)?;
    let g = ideal.groebner()?;
    component_with(ideal, &standard_pairs_of(ideal, &g, bound)?, face)
}

fn component_with(ideal: &BinomialIdeal, basis: &Option<StandardPairBasis>, face: Face) -> Result<BinomialIdeal> {
    let unit = || ideal.with_monomials(&[ExponentVector::zeros(ideal.n())]);
    let Some(basis) = basis else { return unit() };
    match component_ideal(basis, face) {
        Ok(c) => ideal.with_monomials(c.ideal.generators()),
        Err(Error::FaceAbsent(_)) => unit(),
        Err(e) => Err(e),
    }
}

/// A monomial pair showing a component is not primary: `s t ∈ Q`, `s ∉ Q`,
/// and no power `t^N` with `N <= cap` lies in `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryViolation {
    pub face: Face,
    pub s: ExponentVector,
    pub t: ExponentVector,
}

#[derive(Debug, Clone)]
pub struct BinomialDecompositionReport {
    pub components: Vec<(Face, BinomialIdeal)>,
    pub verified: bool,
    /// A box point of a graded slice where `I` and the intersection differ.
    pub failing_degree: Option<ExponentVector>,
    pub primary_violations: Vec<PrimaryViolation>,
    pub power_cap: u32,
    pub bound: ExponentVector,
}

/// Compares `I` with `⋂ I^(ℓ)` slice by slice on the box.
///
/// Every ideal involved is homogeneous for the grading by `Z^n / L`, where
/// `L` is spanned by the differences of the binomial generators. In one
/// slice, membership of a combination of monomials is decided by the linear
/// normal-form map, so `I` and the intersection agree there exactly when the
/// normal-form map of `I` and the stacked maps of the components have equal
/// rank. Components are also tested for primality on monomial pairs of the
/// box, with powers up to a cap.
pub fn verify_primary_decomposition(ideal: &BinomialIdeal, bound: &ExponentVector) -> Result<BinomialDecompositionReport> {
    check_box(ideal, bound)?;
    let g = ideal.groebner()?;
    let staircase = monomial_part_with(ideal, &g, bound)?;
    let lattice = lattice_k_with(ideal, &g, bound)?.lattice;
    let system = FiberSystem::new(staircase, lattice, bound.clone())?;
    let property = system.property_ii();
    if let Some(w) = property.witness {
        return Err(Error::Precondition(format!(
            "property (ii) fails on box {}: shifting the fiber {:?} by {} leaves it partly inside T",
            bound, w.fiber, w.shift
        )));
    }

    let basis = standard_pairs_of(ideal, &g, bound)?;
    let faces = basis.as_ref().map(|b| b.faces()).unwrap_or_default();
    let mut components = Vec::new();
    let mut bases = Vec::new();
    for &face in &faces {
        let c = component_with(ideal, &basis, face)?;
        bases.push(c.groebner()?);
        components.push((face, c));
    }

    let n = ideal.n();
    let grading = LatticeK::from_generators(n, &ideal.binomials.iter().map(|b| b.difference()).collect::<Vec<_>>())?;
    let mut slices: BTreeMap<Vec<i64>, Vec<ExponentVector>> = BTreeMap::new();
    for u in BoxIter::new(bound) {
        slices.entry(grading.reduce(&u.to_signed())).or_default().push(u);
    }
    let mut failing_degree = None;
    for members in slices.values() {
        let own = distinct_images(&g, members).len();
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for cb in &bases {
            for image in distinct_images(cb, members) {
                rows.push(members.iter().map(|u| i64::from(cb.reduce_monomial(u).as_ref() == Some(&image))).collect());
            }
        }
        let stacked = if rows.is_empty() { 0 } else { rank(&rows, members.len()) };
        if own != stacked {
            failing_degree = Some(members[0].clone());
            break;
        }
    }

    let power_cap = bound.as_slice().iter().copied().max().unwrap_or(0).saturating_mul(2).saturating_add(2);
    let mut primary_violations = Vec::new();
    for ((face, _), cb) in components.iter().zip(&bases) {
        if let Some(v) = primary_violation(cb, bound, power_cap) {
            primary_violations.push(PrimaryViolation { face: *face, s: v.0, t: v.1 });
        }
    }

    Ok(BinomialDecompositionReport {
        components,
        verified: failing_degree.is_none(),
        failing_degree,
        primary_violations,
        power_cap,
        bound: bound.clone(),
    })
}

fn distinct_images(g: &GroebnerBasis, members: &[ExponentVector]) -> Vec<ExponentVector> {
    let mut out: Vec<ExponentVector> = members.iter().filter_map(|u| g.reduce_monomial(u)).collect();
    out.sort();
    out.dedup();
    out
}

fn primary_violation(q: &GroebnerBasis, bound: &ExponentVector, cap: u32) -> Option<(ExponentVector, ExponentVector)> {
    let points: Vec<ExponentVector> = BoxIter::new(bound).collect();
    let nilpotent: Vec<bool> = points.iter().map(|t| (1..=cap).any(|k| power_in(q, t, k))).collect();
    for s in points.iter().filter(|s| !q.contains_monomial(s)) {
        for (t, &nil) in points.iter().zip(&nilpotent) {
            if !nil && q.contains_monomial(&add(s, t)) {
                return Some((s.clone(), t.clone()));
            }
        }
    }
    None
}

fn power_in(q: &GroebnerBasis, t: &ExponentVector, k: u32) -> bool {
    t.checked_scale(k).map(|p| q.contains_monomial(&p)).unwrap_or(false)
}
