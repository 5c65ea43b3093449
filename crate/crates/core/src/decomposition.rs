//! Primary decomposition of monomial ideals through standard pairs, the
//! associated primes, and the chain-property audit.
//!
//! For every face `ℓ` occurring in `B(T)` the component `I^(ℓ)` is generated
//! by the monomials outside the closed layer of `ℓ`; its radical is the prime
//! `P^(ℓ) = (x_i | i ∉ ℓ)` of height `n - |ℓ|`. Since `P^(ℓ') ⊆ P^(ℓ)` exactly
//! when `ℓ ⊆ ℓ'`, "every non-minimal associated prime contains one of height
//! one less" reads, in faces, "every non-maximal face has a superset face with
//! one more element". This module implements the face form.

use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, MonomialIdeal};
use crate::standard_pairs::{Face, StandardPairBasis};

/// A primary component `I^(ℓ)` together with its face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub face: Face,
    pub ideal: MonomialIdeal,
}

impl PrimaryComponent {
    /// Variables generating the radical, i.e. the complement of the face.
    pub fn prime_variables(&self) -> Vec<usize> {
        self.face.complement(self.ideal.n()).members().collect()
    }

    pub fn height(&self) -> usize {
        self.ideal.n() - self.face.len()
    }
}

/// The component `I^(ℓ)`: monomials outside the closure of the layer `T(ℓ)`.
///
/// The closure is a union of down-sets `{a <= ρ} + N^ℓ` over the maximal
/// roots `ρ`, so its complement is the intersection of the ideals
/// `(x_j^{ρ_j + 1} | j ∉ ℓ)`.
pub fn component_ideal(basis: &StandardPairBasis, face: Face) -> Result<PrimaryComponent> {
    let closed = basis.closed_layer(face);
    if closed.is_empty() {
        return Err(Error::FaceAbsent(face));
    }
    let ideal = basis.ideal();
    let n = ideal.n();
    let outside: Vec<usize> = face.complement(n).members().collect();
    let mut acc: Option<MonomialIdeal> = None;
    for root in &closed.roots {
        let gens = outside
            .iter()
            .map(|&j| {
                let mut g = ExponentVector::zeros(n);
                g.set(j, root.get(j).checked_add(1).ok_or(Error::Overflow)?);
                Ok(g)
            })
            .collect::<Result<Vec<_>>>()?;
        let box_ideal = ideal.with_generators(gens)?;
        acc = Some(match acc {
            None => box_ideal,
            Some(prev) => prev.intersection(&box_ideal)?,
        });
    }
    Ok(PrimaryComponent { face, ideal: acc.expect("closed layer is nonempty") })
}

/// Every component `I^(ℓ)` over the faces of `B(T)`, in face order.
pub fn components(basis: &StandardPairBasis) -> Result<Vec<PrimaryComponent>> {
    basis.faces().into_iter().map(|f| component_ideal(basis, f)).collect()
}

/// Monomial primary test: every variable dividing a minimal generator has a
/// pure power among the generators.
pub fn is_primary_monomial(q: &MonomialIdeal) -> Result<bool> {
    if q.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut used = vec![false; q.n()];
    let mut pure = vec![false; q.n()];
    for g in q.generators() {
        let supp: Vec<usize> = g.support().collect();
        for &i in &supp {
            used[i] = true;
        }
        if let [i] = supp.as_slice() {
            pure[*i] = true;
        }
    }
    Ok(used.iter().zip(&pure).all(|(u, p)| !u || *p))
}

/// Variables with a pure power among the generators: those generating the radical.
pub fn radical_variables(q: &MonomialIdeal) -> Vec<usize> {
    let mut out: Vec<usize> = q
        .generators()
        .iter()
        .filter_map(|g| {
            let supp: Vec<usize> = g.support().collect();
            (supp.len() == 1).then(|| supp[0])
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The faces `ℓ` of the associated primes `P^(ℓ) = (x_i | i ∉ ℓ)`.
pub fn associated_primes(basis: &StandardPairBasis) -> Vec<Face> {
    basis.faces()
}

/// Outcome of the chain audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub faces: Vec<Face>,
    /// Non-maximal faces with no superset face of one more element.
    pub violations: Vec<Face>,
    pub holds: bool,
}

/// Checks the chain property on the faces of `B(T)`, reporting every failure.
pub fn chain_check(basis: &StandardPairBasis) -> ChainReport {
    chain_check_faces(basis.faces())
}

pub fn chain_check_faces(mut faces: Vec<Face>) -> ChainReport {
    faces.sort();
    faces.dedup();
    let violations: Vec<Face> = faces
        .iter()
        .copied()
        .filter(|&l| faces.iter().any(|&m| m != l && l.is_subset(m)))
        .filter(|&l| !faces.iter().any(|&m| l.is_subset(m) && m.len() == l.len() + 1))
        .collect();
    ChainReport { holds: violations.is_empty(), faces, violations }
}

/// Whether `I` and `⋂ components` contain the same monomials of the box.
///
/// Both are monomial ideals, so only generators inside the box matter. The
/// intersection is built incrementally and generators leaving the box are
/// dropped along the way, since least common multiples only grow.
pub fn verify_decomposition(ideal: &MonomialIdeal, components: &[PrimaryComponent], bound: &ExponentVector) -> Result<bool> {
    let meet = intersect_in_box(ideal, components.iter().map(|c| &c.ideal), bound)?;
    ideal.agrees_in_box(&meet, bound)
}

fn intersect_in_box<'a>(
    ideal: &MonomialIdeal,
    parts: impl Iterator<Item = &'a MonomialIdeal>,
    bound: &ExponentVector,
) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(ideal.names().to_vec());
    for part in parts {
        if part.n() != ideal.n() {
            return Err(Error::DimensionMismatch { expected: ideal.n(), found: part.n() });
        }
        let mut gens = Vec::new();
        for g in acc.generators() {
            for h in part.generators() {
                let l = g.lcm(h);
                if l.divides(bound) {
                    gens.push(l);
                }
            }
        }
        acc = ideal.with_generators(gens)?;
    }
    Ok(acc)
}

/// Faces whose component can be dropped without changing the intersection
/// on the box.
pub fn redundant_components(ideal: &MonomialIdeal, components: &[PrimaryComponent], bound: &ExponentVector) -> Result<Vec<Face>> {
    let mut out = Vec::new();
    for (k, c) in components.iter().enumerate() {
        let others = components.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, c)| &c.ideal);
        let meet = intersect_in_box(ideal, others, bound)?;
        if ideal.agrees_in_box(&meet, bound)? {
            out.push(c.face);
        }
    }
    Ok(out)
}

/// Decomposition bundle used by reports: components, verification box and
/// redundancy flags.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub components: Vec<PrimaryComponent>,
    pub bound: ExponentVector,
    pub verified: bool,
    pub redundant: Vec<Face>,
}

/// Decomposes and verifies on the staircase box enlarged by `margin`.
pub fn decompose(basis: &StandardPairBasis, margin: u32) -> Result<Decomposition> {
    let components = components(basis)?;
    let bound = ExponentVector::new(
        basis.ideal().staircase_bounds().as_slice().iter().map(|&d| d.saturating_add(margin)).collect(),
    );
    let verified = verify_decomposition(basis.ideal(), &components, &bound)?;
    let redundant = redundant_components(basis.ideal(), &components, &bound)?;
    Ok(Decomposition { components, bound, verified, redundant })
}
