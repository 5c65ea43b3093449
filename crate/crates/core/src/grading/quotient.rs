use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::GradingMap;
use crate::error::{Error, Result};
use crate::linalg::{hermite_rows, lattice_coordinates, smith, to_big, IntMatrix};
use crate::standard_pairs::Face;

/// `Z/d_1 ⊕ … ⊕ Z/d_k ⊕ Z^free_rank` with `d_i ≥ 2` and `d_i | d_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    pub invariants: Vec<u64>,
    pub free_rank: usize,
}

impl FiniteAbelianGroup {
    /// The number of elements, `None` for an infinite group.
    pub fn order(&self) -> Option<u64> {
        if self.free_rank > 0 {
            return None;
        }
        self.invariants.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty() && self.free_rank == 0
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.invariants.iter().map(|d| format!("Z/{d}")).collect();
        if self.free_rank > 0 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// The group `ZA / ZA_ℓ` together with a residue map.
///
/// `ZA` is given a Hermite basis, the generators `A(e_j)`, `j ∈ ℓ`, are written
/// in it, and a Smith form of that coordinate matrix splits the quotient into
/// cyclic factors. A residue lists the coordinates in the Smith basis, reduced
/// modulo each nontrivial invariant and followed by the free coordinates.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub face: Face,
    pub group: FiniteAbelianGroup,
    basis: IntMatrix,
    change: IntMatrix,
    /// One entry per coordinate of `ZA`: the invariant, or zero when free.
    moduli: Vec<BigInt>,
}

impl QuotientGroup {
    /// Rank of `ZA`.
    pub fn lattice_rank(&self) -> usize {
        self.basis.rows()
    }

    /// Class of `w ∈ ZA`; vectors outside `ZA` are rejected.
    pub fn residue(&self, w: &[i64]) -> Result<Vec<i64>> {
        if w.len() != self.basis.cols() {
            return Err(Error::DimensionMismatch { expected: self.basis.cols(), found: w.len() });
        }
        let y = lattice_coordinates(&self.basis, &to_big(w)).ok_or_else(|| Error::OutsideLattice(w.to_vec()))?;
        let r = y.len();
        let mut out = Vec::new();
        for (i, m) in self.moduli.iter().enumerate() {
            let z: BigInt = (0..r).map(|k| &y[k] * &self.change[(k, i)]).sum();
            if m.is_one() {
                continue;
            }
            let value = if m.is_zero() { z } else { z.mod_floor(m) };
            out.push(value.to_i64().ok_or(Error::Overflow)?);
        }
        Ok(out)
    }

    /// Whether two vectors of `ZA` differ by an element of `ZA_ℓ`.
    pub fn same_class(&self, a: &[i64], b: &[i64]) -> Result<bool> {
        Ok(self.residue(a)? == self.residue(b)?)
    }
}

pub fn quotient_group(map: &GradingMap, face: Face) -> Result<QuotientGroup> {
    let n = map.n();
    if let Some(bad) = face.members().find(|&j| j >= n) {
        return Err(Error::invalid(format!("face index {bad} out of range for {n} variables")));
    }
    let d = map.d();
    let basis = hermite_rows(&IntMatrix::from_rows(map.columns(), d));
    let r = basis.rows();
    let members: Vec<usize> = face.members().collect();
    let mut coords = IntMatrix::zeros(members.len(), r);
    for (row, &j) in members.iter().enumerate() {
        let y = lattice_coordinates(&basis, &to_big(map.column(j))).expect("columns lie in their own span");
        for (k, v) in y.into_iter().enumerate() {
            coords[(row, k)] = v;
        }
    }
    let s = smith(&coords);
    let mut moduli: Vec<BigInt> = s.diagonal.clone();
    moduli.resize(r, BigInt::zero());
    let invariants = moduli
        .iter()
        .filter(|m| !m.is_zero() && !m.is_one())
        .map(|m| m.abs().to_u64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    let free_rank = moduli.iter().filter(|m| m.is_zero()).count();
    Ok(QuotientGroup {
        face,
        group: FiniteAbelianGroup { invariants, free_rank },
        basis,
        change: s.v,
        moduli,
    })
}
