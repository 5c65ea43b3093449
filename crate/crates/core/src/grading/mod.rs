//! The grading map `A: Z^n → Z^d` and what is built on it.
//!
//! A monomial ideal is A-graded when every fiber `{a ≥ 0 : A a = q}` that is
//! nonempty contains exactly one standard monomial. That is an infinite
//! condition; [`agraded_verify`] and [`enumerate_agraded`] certify it only up
//! to a finite box of degrees, and their reports carry that box.

mod enumerate;
mod fiber;
mod quotient;
mod triangulation;

pub use enumerate::{enumerate_agraded, TruncatedIdeal};
pub use fiber::{agraded_verify, fiber_enumerate, standard_preimages, AGradedReport, DegreeBox, DegreeDefect};
pub use quotient::{quotient_group, FiniteAbelianGroup, QuotientGroup};
pub use triangulation::{triangulation, Cone, TriangulationReport};

use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exponents::ExponentVector;
use crate::linalg::{clear_denominators, fourier_motzkin, to_i64_vec, Feasibility, Inequality, IntMatrix};

/// An integer `d × n` matrix, stored by its columns `A(e_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingMap {
    d: usize,
    columns: Vec<Vec<i64>>,
}

impl GradingMap {
    /// From `d` rows of equal length `n`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let d = rows.len();
        if d == 0 {
            return Err(Error::invalid("grading map needs at least one row"));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::invalid("grading map needs at least one column"));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.len() });
        }
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Ok(GradingMap { d, columns })
    }

    pub fn from_columns(d: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        if d == 0 || columns.is_empty() {
            return Err(Error::invalid("grading map must be at least 1 x 1"));
        }
        if let Some(bad) = columns.iter().find(|c| c.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: bad.len() });
        }
        Ok(GradingMap { d, columns })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.d).map(|i| self.columns.iter().map(|c| c[i]).collect()).collect()
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.rows(), self.n())
    }

    /// `A(a)`.
    pub fn apply(&self, a: &ExponentVector) -> Result<Vec<i64>> {
        if a.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: a.len() });
        }
        let mut out = vec![0i64; self.d];
        for (c, &e) in self.columns.iter().zip(a.as_slice()) {
            for (o, &x) in out.iter_mut().zip(c) {
                *o = x.checked_mul(i64::from(e)).and_then(|p| o.checked_add(p)).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// `A(v)` for a signed vector.
    pub fn apply_signed(&self, v: &[i64]) -> Result<Vec<i64>> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: v.len() });
        }
        let mut out = vec![0i64; self.d];
        for (c, &e) in self.columns.iter().zip(v) {
            for (o, &x) in out.iter_mut().zip(c) {
                *o = x.checked_mul(e).and_then(|p| o.checked_add(p)).ok_or(Error::Overflow)?;
            }
        }
        Ok(out)
    }

    /// The pointedness certificate, or an error carrying a nonnegative kernel vector.
    pub fn certificate(&self) -> Result<Vec<i64>> {
        match is_pointed(self) {
            Pointedness::Pointed { certificate } => Ok(certificate),
            Pointedness::NotPointed { witness } => Err(Error::NotPointed { witness }),
        }
    }

    /// The positive weights `c · A(e_j)` induced by a certificate `c`.
    pub fn positive_weights(&self) -> Result<Vec<i64>> {
        let c = self.certificate()?;
        Ok(self.columns.iter().map(|col| dot(&c, col)).collect())
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Outcome of the pointedness test: exactly one of the two certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pointedness {
    /// An integer functional positive on every column.
    Pointed { certificate: Vec<i64> },
    /// A nonzero nonnegative integer vector in the kernel of A.
    NotPointed { witness: Vec<i64> },
}

impl Pointedness {
    pub fn is_pointed(&self) -> bool {
        matches!(self, Pointedness::Pointed { .. })
    }

    /// Re-checks the returned object against the map.
    pub fn validate(&self, a: &GradingMap) -> bool {
        match self {
            Pointedness::Pointed { certificate } => {
                certificate.len() == a.d() && a.columns().iter().all(|col| dot(certificate, col) > 0)
            }
            Pointedness::NotPointed { witness } => {
                witness.len() == a.n()
                    && witness.iter().all(|&w| w >= 0)
                    && witness.iter().any(|&w| w > 0)
                    && a.apply_signed(witness).is_ok_and(|img| img.iter().all(|&x| x == 0))
            }
        }
    }
}

/// Decides whether `ker A ∩ N^n = 0`.
///
/// By Gordan's alternative either some `c` has `c · A(e_j) ≥ 1` for all `j`,
/// or the columns admit a nonnegative, nonzero vanishing combination.
/// Fourier–Motzkin elimination finds the first, or its Farkas multipliers
/// give the second.
pub fn is_pointed(a: &GradingMap) -> Pointedness {
    let system: Vec<Inequality> = a.columns().iter().map(|col| Inequality::from_ints(col, 1)).collect();
    match fourier_motzkin(a.d(), &system) {
        Feasibility::Feasible(c) => {
            let certificate = to_i64_vec(&clear_denominators(&c)).expect("certificate fits in i64");
            Pointedness::Pointed { certificate }
        }
        Feasibility::Infeasible(lambda) => {
            debug_assert!(lambda.iter().all(|x: &BigRational| !x.is_negative()));
            let witness = to_i64_vec(&clear_denominators(&lambda)).expect("witness fits in i64");
            Pointedness::NotPointed { witness }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pointedness_examples() {
        let p = is_pointed(&GradingMap::from_rows(&[vec![1, -1]]).unwrap());
        assert_eq!(p, Pointedness::NotPointed { witness: vec![1, 1] });
        let id = GradingMap::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let p = is_pointed(&id);
        assert!(p.is_pointed() && p.validate(&id));
        let twisted = GradingMap::from_rows(&[vec![1, 1, 1], vec![0, 1, 2]]).unwrap();
        assert!(is_pointed(&twisted).validate(&twisted));
    }

    #[test]
    fn apply_checks_length() {
        let a = GradingMap::from_rows(&[vec![1, 2]]).unwrap();
        assert_eq!(a.apply(&ExponentVector::new(vec![3, 1])).unwrap(), vec![5]);
        assert!(a.apply(&ExponentVector::new(vec![1])).is_err());
        assert!(GradingMap::from_rows(&[vec![1, 2], vec![1]]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn pointedness_is_certified(data in proptest::collection::vec(-3i64..4, 2..9)) {
            let n = data.len() / 2;
            proptest::prop_assume!(n >= 1);
            let rows = vec![data[..n].to_vec(), data[n..2 * n].to_vec()];
            let a = GradingMap::from_rows(&rows).unwrap();
            let p = is_pointed(&a);
            proptest::prop_assert!(p.validate(&a), "{:?} for {:?}", p, rows);
        }
    }
}
