//! Exponent vectors and monomial ideals.
//!
//! A monomial `x^a` is identified with its exponent vector `a`. A monomial
//! ideal is stored through its unique minimal generating set; everything
//! outside the ideal is the staircase of standard monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A point of the nonnegative orthant, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(coords: Vec<u32>) -> Self {
        ExponentVector(coords)
    }

    pub fn zeros(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    /// The `i`-th unit vector of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExponentVector(v)
    }

    /// Builds a vector from signed coordinates, rejecting negative entries.
    pub fn from_signed(coords: &[i64]) -> Result<Self> {
        coords
            .iter()
            .map(|&c| u32::try_from(c).map_err(|_| Error::invalid(format!("negative or oversized exponent {c}"))))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: u32) {
        self.0[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }

    /// Positions with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, _)| i)
    }

    /// Componentwise `self <= other`, i.e. `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        le_slice(&self.0, &other.0)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        self.check_len(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// `self - other`, defined only when `other` divides `self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if self.len() != other.len() {
            return None;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn checked_scale(&self, k: u32) -> Result<ExponentVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExponentVector)
    }

    /// Componentwise maximum (least common multiple of monomials).
    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Componentwise minimum (greatest common divisor of monomials).
    pub fn gcd(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Truncated difference `max(self - other, 0)`, the exponent of `x^self : x^other`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Signed difference `self - other`.
    pub fn difference(&self, other: &ExponentVector) -> Vec<i64> {
        self.0.iter().zip(&other.0).map(|(a, b)| i64::from(*a) - i64::from(*b)).collect()
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|&a| i64::from(a)).collect()
    }

    pub(crate) fn check_len(&self, other: &ExponentVector) -> Result<()> {
        if self.len() == other.len() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.len(), found: other.len() })
        }
    }

    /// Formats the monomial `x^self` with the given variable names; the empty
    /// product prints as `1`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> MonomialDisplay<'a> {
        MonomialDisplay { exps: &self.0, names }
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub struct MonomialDisplay<'a> {
    exps: &'a [u32],
    names: &'a [String],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            match self.names.get(i) {
                Some(name) => write!(f, "{name}")?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

pub(crate) fn le_slice(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Default variable names `x1, …, xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// Reduces a generator list to the unique minimal generating set, sorted
/// lexicographically. All vectors must share one length.
pub fn minimalize(gens: Vec<ExponentVector>) -> Result<Vec<ExponentVector>> {
    if let Some(first) = gens.first() {
        for g in &gens {
            first.check_len(g)?;
        }
    }
    Ok(minimalize_unchecked(gens))
}

pub(crate) fn minimalize_unchecked(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // Sorting by total degree first means a divisor is always seen before its multiples.
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// A monomial ideal in `n` variables, stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    names: Vec<String>,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens` over the named variables.
    pub fn new(names: Vec<String>, gens: Vec<ExponentVector>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::invalid("an ideal needs at least one variable"));
        }
        for g in &gens {
            if g.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.len() });
            }
        }
        Ok(MonomialIdeal { names, gens: minimalize_unchecked(gens) })
    }

    /// Same as [`MonomialIdeal::new`] with default names `x1, …, xn`.
    pub fn with_default_names(n: usize, gens: Vec<ExponentVector>) -> Result<Self> {
        Self::new(default_names(n), gens)
    }

    pub fn zero(names: Vec<String>) -> Self {
        MonomialIdeal { names, gens: Vec::new() }
    }

    pub fn unit(names: Vec<String>) -> Self {
        let n = names.len();
        MonomialIdeal { names, gens: vec![ExponentVector::zeros(n)] }
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(ExponentVector::is_zero)
    }

    /// Whether `x^a` lies in the ideal.
    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        if a.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: a.len() });
        }
        Ok(self.contains_slice(a.as_slice()))
    }

    pub(crate) fn contains_slice(&self, a: &[u32]) -> bool {
        self.gens.iter().any(|g| le_slice(g.as_slice(), a))
    }

    /// Componentwise maximum of the generators; zero where no generator uses
    /// the variable.
    pub fn staircase_bounds(&self) -> ExponentVector {
        let mut d = vec![0u32; self.n()];
        for g in &self.gens {
            for (slot, &e) in d.iter_mut().zip(g.as_slice()) {
                *slot = (*slot).max(e);
            }
        }
        ExponentVector(d)
    }

    /// Intersection, generated by pairwise least common multiples.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: other.n() });
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal { names: self.names.clone(), gens: minimalize_unchecked(gens) })
    }

    /// The colon ideal `(I : x^m)`.
    pub fn colon(&self, m: &ExponentVector) -> Result<MonomialIdeal> {
        if m.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: m.len() });
        }
        let gens = self.gens.iter().map(|g| g.saturating_sub(m)).collect();
        Ok(MonomialIdeal { names: self.names.clone(), gens: minimalize_unchecked(gens) })
    }

    /// All standard monomials `a <= bound` (componentwise), in lexicographic order.
    ///
    /// Branches whose prefix already lies in the ideal are cut, so the cost is
    /// proportional to the size of the answer rather than of the box.
    pub fn standard_monomials_in_box(&self, bound: &ExponentVector) -> Result<Vec<ExponentVector>> {
        if bound.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: bound.len() });
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n()];
        self.standard_dfs(bound.as_slice(), 0, &mut cur, &mut out);
        Ok(out)
    }

    fn standard_dfs(&self, bound: &[u32], i: usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if i == cur.len() {
            out.push(ExponentVector(cur.clone()));
            return;
        }
        for v in 0..=bound[i] {
            cur[i] = v;
            if self.contains_slice(cur) {
                break;
            }
            self.standard_dfs(bound, i + 1, cur, out);
        }
        cur[i] = 0;
    }

    /// Whether two ideals agree on every monomial `a <= bound`.
    ///
    /// It suffices to compare the generators lying inside the box: a box
    /// monomial of one ideal is divisible by one of its generators, which then
    /// also lies in the box.
    pub fn agrees_in_box(&self, other: &MonomialIdeal, bound: &ExponentVector) -> Result<bool> {
        if self.n() != other.n() || bound.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: other.n().min(bound.len()) });
        }
        let inside = |a: &MonomialIdeal, b: &MonomialIdeal| {
            a.gens.iter().filter(|g| g.divides(bound)).all(|g| b.contains_slice(g.as_slice()))
        };
        Ok(inside(self, other) && inside(other, self))
    }

    /// Ideal over the same variables with different generators.
    pub fn with_generators(&self, gens: Vec<ExponentVector>) -> Result<MonomialIdeal> {
        Self::new(self.names.clone(), gens)
    }

    pub fn rename(mut self, names: Vec<String>) -> Result<MonomialIdeal> {
        if names.len() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: names.len() });
        }
        self.names = names;
        Ok(self)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display_with(&self.names))?;
        }
        write!(f, ")")
    }
}

/// Iterates every vector `a` with `0 <= a <= bound`, lexicographically.
pub struct BoxIter {
    bound: Vec<u32>,
    cur: Option<Vec<u32>>,
}

impl BoxIter {
    pub fn new(bound: &ExponentVector) -> Self {
        BoxIter { bound: bound.as_slice().to_vec(), cur: Some(vec![0; bound.len()]) }
    }
}

impl Iterator for BoxIter {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let cur = self.cur.as_mut()?;
        let out = ExponentVector(cur.clone());
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if cur[i] < self.bound[i] {
                cur[i] += 1;
                break;
            }
            cur[i] = 0;
        }
        Some(out)
    }
}

/// Partial order comparison: `Some(ordering)` when comparable.
pub fn partial_cmp_componentwise(a: &ExponentVector, b: &ExponentVector) -> Option<Ordering> {
    match (a.divides(b), b.divides(a)) {
        (true, true) => Some(Ordering::Equal),
        (true, false) => Some(Ordering::Less),
        (false, true) => Some(Ordering::Greater),
        (false, false) => None,
    }
}
