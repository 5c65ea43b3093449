use std::fmt;

use super::{dot, GradingMap};
use crate::error::{Error, Result};
use crate::exponents::{ExponentVector, MonomialIdeal};

/// An integer box of degrees `lo <= q <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl DegreeBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch { expected: lo.len(), found: hi.len() });
        }
        Ok(DegreeBox { lo, hi })
    }

    /// `[0, hi]` in every coordinate.
    pub fn upto(hi: Vec<i64>) -> Self {
        DegreeBox { lo: vec![0; hi.len()], hi }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    /// Every degree of the box in lexicographic order.
    pub fn degrees(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return out;
        }
        let mut cur = self.lo.clone();
        loop {
            out.push(cur.clone());
            let mut i = cur.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = self.lo[i];
            }
        }
    }
}

impl fmt::Display for DegreeBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lo.iter().zip(&self.hi).map(|(l, h)| format!("[{l},{h}]")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

/// Depth-first search over a fiber `{a ≥ 0 : A a = q}`.
///
/// Variables are visited by decreasing certificate weight, and the weight
/// budget `c · (q - A a)` bounds every count. Rows in which all columns are
/// nonnegative give an additional per-coordinate bound.
struct FiberSearch<'a> {
    map: &'a GradingMap,
    weights: Vec<i64>,
    order: Vec<usize>,
    nonneg_rows: Vec<bool>,
}

impl<'a> FiberSearch<'a> {
    fn new(map: &'a GradingMap) -> Result<Self> {
        let weights = map.positive_weights()?;
        let mut order: Vec<usize> = (0..map.n()).collect();
        order.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        let nonneg_rows = (0..map.d()).map(|i| map.columns().iter().all(|c| c[i] >= 0)).collect();
        Ok(FiberSearch { map, weights, order, nonneg_rows })
    }

    fn certificate_budget(&self, q: &[i64]) -> Result<i64> {
        let c = self.map.certificate()?;
        Ok(dot(&c, q))
    }

    /// Calls `visit` on every fiber point; `prune(partial)` returning true
    /// cuts the branch and every branch with a larger count at that variable.
    /// `visit` returning false stops the search.
    fn run(
        &self,
        q: &[i64],
        prune: &mut dyn FnMut(&[u32]) -> bool,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<()> {
        if q.len() != self.map.d() {
            return Err(Error::DimensionMismatch { expected: self.map.d(), found: q.len() });
        }
        let budget = self.certificate_budget(q)?;
        if budget < 0 {
            return Ok(());
        }
        let mut cur = vec![0u32; self.map.n()];
        let mut residual = q.to_vec();
        self.step(0, budget, &mut residual, &mut cur, prune, visit);
        Ok(())
    }

    fn step(
        &self,
        k: usize,
        budget: i64,
        residual: &mut Vec<i64>,
        cur: &mut Vec<u32>,
        prune: &mut dyn FnMut(&[u32]) -> bool,
        visit: &mut dyn FnMut(&[u32]) -> bool,
    ) -> bool {
        if k == self.order.len() {
            if residual.iter().all(|&r| r == 0) {
                return visit(cur);
            }
            return true;
        }
        let j = self.order[k];
        let col = self.map.column(j);
        let w = self.weights[j];
        let max_t = budget / w;
        let mut t = 0i64;
        loop {
            if self.nonneg_rows.iter().zip(residual.iter()).any(|(&nn, &r)| nn && r < 0) {
                break;
            }
            cur[j] = t as u32;
            if t > 0 && prune(cur) {
                break;
            }
            if k + 1 == self.order.len() {
                if residual.iter().all(|&r| r == 0) && !visit(cur) {
                    cur[j] = 0;
                    self.restore(residual, col, t);
                    return false;
                }
            } else if !self.step(k + 1, budget - t * w, residual, cur, prune, visit) {
                cur[j] = 0;
                self.restore(residual, col, t);
                return false;
            }
            if t == max_t {
                break;
            }
            t += 1;
            for (r, &c) in residual.iter_mut().zip(col) {
                *r -= c;
            }
        }
        cur[j] = 0;
        self.restore(residual, col, t);
        true
    }

    fn restore(&self, residual: &mut [i64], col: &[i64], t: i64) {
        for (r, &c) in residual.iter_mut().zip(col) {
            *r += c * t;
        }
    }
}

/// Every `a ∈ N^n` with `A a = q`, sorted.
pub fn fiber_enumerate(map: &GradingMap, q: &[i64]) -> Result<Vec<ExponentVector>> {
    let search = FiberSearch::new(map)?;
    let mut out = Vec::new();
    search.run(q, &mut |_| false, &mut |a| {
        out.push(ExponentVector::new(a.to_vec()));
        true
    })?;
    out.sort();
    Ok(out)
}

fn fiber_nonempty(search: &FiberSearch<'_>, q: &[i64]) -> Result<bool> {
    let mut found = false;
    search.run(q, &mut |_| false, &mut |_| {
        found = true;
        false
    })?;
    Ok(found)
}

fn standard_in_fiber(search: &FiberSearch<'_>, ideal: &MonomialIdeal, q: &[i64]) -> Result<Vec<ExponentVector>> {
    let mut out = Vec::new();
    // a partial vector lies below every completion, so once it is in the ideal
    // so is every completion
    search.run(q, &mut |partial| ideal.contains_slice(partial), &mut |a| {
        if !ideal.contains_slice(a) {
            out.push(ExponentVector::new(a.to_vec()));
        }
        true
    })?;
    out.sort();
    Ok(out)
}

/// Standard monomials of degree `q`.
pub fn standard_preimages(ideal: &MonomialIdeal, map: &GradingMap, q: &[i64]) -> Result<Vec<ExponentVector>> {
    check_shapes(ideal, map)?;
    standard_in_fiber(&FiberSearch::new(map)?, ideal, q)
}

fn check_shapes(ideal: &MonomialIdeal, map: &GradingMap) -> Result<()> {
    if ideal.n() != map.n() {
        return Err(Error::DimensionMismatch { expected: map.n(), found: ideal.n() });
    }
    Ok(())
}

/// A degree at which the Hilbert function is wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeDefect {
    pub degree: Vec<i64>,
    pub fiber_empty: bool,
    pub standard: Vec<ExponentVector>,
}

/// Bounded A-gradedness certificate: valid for the degrees of `bound` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AGradedReport {
    pub bound: DegreeBox,
    pub degrees_checked: usize,
    pub nonempty_fibers: usize,
    pub defects: Vec<DegreeDefect>,
    pub passed: bool,
}

/// Checks, for every degree of the box, that a nonempty fiber holds exactly
/// one standard monomial and an empty fiber none.
pub fn agraded_verify(ideal: &MonomialIdeal, map: &GradingMap, bound: &DegreeBox) -> Result<AGradedReport> {
    check_shapes(ideal, map)?;
    if bound.dim() != map.d() {
        return Err(Error::DimensionMismatch { expected: map.d(), found: bound.dim() });
    }
    let search = FiberSearch::new(map)?;
    let mut defects = Vec::new();
    let mut nonempty_fibers = 0;
    let degrees = bound.degrees();
    for q in &degrees {
        let standard = standard_in_fiber(&search, ideal, q)?;
        let nonempty = !standard.is_empty() || fiber_nonempty(&search, q)?;
        if nonempty {
            nonempty_fibers += 1;
        }
        let expected = usize::from(nonempty);
        if standard.len() != expected {
            defects.push(DegreeDefect { degree: q.clone(), fiber_empty: !nonempty, standard });
        }
    }
    Ok(AGradedReport {
        bound: bound.clone(),
        degrees_checked: degrees.len(),
        nonempty_fibers,
        passed: defects.is_empty(),
        defects,
    })
}
