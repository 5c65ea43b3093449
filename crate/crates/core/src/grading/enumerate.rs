use std::collections::{BTreeMap, HashMap};

use super::{dot, GradingMap};
use crate::error::Result;
use crate::exponents::ExponentVector;

/// A candidate A-graded ideal, known only in the degrees `q` with
/// `certificate · q <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedIdeal {
    pub certificate: Vec<i64>,
    pub bound: i64,
    /// The chosen standard monomial of every nonempty fiber below the bound, sorted.
    pub standard: Vec<ExponentVector>,
    /// Minimal non-standard monomials below the bound, sorted.
    pub generators: Vec<ExponentVector>,
}

struct Universe {
    monomials: Vec<ExponentVector>,
    /// `u - e_j` for every `j` in the support of `u`, as indices.
    predecessors: Vec<Vec<usize>>,
    /// Fibers in increasing weight, each a list of monomial indices.
    fibers: Vec<Vec<usize>>,
}

fn universe(map: &GradingMap, certificate: &[i64], bound: i64) -> Result<Universe> {
    let weights: Vec<i64> = map.columns().iter().map(|c| dot(certificate, c)).collect();
    let n = map.n();
    let mut monomials = Vec::new();
    let mut cur = vec![0u32; n];
    collect(&weights, bound, 0, &mut cur, &mut monomials);
    monomials.sort();
    let index: HashMap<&ExponentVector, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let predecessors = monomials
        .iter()
        .map(|m| {
            m.support()
                .map(|j| {
                    let mut p = m.clone();
                    p.set(j, m.get(j) - 1);
                    index[&p]
                })
                .collect()
        })
        .collect();
    let mut by_degree: BTreeMap<(i64, Vec<i64>), Vec<usize>> = BTreeMap::new();
    for (i, m) in monomials.iter().enumerate() {
        let q = map.apply(m)?;
        by_degree.entry((dot(certificate, &q), q)).or_default().push(i);
    }
    Ok(Universe { monomials, predecessors, fibers: by_degree.into_values().collect() })
}

fn collect(weights: &[i64], budget: i64, j: usize, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
    if j == weights.len() {
        out.push(ExponentVector::new(cur.clone()));
        return;
    }
    let mut left = budget;
    let mut t = 0;
    loop {
        cur[j] = t;
        collect(weights, left, j + 1, cur, out);
        left -= weights[j];
        if left < 0 {
            break;
        }
        t += 1;
    }
    cur[j] = 0;
}

/// All ways of picking one standard monomial in every nonempty fiber of
/// weight at most `bound` so that the standard set stays closed under
/// division.
///
/// Degrees are processed by increasing certificate weight, so every divisor
/// of a candidate has already been decided when the candidate is tried.
/// Each result is an A-graded ideal only as far as the bound reaches.
pub fn enumerate_agraded(map: &GradingMap, bound: i64) -> Result<Vec<TruncatedIdeal>> {
    let certificate = map.certificate()?;
    if bound < 0 {
        return Ok(Vec::new());
    }
    let u = universe(map, &certificate, bound)?;
    let mut standard = vec![false; u.monomials.len()];
    let mut out = Vec::new();
    backtrack(&u, 0, &mut standard, &mut |chosen| {
        let pick = |keep: bool| -> Vec<ExponentVector> {
            (0..u.monomials.len())
                .filter(|&i| {
                    if keep {
                        chosen[i]
                    } else {
                        !chosen[i] && u.predecessors[i].iter().all(|&p| chosen[p])
                    }
                })
                .map(|i| u.monomials[i].clone())
                .collect()
        };
        out.push(TruncatedIdeal { certificate: certificate.clone(), bound, standard: pick(true), generators: pick(false) });
    });
    Ok(out)
}

fn backtrack(u: &Universe, k: usize, standard: &mut Vec<bool>, emit: &mut dyn FnMut(&[bool])) {
    if k == u.fibers.len() {
        emit(standard);
        return;
    }
    for &m in &u.fibers[k] {
        if u.predecessors[m].iter().all(|&p| standard[p]) {
            standard[m] = true;
            backtrack(u, k + 1, standard, emit);
            standard[m] = false;
        }
    }
}
