use std::collections::BTreeMap;

use num_integer::Integer;

use super::GradingMap;
use crate::error::{Error, Result};
use crate::linalg::{clear_denominators, fourier_motzkin, rank, to_i64_vec, Feasibility, Inequality};
use crate::standard_pairs::{Face, StandardPairBasis};

/// A cell `pos(A(e_j) : j ∈ face)` of the triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub face: Face,
    /// Primitive ray generators, sorted.
    pub rays: Vec<Vec<i64>>,
    /// For a simplicial cell, one integer form per ray: zero on the other
    /// rays and positive on this one. Empty otherwise.
    pub facet_normals: Vec<Vec<i64>>,
}

fn facet_normals(d: usize, rays: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for (k, ray) in rays.iter().enumerate() {
        let mut system = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if i != k {
                equalities(r, 0, &mut system);
            }
        }
        system.push(Inequality::from_ints(ray, 1));
        match fourier_motzkin(d, &system) {
            Feasibility::Feasible(h) => match to_i64_vec(&clear_denominators(&h)) {
                Ok(h) => out.push(h),
                Err(_) => return Vec::new(),
            },
            Feasibility::Infeasible(_) => return Vec::new(),
        }
    }
    out
}

/// The cells read off the pairs `(0, ℓ)` of `B(T)` and every property that
/// failed when checking them as a triangulation of `pos(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangulationReport {
    pub cells: Vec<Cone>,
    /// Dimension of `pos(A)`.
    pub dimension: usize,
    pub violations: Vec<String>,
    pub valid: bool,
}

fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|x| x / g).collect()
    }
}

fn equalities(v: &[i64], rhs: i64, out: &mut Vec<Inequality>) {
    let neg: Vec<i64> = v.iter().map(|x| -x).collect();
    out.push(Inequality::from_ints(v, rhs));
    out.push(Inequality::from_ints(&neg, -rhs));
}

fn feasible(dim: usize, system: &[Inequality]) -> bool {
    matches!(fourier_motzkin(dim, system), Feasibility::Feasible(_))
}

/// A functional vanishing on `common`, positive on `left`, negative on `right`.
fn separated(d: usize, common: &[&Vec<i64>], left: &[&Vec<i64>], right: &[&Vec<i64>]) -> bool {
    let mut system = Vec::new();
    for u in common {
        equalities(u, 0, &mut system);
    }
    for v in left {
        system.push(Inequality::from_ints(v, 1));
    }
    for w in right {
        let neg: Vec<i64> = w.iter().map(|x| -x).collect();
        system.push(Inequality::from_ints(&neg, 1));
    }
    feasible(d, &system)
}

/// Whether `v` is a nonnegative combination of `rays`.
fn in_cone(v: &[i64], rays: &[Vec<i64>]) -> bool {
    let k = rays.len();
    let mut system = Vec::new();
    for i in 0..v.len() {
        let row: Vec<i64> = rays.iter().map(|r| r[i]).collect();
        equalities(&row, v[i], &mut system);
    }
    for j in 0..k {
        let mut e = vec![0i64; k];
        e[j] = 1;
        system.push(Inequality::from_ints(&e, 0));
    }
    if k == 0 {
        return v.iter().all(|&x| x == 0);
    }
    feasible(k, &system)
}

/// Checks that the cones over the faces `ℓ` with `(0, ℓ) ∈ B(T)` triangulate
/// `pos(A)`.
///
/// Each cell must be simplicial and full-dimensional, every column of A
/// must lie in some cell, any two cells must meet in a common face (checked
/// by a separating functional), and each facet of a cell lies either on the
/// boundary of `pos(A)` and in one cell, or in the interior and in exactly
/// two cells.
pub fn triangulation(basis: &StandardPairBasis, map: &GradingMap) -> Result<TriangulationReport> {
    if basis.n() != map.n() {
        return Err(Error::DimensionMismatch { expected: map.n(), found: basis.n() });
    }
    map.certificate()?;
    let d = map.d();
    let dimension = rank(map.columns(), d);
    let mut violations = Vec::new();
    let names = basis.ideal().names();

    let mut cells: Vec<Cone> = basis
        .pairs()
        .iter()
        .filter(|p| p.root.is_zero())
        .map(|p| {
            let mut rays: Vec<Vec<i64>> = p.face.members().map(|j| primitive(map.column(j))).collect();
            rays.sort();
            let facet_normals = facet_normals(d, &rays);
            Cone { face: p.face, rays, facet_normals }
        })
        .collect();
    cells.sort_by_key(|c| c.face);
    if cells.is_empty() {
        violations.push("no pair with root 0".to_string());
    }

    let mut good = vec![true; cells.len()];
    for (k, c) in cells.iter().enumerate() {
        let label = c.face.display_with(names);
        let mut distinct = c.rays.clone();
        distinct.dedup();
        if distinct.len() != c.rays.len() || rank(&c.rays, d) != c.rays.len() {
            violations.push(format!("cell {label} is not simplicial"));
            good[k] = false;
        } else if c.rays.len() != dimension {
            violations.push(format!("cell {label} has dimension {} instead of {dimension}", c.rays.len()));
            good[k] = false;
        }
    }

    for (j, col) in map.columns().iter().enumerate() {
        if !cells.iter().any(|c| in_cone(col, &c.rays)) {
            violations.push(format!("column {} of the grading lies in no cell", names[j]));
        }
    }

    for (a, s) in cells.iter().enumerate() {
        for t in &cells[a + 1..] {
            let common: Vec<&Vec<i64>> = s.rays.iter().filter(|r| t.rays.contains(r)).collect();
            let left: Vec<&Vec<i64>> = s.rays.iter().filter(|r| !t.rays.contains(r)).collect();
            let right: Vec<&Vec<i64>> = t.rays.iter().filter(|r| !s.rays.contains(r)).collect();
            let label = format!("{} and {}", s.face.display_with(names), t.face.display_with(names));
            if left.is_empty() && right.is_empty() {
                violations.push(format!("cells {label} coincide"));
            } else if !separated(d, &common, &left, &right) {
                violations.push(format!("cells {label} overlap beyond a common face"));
            }
        }
    }

    // facet -> (number of good cells containing it, on the boundary of pos(A))
    let mut facets: BTreeMap<Vec<Vec<i64>>, (usize, bool)> = BTreeMap::new();
    for (k, c) in cells.iter().enumerate() {
        if !good[k] {
            continue;
        }
        for omit in 0..c.rays.len() {
            let facet: Vec<Vec<i64>> =
                c.rays.iter().enumerate().filter(|(i, _)| *i != omit).map(|(_, r)| r.clone()).collect();
            let entry = facets.entry(facet.clone()).or_insert_with(|| (0, on_boundary(map, &facet, &c.rays[omit])));
            entry.0 += 1;
        }
    }
    for (facet, (count, boundary)) in &facets {
        let expected = if *boundary { 1 } else { 2 };
        if *count != expected {
            let where_ = if *boundary { "boundary" } else { "interior" };
            violations.push(format!("{where_} facet {facet:?} lies in {count} cells"));
        }
    }

    Ok(TriangulationReport { valid: violations.is_empty(), cells, dimension, violations })
}

/// Some functional vanishes on the facet, is positive on the omitted ray and
/// nonnegative on every column.
fn on_boundary(map: &GradingMap, facet: &[Vec<i64>], omitted: &[i64]) -> bool {
    let d = map.d();
    let mut system = Vec::new();
    for r in facet {
        equalities(r, 0, &mut system);
    }
    system.push(Inequality::from_ints(omitted, 1));
    for col in map.columns() {
        system.push(Inequality::from_ints(col, 0));
    }
    feasible(d, &system)
}
