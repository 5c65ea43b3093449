//! Browser bindings. Each export takes the plain text formats of the command
//! line tool and returns JSON; errors come back as a thrown string.

use agraded::decomposition::{associated_primes, chain_check};
use agraded::grading::{fiber_enumerate, triangulation, DegreeBox, GradingMap};
use agraded::groebner::TermOrder;
use agraded::io::{parse_list, parse_matrix, parse_monomial_ideal};
use agraded::standard_pairs::compute_standard_pairs;
use agraded::toric::toric_groebner;
use agraded::{Error, ExponentVector, MonomialIdeal};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Fibers are enumerated per degree, so keep the demo grid small.
const MAX_DEGREES: usize = 400;

#[derive(Serialize)]
struct Pair {
    root: Vec<u32>,
    face: Vec<usize>,
    text: String,
}

#[derive(Serialize)]
struct Staircase {
    names: Vec<String>,
    generators: Vec<Vec<u32>>,
    bound: Vec<u32>,
    standard: Vec<Vec<u32>>,
    pairs: Vec<Pair>,
    primes: Vec<String>,
    chain_holds: bool,
}

#[derive(Serialize)]
struct FiberCell {
    degree: Vec<i64>,
    size: usize,
    standard: Vec<String>,
}

#[derive(Serialize)]
struct FiberMap {
    cells: Vec<FiberCell>,
    defects: usize,
}

#[derive(Serialize)]
struct Cell {
    face: String,
    rays: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct Toric {
    basis: Vec<String>,
    initial: Vec<String>,
    columns: Vec<Vec<i64>>,
    cells: Vec<Cell>,
    valid: bool,
    violations: Vec<String>,
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

fn shown(e: Error) -> String {
    e.to_string()
}

fn monomials(i: &MonomialIdeal, v: &[ExponentVector]) -> Vec<String> {
    v.iter().map(|u| u.display_with(i.names()).to_string()).collect()
}

/// Standard pairs, staircase and associated primes of a monomial ideal.
/// The standard monomials are listed in the staircase box grown by `margin`.
pub fn staircase_json(ideal: &str, margin: u32) -> Result<String, String> {
    let i = parse_monomial_ideal(ideal).map_err(shown)?;
    let b = compute_standard_pairs(&i).map_err(shown)?;
    let bound = ExponentVector::new(i.staircase_bounds().as_slice().iter().map(|x| x + margin).collect());
    let standard = i.standard_monomials_in_box(&bound).map_err(shown)?;
    let faces = associated_primes(&b);
    let out = Staircase {
        names: i.names().to_vec(),
        generators: i.generators().iter().map(|g| g.as_slice().to_vec()).collect(),
        bound: bound.as_slice().to_vec(),
        standard: standard.iter().map(|u| u.as_slice().to_vec()).collect(),
        pairs: b
            .pairs()
            .iter()
            .map(|p| Pair {
                root: p.root.as_slice().to_vec(),
                face: p.face.members().collect(),
                text: p.display_with(i.names()).to_string(),
            })
            .collect(),
        primes: faces.iter().map(|f| f.display_with(i.names())).collect(),
        chain_holds: chain_check(&b).holds,
    };
    json(&out)
}

/// Fiber sizes and standard preimages for every degree of the box `[0, hi]`.
pub fn fibers_json(ideal: &str, matrix: &str, hi: &str) -> Result<String, String> {
    let i = parse_monomial_ideal(ideal).map_err(shown)?;
    let a = parse_matrix(matrix).map_err(shown)?;
    check_shape(&i, &a)?;
    let hi: Vec<i64> = parse_list(hi).map_err(shown)?;
    if hi.len() != a.d() {
        return Err(format!("box has {} entries, the matrix has {} rows", hi.len(), a.d()));
    }
    let degrees = DegreeBox::upto(hi).degrees();
    if degrees.len() > MAX_DEGREES {
        return Err(format!("box has {} degrees, at most {MAX_DEGREES} are shown", degrees.len()));
    }
    let mut cells = Vec::with_capacity(degrees.len());
    let mut defects = 0;
    for q in degrees {
        let fiber = fiber_enumerate(&a, &q).map_err(shown)?;
        let mut standard = Vec::new();
        for u in &fiber {
            if !i.contains(u).map_err(shown)? {
                standard.push(u.clone());
            }
        }
        defects += usize::from(fiber.is_empty() != standard.is_empty() || standard.len() > 1);
        cells.push(FiberCell { degree: q, size: fiber.len(), standard: monomials(&i, &standard) });
    }
    json(&FiberMap { cells, defects })
}

fn check_shape(i: &MonomialIdeal, a: &GradingMap) -> Result<(), String> {
    if i.n() != a.n() {
        return Err(format!("the ideal has {} variables, the matrix {} columns", i.n(), a.n()));
    }
    Ok(())
}

/// Toric Gröbner basis, its initial ideal and the cones of the pairs `(0, face)`.
pub fn toric_json(matrix: &str, weights: &str) -> Result<String, String> {
    let a = parse_matrix(matrix).map_err(shown)?;
    let weights: Vec<i64> = parse_list(weights).map_err(shown)?;
    let order = TermOrder::new(weights, (0..a.n()).collect()).map_err(shown)?;
    let g = toric_groebner(&a, &order).map_err(shown)?;
    let init = g.initial_ideal();
    let t = triangulation(&compute_standard_pairs(&init).map_err(shown)?, &a).map_err(shown)?;
    let out = Toric {
        basis: g.elements().iter().map(|e| e.display_with(g.names()).to_string()).collect(),
        initial: monomials(&init, init.generators()),
        columns: a.columns().to_vec(),
        cells: t.cells.iter().map(|c| Cell { face: c.face.display_with(init.names()), rays: c.rays.clone() }).collect(),
        valid: t.valid,
        violations: t.violations,
    };
    json(&out)
}

#[wasm_bindgen]
pub fn staircase(ideal: &str, margin: u32) -> Result<String, JsValue> {
    staircase_json(ideal, margin).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fibers(ideal: &str, matrix: &str, hi: &str) -> Result<String, JsValue> {
    fibers_json(ideal, matrix, hi).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn toric(matrix: &str, weights: &str) -> Result<String, JsValue> {
    toric_json(matrix, weights).map_err(|e| JsValue::from_str(&e))
}
