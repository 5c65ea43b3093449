//! A monomial ideal in sixteen variables, graded by a map to `Z^3`, whose
//! associated primes violate the chain property.
//!
//! Variables are `e1 e2 e3 f1 f2 f3 g1 g2 g3 k1 … k7` in this order. Indices
//! `i` run over `Z/3`, and the neighbours `i - 1`, `i + 1` are read from
//! explicit tables.

use crate::decomposition::{associated_primes, chain_check, ChainReport};
use crate::error::Result;
use crate::exponents::{ExponentVector, MonomialIdeal};
use crate::grading::{
    agraded_verify, is_pointed, quotient_group, standard_preimages, triangulation, AGradedReport, DegreeBox,
    FiniteAbelianGroup, GradingMap, Pointedness, TriangulationReport,
};
use crate::standard_pairs::{compute_standard_pairs, Face, StandardPair, StandardPairBasis};

pub const N: usize = 16;

/// `i - 1` and `i + 1` modulo 3, for `i = 0, 1, 2` standing for 1, 2, 3.
const PREV: [usize; 3] = [2, 0, 1];
const NEXT: [usize; 3] = [1, 2, 0];

fn e(i: usize) -> usize {
    i
}

fn f(i: usize) -> usize {
    3 + i
}

fn g(i: usize) -> usize {
    6 + i
}

fn k(nu: usize) -> usize {
    9 + nu
}

pub fn variable_names() -> Vec<String> {
    let mut names = Vec::with_capacity(N);
    for prefix in ["e", "f", "g"] {
        names.extend((1..=3).map(|i| format!("{prefix}{i}")));
    }
    names.extend((1..=7).map(|nu| format!("k{nu}")));
    names
}

fn mono(vars: &[usize]) -> ExponentVector {
    let mut a = ExponentVector::zeros(N);
    for &v in vars {
        a.set(v, a.get(v) + 1);
    }
    a
}

/// The generators, family by family, before minimalisation.
pub fn generator_list() -> Vec<ExponentVector> {
    let mut gens = Vec::new();
    // f_i k_ν, g_i k_ν, g_i g_j, k_ν k_μ
    for i in 0..3 {
        for nu in 0..7 {
            gens.push(mono(&[f(i), k(nu)]));
            gens.push(mono(&[g(i), k(nu)]));
        }
        for j in i..3 {
            gens.push(mono(&[g(i), g(j)]));
        }
    }
    for nu in 0..7 {
        for mu in nu..7 {
            gens.push(mono(&[k(nu), k(mu)]));
        }
    }
    for i in 0..3 {
        let (p, q) = (PREV[i], NEXT[i]);
        // f_i^2, f_i g_{i+1}, f_{i-1} f_i g_{i-1}
        gens.push(mono(&[f(i), f(i)]));
        gens.push(mono(&[f(i), g(q)]));
        gens.push(mono(&[f(p), f(i), g(p)]));
        // f_i g_i e_{i-1}, f_{i+1} g_i e_{i-1}, f_i f_{i+1} e_{i-1}
        gens.push(mono(&[f(i), g(i), e(p)]));
        gens.push(mono(&[f(q), g(i), e(p)]));
        gens.push(mono(&[f(i), f(q), e(p)]));
        // f_i e_{i-1} e_{i+1}, g_i e_{i-1} e_{i+1}
        gens.push(mono(&[f(i), e(p), e(q)]));
        gens.push(mono(&[g(i), e(p), e(q)]));
    }
    gens
}

pub fn ideal() -> MonomialIdeal {
    MonomialIdeal::new(variable_names(), generator_list()).expect("static data is well formed")
}

/// The images of the sixteen variables in `Z^3`.
pub fn grading() -> GradingMap {
    let unit = |i: usize| {
        let mut v = vec![0i64; 3];
        v[i] = 1;
        v
    };
    let mut columns = Vec::with_capacity(N);
    columns.extend((0..3).map(|i| unit(i).iter().map(|x| 2 * x).collect::<Vec<i64>>()));
    columns.extend((0..3).map(unit));
    columns.extend((0..3).map(|i| unit(i).iter().map(|x| x + 1).collect::<Vec<i64>>()));
    columns.extend(
        [[3, 2, 2], [2, 3, 2], [2, 2, 3], [2, 3, 3], [3, 2, 3], [3, 3, 2], [3, 3, 3]].iter().map(|c| c.to_vec()),
    );
    GradingMap::from_columns(3, columns).expect("static data is well formed")
}

fn pair(root: &[usize], face: &[usize]) -> StandardPair {
    StandardPair::new(mono(root), Face::from_members(face.iter().copied()))
}

/// The thirty expected standard pairs, grouped by family.
pub fn expected_families() -> Vec<(&'static str, Vec<StandardPair>)> {
    let all_e = [e(0), e(1), e(2)];
    let mut families = Vec::new();
    families.push(("i", (0..7).map(|nu| pair(&[k(nu)], &all_e)).collect()));
    let mut ii = Vec::new();
    let mut iii = Vec::new();
    let mut vi = Vec::new();
    for i in 0..3 {
        let q = NEXT[i];
        let face = [e(i), e(q)];
        ii.push(pair(&[f(i), f(q)], &face));
        ii.push(pair(&[f(i), g(i)], &face));
        ii.push(pair(&[f(q), g(i)], &face));
        iii.push(pair(&[g(q)], &face));
        vi.push(pair(&[f(i)], &face));
        vi.push(pair(&[f(q)], &face));
        vi.push(pair(&[g(i)], &face));
    }
    families.push(("ii", ii));
    families.push(("iii", iii));
    families.push(("iv", vec![pair(&[f(0), f(1), f(2)], &[])]));
    families.push(("v", vec![pair(&[], &all_e)]));
    families.push(("vi", vi));
    families
}

pub fn expected_standard_pairs() -> Vec<StandardPair> {
    let mut pairs: Vec<StandardPair> = expected_families().into_iter().flat_map(|(_, p)| p).collect();
    pairs.sort();
    pairs
}

/// Families (i) to (iv): the pairs with maximal root among those of their face.
pub fn expected_maximal_pairs() -> Vec<StandardPair> {
    let mut pairs: Vec<StandardPair> = expected_families()
        .into_iter()
        .filter(|(name, _)| matches!(*name, "i" | "ii" | "iii" | "iv"))
        .flat_map(|(_, p)| p)
        .collect();
    pairs.sort();
    pairs
}

/// Everything the verification found.
#[derive(Debug, Clone)]
pub struct Report {
    pub generator_count: usize,
    pub pointedness: Pointedness,
    pub basis: StandardPairBasis,
    /// Expected pairs that were not computed, and computed pairs that were not expected.
    pub missing_pairs: Vec<StandardPair>,
    pub extra_pairs: Vec<StandardPair>,
    pub maximal_pairs_match: bool,
    pub faces: Vec<Face>,
    pub chain: ChainReport,
    pub agraded: AGradedReport,
    pub special_degrees: Vec<(Vec<i64>, Vec<ExponentVector>)>,
    pub triangulation: TriangulationReport,
    pub quotient: FiniteAbelianGroup,
    /// Residues of the roots of the pairs with the full face, in root order.
    pub root_residues: Vec<(ExponentVector, Vec<i64>)>,
    pub residues_biject: bool,
}

impl Report {
    pub fn pairs_match(&self) -> bool {
        self.missing_pairs.is_empty() && self.extra_pairs.is_empty()
    }

    fn expected_faces() -> Vec<Face> {
        let mut faces = vec![
            Face::empty(),
            Face::from_members([0, 1]),
            Face::from_members([1, 2]),
            Face::from_members([0, 2]),
            Face::from_members([0, 1, 2]),
        ];
        faces.sort();
        faces
    }

    pub fn faces_match(&self) -> bool {
        self.faces == Self::expected_faces()
    }

    /// The chain property fails exactly at the empty face.
    pub fn chain_as_expected(&self) -> bool {
        !self.chain.holds && self.chain.violations == vec![Face::empty()]
    }

    pub fn special_degrees_ok(&self) -> bool {
        let want = [mono(&[f(0), f(1), f(2)]), mono(&[k(1)])];
        self.special_degrees.len() == want.len()
            && self.special_degrees.iter().zip(&want).all(|((_, got), w)| got.as_slice() == std::slice::from_ref(w))
    }

    /// The single cell is the positive octant.
    pub fn triangulation_ok(&self) -> bool {
        self.triangulation.valid
            && self.triangulation.cells.len() == 1
            && self.triangulation.cells[0].rays == vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]
    }

    pub fn quotient_ok(&self) -> bool {
        self.quotient == FiniteAbelianGroup { invariants: vec![2, 2, 2], free_rank: 0 } && self.residues_biject
    }

    pub fn passed(&self) -> bool {
        self.generator_count == 100
            && self.pointedness.is_pointed()
            && self.pairs_match()
            && self.maximal_pairs_match
            && self.faces_match()
            && self.chain_as_expected()
            && self.agraded.passed
            && self.special_degrees_ok()
            && self.triangulation_ok()
            && self.quotient_ok()
    }
}

pub fn default_box() -> DegreeBox {
    DegreeBox::upto(vec![6, 6, 6])
}

/// Runs every check; `bound` is the degree box for the A-graded certificate.
pub fn verify(bound: &DegreeBox) -> Result<Report> {
    let ideal = ideal();
    let map = grading();
    let pointedness = is_pointed(&map);
    let basis = compute_standard_pairs(&ideal)?;

    let expected = expected_standard_pairs();
    let missing_pairs = expected.iter().filter(|p| !basis.pairs().contains(p)).cloned().collect();
    let extra_pairs = basis.pairs().iter().filter(|p| !expected.contains(p)).cloned().collect();
    let maximal_pairs_match = basis.maximal_pairs() == expected_maximal_pairs();

    let faces = associated_primes(&basis);
    let chain = chain_check(&basis);
    let agraded = agraded_verify(&ideal, &map, bound)?;
    let special_degrees = [vec![1, 1, 1], vec![2, 3, 2]]
        .into_iter()
        .map(|q| standard_preimages(&ideal, &map, &q).map(|pre| (q, pre)))
        .collect::<Result<Vec<_>>>()?;
    let triangulation = triangulation(&basis, &map)?;

    let full = Face::from_members([e(0), e(1), e(2)]);
    let q = quotient_group(&map, full)?;
    let root_residues: Vec<(ExponentVector, Vec<i64>)> = basis
        .layer(full)
        .roots
        .into_iter()
        .map(|r| {
            let w = map.apply(&r)?;
            Ok((r, q.residue(&w)?))
        })
        .collect::<Result<_>>()?;
    let mut classes: Vec<&Vec<i64>> = root_residues.iter().map(|(_, c)| c).collect();
    classes.sort();
    classes.dedup();
    let residues_biject =
        q.group.order().is_some_and(|o| o as usize == root_residues.len() && classes.len() == root_residues.len());

    Ok(Report {
        generator_count: ideal.generators().len(),
        pointedness,
        basis,
        missing_pairs,
        extra_pairs,
        maximal_pairs_match,
        faces,
        chain,
        agraded,
        special_degrees,
        triangulation,
        quotient: q.group,
        root_residues,
        residues_biject,
    })
}
