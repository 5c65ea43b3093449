mod common;

use std::collections::BTreeMap;

use agraded::exponents::default_names;
use agraded::saturated::{
    binomial_component, is_saturated, lattice_k, fiber_structure_check, monomial_part, property_ii_check,
    verify_primary_decomposition, BinomialIdeal, LatticeK, PureBinomial,
};
use agraded::{Error, ExponentVector, Face, MonomialIdeal};
use common::{box_points, ev, rng, DegreeGraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn binomial_ideal(n: usize, monos: &[&[u32]], bins: &[(&[u32], &[u32])]) -> BinomialIdeal {
    BinomialIdeal::new(
        default_names(n),
        monos.iter().map(|m| ev(m)).collect(),
        bins.iter().map(|(a, b)| PureBinomial::new(ev(a), ev(b)).unwrap()).collect(),
    )
    .unwrap()
}

/// Monomial generators and binomial pairs as raw exponent lists.
type RawIdeal = (Vec<Vec<u32>>, Vec<(Vec<u32>, Vec<u32>)>);

fn random_homogeneous(r: &mut ChaCha8Rng) -> RawIdeal {
    let n = 3;
    let of_degree = |r: &mut ChaCha8Rng, d: u32| -> Vec<u32> {
        let mut v = vec![0u32; n];
        for _ in 0..d {
            v[r.gen_range(0..n)] += 1;
        }
        v
    };
    let count = r.gen_range(1..=2);
    let mut bins = Vec::new();
    while bins.len() < count {
        let d = r.gen_range(1..=3);
        let (u, v) = (of_degree(r, d), of_degree(r, d));
        if u != v {
            bins.push((u, v));
        }
    }
    let monos = if r.gen_bool(0.5) {
        let d = r.gen_range(2..=3);
        vec![of_degree(r, d)]
    } else {
        Vec::new()
    };
    (monos, bins)
}

fn to_ideal(monos: &[Vec<u32>], bins: &[(Vec<u32>, Vec<u32>)]) -> BinomialIdeal {
    BinomialIdeal::new(
        default_names(3),
        monos.iter().map(|m| ExponentVector::new(m.clone())).collect(),
        bins.iter().map(|(a, b)| PureBinomial::new(ExponentVector::new(a.clone()), ExponentVector::new(b.clone())).unwrap()).collect(),
    )
    .unwrap()
}

#[test]
fn groebner_membership_matches_connectivity() {
    let mut r = rng(31);
    for _ in 0..40 {
        let (monos, bins) = random_homogeneous(&mut r);
        let g = to_ideal(&monos, &bins).groebner().unwrap();
        for degree in 0..=5 {
            let graph = DegreeGraph::new(3, &monos, &bins, degree);
            for a in &graph.points {
                let ea = ExponentVector::new(a.clone());
                assert_eq!(g.contains_monomial(&ea), graph.contains_monomial(a));
                for b in &graph.points {
                    let eb = ExponentVector::new(b.clone());
                    assert_eq!(g.contains_difference(&ea, &eb), graph.contains_difference(a, b), "{monos:?} {bins:?}");
                }
            }
        }
    }
}

/// `K` and saturation from their definitions, over the box `[0, 4]^3`.
fn brute_saturation(monos: &[Vec<u32>], bins: &[(Vec<u32>, Vec<u32>)]) -> (LatticeK, bool) {
    let bound = vec![4u32; 3];
    let mut by_degree: BTreeMap<u32, Vec<Vec<u32>>> = BTreeMap::new();
    let graphs: Vec<DegreeGraph> = (0..=12).map(|d| DegreeGraph::new(3, monos, bins, d)).collect();
    for p in box_points(&bound) {
        let d: u32 = p.iter().sum();
        if !graphs[d as usize].contains_monomial(&p) {
            by_degree.entry(d).or_default().push(p);
        }
    }
    let diff = |a: &[u32], b: &[u32]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| i64::from(*x) - i64::from(*y)).collect() };
    let mut gens = Vec::new();
    for (d, t) in &by_degree {
        for a in t {
            for b in t {
                if a < b && graphs[*d as usize].contains_difference(a, b) {
                    gens.push(diff(a, b));
                }
            }
        }
    }
    let k = LatticeK::from_generators(3, &gens).unwrap();
    let saturated = by_degree.iter().all(|(d, t)| {
        t.iter().all(|a| t.iter().all(|b| !k.contains(&diff(a, b)) || graphs[*d as usize].contains_difference(a, b)))
    });
    (k, saturated)
}

#[test]
fn lattice_and_saturation_match_definitions() {
    let mut r = rng(32);
    let mut unsaturated = 0;
    for _ in 0..40 {
        let (monos, bins) = random_homogeneous(&mut r);
        let i = to_ideal(&monos, &bins);
        let bound = ev(&[4, 4, 4]);
        let (k, saturated) = brute_saturation(&monos, &bins);
        assert_eq!(lattice_k(&i, &bound).unwrap().lattice, k, "{monos:?} {bins:?}");
        let report = is_saturated(&i, &bound).unwrap();
        assert_eq!(report.saturated, saturated, "{monos:?} {bins:?}");
        if let Some((a, b)) = &report.witness {
            assert!(k.contains(&a.difference(b)));
            assert!(!i.groebner().unwrap().contains_difference(a, b));
        }
        unsaturated += usize::from(!saturated);
    }
    assert!(unsaturated > 0);
}

#[test]
fn x2_minus_xy_is_not_saturated() {
    let i = binomial_ideal(2, &[], &[(&[2, 0], &[1, 1])]);
    let b = ev(&[4, 4]);
    let s = is_saturated(&i, &b).unwrap();
    assert!(!s.saturated);
    assert_eq!(s.witness, Some((ev(&[1, 0]), ev(&[0, 1]))));
    assert_eq!(s.lattice.basis(), &[vec![1, -1]]);
}

#[test]
fn monomial_ideals_have_zero_lattice() {
    for gens in [vec![ev(&[2, 1])], vec![ev(&[1, 0, 0]), ev(&[0, 3, 1])]] {
        let m = MonomialIdeal::with_default_names(gens[0].len(), gens).unwrap();
        let i = BinomialIdeal::from_monomial_ideal(&m);
        let b = i.default_box().unwrap();
        assert!(lattice_k(&i, &b).unwrap().lattice.is_zero());
        assert!(is_saturated(&i, &b).unwrap().saturated);
        assert_eq!(monomial_part(&i, &b).unwrap().generators(), m.generators());
    }
}

#[test]
fn xy_and_x2_minus_y2_decomposes() {
    let i = binomial_ideal(2, &[&[1, 1]], &[(&[2, 0], &[0, 2])]);
    let b = ev(&[5, 5]);
    let s = is_saturated(&i, &b).unwrap();
    assert!(s.saturated);
    assert_eq!(s.lattice.basis(), &[vec![2, -2]]);
    assert!(property_ii_check(&i, &b).unwrap().holds);
    assert!(fiber_structure_check(&i, &b).unwrap().holds());
    let r = verify_primary_decomposition(&i, &b).unwrap();
    assert!(r.verified && r.primary_violations.is_empty());
    assert_eq!(r.components.len(), 1);
    assert_eq!(r.components[0].0, Face::empty());
}

#[test]
fn lattice_ideal_is_one_component() {
    // x - y with z free: one lattice component on the full face
    let i = binomial_ideal(3, &[], &[(&[1, 0, 0], &[0, 1, 0])]);
    let b = ev(&[3, 3, 3]);
    let r = verify_primary_decomposition(&i, &b).unwrap();
    assert!(r.verified);
    assert_eq!(r.components.len(), 1);
    assert_eq!(r.components[0].0, Face::full(3));
    assert_eq!(binomial_component(&i, Face::empty(), &b).unwrap().monomials(), &[ev(&[0, 0, 0])]);
}

#[test]
fn refused_without_property_ii() {
    let i = binomial_ideal(2, &[&[0, 2]], &[(&[2, 0], &[1, 1])]);
    assert!(matches!(verify_primary_decomposition(&i, &ev(&[4, 4])), Err(Error::Precondition(_))));
}

#[test]
fn box_shape_is_checked() {
    let i = binomial_ideal(2, &[], &[(&[1, 0], &[0, 1])]);
    assert!(matches!(is_saturated(&i, &ev(&[3])), Err(Error::DimensionMismatch { .. })));
}
