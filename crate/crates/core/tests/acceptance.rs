//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//! Every comparison is exact; the only tolerances are wall-clock limits.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use agraded::counterexample::{self, expected_standard_pairs};
use agraded::decomposition::{associated_primes, chain_check, components, is_primary_monomial, verify_decomposition};
use agraded::exponents::default_names;
use agraded::grading::{agraded_verify, quotient_group, standard_preimages, DegreeBox, FiniteAbelianGroup, GradingMap};
use agraded::groebner::{Element, TermOrder};
use agraded::saturated::{is_saturated, lattice_k, verify_primary_decomposition, BinomialIdeal, PureBinomial};
use agraded::standard_pairs::{compute_standard_pairs, intersect_pairs};
use agraded::toric::{initial_ideal, toric_groebner};
use agraded::{ExponentVector, Face, MonomialIdeal};
use common::{
    box_points, brute_standard_pairs, colon_associated_faces, corpus, degree_box, ev, in_ideal, is_primary_oracle,
    pair_points, random_order, random_pointed_matrix, raw_generators, rng,
};
use rand::Rng;

const CORPUS: usize = 200;
const RANDOM_GRADINGS: usize = 100;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mono(names: &[&str]) -> ExponentVector {
    let all = counterexample::variable_names();
    let mut a = ExponentVector::zeros(all.len());
    for n in names {
        let j = all.iter().position(|x| x == n).expect("known variable");
        a.set(j, a.get(j) + 1);
    }
    a
}

fn counterexample_end_to_end() -> Outcome {
    let i = counterexample::ideal();
    ensure(i.generators().len() == 100, || format!("{} generators", i.generators().len()))?;
    let b = compute_standard_pairs(&i).map_err(|e| e.to_string())?;
    ensure(b.pairs() == expected_standard_pairs().as_slice(), || "standard pairs differ from the transcribed list".into())?;
    let faces = associated_primes(&b);
    ensure(faces.len() == 5, || format!("{} associated primes", faces.len()))?;
    let chain = chain_check(&b);
    ensure(!chain.holds && chain.violations == vec![Face::empty()], || format!("chain violations {:?}", chain.violations))?;
    Ok(format!("{} pairs, {} faces, chain fails at the empty face only", b.len(), faces.len()))
}

fn agraded_certificate() -> Outcome {
    let i = counterexample::ideal();
    let a = counterexample::grading();
    let report = agraded_verify(&i, &a, &DegreeBox::upto(vec![6, 6, 6])).map_err(|e| e.to_string())?;
    ensure(report.degrees_checked == 343 && report.nonempty_fibers == 343, || {
        format!("{} degrees, {} nonempty", report.degrees_checked, report.nonempty_fibers)
    })?;
    ensure(report.passed, || format!("{} defects, first {:?}", report.defects.len(), report.defects.first()))?;
    let pre = standard_preimages(&i, &a, &[1, 1, 1]).map_err(|e| e.to_string())?;
    ensure(pre == vec![mono(&["f1", "f2", "f3"])], || format!("(1,1,1) has preimages {pre:?}"))?;
    Ok("343 degrees with one standard preimage each; (1,1,1) -> f1 f2 f3".into())
}

fn quotient_bijection() -> Outcome {
    let a = counterexample::grading();
    let q = quotient_group(&a, Face::from_members([0, 1, 2])).map_err(|e| e.to_string())?;
    let want = FiniteAbelianGroup { invariants: vec![2, 2, 2], free_rank: 0 };
    ensure(q.group == want, || format!("group {}", q.group))?;
    let b = compute_standard_pairs(&counterexample::ideal()).map_err(|e| e.to_string())?;
    let roots = b.layer(Face::from_members([0, 1, 2])).roots;
    let expected: BTreeSet<ExponentVector> = std::iter::once(mono(&[]))
        .chain((1..=7).map(|k| mono(&[format!("k{k}").as_str()])))
        .collect();
    ensure(roots.iter().cloned().collect::<BTreeSet<_>>() == expected, || format!("roots {roots:?}"))?;
    let classes: BTreeSet<Vec<i64>> =
        roots.iter().map(|r| q.residue(&a.apply(r).unwrap()).unwrap()).collect();
    ensure(classes.len() == 8, || format!("{} distinct classes", classes.len()))?;
    Ok(format!("{} with 8 roots in 8 distinct classes", q.group))
}

fn monomial_decomposition(ideals: &[MonomialIdeal]) -> Outcome {
    let mut components_seen = 0;
    for (k, i) in ideals.iter().enumerate() {
        let b = compute_standard_pairs(i).map_err(|e| e.to_string())?;
        let comps = components(&b).map_err(|e| e.to_string())?;
        let bound = ExponentVector::new(i.staircase_bounds().as_slice().iter().map(|d| d + 2).collect());
        ensure(verify_decomposition(i, &comps, &bound).map_err(|e| e.to_string())?, || format!("ideal {k}: intersection differs"))?;
        // the same check by scanning the box
        let gens = raw_generators(i);
        let comp_gens: Vec<Vec<Vec<u32>>> = comps.iter().map(|c| raw_generators(&c.ideal)).collect();
        for a in box_points(bound.as_slice()) {
            let meet = comp_gens.iter().all(|g| in_ideal(g, &a));
            ensure(in_ideal(&gens, &a) == meet, || format!("ideal {k}: box scan differs at {a:?}"))?;
        }
        for c in &comps {
            let primary = is_primary_monomial(&c.ideal).map_err(|e| e.to_string())?;
            ensure(primary && is_primary_oracle(&c.ideal), || format!("ideal {k}: component not primary"))?;
        }
        ensure(associated_primes(&b) == colon_associated_faces(i), || format!("ideal {k}: associated primes differ"))?;
        components_seen += comps.len();
    }
    Ok(format!("{} ideals, {components_seen} components", ideals.len()))
}

fn standard_pair_oracle(ideals: &[MonomialIdeal]) -> Outcome {
    let mut pairs = 0;
    for (k, i) in ideals.iter().enumerate() {
        let b = compute_standard_pairs(i).map_err(|e| e.to_string())?;
        ensure(b.pairs() == brute_standard_pairs(i).as_slice(), || format!("ideal {k}: {:?}", i.generators()))?;
        pairs += b.len();
    }
    Ok(format!("{} ideals, {pairs} pairs", ideals.len()))
}

fn pair_intersections(ideals: &[MonomialIdeal]) -> Outcome {
    let (mut checked, mut nonempty) = (0, 0);
    for (k, i) in ideals.iter().enumerate() {
        let b = compute_standard_pairs(i).map_err(|e| e.to_string())?;
        let bound: Vec<u32> = i.staircase_bounds().as_slice().iter().map(|d| d + 2).collect();
        let points: Vec<_> = b.pairs().iter().map(|p| pair_points(p, &bound)).collect();
        for (x, (p, pp)) in b.pairs().iter().zip(&points).enumerate() {
            for (q, qq) in b.pairs().iter().zip(&points).skip(x + 1) {
                checked += 1;
                let brute: BTreeSet<Vec<u32>> = pp.intersection(qq).cloned().collect();
                match intersect_pairs(p, q) {
                    None => ensure(brute.is_empty(), || format!("ideal {k}: missed intersection"))?,
                    Some(r) => {
                        nonempty += 1;
                        ensure(pair_points(&r, &bound) == brute, || format!("ideal {k}: wrong intersection"))?;
                        let strict = |f: Face| r.face != f && r.face.is_subset(f);
                        ensure(strict(p.face) && strict(q.face), || format!("ideal {k}: face not strictly smaller"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} pairs of pairs, {nonempty} nonempty"))
}

fn random_initial_ideals() -> Outcome {
    let mut r = rng(0x5eed_0007);
    let mut degrees = 0;
    for k in 0..RANDOM_GRADINGS {
        let a = random_pointed_matrix(&mut r);
        let (w, t) = random_order(&mut r, a.n());
        let order = TermOrder::new(w.clone(), t).map_err(|e| e.to_string())?;
        let g = toric_groebner(&a, &order).map_err(|e| e.to_string())?;
        let init = initial_ideal(&g);
        let report = agraded_verify(&init, &a, &degree_box(&a)).map_err(|e| e.to_string())?;
        ensure(report.passed, || format!("instance {k}: A = {:?}, weights {w:?} not A-graded", a.rows()))?;
        degrees += report.degrees_checked;
        let b = compute_standard_pairs(&init).map_err(|e| e.to_string())?;
        ensure(chain_check(&b).holds, || format!("instance {k}: A = {:?}, weights {w:?} breaks the chain property", a.rows()))?;
    }
    Ok(format!("{RANDOM_GRADINGS} gradings, {degrees} degrees checked"))
}

fn binomial(n: usize, monos: &[&[u32]], bins: &[(&[u32], &[u32])]) -> BinomialIdeal {
    BinomialIdeal::new(
        default_names(n),
        monos.iter().map(|m| ev(m)).collect(),
        bins.iter().map(|(a, b)| PureBinomial::new(ev(a), ev(b)).unwrap()).collect(),
    )
    .unwrap()
}

fn saturation_examples() -> Outcome {
    let i = binomial(2, &[], &[(&[2, 0], &[1, 1])]);
    let b = ev(&[4, 4]);
    let s = is_saturated(&i, &b).map_err(|e| e.to_string())?;
    ensure(!s.saturated && s.witness == Some((ev(&[1, 0]), ev(&[0, 1]))), || format!("(x^2 - x y): {s:?}"))?;
    ensure(s.lattice.basis() == [vec![1, -1]], || format!("K = {}", s.lattice))?;

    for m in [binomial(2, &[&[2, 1]], &[]), binomial(3, &[&[1, 0, 2], &[0, 3, 0]], &[])] {
        let bound = m.default_box().map_err(|e| e.to_string())?;
        let k = lattice_k(&m, &bound).map_err(|e| e.to_string())?;
        ensure(k.lattice.is_zero(), || format!("{m}: K = {}", k.lattice))?;
    }

    let i = binomial(2, &[&[1, 1]], &[(&[2, 0], &[0, 2])]);
    let b = ev(&[5, 5]);
    let s = is_saturated(&i, &b).map_err(|e| e.to_string())?;
    ensure(s.saturated && s.lattice.basis() == [vec![2, -2]], || format!("(x y, x^2 - y^2): {s:?}"))?;
    let d = verify_primary_decomposition(&i, &b).map_err(|e| e.to_string())?;
    ensure(d.verified && d.primary_violations.is_empty(), || format!("decomposition: {d:?}"))?;
    Ok("x^2 - x y unsaturated with witness x - y, K = Z(1,-1); monomial K = 0; (x y, x^2 - y^2) saturated, K = Z(2,-2), decomposition verified on (5,5)".into())
}

fn toric_sanity() -> Outcome {
    let a = GradingMap::from_columns(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).map_err(|e| e.to_string())?;
    let order = TermOrder::new(vec![1, 1, 1], vec![1, 0, 2]).map_err(|e| e.to_string())?;
    let g = toric_groebner(&a, &order).map_err(|e| e.to_string())?;
    let want = [Element::Difference(ev(&[0, 2, 0]), ev(&[1, 0, 1]))];
    ensure(g.elements() == want, || format!("basis {:?}", g.elements()))?;
    let mut r = rng(0x5eed_0009);
    let mut count = 0;
    while count < 50 {
        let u = ExponentVector::new((0..3).map(|_| r.gen_range(0..=6)).collect());
        let v = ExponentVector::new((0..3).map(|_| r.gen_range(0..=6)).collect());
        let (du, dv) = (a.apply(&u).unwrap(), a.apply(&v).unwrap());
        if du != dv || du[0] > 6 {
            continue;
        }
        count += 1;
        if let Some(e) = Element::difference(u.clone(), v.clone()) {
            ensure(g.normal_form(&e).is_none(), || format!("{u} - {v} does not reduce to zero"))?;
        }
    }
    Ok("{y^2 - x z}; 50 kernel binomials of degree <= 6 reduce to zero".into())
}

fn run(number: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let elapsed = start.elapsed();
    let outcome = match (outcome, limit) {
        (Ok(_), Some(l)) if elapsed > l => Err(format!("took {:.2?}, limit {:.0?}", elapsed, l)),
        (o, _) => o,
    };
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    println!("{tag} [{number}] {name} ({:.2} s): {detail}", elapsed.as_secs_f64());
    outcome.is_ok()
}

fn main() -> ExitCode {
    let ideals = corpus(CORPUS);
    let min = |m: u64| Some(Duration::from_secs(60 * m));
    let results = [
        run(1, "counterexample end-to-end", Some(Duration::from_secs(60)), counterexample_end_to_end),
        run(2, "A-graded certificate on [0,6]^3", None, agraded_certificate),
        run(3, "quotient (Z/2)^3 and root bijection", None, quotient_bijection),
        run(4, "monomial primary decomposition", min(5), || monomial_decomposition(&ideals)),
        run(5, "standard pairs vs brute force", None, || standard_pair_oracle(&ideals)),
        run(6, "intersections of standard pairs", None, || pair_intersections(&ideals)),
        run(7, "initial ideals of random toric ideals", min(10), random_initial_ideals),
        run(8, "saturation examples", None, saturation_examples),
        run(9, "toric sanity", Some(Duration::from_secs(10)), toric_sanity),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
