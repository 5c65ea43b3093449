//! The toric ideal `J_A = (x^a - x^b | A a = A b)` and its initial ideals.
//!
//! Starting from the binomials of a lattice basis of `ker A`, the ideal is
//! saturated by one variable at a time: under an order that makes `x_i` the
//! cheapest variable, dividing every basis element by its largest common
//! power of `x_i` yields generators of `J : x_i^∞`. After all variables the
//! result is `J_A`, and a last run gives the reduced basis for the requested
//! order. Every initial ideal obtained this way is a coherent A-graded
//! monomial ideal.

use crate::error::Result;
use crate::exponents::{default_names, ExponentVector, MonomialIdeal};
use crate::grading::GradingMap;
use crate::groebner::{buchberger, Element, GroebnerBasis, TermOrder};
use crate::linalg::{integer_kernel, to_i64_vec};

/// A lattice basis of `ker A ⊆ Z^n` in Hermite normal form.
pub fn kernel_basis(map: &GradingMap) -> Result<Vec<Vec<i64>>> {
    let k = integer_kernel(&map.matrix());
    (0..k.rows()).map(|i| to_i64_vec(k.row(i))).collect()
}

/// `x^{v+} - x^{v-}`.
pub fn kernel_binomial(v: &[i64]) -> Option<Element> {
    let plus = ExponentVector::new(v.iter().map(|&x| x.max(0) as u32).collect());
    let minus = ExponentVector::new(v.iter().map(|&x| (-x).max(0) as u32).collect());
    Element::difference(plus, minus)
}

fn divide_out(e: Element, var: usize) -> Element {
    match e {
        Element::Difference(a, b) => {
            let k = a.get(var).min(b.get(var));
            let (mut a, mut b) = (a, b);
            a.set(var, a.get(var) - k);
            b.set(var, b.get(var) - k);
            Element::Difference(a, b)
        }
        other => other,
    }
}

/// Reduced Gröbner basis of `J_A` for `order`, over the variables `x1..xn`.
pub fn toric_groebner(map: &GradingMap, order: &TermOrder) -> Result<GroebnerBasis> {
    let n = map.n();
    let grading = map.positive_weights()?;
    let names = default_names(n);
    let mut gens: Vec<Element> = kernel_basis(map)?.iter().filter_map(|v| kernel_binomial(v)).collect();
    for var in 0..n {
        let cheap = TermOrder::cheapest(&grading, var, (0..n).collect());
        let g = buchberger(names.clone(), gens, &cheap)?;
        gens = g.elements().iter().cloned().map(|e| divide_out(e, var)).collect();
    }
    buchberger(names, gens, order)
}

/// The leading-term ideal of a basis.
pub fn initial_ideal(g: &GroebnerBasis) -> MonomialIdeal {
    g.initial_ideal()
}
