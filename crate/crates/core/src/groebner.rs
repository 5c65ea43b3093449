//! Buchberger's algorithm for ideals generated by monomials and pure
//! differences `x^a - x^b`.
//!
//! Such ideals stay inside the class under every step: an S-pair of two
//! differences is a difference, an S-pair against a monomial is a monomial,
//! and reducing a monomial by either kind yields a monomial or zero. So the
//! normal form of `x^a - x^b` is just `NF(x^a) - NF(x^b)`, and no coefficient
//! arithmetic is needed.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exponents::{minimalize, ExponentVector, MonomialIdeal};

/// Weight order with a lexicographic fallback.
///
/// Monomials are compared by each weight row in turn; ties are broken
/// lexicographically, reading variables in `tiebreak` order. The public
/// constructor takes a single nonnegative weight; extra rows are used
/// internally for saturation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrder {
    rows: Vec<Vec<i64>>,
    tiebreak: Vec<usize>,
}

impl TermOrder {
    pub fn new(weight: Vec<i64>, tiebreak: Vec<usize>) -> Result<Self> {
        if weight.len() != tiebreak.len() {
            return Err(Error::DimensionMismatch { expected: tiebreak.len(), found: weight.len() });
        }
        if weight.iter().any(|&w| w < 0) {
            return Err(Error::invalid("term order weights must be nonnegative"));
        }
        check_permutation(&tiebreak)?;
        Ok(TermOrder { rows: vec![weight], tiebreak })
    }

    /// Plain lexicographic order with `x_1 > x_2 > … > x_n`.
    pub fn lex(n: usize) -> Self {
        TermOrder { rows: Vec::new(), tiebreak: (0..n).collect() }
    }

    /// Total degree, then lexicographic.
    pub fn graded_lex(n: usize) -> Self {
        TermOrder { rows: vec![vec![1; n]], tiebreak: (0..n).collect() }
    }

    /// `grading` first, then fewer powers of `x_var` is larger, then `tiebreak`.
    /// On ideals homogeneous for a positive grading this makes `x_var` the
    /// cheapest variable.
    pub(crate) fn cheapest(grading: &[i64], var: usize, tiebreak: Vec<usize>) -> Self {
        let mut minus = vec![0; grading.len()];
        minus[var] = -1;
        TermOrder { rows: vec![grading.to_vec(), minus], tiebreak }
    }

    pub fn n(&self) -> usize {
        self.tiebreak.len()
    }

    /// The leading weight row, zero when the order is pure lex.
    pub fn weight(&self) -> Vec<i64> {
        self.rows.first().cloned().unwrap_or_else(|| vec![0; self.n()])
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        for row in &self.rows {
            let wa: i64 = row.iter().zip(a.as_slice()).map(|(w, &e)| w * i64::from(e)).sum();
            let wb: i64 = row.iter().zip(b.as_slice()).map(|(w, &e)| w * i64::from(e)).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        for &i in &self.tiebreak {
            match a.get(i).cmp(&b.get(i)) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

fn check_permutation(p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &i in p {
        if i >= p.len() || seen[i] {
            return Err(Error::invalid(format!("tiebreak {p:?} is not a permutation of 0..{}", p.len())));
        }
        seen[i] = true;
    }
    Ok(())
}

/// A monomial or a pure difference. Within a Gröbner basis the first
/// exponent of a difference is its leading term.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Monomial(ExponentVector),
    Difference(ExponentVector, ExponentVector),
}

impl Element {
    /// `x^a - x^b`, or `None` when it is zero.
    pub fn difference(a: ExponentVector, b: ExponentVector) -> Option<Element> {
        (a != b).then_some(Element::Difference(a, b))
    }

    pub fn n(&self) -> usize {
        match self {
            Element::Monomial(m) => m.len(),
            Element::Difference(a, _) => a.len(),
        }
    }

    /// The leading term under the orientation already applied.
    pub fn lead(&self) -> &ExponentVector {
        match self {
            Element::Monomial(m) | Element::Difference(m, _) => m,
        }
    }

    pub fn tail(&self) -> Option<&ExponentVector> {
        match self {
            Element::Monomial(_) => None,
            Element::Difference(_, b) => Some(b),
        }
    }

    /// Puts the larger term first.
    pub fn oriented(self, order: &TermOrder) -> Element {
        match self {
            Element::Difference(a, b) if order.cmp(&a, &b) == Ordering::Less => Element::Difference(b, a),
            other => other,
        }
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> ElementDisplay<'a> {
        ElementDisplay { element: self, names }
    }
}

pub struct ElementDisplay<'a> {
    element: &'a Element,
    names: &'a [String],
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.element {
            Element::Monomial(m) => write!(f, "{}", m.display_with(self.names)),
            Element::Difference(a, b) => write!(f, "{} - {}", a.display_with(self.names), b.display_with(self.names)),
        }
    }
}

/// Reduction context: a list of oriented elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    names: Vec<String>,
    order: TermOrder,
    elements: Vec<Element>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// The same basis over renamed variables.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.names.len() {
            return Err(Error::DimensionMismatch { expected: self.names.len(), found: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Normal form of a monomial; `None` means it lies in the ideal.
    pub fn reduce_monomial(&self, u: &ExponentVector) -> Option<ExponentVector> {
        self.reduce_monomial_by(u, &mut |_| 0)
    }

    /// Normal form of a monomial where `pick(k)` chooses which of the `k`
    /// applicable reducers to use at each step. A Gröbner basis gives the
    /// same answer for every choice.
    pub fn reduce_monomial_by(&self, u: &ExponentVector, pick: &mut dyn FnMut(usize) -> usize) -> Option<ExponentVector> {
        reduce_monomial(&self.elements, u, pick)
    }

    /// Normal form of an element, `None` when it reduces to zero.
    pub fn normal_form(&self, e: &Element) -> Option<Element> {
        self.normal_form_by(e, &mut |_| 0)
    }

    pub fn normal_form_by(&self, e: &Element, pick: &mut dyn FnMut(usize) -> usize) -> Option<Element> {
        let out = match e {
            Element::Monomial(m) => self.reduce_monomial_by(m, pick).map(Element::Monomial),
            Element::Difference(a, b) => {
                match (self.reduce_monomial_by(a, pick), self.reduce_monomial_by(b, pick)) {
                    (None, None) => None,
                    (Some(m), None) | (None, Some(m)) => Some(Element::Monomial(m)),
                    (Some(p), Some(q)) => Element::difference(p, q),
                }
            }
        };
        out.map(|x| x.oriented(&self.order))
    }

    /// Membership of `x^a - x^b`.
    pub fn contains_difference(&self, a: &ExponentVector, b: &ExponentVector) -> bool {
        self.reduce_monomial(a) == self.reduce_monomial(b)
    }

    /// Membership of `x^a`.
    pub fn contains_monomial(&self, a: &ExponentVector) -> bool {
        self.reduce_monomial(a).is_none()
    }

    /// Buchberger's criterion: every S-pair reduces to zero.
    pub fn s_pairs_reduce(&self) -> bool {
        let g = &self.elements;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| s_pair(&g[i], &g[j]).is_none_or(|s| self.normal_form(&s).is_none())))
    }

    /// The ideal of leading terms.
    pub fn initial_ideal(&self) -> MonomialIdeal {
        let leads = minimalize(self.elements.iter().map(|e| e.lead().clone()).collect()).expect("consistent lengths");
        MonomialIdeal::new(self.names.clone(), leads).expect("consistent lengths")
    }

    /// The monomial elements: generators of the largest monomial ideal
    /// contained in the ideal, once the basis is reduced.
    pub fn monomials(&self) -> Vec<ExponentVector> {
        self.elements.iter().filter(|e| matches!(e, Element::Monomial(_))).map(|e| e.lead().clone()).collect()
    }

    /// Largest exponent of any term, per variable.
    pub fn exponent_bounds(&self) -> ExponentVector {
        let mut out = ExponentVector::zeros(self.n());
        for e in &self.elements {
            out = out.lcm(e.lead());
            if let Some(t) = e.tail() {
                out = out.lcm(t);
            }
        }
        out
    }
}

fn reduce_monomial(g: &[Element], u: &ExponentVector, pick: &mut dyn FnMut(usize) -> usize) -> Option<ExponentVector> {
    let mut u = u.clone();
    loop {
        let reducers: Vec<&Element> = g.iter().filter(|e| e.lead().divides(&u)).collect();
        if reducers.is_empty() {
            return Some(u);
        }
        let k = pick(reducers.len()) % reducers.len();
        match reducers[k] {
            Element::Monomial(_) => return None,
            Element::Difference(a, b) => {
                let rest = u.checked_sub(a).expect("lead divides");
                u = rest.checked_add(b).expect("exponent overflow in reduction");
            }
        }
    }
}

fn s_pair(p: &Element, q: &Element) -> Option<Element> {
    let (lp, lq) = (p.lead(), q.lead());
    if lp.gcd(lq).is_zero() {
        // coprime leading terms: the S-pair reduces to zero
        return None;
    }
    let l = lp.lcm(lq);
    let shift = |e: &Element| -> Option<ExponentVector> {
        e.tail().map(|t| l.checked_sub(e.lead()).expect("lcm").checked_add(t).expect("exponent overflow"))
    };
    match (shift(p), shift(q)) {
        (None, None) => None,
        (Some(m), None) | (None, Some(m)) => Some(Element::Monomial(m)),
        (Some(a), Some(b)) => Element::difference(a, b),
    }
}

fn check_element(e: &Element, n: usize) -> Result<()> {
    let lens: Vec<usize> = match e {
        Element::Monomial(m) => vec![m.len()],
        Element::Difference(a, b) => vec![a.len(), b.len()],
    };
    match lens.into_iter().find(|&l| l != n) {
        Some(found) => Err(Error::DimensionMismatch { expected: n, found }),
        None => Ok(()),
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

/// Basis under construction. Elements whose leading term became divisible by
/// a newer one stay available for reduction but spawn no new pairs.
struct Builder<'a> {
    order: &'a TermOrder,
    elements: Vec<Element>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl Builder<'_> {
    fn normal_form(&self, e: &Element) -> Option<Element> {
        let reduce = |u: &ExponentVector| reduce_monomial(&self.elements, u, &mut |_| 0);
        let out = match e {
            Element::Monomial(m) => reduce(m).map(Element::Monomial),
            Element::Difference(a, b) => match (reduce(a), reduce(b)) {
                (None, None) => None,
                (Some(m), None) | (None, Some(m)) => Some(Element::Monomial(m)),
                (Some(p), Some(q)) => Element::difference(p, q),
            },
        };
        out.map(|x| x.oriented(self.order))
    }

    /// Gebauer–Möller update for a new element `h`.
    fn insert(&mut self, h: Element) {
        let k = self.elements.len();
        let lh = h.lead().clone();

        // old pairs whose lcm is a proper multiple of both new lcms are redundant
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && self.elements[p.i].lead().lcm(&lh) != p.lcm
                && self.elements[p.j].lead().lcm(&lh) != p.lcm)
        });

        let mut fresh: Vec<(Pair, bool)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| {
                let li = self.elements[i].lead();
                (Pair { i, j: k, lcm: li.lcm(&lh) }, li.gcd(&lh).is_zero())
            })
            .collect();
        // drop pairs whose lcm is a proper multiple of another new lcm
        let lcms: Vec<ExponentVector> = fresh.iter().map(|(p, _)| p.lcm.clone()).collect();
        fresh.retain(|(p, _)| !lcms.iter().any(|l| *l != p.lcm && l.divides(&p.lcm)));
        // one pair per lcm, none at all when some pair with that lcm is coprime
        let mut kept: Vec<(Pair, bool)> = Vec::new();
        for (p, coprime) in fresh {
            match kept.iter_mut().find(|(q, _)| q.lcm == p.lcm) {
                Some((_, c)) => *c |= coprime,
                None => kept.push((p, coprime)),
            }
        }
        self.pairs.extend(kept.into_iter().filter(|(_, c)| !c).map(|(p, _)| p));

        for i in 0..k {
            if self.active[i] && lh.divides(self.elements[i].lead()) {
                self.active[i] = false;
            }
        }
        self.elements.push(h);
        self.active.push(true);
    }

    /// Removes and returns the pair with the smallest lcm.
    fn next_pair(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| self.order.cmp(&self.pairs[a].lcm, &self.pairs[b].lcm))?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Pairs are treated by increasing lcm, and the Gebauer–Möller criteria
/// discard pairs whose S-polynomials are known to reduce to zero.
pub fn buchberger(names: Vec<String>, gens: Vec<Element>, order: &TermOrder) -> Result<GroebnerBasis> {
    let n = names.len();
    if order.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: order.n() });
    }
    for e in &gens {
        check_element(e, n)?;
    }
    let mut pending: Vec<Element> = gens.into_iter().map(|e| e.oriented(order)).collect();
    pending.sort_by(|a, b| order.cmp(b.lead(), a.lead()));
    let mut b = Builder { order, elements: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    loop {
        let next = if let Some(e) = pending.pop() {
            Some(e)
        } else if let Some(p) = b.next_pair() {
            s_pair(&b.elements[p.i], &b.elements[p.j])
        } else {
            break;
        };
        if let Some(h) = next.and_then(|e| b.normal_form(&e)) {
            b.insert(h);
        }
    }
    let g = b.elements.into_iter().zip(b.active).filter(|(_, a)| *a).map(|(e, _)| e).collect();
    Ok(GroebnerBasis { names, order: order.clone(), elements: interreduce(g, order), reduced: true })
}

fn interreduce(g: Vec<Element>, order: &TermOrder) -> Vec<Element> {
    // keep one element per minimal leading term; prefer monomials
    let mut g = g;
    g.sort_by(|a, b| {
        order.cmp(a.lead(), b.lead()).then_with(|| matches!(b, Element::Monomial(_)).cmp(&matches!(a, Element::Monomial(_))))
    });
    let mut kept: Vec<Element> = Vec::new();
    for e in g {
        if !kept.iter().any(|k| k.lead().divides(e.lead())) {
            kept.push(e);
        }
    }
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let Element::Difference(lead, tail) = kept[i].clone() else { continue };
            let others: Vec<Element> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, e)| e.clone()).collect();
            let new = match reduce_monomial(&others, &tail, &mut |_| 0) {
                None => Element::Monomial(lead),
                Some(t) => Element::Difference(lead, t),
            };
            if new != kept[i] {
                kept[i] = new;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::default_names;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn diff(a: &[u32], b: &[u32]) -> Element {
        Element::difference(ev(a), ev(b)).unwrap()
    }

    #[test]
    fn order_comparisons() {
        let o = TermOrder::new(vec![1, 1, 1], vec![1, 0, 2]).unwrap();
        assert_eq!(o.cmp(&ev(&[0, 2, 0]), &ev(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[1, 0, 0]), &ev(&[0, 0, 2])), Ordering::Less);
        assert!(TermOrder::new(vec![1, -1], vec![0, 1]).is_err());
        assert!(TermOrder::new(vec![1, 1], vec![0, 0]).is_err());
    }

    #[test]
    fn twisted_cubic_relation() {
        let o = TermOrder::new(vec![1, 1, 1], vec![1, 0, 2]).unwrap();
        let g = buchberger(default_names(3), vec![diff(&[1, 0, 1], &[0, 2, 0])], &o).unwrap();
        assert_eq!(g.elements(), &[diff(&[0, 2, 0], &[1, 0, 1])]);
        assert_eq!(g.reduce_monomial(&ev(&[0, 4, 0])), Some(ev(&[2, 0, 2])));
        assert!(g.s_pairs_reduce());
    }

    #[test]
    fn x_minus_y_is_not_in_x2_minus_xy() {
        let o = TermOrder::lex(2);
        let g = buchberger(default_names(2), vec![diff(&[2, 0], &[1, 1])], &o).unwrap();
        assert_eq!(g.normal_form(&diff(&[1, 0], &[0, 1])), Some(diff(&[1, 0], &[0, 1])));
        let g = buchberger(default_names(2), vec![diff(&[1, 0], &[0, 1])], &o).unwrap();
        assert_eq!(g.normal_form(&diff(&[1, 0], &[0, 1])), None);
    }

    #[test]
    fn monomials_appear_from_cancellation() {
        // (xy, x^2 - y^2) contains x^3 and y^3
        let o = TermOrder::graded_lex(2);
        let g = buchberger(default_names(2), vec![Element::Monomial(ev(&[1, 1])), diff(&[2, 0], &[0, 2])], &o).unwrap();
        assert!(g.contains_monomial(&ev(&[3, 0])));
        assert!(g.contains_monomial(&ev(&[0, 3])));
        assert!(!g.contains_monomial(&ev(&[2, 0])));
        assert!(g.contains_difference(&ev(&[2, 0]), &ev(&[0, 2])));
        assert_eq!(g.monomials(), vec![ev(&[0, 3]), ev(&[1, 1])]);
        assert!(g.s_pairs_reduce());
    }

    #[test]
    fn reduced_basis_is_order_dependent_but_ideal_is_not() {
        let gens = vec![diff(&[2, 0, 0], &[0, 1, 0]), diff(&[0, 2, 0], &[0, 0, 1])];
        let a = buchberger(default_names(3), gens.clone(), &TermOrder::lex(3)).unwrap();
        let b = buchberger(default_names(3), gens, &TermOrder::graded_lex(3)).unwrap();
        for (p, q) in [(ev(&[4, 0, 0]), ev(&[0, 0, 1])), (ev(&[2, 1, 0]), ev(&[0, 0, 1]))] {
            assert_eq!(a.contains_difference(&p, &q), b.contains_difference(&p, &q));
        }
        assert!(a.contains_difference(&ev(&[4, 0, 0]), &ev(&[0, 0, 1])));
    }
}
