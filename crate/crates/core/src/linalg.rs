//! Exact integer and rational linear algebra: Hermite and Smith normal forms,
//! integer kernels, and Fourier–Motzkin elimination with Farkas multipliers.
//! Everything runs over arbitrary-precision integers.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from equal-length rows; `cols` is needed for the empty case.
    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[target] += k * row[source]`
    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = k * &self[(source, j)];
            self[(target, j)] += delta;
        }
    }

    /// `col[target] += k * col[source]`
    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = k * &self[(i, source)];
            self[(i, target)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    fn is_zero_row(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
///
/// Returns the nonzero rows in echelon form: pivots positive, strictly
/// increasing in column, and entries above each pivot reduced into
/// `[0, pivot)`. The result depends only on the lattice.
pub fn hermite_rows(m: &IntMatrix) -> IntMatrix {
    let (h, _) = hermite_with_transform(m);
    let rank = (0..h.rows).take_while(|&i| !h.is_zero_row(i)).count();
    let mut out = IntMatrix::zeros(rank, h.cols);
    for i in 0..rank {
        for j in 0..h.cols {
            out[(i, j)] = h[(i, j)].clone();
        }
    }
    out
}

/// Hermite form `H = U·M` with `U` unimodular; zero rows are moved to the bottom.
pub fn hermite_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below pivot_row
            let best = (pivot_row..h.rows)
                .filter(|&i| !h[(i, col)].is_zero())
                .min_by(|&a, &b| h[(a, col)].abs().cmp(&h[(b, col)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let mut clean = true;
            for i in pivot_row + 1..h.rows {
                if h[(i, col)].is_zero() {
                    continue;
                }
                let q = -(&h[(i, col)] / &h[(pivot_row, col)]);
                h.add_row_multiple(i, pivot_row, &q);
                u.add_row_multiple(i, pivot_row, &q);
                if !h[(i, col)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        let p = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = -h[(i, col)].div_floor(&p);
            h.add_row_multiple(i, pivot_row, &q);
            u.add_row_multiple(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<i64>], cols: usize) -> usize {
    hermite_rows(&IntMatrix::from_rows(rows, cols)).rows()
}

/// A lattice basis of `{v ∈ Z^n : M v = 0}` in Hermite normal form.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let n = m.cols;
    // row-reduce Mᵀ while recording the unimodular transform; rows that end up
    // zero record kernel vectors, and together they span the whole kernel
    let (h, u) = hermite_with_transform(&m.transpose());
    let rank = (0..h.rows).take_while(|&i| !h.is_zero_row(i)).count();
    let mut k = IntMatrix::zeros(n - rank, n);
    for (out, i) in (rank..n).enumerate() {
        for j in 0..n {
            k[(out, j)] = u[(i, j)].clone();
        }
    }
    hermite_rows(&k)
}

/// Coordinates of `w` in a Hermite basis (rows of `basis`), or `None` when
/// `w` lies outside the lattice.
pub fn lattice_coordinates(basis: &IntMatrix, w: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(basis.cols, w.len(), "length mismatch");
    let mut rest = w.to_vec();
    let mut coords = Vec::with_capacity(basis.rows);
    for i in 0..basis.rows {
        let pivot_col = (0..basis.cols).find(|&j| !basis[(i, j)].is_zero()).expect("basis rows are nonzero");
        let (q, r) = rest[pivot_col].div_rem(&basis[(i, pivot_col)]);
        if !r.is_zero() {
            return None;
        }
        for j in 0..basis.cols {
            rest[j] -= &q * &basis[(i, j)];
        }
        coords.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coords)
}

/// Smith normal form `U·M·V = D` with `U`, `V` unimodular and the nonzero
/// diagonal entries positive, each dividing the next.
#[derive(Debug, Clone)]
pub struct Smith {
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub d: IntMatrix,
    pub diagonal: Vec<BigInt>,
}

pub fn smith(m: &IntMatrix) -> Smith {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return Smith { u, v, d, diagonal };
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);
            let mut clean = true;
            for i in t + 1..rows {
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        diagonal.push(d[(t, t)].clone());
    }
    Smith { u, v, d, diagonal }
}

/// `coeffs · x >= rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<BigRational>,
    pub rhs: BigRational,
}

impl Inequality {
    pub fn from_ints(coeffs: &[i64], rhs: i64) -> Self {
        Inequality {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            rhs: BigRational::from_integer(rhs.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// A point satisfying every inequality.
    Feasible(Vec<BigRational>),
    /// Nonnegative multipliers `λ` with `Σ λ_i coeffs_i = 0` and `Σ λ_i rhs_i > 0`.
    Infeasible(Vec<BigRational>),
}

#[derive(Clone)]
struct Derived {
    ineq: Inequality,
    multipliers: Vec<BigRational>,
}

/// Decides a system of inequalities by Fourier–Motzkin elimination.
///
/// Variables are eliminated from the last to the first; each stage is kept
/// for back-substitution. Parallel constraints are merged, keeping the
/// tightest. Infeasibility comes with Farkas multipliers.
pub fn fourier_motzkin(dim: usize, system: &[Inequality]) -> Feasibility {
    let m = system.len();
    let mut current: Vec<Derived> = system
        .iter()
        .enumerate()
        .map(|(i, ineq)| {
            assert_eq!(ineq.coeffs.len(), dim, "inequality length mismatch");
            let mut multipliers = vec![BigRational::zero(); m];
            multipliers[i] = BigRational::one();
            Derived { ineq: ineq.clone(), multipliers }
        })
        .collect();

    // stages[k] holds constraints involving only variables 0..=k
    let mut stages: Vec<Vec<Inequality>> = vec![Vec::new(); dim];
    for k in (0..dim).rev() {
        current = prune(current);
        if let Some(bad) = contradiction(&current) {
            return Feasibility::Infeasible(bad);
        }
        stages[k] = current.iter().map(|c| c.ineq.clone()).collect();
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in current {
            let s = c.ineq.coeffs[k].clone();
            if s.is_positive() {
                pos.push(c);
            } else if s.is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for p in &pos {
            for q in &neg {
                let a = -q.ineq.coeffs[k].clone();
                let b = p.ineq.coeffs[k].clone();
                let coeffs = p.ineq.coeffs.iter().zip(&q.ineq.coeffs).map(|(x, y)| x * &a + y * &b).collect();
                let rhs = &p.ineq.rhs * &a + &q.ineq.rhs * &b;
                let multipliers = p.multipliers.iter().zip(&q.multipliers).map(|(x, y)| x * &a + y * &b).collect();
                rest.push(Derived { ineq: Inequality { coeffs, rhs }, multipliers });
            }
        }
        current = rest;
    }
    current = prune(current);
    if let Some(bad) = contradiction(&current) {
        return Feasibility::Infeasible(bad);
    }

    let mut x: Vec<BigRational> = Vec::with_capacity(dim);
    for (k, stage) in stages.iter().enumerate() {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for ineq in stage {
            let a = &ineq.coeffs[k];
            if a.is_zero() {
                continue;
            }
            let known: BigRational = ineq.coeffs[..k].iter().zip(&x).map(|(c, v)| c * v).sum();
            let bound = (&ineq.rhs - known) / a;
            if a.is_positive() {
                lo = Some(lo.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                hi = Some(hi.map_or(bound.clone(), |h| h.min(bound)));
            }
        }
        let value = match (lo, hi) {
            (Some(l), Some(h)) => {
                let c = l.ceil();
                if c <= h {
                    c
                } else {
                    l
                }
            }
            (Some(l), None) => l.ceil(),
            (None, Some(h)) => h.floor(),
            (None, None) => BigRational::zero(),
        };
        x.push(value);
    }
    Feasibility::Feasible(x)
}

fn contradiction(cs: &[Derived]) -> Option<Vec<BigRational>> {
    cs.iter()
        .find(|c| c.ineq.coeffs.iter().all(Zero::is_zero) && c.ineq.rhs.is_positive())
        .map(|c| c.multipliers.clone())
}

fn prune(cs: Vec<Derived>) -> Vec<Derived> {
    let mut out: Vec<Derived> = Vec::with_capacity(cs.len());
    for mut c in cs {
        let lead = c.ineq.coeffs.iter().find(|x| !x.is_zero()).map(|x| x.abs());
        match lead {
            None => {
                // 0 >= rhs: drop when trivially true, keep when contradictory
                if !c.ineq.rhs.is_positive() {
                    continue;
                }
            }
            Some(s) => {
                for x in c.ineq.coeffs.iter_mut() {
                    *x /= &s;
                }
                c.ineq.rhs /= &s;
                for x in c.multipliers.iter_mut() {
                    *x /= &s;
                }
            }
        }
        if let Some(existing) = out.iter_mut().find(|e| e.ineq.coeffs == c.ineq.coeffs) {
            if c.ineq.rhs > existing.ineq.rhs {
                *existing = c;
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// Smallest positive integer multiple of a rational vector.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.iter().map(|x| x / &g).collect()
    }
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
