//! Ground truth: symmetric functions realized as explicit polynomials in a
//! fixed number of variables, built straight from the combinatorial
//! definitions of each basis.
//!
//! Nothing here goes through the power-sum machinery of [`crate::symfunc`]
//! except [`realize_symfunc`], which is the side being checked.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num::{BigInt, One, Zero};

use crate::basis::{basis_element, BasisId};
use crate::partition::{compositions_of, partitions_of, Partition};
use crate::scalar::Scalar;
use crate::symfunc::SymFunc;

/// `Σ c_α x^α` in `v` variables, no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: usize) -> Self {
        MultiPoly::monomial(vec![0; vars], Scalar::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Scalar {
        self.terms
            .get(exponents)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        assert_eq!(exponents.len(), self.vars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(exponents.clone())
            .or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn add_scaled(&mut self, other: &MultiPoly, c: &Scalar) {
        for (e, d) in &other.terms {
            self.add_term(e.clone(), d * c);
        }
    }

    /// Swaps variables `i` and `j`.
    pub fn transpose(&self, i: usize, j: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, c.clone());
        }
        out
    }

    /// The first exponent vector at which `self` and `other` differ, with
    /// both coefficients.
    pub fn first_difference(&self, other: &MultiPoly) -> Option<(Vec<u32>, Scalar, Scalar)> {
        let keys: std::collections::BTreeSet<&Vec<u32>> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|e| {
            let (a, b) = (self.coefficient(e), other.coefficient(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.vars, rhs.vars, "variable counts differ");
        let mut out = MultiPoly::zero(self.vars);
        for (e, c) in &self.terms {
            for (g, d) in &rhs.terms {
                let sum = e.iter().zip(g).map(|(a, b)| a + b).collect();
                out.add_term(sum, c * d);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{p}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}

fn unit_sum<I: IntoIterator<Item = Vec<u32>>>(vars: usize, exps: I) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for e in exps {
        out.add_term(e, Scalar::one());
    }
    out
}

fn power_sum(n: u32, v: usize) -> MultiPoly {
    unit_sum(
        v,
        (0..v).map(|i| {
            let mut e = vec![0; v];
            e[i] = n;
            e
        }),
    )
}

fn complete(n: u32, v: usize) -> MultiPoly {
    unit_sum(v, compositions_of(n, v).map(|c| c.entries().to_vec()))
}

fn elementary(n: u32, v: usize) -> MultiPoly {
    unit_sum(
        v,
        compositions_of(n, v)
            .filter(|c| c.entries().iter().all(|&x| x <= 1))
            .map(|c| c.entries().to_vec()),
    )
}

fn product<F: Fn(u32) -> MultiPoly>(lambda: &Partition, v: usize, factor: F) -> MultiPoly {
    lambda
        .parts()
        .iter()
        .fold(MultiPoly::one(v), |acc, &p| &acc * &factor(p))
}

/// Sum of the distinct rearrangements of `λ` padded to `v` entries.
fn orbit_sum(lambda: &Partition, v: usize) -> MultiPoly {
    if lambda.len() > v {
        return MultiPoly::zero(v);
    }
    let mut exps: Vec<u32> = lambda.padded(v).into_iter().map(|x| x as u32).collect();
    exps.sort_unstable();
    let mut out = MultiPoly::zero(v);
    loop {
        out.add_term(exps.clone(), Scalar::one());
        if !next_permutation(&mut exps) {
            break;
        }
    }
    out
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Sum of `x^T` over semistandard tableaux `T` of shape `λ` with entries in
/// `1..=v`, filled row by row.
fn schur_by_tableaux(lambda: &Partition, v: usize) -> MultiPoly {
    let shape = lambda.parts();
    let mut out = MultiPoly::zero(v);
    let mut rows: Vec<Vec<usize>> = shape
        .iter()
        .map(|&r| Vec::with_capacity(r as usize))
        .collect();
    fill(shape, v, 0, &mut rows, &mut out);
    out
}

fn fill(shape: &[u32], v: usize, row: usize, rows: &mut Vec<Vec<usize>>, out: &mut MultiPoly) {
    if row == shape.len() {
        let mut e = vec![0u32; v];
        for r in rows.iter() {
            for &x in r {
                e[x] += 1;
            }
        }
        out.add_term(e, Scalar::one());
        return;
    }
    let col = rows[row].len();
    if col == shape[row] as usize {
        fill(shape, v, row + 1, rows, out);
        return;
    }
    let left = if col > 0 { rows[row][col - 1] } else { 0 };
    let above = if row > 0 { rows[row - 1][col] + 1 } else { 0 };
    for x in left.max(above)..v {
        rows[row].push(x);
        fill(shape, v, row, rows, out);
        rows[row].pop();
    }
}

/// Number of 0-1 matrices with row sums `mu` and column sums `lambda`; this
/// is the coefficient of `f_λ` in `h_μ`.
fn zero_one_matrices(mu: &[u32], lambda: &[u32]) -> BigInt {
    fn go(rows: &[u32], cols: &mut Vec<u32>) -> BigInt {
        let Some((&r, rest)) = rows.split_first() else {
            return if cols.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        };
        let mut total = BigInt::zero();
        choose(r, 0, rest, cols, &mut total);
        total
    }
    fn choose(left: u32, from: usize, rest: &[u32], cols: &mut Vec<u32>, total: &mut BigInt) {
        if left == 0 {
            *total += go(rest, cols);
            return;
        }
        for j in from..cols.len() {
            if cols[j] > 0 {
                cols[j] -= 1;
                choose(left - 1, j + 1, rest, cols, total);
                cols[j] += 1;
            }
        }
    }
    go(mu, &mut lambda.to_vec())
}

/// Inverse of a square rational matrix by Gauss–Jordan elimination.
fn invert(mut a: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let mut inv: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .expect("singular matrix");
        a.swap(c, pivot);
        inv.swap(c, pivot);
        let scale = a[c][c].recip();
        for j in 0..n {
            a[c][j] = &a[c][j] * &scale;
            inv[c][j] = &inv[c][j] * &scale;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let factor = a[r][c].clone();
                for j in 0..n {
                    let da = &a[c][j] * &factor;
                    let di = &inv[c][j] * &factor;
                    a[r][j] -= da;
                    inv[r][j] -= di;
                }
            }
        }
    }
    inv
}

/// `f_λ = Σ_μ (B^{-1})_{λμ} h_μ` where `B_{μλ}` counts 0-1 matrices, since
/// `h_μ = Σ_λ B_{μλ} f_λ`.
fn forgotten(lambda: &Partition, v: usize) -> MultiPoly {
    let n = lambda.size();
    let shapes: Vec<Partition> = partitions_of(n, None, None).collect();
    let b: Vec<Vec<Scalar>> = shapes
        .iter()
        .map(|mu| {
            shapes
                .iter()
                .map(|l| Scalar::from_integer(zero_one_matrices(mu.parts(), l.parts())))
                .collect()
        })
        .collect();
    let inv = invert(b);
    let row = shapes
        .iter()
        .position(|l| l == lambda)
        .expect("shape listed");
    let mut out = MultiPoly::zero(v);
    for (mu, c) in shapes.iter().zip(&inv[row]) {
        if !c.is_zero() {
            out.add_scaled(&product(mu, v, |p| complete(p, v)), c);
        }
    }
    out
}

/// `b_λ` in `v` variables, from the definition of the basis.
pub fn realize(b: BasisId, lambda: &Partition, v: usize) -> MultiPoly {
    match b {
        BasisId::P => product(lambda, v, |p| power_sum(p, v)),
        BasisId::H => product(lambda, v, |p| complete(p, v)),
        BasisId::E => product(lambda, v, |p| elementary(p, v)),
        BasisId::M => orbit_sum(lambda, v),
        BasisId::S => schur_by_tableaux(lambda, v),
        BasisId::F => forgotten(lambda, v),
    }
}

/// Realizes `g` through its power-sum expansion.
pub fn realize_symfunc(g: &SymFunc, v: usize) -> MultiPoly {
    let mut cache: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    let mut out = MultiPoly::zero(v);
    for (lambda, c) in g.iter() {
        let mut term = MultiPoly::one(v);
        for &p in lambda.parts() {
            let factor = cache.entry(p).or_insert_with(|| power_sum(p, v));
            term = &term * factor;
        }
        out.add_scaled(&term, c);
    }
    out
}

/// A disagreement between the library and the polynomial realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub basis: BasisId,
    pub lambda: Partition,
    pub exponents: Vec<u32>,
    pub expected: Scalar,
    pub found: Scalar,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}: coefficient of x^{:?} is {} by definition but {} from the library",
            self.basis, self.lambda, self.exponents, self.expected, self.found
        )
    }
}

/// Compares `realize(b, λ, v)` with the realization of `basis_element(b, λ)`.
pub fn check_conversion(b: BasisId, lambda: &Partition, v: usize) -> Result<(), Mismatch> {
    let expected = realize(b, lambda, v);
    let found = realize_symfunc(&basis_element(b, lambda), v);
    match expected.first_difference(&found) {
        None => Ok(()),
        Some((exponents, expected, found)) => Err(Mismatch {
            basis: b,
            lambda: lambda.clone(),
            exponents,
            expected,
            found,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::scalar::int;

    fn mono(e: &[u32]) -> MultiPoly {
        MultiPoly::monomial(e.to_vec(), int(1))
    }

    #[test]
    fn realization_examples() {
        let m21 = realize(BasisId::M, &part![2, 1], 3);
        assert_eq!(m21.terms().len(), 6);
        assert!(m21.terms().values().all(|c| *c == int(1)));
        assert_eq!(m21.coefficient(&[0, 1, 2]), int(1));

        assert_eq!(
            realize(BasisId::P, &part![2], 2),
            &mono(&[2, 0]) + &mono(&[0, 2])
        );
        assert_eq!(realize(BasisId::S, &part![1, 1], 2), mono(&[1, 1]));
    }

    #[test]
    fn realize_symfunc_examples() {
        let h2 = basis_element(BasisId::H, &part![2]);
        let expected = &(&mono(&[2, 0]) + &mono(&[1, 1])) + &mono(&[0, 2]);
        assert_eq!(realize_symfunc(&h2, 2), expected);
        assert!(realize_symfunc(&basis_element(BasisId::E, &part![2]), 1).is_zero());
        assert_eq!(realize_symfunc(&SymFunc::one(), 3), MultiPoly::one(3));
    }

    #[test]
    fn conversion_examples() {
        assert!(check_conversion(BasisId::S, &part![2, 1], 3).is_ok());
        assert!(check_conversion(BasisId::M, &part![2, 2], 4).is_ok());
        assert!(check_conversion(BasisId::P, &part![3], 3).is_ok());
        assert!(check_conversion(BasisId::F, &part![2, 1], 3).is_ok());
    }

    #[test]
    fn zero_one_matrix_counts() {
        // e_1^2 = m_2 + 2 m_11
        assert_eq!(zero_one_matrices(&[1, 1], &[1, 1]), BigInt::from(2));
        assert_eq!(zero_one_matrices(&[1, 1], &[2]), BigInt::from(1));
        assert_eq!(zero_one_matrices(&[2], &[2]), BigInt::from(0));
    }

    #[test]
    fn mismatch_is_reported() {
        let wrong = realize(BasisId::H, &part![2], 2);
        let right = realize(BasisId::E, &part![2], 2);
        let (e, a, b) = wrong.first_difference(&right).unwrap();
        assert_eq!(e, vec![0, 2]);
        assert_eq!((a, b), (int(1), int(0)));
    }
}
