//! The graded ring of symmetric functions over the rationals, stored in the
//! power-sum basis.
//!
//! In this basis multiplication is multiset union of indices, the Hall inner
//! product is diagonal with `⟨p_λ, p_μ⟩ = z_λ δ_{λμ}`, `ω` is a sign, and
//! `p_k^⊥` is the derivation `k ∂/∂p_k`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{BigInt, One, Zero};

use crate::partition::Partition;
use crate::scalar::{factorial, Scalar};

/// `Σ c_λ p_λ` with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Scalar>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut g = SymFunc::zero();
        g.add_term(Partition::empty(), c);
        g
    }

    /// The power-sum monomial `p_λ`.
    pub fn power_sum(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Scalar::one());
        SymFunc { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Scalar)>>(iter: I) -> Self {
        let mut g = SymFunc::zero();
        for (lambda, c) in iter {
            g.add_term(lambda, c);
        }
        g
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `p_λ`.
    pub fn coefficient(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest degree present; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// Degree used to truncate operator sums: zero for the zero function.
    pub fn max_degree(&self) -> u32 {
        self.degree().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|e| e == d),
        }
    }

    pub fn component(&self, degree: u32) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == degree)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Partition::empty())
    }

    pub fn add_term(&mut self, lambda: Partition, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SymFunc, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (l, d) in &other.terms {
            self.add_term(l.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(l, d)| (l.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> SymFunc {
        (0..n).fold(SymFunc::one(), |acc, _| &acc * self)
    }

    /// Hall inner product.
    pub fn inner_product(&self, other: &SymFunc) -> Scalar {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small
            .terms
            .iter()
            .filter_map(|(l, c)| {
                large
                    .terms
                    .get(l)
                    .map(|d| c * d * Scalar::from_integer(l.z_value()))
            })
            .fold(Scalar::zero(), |acc, x| acc + x)
    }

    /// The involution `ω`: `p_λ ↦ (-1)^{|λ| - l(λ)} p_λ`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            terms: self
                .terms
                .iter()
                .map(|(l, c)| {
                    if (l.size() as usize - l.len()) % 2 == 0 {
                        (l.clone(), c.clone())
                    } else {
                        (l.clone(), -c)
                    }
                })
                .collect(),
        }
    }

    /// `self^⊥ (target)`, the adjoint of multiplication by `self`.
    pub fn skew(&self, target: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        let top = target.max_degree();
        for (lambda, c) in &self.terms {
            if lambda.size() > top {
                break;
            }
            for (mu, d) in &target.terms {
                if let Some((rest, coeff)) = power_skew(lambda, mu) {
                    out.add_term(rest, c * d * Scalar::from_integer(coeff));
                }
            }
        }
        out
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&Partition, &Scalar) -> Scalar) -> SymFunc {
        SymFunc::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), f(l, c))))
    }
}

/// `p_λ^⊥ p_μ = coeff · p_{μ - (λ)}`, where
/// `coeff = ∏_k k^{a_k} n_k(μ)! / (n_k(μ) - a_k)!` with `a_k = n_k(λ)`.
pub fn power_skew(lambda: &Partition, mu: &Partition) -> Option<(Partition, BigInt)> {
    if lambda.is_empty() {
        return Some((mu.clone(), BigInt::one()));
    }
    let rest = mu.remove_parts(lambda)?;
    let mut coeff = BigInt::one();
    for (k, a) in lambda.multiplicities() {
        let n = mu.mult_count(k);
        coeff *= BigInt::from(k).pow(a) * factorial(n) / factorial(n - a);
    }
    Some((rest, coeff))
}

pub fn multiply(g1: &SymFunc, g2: &SymFunc) -> SymFunc {
    g1 * g2
}

pub fn inner_product(g1: &SymFunc, g2: &SymFunc) -> Scalar {
    g1.inner_product(g2)
}

pub fn omega(g: &SymFunc) -> SymFunc {
    g.omega()
}

/// `g^⊥ P`.
pub fn skew(g: &SymFunc, p: &SymFunc) -> SymFunc {
    g.skew(p)
}

impl<'a> Add<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, rhs: SymFunc) -> SymFunc {
        self += &rhs;
        self
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(mut self, rhs: SymFunc) -> SymFunc {
        self -= &rhs;
        self
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    fn add_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), c.clone());
        }
    }
}

impl SubAssign<&SymFunc> for SymFunc {
    fn sub_assign(&mut self, rhs: &SymFunc) {
        for (l, c) in &rhs.terms {
            self.add_term(l.clone(), -c);
        }
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl<'a> Mul<&'a SymFunc> for &'a SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (l, c) in &self.terms {
            for (m, d) in &rhs.terms {
                out.add_term(l.insert_parts(m), c * d);
            }
        }
        out
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        &self * &rhs
    }
}

impl Mul<&Scalar> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &Scalar) -> SymFunc {
        self.scale(rhs)
    }
}

impl std::iter::Sum for SymFunc {
    fn sum<I: Iterator<Item = SymFunc>>(iter: I) -> SymFunc {
        iter.fold(SymFunc::zero(), |acc, g| acc + g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::scalar::int;

    fn p(l: Partition) -> SymFunc {
        SymFunc::power_sum(l)
    }

    #[test]
    fn product_is_index_union() {
        assert_eq!(&p(part![2]) * &p(part![2, 1]), p(part![2, 2, 1]));
        assert!((&p(part![3]) * &SymFunc::zero()).is_zero());
    }

    #[test]
    fn inner_product_is_z_diagonal() {
        assert_eq!(p(part![2, 1]).inner_product(&p(part![2, 1])), int(2));
        assert_eq!(p(part![2, 1]).inner_product(&p(part![3])), int(0));
    }

    #[test]
    fn power_skew_examples() {
        // p_2^⊥ p_{22} = 2·2 p_2
        assert_eq!(
            p(part![2]).skew(&p(part![2, 2])),
            p(part![2]).scale(&int(4))
        );
        assert!(p(part![3]).skew(&p(part![2])).is_zero());
        assert_eq!(SymFunc::one().skew(&p(part![2, 1])), p(part![2, 1]));
    }

    #[test]
    fn zero_pruning() {
        let g = &p(part![1]) - &p(part![1]);
        assert!(g.is_zero());
        assert_eq!(g, SymFunc::zero());
    }

    #[test]
    fn omega_signs() {
        assert_eq!(p(part![3]).omega(), p(part![3]));
        assert_eq!(p(part![2]).omega(), -p(part![2]));
        assert_eq!(p(part![2, 2]).omega(), p(part![2, 2]));
    }
}
