//! Standard tableaux counts and the bounded-height sums `Σ_{l(λ) ≤ k} f_λ²`,
//! computed three ways: a multinomial/Vandermonde closed form, the Gessel
//! homomorphism applied to `CS_{0^k}(h_1^n)`, and direct enumeration.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, One, Signed, Zero};
use serde::Serialize;

use crate::basis::{h_expansion_to_symfunc, jacobi_trudi_h};
use crate::error::Error;
use crate::partition::{compositions_of, partitions_of, Composition, Partition};
use crate::scalar::{
    binomial, factorial, multinomial, to_display_string, to_fraction_string, Scalar,
};
use crate::symfunc::SymFunc;
use crate::vertex::cs_column;

/// A polynomial in one variable `x` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coefficients: BTreeMap<u32, Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn monomial(exponent: u32, c: Scalar) -> Self {
        let mut p = UniPoly::zero();
        p.add_term(exponent, c);
        p
    }

    pub fn add_term(&mut self, exponent: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .coefficients
            .entry(exponent)
            .or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn coefficient(&self, exponent: u32) -> Scalar {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, Scalar> {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (i, c) in &self.coefficients {
            for (j, d) in &rhs.coefficients {
                out.add_term(i + j, c * d);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.coefficients.iter().enumerate() {
            let negative = c.is_negative();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            };
            if var.is_empty() {
                write!(f, "{}", to_display_string(&mag))?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", to_display_string(&mag), var)?;
            }
        }
        Ok(())
    }
}

/// `f_λ` by the hook-length formula.
pub fn syt_count(lambda: &Partition) -> Scalar {
    let conj = lambda.conjugate();
    let mut hooks = BigInt::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.parts()[j as usize] - i as u32 - 1;
            hooks *= arm + leg + 1;
        }
    }
    Scalar::new(factorial(lambda.size()), hooks)
}

/// `f_λ` by enumerating standard fillings: the largest entry sits in a
/// corner, so each filling is a chain of corner removals.
pub fn syt_count_brute(lambda: &Partition) -> u64 {
    if lambda.size() <= 1 {
        return 1;
    }
    let parts = lambda.parts();
    let mut total = 0;
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += syt_count_brute(&Partition::from_unsorted(smaller));
        }
    }
    total
}

/// Gessel's homomorphism `θ`: `θ(p_1) = x`, `θ(p_r) = 0` for `r ≥ 2`, so
/// `θ(h_n) = x^n / n!`.
pub fn theta(g: &SymFunc) -> UniPoly {
    let mut out = UniPoly::zero();
    for (lambda, c) in g.iter() {
        if lambda.parts().iter().all(|&p| p == 1) {
            out.add_term(lambda.size(), c.clone());
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurSumMethod {
    Formula,
    Operator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    Closed,
    Det,
    Brute,
}

impl CountMethod {
    pub const ALL: [CountMethod; 3] = [CountMethod::Closed, CountMethod::Det, CountMethod::Brute];
}

impl FromStr for CountMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "closed" => Ok(CountMethod::Closed),
            "det" => Ok(CountMethod::Det),
            "brute" => Ok(CountMethod::Brute),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountMethod::Closed => "closed",
            CountMethod::Det => "det",
            CountMethod::Brute => "brute",
        })
    }
}

fn h1_power(n: u32) -> SymFunc {
    SymFunc::power_sum(Partition::rectangle(1, n))
}

/// `det | h_{s_j - j + i} |` as a signed handle to the determinant with
/// sorted columns. Column `j` depends only on `s_j - j`; permuting columns
/// flips the sign and a repeated column gives zero.
struct DetCache {
    sorted: HashMap<Vec<i64>, Arc<BTreeMap<Partition, BigInt>>>,
}

impl DetCache {
    fn new() -> Self {
        DetCache {
            sorted: HashMap::new(),
        }
    }

    fn get(&mut self, s: &Composition) -> Option<(bool, Arc<BTreeMap<Partition, BigInt>>)> {
        let mut cols: Vec<i64> = s
            .as_signed()
            .iter()
            .enumerate()
            .map(|(j, x)| x - j as i64)
            .collect();
        let mut odd = false;
        for i in 1..cols.len() {
            let mut j = i;
            while j > 0 && cols[j - 1] < cols[j] {
                cols.swap(j - 1, j);
                odd = !odd;
                j -= 1;
            }
        }
        if cols.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        let seq: Vec<i64> = cols.iter().enumerate().map(|(j, c)| c + j as i64).collect();
        let det = self
            .sorted
            .entry(seq)
            .or_insert_with_key(|seq| Arc::new(jacobi_trudi_h(seq)));
        Some((odd, Arc::clone(det)))
    }
}

/// `Σ_{s} multinomial(n; s) det | h_{s_j - j + i} |` over length-`k` weak
/// compositions `s` of `n`, as a formal `h`-combination.
fn composition_det_sum(n: u32, k: u32) -> BTreeMap<Partition, BigInt> {
    let mut dets = DetCache::new();
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for s in compositions_of(n, k as usize) {
        let Some((odd, det)) = dets.get(&s) else {
            continue;
        };
        let mut weight = multinomial(n, s.entries());
        if odd {
            weight = -weight;
        }
        for (mu, c) in det.iter() {
            *acc.entry(mu.clone()).or_insert_with(BigInt::zero) += c * &weight;
        }
    }
    acc.retain(|_, c| !c.is_zero());
    acc
}

/// `CS_{0^k}(h_1^n) = Σ_{l(λ) ≤ k} f_λ s_λ`.
pub fn bounded_height_schur_sum(n: u32, k: u32, method: SchurSumMethod) -> SymFunc {
    match method {
        SchurSumMethod::Operator => cs_column(0, k, &h1_power(n)),
        SchurSumMethod::Formula => h_expansion_to_symfunc(&composition_det_sum(n, k)),
    }
}

/// One summand of a bounded-height count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTerm {
    /// `"composition"` for closed and det, `"partition"` for brute.
    pub kind: &'static str,
    pub index: Vec<u32>,
    #[serde(serialize_with = "fraction")]
    pub value: Scalar,
}

fn fraction<S: serde::Serializer>(c: &Scalar, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&to_fraction_string(c))
}

/// The closed-form summand for the composition `s`:
/// `multinomial(n; s) ∏_{i<j} (s_j + j - s_i - i) / ∏_i (s_i + i - 1)! · n!`.
pub fn closed_form_term(n: u32, s: &Composition) -> Scalar {
    let e = s.as_signed();
    let mut vandermonde = BigInt::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            vandermonde *= e[j] + j as i64 - e[i] - i as i64;
        }
    }
    let denom = s
        .entries()
        .iter()
        .enumerate()
        .fold(BigInt::one(), |acc, (i, &si)| {
            acc * factorial(si + i as u32)
        });
    let num = multinomial(n, s.entries()) * vandermonde * factorial(n);
    Scalar::new(num, denom)
}

/// `n! [x^n] θ(det | h_{s_j - j + i} |) · multinomial(n; s)`.
fn det_term(n: u32, s: &Composition, dets: &mut DetCache) -> Scalar {
    let Some((odd, det)) = dets.get(s) else {
        return Scalar::zero();
    };
    let value = theta(&h_expansion_to_symfunc(&det)).coefficient(n)
        * Scalar::from_integer(multinomial(n, s.entries()) * factorial(n));
    if odd {
        -value
    } else {
        value
    }
}

/// The summands of `Σ_{λ ⊢ n, l(λ) ≤ k} f_λ²` under `method`.
pub fn bounded_height_terms(n: u32, k: u32, method: CountMethod) -> Vec<CountTerm> {
    match method {
        CountMethod::Closed | CountMethod::Det => {
            let mut dets = DetCache::new();
            compositions_of(n, k as usize)
                .map(|s| CountTerm {
                    kind: "composition",
                    value: if method == CountMethod::Closed {
                        closed_form_term(n, &s)
                    } else {
                        det_term(n, &s, &mut dets)
                    },
                    index: s.entries().to_vec(),
                })
                .collect()
        }
        CountMethod::Brute => partitions_of(n, Some(k as usize), None)
            .map(|l| {
                let f = syt_count(&l);
                CountTerm {
                    kind: "partition",
                    value: &f * &f,
                    index: l.into_parts(),
                }
            })
            .collect(),
    }
}

/// `Σ_{λ ⊢ n, l(λ) ≤ k} f_λ²`.
///
/// Panics if the rational total is not an integer, which would mean the
/// formula was transcribed wrongly.
pub fn bounded_height_pairs(n: u32, k: u32, method: CountMethod) -> BigInt {
    let total: Scalar = match method {
        CountMethod::Det => {
            let sum = bounded_height_schur_sum(n, k, SchurSumMethod::Formula);
            theta(&sum).coefficient(n) * Scalar::from_integer(factorial(n))
        }
        _ => bounded_height_terms(n, k, method)
            .into_iter()
            .fold(Scalar::zero(), |acc, t| acc + t.value),
    };
    assert!(
        total.is_integer(),
        "{method} count for n={n}, k={k} is not an integer: {total}"
    );
    total.to_integer()
}

/// `(RS_0)^k (h_1^n)` as
/// `Σ_l Σ_{s} (-1)^{n-l} multinomial(n; l, s) h_1^l det | h_{s_j - j + i} |`.
pub fn rs0_power_expansion(n: u32, k: u32) -> SymFunc {
    let mut acc: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for l in 0..=n {
        let ones = Partition::rectangle(1, l);
        let sgn = if (n - l) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        for s in compositions_of(n - l, k as usize) {
            let mut parts = vec![l];
            parts.extend_from_slice(s.entries());
            let weight = multinomial(n, &parts) * &sgn;
            for (mu, c) in jacobi_trudi_h(&s.as_signed()) {
                *acc.entry(mu.insert_parts(&ones))
                    .or_insert_with(BigInt::zero) += c * &weight;
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    h_expansion_to_symfunc(&acc)
}

pub fn catalan(n: u32) -> BigInt {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{basis_element, BasisId};
    use crate::part;
    use crate::scalar::{int, ratio};
    use crate::vertex::{rs_row, rs_rows};

    #[test]
    fn syt_examples() {
        assert_eq!(syt_count(&part![1, 1, 1, 1]), int(1));
        assert_eq!(syt_count(&part![2, 1]), int(2));
        assert_eq!(syt_count(&part![3, 2]), int(5));
        assert_eq!(syt_count_brute(&part![3, 2]), 5);
        assert_eq!(syt_count(&Partition::empty()), int(1));
    }

    #[test]
    fn theta_examples() {
        let h3 = basis_element(BasisId::H, &part![3]);
        assert_eq!(theta(&h3), UniPoly::monomial(3, ratio(1, 6)));
        assert_eq!(theta(&SymFunc::one()), UniPoly::monomial(0, int(1)));
        let s21 = basis_element(BasisId::S, &part![2, 1]);
        assert_eq!(theta(&s21), UniPoly::monomial(3, ratio(1, 3)));
        assert_eq!(theta(&s21).to_string(), "1/3*x^3");
    }

    #[test]
    fn schur_sum_examples() {
        let s = |l| basis_element(BasisId::S, &l);
        let expected = &s(part![3]) + &s(part![2, 1]).scale(&int(2));
        for method in [SchurSumMethod::Formula, SchurSumMethod::Operator] {
            assert_eq!(bounded_height_schur_sum(3, 2, method), expected);
            assert_eq!(bounded_height_schur_sum(0, 3, method), SymFunc::one());
            assert_eq!(bounded_height_schur_sum(2, 1, method), s(part![2]));
        }
    }

    #[test]
    fn pair_count_examples() {
        for method in CountMethod::ALL {
            assert_eq!(bounded_height_pairs(5, 1, method), BigInt::from(1));
            assert_eq!(bounded_height_pairs(4, 2, method), BigInt::from(14));
            assert_eq!(bounded_height_pairs(3, 3, method), BigInt::from(6));
        }
    }

    #[test]
    fn rsform_examples() {
        assert_eq!(rs0_power_expansion(0, 2), SymFunc::one());
        let h11 = h1_power(2);
        assert_eq!(rs0_power_expansion(2, 1), rs_row(0, &h11));
        assert_eq!(rs0_power_expansion(2, 2), rs_rows(0, 2, &h11));
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(4), BigInt::from(14));
        assert_eq!(catalan(10), BigInt::from(16796));
    }
}
