//! The six classical bases, their power-sum expansions, and coefficient
//! extraction against dual bases.
//!
//! Expansions are cached per `(basis, partition)` behind a read-write lock.
//! Concurrent fills are idempotent: any racer computes the same exact value.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::partition::{partitions_of, Partition};
use crate::scalar::{factorial, to_display_string, to_fraction_string, Scalar};
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisId {
    P,
    M,
    E,
    H,
    S,
    F,
}

impl BasisId {
    pub const ALL: [BasisId; 6] = [
        BasisId::P,
        BasisId::M,
        BasisId::E,
        BasisId::H,
        BasisId::S,
        BasisId::F,
    ];

    pub fn letter(self) -> char {
        match self {
            BasisId::P => 'p',
            BasisId::M => 'm',
            BasisId::E => 'e',
            BasisId::H => 'h',
            BasisId::S => 's',
            BasisId::F => 'f',
        }
    }

    pub fn from_letter(c: char) -> Option<BasisId> {
        BasisId::ALL.into_iter().find(|b| b.letter() == c)
    }

    /// The element `b*_λ` of the dual basis, so that `⟨b_λ, b*_μ⟩ = δ_{λμ}`.
    pub fn dual_element(self, lambda: &Partition) -> Arc<SymFunc> {
        match self {
            BasisId::P => Arc::new(SymFunc::from_terms([(
                lambda.clone(),
                Scalar::new(BigInt::one(), lambda.z_value()),
            )])),
            BasisId::M => basis_arc(BasisId::H, lambda),
            BasisId::H => basis_arc(BasisId::M, lambda),
            BasisId::E => basis_arc(BasisId::F, lambda),
            BasisId::F => basis_arc(BasisId::E, lambda),
            BasisId::S => basis_arc(BasisId::S, lambda),
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for BasisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => {
                BasisId::from_letter(c).ok_or_else(|| Error::UnknownBasis(s.to_string()))
            }
            _ => Err(Error::UnknownBasis(s.to_string())),
        }
    }
}

struct Memo<K> {
    map: RwLock<HashMap<K, Arc<SymFunc>>>,
}

impl<K: Hash + Eq + Clone> Memo<K> {
    fn new() -> Self {
        Memo {
            map: RwLock::new(HashMap::new()),
        }
    }

    fn get_or_compute(&self, key: &K, compute: impl FnOnce() -> SymFunc) -> Arc<SymFunc> {
        if let Some(v) = self.map.read().expect("basis cache poisoned").get(key) {
            return Arc::clone(v);
        }
        let value = Arc::new(compute());
        let mut map = self.map.write().expect("basis cache poisoned");
        Arc::clone(map.entry(key.clone()).or_insert(value))
    }
}

static BASIS_CACHE: LazyLock<Memo<(BasisId, Partition)>> = LazyLock::new(Memo::new);
static AUGMENTED_CACHE: LazyLock<Memo<Partition>> = LazyLock::new(Memo::new);

/// Power-sum expansion of `b_λ`.
pub fn basis_element(b: BasisId, lambda: &Partition) -> SymFunc {
    (*basis_arc(b, lambda)).clone()
}

/// Shared handle to the cached power-sum expansion of `b_λ`.
pub fn basis_arc(b: BasisId, lambda: &Partition) -> Arc<SymFunc> {
    if b == BasisId::P {
        return Arc::new(SymFunc::power_sum(lambda.clone()));
    }
    if lambda.is_empty() {
        return Arc::new(SymFunc::one());
    }
    BASIS_CACHE.get_or_compute(&(b, lambda.clone()), || compute_basis(b, lambda))
}

fn compute_basis(b: BasisId, lambda: &Partition) -> SymFunc {
    match b {
        BasisId::P => SymFunc::power_sum(lambda.clone()),
        BasisId::H | BasisId::E => {
            if lambda.len() == 1 {
                single_row(b, lambda.first())
            } else {
                let (head, tail) = split_first(lambda);
                &*basis_arc(b, &head) * &*basis_arc(b, &tail)
            }
        }
        BasisId::S => {
            if lambda.len() > lambda.first() as usize {
                basis_arc(BasisId::S, &lambda.conjugate()).omega()
            } else {
                jacobi_trudi(&lambda.padded(lambda.len()))
            }
        }
        BasisId::M => {
            let norm: BigInt = lambda
                .multiplicities()
                .into_iter()
                .map(|(_, n)| factorial(n))
                .product();
            augmented_monomial(lambda).scale(&Scalar::new(BigInt::one(), norm))
        }
        BasisId::F => basis_arc(BasisId::M, lambda).omega(),
    }
}

fn split_first(lambda: &Partition) -> (Partition, Partition) {
    let parts = lambda.parts();
    (
        Partition::from_unsorted(vec![parts[0]]),
        Partition::from_unsorted(parts[1..].to_vec()),
    )
}

/// `h_n = Σ_{μ ⊢ n} p_μ / z_μ` and `e_n = Σ_{μ ⊢ n} (-1)^{n - l(μ)} p_μ / z_μ`.
fn single_row(b: BasisId, n: u32) -> SymFunc {
    SymFunc::from_terms(partitions_of(n, None, None).map(|mu| {
        let mut c = Scalar::new(BigInt::one(), mu.z_value());
        if b == BasisId::E && (n as usize - mu.len()) % 2 == 1 {
            c = -c;
        }
        (mu, c)
    }))
}

/// `m̃_λ = n_1(λ)! n_2(λ)! ⋯ m_λ`, the sum over injective index tuples.
///
/// Recurrence: `m̃_{(λ, k)} = p_k m̃_λ - Σ_j m̃_{λ with λ_j += k}`.
fn augmented_monomial(nu: &Partition) -> Arc<SymFunc> {
    if nu.is_empty() {
        return Arc::new(SymFunc::one());
    }
    AUGMENTED_CACHE.get_or_compute(nu, || {
        let parts = nu.parts();
        let k = parts[parts.len() - 1];
        let lambda = Partition::from_unsorted(parts[..parts.len() - 1].to_vec());
        let base = augmented_monomial(&lambda);
        let mut out = SymFunc::from_terms(base.iter().map(|(l, c)| (l.insert_part(k), c.clone())));
        for (v, count) in lambda.multiplicities() {
            let replaced = lambda
                .remove_part(v)
                .expect("part present")
                .insert_part(v + k);
            let sub = augmented_monomial(&replaced);
            out.add_scaled(&sub, &-Scalar::from_integer(BigInt::from(count)));
        }
        out
    })
}

/// Power-sum expansion of `det | h_{s_j - j + i} |`.
pub fn jacobi_trudi(seq: &[i64]) -> SymFunc {
    h_expansion_to_symfunc(&jacobi_trudi_h(seq))
}

/// `det | h_{s_j - j + i} |` as a formal combination of products `h_μ`,
/// computed by Laplace expansion over column prefixes.
pub fn jacobi_trudi_h(seq: &[i64]) -> BTreeMap<Partition, BigInt> {
    let n = seq.len();
    let mut layer: HashMap<u32, BTreeMap<Partition, BigInt>> = HashMap::new();
    layer.insert(0, BTreeMap::from([(Partition::empty(), BigInt::one())]));
    for (c, &sc) in seq.iter().enumerate() {
        let mut next: HashMap<u32, BTreeMap<Partition, BigInt>> = HashMap::new();
        for (mask, poly) in &layer {
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let idx = sc - (c as i64 + 1) + (i as i64 + 1);
                if idx < 0 {
                    continue;
                }
                let inversions = (mask >> (i + 1)).count_ones();
                let target = next.entry(mask | (1 << i)).or_default();
                for (key, coeff) in poly {
                    let key = key.insert_part(idx as u32);
                    let delta = if inversions % 2 == 0 {
                        coeff.clone()
                    } else {
                        -coeff
                    };
                    let slot = target.entry(key).or_insert_with(BigInt::zero);
                    *slot += delta;
                }
            }
        }
        for poly in next.values_mut() {
            poly.retain(|_, c| !c.is_zero());
        }
        layer = next;
    }
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    layer.remove(&full).unwrap_or_default()
}

/// `Σ c_μ h_μ` in the power-sum basis.
pub fn h_expansion_to_symfunc(h: &BTreeMap<Partition, BigInt>) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in h {
        out.add_scaled(&basis_arc(BasisId::H, mu), &Scalar::from_integer(c.clone()));
    }
    out
}

/// `r_μ = (-1)^{|μ| - l(μ)} l(μ)! / ∏ n_i(μ)!`, the coefficient of `h_μ` in `e_{|μ|}`.
pub fn r_coefficient(mu: &Partition) -> BigInt {
    let mut r = factorial(mu.len() as u32);
    for (_, n) in mu.multiplicities() {
        r /= factorial(n);
    }
    if (mu.size() as usize - mu.len()) % 2 == 1 {
        r = -r;
    }
    r
}

/// A symmetric function written in one named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: BasisId,
    pub terms: BTreeMap<Partition, Scalar>,
}

impl BasisExpansion {
    pub fn new(basis: BasisId) -> Self {
        BasisExpansion {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: BasisId, lambda: Partition, c: Scalar) -> Self {
        let mut out = BasisExpansion::new(basis);
        if !c.is_zero() {
            out.terms.insert(lambda, c);
        }
        out
    }

    pub fn coefficient(&self, lambda: &Partition) -> Scalar {
        self.terms.get(lambda).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lambda, c) in &self.terms {
            out.add_scaled(&basis_arc(self.basis, lambda), c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| {
                serde_json::json!({
                    "partition": l.parts(),
                    "coeff": to_fraction_string(c),
                })
            })
            .collect();
        serde_json::json!({ "basis": self.basis.to_string(), "terms": terms })
    }
}

impl fmt::Display for BasisExpansion {
    /// Terms in graded, lexicographically increasing order, e.g.
    /// `3/2*s[2,1] - p[3]`; the constant term prints as a bare number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if lambda.is_empty() {
                write!(f, "{}", to_display_string(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}{}", self.basis, lambda)?;
            } else {
                write!(f, "{}*{}{}", to_display_string(&mag), self.basis, lambda)?;
            }
        }
        Ok(())
    }
}

/// Expansion of `g` in basis `b`: the coefficient of `b_λ` is `⟨g, b*_λ⟩`.
pub fn expand(g: &SymFunc, b: BasisId) -> BasisExpansion {
    let mut out = BasisExpansion::new(b);
    if b == BasisId::P {
        out.terms = g.terms().clone();
        return out;
    }
    let mut degrees: Vec<u32> = g.terms().keys().map(Partition::size).collect();
    degrees.dedup();
    for d in degrees {
        let part = g.component(d);
        for lambda in partitions_of(d, None, None) {
            let c = part.inner_product(&b.dual_element(&lambda));
            if !c.is_zero() {
                out.terms.insert(lambda, c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::scalar::{int, ratio};

    fn p(l: Partition) -> SymFunc {
        SymFunc::power_sum(l)
    }

    #[test]
    fn e2_and_s11_in_power_sums() {
        let want = &p(part![1, 1]).scale(&ratio(1, 2)) - &p(part![2]).scale(&ratio(1, 2));
        assert_eq!(basis_element(BasisId::E, &part![2]), want);
        assert_eq!(basis_element(BasisId::S, &part![1, 1]), want);
        assert_eq!(basis_element(BasisId::P, &part![3, 1]), p(part![3, 1]));
    }

    #[test]
    fn expansion_examples() {
        let h2 = basis_element(BasisId::H, &part![2]);
        let e = expand(&h2, BasisId::M);
        assert_eq!(e.to_string(), "m[1,1] + m[2]");
        let e2 = basis_element(BasisId::E, &part![2]);
        assert_eq!(expand(&e2, BasisId::H).to_string(), "h[1,1] - h[2]");
        assert_eq!(expand(&p(part![1]), BasisId::S).to_string(), "s[1]");
    }

    #[test]
    fn inner_product_examples() {
        let s2 = basis_element(BasisId::S, &part![2]);
        let s11 = basis_element(BasisId::S, &part![1, 1]);
        assert_eq!(s2.inner_product(&s11), int(0));
        let h21 = basis_element(BasisId::H, &part![2, 1]);
        let m21 = basis_element(BasisId::M, &part![2, 1]);
        assert_eq!(h21.inner_product(&m21), int(1));
    }

    #[test]
    fn r_coefficients() {
        assert_eq!(r_coefficient(&part![1, 1]), BigInt::from(1));
        assert_eq!(r_coefficient(&part![2]), BigInt::from(-1));
        assert_eq!(r_coefficient(&part![2, 1]), BigInt::from(-2));
    }

    #[test]
    fn omega_examples() {
        let h2 = basis_element(BasisId::H, &part![2]);
        assert_eq!(h2.omega(), basis_element(BasisId::E, &part![2]));
        let s21 = basis_element(BasisId::S, &part![2, 1]);
        assert_eq!(s21.omega(), s21);
    }

    #[test]
    fn skew_examples() {
        let h1 = basis_element(BasisId::H, &part![1]);
        let m21 = basis_element(BasisId::M, &part![2, 1]);
        assert_eq!(h1.skew(&m21), basis_element(BasisId::M, &part![2]));
        let h2 = basis_element(BasisId::H, &part![2]);
        assert!(p(part![3]).skew(&h2).is_zero());
    }

    #[test]
    fn monomial_product_example() {
        let h1 = basis_element(BasisId::H, &part![1]);
        assert_eq!(
            expand(&(&h1 * &h1), BasisId::M).to_string(),
            "2*m[1,1] + m[2]"
        );
    }

    #[test]
    fn jacobi_trudi_matches_long_schur() {
        // s_{111} computed through the conjugate equals the 3x3 determinant.
        let direct = jacobi_trudi(&[1, 1, 1]);
        assert_eq!(basis_element(BasisId::S, &part![1, 1, 1]), direct);
        assert_eq!(direct, basis_element(BasisId::E, &part![3]));
    }

    #[test]
    fn basis_ids_parse() {
        assert_eq!("s".parse::<BasisId>().unwrap(), BasisId::S);
        assert!("x".parse::<BasisId>().is_err());
        assert!("ss".parse::<BasisId>().is_err());
    }
}
