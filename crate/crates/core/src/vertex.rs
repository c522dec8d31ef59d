//! Row- and column-adding vertex operators, applied exactly as operator sums
//! `Σ_λ c_λ A_λ · B_λ^⊥`.
//!
//! Every sum is finite on a given input: `B_λ^⊥` kills anything of degree
//! below `|λ|`, so terms with `|λ|` above the input's top degree are dropped.
//! Row operators with an outer power sum (`RM_a`, `RF_a`) stop once
//! `a·k` exceeds that degree.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, One, Zero};

use crate::basis::{basis_arc, expand, BasisId};
use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, straighten, Partition, StraightenResult};
use crate::scalar::{binomial, sign, Scalar};
use crate::symfunc::SymFunc;

/// `Σ_λ c_λ A_λ · (B_λ^⊥ g)` over the given index partitions.
///
/// `skewer(λ)` gives `B_λ`; `multiplier(λ)` gives `(c_λ, A_λ)` or `None` when
/// the term vanishes. The multiplier is only evaluated for nonzero skews.
pub fn skew_sum<I, S, M>(g: &SymFunc, lambdas: I, skewer: S, multiplier: M) -> SymFunc
where
    I: IntoIterator<Item = Partition>,
    S: Fn(&Partition) -> Arc<SymFunc>,
    M: Fn(&Partition) -> Option<(Scalar, Arc<SymFunc>)>,
{
    let mut out = SymFunc::zero();
    for lambda in lambdas {
        let skewed = skewer(&lambda).skew(g);
        if skewed.is_zero() {
            continue;
        }
        if let Some((c, a)) = multiplier(&lambda) {
            out.add_scaled(&(&*a * &skewed), &c);
        }
    }
    out
}

fn parity(lambda: &Partition) -> Scalar {
    sign(lambda.size())
}

/// `p_a`, with the convention `p_0 = 1` so that `CP_{0^k}` is the identity.
fn power_or_one(a: u32) -> SymFunc {
    if a == 0 {
        SymFunc::one()
    } else {
        SymFunc::power_sum(Partition::rectangle(a, 1))
    }
}

/// `CP_{a^k} = Σ_{l(λ) ≤ k} p_a^{k-l(λ)} ∏_i (p_{λ_i+a} - p_{λ_i} p_a) p_λ^⊥ / z_λ`.
///
/// Adds a column `a^k` to `p_μ` when `l(μ) < k`.
pub fn cp_column(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    if k == 0 {
        return g.clone();
    }
    let pa = power_or_one(a);
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), Some(k as usize)),
        |l| Arc::new(SymFunc::power_sum(l.clone())),
        |l| {
            let mut acc = pa.pow(k - l.len() as u32);
            for &part in l.parts() {
                let shifted = SymFunc::power_sum(Partition::rectangle(part + a, 1));
                let plain = &SymFunc::power_sum(Partition::rectangle(part, 1)) * &pa;
                acc = &acc * &(&shifted - &plain);
            }
            Some((Scalar::new(BigInt::one(), l.z_value()), Arc::new(acc)))
        },
    )
}

/// `CH_{1^k} = Σ_{l(λ) ≤ k} (-1)^{|λ|} e_{λ+1^k} m_λ^⊥`.
pub fn ch_column(k: u32, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), Some(k as usize)),
        |l| basis_arc(BasisId::M, l),
        |l| {
            let shape = l.add_columns(1, k)?;
            Some((parity(l), basis_arc(BasisId::E, &shape)))
        },
    )
}

/// `CE_{1^k} = Σ_{l(λ) ≤ k} (-1)^{|λ|} h_{λ+1^k} f_λ^⊥`.
pub fn ce_column(k: u32, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), Some(k as usize)),
        |l| basis_arc(BasisId::F, l),
        |l| {
            let shape = l.add_columns(1, k)?;
            Some((parity(l), basis_arc(BasisId::H, &shape)))
        },
    )
}

/// `RM_a^{(1)} = Σ_{i ≥ 0} (-1)^i m_{(a+i)} e_i^⊥`; sends `m_λ` to
/// `(1 + n_a(λ)) m_{λ+(a)}`.
pub fn rm_row_one(a: u32, g: &SymFunc) -> Result<SymFunc> {
    if a == 0 {
        return Err(Error::ZeroRowWidth { op: "RM1" });
    }
    Ok(skew_sum(
        g,
        (0..=g.max_degree()).map(|i| Partition::rectangle(i, 1)),
        |l| basis_arc(BasisId::E, l),
        |l| {
            let row = Partition::rectangle(a + l.size(), 1);
            Some((parity(l), basis_arc(BasisId::M, &row)))
        },
    ))
}

/// `RM_a^{(k)} = Σ_{l(λ) ≤ k} (-1)^{|λ|} m_{λ+a^k} e_λ^⊥`; sends `m_λ` to
/// `binom(n_a(λ)+k, k) m_{λ+(a^k)}`.
pub fn rm_rows(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), Some(k as usize)),
        |l| basis_arc(BasisId::E, l),
        |l| {
            let shape = l.add_columns(a, k)?;
            Some((parity(l), basis_arc(BasisId::M, &shape)))
        },
    )
}

/// Shared shape of `RM_a` and `RF_a`:
/// `Σ_{k ≥ 0} Σ_λ (-1)^{|λ|+k} top_{λ+a^{k+1}} skew_λ^⊥ (row_a^k)^⊥`.
fn row_adder(a: u32, g: &SymFunc, top: BasisId, skew: BasisId, row: BasisId) -> SymFunc {
    let deg = g.max_degree();
    let mut out = SymFunc::zero();
    let mut k = 0u32;
    while a * k <= deg {
        let reduced = basis_arc(row, &Partition::rectangle(a, k)).skew(g);
        if !reduced.is_zero() {
            let inner = skew_sum(
                &reduced,
                partitions_up_to(deg - a * k, Some(k as usize + 1)),
                |l| basis_arc(skew, l),
                |l| {
                    let shape = l.add_columns(a, k + 1)?;
                    Some((sign(l.size() + k), basis_arc(top, &shape)))
                },
            );
            out += &inner;
        }
        k += 1;
    }
    out
}

/// `RM_a = Σ_{k ≥ 0} Σ_λ (-1)^{|λ|+k} m_{λ+a^{k+1}} e_λ^⊥ (h_a^k)^⊥`; sends
/// `m_λ` to `m_{λ+(a)}`.
pub fn rm_row(a: u32, g: &SymFunc) -> Result<SymFunc> {
    if a == 0 {
        return Err(Error::ZeroRowWidth { op: "RM" });
    }
    Ok(row_adder(a, g, BasisId::M, BasisId::E, BasisId::H))
}

/// `RF_a = Σ_{k ≥ 0} Σ_λ (-1)^{|λ|+k} f_{λ+a^{k+1}} h_λ^⊥ (e_a^k)^⊥`; sends
/// `f_λ` to `f_{λ+(a)}`.
pub fn rf_row(a: u32, g: &SymFunc) -> Result<SymFunc> {
    if a == 0 {
        return Err(Error::ZeroRowWidth { op: "RF" });
    }
    Ok(row_adder(a, g, BasisId::F, BasisId::H, BasisId::E))
}

fn column_adder(a: u32, k: u32, g: &SymFunc, top: BasisId, skew: BasisId) -> SymFunc {
    let block = Partition::rectangle(a, k);
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), None),
        |l| basis_arc(skew, l),
        |l| {
            let c = binomial((l.mult_count(a) + k) as i64, k as i64);
            let shape = l.insert_parts(&block);
            Some((parity(l) * Scalar::from_integer(c), basis_arc(top, &shape)))
        },
    )
}

/// `CM_{a^k} = Σ_λ (-1)^{|λ|} binom(n_a(λ)+k, k) m_{λ+(a^k)} e_λ^⊥`; sends
/// `m_λ` to `m_{λ+a^k}`, or to zero when `l(λ) > k`.
pub fn cm_column(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    column_adder(a, k, g, BasisId::M, BasisId::E)
}

/// `CF_{a^k} = Σ_λ (-1)^{|λ|} binom(n_a(λ)+k, k) f_{λ+(a^k)} h_λ^⊥`.
pub fn cf_column(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    column_adder(a, k, g, BasisId::F, BasisId::H)
}

/// Bernstein's operator `RS_a = Σ_{i ≥ 0} (-1)^i h_{a+i} e_i^⊥`.
pub fn rs_row(a: u32, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        (0..=g.max_degree()).map(|i| Partition::rectangle(i, 1)),
        |l| basis_arc(BasisId::E, l),
        |l| {
            let row = Partition::rectangle(a + l.size(), 1);
            Some((parity(l), basis_arc(BasisId::H, &row)))
        },
    )
}

/// `(RS_a)^k = Σ_{l(λ) ≤ k} (-1)^{|λ|} s_{λ+a^k} s_{λ'}^⊥`.
pub fn rs_rows(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    if k == 0 {
        return g.clone();
    }
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), Some(k as usize)),
        |l| basis_arc(BasisId::S, &l.conjugate()),
        |l| {
            let shape = l.add_columns(a, k)?;
            Some((parity(l), basis_arc(BasisId::S, &shape)))
        },
    )
}

/// `(RS_a)^k s_λ` in the Schur basis, read off the Jacobi–Trudi sequence
/// `(a, …, a, λ_1, λ_2, …)`.
pub fn rs_power_on_schur(a: u32, k: u32, lambda: &Partition) -> StraightenResult {
    let seq: Vec<i64> = std::iter::repeat(a as i64)
        .take(k as usize)
        .chain(lambda.parts().iter().map(|&p| p as i64))
        .collect();
    straighten(&seq)
}

fn signed_schur(r: &StraightenResult) -> Option<(Scalar, Arc<SymFunc>)> {
    match r {
        StraightenResult::Zero => None,
        StraightenResult::Signed { sign, shape } => Some((
            Scalar::from_integer(BigInt::from(*sign)),
            basis_arc(BasisId::S, shape),
        )),
    }
}

/// `CS_{a^k} = Σ_λ (-1)^{|λ|} (RS_a)^k(s_λ) s_{λ'}^⊥`; sends `s_λ` to
/// `s_{λ+a^k}` when `l(λ) ≤ k` and to zero otherwise.
pub fn cs_column(a: u32, k: u32, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), None),
        |l| basis_arc(BasisId::S, &l.conjugate()),
        |l| {
            let (c, image) = signed_schur(&rs_power_on_schur(a, k, l))?;
            Some((c * parity(l), image))
        },
    )
}

/// `T_{-X}`: the constant term.
pub fn t_minus_x(g: &SymFunc) -> SymFunc {
    SymFunc::constant(g.constant_term())
}

/// `Σ_λ (-1)^{|λ|} s_λ s_{λ'}^⊥`, the operator-sum form of [`t_minus_x`].
pub fn t_minus_x_sum(g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), None),
        |l| basis_arc(BasisId::S, &l.conjugate()),
        |l| Some((parity(l), basis_arc(BasisId::S, l))),
    )
}

/// `Σ_λ (-1)^{|λ|} ω(a_λ) b_λ^⊥` for the basis `a` and its dual `b`.
pub fn t_minus_x_dual_form(a: BasisId, g: &SymFunc) -> SymFunc {
    skew_sum(
        g,
        partitions_up_to(g.max_degree(), None),
        |l| a.dual_element(l),
        |l| Some((parity(l), Arc::new(basis_arc(a, l).omega()))),
    )
}

/// The linear operator sending `b_μ` to `assignment(μ)`.
pub fn everything_op<F>(b: BasisId, assignment: F, g: &SymFunc) -> Result<SymFunc>
where
    F: Fn(&Partition) -> Option<SymFunc>,
{
    let mut out = SymFunc::zero();
    for (mu, c) in &expand(g, b).terms {
        let image = assignment(mu).ok_or_else(|| Error::MissingAssignment(mu.clone()))?;
        out.add_scaled(&image, c);
    }
    Ok(out)
}

/// `Σ_μ d_μ T_{-X} b*_μ^⊥`, the operator-sum form of [`everything_op`].
pub fn everything_op_sum<F>(b: BasisId, assignment: F, g: &SymFunc) -> Result<SymFunc>
where
    F: Fn(&Partition) -> Option<SymFunc>,
{
    let mut out = SymFunc::zero();
    for mu in partitions_up_to(g.max_degree(), None) {
        let c = b.dual_element(&mu).skew(g).constant_term();
        if c.is_zero() {
            continue;
        }
        let image = assignment(&mu).ok_or_else(|| Error::MissingAssignment(mu.clone()))?;
        out.add_scaled(&image, &c);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpName {
    CP,
    CH,
    CE,
    RM1,
    RMK,
    RM,
    RF,
    CM,
    CF,
    RS,
    RSK,
    CS,
    TX,
    EVERY,
}

impl OpName {
    pub const ALL: [OpName; 14] = [
        OpName::CP,
        OpName::CH,
        OpName::CE,
        OpName::RM1,
        OpName::RMK,
        OpName::RM,
        OpName::RF,
        OpName::CM,
        OpName::CF,
        OpName::RS,
        OpName::RSK,
        OpName::CS,
        OpName::TX,
        OpName::EVERY,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OpName::CP => "CP",
            OpName::CH => "CH",
            OpName::CE => "CE",
            OpName::RM1 => "RM1",
            OpName::RMK => "RMK",
            OpName::RM => "RM",
            OpName::RF => "RF",
            OpName::CM => "CM",
            OpName::CF => "CF",
            OpName::RS => "RS",
            OpName::RSK => "RSK",
            OpName::CS => "CS",
            OpName::TX => "TX",
            OpName::EVERY => "EVERY",
        }
    }

    /// Whether the operator takes `(a, k)`.
    fn takes(self) -> (bool, bool) {
        match self {
            OpName::CP | OpName::RMK | OpName::CM | OpName::CF | OpName::RSK | OpName::CS => {
                (true, true)
            }
            OpName::CH | OpName::CE => (false, true),
            OpName::RM1 | OpName::RM | OpName::RF | OpName::RS => (true, false),
            OpName::TX | OpName::EVERY => (false, false),
        }
    }
}

impl fmt::Display for OpName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OpName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OpName::ALL
            .into_iter()
            .find(|op| op.as_str() == s)
            .ok_or_else(|| Error::UnknownOperator(s.to_string()))
    }
}

/// A named operator with its parameters, validated for applicability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OperatorSpec {
    name: OpName,
    a: Option<u32>,
    k: Option<u32>,
}

impl OperatorSpec {
    pub fn new(name: OpName, a: Option<u32>, k: Option<u32>) -> Result<Self> {
        let op = name.as_str();
        let (takes_a, takes_k) = name.takes();
        match (takes_a, a) {
            (false, Some(_)) => return Err(Error::UnexpectedParameter { op, param: "a" }),
            (true, None) => return Err(Error::MissingParameter { op, param: "a" }),
            _ => {}
        }
        match (takes_k, k) {
            (false, Some(_)) => return Err(Error::UnexpectedParameter { op, param: "k" }),
            (true, None) => return Err(Error::MissingParameter { op, param: "k" }),
            _ => {}
        }
        if name == OpName::EVERY {
            // needs a caller-supplied assignment; see `everything_op`
            return Err(Error::UnknownOperator("EVERY (library only)".into()));
        }
        if matches!(name, OpName::RM1 | OpName::RM | OpName::RF) && a == Some(0) {
            return Err(Error::ZeroRowWidth { op });
        }
        Ok(OperatorSpec { name, a, k })
    }

    pub fn name(&self) -> OpName {
        self.name
    }

    pub fn apply(&self, g: &SymFunc) -> Result<SymFunc> {
        let a = self.a.unwrap_or(0);
        let k = self.k.unwrap_or(0);
        Ok(match self.name {
            OpName::CP => cp_column(a, k, g),
            OpName::CH => ch_column(k, g),
            OpName::CE => ce_column(k, g),
            OpName::RM1 => rm_row_one(a, g)?,
            OpName::RMK => rm_rows(a, k, g),
            OpName::RM => rm_row(a, g)?,
            OpName::RF => rf_row(a, g)?,
            OpName::CM => cm_column(a, k, g),
            OpName::CF => cf_column(a, k, g),
            OpName::RS => rs_row(a, g),
            OpName::RSK => rs_rows(a, k, g),
            OpName::CS => cs_column(a, k, g),
            OpName::TX => t_minus_x(g),
            OpName::EVERY => unreachable!("rejected by OperatorSpec::new"),
        })
    }
}

/// `Σ c_λ b_λ` as a power-sum expansion; a shorthand for tests and checks.
pub fn combo(b: BasisId, terms: &[(Partition, i64)]) -> SymFunc {
    let mut out = SymFunc::zero();
    for (l, c) in terms {
        out.add_scaled(&basis_arc(b, l), &Scalar::from_integer(BigInt::from(*c)));
    }
    out
}

/// `c · b_λ`.
pub fn scaled(b: BasisId, lambda: &Partition, c: i64) -> SymFunc {
    if c == 0 {
        return SymFunc::zero();
    }
    basis_arc(b, lambda).scale(&Scalar::from_integer(BigInt::from(c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::basis_element;
    use crate::part;

    fn b(id: BasisId, l: Partition) -> SymFunc {
        basis_element(id, &l)
    }
    use BasisId::{E, F, H, M, P, S};

    #[test]
    fn cp_examples() {
        assert_eq!(cp_column(2, 2, &SymFunc::one()), b(P, part![2, 2]));
        assert_eq!(cp_column(2, 2, &b(P, part![1])), b(P, part![3, 2]));
        assert_eq!(cp_column(3, 0, &b(P, part![2])), b(P, part![2]));
    }

    #[test]
    fn ch_ce_examples() {
        assert_eq!(ch_column(2, &b(H, part![2])), b(H, part![3, 1]));
        assert_eq!(ch_column(2, &SymFunc::one()), b(H, part![1, 1]));
        assert_eq!(ch_column(3, &b(H, part![2, 2])), b(H, part![3, 3, 1]));
        assert_eq!(ce_column(2, &b(E, part![2])), b(E, part![3, 1]));
        assert_eq!(ce_column(2, &SymFunc::one()), b(E, part![1, 1]));
        assert_eq!(ce_column(1, &b(E, part![3])), b(E, part![4]));
    }

    #[test]
    fn monomial_row_examples() {
        assert_eq!(
            rm_row_one(1, &b(M, part![1])).unwrap(),
            scaled(M, &part![1, 1], 2)
        );
        assert_eq!(rm_row_one(2, &SymFunc::one()).unwrap(), b(M, part![2]));
        assert_eq!(
            rm_row_one(2, &b(M, part![2, 1])).unwrap(),
            scaled(M, &part![2, 2, 1], 2)
        );
        assert!(rm_row_one(0, &SymFunc::one()).is_err());

        assert_eq!(
            rm_rows(1, 2, &b(M, part![1])),
            scaled(M, &part![1, 1, 1], 3)
        );
        assert_eq!(rm_rows(2, 1, &SymFunc::one()), b(M, part![2]));
        assert_eq!(rm_rows(3, 0, &b(H, part![2])), b(H, part![2]));

        assert_eq!(rm_row(2, &b(M, part![2, 1])).unwrap(), b(M, part![2, 2, 1]));
        assert_eq!(rm_row(1, &b(M, part![1, 1])).unwrap(), b(M, part![1, 1, 1]));
        assert_eq!(rm_row(3, &SymFunc::one()).unwrap(), b(M, part![3]));
        assert!(rm_row(0, &SymFunc::one()).is_err());
    }

    #[test]
    fn forgotten_row_examples() {
        assert_eq!(rf_row(2, &b(F, part![2, 1])).unwrap(), b(F, part![2, 2, 1]));
        assert_eq!(rf_row(1, &SymFunc::one()).unwrap(), b(F, part![1]));
        assert_eq!(rf_row(1, &b(F, part![1])).unwrap(), b(F, part![1, 1]));
    }

    #[test]
    fn column_monomial_examples() {
        assert_eq!(cm_column(2, 2, &b(M, part![1])), b(M, part![3, 2]));
        assert!(cm_column(1, 1, &b(M, part![2, 1])).is_zero());
        assert_eq!(cm_column(2, 2, &SymFunc::one()), b(M, part![2, 2]));
        assert_eq!(cf_column(2, 2, &b(F, part![1])), b(F, part![3, 2]));
        assert!(cf_column(1, 1, &b(F, part![2, 1])).is_zero());
        assert_eq!(cf_column(1, 2, &SymFunc::one()), b(F, part![1, 1]));
    }

    #[test]
    fn schur_row_examples() {
        assert_eq!(rs_row(2, &b(S, part![2])), b(S, part![2, 2]));
        assert!(rs_row(1, &b(S, part![2])).is_zero());
        assert_eq!(rs_row(0, &b(S, part![2])), -b(S, part![1, 1]));
        assert_eq!(rs_rows(1, 2, &SymFunc::one()), b(S, part![1, 1]));
        let composed = rs_row(2, &rs_row(2, &b(S, part![1])));
        assert_eq!(rs_rows(2, 2, &b(S, part![1])), composed);
        assert_eq!(rs_rows(3, 0, &b(H, part![2])), b(H, part![2]));
    }

    #[test]
    fn schur_column_examples() {
        assert_eq!(cs_column(1, 2, &b(S, part![1])), b(S, part![2, 1]));
        assert!(cs_column(0, 2, &b(S, part![1, 1, 1])).is_zero());
        assert_eq!(cs_column(0, 2, &b(S, part![2, 1])), b(S, part![2, 1]));
    }

    #[test]
    fn constant_term_examples() {
        assert_eq!(t_minus_x(&SymFunc::one()), SymFunc::one());
        assert!(t_minus_x(&b(S, part![2, 1])).is_zero());
        let g = &b(P, part![2]) + &SymFunc::constant(Scalar::from_integer(3.into()));
        assert_eq!(
            t_minus_x(&g),
            SymFunc::constant(Scalar::from_integer(3.into()))
        );
        assert_eq!(t_minus_x_sum(&g), t_minus_x(&g));
    }

    #[test]
    fn everything_examples() {
        let r = everything_op(H, |mu| Some(basis_element(M, mu)), &b(H, part![2, 1])).unwrap();
        assert_eq!(r, b(M, part![2, 1]));
        let r = everything_op(
            S,
            |mu| {
                Some(
                    mu.add_columns(1, 2)
                        .map_or(SymFunc::zero(), |s| basis_element(S, &s)),
                )
            },
            &b(S, part![1]),
        )
        .unwrap();
        assert_eq!(r, b(S, part![2, 1]));
        let r = everything_op(P, |_| Some(SymFunc::zero()), &b(P, part![3])).unwrap();
        assert!(r.is_zero());
        let missing = everything_op(P, |_| None, &b(P, part![3]));
        assert_eq!(missing, Err(Error::MissingAssignment(part![3])));
    }

    #[test]
    fn operator_spec_validation() {
        assert!(OperatorSpec::new(OpName::TX, Some(1), None).is_err());
        assert!(OperatorSpec::new(OpName::TX, None, None).is_ok());
        assert!(OperatorSpec::new(OpName::CS, Some(0), None).is_err());
        assert!(OperatorSpec::new(OpName::CH, Some(1), Some(2)).is_err());
        assert!(OperatorSpec::new(OpName::RM, Some(0), None).is_err());
        let spec = OperatorSpec::new(OpName::CS, Some(0), Some(2)).unwrap();
        assert_eq!(spec.apply(&b(S, part![2, 1])).unwrap(), b(S, part![2, 1]));
        assert_eq!("RSK".parse::<OpName>().unwrap(), OpName::RSK);
        assert!("XX".parse::<OpName>().is_err());
    }
}
