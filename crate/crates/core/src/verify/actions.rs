use num::BigInt;

use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, BasisId};
use crate::exec::Exec;
use crate::partition::{partitions_up_to, Partition, StraightenResult};
use crate::scalar::{binomial, Scalar};
use crate::symfunc::SymFunc;
use crate::vertex::{
    ce_column, cf_column, ch_column, cm_column, cp_column, cs_column, rf_row, rm_row, rm_row_one,
    rm_rows, rs_power_on_schur, rs_row,
};

fn el(b: BasisId, l: &Partition) -> SymFunc {
    (*basis_arc(b, l)).clone()
}

fn times(c: BigInt, g: SymFunc) -> SymFunc {
    g.scale(&Scalar::from_integer(c))
}

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let shapes = partitions_up_to(b.action_degree, None);
    let mut t = sweep(exec, &shapes, |l, t| {
        let len = l.len() as u32;
        let (p, h, e, m, f, s) = (
            el(BasisId::P, l),
            el(BasisId::H, l),
            el(BasisId::E, l),
            el(BasisId::M, l),
            el(BasisId::F, l),
            el(BasisId::S, l),
        );

        for k in 1..=b.max_k {
            if len < k {
                for a in 0..=b.max_a {
                    let target = l.add_columns(a, k).expect("l(λ) < k");
                    t.same(&cp_column(a, k, &p), &el(BasisId::P, &target), || {
                        format!("CP_{{{a}^{k}}} p{l}")
                    });
                }
            }
            if len <= k {
                let target = l.add_columns(1, k).expect("l(λ) ≤ k");
                t.same(&ch_column(k, &h), &el(BasisId::H, &target), || {
                    format!("CH_{{1^{k}}} h{l}")
                });
                t.same(&ce_column(k, &e), &el(BasisId::E, &target), || {
                    format!("CE_{{1^{k}}} e{l}")
                });
            }
        }

        for a in 1..=b.max_a {
            let n_a = l.mult_count(a) as i64;
            let one_more = l.insert_part(a);
            let expected = times(BigInt::from(1 + n_a), el(BasisId::M, &one_more));
            match rm_row_one(a, &m) {
                Ok(r) => t.same(&r, &expected, || format!("RM1_{a} m{l}")),
                Err(err) => t.check(false, || format!("RM1_{a} m{l}: {err}")),
            }
            match rm_row(a, &m) {
                Ok(r) => t.same(&r, &el(BasisId::M, &one_more), || format!("RM_{a} m{l}")),
                Err(err) => t.check(false, || format!("RM_{a} m{l}: {err}")),
            }
            match rf_row(a, &f) {
                Ok(r) => t.same(&r, &el(BasisId::F, &one_more), || format!("RF_{a} f{l}")),
                Err(err) => t.check(false, || format!("RF_{a} f{l}: {err}")),
            }
            for k in 0..=b.max_k {
                let block = l.insert_parts(&Partition::rectangle(a, k));
                let c = binomial(n_a + k as i64, k as i64);
                t.same(
                    &rm_rows(a, k, &m),
                    &times(c, el(BasisId::M, &block)),
                    || format!("RMK_{{{a},{k}}} m{l}"),
                );
                if k == 0 {
                    continue;
                }
                let (cm_expected, cf_expected) = match l.add_columns(a, k) {
                    Some(target) => (el(BasisId::M, &target), el(BasisId::F, &target)),
                    None => (SymFunc::zero(), SymFunc::zero()),
                };
                t.same(&cm_column(a, k, &m), &cm_expected, || {
                    format!("CM_{{{a}^{k}}} m{l}")
                });
                t.same(&cf_column(a, k, &f), &cf_expected, || {
                    format!("CF_{{{a}^{k}}} f{l}")
                });
            }
        }

        for a in 0..=b.max_a {
            let image = rs_row(a, &s);
            if a >= l.first() {
                t.same(&image, &el(BasisId::S, &l.insert_part(a)), || {
                    format!("RS_{a} s{l}")
                });
            }
            let straightened = match rs_power_on_schur(a, 1, l) {
                StraightenResult::Zero => SymFunc::zero(),
                StraightenResult::Signed { sign, shape } => {
                    times(BigInt::from(sign), el(BasisId::S, &shape))
                }
            };
            t.same(&image, &straightened, || {
                format!("RS_{a} s{l} by straightening")
            });
            for k in 0..=b.max_k {
                let expected = match l.add_columns(a, k) {
                    Some(target) => el(BasisId::S, &target),
                    None => SymFunc::zero(),
                };
                t.same(&cs_column(a, k, &s), &expected, || {
                    format!("CS_{{{a}^{k}}} s{l}")
                });
            }
        }
    });

    // CP at l(μ) = k lies outside the theorem; record what the sum does.
    let (mut holds, mut total) = (0usize, 0usize);
    for l in shapes
        .iter()
        .filter(|l| (1..=b.max_k as usize).contains(&l.len()))
    {
        let k = l.len() as u32;
        let p = el(BasisId::P, l);
        for a in 0..=b.max_a {
            let target = l.add_columns(a, k).expect("l(λ) = k");
            total += 1;
            if cp_column(a, k, &p) == el(BasisId::P, &target) {
                holds += 1;
            }
        }
    }
    t.note(format!(
        "CP_{{a^k}} p_mu = p_{{mu+a^k}} at l(mu) = k: holds in {holds} of {total} cases (not asserted)"
    ));
    t
}
