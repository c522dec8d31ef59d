use num::BigInt;

use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, BasisId};
use crate::exec::Exec;
use crate::partition::{partitions_up_to, Partition};
use crate::scalar::{factorial, Scalar};
use crate::symfunc::SymFunc;
use crate::tableaux::{
    bounded_height_pairs, bounded_height_schur_sum, catalan, rs0_power_expansion, syt_count,
    syt_count_brute, theta, CountMethod, SchurSumMethod, UniPoly,
};
use crate::vertex::rs_rows;

/// Catalan numbers `C_0..C_10`, written out independently of [`catalan`].
const CATALAN: [u64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];

pub(super) fn run_counts(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();
    let cases: Vec<(u32, u32)> = (0..=b.count_n)
        .flat_map(|n| (1..=b.count_k).map(move |k| (n, k)))
        .collect();
    t.absorb(sweep(exec, &cases, |&(n, k), t| {
        let values: Vec<BigInt> = CountMethod::ALL
            .iter()
            .map(|&m| bounded_height_pairs(n, k, m))
            .collect();
        t.check(values.iter().all(|v| *v == values[0]), || {
            format!("closed/det/brute disagree at n={n}, k={k}: {values:?}")
        });
        if k == 1 {
            t.same_value(&values[0], &BigInt::from(1), || {
                format!("one-row count n={n}")
            });
        }
        if k == 2 {
            if let Some(&c) = CATALAN.get(n as usize) {
                t.same_value(&values[0], &BigInt::from(c), || format!("Catalan n={n}"));
            }
            t.same_value(&values[0], &catalan(n), || {
                format!("binomial Catalan n={n}")
            });
        }
    }));

    for n in 0..=b.saturation_n {
        for k in n.max(1)..=n.max(1) + 2 {
            for m in CountMethod::ALL {
                t.same_value(&bounded_height_pairs(n, k, m), &factorial(n), || {
                    format!("{m} count n={n}, k={k} vs n!")
                });
            }
        }
    }

    let shapes = partitions_up_to(b.syt_degree, None);
    t.absorb(sweep(exec, &shapes, |l, t| {
        let hook = syt_count(l);
        t.same_value(
            &hook,
            &Scalar::from_integer(syt_count_brute(l).into()),
            || format!("hook length vs enumeration for {l}"),
        );
    }));

    let small = partitions_up_to(b.identity_degree, None);
    t.absorb(sweep(exec, &small, |l, t| {
        let expected = UniPoly::monomial(
            l.size(),
            syt_count(l) / Scalar::from_integer(factorial(l.size())),
        );
        t.same_value(&theta(&basis_arc(BasisId::S, l)), &expected, || {
            format!("theta s{l}")
        });
        for m in small
            .iter()
            .filter(|m| l.size() + m.size() <= b.identity_degree)
        {
            for basis in BasisId::ALL {
                let (x, y) = (basis_arc(basis, l), basis_arc(basis, m));
                t.same_value(&theta(&(&*x * &*y)), &(&theta(&x) * &theta(&y)), || {
                    format!("theta({basis}{l} {basis}{m})")
                });
            }
        }
    }));
    t
}

pub(super) fn run_lemma(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();
    let cases: Vec<(u32, u32)> = (0..=b.lemma_n)
        .flat_map(|n| (1..=b.lemma_k).map(move |k| (n, k)))
        .collect();
    t.absorb(sweep(exec, &cases, |&(n, k), t| {
        let formula = bounded_height_schur_sum(n, k, SchurSumMethod::Formula);
        let operator = bounded_height_schur_sum(n, k, SchurSumMethod::Operator);
        t.same(&formula, &operator, || {
            format!("CS_{{0^{k}}}(h_1^{n}) formula vs operator")
        });
        let mut weighted = SymFunc::zero();
        for l in partitions_up_to(n, Some(k as usize))
            .into_iter()
            .filter(|l| l.size() == n)
        {
            weighted.add_scaled(&basis_arc(BasisId::S, &l), &syt_count(&l));
        }
        t.same(&operator, &weighted, || {
            format!("CS_{{0^{k}}}(h_1^{n}) vs sum f_l s_l")
        });
    }));

    let cases: Vec<(u32, u32)> = (0..=b.rsform_n)
        .flat_map(|n| (1..=b.rsform_k).map(move |k| (n, k)))
        .collect();
    t.absorb(sweep(exec, &cases, |&(n, k), t| {
        let h1n = SymFunc::power_sum(Partition::rectangle(1, n));
        t.same(&rs0_power_expansion(n, k), &rs_rows(0, k, &h1n), || {
            format!("(RS_0)^{k}(h_1^{n}) expansion")
        });
    }));
    t
}
