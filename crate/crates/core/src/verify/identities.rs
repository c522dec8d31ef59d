use std::collections::BTreeMap;
use std::sync::Arc;

use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, BasisId};
use crate::exec::Exec;
use crate::partition::{partitions_up_to, Partition};
use crate::scalar::{binomial, factorial, sign, Scalar};
use crate::symfunc::SymFunc;
use crate::tableaux::syt_count;
use crate::vertex::{
    ce_column, cf_column, ch_column, cm_column, cs_column, everything_op, everything_op_sum,
    rf_row, rm_row, rm_row_one, rm_rows, rs_row, rs_rows, skew_sum, t_minus_x, t_minus_x_dual_form,
    t_minus_x_sum,
};

fn el(b: BasisId, l: &Partition) -> SymFunc {
    (*basis_arc(b, l)).clone()
}

fn iterate(n: u32, g: &SymFunc, f: impl Fn(&SymFunc) -> SymFunc) -> SymFunc {
    (0..n).fold(g.clone(), |acc, _| f(&acc))
}

fn omega_conjugate(g: &SymFunc, f: impl Fn(&SymFunc) -> SymFunc) -> SymFunc {
    f(&g.omega()).omega()
}

/// `Σ_λ (-1)^{|λ|} images[λ] · skew(λ)^⊥ g`.
fn relation(
    g: &SymFunc,
    images: &BTreeMap<Partition, SymFunc>,
    skew: impl Fn(&Partition) -> Arc<SymFunc>,
) -> SymFunc {
    skew_sum(g, images.keys().cloned(), skew, |l| {
        Some((sign(l.size()), Arc::new(images[l].clone())))
    })
}

fn image_table(
    shapes: &[Partition],
    keep: impl Fn(&Partition) -> bool,
    image: impl Fn(&Partition) -> SymFunc,
) -> BTreeMap<Partition, SymFunc> {
    shapes
        .iter()
        .filter(|l| keep(l))
        .map(|l| (l.clone(), image(l)))
        .collect()
}

#[derive(Clone, Copy, Debug)]
enum Pair {
    /// CH/CE relations (i) and (ii).
    Columns(u32),
    /// CM/RM^{(k)} relations (iii) and (iv).
    Monomial(u32, u32),
    /// (RS_a)^k / CS relations (v).
    Schur(u32, u32),
}

fn relation_pairs(
    b: &Bounds,
    inputs: &[(Partition, SymFunc)],
    shapes: &[Partition],
    pair: Pair,
    t: &mut Tally,
) {
    let skew = |basis: BasisId| move |l: &Partition| basis_arc(basis, l);
    let schur_conj = |l: &Partition| basis_arc(BasisId::S, &l.conjugate());
    match pair {
        Pair::Columns(k) => {
            let short = |l: &Partition| l.len() <= k as usize;
            let ce = image_table(shapes, short, |l| ce_column(k, &el(BasisId::E, l)));
            let ch = image_table(shapes, short, |l| ch_column(k, &el(BasisId::H, l)));
            for (mu, g) in inputs {
                t.same(
                    &relation(g, &ce, skew(BasisId::M)),
                    &ch_column(k, g),
                    || format!("CH_{{1^{k}}} from CE images on p{mu}"),
                );
                t.same(
                    &relation(g, &ch, skew(BasisId::F)),
                    &ce_column(k, g),
                    || format!("CE_{{1^{k}}} from CH images on p{mu}"),
                );
            }
        }
        Pair::Monomial(a, k) => {
            let rmk = image_table(shapes, |_| true, |l| rm_rows(a, k, &el(BasisId::M, l)));
            let cm = image_table(shapes, |_| true, |l| cm_column(a, k, &el(BasisId::M, l)));
            for (mu, g) in inputs {
                t.same(
                    &relation(g, &rmk, skew(BasisId::E)),
                    &cm_column(a, k, g),
                    || format!("CM_{{{a}^{k}}} from RM^({k}) images on p{mu}"),
                );
                t.same(
                    &relation(g, &cm, skew(BasisId::E)),
                    &rm_rows(a, k, g),
                    || format!("RM^({k})_{a} from CM images on p{mu}"),
                );
            }
        }
        Pair::Schur(a, k) => {
            let cs = image_table(shapes, |_| true, |l| cs_column(a, k, &el(BasisId::S, l)));
            let rs = image_table(shapes, |_| true, |l| rs_rows(a, k, &el(BasisId::S, l)));
            let assignment = |mu: &Partition| {
                Some(
                    mu.add_columns(a, k)
                        .map_or_else(SymFunc::zero, |s| el(BasisId::S, &s)),
                )
            };
            for (mu, g) in inputs {
                let cs_g = cs_column(a, k, g);
                t.same(&relation(g, &cs, schur_conj), &rs_rows(a, k, g), || {
                    format!("(RS_{a})^{k} from CS images on p{mu}")
                });
                t.same(&relation(g, &rs, schur_conj), &cs_g, || {
                    format!("CS_{{{a}^{k}}} from RS images on p{mu}")
                });
                match everything_op(BasisId::S, assignment, g) {
                    Ok(r) => t.same(&cs_g, &r, || {
                        format!("CS_{{{a}^{k}}} as everything operator on p{mu}")
                    }),
                    Err(e) => t.check(false, || format!("everything operator on p{mu}: {e}")),
                }
                if mu.size() <= b.identity_degree.min(4) {
                    let direct = everything_op(BasisId::S, assignment, g);
                    let summed = everything_op_sum(BasisId::S, assignment, g);
                    t.same_value(&direct, &summed, || {
                        format!("everything operator sum form on p{mu}")
                    });
                }
            }
        }
    }
}

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();
    let d = b.identity_degree;
    let shapes = partitions_up_to(d, None);
    let inputs: Vec<(Partition, SymFunc)> = shapes
        .iter()
        .map(|l| (l.clone(), SymFunc::power_sum(l.clone())))
        .collect();

    // Row operators on Schur functions.
    t.absorb(sweep(exec, &shapes, |mu, t| {
        let s = el(BasisId::S, mu);
        for a in 0..=b.max_a {
            for c in 1..=b.max_a + 1 {
                let left = rs_row(a, &rs_row(c, &s));
                let right = -rs_row(c - 1, &rs_row(a + 1, &s));
                t.same(&left, &right, || {
                    format!("RS_{a} RS_{c} = -RS_{} RS_{} on s{mu}", c - 1, a + 1)
                });
            }
            t.same(&rs_row(a, &rs_row(a + 1, &s)), &SymFunc::zero(), || {
                format!("RS_{a} RS_{} on s{mu}", a + 1)
            });
            for k in 0..=b.row_power_k {
                let composed = iterate(k, &s, |g| rs_row(a, g));
                t.same(&rs_rows(a, k, &s), &composed, || {
                    format!("(RS_{a})^{k} on s{mu}")
                });
            }
        }
    }));

    // Monomial row operators.
    let row_shapes = partitions_up_to(b.row_power_degree, None);
    t.absorb(sweep(exec, &row_shapes, |mu, t| {
        let m = el(BasisId::M, mu);
        for a in 1..=b.max_a {
            for k in 0..=b.row_power_k {
                let powered = iterate(k, &m, |g| rm_row_one(a, g).expect("a ≥ 1"));
                let scaled = rm_rows(a, k, &m).scale(&Scalar::from_integer(factorial(k)));
                t.same(&powered, &scaled, || {
                    format!("(RM1_{a})^{k} = {k}! RM^({k})_{a} on m{mu}")
                });
            }
            for c in 1..=b.max_a {
                let ab = rm_row(a, &rm_row(c, &m).expect("c ≥ 1")).expect("a ≥ 1");
                let ba = rm_row(c, &rm_row(a, &m).expect("a ≥ 1")).expect("c ≥ 1");
                t.same(&ab, &ba, || format!("RM_{a} RM_{c} on m{mu}"));
            }
        }
    }));

    // ω-conjugations, as operators on the power sums.
    t.absorb(sweep(exec, &inputs, |(mu, g), t| {
        for k in 1..=b.max_k {
            t.same(
                &ce_column(k, g),
                &omega_conjugate(g, |x| ch_column(k, x)),
                || format!("CE_{{1^{k}}} = w CH w on p{mu}"),
            );
            for a in 0..=b.max_a {
                t.same(
                    &cf_column(a, k, g),
                    &omega_conjugate(g, |x| cm_column(a, k, x)),
                    || format!("CF_{{{a}^{k}}} = w CM w on p{mu}"),
                );
            }
        }
        for a in 1..=b.max_a {
            let conj = omega_conjugate(g, |x| rm_row(a, x).expect("a ≥ 1"));
            t.same(&rf_row(a, g).expect("a ≥ 1"), &conj, || {
                format!("RF_{a} = w RM w on p{mu}")
            });
        }
    }));

    // Relation pairs, each parameter choice sharing one image table.
    let mut pairs: Vec<Pair> = (1..=b.max_k).map(Pair::Columns).collect();
    for k in 1..=b.max_k {
        pairs.extend((1..=b.max_a).map(|a| Pair::Monomial(a, k)));
        pairs.extend((0..=b.max_a).map(|a| Pair::Schur(a, k)));
    }
    t.absorb(sweep(exec, &pairs, |pair, t| {
        relation_pairs(b, &inputs, &shapes, *pair, t)
    }));

    // Constant term.
    let ct_shapes = partitions_up_to(b.constant_term_degree, None);
    t.absorb(sweep(exec, &ct_shapes, |l, t| {
        for basis in BasisId::ALL {
            let g = el(basis, l);
            t.same(&t_minus_x_sum(&g), &t_minus_x(&g), || {
                format!("T_-X sum form on {basis}{l}")
            });
        }
    }));
    t.absorb(sweep(exec, &inputs, |(mu, g), t| {
        let direct = t_minus_x(g);
        for basis in BasisId::ALL {
            t.same(&t_minus_x_dual_form(basis, g), &direct, || {
                format!("T_-X through the {basis} dual pair on p{mu}")
            });
        }
    }));

    // s_λ^⊥ (h_1^n) = binom(n, |λ|) f_λ h_1^{n-|λ|}.
    for n in 0..=b.skew_relation_n {
        let h1n = SymFunc::power_sum(Partition::rectangle(1, n));
        for l in partitions_up_to(n, None) {
            let rest = SymFunc::power_sum(Partition::rectangle(1, n - l.size()));
            let c = syt_count(&l) * Scalar::from_integer(binomial(n as i64, l.size() as i64));
            t.same(
                &basis_arc(BasisId::S, &l).skew(&h1n),
                &rest.scale(&c),
                || format!("s{l} skew of h_1^{n}"),
            );
        }
    }
    t
}
