use std::sync::Arc;

use num::{One, Zero};

use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, expand, jacobi_trudi, r_coefficient, BasisId};
use crate::exec::Exec;
use crate::partition::{partitions_of, partitions_up_to, Partition};
use crate::scalar::Scalar;
use crate::symfunc::SymFunc;

fn el(b: BasisId, l: &Partition) -> Arc<SymFunc> {
    basis_arc(b, l)
}

fn row(b: BasisId, n: u32) -> Arc<SymFunc> {
    el(b, &Partition::rectangle(n, 1))
}

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Ordered pairs `(λ, μ)` with `|λ| + |μ| ≤ d`.
fn pairs(d: u32) -> Vec<(Partition, Partition)> {
    let all = partitions_up_to(d, None);
    let mut out = Vec::new();
    for l in &all {
        for m in &all {
            if l.size() + m.size() <= d {
                out.push((l.clone(), m.clone()));
            }
        }
    }
    out
}

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();
    let shapes = partitions_up_to(b.ring_degree, None);

    t.absorb(sweep(exec, &shapes, |l, t| {
        for basis in BasisId::ALL {
            let x = el(basis, l);
            for m in &shapes {
                let expected = if l == m {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
                t.same_value(&x.inner_product(&basis.dual_element(m)), &expected, || {
                    format!("<{basis}{l}, dual of {basis}{m}>")
                });
            }
            t.same(&x.omega().omega(), &x, || {
                format!("omega twice on {basis}{l}")
            });
            for target in BasisId::ALL {
                let e = expand(&x, target);
                t.same(&e.to_symfunc(), &x, || {
                    format!("{basis}{l} through basis {target}")
                });
                if target == basis {
                    t.check(e.terms.len() == 1 && e.coefficient(l).is_one(), || {
                        format!("{basis}{l} in its own basis is {e}")
                    });
                }
            }
        }
        t.same(&el(BasisId::M, l).omega(), &el(BasisId::F, l), || {
            format!("omega m{l}")
        });
        t.same(&el(BasisId::H, l).omega(), &el(BasisId::E, l), || {
            format!("omega h{l}")
        });
        t.same(
            &el(BasisId::S, l).omega(),
            &el(BasisId::S, &l.conjugate()),
            || format!("omega s{l}"),
        );
        let seq = l.padded(l.len());
        t.same(&jacobi_trudi(&seq), &el(BasisId::S, l), || {
            format!("Jacobi-Trudi {l}")
        });
    }));

    for n in 1..=b.ring_degree {
        let mut alternating = SymFunc::zero();
        for r in 0..=n {
            let term = &*row(BasisId::E, r) * &*row(BasisId::H, n - r);
            alternating.add_scaled(&term, &int(if r % 2 == 0 { 1 } else { -1 }));
        }
        t.same(&alternating, &SymFunc::zero(), || {
            format!("sum (-1)^r e_r h_(n-r), n={n}")
        });

        let mut via_r = SymFunc::zero();
        for mu in partitions_of(n, None, None) {
            via_r.add_scaled(
                &el(BasisId::H, &mu),
                &Scalar::from_integer(r_coefficient(&mu)),
            );
        }
        t.same(&via_r, &row(BasisId::E, n), || {
            format!("e_{n} as sum r_mu h_mu")
        });
    }

    for mu in shapes.iter().filter(|m| !m.is_empty()) {
        let mut total = Scalar::zero();
        for j in 0..=mu.first() {
            if let Some(rest) = mu.remove_part(j) {
                let r = Scalar::from_integer(r_coefficient(&rest));
                total += if j % 2 == 0 { r } else { -r };
            }
        }
        t.same_value(&total, &Scalar::zero(), || {
            format!("alternating r-sum for {mu}")
        });
    }

    let d = b.product_degree;
    let triples = pairs(d);
    t.absorb(sweep(exec, &triples, |(g, q), t| {
        for pb in partitions_of(g.size() + q.size(), None, None) {
            for gb in BasisId::ALL {
                let gx = el(gb, g);
                for qb in BasisId::ALL {
                    let (p, qx) = (el(qb, &pb), el(qb, q));
                    let left = gx.skew(&p).inner_product(&qx);
                    let right = p.inner_product(&(&*gx * &*qx));
                    t.same_value(&left, &right, || {
                        format!("adjointness g={gb}{g}, P={qb}{pb}, Q={qb}{q}")
                    });
                }
            }
        }
    }));

    t.absorb(sweep(exec, &triples, |(l, m), t| {
        for basis in BasisId::ALL {
            let (p, q) = (el(basis, l), el(basis, m));
            let pq = &*p * &*q;
            for k in 1..=l.size() + m.size() {
                for skewing in [BasisId::H, BasisId::E] {
                    let mut split = SymFunc::zero();
                    for i in 0..=k {
                        split += &(&row(skewing, i).skew(&p) * &row(skewing, k - i).skew(&q));
                    }
                    t.same(&row(skewing, k).skew(&pq), &split, || {
                        format!("{skewing}_{k} skew of {basis}{l}*{basis}{m}")
                    });
                }
                let pk = row(BasisId::P, k);
                let leibniz = &(&pk.skew(&p) * &*q) + &(&*p * &pk.skew(&q));
                t.same(&pk.skew(&pq), &leibniz, || {
                    format!("p_{k} skew of {basis}{l}*{basis}{m}")
                });
            }
        }
    }));

    let power_inputs = partitions_up_to(d, None);
    t.absorb(sweep(exec, &power_inputs, |mu, t| {
        let pm = SymFunc::power_sum(mu.clone());
        for k in 1..=d {
            let pk = row(BasisId::P, k);
            for j in 1..=d {
                let pj = row(BasisId::P, j);
                let left = &pk.skew(&(&*pj * &pm)) - &(&*pj * &pk.skew(&pm));
                let right = if j == k {
                    pm.scale(&int(k as i64))
                } else {
                    SymFunc::zero()
                };
                t.same(&left, &right, || format!("[p_{k}^perp, p_{j}] on p{mu}"));
            }
        }
        for k in 1..=d.saturating_sub(mu.size()) {
            let pk = row(BasisId::P, k);
            for l in partitions_up_to(mu.size() + k, None) {
                let pl = el(BasisId::P, &l);
                let left = pl.skew(&(&*pk * &pm));
                let mut right = &*pk * &pl.skew(&pm);
                if let Some(rest) = l.remove_part(k) {
                    let coeff = int(k as i64 * l.mult_count(k) as i64);
                    right.add_scaled(&el(BasisId::P, &rest).skew(&pm), &coeff);
                }
                t.same(&left, &right, || format!("p{l} skew of p_{k} p{mu}"));
            }
        }
    }));

    t.absorb(sweep(exec, &triples, |(l, m), t| {
        let ml = el(BasisId::M, l);
        for basis in [BasisId::P, BasisId::M, BasisId::S] {
            let p = el(basis, m);
            let prod = &*ml * &*p;
            for k in 0..=l.size() + m.size() {
                let mut h_side = SymFunc::zero();
                for i in 0..=k {
                    if let Some(rest) = l.remove_part(i) {
                        h_side += &(&*el(BasisId::M, &rest) * &row(BasisId::H, k - i).skew(&p));
                    }
                }
                t.same(&row(BasisId::H, k).skew(&prod), &h_side, || {
                    format!("h_{k} skew of m{l}*{basis}{m}")
                });

                let mut e_side = SymFunc::zero();
                for nu in partitions_up_to(k, None) {
                    if let Some(rest) = l.remove_parts(&nu) {
                        let term =
                            &*el(BasisId::M, &rest) * &row(BasisId::E, k - nu.size()).skew(&p);
                        e_side.add_scaled(&term, &Scalar::from_integer(r_coefficient(&nu)));
                    }
                }
                t.same(&row(BasisId::E, k).skew(&prod), &e_side, || {
                    format!("e_{k} skew of m{l}*{basis}{m}")
                });
            }
        }
    }));

    t.absorb(sweep(exec, &partitions_up_to(d, None), |l, t| {
        for k in 1..=4 {
            let mut rule = SymFunc::zero();
            for i in 0..=l.first() {
                if let Some(rest) = l.remove_part(i) {
                    let coeff = int(1 + l.mult_count(k + i) as i64);
                    rule.add_scaled(&el(BasisId::M, &rest.insert_part(k + i)), &coeff);
                }
            }
            t.same(&(&*row(BasisId::M, k) * &*el(BasisId::M, l)), &rule, || {
                format!("m_({k}) * m{l}")
            });
        }
    }));

    t
}
