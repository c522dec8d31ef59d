use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, BasisId};
use crate::exec::Exec;
use crate::oracle::{check_conversion, realize, realize_symfunc};
use crate::partition::{partitions_up_to, Partition};

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();
    let v = b.oracle_vars;
    let shapes = partitions_up_to(b.oracle_degree, None);

    let cases: Vec<(BasisId, Partition)> = BasisId::ALL
        .iter()
        .flat_map(|&basis| shapes.iter().map(move |l| (basis, l.clone())))
        .collect();
    t.absorb(sweep(exec, &cases, |(basis, l), t| {
        let outcome = check_conversion(*basis, l, v);
        t.check(outcome.is_ok(), || outcome.unwrap_err().to_string());
    }));

    t.absorb(sweep(exec, &cases, |(basis, l), t| {
        let x = basis_arc(*basis, l);
        let rx = realize_symfunc(&x, v);
        for m in shapes
            .iter()
            .filter(|m| *m >= l && l.size() + m.size() <= b.oracle_degree)
        {
            for other in BasisId::ALL {
                let y = basis_arc(other, m);
                let product = realize_symfunc(&(&*x * &*y), v);
                t.same_value(&product, &(&rx * &realize_symfunc(&y, v)), || {
                    format!("realization of {basis}{l} * {other}{m}")
                });
            }
        }
    }));

    let w = b.symmetry_vars;
    let sym_cases: Vec<(BasisId, Partition)> = cases
        .iter()
        .filter(|(_, l)| l.size() <= b.symmetry_degree)
        .cloned()
        .collect();
    t.absorb(sweep(exec, &sym_cases, |(basis, l), t| {
        let poly = realize(*basis, l, w);
        for i in 0..w.saturating_sub(1) {
            t.same_value(&poly.transpose(i, i + 1), &poly, || {
                format!(
                    "{basis}{l} in {w} variables under x{} <-> x{}",
                    i + 1,
                    i + 2
                )
            });
        }
    }));
    t
}
