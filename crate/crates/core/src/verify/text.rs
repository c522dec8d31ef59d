use super::{sweep, Bounds, Tally};
use crate::basis::{basis_arc, expand, BasisId};
use crate::exec::Exec;
use crate::expr::{format_expression, parse_expression};
use crate::partition::partitions_up_to;

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let shapes = partitions_up_to(b.text_degree, None);
    sweep(exec, &shapes, |l, t| {
        for source in BasisId::ALL {
            let g = basis_arc(source, l);
            for target in BasisId::ALL {
                let text = format_expression(&g, target);
                match parse_expression(&text) {
                    Ok(back) => t.same(&back, &g, || format!("{source}{l} printed as {text}")),
                    Err(e) => t.check(false, || format!("{source}{l} printed as {text}: {e}")),
                }
                let json = expand(&g, target).to_json().to_string();
                let again = expand(&g, target).to_json().to_string();
                t.same_value(&json, &again, || {
                    format!("JSON for {source}{l} in {target}")
                });
            }
        }
    })
}
