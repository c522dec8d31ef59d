use num::BigInt;

use super::{sweep, Bounds, Tally};
use crate::exec::Exec;
use crate::partition::{
    compositions_of, partitions_of, partitions_up_to, straighten, Partition, StraightenResult,
};
use crate::scalar::binomial;

/// Partition numbers from Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0;
        for j in 1.. {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            total += sign * p[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p.into_iter().map(|x| x as u64).collect()
}

/// Every permutation of `0..n` with its sign, by Heap's algorithm.
fn permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![(a.clone(), 1i8)];
    let mut c = vec![0usize; n];
    let mut sign = 1i8;
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub(super) fn run(b: &Bounds, exec: Exec) -> Tally {
    let mut t = Tally::default();

    let big = partitions_up_to(b.conjugate_degree, None);
    t.absorb(sweep(exec, &big, |l, t| {
        t.same_value(&l.conjugate().conjugate(), l, || {
            format!("conjugate twice {l}")
        });
    }));

    let small = partitions_up_to(b.partition_degree, None);
    t.absorb(sweep(exec, &small, |l, t| {
        for a in 0..=b.max_a {
            for k in 0..=b.max_k {
                if let Some(r) = l.add_columns(a, k) {
                    t.same_value(&r.size(), &(l.size() + a * k), || format!("|{l}+{a}^{k}|"));
                }
            }
        }
        for mu in &small {
            t.same_value(
                &l.insert_parts(mu).remove_parts(mu),
                &Some(l.clone()),
                || format!("remove {mu} after inserting into {l}"),
            );
        }
    }));

    let shapes = partitions_up_to(b.partition_degree.min(5), None);
    t.absorb(sweep(exec, &shapes, |l, t| {
        let len = l.len() + 1;
        let u: Vec<i64> = l
            .padded(len)
            .into_iter()
            .enumerate()
            .map(|(j, x)| x - (j as i64 + 1))
            .collect();
        for (perm, sign) in permutations(len) {
            let seq: Vec<i64> = perm
                .iter()
                .enumerate()
                .map(|(j, &p)| u[p] + j as i64 + 1)
                .collect();
            t.same_value(
                &straighten(&seq),
                &StraightenResult::Signed {
                    sign,
                    shape: l.clone(),
                },
                || format!("straighten {seq:?}"),
            );
        }
    }));

    let top = b.conjugate_degree.min(9);
    let expected = partition_numbers(top as usize);
    for n in 0..=top {
        let count = partitions_of(n, None, None).count() as u64;
        t.same_value(&count, &expected[n as usize], || format!("p({n})"));
        let mut seen: Vec<Partition> = partitions_of(n, None, None).collect();
        seen.dedup();
        t.same_value(&(seen.len() as u64), &count, || {
            format!("distinct partitions of {n}")
        });
    }
    for n in 0..=b.partition_degree {
        for k in 1..=b.count_k as usize {
            let count = BigInt::from(compositions_of(n, k).count());
            let expected = binomial(n as i64 + k as i64 - 1, k as i64 - 1);
            t.same_value(&count, &expected, || {
                format!("compositions of {n} into {k}")
            });
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pentagonal_numbers() {
        assert_eq!(partition_numbers(9), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn heap_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        let odd = perms.iter().filter(|(_, s)| *s < 0).count();
        assert_eq!(odd, 3);
        for (p, s) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            assert_eq!(s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }
}
