//! Partitions, weak compositions, and Jacobi–Trudi straightening.
//!
//! A [`Partition`] stores only its positive parts, so every partition has a
//! single canonical form and equality is structural. Partitions are ordered
//! first by size and then lexicographically by parts; this is the order in
//! which every sparse map in the crate iterates and prints.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::factorial;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Checks that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The partition `(i^count)`.
    pub fn rectangle(i: u32, count: u32) -> Self {
        if i == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![i; count as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of parts, `|λ|`.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_i = #{ j : λ_j ≥ i }`.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `n_i(λ)`, the number of parts equal to `i`. Parts are positive, so this is
    /// zero for `i = 0`.
    pub fn mult_count(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    /// Multiplicities as `(part, count)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{n_i} n_i!`.
    pub fn z_value(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (i, n)| {
                acc * BigInt::from(i).pow(n) * factorial(n)
            })
    }

    /// `λ + a^k`: add `a` to each of the first `k` rows (padding with zeros).
    /// `None` when `l(λ) > k`.
    pub fn add_columns(&self, a: u32, k: u32) -> Option<Partition> {
        let k = k as usize;
        if self.len() > k {
            return None;
        }
        let parts = (0..k)
            .map(|i| self.parts.get(i).copied().unwrap_or(0) + a)
            .filter(|&p| p > 0)
            .collect();
        Some(Partition { parts })
    }

    /// `λ - (μ)`: multiset difference, `None` unless `μ ⊆ λ` as multisets.
    pub fn remove_parts(&self, mu: &Partition) -> Option<Partition> {
        let mut out = Vec::with_capacity(self.len());
        let mut j = 0;
        for &p in &self.parts {
            if j < mu.parts.len() && mu.parts[j] == p {
                j += 1;
            } else {
                if j < mu.parts.len() && mu.parts[j] > p {
                    return None;
                }
                out.push(p);
            }
        }
        if j == mu.parts.len() {
            Some(Partition { parts: out })
        } else {
            None
        }
    }

    /// `λ - (i)` for a single part. Removing a part of size zero is the identity.
    pub fn remove_part(&self, i: u32) -> Option<Partition> {
        if i == 0 {
            return Some(self.clone());
        }
        let pos = self.parts.iter().position(|&p| p == i)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// `λ + (μ)`: multiset union.
    pub fn insert_parts(&self, mu: &Partition) -> Partition {
        let (a, b) = (&self.parts, &mu.parts);
        let mut parts = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&a[i..]);
        parts.extend_from_slice(&b[j..]);
        Partition { parts }
    }

    /// `λ + (i)`. Inserting a zero part is the identity.
    pub fn insert_part(&self, i: u32) -> Partition {
        if i == 0 {
            return self.clone();
        }
        let pos = self.parts.iter().position(|&p| p < i).unwrap_or(self.len());
        let mut parts = self.parts.clone();
        parts.insert(pos, i);
        Partition { parts }
    }

    /// True when the Young diagram of `self` contains that of `mu`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Length-`k` Jacobi–Trudi row sequence padded with zeros, as signed integers.
    pub fn padded(&self, k: usize) -> Vec<i64> {
        (0..k.max(self.len()))
            .map(|i| self.parts.get(i).copied().unwrap_or(0) as i64)
            .collect()
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected [..], got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part `{}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Shorthand for literal partitions in code and tests. Panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("literal partition")
    };
}

/// A fixed-length sequence of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Composition {
    entries: Vec<u32>,
}

impl Composition {
    pub fn new(entries: Vec<u32>) -> Self {
        Composition { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn as_signed(&self) -> Vec<i64> {
        self.entries.iter().map(|&e| e as i64).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum StraightenResult {
    Zero,
    Signed { sign: i8, shape: Partition },
}

impl StraightenResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, StraightenResult::Zero)
    }
}

/// Normalizes the Jacobi–Trudi determinant `det | h_{s_j - j + i} |` to
/// `±s_λ` or zero. Entries of `s` may be negative.
pub fn straighten(s: &[i64]) -> StraightenResult {
    let mut u: Vec<i64> = s
        .iter()
        .enumerate()
        .map(|(j, &sj)| sj - (j as i64 + 1))
        .collect();
    // Insertion sort into strictly decreasing order, counting transpositions.
    let mut swaps = 0u32;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] <= u[j] {
            if u[j - 1] == u[j] {
                return StraightenResult::Zero;
            }
            u.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    let mut parts = Vec::with_capacity(u.len());
    for (j, &uj) in u.iter().enumerate() {
        let part = uj + j as i64 + 1;
        if part < 0 {
            return StraightenResult::Zero;
        }
        if part > 0 {
            parts.push(part as u32);
        }
    }
    StraightenResult::Signed {
        sign: if swaps % 2 == 0 { 1 } else { -1 },
        shape: Partition { parts },
    }
}

/// Partitions of `n` in decreasing lexicographic order, optionally bounded in
/// length and in largest part.
pub fn partitions_of(n: u32, max_length: Option<usize>, max_part: Option<u32>) -> Partitions {
    let top = max_part.map_or(n, |m| m.min(n));
    let start = if n == 0 {
        Some(Vec::new())
    } else if top == 0 {
        None
    } else {
        let mut v = vec![top; (n / top) as usize];
        if n % top > 0 {
            v.push(n % top);
        }
        Some(v)
    };
    Partitions {
        current: start,
        max_length,
    }
}

/// All partitions with size at most `max_size`, graded, each degree in
/// decreasing lexicographic order.
pub fn partitions_up_to(max_size: u32, max_length: Option<usize>) -> Vec<Partition> {
    (0..=max_size)
        .flat_map(|n| partitions_of(n, max_length, None))
        .collect()
}

pub struct Partitions {
    current: Option<Vec<u32>>,
    max_length: Option<usize>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        loop {
            let cur = self.current.take()?;
            self.current = successor(&cur);
            if self.max_length.map_or(true, |m| cur.len() <= m) {
                return Some(Partition { parts: cur });
            }
        }
    }
}

/// Next partition in decreasing lexicographic order with parts bounded by the
/// current ones.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    let i = parts.iter().rposition(|&p| p > 1)?;
    let v = parts[i] - 1;
    let mut rest: u32 = parts[i + 1..].iter().sum::<u32>() + 1;
    let mut next = parts[..i].to_vec();
    next.push(v);
    while rest > 0 {
        let p = rest.min(v);
        next.push(p);
        rest -= p;
    }
    Some(next)
}

/// Length-`k` weak compositions of `n`, in decreasing lexicographic order.
pub fn compositions_of(n: u32, k: usize) -> Compositions {
    let start = if k == 0 {
        (n == 0).then(Vec::new)
    } else {
        let mut v = vec![0; k];
        v[0] = n;
        Some(v)
    };
    Compositions { current: start }
}

pub struct Compositions {
    current: Option<Vec<u32>>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let cur = self.current.take()?;
        let k = cur.len();
        if k >= 2 {
            if let Some(i) = (0..k - 1).rev().find(|&i| cur[i] > 0) {
                let mut next = cur.clone();
                let tail: u32 = next[i + 1..].iter().sum();
                next[i] -= 1;
                next[i + 1] = tail + 1;
                for x in &mut next[i + 2..] {
                    *x = 0;
                }
                self.current = Some(next);
            }
        }
        Some(Composition { entries: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn collect(n: u32, l: Option<usize>, m: Option<u32>) -> Vec<Vec<u32>> {
        partitions_of(n, l, m).map(|p| p.into_parts()).collect()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![2, 1].conjugate(), part![2, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![4, 2, 2, 1].conjugate(), part![4, 3, 1, 1]);
    }

    #[test]
    fn z_values() {
        assert_eq!(part![1, 1, 1].z_value(), BigInt::from(6));
        assert_eq!(part![2, 1].z_value(), BigInt::from(2));
        assert_eq!(Partition::empty().z_value(), BigInt::from(1));
        assert_eq!(part![2, 2, 1].z_value(), BigInt::from(8));
    }

    #[test]
    fn multiplicity_counts() {
        assert_eq!(part![2, 2, 1].mult_count(2), 2);
        assert_eq!(part![2, 2, 1].mult_count(3), 0);
        assert_eq!(Partition::empty().mult_count(1), 0);
    }

    #[test]
    fn column_addition() {
        assert_eq!(part![2, 1].add_columns(1, 3), Some(part![3, 2, 1]));
        assert_eq!(part![2, 1, 1].add_columns(3, 2), None);
        assert_eq!(Partition::empty().add_columns(2, 2), Some(part![2, 2]));
        assert_eq!(part![2, 1].add_columns(0, 2), Some(part![2, 1]));
        assert_eq!(part![2, 1].add_columns(0, 1), None);
    }

    #[test]
    fn part_removal_and_insertion() {
        assert_eq!(
            part![3, 2, 2, 1].remove_parts(&part![2, 1]),
            Some(part![3, 2])
        );
        assert_eq!(part![3, 2].remove_parts(&part![1]), None);
        assert_eq!(
            part![2, 2].remove_parts(&part![2, 2]),
            Some(Partition::empty())
        );
        assert_eq!(part![2, 2].remove_parts(&part![2]), Some(part![2]));
        assert_eq!(part![2, 2].remove_parts(&part![2, 2, 2]), None);
        assert_eq!(part![3, 1].insert_parts(&part![2, 2]), part![3, 2, 2, 1]);
        assert_eq!(Partition::empty().insert_parts(&part![4]), part![4]);
        assert_eq!(part![1].insert_parts(&part![1]), part![1, 1]);
        assert_eq!(part![3, 1].insert_part(2), part![3, 2, 1]);
        assert_eq!(part![3, 1].remove_part(0), Some(part![3, 1]));
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(
            straighten(&[3, 1]),
            StraightenResult::Signed {
                sign: 1,
                shape: part![3, 1]
            }
        );
        assert_eq!(straighten(&[1, 2]), StraightenResult::Zero);
        assert_eq!(
            straighten(&[0, 2]),
            StraightenResult::Signed {
                sign: -1,
                shape: part![1, 1]
            }
        );
        assert_eq!(
            straighten(&[]),
            StraightenResult::Signed {
                sign: 1,
                shape: Partition::empty()
            }
        );
        // last column entirely below zero
        assert_eq!(straighten(&[2, -3]), StraightenResult::Zero);
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(
            collect(3, None, None),
            vec![vec![3], vec![2, 1], vec![1, 1, 1]]
        );
        assert_eq!(
            collect(4, Some(2), None),
            vec![vec![4], vec![3, 1], vec![2, 2]]
        );
        assert_eq!(collect(0, None, None), vec![Vec::<u32>::new()]);
        assert_eq!(
            collect(5, None, Some(2)),
            vec![vec![2, 2, 1], vec![2, 1, 1, 1], vec![1, 1, 1, 1, 1]]
        );
        assert!(collect(3, None, Some(0)).is_empty());
    }

    #[test]
    fn composition_enumeration() {
        let got: Vec<Vec<u32>> = compositions_of(2, 2)
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(got, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        let got: Vec<Vec<u32>> = compositions_of(0, 3)
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(got, vec![vec![0, 0, 0]]);
        let got: Vec<Vec<u32>> = compositions_of(3, 1)
            .map(|c| c.entries().to_vec())
            .collect();
        assert_eq!(got, vec![vec![3]]);
    }

    #[test]
    fn ordering_is_graded_then_lexicographic() {
        let mut v = vec![part![2], part![1, 1], part![1], Partition::empty()];
        v.sort();
        assert_eq!(v, vec![Partition::empty(), part![1], part![1, 1], part![2]]);
    }

    #[test]
    fn text_form() {
        assert_eq!(part![3, 2, 1].to_string(), "[3,2,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3, 2,1]".parse::<Partition>().unwrap(), part![3, 2, 1]);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }
}
