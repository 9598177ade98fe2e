//! Integer partitions and the diagram combinatorics the rest of the
//! crate is built on.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers.
//! The empty partition is a first-class value of size 0. Cells of the
//! Young diagram are indexed (row, column), 1-based, in English notation.
//!
//! Partitions print and parse as bracketed comma-separated part lists,
//! e.g. `[2,1]`, with `[]` for the empty partition.

use std::fmt;
use std::str::FromStr;

use num::BigUint;
use num::One;

use crate::arith::factorial;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and out-of-order input.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive: {parts:?}"
            )));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    /// Infallible constructor for literals; panics on invalid input.
    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single row (s); the empty partition when s = 0.
    pub fn row(s: usize) -> Self {
        if s == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![s] }
        }
    }

    /// Single column (1^k).
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ₁, with the convention λ₁ = 0 for the empty partition.
    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The k-th part (1-based), 0 beyond the last row.
    pub fn part(&self, k: usize) -> usize {
        if k == 0 {
            0
        } else {
            self.parts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// Whether the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.length()).all(|i| self.part(i) >= other.part(i))
    }

    /// The conjugate (transposed) diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// The padded partition `λ[s]` = (s − |λ|, λ₁, λ₂, …).
    ///
    /// Defined exactly when s ≥ |λ| + λ₁, so that the prepended part is
    /// weakly largest.
    pub fn pad(&self, total: usize) -> Result<PaddedPartition> {
        let min = self.size() + self.first();
        if total < min {
            return Err(Error::PadTooSmall {
                base: self.to_string(),
                total,
                min,
            });
        }
        Ok(PaddedPartition {
            base: self.clone(),
            total,
        })
    }

    /// Hook lengths arm + leg + 1 for every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (1..=row_len)
                    .map(|j| (row_len - j) + (conj.part(j) - (i + 1)) + 1)
                    .collect()
            })
            .collect()
    }

    pub fn hook_product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for row in self.hook_lengths() {
            for h in row {
                acc *= BigUint::from(h);
            }
        }
        acc
    }

    /// n! / ∏ hooks — the number of standard Young tableaux of this shape,
    /// equivalently the dimension of the associated irreducible.
    pub fn hook_dimension(&self) -> BigUint {
        factorial(self.size()) / self.hook_product()
    }

    /// All partitions of `size` with the given bounds, in decreasing
    /// lexicographic order. `max_part` bounds λ₁, `max_length` the number
    /// of parts.
    pub fn enumerate(
        size: usize,
        max_part: Option<usize>,
        max_length: Option<usize>,
    ) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let cap = max_part.unwrap_or(size);
        let len = max_length.unwrap_or(size);
        enumerate_rec(size, cap, len, &mut stack, &mut out);
        out
    }
}

fn enumerate_rec(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: stack.clone(),
        });
        return;
    }
    if max_len == 0 {
        return;
    }
    // Largest next part first gives decreasing lexicographic order.
    for next in (1..=max_part.min(remaining)).rev() {
        // Even max_len copies of `next` must be able to cover the rest.
        if next * max_len < remaining {
            break;
        }
        stack.push(next);
        enumerate_rec(remaining - next, next, max_len - 1, stack, out);
        stack.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[2,1]` as well as the bare comma list `2,1`; an empty
    /// string or `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The padded partition `λ[s]`: `base` is λ, `total` is s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedPartition {
    base: Partition,
    total: usize,
}

impl PaddedPartition {
    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// The honest partition (s − |λ|, λ₁, λ₂, …).
    pub fn as_partition(&self) -> Partition {
        let first = self.total - self.base.size();
        if first == 0 {
            // only reachable for λ = ∅ at s = 0
            return Partition::empty();
        }
        let mut parts = Vec::with_capacity(self.base.length() + 1);
        parts.push(first);
        parts.extend_from_slice(self.base.parts());
        Partition { parts }
    }
}

impl fmt::Display for PaddedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.base, self.total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Transpose oracle: flip the diagram cell by cell.
    fn conjugate_by_cells(p: &Partition) -> Partition {
        let mut cols: Vec<usize> = Vec::new();
        for &row in p.parts() {
            for j in 0..row {
                if cols.len() <= j {
                    cols.push(0);
                }
                cols[j] += 1;
            }
        }
        Partition::new(cols).unwrap()
    }

    /// Enumeration oracle: filter every weakly decreasing positive
    /// sequence built by unrestricted recursion.
    fn enumerate_brute(size: usize, max_part: Option<usize>, max_len: Option<usize>) -> Vec<Vec<usize>> {
        fn rec(remaining: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining == 0 {
                out.push(acc.clone());
                return;
            }
            for next in 1..=cap.min(remaining) {
                acc.push(next);
                rec(remaining - next, next, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size.max(1), &mut Vec::new(), &mut out);
        out.retain(|p| max_part.is_none_or(|m| p.first().copied().unwrap_or(0) <= m));
        out.retain(|p| max_len.is_none_or(|m| p.len() <= m));
        out.sort();
        out.reverse();
        out
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::of(&[2, 1]).conjugate(), Partition::of(&[2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        // single row transposes to a column
        let oracle = conjugate_by_cells(&Partition::of(&[4]));
        assert_eq!(Partition::of(&[4]).conjugate(), oracle);
        assert_eq!(oracle, Partition::of(&[1, 1, 1, 1]));
    }

    #[test]
    fn conjugate_is_involution_up_to_12() {
        for n in 0..=12 {
            for p in Partition::enumerate(n, None, None) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate(), conjugate_by_cells(&p));
            }
        }
    }

    #[test]
    fn pad_examples() {
        let p = Partition::of(&[1, 1]).pad(5).unwrap();
        assert_eq!(p.as_partition(), Partition::of(&[3, 1, 1]));

        let t = Partition::empty().pad(4).unwrap();
        assert_eq!(t.as_partition(), Partition::of(&[4]));

        // boundary: s = |λ| + λ₁
        let b = Partition::of(&[2, 2]).pad(6).unwrap();
        assert_eq!(b.as_partition(), Partition::of(&[2, 2, 2]));
        assert!(matches!(
            Partition::of(&[2, 2]).pad(4),
            Err(Error::PadTooSmall { .. })
        ));
    }

    #[test]
    fn pad_size_and_validity() {
        for n in 0..=8 {
            for p in Partition::enumerate(n, None, None) {
                let min = p.size() + p.first();
                for s in 0..=min + 3 {
                    match p.pad(s) {
                        Ok(padded) => {
                            assert!(s >= min);
                            let q = padded.as_partition();
                            assert_eq!(q.size(), s);
                            // a valid weakly decreasing sequence
                            assert!(Partition::new(q.parts().to_vec()).is_ok() || q.first() == 0);
                        }
                        Err(_) => assert!(s < min),
                    }
                }
            }
        }
    }

    #[test]
    fn hooks_by_hand() {
        assert_eq!(Partition::of(&[2, 1]).hook_lengths(), vec![vec![3, 1], vec![1]]);
        assert_eq!(Partition::of(&[1]).hook_lengths(), vec![vec![1]]);
        let p = Partition::of(&[2, 2, 2]);
        assert_eq!(p.hook_product(), BigUint::from(144u32));
        // 6!/144 = 5
        assert_eq!(p.hook_dimension(), BigUint::from(5u32));
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            Partition::enumerate(3, Some(2), None),
            vec![Partition::of(&[2, 1]), Partition::of(&[1, 1, 1])]
        );
        assert_eq!(Partition::enumerate(0, None, None), vec![Partition::empty()]);
        assert_eq!(
            Partition::enumerate(4, Some(2), None),
            vec![
                Partition::of(&[2, 2]),
                Partition::of(&[2, 1, 1]),
                Partition::of(&[1, 1, 1, 1])
            ]
        );
    }

    #[test]
    fn enumerate_matches_brute_force() {
        for n in 0..=9 {
            for max_part in [None, Some(1), Some(2), Some(3), Some(n)] {
                for max_len in [None, Some(1), Some(2), Some(4)] {
                    let got: Vec<Vec<usize>> = Partition::enumerate(n, max_part, max_len)
                        .into_iter()
                        .map(|p| p.parts().to_vec())
                        .collect();
                    assert_eq!(got, enumerate_brute(n, max_part, max_len), "n={n} {max_part:?} {max_len:?}");
                }
            }
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // the DP recurrence reads best with indices
    fn enumerate_counts_match_recurrence() {
        // p(n) by the textbook two-variable recurrence (count partitions of
        // n with parts ≤ k), independent of the generator above.
        let n_max = 30;
        let mut table = vec![vec![0u64; n_max + 1]; n_max + 1];
        for k in 0..=n_max {
            table[0][k] = 1;
        }
        for n in 1..=n_max {
            for k in 1..=n_max {
                table[n][k] = table[n][k - 1] + if n >= k { table[n - k][k] } else { 0 };
            }
        }
        for n in 0..=n_max {
            let count = Partition::enumerate(n, None, None).len() as u64;
            assert_eq!(count, table[n][n_max], "p({n})");
        }
    }

    #[test]
    fn enumerate_bounds_exchanged_by_conjugation() {
        for n in 0..=10 {
            for k in 1..=n.max(1) {
                let mut by_part: Vec<Partition> = Partition::enumerate(n, Some(k), None)
                    .into_iter()
                    .map(|p| p.conjugate())
                    .collect();
                by_part.sort();
                let mut by_len = Partition::enumerate(n, None, Some(k));
                by_len.sort();
                assert_eq!(by_part, by_len);
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["[2,1]", "[]", "[5]", "[3,3,1]"] {
            let p: Partition = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        assert_eq!("2,1".parse::<Partition>().unwrap(), Partition::of(&[2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("[0]".parse::<Partition>().is_err());
    }
}
