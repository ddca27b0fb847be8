//! Young diagrams stored as weakly decreasing lists of row lengths.
//!
//! Rows are indexed from the bottom in the French picture, starting at 0 in
//! code. The empty diagram is the unique partition of 0.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct YoungDiagram {
    parts: Vec<usize>,
}

impl YoungDiagram {
    /// Builds a diagram from row lengths, rejecting zero or increasing parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Domain(format!("part {} is zero", pos + 1)));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::Domain(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(YoungDiagram { parts })
    }

    /// Sorts arbitrary positive lengths into a diagram; zeros are dropped.
    /// Useful for cycle types, where the order of cycles is irrelevant.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        YoungDiagram { parts }
    }

    pub fn empty() -> Self {
        YoungDiagram { parts: Vec::new() }
    }

    /// The single-row diagram `(n)`.
    pub fn row(n: usize) -> Self {
        YoungDiagram::from_unsorted(vec![n])
    }

    /// The single-column diagram `(1, ..., 1)`.
    pub fn column(n: usize) -> Self {
        YoungDiagram::from_parts_unchecked(vec![1; n])
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return YoungDiagram::empty();
        }
        YoungDiagram::from_parts_unchecked(vec![cols; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn row_count(&self) -> usize {
        self.parts.len()
    }

    pub fn column_count(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (0-based), zero above the diagram.
    pub fn row_len(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Whether the cell in row `row`, column `col` (both 0-based) belongs to the diagram.
    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        col < self.row_len(row)
    }

    /// The transposed diagram: `conj[i] = #{j : parts[j] > i}`.
    pub fn conjugate(&self) -> YoungDiagram {
        let width = self.column_count();
        let mut conj = vec![0usize; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p) {
                *c += 1;
            }
        }
        YoungDiagram::from_parts_unchecked(conj)
    }

    /// Cells as `(row, col)` pairs, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of a cell, given the conjugate (pass it in to avoid recomputing).
    pub fn hook_length_with(&self, conj: &YoungDiagram, row: usize, col: usize) -> usize {
        debug_assert!(self.contains_cell(row, col));
        let arm = self.parts[row] - col - 1;
        let leg = conj.parts[col] - row - 1;
        arm + leg + 1
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        self.hook_length_with(&self.conjugate(), row, col)
    }

    /// Product of all hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        self.cells()
            .map(|(r, c)| self.hook_length_with(&conj, r, c))
            .fold(BigUint::one(), |acc, h| acc * h)
    }

    /// `(-1)^(n - number of parts)`: the sign of any permutation with this cycle type.
    pub fn cycle_type_sign(&self) -> i32 {
        if (self.size() - self.row_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Pads with ones up to `n` cells. Used to embed a cycle type of `S_k` into `S_n`.
    pub fn pad_with_ones(&self, n: usize) -> Result<YoungDiagram> {
        let size = self.size();
        if size > n {
            return Err(Error::SizeMismatch {
                diagram: n,
                cycle_type: size,
            });
        }
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, n - size));
        Ok(YoungDiagram::from_parts_unchecked(parts))
    }

    /// Multiplicity of `len` among the parts.
    pub fn multiplicity(&self, len: usize) -> usize {
        self.parts.iter().filter(|&&p| p == len).count()
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for YoungDiagram {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        YoungDiagram::new(parts)
    }
}

impl From<YoungDiagram> for Vec<usize> {
    fn from(d: YoungDiagram) -> Self {
        d.parts
    }
}

/// Parses `"4,3,1"`. Surrounding parentheses are accepted; blank text is the empty diagram.
pub fn parse_partition(text: &str) -> Result<YoungDiagram> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(YoungDiagram::empty());
    }
    let parts = inner
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("invalid part {tok:?} in {text:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    YoungDiagram::new(parts)
}

/// All partitions of `n` in reverse lexicographic order, e.g. `(3), (2,1), (1,1,1)`.
pub fn enumerate_partitions(n: usize) -> Vec<YoungDiagram> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if remaining == 0 {
            out.push(YoungDiagram::from_parts_unchecked(prefix.clone()));
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        let d = parse_partition("4,3,1").unwrap();
        assert_eq!(d.parts(), &[4, 3, 1]);
        assert_eq!(d.size(), 8);
        assert_eq!(parse_partition("1").unwrap().size(), 1);
        assert!(matches!(parse_partition("1,2"), Err(Error::Domain(_))));
        assert!(matches!(parse_partition("3,0"), Err(Error::Domain(_))));
        assert!(matches!(parse_partition("3,a"), Err(Error::Parse(_))));
        assert!(matches!(parse_partition("3,,1"), Err(Error::Parse(_))));
        assert!(parse_partition("").unwrap().is_empty());
        assert_eq!(parse_partition("(2, 1)").unwrap().parts(), &[2, 1]);
    }

    #[test]
    fn conjugate_examples() {
        let d = parse_partition("4,3,1").unwrap();
        assert_eq!(d.conjugate().parts(), &[3, 2, 2, 1]);
        assert_eq!(YoungDiagram::row(5).conjugate(), YoungDiagram::column(5));
        let staircase = parse_partition("2,1").unwrap();
        assert_eq!(staircase.conjugate(), staircase);
        assert_eq!(YoungDiagram::empty().conjugate(), YoungDiagram::empty());
    }

    #[test]
    fn enumeration_counts() {
        let three: Vec<String> = enumerate_partitions(3).iter().map(|d| d.to_string()).collect();
        assert_eq!(three, vec!["3", "2,1", "1,1,1"]);
        assert_eq!(enumerate_partitions(0), vec![YoungDiagram::empty()]);
        // Brute force: count weakly decreasing compositions by dynamic programming over parts.
        fn count(n: usize) -> usize {
            let mut ways = vec![0usize; n + 1];
            ways[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    ways[total] += ways[total - part];
                }
            }
            ways[n]
        }
        for n in 0..=12 {
            assert_eq!(enumerate_partitions(n).len(), count(n), "n={n}");
        }
        assert_eq!(enumerate_partitions(8).len(), 22);
    }

    #[test]
    fn hooks() {
        let d = parse_partition("3,1,1").unwrap();
        assert_eq!(d.hook_length(0, 0), 5);
        assert_eq!(d.hook_product(), BigUint::from(20u32));
    }

    fn diagram() -> impl Strategy<Value = YoungDiagram> {
        proptest::collection::vec(1usize..8, 0..7).prop_map(YoungDiagram::from_unsorted)
    }

    proptest! {
        #[test]
        fn conjugation_is_involutive(d in diagram()) {
            let c = d.conjugate();
            prop_assert_eq!(c.size(), d.size());
            prop_assert_eq!(c.column_count(), d.row_count());
            prop_assert_eq!(c.conjugate(), d);
        }

        #[test]
        fn text_round_trip(d in diagram()) {
            prop_assert_eq!(parse_partition(&d.to_string()).unwrap(), d);
        }
    }
}
