//! Permutations of `{1, ..., k}` in one-line form.
//!
//! Composition is right-to-left: `p.compose(&q)` maps `i` to `p(q(i))`.
//! Internally points are 0-based; all text forms are 1-based.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::YoungDiagram;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &x in &images {
            if x >= k || seen[x] {
                return Err(Error::Domain(format!(
                    "not a bijection of {{1..{k}}}: image {}",
                    x + 1
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        if one_based.contains(&0) {
            return Err(Error::Domain("one-line images start at 1".into()));
        }
        Permutation::from_images(one_based.iter().map(|&x| x - 1).collect())
    }

    /// Builds a permutation of degree `k` from 1-based cycles; unlisted points are fixed.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..k).collect();
        let mut seen = vec![false; k];
        for cycle in cycles {
            for (idx, &x) in cycle.iter().enumerate() {
                if x == 0 || x > k {
                    return Err(Error::Domain(format!("point {x} outside 1..{k}")));
                }
                if seen[x - 1] {
                    return Err(Error::Domain(format!("point {x} appears twice")));
                }
                seen[x - 1] = true;
                let next = cycle[(idx + 1) % cycle.len()];
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (0..k).collect(),
        }
    }

    /// The canonical long cycle `(1, 2, ..., k)`.
    pub fn long_cycle(k: usize) -> Self {
        Permutation {
            images: (0..k).map(|i| (i + 1) % k.max(1)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Cycles as lists of 0-based points, fixed points included. Each cycle starts at
    /// its smallest point and cycles are ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// For each 0-based point, the index of its cycle in [`Permutation::cycles`].
    pub fn cycle_labels(&self) -> (usize, Vec<usize>) {
        let k = self.degree();
        let mut label = vec![usize::MAX; k];
        let mut count = 0;
        for start in 0..k {
            if label[start] != usize::MAX {
                continue;
            }
            let mut x = start;
            while label[x] == usize::MAX {
                label[x] = count;
                x = self.images[x];
            }
            count += 1;
        }
        (count, label)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_labels().0
    }

    pub fn cycle_type(&self) -> YoungDiagram {
        YoungDiagram::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// `(-1)^(k - number of cycles)`.
    pub fn sign(&self) -> i32 {
        if (self.degree() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 1-based one-line form, e.g. `"2 1 3"`.
    pub fn to_one_line(&self) -> String {
        self.images
            .iter()
            .map(|x| (x + 1).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with fixed points, e.g. `(1,2)(3)`. Degree 0 prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return f.write_str("()");
        }
        for cycle in self.cycles() {
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_permutation(s)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Parses cycle notation `"(1,2)(3)"` or one-line notation `"2 1 3"`.
///
/// In cycle notation the degree is the largest point mentioned, so fixed points
/// beyond the support must be written out, e.g. `"(1,2)(3)"` for degree 3.
pub fn parse_permutation(text: &str) -> Result<Permutation> {
    let t = text.trim();
    if t.starts_with('(') {
        parse_cycles(t, None)
    } else {
        let images = t
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid image {tok:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_one_line(&images)
    }
}

/// Parses cycle notation with an optional explicit degree.
pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Permutation> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {text:?}")))?;
        let body = body_start[..close].trim();
        if !body.is_empty() {
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("invalid point {tok:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        rest = body_start[close + 1..].trim_start();
    }
    let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
    let k = match degree {
        Some(k) if k < max_point => {
            return Err(Error::Domain(format!("point {max_point} exceeds degree {k}")))
        }
        Some(k) => k,
        None => max_point,
    };
    Permutation::from_cycles(k, &cycles)
}

/// All permutations of degree `k` in lexicographic order of their one-line form.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    let mut current: Vec<usize> = (0..k).collect();
    let mut out = vec![Permutation {
        images: current.clone(),
    }];
    loop {
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let pivot = i - 1;
        let j = (pivot + 1..k).rev().find(|&j| current[j] > current[pivot]).unwrap();
        current.swap(pivot, j);
        current[i..].reverse();
        out.push(Permutation {
            images: current.clone(),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        parse_permutation(s).unwrap()
    }

    #[test]
    fn compose_examples() {
        let t = p("(1,2)");
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(p("(1)(2)").compose(&t).unwrap(), t);
        let c = p("(1,2,3)");
        let t3 = p("(1,2)(3)");
        let prod = c.compose(&t3).unwrap();
        assert_eq!(prod.cycle_type().parts(), &[2, 1]);
        assert_eq!(prod.sign(), -1);
        // 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1
        assert_eq!(prod.to_one_line(), "3 2 1");
        assert!(matches!(
            t.compose(&c),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(p("(1,2)(3)").to_string(), "(1,2)(3)");
        assert_eq!(p("2 1 3"), p("(1,2)(3)"));
        assert_eq!(p("(1)").degree(), 1);
        assert_eq!(p("(3,1)").to_string(), "(1,3)(2)");
        assert_eq!(p("()").degree(), 0);
        assert!(matches!(parse_permutation("(1,1)"), Err(Error::Domain(_))));
        assert!(matches!(parse_permutation("2 2"), Err(Error::Domain(_))));
        assert!(matches!(parse_permutation("(1,2"), Err(Error::Parse(_))));
        assert!(matches!(parse_permutation("x y"), Err(Error::Parse(_))));
        assert_eq!(parse_cycles("(1,2)", Some(4)).unwrap().to_string(), "(1,2)(3)(4)");
        assert_eq!(Permutation::long_cycle(4).to_string(), "(1,2,3,4)");
    }

    #[test]
    fn enumerates_symmetric_group() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
        let s3 = all_permutations(3);
        assert_eq!(s3[0].to_one_line(), "1 2 3");
        assert_eq!(s3[5].to_one_line(), "3 2 1");
    }

    fn perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max).prop_flat_map(|k| Just((0..k).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm(7), seed in any::<u64>()) {
            let k = a.degree();
            let all = all_permutations(k.min(5));
            let b = if k <= 5 {
                all[(seed as usize) % all.len()].clone()
            } else {
                a.inverse().compose(&Permutation::long_cycle(k)).unwrap()
            };
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
            prop_assert_eq!(a.cycle_type().size(), k);
            prop_assert_eq!(parse_permutation(&a.to_string()).unwrap(), a.clone());
            prop_assert_eq!(parse_permutation(&a.to_one_line()).unwrap(), a);
        }
    }
}
