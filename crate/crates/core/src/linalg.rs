//! Exact solution of overdetermined linear systems over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free (Bareiss)
//! elimination, so every intermediate entry stays an integer.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Outcome of [`solve_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<BigRational>),
    /// The system has no solution; `row` is an equation violated after reduction.
    Inconsistent { row: usize },
}

fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

/// Solves `A x = b` for `x`, requiring full column rank.
///
/// Extra rows beyond the number of unknowns act as consistency checks.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Solution> {
    let rows = a.len();
    assert_eq!(rows, b.len(), "one right-hand side per equation");
    let cols = a.first().map_or(0, Vec::len);

    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full = row.clone();
            full.push(rhs.clone());
            clear_denominators(&full)
        })
        .collect();

    let mut prev_pivot = BigInt::one();
    let mut rank = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(sel) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, sel);
        let pivot = m[rank][col].clone();
        let (upper, lower) = m.split_at_mut(rank + 1);
        let pivot_row = &upper[rank];
        for row in lower.iter_mut() {
            let factor = row[col].clone();
            for c in col..=cols {
                // Bareiss step: the division by the previous pivot is exact
                row[c] = (&pivot * &row[c] - &factor * &pivot_row[c]) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        pivot_cols.push(col);
        rank += 1;
    }

    if let Some(bad) = (rank..rows).find(|&r| !m[r][cols].is_zero()) {
        return Ok(Solution::Inconsistent { row: bad });
    }
    if rank < cols {
        return Err(Error::RankDeficient { rank, unknowns: cols });
    }

    // back-substitution on the upper-triangular integer system
    let mut x = vec![BigRational::zero(); cols];
    for i in (0..rank).rev() {
        let col = pivot_cols[i];
        let mut acc = BigRational::from_integer(m[i][cols].clone());
        for c in (col + 1)..cols {
            if !m[i][c].is_zero() {
                acc -= BigRational::from_integer(m[i][c].clone()) * &x[c];
            }
        }
        x[col] = acc / BigRational::from_integer(m[i][col].clone());
    }
    Ok(Solution::Unique(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn solves_overdetermined_consistent_system() {
        // x = 1/2, y = -3
        let sol = [q(1, 2), q(-3, 1)];
        let a = vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(2, 3), q(0, 1)],
            vec![q(1, 1), q(-1, 1)],
            vec![q(5, 7), q(2, 1)],
        ];
        let b: Vec<_> = a.iter().map(|r| &r[0] * &sol[0] + &r[1] * &sol[1]).collect();
        assert_eq!(solve_exact(&a, &b).unwrap(), Solution::Unique(sol.to_vec()));
    }

    #[test]
    fn detects_inconsistency_and_rank() {
        let a = vec![vec![q(1, 1)], vec![q(2, 1)]];
        let b = vec![q(1, 1), q(3, 1)];
        assert!(matches!(solve_exact(&a, &b).unwrap(), Solution::Inconsistent { .. }));

        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        let b = vec![q(1, 1), q(2, 1)];
        assert!(matches!(
            solve_exact(&a, &b),
            Err(Error::RankDeficient { rank: 1, unknowns: 2 })
        ));
    }

    #[test]
    fn three_by_three() {
        let a = vec![
            vec![q(0, 1), q(2, 1), q(1, 1)],
            vec![q(1, 1), q(1, 1), q(1, 1)],
            vec![q(3, 1), q(0, 1), q(-1, 1)],
        ];
        let sol = [q(1, 1), q(-2, 1), q(5, 3)];
        let b: Vec<_> = a
            .iter()
            .map(|r| r.iter().zip(&sol).map(|(x, y)| x * y).sum())
            .collect();
        assert_eq!(solve_exact(&a, &b).unwrap(), Solution::Unique(sol.to_vec()));
    }
}
