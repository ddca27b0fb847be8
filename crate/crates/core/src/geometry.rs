//! Dilations, profiles in the Russian convention, and the moments `S_i`.
//!
//! French coordinates put the cell in row `r`, column `c` (1-based) on the unit
//! square `[c-1, c] x [r-1, r]`. Russian coordinates are `u = x - y`,
//! `v = x + y`, so the corner of a cell with content `c - r` sits at `u = c - r`.
//! The profile `ω` is the upper boundary of the rotated diagram.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::YoungDiagram;
use crate::poly::UnivariatePoly;

/// Replaces every cell by an `s x s` block: each part `λ_i` becomes `s` copies of `s·λ_i`.
pub fn scale(lambda: &YoungDiagram, s: usize) -> YoungDiagram {
    let parts = lambda
        .parts()
        .iter()
        .flat_map(|&p| std::iter::repeat_n(p * s, s))
        .collect();
    YoungDiagram::from_unsorted(parts)
}

/// Piecewise-linear profile given by its corners. Outside the first and last
/// breakpoint `ω(u) = |u|`; between consecutive breakpoints it is linear with
/// slope `±1`. All corners have integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    breakpoints: Vec<(i64, i64)>,
}

impl Profile {
    pub fn breakpoints(&self) -> &[(i64, i64)] {
        &self.breakpoints
    }

    /// `ω(u)` at a rational point.
    pub fn eval(&self, u: &BigRational) -> BigRational {
        let first = self.breakpoints[0];
        let last = *self.breakpoints.last().unwrap();
        if *u <= rat(first.0) || *u >= rat(last.0) {
            return u.abs();
        }
        for w in self.breakpoints.windows(2) {
            let ((u0, v0), (u1, v1)) = (w[0], w[1]);
            if *u <= rat(u1) {
                let slope = rat((v1 - v0) / (u1 - u0));
                return rat(v0) + slope * (u - rat(u0));
            }
        }
        unreachable!("u lies inside the support")
    }

    /// Local minima of `ω` (the outer corners where a cell could be added).
    pub fn minima(&self) -> Vec<i64> {
        let pts = &self.breakpoints;
        if pts.len() == 1 {
            return vec![pts[0].0];
        }
        let mut out = vec![pts[0].0];
        for w in pts.windows(3) {
            if w[1].1 < w[0].1 && w[1].1 < w[2].1 {
                out.push(w[1].0);
            }
        }
        out.push(pts[pts.len() - 1].0);
        out
    }

    /// `∫ u^power (ω(u) - |u|) / 2 du`, exactly, splitting segments at `u = 0`.
    pub fn weighted_area(&self, power: usize) -> BigRational {
        let half = BigRational::new(1.into(), 2.into());
        let mut total = BigRational::zero();
        for w in self.breakpoints.windows(2) {
            let ((u0, v0), (u1, v1)) = (w[0], w[1]);
            let slope = (v1 - v0) / (u1 - u0);
            let mut pieces = vec![(u0, u1)];
            if u0 < 0 && u1 > 0 {
                pieces = vec![(u0, 0), (0, u1)];
            }
            for (a, b) in pieces {
                // on [a, b]: ω(u) = v0 + slope (u - u0), |u| = sign · u
                let sign = if a < 0 { -1 } else { 1 };
                let omega_minus_abs = UnivariatePoly::new(vec![
                    rat(v0 - slope * u0),
                    rat(slope - sign),
                ]);
                let integrand = &omega_minus_abs * &UnivariatePoly::monomial(half.clone(), power);
                total += integrand.integrate(&rat(a), &rat(b));
            }
        }
        total
    }

    /// Half the area between `ω` and `|u|`; equals the number of cells.
    pub fn half_area(&self) -> BigRational {
        self.weighted_area(0)
    }

    /// Checks slopes `±1`, `ω ≥ |u|` and that the ends touch `|u|`.
    pub fn check_invariants(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InternalInconsistency(msg));
        let (first, last) = (self.breakpoints[0], *self.breakpoints.last().unwrap());
        if first.1 != first.0.abs() || last.1 != last.0.abs() {
            return bad("profile ends do not meet |u|".into());
        }
        for w in self.breakpoints.windows(2) {
            let ((u0, v0), (u1, v1)) = (w[0], w[1]);
            if u1 <= u0 || (v1 - v0).abs() != u1 - u0 {
                return bad(format!("segment ({u0},{v0})-({u1},{v1}) is not of slope ±1"));
            }
        }
        if self.breakpoints.iter().any(|&(u, v)| v < u.abs()) {
            return bad("profile dips below |u|".into());
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.breakpoints
                .iter()
                .map(|&(x, y)| serde_json::json!({ "x": x, "y": y }))
                .collect(),
        )
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// The profile of `λ`: the staircase boundary of the French picture mapped by
/// `(x, y) ↦ (x - y, x + y)`, with collinear points merged.
pub fn profile(lambda: &YoungDiagram) -> Profile {
    let parts = lambda.parts();
    let l = parts.len();
    // walk the boundary from the top of the first column to the end of the first row
    let mut french: Vec<(i64, i64)> = vec![(0, l as i64)];
    for i in (0..l).rev() {
        let row_top = (i + 1) as i64;
        let len = parts[i] as i64;
        french.push((len, row_top));
        french.push((len, i as i64));
    }
    let mut pts: Vec<(i64, i64)> = Vec::new();
    for (x, y) in french {
        let p = (x - y, x + y);
        if pts.last() == Some(&p) {
            continue;
        }
        if pts.len() >= 2 {
            let a = pts[pts.len() - 2];
            let b = pts[pts.len() - 1];
            if (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0) {
                pts.pop();
            }
        }
        pts.push(p);
    }
    Profile { breakpoints: pts }
}

/// `S_i` for `i = 2..=max`, each value cross-checked by both integration routes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SMoments {
    values: BTreeMap<usize, BigRational>,
}

impl SMoments {
    pub fn new(values: BTreeMap<usize, BigRational>) -> Self {
        SMoments { values }
    }

    pub fn compute(lambda: &YoungDiagram, max: usize) -> Result<Self> {
        let values = (2..=max)
            .map(|i| Ok((i, s_moment(lambda, i)?)))
            .collect::<Result<_>>()?;
        Ok(SMoments { values })
    }

    pub fn get(&self, i: usize) -> Option<&BigRational> {
        self.values.get(&i)
    }

    pub fn values(&self) -> &BTreeMap<usize, BigRational> {
        &self.values
    }
}

/// `(i - 1) Σ_cells ∬ (x - y)^(i-2) dx dy` over the unit cells of the French picture.
///
/// With `F(t) = t^(m+2) / ((m+1)(m+2))`, the integral over the cell of content `d`
/// is `F(d+1) + F(d-1) - 2F(d)`.
pub fn s_moment_french(lambda: &YoungDiagram, i: usize) -> BigRational {
    assert!(i >= 2, "S_i is defined for i >= 2");
    let m = i - 2;
    let norm = BigRational::from_integer(BigInt::from((m + 1) * (m + 2)));
    let f = |t: i64| BigRational::from_integer(BigInt::from(t).pow((m + 2) as u32)) / &norm;
    let total: BigRational = lambda
        .cells()
        .map(|(r, c)| {
            let d = c as i64 - r as i64;
            f(d + 1) + f(d - 1) - f(d) - f(d)
        })
        .sum();
    total * rat((i - 1) as i64)
}

/// `(i - 1) ∫ u^(i-2) (ω(u) - |u|) / 2 du` over the Russian profile.
pub fn s_moment_russian(lambda: &YoungDiagram, i: usize) -> BigRational {
    assert!(i >= 2, "S_i is defined for i >= 2");
    profile(lambda).weighted_area(i - 2) * rat((i - 1) as i64)
}

/// `S_i^λ`, computed in both coordinate systems; disagreement is a bug.
pub fn s_moment(lambda: &YoungDiagram, i: usize) -> Result<BigRational> {
    if i < 2 {
        return Err(Error::Domain(format!("S_i needs i >= 2, got {i}")));
    }
    let french = s_moment_french(lambda, i);
    let russian = s_moment_russian(lambda, i);
    if french != russian {
        return Err(Error::InternalInconsistency(format!(
            "S_{i} of {lambda}: French {french} != Russian {russian}"
        )));
    }
    Ok(french)
}
