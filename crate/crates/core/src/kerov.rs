//! Kerov polynomials: `Σ_k = K_k(R₂, R₃, …)`, recovered by exact linear algebra.
//!
//! The coefficients of `K_k` are unknowns; every probe diagram contributes one
//! equation `Σ_k^λ = Σ_m c_m · m(R^λ)` over candidate monomials `m`. The system is
//! solved exactly and the answer is checked on diagrams that took no part in
//! the solve.

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::characters::normalized_character;
use crate::cumulants::free_cumulant;
use crate::error::{Error, Result};
use crate::geometry::scale;
use crate::linalg::{solve_exact, Solution};
use crate::partition::{enumerate_partitions, YoungDiagram};
use crate::permutation::Permutation;

/// Default largest `k` for [`kerov_polynomial`].
pub const DEFAULT_KEROV_CAP: usize = 6;

/// A product of free cumulants. `exponents[i]` is the power of `R_{i+2}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exponents(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial { exponents }
    }

    /// Builds a monomial from the indices of its factors, e.g. `[3, 2]` for `R3·R2`.
    pub fn from_factors(factors: &[usize]) -> Self {
        let mut exponents = Vec::new();
        for &j in factors {
            assert!(j >= 2, "free cumulants start at R2");
            if exponents.len() < j - 1 {
                exponents.resize(j - 1, 0);
            }
            exponents[j - 2] += 1;
        }
        Monomial::from_exponents(exponents)
    }

    /// Power of `R_j`.
    pub fn exponent(&self, j: usize) -> u32 {
        j.checked_sub(2)
            .and_then(|i| self.exponents.get(i))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ j · (power of R_j)`.
    pub fn weight(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 2) * e as usize)
            .sum()
    }

    /// Factor indices in decreasing order, e.g. `[3, 2, 2]` for `R3·R2²`.
    pub fn factors(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i + 2, e as usize));
        }
        out
    }

    pub fn max_index(&self) -> usize {
        self.exponents.len() + 1
    }

    pub fn eval(&self, cumulants: &BTreeMap<usize, BigRational>) -> BigRational {
        let mut acc = BigRational::one();
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                let r = cumulants.get(&(i + 2)).cloned().unwrap_or_else(BigRational::zero);
                acc *= num_traits::pow(r, e as usize);
            }
        }
        acc
    }

    /// JSON object `{"R2": e2, ...}` listing nonzero exponents.
    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (format!("R{}", i + 2), json!(e)))
            .collect();
        Value::Object(map)
    }
}

impl Ord for Monomial {
    /// Heavier monomials first; within a weight, larger factors first (`R4` before `R2²`).
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (Reverse(self.weight()), Reverse(self.factors()))
            .cmp(&(Reverse(other.weight()), Reverse(other.factors())))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "R{}", i + 2)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Every monomial in `R₂..R_{max_weight}` of weight at most `max_weight`, heaviest first.
pub fn monomials_up_to_weight(max_weight: usize) -> Vec<Monomial> {
    fn rec(max_factor: usize, budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Monomial>) {
        out.push(Monomial::from_factors(prefix));
        for j in (2..=max_factor.min(budget)).rev() {
            prefix.push(j);
            rec(j, budget - j, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_weight, max_weight, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `K_k` as a map from monomials to integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerovPolynomial {
    k: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl KerovPolynomial {
    pub fn new(k: usize, terms: BTreeMap<Monomial, BigInt>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        KerovPolynomial { k, terms }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Substitutes cumulant values `j ↦ R_j`; missing indices count as zero.
    pub fn eval(&self, cumulants: &BTreeMap<usize, BigRational>) -> BigRational {
        self.terms
            .iter()
            .map(|(m, c)| m.eval(cumulants) * BigRational::from_integer(c.clone()))
            .sum()
    }

    /// `[{"monomial": {"R3": 1, "R2": 1}, "coeff": 35}, ...]`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let coeff = c.to_i64().map(Value::from).unwrap_or_else(|| json!(c.to_string()));
                    json!({ "monomial": m.to_json(), "coeff": coeff })
                })
                .collect(),
        )
    }

    pub fn from_json(k: usize, value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("kerov polynomial JSON: {what}"));
        let items = value.as_array().ok_or_else(|| bad("expected a list"))?;
        let mut terms = BTreeMap::new();
        for item in items {
            let coeff = match &item["coeff"] {
                Value::Number(n) => BigInt::from(n.as_i64().ok_or_else(|| bad("coefficient is not an integer"))?),
                Value::String(s) => s.parse().map_err(|_| bad("coefficient is not an integer"))?,
                _ => return Err(bad("missing coefficient")),
            };
            let mono = item["monomial"].as_object().ok_or_else(|| bad("missing monomial"))?;
            let mut factors = Vec::new();
            for (name, e) in mono {
                let j: usize = name
                    .strip_prefix('R')
                    .and_then(|t| t.parse().ok())
                    .filter(|&j| j >= 2)
                    .ok_or_else(|| bad("variables are named R2, R3, ..."))?;
                let e = e.as_u64().ok_or_else(|| bad("exponent is not a natural number"))?;
                factors.extend(std::iter::repeat_n(j, e as usize));
            }
            *terms.entry(Monomial::from_factors(&factors)).or_insert_with(BigInt::zero) += coeff;
        }
        Ok(KerovPolynomial::new(k, terms))
    }
}

impl fmt::Display for KerovPolynomial {
    /// Heaviest term first, e.g. `R7 + 35*R5 + 35*R3*R2 + 84*R3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.exponents.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Diagrams and sizes used to pin down `K_k`.
#[derive(Clone, Debug)]
pub struct KerovConfig {
    pub cap: usize,
    /// Equations come from these diagrams.
    pub probes: Vec<YoungDiagram>,
    /// Diagrams used only to check the solution.
    pub held_out: Vec<YoungDiagram>,
}

impl KerovConfig {
    /// All partitions of `1..=2(k+1)` plus the dilations by 2 and 3 of the rectangles
    /// up to `3 x 3`; held out are a few partitions of `2(k+1) + 1`.
    pub fn default_for(k: usize) -> Self {
        let top = 2 * (k + 1);
        let mut probes: Vec<YoungDiagram> = (1..=top).flat_map(enumerate_partitions).collect();
        for rows in 1..=3 {
            for cols in 1..=3 {
                for s in 2..=3 {
                    probes.push(scale(&YoungDiagram::rectangle(rows, cols), s));
                }
            }
        }
        let outside = enumerate_partitions(top + 1);
        let step = (outside.len() / 4).max(1);
        let held_out = outside.into_iter().step_by(step).collect();
        KerovConfig {
            cap: DEFAULT_KEROV_CAP,
            probes,
            held_out,
        }
    }
}

struct Sample {
    character: BigRational,
    cumulants: BTreeMap<usize, BigRational>,
}

fn sample(lambda: &YoungDiagram, k: usize) -> Result<Sample> {
    let character = normalized_character(lambda, &Permutation::long_cycle(k));
    let cumulants = (2..=k + 1)
        .map(|j| Ok((j, free_cumulant(lambda, j)?)))
        .collect::<Result<_>>()?;
    Ok(Sample { character, cumulants })
}

fn solve_for(monomials: &[Monomial], samples: &[Sample]) -> Result<Vec<BigRational>> {
    let a: Vec<Vec<BigRational>> = samples
        .iter()
        .map(|s| monomials.iter().map(|m| m.eval(&s.cumulants)).collect())
        .collect();
    let b: Vec<BigRational> = samples.iter().map(|s| s.character.clone()).collect();
    match solve_exact(&a, &b)? {
        Solution::Unique(x) => Ok(x),
        Solution::Inconsistent { row } => Err(Error::VerificationFailure(format!(
            "no polynomial in the free cumulants fits probe {row}"
        ))),
    }
}

/// `K_k` with the default probe pool and cap.
pub fn kerov_polynomial(k: usize) -> Result<KerovPolynomial> {
    kerov_polynomial_with(k, &KerovConfig::default_for(k))
}

pub fn kerov_polynomial_with(k: usize, config: &KerovConfig) -> Result<KerovPolynomial> {
    if k == 0 {
        return Err(Error::Domain("Kerov polynomials are indexed from k = 1".into()));
    }
    if k > config.cap {
        return Err(Error::CapExceeded {
            what: "Kerov index k",
            value: k,
            cap: config.cap,
        });
    }
    let probes: Vec<Sample> = config
        .probes
        .par_iter()
        .map(|lambda| sample(lambda, k))
        .collect::<Result<_>>()?;

    let all = monomials_up_to_weight(k + 1);
    let parity = (k + 1) % 2;
    let graded: Vec<Monomial> = all.iter().filter(|m| m.weight() % 2 == parity).cloned().collect();

    let coeffs = solve_for(&graded, &probes)?;
    let mut terms = BTreeMap::new();
    for (m, c) in graded.iter().zip(&coeffs) {
        if !c.is_integer() {
            return Err(Error::VerificationFailure(format!(
                "coefficient {c} of {m} in K_{k} is not an integer"
            )));
        }
        terms.insert(m.clone(), c.to_integer());
    }
    let poly = KerovPolynomial::new(k, terms);

    // the parity restriction must be a consequence, not an assumption
    let unrestricted = solve_for(&all, &probes)?;
    for (m, c) in all.iter().zip(&unrestricted) {
        if *c != BigRational::from_integer(poly.coeff(m)) {
            return Err(Error::VerificationFailure(format!(
                "unrestricted solve gives {c} for {m} in K_{k}"
            )));
        }
    }

    let checks: Vec<Sample> = config
        .held_out
        .par_iter()
        .map(|lambda| sample(lambda, k))
        .collect::<Result<_>>()?;
    for (lambda, s) in config.held_out.iter().zip(&checks) {
        if poly.eval(&s.cumulants) != s.character {
            return Err(Error::VerificationFailure(format!(
                "K_{k} disagrees with Σ_{k} on held-out diagram {lambda}"
            )));
        }
    }
    Ok(poly)
}

/// `K(R₂^λ, R₃^λ, …)` with the cumulants of `λ`.
pub fn evaluate_kerov(poly: &KerovPolynomial, lambda: &YoungDiagram) -> Result<BigRational> {
    let max = poly.terms.keys().map(Monomial::max_index).max().unwrap_or(1);
    let cumulants = (2..=max)
        .map(|j| Ok((j, free_cumulant(lambda, j)?)))
        .collect::<Result<_>>()?;
    Ok(poly.eval(&cumulants))
}
