//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Coefficients indexed by power; trailing zeros are always trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<BigRational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        UnivariatePoly::new(vec![c])
    }

    /// `c · x^power`.
    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        UnivariatePoly::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_root(root: &BigRational) -> Self {
        UnivariatePoly::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^power` (zero past the degree).
    pub fn coeff(&self, power: usize) -> BigRational {
        self.coeffs.get(power).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UnivariatePoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut out = vec![BigRational::zero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c / BigRational::from_integer(BigInt::from(i + 1)));
        }
        UnivariatePoly::new(out)
    }

    /// `∫_a^b p(x) dx`.
    pub fn integrate(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let anti = self.antiderivative();
        anti.eval(b) - anti.eval(a)
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<Self> {
        let mut result = UnivariatePoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UnivariatePoly::constant(BigRational::one());
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff = xi - xj;
                if diff.is_zero() {
                    return Err(Error::Domain(format!("repeated interpolation node {xi}")));
                }
                basis = &basis * &UnivariatePoly::linear_root(xj);
                denom *= diff;
            }
            result = &result + &basis.scale(&(yi / denom));
        }
        Ok(result)
    }
}

impl Add for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn add(self, other: &UnivariatePoly) -> UnivariatePoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UnivariatePoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }
}

impl Sub for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn sub(self, other: &UnivariatePoly) -> UnivariatePoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UnivariatePoly::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }
}

impl Mul for &UnivariatePoly {
    type Output = UnivariatePoly;

    fn mul(self, other: &UnivariatePoly) -> UnivariatePoly {
        if self.is_zero() || other.is_zero() {
            return UnivariatePoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly::new(out)
    }
}

impl fmt::Display for UnivariatePoly {
    /// Highest power first, e.g. `3*s^2 - 1/2*s + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = power == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match power {
                0 => {}
                1 if show_coeff => f.write_str("*s")?,
                1 => f.write_str("s")?,
                _ if show_coeff => write!(f, "*s^{power}")?,
                _ => write!(f, "s^{power}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn interpolates_quadratic() {
        let pts: Vec<_> = (0..4).map(|s| (q(s), q(3 * s * s))).collect();
        let p = UnivariatePoly::interpolate(&pts).unwrap();
        assert_eq!(p, UnivariatePoly::monomial(q(3), 2));
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.to_string(), "3*s^2");
    }

    #[test]
    fn zero_and_errors() {
        let p = UnivariatePoly::interpolate(&[(q(0), q(0)), (q(1), q(0))]).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert!(UnivariatePoly::interpolate(&[(q(1), q(1)), (q(1), q(2))]).is_err());
    }

    #[test]
    fn integrates_exactly() {
        // ∫_0^2 x^2 dx = 8/3
        let p = UnivariatePoly::monomial(q(1), 2);
        assert_eq!(p.integrate(&q(0), &q(2)), BigRational::new(8.into(), 3.into()));
    }

    #[test]
    fn display_signs() {
        let p = UnivariatePoly::new(vec![q(1), BigRational::new((-1).into(), 2.into()), q(-1)]);
        assert_eq!(p.to_string(), "-s^2 - 1/2*s + 1");
    }

    proptest! {
        #[test]
        fn interpolation_recovers_polynomial(coeffs in proptest::collection::vec(-20i64..20, 0..6)) {
            let p = UnivariatePoly::new(coeffs.into_iter().map(q).collect());
            let nodes: Vec<_> = (0..6).map(|s| (q(s), p.eval(&q(s)))).collect();
            prop_assert_eq!(UnivariatePoly::interpolate(&nodes).unwrap(), p);
        }
    }
}
