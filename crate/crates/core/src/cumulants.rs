//! Dilation polynomials `s ↦ Σ_π^{sλ}` and free cumulants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::characters::normalized_character;
use crate::error::{Error, Result};
use crate::geometry::{scale, SMoments};
use crate::partition::YoungDiagram;
use crate::permutation::Permutation;
use crate::poly::UnivariatePoly;

fn rat(x: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Degree bound for `s ↦ Σ_π^{sλ}`: a factorization `σ₁σ₂ = π` has at most
/// `k + |C(π)|` cycles in total, and `N^{sλ}` is homogeneous of that degree.
pub fn dilation_degree_bound(pi: &Permutation) -> usize {
    pi.degree() + pi.cycle_count()
}

/// The polynomial `p` with `p(s) = Σ_π^{sλ}` for all integers `s ≥ 0`.
///
/// Interpolates at `s = 0..=D` (`D` from [`dilation_degree_bound`], `k + 1` for a
/// cycle) and checks the result at the held-out node `s = D + 1`.
pub fn character_dilation_poly(lambda: &YoungDiagram, pi: &Permutation) -> Result<UnivariatePoly> {
    let bound = dilation_degree_bound(pi);
    let value_at = |s: usize| normalized_character(&scale(lambda, s), pi);
    let nodes: Vec<(BigRational, BigRational)> = (0..=bound).map(|s| (rat(s), value_at(s))).collect();
    let poly = UnivariatePoly::interpolate(&nodes)?;
    let held_out = bound + 1;
    let expected = value_at(held_out);
    if poly.eval(&rat(held_out)) != expected {
        return Err(Error::VerificationFailure(format!(
            "dilation polynomial of Σ_{pi} on {lambda} misses s = {held_out}"
        )));
    }
    Ok(poly)
}

/// `R_k^λ = [s^k] Σ_{k-1}^{sλ}`.
pub fn free_cumulant(lambda: &YoungDiagram, k: usize) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::Domain(format!("free cumulants start at R2, got R{k}")));
    }
    let poly = character_dilation_poly(lambda, &Permutation::long_cycle(k - 1))?;
    Ok(poly.coeff(k))
}

/// `R_k` for `k = 2..=max`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeCumulants {
    values: BTreeMap<usize, BigRational>,
}

impl FreeCumulants {
    pub fn compute(lambda: &YoungDiagram, max: usize) -> Result<Self> {
        let values = (2..=max)
            .map(|k| Ok((k, free_cumulant(lambda, k)?)))
            .collect::<Result<_>>()?;
        Ok(FreeCumulants { values })
    }

    /// Cumulants derived from moments through [`free_cumulants_from_moments`].
    pub fn from_moments(moments: &SMoments, max: usize) -> Result<Self> {
        let values = (2..=max)
            .map(|k| Ok((k, free_cumulants_from_moments(moments, k)?)))
            .collect::<Result<_>>()?;
        Ok(FreeCumulants { values })
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.values.get(&k)
    }

    pub fn values(&self) -> &BTreeMap<usize, BigRational> {
        &self.values
    }
}

/// `R_n = Σ_{l≥1} (1/l!) (1-n)^{l-1} Σ_{k₁+…+k_l=n, kᵢ≥2} S_{k₁}⋯S_{k_l}`,
/// summed over ordered compositions.
pub fn free_cumulants_from_moments(moments: &SMoments, n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Domain(format!("free cumulants start at R2, got R{n}")));
    }
    if let Some(missing) = (2..=n).find(|i| moments.get(*i).is_none()) {
        return Err(Error::MissingMoment(missing));
    }

    // by_length[l] = Σ over compositions of n into l parts ≥ 2 of the moment product
    let mut by_length: BTreeMap<usize, BigRational> = BTreeMap::new();
    fn walk(
        remaining: usize,
        len: usize,
        product: BigRational,
        moments: &SMoments,
        by_length: &mut BTreeMap<usize, BigRational>,
    ) {
        if remaining == 0 {
            *by_length.entry(len).or_insert_with(BigRational::zero) += product;
            return;
        }
        for part in 2..=remaining {
            let s = moments.get(part).expect("presence checked");
            walk(remaining - part, len + 1, &product * s, moments, by_length);
        }
    }
    walk(n, 0, BigRational::one(), moments, &mut by_length);

    let base = BigRational::from_integer(BigInt::from(1i64 - n as i64));
    let mut total = BigRational::zero();
    let mut factorial = BigRational::one();
    let mut power = BigRational::one();
    for l in 1..=n / 2 {
        factorial *= rat(l);
        if l > 1 {
            power *= &base;
        }
        if let Some(sum) = by_length.get(&l) {
            total += &power * sum / &factorial;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, parse_partition};
    use crate::permutation::parse_permutation;

    fn d(s: &str) -> YoungDiagram {
        parse_partition(s).unwrap()
    }

    fn q(n: i64, den: i64) -> BigRational {
        BigRational::new(n.into(), den.into())
    }

    #[test]
    fn dilation_examples() {
        for lambda in [d("3,1"), d("2,2,1"), d("1")] {
            let p = character_dilation_poly(&lambda, &parse_permutation("(1)").unwrap()).unwrap();
            assert_eq!(p, UnivariatePoly::monomial(rat(lambda.size()), 2));
        }
        let t = parse_permutation("(1,2)").unwrap();
        assert!(character_dilation_poly(&YoungDiagram::empty(), &t).unwrap().is_zero());
        assert!(character_dilation_poly(&d("1"), &t).unwrap().is_zero());
    }

    #[test]
    fn identity_needs_the_larger_degree_bound() {
        // Σ_{e ∈ S_2}^{sλ} = n (n - 1) with n = s²|λ|, of degree 4 = k + |C(e)|
        let e2 = Permutation::identity(2);
        let p = character_dilation_poly(&d("2,1"), &e2).unwrap();
        assert_eq!(p, UnivariatePoly::new(vec![q(0, 1), q(0, 1), q(-3, 1), q(0, 1), q(9, 1)]));
    }

    #[test]
    fn cycle_polynomials_have_degree_k_and_no_constant() {
        for lambda in [d("3,1"), d("2,2"), d("4,2,1"), d("5")] {
            for k in 2..=5 {
                let p = character_dilation_poly(&lambda, &Permutation::long_cycle(k - 1)).unwrap();
                let expected = if free_cumulant(&lambda, k).unwrap().is_zero() { p.degree().filter(|&d| d < k) } else { Some(k) };
                assert_eq!(p.degree(), expected, "{lambda} k={k}");
                assert!(p.coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn cumulant_examples() {
        for lambda in enumerate_partitions(5) {
            assert_eq!(free_cumulant(&lambda, 2).unwrap(), rat(5));
        }
        assert_eq!(free_cumulant(&d("2,1"), 3).unwrap(), q(0, 1));
        let s = SMoments::compute(&d("2"), 3).unwrap();
        assert_eq!(free_cumulant(&d("2"), 3).unwrap(), free_cumulants_from_moments(&s, 3).unwrap());
        assert_eq!(free_cumulant(&d("2"), 3).unwrap(), q(2, 1));
        // Σ_3 = R4 + R2 and Σ_3 vanishes on a single box
        assert_eq!(free_cumulant(&d("1"), 4).unwrap(), q(-1, 1));
        assert!(free_cumulant(&d("1"), 1).is_err());
    }

    #[test]
    fn transform_low_orders() {
        let lambda = d("3,2");
        let s = SMoments::compute(&lambda, 4).unwrap();
        let (s2, s3, s4) = (s.get(2).unwrap(), s.get(3).unwrap(), s.get(4).unwrap());
        assert_eq!(&free_cumulants_from_moments(&s, 2).unwrap(), s2);
        assert_eq!(&free_cumulants_from_moments(&s, 3).unwrap(), s3);
        assert_eq!(free_cumulants_from_moments(&s, 4).unwrap(), s4 - q(3, 2) * s2 * s2);
        assert_eq!(free_cumulants_from_moments(&s, 5), Err(Error::MissingMoment(5)));
    }

    #[test]
    fn transform_matches_interpolation() {
        for n in 1..=6 {
            for lambda in enumerate_partitions(n) {
                let s = SMoments::compute(&lambda, 6).unwrap();
                for k in 2..=6 {
                    assert_eq!(
                        free_cumulants_from_moments(&s, k).unwrap(),
                        free_cumulant(&lambda, k).unwrap(),
                        "{lambda} R{k}"
                    );
                }
            }
        }
    }
}
