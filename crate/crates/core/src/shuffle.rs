//! Central random walks on `S_n` analysed through characters.
//!
//! A central measure is constant on conjugacy classes, so its Fourier transform
//! at every irreducible representation is a scalar `r_λ = Σ_c μ(c) χ^λ(c) / dim λ`.
//! Convolution powers become powers of those scalars, and Fourier inversion
//! recovers the exact distribution of `μ^{*k}`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::characters::{dimension, MnEvaluator};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, YoungDiagram};
use crate::permutation::{all_permutations, Permutation};

/// Default largest `n` for exact convolution powers.
pub const DEFAULT_DEGREE_CAP: usize = 8;
/// Largest `n` for the upper bound lemma.
pub const UPPER_BOUND_DEGREE_CAP: usize = 10;
/// Limits of the element-level oracle.
pub const BRUTE_FORCE_DEGREE_CAP: usize = 6;
pub const BRUTE_FORCE_STEP_CAP: usize = 10;

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

/// Order of the centralizer of a permutation of this cycle type: `∏ i^{m_i} m_i!`.
pub fn centralizer_order(cycle_type: &YoungDiagram) -> BigInt {
    let mut z = BigInt::one();
    let mut parts = cycle_type.parts().to_vec();
    parts.dedup();
    for len in parts {
        let m = cycle_type.multiplicity(len);
        z *= BigInt::from(len).pow(m as u32) * factorial(m);
    }
    z
}

/// Number of permutations with this cycle type.
pub fn class_size(cycle_type: &YoungDiagram) -> BigInt {
    factorial(cycle_type.size()) / centralizer_order(cycle_type)
}

/// A probability measure on `S_n` constant on conjugacy classes, stored as the
/// total mass of each class. Classes absent from the map carry no mass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralMeasure {
    degree: usize,
    weights: BTreeMap<YoungDiagram, BigRational>,
}

/// The law of `μ^{*k}`, in the same per-class form.
pub type ClassDistribution = CentralMeasure;

impl CentralMeasure {
    /// Validates nonnegative class masses summing to one.
    pub fn new(degree: usize, weights: BTreeMap<YoungDiagram, BigRational>) -> Result<Self> {
        let mut total = BigRational::zero();
        for (class, w) in &weights {
            if class.size() != degree {
                return Err(Error::SizeMismatch {
                    diagram: class.size(),
                    cycle_type: degree,
                });
            }
            if w.is_negative() {
                return Err(Error::Domain(format!("negative mass {w} on class {class}")));
            }
            total += w;
        }
        if !total.is_one() {
            return Err(Error::Domain(format!("class masses sum to {total}, not 1")));
        }
        let weights = weights.into_iter().filter(|(_, w)| !w.is_zero()).collect();
        Ok(CentralMeasure { degree, weights })
    }

    /// All mass on one conjugacy class.
    pub fn point_class(class: YoungDiagram) -> Self {
        let degree = class.size();
        let mut weights = BTreeMap::new();
        weights.insert(class, BigRational::one());
        CentralMeasure { degree, weights }
    }

    pub fn identity(n: usize) -> Self {
        CentralMeasure::point_class(YoungDiagram::column(n))
    }

    /// The uniform distribution on `S_n`.
    pub fn uniform(n: usize) -> Self {
        let total = factorial(n);
        let weights = enumerate_partitions(n)
            .into_iter()
            .map(|c| {
                let w = BigRational::new(class_size(&c), total.clone());
                (c, w)
            })
            .collect();
        CentralMeasure { degree: n, weights }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn weights(&self) -> &BTreeMap<YoungDiagram, BigRational> {
        &self.weights
    }

    /// Total mass of a class.
    pub fn class_mass(&self, class: &YoungDiagram) -> BigRational {
        self.weights.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Probability of one permutation in the class.
    pub fn element_probability(&self, class: &YoungDiagram) -> BigRational {
        self.class_mass(class) / BigRational::from_integer(class_size(class))
    }
}

/// All mass on the transpositions `(2, 1, ..., 1)`.
pub fn random_transposition_measure(n: usize) -> Result<CentralMeasure> {
    if n < 2 {
        return Err(Error::Domain(format!("random transpositions need n >= 2, got {n}")));
    }
    let mut parts = vec![2];
    parts.extend(std::iter::repeat_n(1, n - 2));
    Ok(CentralMeasure::point_class(YoungDiagram::from_unsorted(parts)))
}

/// Characters `χ^λ(c)` and dimensions for every `λ, c ⊢ n`.
pub struct CharacterTable {
    degree: usize,
    irreps: Vec<YoungDiagram>,
    classes: Vec<YoungDiagram>,
    values: Vec<Vec<BigInt>>,
    dimensions: Vec<BigInt>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let irreps = enumerate_partitions(n);
        let classes = irreps.clone();
        let values: Vec<Vec<BigInt>> = irreps
            .par_iter()
            .map(|lambda| {
                let mut ev = MnEvaluator::new();
                classes
                    .iter()
                    .map(|c| ev.character(lambda, c).expect("same size"))
                    .collect()
            })
            .collect();
        let dimensions = irreps.iter().map(dimension).collect();
        CharacterTable {
            degree: n,
            irreps,
            classes,
            values,
            dimensions,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn irreps(&self) -> &[YoungDiagram] {
        &self.irreps
    }

    pub fn classes(&self) -> &[YoungDiagram] {
        &self.classes
    }

    fn class_index(&self, class: &YoungDiagram) -> usize {
        self.classes.iter().position(|c| c == class).expect("class of S_n")
    }

    /// `r_λ(μ)` for each irrep, in table order.
    pub fn eigenvalues(&self, measure: &CentralMeasure) -> Vec<BigRational> {
        self.irreps
            .iter()
            .enumerate()
            .map(|(i, _)| {
                let mut acc = BigRational::zero();
                for (class, w) in measure.weights() {
                    let chi = &self.values[i][self.class_index(class)];
                    acc += w * BigRational::from_integer(chi.clone());
                }
                acc / BigRational::from_integer(self.dimensions[i].clone())
            })
            .collect()
    }
}

fn check_degree(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            value: n,
            cap,
        });
    }
    Ok(())
}

/// `r_λ = Σ_c μ(c) χ^λ(c) / dim λ`, the scalar by which `ρ^λ(μ)` acts.
pub fn fourier_eigenvalue(lambda: &YoungDiagram, measure: &CentralMeasure) -> Result<BigRational> {
    if lambda.size() != measure.degree() {
        return Err(Error::SizeMismatch {
            diagram: lambda.size(),
            cycle_type: measure.degree(),
        });
    }
    let mut ev = MnEvaluator::new();
    let mut acc = BigRational::zero();
    for (class, w) in measure.weights() {
        acc += w * BigRational::from_integer(ev.character(lambda, class)?);
    }
    Ok(acc / BigRational::from_integer(dimension(lambda)))
}

fn convolution_with_table(table: &CharacterTable, measure: &CentralMeasure, k: usize) -> Result<ClassDistribution> {
    let n = table.degree();
    let group_order = BigRational::from_integer(factorial(n));
    let powers: Vec<BigRational> = table
        .eigenvalues(measure)
        .into_iter()
        .map(|r| num_traits::pow(r, k))
        .collect();
    let weights: BTreeMap<YoungDiagram, BigRational> = table
        .classes()
        .iter()
        .enumerate()
        .map(|(ci, class)| {
            let mut prob = BigRational::zero();
            for (li, rk) in powers.iter().enumerate() {
                let dim = BigRational::from_integer(table.dimensions[li].clone());
                prob += dim * rk * BigRational::from_integer(table.values[li][ci].clone());
            }
            prob /= &group_order;
            (class.clone(), prob * BigRational::from_integer(class_size(class)))
        })
        .collect();
    CentralMeasure::new(n, weights).map_err(|e| {
        Error::InternalInconsistency(format!("Fourier inversion produced an invalid distribution: {e}"))
    })
}

/// Exact law of `μ^{*k}` by Fourier inversion:
/// `P(g) = (1/n!) Σ_λ dim λ · r_λ^k · χ^λ(g)`.
pub fn convolution_power(measure: &CentralMeasure, k: usize, cap: usize) -> Result<ClassDistribution> {
    if k == 0 {
        return Err(Error::Domain("convolution powers start at k = 1".into()));
    }
    check_degree(measure.degree(), cap)?;
    convolution_with_table(&CharacterTable::new(measure.degree()), measure, k)
}

/// `μ^{*k}` by explicit convolution over group elements. Test oracle only.
pub fn brute_force_convolution(measure: &CentralMeasure, k: usize) -> Result<ClassDistribution> {
    let n = measure.degree();
    check_degree(n, BRUTE_FORCE_DEGREE_CAP)?;
    if k > BRUTE_FORCE_STEP_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force convolution steps",
            value: k,
            cap: BRUTE_FORCE_STEP_CAP,
        });
    }
    if k == 0 {
        return Err(Error::Domain("convolution powers start at k = 1".into()));
    }
    let elements = all_permutations(n);
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let types: Vec<YoungDiagram> = elements.iter().map(Permutation::cycle_type).collect();
    let step: Vec<BigRational> = types.iter().map(|c| measure.element_probability(c)).collect();
    let support: Vec<usize> = (0..elements.len()).filter(|&i| !step[i].is_zero()).collect();

    let mut current = step.clone();
    for _ in 1..k {
        let mut next = vec![BigRational::zero(); elements.len()];
        for (g, pg) in current.iter().enumerate() {
            if pg.is_zero() {
                continue;
            }
            for &h in &support {
                let gh = elements[g].compose(&elements[h]).expect("same degree");
                next[index[&gh]] += pg * &step[h];
            }
        }
        current = next;
    }

    let mut weights: BTreeMap<YoungDiagram, BigRational> = BTreeMap::new();
    for (p, c) in current.into_iter().zip(types) {
        *weights.entry(c).or_insert_with(BigRational::zero) += p;
    }
    CentralMeasure::new(n, weights)
}

fn tv_of(distribution: &ClassDistribution) -> BigRational {
    let n = distribution.degree();
    let group_order = factorial(n);
    let total: BigRational = enumerate_partitions(n)
        .iter()
        .map(|c| {
            let uniform = BigRational::new(class_size(c), group_order.clone());
            (distribution.class_mass(c) - uniform).abs()
        })
        .sum();
    total / BigRational::from_integer(2.into())
}

/// `‖μ^{*k} - U‖_TV = (1/2) Σ_g |P(g) - 1/n!|`.
pub fn tv_distance_to_uniform(measure: &CentralMeasure, k: usize, cap: usize) -> Result<BigRational> {
    Ok(tv_of(&convolution_power(measure, k, cap)?))
}

fn bound_with_table(table: &CharacterTable, measure: &CentralMeasure, k: usize) -> BigRational {
    table
        .eigenvalues(measure)
        .into_iter()
        .zip(&table.dimensions)
        .zip(table.irreps())
        .filter(|(_, lambda)| lambda.row_count() > 1)
        .map(|((r, dim), _)| {
            let d = BigRational::from_integer(dim.clone());
            &d * &d * num_traits::pow(r, 2 * k)
        })
        .sum()
}

/// Upper bound lemma in squared form: `4 TV² ≤ Σ_{λ ≠ (n)} dim(λ)² r_λ^{2k}`.
/// Returns the right-hand side.
pub fn ds_upper_bound(measure: &CentralMeasure, k: usize) -> Result<BigRational> {
    check_degree(measure.degree(), UPPER_BOUND_DEGREE_CAP)?;
    Ok(bound_with_table(&CharacterTable::new(measure.degree()), measure, k))
}

/// One row of a mixing report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixingStep {
    pub step: usize,
    pub tv: BigRational,
    pub bound: BigRational,
}

/// `(k, TV, bound)` for `k = 1..=steps`, sharing one character table.
pub fn mixing_profile(measure: &CentralMeasure, steps: usize, cap: usize) -> Result<Vec<MixingStep>> {
    check_degree(measure.degree(), cap.min(UPPER_BOUND_DEGREE_CAP))?;
    let table = CharacterTable::new(measure.degree());
    (1..=steps)
        .map(|k| {
            Ok(MixingStep {
                step: k,
                tv: tv_of(&convolution_with_table(&table, measure, k)?),
                bound: bound_with_table(&table, measure, k),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::parse_partition;

    fn d(s: &str) -> YoungDiagram {
        parse_partition(s).unwrap()
    }

    fn q(n: i64, den: i64) -> BigRational {
        BigRational::new(n.into(), den.into())
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&d("2,1")), BigInt::from(3));
        assert_eq!(class_size(&d("2,2")), BigInt::from(3));
        assert_eq!(class_size(&d("3,1")), BigInt::from(8));
        for n in 0..=7 {
            let total: BigInt = enumerate_partitions(n).iter().map(class_size).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn transposition_measures() {
        let m3 = random_transposition_measure(3).unwrap();
        assert_eq!(m3.class_mass(&d("2,1")), q(1, 1));
        assert_eq!(m3.element_probability(&d("2,1")), q(1, 3));
        let m52 = random_transposition_measure(52).unwrap();
        assert_eq!(m52.weights().len(), 1);
        assert_eq!(m52.weights().keys().next().unwrap().parts()[..2], [2, 1]);
        assert_eq!(random_transposition_measure(2).unwrap().class_mass(&d("2")), q(1, 1));
        assert!(matches!(random_transposition_measure(1), Err(Error::Domain(_))));
    }

    #[test]
    fn measure_validation() {
        let mut w = BTreeMap::new();
        w.insert(d("2,1"), q(1, 2));
        assert!(CentralMeasure::new(3, w.clone()).is_err());
        w.insert(d("3"), q(1, 2));
        assert!(CentralMeasure::new(3, w.clone()).is_ok());
        w.insert(d("2"), q(0, 1));
        assert!(matches!(CentralMeasure::new(3, w), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn eigenvalue_examples() {
        let m3 = random_transposition_measure(3).unwrap();
        assert_eq!(fourier_eigenvalue(&d("3"), &m3).unwrap(), q(1, 1));
        assert_eq!(fourier_eigenvalue(&d("1,1,1"), &m3).unwrap(), q(-1, 1));
        assert_eq!(fourier_eigenvalue(&d("2,1"), &m3).unwrap(), q(0, 1));
        assert_eq!(fourier_eigenvalue(&d("5"), &CentralMeasure::uniform(5)).unwrap(), q(1, 1));
        assert!(matches!(fourier_eigenvalue(&d("2"), &m3), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn convolution_examples() {
        let m3 = random_transposition_measure(3).unwrap();
        assert_eq!(convolution_power(&m3, 1, 8).unwrap(), m3);
        let two = convolution_power(&m3, 2, 8).unwrap();
        assert_eq!(two.class_mass(&d("1,1,1")), q(1, 3));
        assert_eq!(two.class_mass(&d("3")), q(2, 3));
        assert_eq!(two, brute_force_convolution(&m3, 2).unwrap());
        assert!(matches!(
            convolution_power(&random_transposition_measure(9).unwrap(), 1, 8),
            Err(Error::CapExceeded { .. })
        ));
        let id = CentralMeasure::identity(4);
        assert_eq!(brute_force_convolution(&id, 5).unwrap(), id);
        assert_eq!(convolution_power(&id, 5, 8).unwrap(), id);
    }

    #[test]
    fn tv_examples() {
        let m3 = random_transposition_measure(3).unwrap();
        assert_eq!(tv_distance_to_uniform(&m3, 1, 8).unwrap(), q(1, 2));
        // the sign eigenvalue is -1, so the walk alternates between even and odd permutations
        for k in 1..=12 {
            assert_eq!(tv_distance_to_uniform(&m3, k, 8).unwrap(), q(1, 2));
        }
        let u = CentralMeasure::uniform(4);
        assert!(tv_distance_to_uniform(&u, 3, 8).unwrap().is_zero());
    }

    #[test]
    fn bound_examples() {
        let m3 = random_transposition_measure(3).unwrap();
        for k in 1..=6 {
            assert!(ds_upper_bound(&m3, k).unwrap() >= q(1, 1));
        }
        let id = CentralMeasure::identity(4);
        assert_eq!(ds_upper_bound(&id, 3).unwrap(), q(23, 1));
        assert!(ds_upper_bound(&random_transposition_measure(11).unwrap(), 1).is_err());
    }

    #[test]
    fn profile_rows() {
        let m4 = random_transposition_measure(4).unwrap();
        let rows = mixing_profile(&m4, 4, 8).unwrap();
        assert_eq!(rows.len(), 4);
        for row in rows {
            assert_eq!(row.tv, tv_distance_to_uniform(&m4, row.step, 8).unwrap());
            assert_eq!(row.bound, ds_upper_bound(&m4, row.step).unwrap());
        }
    }
}
