//! End-to-end checks of every exact identity the library is expected to
//! reproduce. Shared by the `acceptance` test target and `kerovkit selftest`.
//!
//! Each check compares against an oracle that does not go through the code
//! path under test (explicit tableaux counting, brute-force convolution,
//! closed forms, published coefficients).

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characters::{coloring_count, dimension, mn_character, normalized_character, stanley_feray_character};
use crate::cumulants::{free_cumulant, free_cumulants_from_moments};
use crate::error::Result;
use crate::factorization::{minimal_factorizations, DEFAULT_ENUMERATION_CAP};
use crate::geometry::{s_moment, scale, SMoments};
use crate::kerov::{kerov_polynomial, KerovPolynomial, Monomial};
use crate::partition::{enumerate_partitions, YoungDiagram};
use crate::permutation::{all_permutations, Permutation};
use crate::shuffle::{
    brute_force_convolution, convolution_power, ds_upper_bound, random_transposition_measure,
    tv_distance_to_uniform, DEFAULT_DEGREE_CAP,
};

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl std::fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2?}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed,
            self.detail
        )
    }
}

pub const CRITERIA: [(usize, &str); 10] = [
    (1, "Kerov table K1..K6"),
    (2, "Stanley-Feray equals Murnaghan-Nakayama"),
    (3, "closed form of the transposition character"),
    (4, "moments-to-cumulants transform"),
    (5, "homogeneity under dilation"),
    (6, "dimension cross-checks"),
    (7, "Fourier inversion against brute-force convolution"),
    (8, "upper bound lemma"),
    (9, "Kerov positivity"),
    (10, "minimal factorizations are counted by Catalan numbers"),
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize) -> CriterionReport {
    let name = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .map(|(_, n)| *n)
        .unwrap_or("unknown criterion");
    let start = Instant::now();
    let outcome: Result<std::result::Result<String, String>> = match id {
        1 => kerov_table(),
        2 => dual_algorithms(),
        3 => transposition_closed_form(),
        4 => transform_consistency(),
        5 => homogeneity(),
        6 => dimensions(),
        7 => fourier_oracle(),
        8 => upper_bound(),
        9 => positivity(),
        10 => catalan(),
        _ => Ok(Err(format!("no criterion {id}"))),
    };
    let (passed, detail) = match outcome {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(why)) => (false, why),
        Err(e) => (false, format!("error: {e}")),
    };
    CriterionReport {
        id,
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id)).collect()
}

type Check = Result<std::result::Result<String, String>>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// The coefficients printed in the published table of Kerov polynomials.
pub fn published_kerov_table() -> Vec<(usize, Vec<(Vec<usize>, i64)>)> {
    vec![
        (1, vec![(vec![2], 1)]),
        (2, vec![(vec![3], 1)]),
        (3, vec![(vec![4], 1), (vec![2], 1)]),
        (4, vec![(vec![5], 1), (vec![3], 5)]),
        (5, vec![(vec![6], 1), (vec![4], 15), (vec![2, 2], 5), (vec![2], 8)]),
        (6, vec![(vec![7], 1), (vec![5], 35), (vec![3, 2], 35), (vec![3], 84)]),
    ]
}

fn published(k: usize) -> KerovPolynomial {
    let (_, terms) = published_kerov_table().into_iter().find(|(i, _)| *i == k).expect("k <= 6");
    KerovPolynomial::new(
        k,
        terms
            .into_iter()
            .map(|(factors, c)| (Monomial::from_factors(&factors), BigInt::from(c)))
            .collect(),
    )
}

fn kerov_table() -> Check {
    let mut lines = Vec::new();
    for k in 1..=6 {
        let poly = kerov_polynomial(k)?;
        ensure!(poly == published(k), "K{k} = {poly}, expected {}", published(k));
        // leading term R_{k+1}; everything else has weight at most k - 1
        let lead = Monomial::from_factors(&[k + 1]);
        ensure!(poly.coeff(&lead).is_one(), "K{k} lacks the leading term R{}", k + 1);
        for m in poly.terms().keys() {
            ensure!(*m == lead || m.weight() + 1 < k + 1, "K{k} has a term {m} of weight {}", m.weight());
        }
        lines.push(format!("K{k} = {poly}"));
    }
    Ok(Ok(lines.join("; ")))
}

fn dual_algorithms() -> Check {
    let perms: Vec<Permutation> = (1..=4).flat_map(all_permutations).collect();
    let mut checked = 0;
    for n in 0..=8 {
        for lambda in enumerate_partitions(n) {
            for pi in &perms {
                let mn = normalized_character(&lambda, pi);
                let sf = stanley_feray_character(&lambda, pi, DEFAULT_ENUMERATION_CAP)?;
                ensure!(mn == sf, "λ={lambda}, π={pi}: MN {mn} vs Stanley-Féray {sf}");
                checked += 1;
            }
        }
    }
    Ok(Ok(format!("{checked} (λ, π) pairs agree exactly")))
}

fn squares(parts: &[usize]) -> i64 {
    parts.iter().map(|&x| (x * x) as i64).sum()
}

fn transposition_closed_form() -> Check {
    let t = Permutation::long_cycle(2);
    let mut checked = 0;
    for n in 0..=10 {
        for lambda in enumerate_partitions(n) {
            let expected = int(squares(lambda.parts()) - squares(lambda.conjugate().parts()));
            let got = normalized_character(&lambda, &t);
            ensure!(got == expected, "λ={lambda}: Σ_(12) = {got}, closed form {expected}");
            checked += 1;
        }
    }
    Ok(Ok(format!("{checked} diagrams with n <= 10")))
}

fn transform_consistency() -> Check {
    let mut checked = 0;
    for m in 0..=8 {
        for lambda in enumerate_partitions(m) {
            let moments = SMoments::compute(&lambda, 6)?;
            for n in 2..=6 {
                let from_moments = free_cumulants_from_moments(&moments, n)?;
                let from_characters = free_cumulant(&lambda, n)?;
                ensure!(
                    from_moments == from_characters,
                    "λ={lambda}, R{n}: transform {from_moments} vs interpolation {from_characters}"
                );
                checked += 1;
            }
        }
    }
    Ok(Ok(format!("{checked} cumulants agree")))
}

fn random_diagram(rng: &mut ChaCha8Rng, max_size: usize) -> YoungDiagram {
    let n = rng.random_range(1..=max_size);
    let all = enumerate_partitions(n);
    all[rng.random_range(0..all.len())].clone()
}

fn random_permutation(rng: &mut ChaCha8Rng, k: usize) -> Permutation {
    let mut images: Vec<usize> = (0..k).collect();
    images.shuffle(rng);
    Permutation::from_images(images).expect("shuffled identity")
}

fn homogeneity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2008);
    let instances = 50;
    for case in 0..instances {
        let lambda = random_diagram(&mut rng, 6);
        let k = rng.random_range(1..=4);
        let s1 = random_permutation(&mut rng, k);
        let s2 = random_permutation(&mut rng, k);
        let base = coloring_count(&lambda, &s1, &s2)?;
        let cycles = (s1.cycle_count() + s2.cycle_count()) as u32;
        for s in [2usize, 3] {
            let dilated = scale(&lambda, s);
            let got = coloring_count(&dilated, &s1, &s2)?;
            let expected = &base * BigInt::from(s).pow(cycles);
            ensure!(got == expected, "case {case}: N^{{{s}λ}} for λ={lambda}, σ₁={s1}, σ₂={s2}: {got} vs {expected}");
            for j in 2..=4 {
                let factor = int((s as i64).pow(j as u32));
                let r = free_cumulant(&dilated, j)?;
                ensure!(
                    r == free_cumulant(&lambda, j)? * &factor,
                    "case {case}: R{j} of {s}·{lambda} is not homogeneous"
                );
                let sm = s_moment(&dilated, j)?;
                ensure!(sm == s_moment(&lambda, j)? * &factor, "case {case}: S{j} of {s}·{lambda} is not homogeneous");
            }
        }
    }
    Ok(Ok(format!("{instances} random instances, s ∈ {{2, 3}}")))
}

/// Counts standard Young tableaux by removing the cell holding the largest entry.
pub fn count_standard_tableaux(lambda: &YoungDiagram, memo: &mut HashMap<YoungDiagram, BigInt>) -> BigInt {
    if lambda.is_empty() {
        return BigInt::one();
    }
    if let Some(v) = memo.get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let mut total = BigInt::zero();
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i] > parts[i + 1] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += count_standard_tableaux(&YoungDiagram::from_unsorted(smaller), memo);
        }
    }
    memo.insert(lambda.clone(), total.clone());
    total
}

fn dimensions() -> Check {
    let mut memo = HashMap::new();
    for n in 0..=8 {
        let mut sum_sq = BigInt::zero();
        for lambda in enumerate_partitions(n) {
            let hook = dimension(&lambda);
            let mn = mn_character(&lambda, &YoungDiagram::column(n))?;
            let tableaux = count_standard_tableaux(&lambda, &mut memo);
            ensure!(hook == mn && mn == tableaux, "λ={lambda}: hook {hook}, MN {mn}, tableaux {tableaux}");
            sum_sq += &hook * &hook;
        }
        let factorial: BigInt = (1..=n).fold(BigInt::one(), |a, x| a * x);
        ensure!(sum_sq == factorial, "n={n}: Σ dim² = {sum_sq} ≠ n!");
    }
    Ok(Ok("n <= 8: hook = MN = tableaux, Σ dim² = n!".into()))
}

fn fourier_oracle() -> Check {
    let m3 = random_transposition_measure(3)?;
    let two = convolution_power(&m3, 2, DEFAULT_DEGREE_CAP)?;
    let id_mass = two.class_mass(&YoungDiagram::column(3));
    ensure!(id_mass == BigRational::new(1.into(), 3.into()), "μ² mass on the identity of S3 is {id_mass}");

    let mut measures = Vec::new();
    for n in [4usize, 5] {
        measures.push(random_transposition_measure(n)?);
        // a mixed central measure: lazy walk with 3-cycles
        let mut w = BTreeMap::new();
        w.insert(YoungDiagram::column(n), BigRational::new(1.into(), 4.into()));
        w.insert(random_transposition_measure(n)?.weights().keys().next().unwrap().clone(), BigRational::new(1.into(), 2.into()));
        w.insert(YoungDiagram::from_unsorted([vec![3], vec![1; n - 3]].concat()), BigRational::new(1.into(), 4.into()));
        measures.push(crate::shuffle::CentralMeasure::new(n, w)?);
    }
    let mut checked = 0;
    for mu in &measures {
        let max_k = if mu.degree() == 4 { 6 } else { 4 };
        for k in 1..=max_k {
            let fourier = convolution_power(mu, k, DEFAULT_DEGREE_CAP)?;
            let brute = brute_force_convolution(mu, k)?;
            ensure!(fourier == brute, "S{} k={k}: Fourier inversion differs from brute force", mu.degree());
            checked += 1;
        }
    }
    Ok(Ok(format!("μ²(e) = 1/3 on S3; {checked} convolution powers on S4 (k<=6), S5 (k<=4) agree")))
}

fn upper_bound() -> Check {
    let m5 = random_transposition_measure(5)?;
    let mut worst = String::new();
    for k in 1..=10 {
        let tv = tv_distance_to_uniform(&m5, k, DEFAULT_DEGREE_CAP)?;
        let bound = ds_upper_bound(&m5, k)?;
        let lhs = int(4) * &tv * &tv;
        ensure!(lhs <= bound, "k={k}: 4 TV² = {lhs} exceeds bound {bound}");
        if k == 10 {
            worst = format!("k=10: 4 TV² = {lhs}, bound = {bound}");
        }
    }
    Ok(Ok(worst))
}

fn positivity() -> Check {
    for k in 1..=6 {
        let poly = kerov_polynomial(k)?;
        for (m, c) in poly.terms() {
            ensure!(!c.is_negative(), "K{k}: coefficient {c} of {m} is negative");
        }
    }
    Ok(Ok("all coefficients of K1..K6 are nonnegative integers".into()))
}

/// `C(2k, k) / (k + 1)`.
pub fn catalan_number(k: usize) -> BigInt {
    let mut binom = BigInt::one();
    for i in 0..k {
        binom = binom * (2 * k - i) / (i + 1);
    }
    binom / (k + 1)
}

fn catalan() -> Check {
    let mut counts = Vec::new();
    for k in 1..=7 {
        let count = minimal_factorizations(k, DEFAULT_ENUMERATION_CAP)?.len();
        let expected = catalan_number(k);
        ensure!(BigInt::from(count) == expected, "k={k}: {count} minimal factorizations, Catalan {expected}");
        counts.push(count.to_string());
    }
    Ok(Ok(format!("counts for k = 1..7: {}", counts.join(", "))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_numbers() {
        let got: Vec<BigInt> = (0..8).map(catalan_number).collect();
        let expected: Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn tableaux_counter() {
        let mut memo = HashMap::new();
        let d = YoungDiagram::new(vec![3, 1, 1]).unwrap();
        assert_eq!(count_standard_tableaux(&d, &mut memo), BigInt::from(6));
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(99).passed);
    }
}
