//! Factorizations `σ₁ ∘ σ₂ = π` of a permutation into an ordered pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::{all_permutations, Permutation};

/// Default largest degree for which `k!` factorizations are enumerated.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationPair {
    pub sigma1: Permutation,
    pub sigma2: Permutation,
}

impl FactorizationPair {
    pub fn product(&self) -> Permutation {
        self.sigma1
            .compose(&self.sigma2)
            .expect("factorization pairs share a degree")
    }

    /// `|C(σ₁)| + |C(σ₂)|`, the degree of homogeneity of the coloring count.
    pub fn total_cycles(&self) -> usize {
        self.sigma1.cycle_count() + self.sigma2.cycle_count()
    }
}

/// Every pair with `σ₁ ∘ σ₂ = π`: one per `σ₁ ∈ S_k`, with `σ₂ = σ₁⁻¹ ∘ π`.
/// Ordered by `σ₁` lexicographically.
pub fn enumerate_factorizations(pi: &Permutation, cap: usize) -> Result<Vec<FactorizationPair>> {
    let k = pi.degree();
    if k > cap {
        return Err(Error::CapExceeded {
            what: "permutation degree",
            value: k,
            cap,
        });
    }
    Ok(all_permutations(k)
        .into_iter()
        .map(|sigma1| {
            let sigma2 = sigma1.inverse().compose(pi).expect("same degree");
            FactorizationPair { sigma1, sigma2 }
        })
        .collect())
}

/// Whether a factorization of the long cycle `(1, ..., k)` is minimal, i.e. uses
/// `k + 1` cycles in total. Pairs of the wrong degree are never minimal.
pub fn is_minimal_factorization(pair: &FactorizationPair, k: usize) -> bool {
    pair.sigma1.degree() == k && pair.sigma2.degree() == k && pair.total_cycles() == k + 1
}

/// Minimal factorizations of the long cycle of degree `k`.
pub fn minimal_factorizations(k: usize, cap: usize) -> Result<Vec<FactorizationPair>> {
    Ok(enumerate_factorizations(&Permutation::long_cycle(k), cap)?
        .into_iter()
        .filter(|pair| is_minimal_factorization(pair, k))
        .collect())
}
