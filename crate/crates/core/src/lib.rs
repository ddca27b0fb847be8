//! Exact character theory of the symmetric groups.
//!
//! Characters are computed by the Murnaghan–Nakayama rule and, independently,
//! by the Stanley–Féray formula. On top of them sit the moments and free
//! cumulants of Young diagrams, Kerov polynomials, and the Fourier analysis
//! of central random walks such as random transpositions.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).

pub mod acceptance;
pub mod characters;
pub mod cumulants;
pub mod error;
pub mod factorization;
pub mod geometry;
pub mod kerov;
pub mod linalg;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod shuffle;

pub use error::{Error, Result};
pub use partition::YoungDiagram;
pub use permutation::Permutation;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
