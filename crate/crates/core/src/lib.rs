//! Exact computation of the bigraded homology of the canonical complex of a
//! reductive Lie algebra.
//!
//! Given a Lie algebra `g` with an invariant nondegenerate bilinear form, the
//! canonical complex lives on `S(g) ⊗ S(g) ⊗ Λ(g)` and its differential is
//! the coefficient-linear derivation sending a generator `v` of `Λ(g)` to the
//! quadratic function `(x, y) ↦ ⟨v, [x, y]⟩`. Assigning each exterior
//! generator bidegree `(1, 1)` makes the differential preserve the bidegree
//! `(p, q)`, so every homology dimension is a finite, exact linear-algebra
//! computation.
//!
//! The crate provides:
//! * a small catalog of reductive Lie algebras given by structure constants
//!   ([`lie_algebra`]),
//! * monomial bases of the bigraded components ([`graded_basis`]),
//! * exact sparse rank computation over the rationals via modular projections
//!   with a fraction-free fallback ([`exact_linalg`]),
//! * assembly of the differential blocks and symbolic application
//!   ([`differential`]),
//! * homology dimension tables and the vanishing verification ([`homology`]),
//! * explicit non-boundary cycles built from invariant vector fields
//!   ([`invariant_cycles`]),
//! * exact evaluation on the commuting variety ([`evaluation`]), and
//! * automorphism pullbacks and conjugation checks ([`equivariance`]).
//!
//! All arithmetic is exact: rationals with arbitrary-precision integers, or
//! integers modulo 31-bit primes. No floating point anywhere.

pub mod differential;
pub mod equivariance;
pub mod evaluation;
pub mod exact_linalg;
pub mod graded_basis;
pub mod homology;
pub mod invariant_cycles;
pub mod lie_algebra;
pub mod poly;
pub mod rational;

pub use differential::{apply_differential, assemble_block, lambda_table, ComplexElement, LambdaTable};

/// Deterministic RNG used by every sampled computation in the crate.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
pub use exact_linalg::{RankResult, SparseMatrix};
pub use graded_basis::{component_basis, sym_dimension, BasisIndex, ComponentBasis};
pub use homology::{euler_check, homology_dims, verify_vanishing, HomologyReport, RankMode};
pub use lie_algebra::{build_catalog_algebra, validate_algebra, LieAlgebra};
pub use rational::Rat;
