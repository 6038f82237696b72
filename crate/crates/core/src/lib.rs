//! Exact structure-constant machinery for de-equivariantizing finite-dimensional
//! Hopf algebras.
//!
//! The crate takes a Hopf algebra `H` presented by sparse structure constants
//! over a cyclotomic field, a braided central Hopf subalgebra `(K, r)` and a
//! cointegral `pi: H -> K`, and produces the quotient coquasi-bialgebra
//! `Q = H / K⁺H` together with an exhaustive, exact certification of every
//! axiom involved (coassociativity, Hopf axioms, skew-pairing axioms,
//! pentagon/unit constraints for the associator).
//!
//! Everything is computed over `Q(zeta_N)` with arbitrary-precision rational
//! coefficients; a passing check is a statement about the input, not a sampled
//! claim.
//!
//! Layout:
//! - [`cyclotomic`]: the scalar type [`cyclotomic::CycScalar`] and its field contexts
//! - [`linalg`]: dense exact matrices, row reduction, kernels, complements, solves
//! - [`tensor`]: sparse coproduct / multiplication tensors
//! - [`coalgebra`], [`algebra`], [`hopf`], [`coquasi`]: structure types and their checkers
//! - [`convolution`]: the convolution calculus on maps out of a coalgebra
//! - [`pairing`]: braided central pairs and cointegrals
//! - [`dequiv`]: the quotient construction itself
//! - [`group`], [`builders`]: finite groups, bicharacters, bosonizations and the
//!   ready-made example families
//!
//! The crate is `no_std`-compatible (with `alloc`); the `std` feature is on by
//! default and `parallel` enables multi-threaded axiom scans via rayon.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod algebra;
pub mod builders;
pub mod coalgebra;
pub mod convolution;
pub mod coquasi;
pub mod cyclotomic;
pub mod dequiv;
pub mod group;
pub mod hopf;
pub mod linalg;
pub mod pairing;
mod scan;
pub mod tensor;
pub mod verdict;

pub use cyclotomic::{CycField, CycScalar};
pub use linalg::ExactMatrix;
