//! Exact computational algebra for slice ranks of cubic forms.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! computation: exact field arithmetic, canonical subspaces, sparse
//! homogeneous polynomials, graded pieces of linear ideals and the
//! Grassmannian search behind slice rank and `L_f`. Parallel execution,
//! file formats and the command line live in the `slicerank` crate.
#![no_std]

extern crate alloc;

pub mod error;
pub mod field;
pub mod fixtures;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod slicerank;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, Fp, Rationals};
pub use ideal::{GradedSubspace, LinearIdealFamily};
pub use linalg::Subspace;
pub use poly::{Monomial, Polynomial};
