//! Exact module theory for finite-dimensional algebras over prime fields.
//!
//! The crate computes radicals, socles and tops, Krull-Schmidt
//! decompositions, submodule lattices, bounded catalogs of indecomposable
//! modules, Auslander rings and Morita-dual data, and assembles them into
//! (co-)Köthe verdicts. Everything is exact arithmetic over GF(p).
//!
//! ```
//! use kothe::{builtin, Algebra, Module, Side};
//!
//! let a = Algebra::new(builtin::ex61());
//! let r = Module::regular(&a, Side::Right);
//! let parts = kothe::decompose(&r).unwrap();
//! let mut dims: Vec<usize> = parts.iter().map(|(m, _)| m.dim()).collect();
//! dims.sort();
//! assert_eq!(dims, [1, 1, 3]);
//! ```

pub mod algebra;
pub mod builtin;
pub mod classify;
pub mod cli;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod field;
mod gf2;
pub mod io;
pub mod lattice;
pub mod matrix;
pub mod module;
pub mod profile;
pub mod radical;
pub mod subspace;

pub use algebra::{Algebra, AlgebraSpec, Side};
pub use decompose::{decompose, decompose_with, is_indecomposable, DecomposeOptions, Order};
pub use error::{Error, Result};
pub use field::{Fp, PrimeField};
pub use matrix::Mat;
pub use module::Module;
pub use subspace::Subspace;
