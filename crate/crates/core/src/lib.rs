//! Exact computation with finitely presented pointed Hopf algebras.
//!
//! The crate covers exact scalars ([`scalars`]), noncommutative
//! rewriting ([`freealg`]), the coalgebra layer ([`hopfstruct`]), a set
//! of ready-made presentations ([`presets`]), linear solvers for
//! skew-primitive and group-like elements ([`solver`]), growth and
//! Gelfand-Kirillov dimension estimation ([`growth`]), small Lie algebras
//! ([`liealg`]), and the `hopfforge` command line ([`cli`]).

pub mod cli;
pub mod echelon;
pub mod error;
pub mod freealg;
pub mod growth;
pub mod hopfstruct;
pub mod liealg;
pub mod presets;
pub mod scalars;
pub mod solver;

pub use error::{Error, Result};
pub use freealg::{Alphabet, Generator, NcPoly, Word};
pub use hopfstruct::{GenKind, HopfPresentation, TensorPoly};
pub use scalars::Scalar;
