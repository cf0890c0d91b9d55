//! Exact homological invariants of finite-dimensional monomial algebras
//! `kQ/I`: projective and injective dimensions of simples, torsion radicals
//! attached to sets of simples, radical layer lengths, and the upper bounds
//! on derived and singularity category dimensions built from them.

pub mod algebra;
pub mod bounds;
pub mod check;
pub mod corpus;
pub mod linalg;
pub mod linrep;
pub mod pathmod;
pub mod presentation;

pub use algebra::{Algebra, AlgebraError, Path, PathId, DEFAULT_BASIS_LIMIT};
pub use pathmod::{HomDim, SimpleSet};
pub use presentation::{parse, validate, Presentation, PresentationError};
