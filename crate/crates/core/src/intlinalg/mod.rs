//! Exact linear algebra over the integers.
//!
//! Everything above this layer reduces to two primitives: the row Hermite
//! normal form and integer solving of `X * A = B`.

mod group;
mod hermite;
mod matrix;
mod smith;

pub use group::{homology_of, is_exact_at, same_lattice, subquotient, FpAbGroup, GroupHom};
pub use hermite::{coordinates, hnf, lattice_basis, left_kernel, solve_left, HermiteForm};
pub use matrix::IntMatrix;
pub use smith::{snf, SmithInvariants};
