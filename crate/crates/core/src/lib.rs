//! Exact computations in Adelman categories (free abelian categories) over
//! additive closures of quivers with relations.
//!
//! The layers, bottom-up:
//!
//! - [`intlinalg`]: Hermite/Smith normal forms and finitely presented
//!   abelian groups over `Z`.
//! - [`quivercat`]: the `Z`-linear path category of a finite acyclic quiver
//!   modulo relations.
//! - [`addclosure`]: matrices over it, plus the homotopy-equation solver.
//! - [`adelman`]: objects `(rho, gamma)`, kernels, cokernels, homology and
//!   all decisions, each positive answer carrying a witness certificate.
//! - [`homgroups`]: Hom-sets of the Adelman category as abelian groups.
//! - [`evalfunctor`]: the exact functor induced by a representation into
//!   finitely presented abelian groups, used as an independent oracle.
//! - [`provers`]: scripted checks of universal instances (snake lemma,
//!   refined five lemma).
//! - [`audit`]: seeded randomized self-checks built on the layers above.

pub mod addclosure;
pub mod adelman;
pub mod audit;
pub mod catalog;
pub mod error;
pub mod evalfunctor;
pub mod homgroups;
pub mod intlinalg;
pub mod provers;
pub mod quivercat;

pub use error::{Error, Result};
