//! Exact character theory of symmetric groups and FI-module stability
//! bookkeeping for the cohomology of the groups Γ_{n,s} (homotopy
//! equivalences of a rank-n graph fixing s marked points).
//!
//! Everything is computed in arbitrary-precision rational arithmetic;
//! there is no floating point anywhere in this crate.
//!
//! The modules build on each other bottom-up:
//!
//! - [`partition`]: integer partitions, conjugation, padding λ ↦ `λ[s]`,
//!   hook lengths, bounded enumeration.
//! - [`symchar`]: cycle types, class sizes, Murnaghan–Nakayama character
//!   values, inner products, decomposition into irreducibles.
//! - [`induct`]: induction products P ∘ Q, Littlewood–Richardson
//!   coefficients (tableau and character methods), Pieri evaluation of
//!   the free FI-module M(λ), wedge-power characters, Schur dimensions.
//! - [`charpoly`]: character polynomials in cycle-count variables X_j,
//!   with exact interpolation of the stable polynomial f_λ for P(λ).
//! - [`fistab`]: stability types (I, S), weight bounds, the homology and
//!   filtration propagation rules, and a first-quadrant spectral grid.
//! - [`gamma`]: everything specific to H^i(Γ_{n,s}): the rank-1 closed
//!   form, the E₂-page description, stability-bound assembly, stored
//!   stable decompositions and their character polynomials.

pub mod arith;
pub mod charpoly;
mod error;
pub mod fistab;
pub mod gamma;
pub mod induct;
pub mod partition;
pub mod symchar;

pub use charpoly::{CharPolynomial, DimensionPolynomial, FallingTerm};
pub use error::{Error, ErrorKind, Result};
pub use fistab::{Coefficient, Degree, EdgePolicy, FIExpr, FIExprKind, SpectralGrid, StabilityType};
pub use gamma::{E2Page, GammaQuery, SchurWeylReport, StableDecomp, StabilityReport};
pub use induct::InductionProduct;
pub use partition::{PaddedPartition, Partition};
pub use symchar::{CharacterTable, ClassFunction, CycleCounts, IrrDecomp};
