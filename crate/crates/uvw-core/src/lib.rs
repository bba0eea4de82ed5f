//! uvw-core: an exact-arithmetic workbench for finite representation type
//! quiver algebras.
//!
//! Given such an algebra, the crate constructs the indecomposable objects of
//! the two-term homotopy category, generates the u-equations and the
//! F-hat-equations, computes the rational parametrization v_X, builds the
//! g-vector fan, performs Jasso and quotient reductions, and verifies the
//! resulting identities (exchange relations, tropical multiplicities,
//! dilogarithm sums, amplitude factorization) exactly or numerically as
//! appropriate.

pub mod algebra;
pub mod builtins;
pub mod catalog;
pub mod equations;
pub mod fan;
pub mod grassmann;
pub mod homotopy;
pub mod io;
pub mod linalg;
pub mod module;
pub mod numerics;
pub mod poly;
pub mod rat;
pub mod reductions;
pub mod report;

pub use algebra::{AlgebraError, QuiverAlgebra};
pub use catalog::{Catalog, CatalogError};
pub use equations::EquationSet;
pub use fan::GFan;
pub use homotopy::TwoTermComplex;
pub use module::{ModuleRep, SplitMix64};
pub use poly::{Poly, RatFn};
pub use rat::Rat;
pub use report::Report;
