//! Numerical semigroups and the nearly Gorenstein property.
//!
//! * [`semigroup`]: construction, Apéry tables, gaps, pseudo-Frobenius numbers, factorizations.
//! * [`ideals`]: relative ideals, the canonical ideal and the trace-style test.
//! * [`nearly`]: symmetric / almost symmetric / nearly Gorenstein, NG-vectors, canonical reduction.
//! * [`rfmat`]: RF⁺ and RF⁻ row-factorization matrices.
//! * [`constructions`]: gluing, dilation, generalized arithmetic sequences.
//! * [`enumeration`]: the semigroup tree and exhaustive sweeps.

pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod ideals;
pub mod nearly;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod rfmat;
pub mod semigroup;

pub use error::{Error, Result};
pub use nearly::{HierarchyReport, NgVector};
pub use rfmat::{RfKind, RfMatrix};
pub use semigroup::{Factorization, NumericalSemigroup};
