//! Exact closure computations on prime spectra.
//!
//! The crate models a handful of concrete commutative rings (the integers,
//! residue rings `Z/n`, prime fields, `F_p[x]`, square-free monomial
//! quotients and their localizations at the irrelevant ideal, finite
//! products, and a symbolic one-dimensional local ring with infinitely many
//! minimal primes), their prime spectra, and the Zariski, flat (inverse) and
//! patch (constructible) closures of finite and cofinite subsets.
//!
//! Images of the induced maps `Spec(prod R/p) -> Spec(R)` and
//! `Spec(prod R_p) -> Spec(R)` are computed both by closed formulas and, for
//! finite inputs, by enumerating the tame primes of the target product.

pub mod construction;
pub mod error;
pub mod maps;
pub mod products;
pub mod rings;
pub mod spectrum;
pub mod topology;

pub use error::{Error, Result};
pub use rings::{CoefficientField, IdealRepr, RingElement, RingExpr};
pub use spectrum::{PrimePoint, SpecSubset};
pub use topology::Topology;
