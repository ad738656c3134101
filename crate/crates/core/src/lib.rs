//! Exact computations in the subring of the Grothendieck ring of varieties
//! generated by the Lefschetz class `L` and declared symbolic generators.
//!
//! The crate covers symmetric powers via the Kapranov zeta function, the
//! Poincare / Hodge-Deligne / point-count motivic measures, the
//! Galkin-Shinder cut-and-paste relation for the Fano variety of lines and
//! the coefficient cascades it forces, numerical classifiers for cubic
//! hypersurfaces, exact-rational Groebner bases for presentation kernels,
//! and end-to-end certified case studies. All arithmetic is exact; there is
//! no floating point anywhere.

pub mod batch;
pub mod classify;
pub mod error;
pub mod fano;
pub mod generate;
pub mod ideal;
pub mod measure;
pub mod motivic;
pub mod poly;
pub mod study;

pub use error::Error;
pub use poly::{BiPoly, MultiPoly, Rational, UniPoly};

/// Shorthand result type used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
