//! Mod-2 cohomology of the oriented Grassmannians of 3-planes in 2^t-space,
//! presented and computed through GF(2) Groebner bases.
//!
//! The crate has three layers:
//!
//! * [`gf2`]: sparse polynomials over GF(2) in graded monomials, plus the
//!   bit-packed linear algebra used by cross-checks;
//! * [`groebner`]: a generic Buchberger engine with normal forms, reduced
//!   bases, and standard monomials;
//! * [`grassmann`] and [`steenrod`]: the cohomology rings themselves, their
//!   additive bases and Betti numbers, Steenrod squares, and the verification
//!   suites that recompute every structural claim from first principles.

pub mod error;
pub mod gf2;
pub mod grassmann;
pub mod groebner;
pub mod report;
pub mod steenrod;

pub use error::Error;
