//! Exact computations with baby Verma modules over reduced enveloping algebras
//! of `gl_N` and `sl_N` in odd characteristic `p`.
//!
//! The crate is layered bottom-up:
//!
//! * [`exactlin`]: prime-field and rational linear algebra.
//! * [`rootdata`]: type-A roots, heights, Weyl group and dot action.
//! * [`envelope`]: the matrix realization of the Lie algebra, p-characters and
//!   PBW straightening.
//! * [`modrep`]: explicit modules given by action matrices, with composition
//!   factors, isomorphism certificates, twisting and gradings.
//! * [`verma`]: baby Verma modules, the height filtration and the certified
//!   filtration of a tensor product of two baby Vermas.
//! * [`charzero`]: truncated Verma modules over the rationals, reduction mod p
//!   and the quotient by the p-central ideal.
//! * [`pyramids`]: pyramids, fillings, lifting, Robinson–Schensted shapes,
//!   centralizer dimensions and the minimal-dimension pipeline.
//! * [`report`]: deterministic JSON reports and the scenario suites used by the
//!   command-line driver.

pub mod charzero;
pub mod envelope;
pub mod exactlin;
pub mod modrep;
pub mod pyramids;
pub mod report;
pub mod rootdata;
pub mod verma;

mod error;

pub use error::{Error, Result};
