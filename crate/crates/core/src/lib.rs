//! Exact-arithmetic kernels for pseudo-Anosov stretch factors.
//!
//! The crate rebuilds, end to end and without floating point in any
//! certificate, the algebra behind a family of two-multitwist mapping
//! classes: integer-polynomial root location against the unit circle,
//! Salem/Pisot classification, starlike-tree spectra, the Perron-Frobenius
//! data of intersection matrices, symplectic homology actions, and
//! theorem/table verification pipelines on top of them.
//!
//! ```
//! use salem_core::{classify_number, salem_family_poly, NumberClass};
//! use salem_core::algebraic::AlgebraicReal;
//!
//! // The genus-2 member of the family: x^4 - 2x^3 - 2x^2 - 2x + 1.
//! let p = salem_family_poly(2, 4).unwrap();
//! assert_eq!(classify_number(&p).unwrap().class, NumberClass::Salem);
//!
//! // Its stretch factor, exactly isolated and then printed to 4 digits.
//! let lambda = AlgebraicReal::largest_root(&p).unwrap();
//! assert_eq!(salem_core::numfmt::format_decimals(&lambda.approx(6), 4), "2.8901");
//! ```

pub mod algebraic;
pub mod cyclotomic;
pub mod dataset;
pub mod error;
pub mod graphspec;
pub mod homology;
pub mod intpoly;
pub mod linalg;
pub mod modulus;
pub mod numfmt;
pub mod powerpoly;
pub mod rootloc;
pub mod sturm;
pub mod thurston;
pub mod verify;

pub use algebraic::AlgebraicReal;
pub use error::{Error, Result};
pub use intpoly::{salem_family_poly, salem_family_q_poly, IntPoly};
pub use linalg::IntMatrix;
pub use modulus::MaxModulus;
pub use rootloc::{
    classify_number, prove_irreducible_one_big_root, unit_circle_location, IrreducibilityVerdict,
    NumberClass, RootLocation,
};
