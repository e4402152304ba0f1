//! Numerical invariants of algebraically split links read off from link
//! Floer data: lattice H-functions, multivariable Alexander and Conway
//! polynomial relations, Milnor triple linking, Casson invariants of
//! surgeries, d-invariant formulas and bounds, and detection criteria for
//! the unlink, the Whitehead link and the Borromean rings.
//!
//! The crate is organized bottom-up:
//!
//! * [`laurent`]: exact Laurent polynomials with half-integer exponents.
//! * [`lattice`]: H, h and h' functions on `Z^n`.
//! * [`alexander`]: conversions between Alexander polynomials and H-models.
//! * [`invariants`]: a2, Sato-Levine, triple linking, Casson, d-invariants.
//! * [`detect`]: detection and feasibility verdicts.
//! * [`catalog`], [`render`], [`verify`]: link catalogs, text output and
//!   whole-catalog checks.

pub mod alexander;
pub mod catalog;
pub mod detect;
pub mod invariants;
pub mod laurent;
pub mod lattice;
pub mod render;
pub mod verify;

pub use alexander::{ChiPrimeTable, NormalizedAlexander};
pub use catalog::{Catalog, LinkFlags, LinkRecord};
pub use detect::{Conclusion, Verdict};
pub use invariants::{DInvariantBound, Rational};
pub use laurent::{ConwayPoly, ExpVec, LaurentPoly};
pub use lattice::{HModel, HPrimeTable, SublinkId};
