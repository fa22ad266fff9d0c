//! Affine incidence planes and the additive group of the points of a line.
//!
//! Points on a line `OI` of an affine plane are added by a parallel-line
//! construction through an auxiliary point off the line. In planes satisfying
//! Desargues' axiom the result does not depend on the auxiliary point and the
//! points of the line form an abelian group with identity `O`.
//!
//! The crate provides the plane contract ([`incidence`]), concrete models
//! ([`models`]): AG(2,p), AG(2,Q) and the Moulton plane, configuration
//! checkers for the affine axioms, Desargues and little Pappus
//! ([`axioms`]), the addition construction with full traces
//! ([`arithmetic`]), Cayley-table analysis ([`group`]), text parsers
//! ([`parse`]) and SVG rendering of construction traces ([`diagram`]).

pub mod arithmetic;
pub mod axioms;
pub mod diagram;
pub mod error;
pub mod group;
pub mod incidence;
pub mod models;
pub mod parse;
pub mod rational;
pub mod report;

pub use error::{GeometryError, ParseError, Result};
pub use incidence::{AffinePlane, Meet, SeedRng, ThreeVertex};
