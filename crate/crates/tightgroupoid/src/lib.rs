//! Finite models of tight and locally tight filter spectra over transitive
//! relations, ordered groupoids, coset groupoids and the locally tight
//! étale groupoid, with executable checks of their structural laws.

pub mod bits;
pub mod coset;
pub mod error;
pub mod generators;
pub mod groupoid;
pub mod harness;
pub mod io;
pub mod laws;
pub mod order;
pub mod spectrum;
pub mod tight;
pub mod topology;

pub use error::{Error, Result};
pub use laws::LawReport;
pub use order::{classify, AxiomReport, TransRel};
