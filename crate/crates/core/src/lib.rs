//! Exact computations with quasisymmetric Schur functions.
//!
//! The crate covers compositions and their orders, reverse tableaux and
//! composition tableaux, Schensted and skyline insertion, expansions in the
//! monomial and fundamental bases, the quasisymmetric Pieri rules, and the
//! Hall-Littlewood and Macdonald-type generating functions built from
//! non-attacking fillings.

pub mod combinatorics;
pub mod error;
pub mod insertion;
pub mod macdonald;
pub mod oracle;
pub mod pieri;
pub mod poly;
pub mod qsym;
pub mod tableaux;
pub mod verify;

pub use combinatorics::{Composition, Partition, WeakComposition};
pub use error::{Error, Result};
pub use poly::{QtPoly, XPoly};
