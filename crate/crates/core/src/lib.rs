//! Colored words, circloids and exact Macdonald polynomial combinatorics.
//!
//! Every statistic is computed exactly. Shapes put row 1 at the bottom, and
//! circloids are stored clockwise from the star; a word `w_1 .. w_n` is
//! inscribed counter-clockwise, so its clockwise listing is `w` reversed.

pub mod cli;
pub mod colored;
pub mod crystals;
pub mod enumerate;
pub mod error;
pub mod fillings;
pub mod maps;
pub mod qtpoly;
pub mod shapes;
pub mod symfunc;
pub mod verify;
pub mod words;

pub use colored::{Circloid, ColoredLetter, ColoredTabloid};
pub use error::{Error, Result};
pub use fillings::{Filling, Punctured};
pub use qtpoly::QTPoly;
pub use shapes::{Cell, Composition, Partition, SkewShape};
pub use symfunc::{Basis, SymExpansion};
pub use words::Word;
