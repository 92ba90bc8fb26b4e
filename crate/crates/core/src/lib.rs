//! Countable compact metric spaces as ordinal-indexed trees.
//!
//! A space is described by a [`Compactum`] tree, classified by its
//! Cantor-Bendixson characteristic `(rank, count)`, and shown homeomorphic to
//! the ordinal `w^rank * count + 1` through explicit labelings.

pub mod cb;
pub mod compactum;
pub mod dyadic;
pub mod error;
pub mod ordinal;
pub mod partition;

pub use cb::{cb_char, classify, equivalent, CBPair};
pub use compactum::{embed, Address, Compactum, Piece, Tail};
pub use dyadic::Dyadic;
pub use error::{Error, ParseError, Result};
pub use ordinal::{ordinal_cb, Ordinal};
pub use partition::{cb_image, cb_tilde, realize, ClassSummary, ClassTotal, ModelSpace};
