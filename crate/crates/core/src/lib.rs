//! Exact computations with the Kauffman-bracket stated skein algebra of the bigon
//! and the quantum coordinate algebra `O_{q^2}(SL_2)`.

pub mod bigon;
pub mod cache;
pub mod cli;
pub mod comodule;
pub mod diagram;
pub mod error;
pub mod excision;
pub mod expr;
pub mod internal;
pub mod linalg;
pub mod lincomb;
pub mod matching;
pub mod oracle;
pub mod report;
pub mod scalar;
pub mod sl2;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{HalfLaurent, Specialization};
