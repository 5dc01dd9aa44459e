//! Exterior-algebra side of the Bernstein–Gel'fand–Gel'fand correspondence
//! over prime fields: graded free modules over `E = ∧⟨e0..en⟩`, minimal free
//! resolutions, Tate resolution windows and the sheaf cohomology tables they
//! encode, together with sampling experiments over spaces of Tate-type
//! matrices.

pub mod error;
pub mod bgg;
pub mod cli;
pub mod efree;
pub mod eres;
pub mod extalg;
pub mod linalg;
pub mod paramspace;
pub mod smod;
pub mod tate;
mod textfmt;

pub use error::{Error, Result};
