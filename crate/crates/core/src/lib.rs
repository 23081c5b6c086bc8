//! Exact computation of refined sheaf-counting invariants of local K3
//! surfaces: Hilbert-scheme χ_{-t} genera, refined stable pairs, refined
//! BPS invariants and refined Vafa-Witten invariants, together with the
//! identities that tie them together.

pub mod cli;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod series;

pub use error::{Error, Result};
