//! Exact character theory for the finite general linear groups `GL_n(F_q)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`cyclotomics`] exact arithmetic in cyclotomic fields, the value type of every character;
//! * [`ffield`] Conway-polynomial towers of finite fields, discrete logs and multiplicative
//!   characters;
//! * [`partitions`] dominance order, Kostka numbers, symmetric-group characters and Green
//!   polynomials;
//! * [`glnq`] conjugacy classes of `GL_n(F_q)` and their centralizers;
//! * [`classfun`] class functions, inner products and Brauer restriction;
//! * [`dlcox`] Deligne–Lusztig characters of the Coxeter torus;
//! * [`hcseries`] Harish-Chandra series over a simple cuspidal support;
//! * [`jlmod`] the level-zero transfer maps mod `p` and mod `ℓ`, Serre weights, trace formulas;
//! * [`nilstrata`] Jordan types of nilpotent operators and the kernel-dimension criterion;
//! * [`oracle`] brute-force group enumeration and Dixon–Schneider character tables, used to
//!   cross-check everything above;
//! * [`verify`] the verification suites, also reachable from the `glnchar verify` command.

mod arith;
pub mod classfun;
pub mod cli;
pub mod cyclotomics;
pub mod dlcox;
pub mod ffield;
pub mod glnq;
pub mod hcseries;
pub mod jlmod;
pub mod linalg;
pub mod nilstrata;
pub mod oracle;
pub mod partitions;
pub mod verify;

use thiserror::Error;

pub use classfun::{ClassFunction, Support};
pub use cyclotomics::{Cyclotomic, Rational};
pub use ffield::{FieldTower, FqElem, MultChar};
pub use glnq::{GLnClassData, GroupContext, IrrPoly};
pub use partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A request exceeding the configured table or group-size limits.
    #[error("configuration error: {0}")]
    Config(String),
    /// An internal consistency check failed. Always a bug or a falsified hypothesis.
    #[error("consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
