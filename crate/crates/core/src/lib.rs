//! Intuitionistic fuzzy parameterized intuitionistic fuzzy soft sets.
//!
//! The layers build on each other:
//!
//! - [`ifset`]: degree pairs `(mu, nu)` with `mu + nu <= 1` and finite IF sets.
//! - [`soft`]: IF soft sets, parameter-indexed families of IF sets, with ∧/∨ products.
//! - [`omega`]: Ω-sets, where the parameters carry IF degrees too, and their algebra.
//! - [`decision`]: aggregation of an Ω-set and selection of the opportune alternative.
//! - [`problem`], [`report`], [`cli`]: JSON files and the `ifp` command.
//!
//! All values are immutable and all operations are pure, so everything here is
//! `Send + Sync` and can be shared freely across threads.

pub mod cli;
pub mod decision;
pub mod error;
pub mod ifset;
pub mod omega;
pub mod problem;
pub mod report;
pub mod soft;
pub mod universe;

pub use decision::{aggregate, decide, select, Aggregate, DecisionReport, Ties};
pub use error::{Error, ErrorClass, Result};
pub use ifset::{IFSet, IFValue, TOLERANCE};
pub use omega::OmegaSet;
pub use problem::{PairedFile, ProblemFile};
pub use report::ReportFile;
pub use soft::{IFSoftSet, PairedIFSoftSet};
pub use universe::{Label, ParameterSpace, Universe};
