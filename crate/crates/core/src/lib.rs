//! Exact invariants of rational surface singularities, computed from the
//! weighted dual graph of a resolution.
//!
//! The crate works purely on the intersection lattice: fundamental and
//! canonical trace cycles come from computation sequences, Gorenstein and
//! nearly Gorenstein status from several independent criteria that are
//! cross-checked at runtime, and quotient singularities are described by
//! their Hirzebruch–Jung branches and Pinkham–Demazure divisors.
//!
//! ```
//! use resgraph::{dsl, engine};
//!
//! let g = dsl::parse_graph("star -2 : [-3] [-3] [-2]").unwrap();
//! let (z, _) = engine::fundamental_cycle(&g).unwrap();
//! assert_eq!(z.coefficients(), &[2, 1, 1, 1]);
//! assert_eq!(engine::multiplicity(&g).unwrap(), 4);
//! ```

mod error;
pub(crate) mod exact;

pub mod census;
pub mod classify;
pub mod cycle;
pub mod dsl;
pub mod engine;
pub mod fixtures;
pub mod form;
pub mod graph;
pub mod quotient;
pub mod report;
pub mod reproduce;

pub use cycle::{Cycle, QCycle};
pub use error::{Error, GraphError, Result};
pub use form::IntersectionForm;
pub use graph::{CanonicalNumerics, WeightedDualGraph};
