//! Delta-matroid twist widths and ribbon-graph partial duality.
//!
//! The crate has four layers:
//!
//! * [`set_system`]: set systems over `u64` bit-vectors, twists, widths,
//!   the symmetric exchange axiom, the maximum twist width and the hat
//!   family of feasible sets attaining it;
//! * [`monotone`]: construction of element sequences whose prefix-twist
//!   widths rise monotonically to the maximum, trace verification, and an
//!   exhaustive existence search;
//! * [`ribbon`]: ribbon graphs as signed rotation systems: boundary
//!   tracing, Euler genus, quasi-tree enumeration, partial duality and the
//!   partial-dual genus formulas;
//! * [`oracle`]: brute-force baselines and seeded generators that certify
//!   every shortcut against its literal definition.
//!
//! [`io`] holds the JSON file formats and [`cli`] the command-line surface
//! of the `twistwidth` binary. See the `examples/` directory for one
//! runnable program per capability.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod monotone;
pub mod oracle;
pub mod ribbon;
pub mod set_system;

pub use error::{Error, Result};
pub use monotone::{ChoiceStrategy, Script, ScriptStep, TraceVerdict, WidthTrace};
pub use ribbon::{are_isomorphic, BoundaryReport, Edge, RibbonGraph};
pub use set_system::{AxiomVerdict, SetSystem, Subset, WidthSummary};
