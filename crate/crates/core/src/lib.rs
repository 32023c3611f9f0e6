//! Steady-state model and trade-off optimization toolkit for the driven
//! three-level (SSD) quantum refrigerator.
//!
//! The crate is organized around five layers:
//!
//! * [`model`] — domain types, Bose occupations, and the steady state of the
//!   driven three-level system, via a direct linear solve, a literal closed
//!   form, and a brute-force null-space oracle over the full nine-component
//!   generator.
//! * [`thermo`] — input power, cooling power, rejected heat, COP, and the
//!   Ω and χ trade-off objectives, each with a state-based route and an
//!   independent parameter-level closed form.
//! * [`regimes`] — the low-temperature and high-temperature approximations of
//!   the Ω objective that admit closed-form optimization.
//! * [`analytic`] — closed-form optima, COP bound families, series
//!   expansions, and cooling-power ratios as functions of the Carnot COP.
//! * [`optimize`] — deterministic derivative-free maximization (1-D and 2-D)
//!   and asymptotic-series coefficient fitting, used to confirm every
//!   analytic result numerically.
//!
//! Batch helpers in [`exec`] run data-parallel under the `parallel` feature
//! (enabled by default) and fall back to plain iteration without it; output
//! ordering is identical either way.

pub mod analytic;
pub mod error;
pub mod exec;
pub mod model;
pub mod optimize;
pub mod regimes;
pub mod thermo;

pub use error::{Error, Result};
