//! Numerical toolkit for the shift realization of bounded analytic transfer
//! functions on the right half-plane.
//!
//! The state space is the Hardy space H2 of the open right half-plane,
//! discretized on a uniform time/frequency grid so that the Laplace/Fourier
//! pair is exactly unitary. On top of that sit:
//!
//! * [`signal`] — dual time/frequency representation, Parseval-exact
//!   transforms and the causal/anticausal splitting of L2(iR),
//! * [`symbols`] — a catalog of evaluable transfer symbols (rational, delay,
//!   Blaschke products, inner functions built from skew-adjoint generators),
//! * [`realization`] — the left-shift semigroup, its resolvent and generator,
//!   the control and observation maps, and trajectory simulation,
//! * [`hankel`] — the Hankel operator, a time-domain matrix oracle for it,
//!   singular value analysis and range diagnostics,
//! * [`model_space`] — for inner symbols, the co-invariant subspace and the
//!   restricted (minimal) realization with its partial-isometry identities,
//! * [`stability`] — exponential stability / group verdicts from the modulus
//!   of the symbol on strips and half-planes,
//! * [`weighted`] — the exponentially weighted state norm and the
//!   non-equivalence demonstration for realizations,
//! * [`report`] / [`suites`] — deterministic verification suites behind the
//!   command line front end.

pub mod error;
pub mod grid;
pub mod hankel;
pub mod laplace;
pub mod model_space;
pub mod poly;
pub mod realization;
pub mod report;
pub mod signal;
pub mod smallmat;
pub mod stability;
pub mod suites;
pub mod symbols;
pub mod weighted;

pub use error::{Error, Result};
pub use grid::GridConfig;
pub use realization::{RealizationContext, StateVector};
pub use signal::{FreqSignal, Half, Support, TimeSignal};
pub use symbols::TransferSymbol;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
