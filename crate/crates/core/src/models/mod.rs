//! Concrete plane models.

mod explicit;
mod finite;
mod moulton;
pub(crate) mod rational;

pub use explicit::{ExplicitLine, ExplicitPlane, ExplicitPoint};
pub use finite::{is_prime, FiniteLine, FiniteLineKind, FinitePlane, FinitePoint};
pub use moulton::{moulton_eval, MoultonLine, MoultonPlane};
pub use rational::{QLine, QPoint, RationalPlane};

/// Largest prime order accepted by [`FinitePlane::new`]. Line point sets
/// are precomputed, so memory grows as `p³`.
pub const MAX_FINITE_ORDER: u32 = 127;

/// Default bound on sampled numerators and denominators.
pub const DEFAULT_SAMPLE_BOUND: i64 = 100;
