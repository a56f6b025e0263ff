//! WNG-constrained adaptive diagonal loading for MPDR and GSC beamformers.
//!
//! Snapshot-deficient sample correlation matrices make adaptive beamformers
//! collapse: the weight norm explodes and the white noise gain (WNG) drops,
//! cancelling the target. This crate bounds the WNG deterministically by
//! mapping a WNG floor to a cap on the correlation matrix condition number
//! and loading the diagonal just enough to enforce that cap, with three
//! eigenvalue-bound estimators trading accuracy for cost:
//!
//! * trace bound, O(M) per frame,
//! * Gershgorin discs, O(M²),
//! * exact eigendecomposition, O(M³).
//!
//! The same loading rule drives both a direct MPDR inversion and the
//! partitioned generalized sidelobe canceller, plus baselines (post-hoc
//! weight scaling, omniscient Capon, delay-and-sum) and a reproducible
//! birth-death interference simulation with ensemble metrics.
//!
//! See the `examples/` directory for runnable entry points per capability,
//! and the `beamload` binary for the batch experiment driver.

pub mod beamform;
pub mod error;
pub mod experiment;
pub mod loading;
pub mod metrics;
pub mod numerics;
pub mod scenario;
pub mod scm;

pub use error::{Error, Result};
