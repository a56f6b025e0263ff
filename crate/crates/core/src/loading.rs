//! WNG-constrained adaptive diagonal loading.
//!
//! A distortionless beamformer built from a Hermitian positive-definite
//! matrix with condition number κ has white noise gain at least
//! M·4κ/(κ+1)² (Kantorovich). Inverting that relation turns a WNG floor
//! W_min into a condition-number cap
//!
//!   κ_max = (2·A_G − 1) + 2·√(A_G·(A_G − 1)),   A_G = M / W_min,
//!
//! and the minimal diagonal load that enforces the cap on a matrix with
//! extreme eigenvalues (λ_min, λ_max) is
//!
//!   μ = max(0, (λ_max − κ_max·λ_min) / (κ_max − 1)).
//!
//! The extreme eigenvalues can be estimated three ways, trading tightness
//! for cost: trace bound O(M), Gershgorin discs O(M²), exact EVD O(M³).
//! Looser bounds only ever increase μ, so the WNG floor holds in every mode.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{hermitian_evd, HermitianMatrix, SpectralBounds};

pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

pub fn linear_to_db(x: f64) -> f64 {
    10.0 * x.log10()
}

/// Eigenvalue-bound estimation mode, in increasing cost and tightness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LoadingMode {
    /// λ_max ≤ Tr(R), λ_min taken as 0. O(M), strictly conservative.
    Trace,
    /// Gershgorin disc bounds. O(M²), basis-dependent.
    Gershgorin,
    /// Exact extreme eigenvalues. O(M³), minimal loading.
    #[serde(rename = "evd")]
    ExactEvd,
}

impl LoadingMode {
    pub fn label(self) -> &'static str {
        match self {
            LoadingMode::Trace => "trace",
            LoadingMode::Gershgorin => "gershgorin",
            LoadingMode::ExactEvd => "evd",
        }
    }
}

/// A WNG floor together with the condition-number cap it implies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WngConstraint {
    /// Floor on the white noise gain, linear power ratio in [1, M].
    pub wng_min: f64,
    /// Number of array elements M.
    pub array_size: usize,
    /// Maximum allowable condition number implied by `wng_min`.
    pub kappa_max: f64,
}

impl WngConstraint {
    pub fn new(wng_min: f64, array_size: usize) -> Result<Self> {
        let kappa_max = kappa_max_from_wng(wng_min, array_size)?;
        Ok(Self {
            wng_min,
            array_size,
            kappa_max,
        })
    }

    pub fn from_db(wng_min_db: f64, array_size: usize) -> Result<Self> {
        Self::new(db_to_linear(wng_min_db), array_size)
    }
}

/// Per-frame record of one loading computation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoadingDecision {
    pub mode: LoadingMode,
    /// The eigenvalue bounds the decision was based on.
    pub bounds: SpectralBounds,
    /// Condition-number estimate before loading; +∞ when the lower bound is 0.
    pub kappa_unloaded: f64,
    /// The diagonal load to apply.
    pub mu: f64,
    /// Bound-implied condition number after loading, ≤ κ_max.
    pub kappa_loaded_bound: f64,
}

/// Map a WNG floor to the maximum allowable condition number.
///
/// Errors when the floor is infeasible: a distortionless beamformer has
/// WNG of at most M, and one below 1 would allow arbitrary weight-norm
/// blowup, so `wng_min` must lie in [1, M].
pub fn kappa_max_from_wng(wng_min: f64, array_size: usize) -> Result<f64> {
    let m = array_size as f64;
    // Grace of a few ulps so that w = M given in dB round-trips.
    let tol = 1e-12 * m;
    if !wng_min.is_finite() || wng_min < 1.0 - tol || wng_min > m + tol {
        return Err(Error::WngFloorOutOfRange {
            wng_min,
            array_size,
        });
    }
    let gain_ratio = (m / wng_min).max(1.0);
    Ok((2.0 * gain_ratio - 1.0) + 2.0 * (gain_ratio * (gain_ratio - 1.0)).sqrt())
}

/// Minimal diagonal load that brings the bound-implied condition number of
/// R + μI under `kappa_max`.
///
/// A cap of exactly 1 demands a perfectly flat spectrum, which no finite
/// load achieves unless the bounds already coincide; that case is reported
/// as `LoadingInfeasible` so the caller can relax the WNG floor (or fall
/// back to the quiescent beamformer).
pub fn required_loading(bounds: SpectralBounds, kappa_max: f64) -> Result<f64> {
    if kappa_max <= 1.0 {
        return if bounds.upper <= bounds.lower {
            Ok(0.0)
        } else {
            Err(Error::LoadingInfeasible {
                kappa_max,
                lower: bounds.lower,
                upper: bounds.upper,
            })
        };
    }
    Ok(((bounds.upper - kappa_max * bounds.lower) / (kappa_max - 1.0)).max(0.0))
}

/// Trace bound: λ_max ≤ Tr(R) for PSD R, with λ_min taken as 0
/// (worst-case snapshot deficiency). Reads only the diagonal.
pub fn bounds_trace(r: &HermitianMatrix) -> Result<SpectralBounds> {
    let n = r.order();
    let mut tr = 0.0;
    let mut max_abs = 0.0f64;
    for i in 0..n {
        let d = r.get(i, i).re;
        tr += d;
        max_abs = max_abs.max(d.abs());
    }
    for i in 0..n {
        let d = r.get(i, i).re;
        if d < -1e-12 * max_abs.max(1.0) {
            return Err(Error::NotPsd { index: i, value: d });
        }
    }
    Ok(SpectralBounds::new(0.0, tr.max(0.0)))
}

/// Gershgorin disc bounds: every eigenvalue lies in at least one disc
/// centred on a diagonal entry with radius the absolute off-diagonal row
/// sum. The lower bound is clamped at 0 for PSD inputs.
pub fn bounds_gershgorin(r: &HermitianMatrix) -> SpectralBounds {
    let n = r.order();
    let mut upper = f64::NEG_INFINITY;
    let mut lower = f64::INFINITY;
    for i in 0..n {
        let center = r.get(i, i).re;
        let mut radius = 0.0;
        for j in 0..n {
            if j != i {
                radius += r.get(i, j).norm();
            }
        }
        upper = upper.max(center + radius);
        lower = lower.min(center - radius);
    }
    let lower = lower.max(0.0);
    SpectralBounds::new(lower, upper.max(lower))
}

/// Exact extreme eigenvalues from a full decomposition, with the lower one
/// clamped at 0 so that downdating round-off on PSD trackers cannot leak a
/// negative bound into the loading formula.
pub fn bounds_evd(r: &HermitianMatrix) -> Result<SpectralBounds> {
    let d = hermitian_evd(r)?;
    let lower = d.lambda_min().max(0.0);
    Ok(SpectralBounds::new(lower, d.lambda_max().max(lower)))
}

/// Estimate eigenvalue bounds in the requested mode and compute the loading
/// decision for one matrix.
pub fn compute_loading(
    r: &HermitianMatrix,
    mode: LoadingMode,
    constraint: &WngConstraint,
) -> Result<LoadingDecision> {
    if r.order() != constraint.array_size {
        return Err(Error::DimensionMismatch {
            expected: constraint.array_size,
            actual: r.order(),
        });
    }
    let bounds = match mode {
        LoadingMode::Trace => bounds_trace(r)?,
        LoadingMode::Gershgorin => bounds_gershgorin(r),
        LoadingMode::ExactEvd => bounds_evd(r)?,
    };
    let mut mu = required_loading(bounds, constraint.kappa_max)?;

    // Degenerate all-zero windows would leave the loaded matrix singular;
    // an absolute floor far below any physical power keeps Cholesky feasible
    // without disturbing well-conditioned inputs (where lower + mu is large).
    let eps_abs = 1e-12 * (r.trace() / r.order() as f64).max(1.0);
    if bounds.lower + mu < eps_abs {
        mu = eps_abs;
    }

    let kappa_unloaded = if bounds.lower > 0.0 {
        bounds.upper / bounds.lower
    } else if bounds.upper == 0.0 {
        1.0
    } else {
        f64::INFINITY
    };
    let kappa_loaded_bound = (bounds.upper + mu) / (bounds.lower + mu);
    debug_assert!(
        !(bounds.lower + mu > 0.0)
            || kappa_loaded_bound <= constraint.kappa_max * (1.0 + 1e-12)
            || bounds.upper <= bounds.lower,
        "loaded condition bound {kappa_loaded_bound} exceeds cap {}",
        constraint.kappa_max
    );

    Ok(LoadingDecision {
        mode,
        bounds,
        kappa_unloaded,
        mu,
        kappa_loaded_bound,
    })
}
