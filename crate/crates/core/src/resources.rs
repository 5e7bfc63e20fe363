//! Closed-form sizing of a streaming decoder installation: how many parallel
//! worker pairs keep up with syndrome generation, how much history lags
//! undecoded, and what that lag costs in reaction time and auxiliary qubits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical timing model, all values in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimingModel {
    /// Time to produce one syndrome measurement round.
    pub tau_rd: f64,
    /// Time to decode one window.
    pub tau_w: f64,
    /// Dispatch-to-start latency per window decode.
    pub tau_0: f64,
}

impl TimingModel {
    pub fn new(tau_rd: f64, tau_w: f64, tau_0: f64) -> Result<Self> {
        for (name, v) in [("tau_rd", tau_rd), ("tau_w", tau_w), ("tau_0", tau_0)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be strictly positive and finite, got {v}"
                )));
            }
        }
        Ok(TimingModel { tau_rd, tau_w, tau_0 })
    }
}

/// Ceiling of a ratio of positive floats, tolerating representation noise:
/// values within 1e-9 of an integer round to it instead of ceiling up.
fn ceil_ratio(num: f64, den: f64) -> usize {
    let r = num / den;
    let nearest = r.round();
    let v = if (r - nearest).abs() < 1e-9 { nearest } else { r.ceil() };
    if v < 0.0 {
        0
    } else {
        v as usize
    }
}

/// Minimum number of window pairs that keeps decoding ahead of syndrome
/// generation: one pair retires `n_com + n_w` rounds per two window decodes,
/// so `N_par >= 2 tau_w / ((n_com + n_w) tau_rd)`, and at least one.
pub fn min_workers(timing: &TimingModel, n_com: usize, n_w: usize) -> Result<usize> {
    if n_com + n_w == 0 {
        return Err(Error::InvalidParameter("window must cover at least one round".into()));
    }
    let denom = (n_com + n_w) as f64 * timing.tau_rd;
    Ok(ceil_ratio(2.0 * timing.tau_w, denom).max(1))
}

/// Derived latency and qubit figures for a chosen worker count.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResourcePlan {
    /// Number of parallel window pairs.
    pub n_par: usize,
    /// Rounds of syndrome history in flight while decoding.
    pub n_lag: usize,
    /// Decode lag in seconds: `n_lag * tau_rd`.
    pub tau: f64,
    /// Reaction time of a lattice-surgery clock cycle: `d * tau_rd + tau`.
    pub tau_clock: f64,
    /// Auxiliary qubit patches parked while waiting out the lag.
    pub aux_qubits: usize,
}

/// Sizes the lag for `n_par` worker pairs, each holding `n_com + n_w` rounds.
pub fn response_time(
    timing: &TimingModel,
    n_par: usize,
    n_com: usize,
    n_w: usize,
    d: usize,
) -> Result<ResourcePlan> {
    if n_par == 0 {
        return Err(Error::InvalidParameter("need at least one worker pair".into()));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("distance must be positive".into()));
    }
    let n_lag = n_par * (n_com + n_w);
    let tau = n_lag as f64 * timing.tau_rd;
    Ok(ResourcePlan {
        n_par,
        n_lag,
        tau,
        tau_clock: d as f64 * timing.tau_rd + tau,
        aux_qubits: aux_qubits_for_lag(tau, d, timing.tau_rd),
    })
}

/// Convenience: minimum workers, then the plan for exactly that many.
pub fn plan_min(timing: &TimingModel, n_com: usize, n_w: usize, d: usize) -> Result<ResourcePlan> {
    let n_par = min_workers(timing, n_com, n_w)?;
    response_time(timing, n_par, n_com, n_w, d)
}

/// Auxiliary qubit patches needed to absorb a raw decode lag `tau`: one
/// patch per logical clock cycle (`d` rounds) of waiting.
pub fn aux_qubits_for_lag(tau: f64, d: usize, tau_rd: f64) -> usize {
    ceil_ratio(tau, d as f64 * tau_rd)
}

/// Space overhead factor from parking `aux` patches next to `data_qubits`.
pub fn overhead_factor(aux_qubits: usize, data_qubits: usize) -> f64 {
    (data_qubits + aux_qubits) as f64 / data_qubits as f64
}
