//! CQI feedback pipeline: eSNR measurement noise, uniform quantization to a
//! CQI index, dequantization to bin centers, and the fixed-delay feedback
//! channel between receiver and controller.
//!
//! # Example
//!
//! ```
//! use subnetla::feedback::{CqiTable, quantize_cqi, dequantize_cqi};
//!
//! let table = CqiTable::default();
//! let idx = quantize_cqi(-2.3, &table).unwrap();
//! assert_eq!(idx, 5);
//! let center = dequantize_cqi(idx, &table).unwrap();
//! assert!((center - (-2.5)).abs() < 1e-12);
//! ```

use std::collections::VecDeque;

use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform CQI quantizer description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CqiTable {
    /// Number of quantization levels.
    pub n_levels: usize,
    /// Lower edge of the first bin (dB).
    pub gamma_min_db: f64,
    /// Bin width (dB).
    pub step_db: f64,
}

impl Default for CqiTable {
    fn default() -> Self {
        CqiTable {
            n_levels: 29,     // |zeta| CQI alphabet size
            gamma_min_db: -8.0, // lower eSNR edge (dB)
            step_db: 1.0,     // bin width (dB)
        }
    }
}

impl CqiTable {
    /// Validates the table invariants.
    pub fn validate(&self) -> Result<()> {
        if self.n_levels < 2 {
            return Err(Error::Validation(format!(
                "cqi table needs at least 2 levels, got {}",
                self.n_levels
            )));
        }
        if !(self.step_db.is_finite() && self.step_db > 0.0) {
            return Err(Error::Validation(format!(
                "cqi step must be positive and finite, got {}",
                self.step_db
            )));
        }
        if !self.gamma_min_db.is_finite() {
            return Err(Error::Validation("cqi gamma_min must be finite".into()));
        }
        Ok(())
    }
}

/// Values below this threshold are treated as a sentinel floor and passed
/// through the estimation-noise stage unchanged.
pub const ESNR_FLOOR_DB: f64 = -200.0;

/// Applies eSNR estimation noise to a true SINR value (dB domain).
///
/// Returns `sinr_db + N(0, sigma_est_db^2)`. Sentinel floor values
/// (≤ [`ESNR_FLOOR_DB`]) propagate unchanged so a "no signal" marker is never
/// dressed up as a measurement.
pub fn sinr_to_esnr<R: Rng + ?Sized>(sinr_db: f64, sigma_est_db: f64, rng: &mut R) -> f64 {
    if sinr_db <= ESNR_FLOOR_DB {
        return sinr_db;
    }
    if sigma_est_db == 0.0 {
        return sinr_db;
    }
    let noise = Normal::new(0.0, sigma_est_db)
        .expect("sigma_est must be non-negative and finite")
        .sample(rng);
    sinr_db + noise
}

/// Quantizes an eSNR (dB) to a CQI index with saturating clamping.
pub fn quantize_cqi(esnr_db: f64, table: &CqiTable) -> Result<u8> {
    if esnr_db.is_nan() {
        return Err(Error::Contract("cannot quantize NaN eSNR".into()));
    }
    let raw = ((esnr_db - table.gamma_min_db) / table.step_db).floor();
    let idx = raw.clamp(0.0, (table.n_levels - 1) as f64);
    Ok(idx as u8)
}

/// Dequantizes a CQI index to the center of its bin (dB).
pub fn dequantize_cqi(index: u8, table: &CqiTable) -> Result<f64> {
    if (index as usize) >= table.n_levels {
        return Err(Error::Contract(format!(
            "cqi index {} out of range (n_levels = {})",
            index, table.n_levels
        )));
    }
    Ok(table.gamma_min_db + (index as f64 + 0.5) * table.step_db)
}

/// One CQI report from a sub-network's access agents, generated in a single
/// transmission cycle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CqiReport {
    /// Reporting sub-network index.
    pub sn: usize,
    /// One CQI index per access agent.
    pub values: Vec<u8>,
    /// Cycle in which the measurement was taken.
    pub generated_at: u64,
}

/// Fixed-latency FIFO feedback channel carrying [`CqiReport`]s.
///
/// A report pushed with `generated_at = t` becomes available exactly at
/// `t + delay_cycles`, never earlier, never reordered.
#[derive(Debug, Clone)]
pub struct CqiDelayLine {
    delay_cycles: u64,
    queue: VecDeque<CqiReport>,
}

impl CqiDelayLine {
    /// Creates an empty delay line with the given latency in cycles.
    pub fn new(delay_cycles: u64) -> Self {
        CqiDelayLine {
            delay_cycles,
            queue: VecDeque::new(),
        }
    }

    /// Configured latency in cycles.
    pub fn delay_cycles(&self) -> u64 {
        self.delay_cycles
    }

    /// Number of reports currently in flight.
    pub fn len(&self) -> usize {
        self.queue.len()
    }

    /// True when no report is in flight.
    pub fn is_empty(&self) -> bool {
        self.queue.is_empty()
    }

    /// Enqueues a report. Reports must be pushed in non-decreasing
    /// `generated_at` order.
    pub fn push(&mut self, report: CqiReport) -> Result<()> {
        if let Some(last) = self.queue.back() {
            if report.generated_at < last.generated_at {
                return Err(Error::Contract(format!(
                    "feedback reports pushed out of order ({} after {})",
                    report.generated_at, last.generated_at
                )));
            }
        }
        self.queue.push_back(report);
        Ok(())
    }

    /// Pops the report scheduled for delivery at cycle `now`, if any.
    ///
    /// Returns the report with `generated_at == now - delay_cycles`.
    pub fn pop(&mut self, now: u64) -> Option<CqiReport> {
        let due = now.checked_sub(self.delay_cycles)?;
        match self.queue.front() {
            Some(front) if front.generated_at == due => self.queue.pop_front(),
            _ => None,
        }
    }
}
