//! Shared time/frequency grid.
//!
//! `n` samples at spacing `dt` cover a window of width `n*dt`, split evenly
//! between nonnegative and negative times in DFT wrap order: index `k`
//! represents time `k*dt` for `k < n/2` and `(k-n)*dt` otherwise. The
//! frequency grid is the matching DFT grid `omega_j = 2*pi*j/(n*dt)` for
//! `j = -n/2 .. n/2-1`, also stored in wrap order. Causal signals therefore
//! live on `[0, n*dt/2)`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridConfig {
    n: usize,
    dt: f64,
    tail_tol: f64,
}

impl GridConfig {
    /// `n` must be a power of two, at least 16; `dt` positive.
    ///
    /// `tail_tol` bounds the relative energy tolerated in the trailing 5% of
    /// the window before a signal is flagged truncation-suspect; it is also
    /// the leakage tolerance for causal/anticausal membership checks.
    pub fn new(n: usize, dt: f64, tail_tol: f64) -> Result<Self> {
        if n < 16 || !n.is_power_of_two() {
            return Err(Error::InvalidGrid(format!(
                "n must be a power of two >= 16, got {n}"
            )));
        }
        if !(dt > 0.0) || !dt.is_finite() {
            return Err(Error::InvalidGrid(format!("dt must be positive, got {dt}")));
        }
        if !(tail_tol >= 0.0) {
            return Err(Error::InvalidGrid("tail_tol must be nonnegative".into()));
        }
        Ok(Self { n, dt, tail_tol })
    }

    /// Default desk-scale grid: n = 2^14, dt = 2^-8, window 64 seconds.
    pub fn default_grid() -> Self {
        Self::new(1 << 14, 1.0 / 256.0, 1e-3).expect("valid default grid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }

    /// Total window width `n*dt`.
    pub fn horizon(&self) -> f64 {
        self.n as f64 * self.dt
    }

    /// Number of samples on the causal side (`n/2`).
    pub fn causal_len(&self) -> usize {
        self.n / 2
    }

    /// Signed time of sample `k` in wrap order.
    pub fn time(&self, k: usize) -> f64 {
        debug_assert!(k < self.n);
        if k < self.n / 2 {
            k as f64 * self.dt
        } else {
            (k as f64 - self.n as f64) * self.dt
        }
    }

    /// Signed frequency of sample `m` in wrap order.
    pub fn omega(&self, m: usize) -> f64 {
        debug_assert!(m < self.n);
        let j = if m < self.n / 2 {
            m as isize
        } else {
            m as isize - self.n as isize
        };
        2.0 * std::f64::consts::PI * j as f64 / (self.n as f64 * self.dt)
    }

    /// Frequency spacing `2*pi/(n*dt)`.
    pub fn d_omega(&self) -> f64 {
        2.0 * std::f64::consts::PI / (self.n as f64 * self.dt)
    }

    /// Nyquist frequency `pi/dt` (the grid covers `[-omega_max, omega_max)`).
    pub fn omega_max(&self) -> f64 {
        std::f64::consts::PI / self.dt
    }

    /// Interprets `t` as a nonnegative integer multiple of `dt`.
    pub fn step_index(&self, t: f64) -> Result<usize> {
        if !(t >= 0.0) || !t.is_finite() {
            return Err(Error::NotGridMultiple(t));
        }
        let m = t / self.dt;
        let rounded = m.round();
        if (m - rounded).abs() > 1e-9 * (1.0 + m.abs()) {
            return Err(Error::NotGridMultiple(t));
        }
        Ok(rounded as usize)
    }

    pub fn same_as(&self, other: &GridConfig) -> bool {
        self.n == other.n && self.dt == other.dt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(GridConfig::new(15, 0.1, 0.0).is_err());
        assert!(GridConfig::new(24, 0.1, 0.0).is_err());
        assert!(GridConfig::new(64, 0.0, 0.0).is_err());
        assert!(GridConfig::new(64, 0.1, -1.0).is_err());
        assert!(GridConfig::new(64, 0.1, 0.0).is_ok());
    }

    #[test]
    fn wrap_layout() {
        let g = GridConfig::new(16, 0.5, 1e-3).unwrap();
        assert_eq!(g.time(0), 0.0);
        assert_eq!(g.time(7), 3.5);
        assert_eq!(g.time(8), -4.0);
        assert_eq!(g.time(15), -0.5);
        assert_eq!(g.horizon(), 8.0);
        let dw = g.d_omega();
        assert!((g.omega(1) - dw).abs() < 1e-15);
        assert!((g.omega(8) + 8.0 * dw).abs() < 1e-12);
        assert!((g.omega(15) + dw).abs() < 1e-12);
    }

    #[test]
    fn step_index_rounding() {
        let g = GridConfig::new(256, 1.0 / 256.0, 1e-3).unwrap();
        assert_eq!(g.step_index(0.0).unwrap(), 0);
        assert_eq!(g.step_index(1.0).unwrap(), 256);
        assert!(g.step_index(0.0001).is_err());
        assert!(g.step_index(-1.0).is_err());
    }
}
