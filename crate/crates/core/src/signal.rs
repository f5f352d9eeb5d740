//! Dual time/frequency representation of L2 elements.
//!
//! The forward transform multiplies by `dt`, the inverse divides by it, so
//! the discrete Parseval identity is exact and every norm comparison between
//! the two sides is exact to roundoff. Frequency negation is index reversal;
//! the t = 0 sample belongs to the causal half.

use crate::error::{Error, Result};
use crate::grid::GridConfig;
use crate::C64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    Causal,
    Anticausal,
    TwoSided,
}

/// Which half of the orthogonal decomposition of L2(iR) to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Half {
    /// The causal / H2(C0+) half (includes the t = 0 sample).
    Plus,
    /// The anticausal / H2(C0-) half.
    Minus,
}

fn fft_cache() -> &'static Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, bool), Arc<dyn Fft<f64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn plan(n: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut cache = fft_cache().lock().expect("fft cache poisoned");
    cache
        .entry((n, inverse))
        .or_insert_with(|| {
            let mut planner = FftPlanner::new();
            if inverse {
                planner.plan_fft_inverse(n)
            } else {
                planner.plan_fft_forward(n)
            }
        })
        .clone()
}

/// Sampled function of time in wrap order (see [`GridConfig`]).
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSignal {
    grid: GridConfig,
    support: Support,
    samples: Vec<C64>,
}

/// Samples on the imaginary-axis grid, wrap order.
#[derive(Debug, Clone, PartialEq)]
pub struct FreqSignal {
    grid: GridConfig,
    samples: Vec<C64>,
}

impl TimeSignal {
    pub fn zero(grid: GridConfig, support: Support) -> Self {
        Self {
            grid,
            support,
            samples: vec![C64::new(0.0, 0.0); grid.n()],
        }
    }

    /// Builds from samples laid out on the full wrap grid, checking that the
    /// declared support actually holds up to the grid leakage tolerance.
    pub fn from_wrap_samples(grid: GridConfig, samples: Vec<C64>, support: Support) -> Result<Self> {
        if samples.len() != grid.n() {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                grid.n(),
                samples.len()
            )));
        }
        let s = Self { grid, support, samples };
        s.check_support()?;
        Ok(s)
    }

    pub(crate) fn from_wrap_samples_unchecked(
        grid: GridConfig,
        samples: Vec<C64>,
        support: Support,
    ) -> Self {
        Self { grid, support, samples }
    }

    /// Causal signal from samples at `t_k = k*dt`, `k = 0..len` (at most `n/2`).
    pub fn from_causal_samples(grid: GridConfig, head: &[C64]) -> Result<Self> {
        if head.len() > grid.causal_len() {
            return Err(Error::HorizonExceeded(format!(
                "{} causal samples exceed the causal window of {}",
                head.len(),
                grid.causal_len()
            )));
        }
        let mut samples = vec![C64::new(0.0, 0.0); grid.n()];
        samples[..head.len()].copy_from_slice(head);
        Ok(Self { grid, support: Support::Causal, samples })
    }

    /// Causal signal sampled from a closed-form function of t >= 0.
    pub fn causal_from_fn(grid: GridConfig, f: impl Fn(f64) -> C64) -> Self {
        let mut samples = vec![C64::new(0.0, 0.0); grid.n()];
        for (k, v) in samples.iter_mut().enumerate().take(grid.causal_len()) {
            *v = f(grid.time(k));
        }
        Self { grid, support: Support::Causal, samples }
    }

    /// Anticausal signal sampled from a function of t < 0; the t = 0 sample
    /// stays zero (it belongs to the causal half).
    pub fn anticausal_from_fn(grid: GridConfig, f: impl Fn(f64) -> C64) -> Self {
        let mut samples = vec![C64::new(0.0, 0.0); grid.n()];
        for k in grid.causal_len()..grid.n() {
            samples[k] = f(grid.time(k));
        }
        Self { grid, support: Support::Anticausal, samples }
    }

    /// Two-sided signal sampled from a function on the whole window.
    pub fn two_sided_from_fn(grid: GridConfig, f: impl Fn(f64) -> C64) -> Self {
        let mut samples = vec![C64::new(0.0, 0.0); grid.n()];
        for (k, v) in samples.iter_mut().enumerate() {
            *v = f(grid.time(k));
        }
        Self { grid, support: Support::TwoSided, samples }
    }

    pub fn grid(&self) -> &GridConfig {
        &self.grid
    }

    pub fn support(&self) -> Support {
        self.support
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    /// Sample at wrap index `k`.
    pub fn sample(&self, k: usize) -> C64 {
        self.samples[k]
    }

    pub fn energy(&self) -> f64 {
        self.grid.dt() * self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.energy().sqrt()
    }

    /// Relative energy on the side excluded by the declared support. The
    /// t = 0 cell is ambiguous for data with a jump there (sampled boundary
    /// values carry the midpoint), so membership checks ignore it.
    pub fn support_leak(&self) -> f64 {
        let tot: f64 = self.samples.iter().map(|v| v.norm_sqr()).sum();
        if tot == 0.0 {
            return 0.0;
        }
        let half = self.grid.causal_len();
        let neg: f64 = self.samples[half..].iter().map(|v| v.norm_sqr()).sum();
        match self.support {
            Support::Causal => neg / tot,
            Support::Anticausal => (tot - neg - self.samples[0].norm_sqr()) / tot,
            Support::TwoSided => 0.0,
        }
    }

    fn check_support(&self) -> Result<()> {
        let leak = self.support_leak();
        let tol = self.grid.tail_tol();
        if leak > tol {
            let side = match self.support {
                Support::Causal => "causal",
                Support::Anticausal => "anticausal",
                Support::TwoSided => "two-sided",
            };
            return Err(Error::WrongSupport { side, leak, tol });
        }
        Ok(())
    }

    /// Relative energy in the trailing 5% of the window for the declared
    /// support; above `tail_tol` the signal should be treated as truncated.
    pub fn tail_fraction(&self) -> f64 {
        let tot: f64 = self.samples.iter().map(|v| v.norm_sqr()).sum();
        if tot == 0.0 {
            return 0.0;
        }
        let half = self.grid.causal_len();
        let band = (half as f64 * 0.05).ceil() as usize;
        let mut tail = 0.0;
        match self.support {
            Support::Causal => {
                for k in half - band..half {
                    tail += self.samples[k].norm_sqr();
                }
            }
            Support::Anticausal => {
                for k in half..half + band {
                    tail += self.samples[k].norm_sqr();
                }
            }
            Support::TwoSided => {
                for k in half - band..half + band {
                    tail += self.samples[k].norm_sqr();
                }
            }
        }
        tail / tot
    }

    pub fn is_truncation_suspect(&self) -> bool {
        self.tail_fraction() > self.grid.tail_tol()
    }

    /// Discrete Laplace/Fourier transform `F_j = dt * sum_k x_k e^{-i w_j t_k}`.
    pub fn to_frequency(&self) -> FreqSignal {
        let fft = plan(self.grid.n(), false);
        let mut buf = self.samples.clone();
        fft.process(&mut buf);
        let dt = self.grid.dt();
        for v in buf.iter_mut() {
            *v *= dt;
        }
        FreqSignal { grid: self.grid, samples: buf }
    }

    /// Left shift by `m` samples within the causal window, zero fill on the
    /// right. Only meaningful for causal signals.
    pub fn shift_left(&self, m: usize) -> TimeSignal {
        let half = self.grid.causal_len();
        let mut samples = vec![C64::new(0.0, 0.0); self.grid.n()];
        for k in 0..half.saturating_sub(m) {
            samples[k] = self.samples[k + m];
        }
        TimeSignal { grid: self.grid, support: Support::Causal, samples }
    }

    pub fn scale(&self, c: C64) -> TimeSignal {
        TimeSignal {
            grid: self.grid,
            support: self.support,
            samples: self.samples.iter().map(|v| v * c).collect(),
        }
    }

    pub fn sub(&self, other: &TimeSignal) -> Result<TimeSignal> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(TimeSignal {
            grid: self.grid,
            support: Support::TwoSided,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl FreqSignal {
    pub fn zero(grid: GridConfig) -> Self {
        Self { grid, samples: vec![C64::new(0.0, 0.0); grid.n()] }
    }

    pub fn from_samples(grid: GridConfig, samples: Vec<C64>) -> Result<Self> {
        if samples.len() != grid.n() {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                grid.n(),
                samples.len()
            )));
        }
        Ok(Self { grid, samples })
    }

    /// Samples a closed-form function of `i*omega` on the grid.
    pub fn from_fn(grid: GridConfig, f: impl Fn(C64) -> C64) -> Self {
        let samples = (0..grid.n())
            .map(|m| f(C64::new(0.0, grid.omega(m))))
            .collect();
        Self { grid, samples }
    }

    pub fn grid(&self) -> &GridConfig {
        &self.grid
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    pub fn samples_mut(&mut self) -> &mut [C64] {
        &mut self.samples
    }

    pub fn energy(&self) -> f64 {
        self.samples.iter().map(|v| v.norm_sqr()).sum::<f64>()
            / (self.grid.n() as f64 * self.grid.dt())
    }

    pub fn norm(&self) -> f64 {
        self.energy().sqrt()
    }

    /// Inverse transform; errors when the requested support does not hold to
    /// within the grid leakage tolerance.
    pub fn to_time(&self, support: Support) -> Result<TimeSignal> {
        let x = self.to_time_unchecked(support);
        x.check_support()?;
        Ok(x)
    }

    pub(crate) fn to_time_unchecked(&self, support: Support) -> TimeSignal {
        let fft = plan(self.grid.n(), true);
        let mut buf = self.samples.clone();
        fft.process(&mut buf);
        let scale = 1.0 / (self.grid.n() as f64 * self.grid.dt());
        for v in buf.iter_mut() {
            *v *= scale;
        }
        TimeSignal { grid: self.grid, support, samples: buf }
    }

    /// Index reversal realizing `F(i*omega) -> F(-i*omega)`; the j = 0 and
    /// Nyquist samples are fixed points.
    pub fn negate_frequency(&self) -> FreqSignal {
        let n = self.grid.n();
        let mut samples = vec![C64::new(0.0, 0.0); n];
        for m in 0..n {
            samples[m] = self.samples[(n - m) % n];
        }
        FreqSignal { grid: self.grid, samples }
    }

    pub fn conj(&self) -> FreqSignal {
        FreqSignal {
            grid: self.grid,
            samples: self.samples.iter().map(|v| v.conj()).collect(),
        }
    }

    /// Pointwise product (multiplication operator on the boundary).
    pub fn mul(&self, other: &FreqSignal) -> Result<FreqSignal> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(FreqSignal {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn add(&self, other: &FreqSignal) -> Result<FreqSignal> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(FreqSignal {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &FreqSignal) -> Result<FreqSignal> {
        if !self.grid.same_as(&other.grid) {
            return Err(Error::GridMismatch);
        }
        Ok(FreqSignal {
            grid: self.grid,
            samples: self
                .samples
                .iter()
                .zip(&other.samples)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: C64) -> FreqSignal {
        FreqSignal {
            grid: self.grid,
            samples: self.samples.iter().map(|v| v * c).collect(),
        }
    }
}

/// Discretization of the half-plane inner product
/// `(1/2pi) * sum_j F_j * conj(G_j) * d_omega`.
pub fn inner_product(f: &FreqSignal, g: &FreqSignal) -> Result<C64> {
    if !f.grid.same_as(&g.grid) {
        return Err(Error::GridMismatch);
    }
    let s: C64 = f
        .samples
        .iter()
        .zip(&g.samples)
        .map(|(a, b)| a * b.conj())
        .sum();
    Ok(s / (f.grid.n() as f64 * f.grid.dt()))
}

/// Orthogonal projection onto the causal (`Plus`) or anticausal (`Minus`)
/// half: transform to time, zero the complementary side, transform back.
pub fn project_h2(f: &FreqSignal, half: Half) -> FreqSignal {
    let x = f.to_time_unchecked(Support::TwoSided);
    let n = f.grid.n();
    let cut = f.grid.causal_len();
    let mut samples = x.samples;
    match half {
        Half::Plus => {
            for v in samples.iter_mut().take(n).skip(cut) {
                *v = C64::new(0.0, 0.0);
            }
        }
        Half::Minus => {
            for v in samples.iter_mut().take(cut) {
                *v = C64::new(0.0, 0.0);
            }
        }
    }
    let support = match half {
        Half::Plus => Support::Causal,
        Half::Minus => Support::Anticausal,
    };
    TimeSignal { grid: f.grid, support, samples }.to_frequency()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn grid() -> GridConfig {
        GridConfig::new(1 << 12, 1.0 / 128.0, 1e-3).unwrap()
    }

    #[test]
    fn causal_exponential_transform_matches_closed_form() {
        // x(t) = e^{-t}  =>  F(iw) = 1/(1+iw), up to window truncation.
        // The jump at t = 0 is sampled at its midpoint so the aliased
        // spectrum tracks the continuum one to O(dt^2 * (1 + w)).
        let g = grid();
        let x = TimeSignal::causal_from_fn(g, |t| {
            C64::new(if t == 0.0 { 0.5 } else { (-t).exp() }, 0.0)
        });
        let f = x.to_frequency();
        for m in [0usize, 1, 5, 50, 200] {
            let iw = C64::new(0.0, g.omega(m));
            let expected = C64::new(1.0, 0.0) / (C64::new(1.0, 0.0) + iw);
            assert!(
                (f.samples()[m] - expected).norm() < 1e-2 * expected.norm() + 1e-3,
                "index {m}: {} vs {expected}",
                f.samples()[m]
            );
        }
    }

    #[test]
    fn zero_transforms_to_zero() {
        let g = grid();
        let x = TimeSignal::zero(g, Support::Causal);
        let f = x.to_frequency();
        assert_eq!(f.norm(), 0.0);
    }

    #[test]
    fn indicator_transform_value_at_zero() {
        // x = 1 on [0,1): F(0) = 1
        let g = grid();
        let x = TimeSignal::causal_from_fn(g, |t| {
            if t < 1.0 { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }
        });
        let f = x.to_frequency();
        assert_relative_eq!(f.samples()[0].re, 1.0, epsilon = 5e-3);
        // and at w = 2*pi: (1 - e^{-iw})/(iw) = 0
        let m = g.step_index(1.0).unwrap(); // j such that omega_j = 2*pi
        assert!(f.samples()[m].norm() < 5e-3);
    }

    #[test]
    fn round_trip_is_identity() {
        let g = grid();
        let x = TimeSignal::causal_from_fn(g, |t| C64::new((-0.3 * t).exp() * (2.0 * t).cos(), 0.1 * (-t).exp()));
        let back = x.to_frequency().to_time(Support::Causal).unwrap();
        let err: f64 = x
            .samples()
            .iter()
            .zip(back.samples())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(err < 1e-12);
    }

    #[test]
    fn anticausal_input_rejected_as_causal() {
        // F = 1/(1-iw) is the transform of e^{t} for t<0
        let g = grid();
        let f = FreqSignal::from_fn(g, |iw| C64::new(1.0, 0.0) / (C64::new(1.0, 0.0) - iw));
        let err = f.to_time(Support::Causal);
        assert!(matches!(err, Err(Error::WrongSupport { .. })));
        assert!(f.to_time(Support::Anticausal).is_ok());
    }

    #[test]
    fn parseval_exact() {
        let g = grid();
        let x = TimeSignal::two_sided_from_fn(g, |t| C64::new(( -0.2 * t.abs()).exp(), (0.5 * t).sin() * (-0.1 * t.abs()).exp()));
        let f = x.to_frequency();
        assert_relative_eq!(x.energy(), f.energy(), max_relative = 1e-13);
    }

    #[test]
    fn inner_product_closed_forms() {
        let g = GridConfig::new(1 << 14, 1.0 / 256.0, 1e-3).unwrap();
        let one = |iw: C64| C64::new(1.0, 0.0) / (C64::new(1.0, 0.0) + iw);
        let two = |iw: C64| C64::new(1.0, 0.0) / (C64::new(2.0, 0.0) + iw);
        let f1 = FreqSignal::from_fn(g, one);
        let f2 = FreqSignal::from_fn(g, two);
        // <1/(s+1), 1/(s+1)> = 1/2, <1/(s+1), 1/(s+2)> = 1/3; grid sums carry
        // the O(1/omega_max) window truncation of the continuum integral
        assert_relative_eq!(inner_product(&f1, &f1).unwrap().re, 0.5, epsilon = 1e-3);
        assert_relative_eq!(inner_product(&f1, &f2).unwrap().re, 1.0 / 3.0, epsilon = 1e-3);
        // positive definiteness
        assert!(inner_product(&f1, &f1).unwrap().re > 0.0);
        let z = FreqSignal::zero(g);
        assert_eq!(inner_product(&z, &z).unwrap().norm(), 0.0);
    }

    #[test]
    fn inner_product_grid_mismatch() {
        let a = FreqSignal::zero(GridConfig::new(64, 0.1, 0.0).unwrap());
        let b = FreqSignal::zero(GridConfig::new(128, 0.1, 0.0).unwrap());
        assert!(matches!(inner_product(&a, &b), Err(Error::GridMismatch)));
    }

    #[test]
    fn projection_splits_lorentzian() {
        // F = 1/(1+w^2): plus part is (1/2)/(1+iw); check in the time domain
        // where the split is exact sample-by-sample.
        let g = grid();
        let x = TimeSignal::two_sided_from_fn(g, |t| C64::new(0.5 * (-t.abs()).exp(), 0.0));
        let f = x.to_frequency();
        let plus = project_h2(&f, Half::Plus);
        let trace = plus.to_time(Support::Causal).unwrap();
        for k in 0..g.causal_len() {
            let expected = 0.5 * (-g.time(k)).exp();
            assert!((trace.samples()[k] - C64::new(expected, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn projection_idempotent_and_complete() {
        let g = grid();
        let f = FreqSignal::from_fn(g, |iw| {
            C64::new(1.0, 0.4) / (C64::new(0.7, 0.0) + iw) + C64::new(0.3, -0.2) / (C64::new(1.3, 0.0) - iw)
        });
        let plus = project_h2(&f, Half::Plus);
        let minus = project_h2(&f, Half::Minus);
        let twice = project_h2(&plus, Half::Plus);
        let idem: f64 = plus
            .samples()
            .iter()
            .zip(twice.samples())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(idem < 1e-12);
        let sum = plus.add(&minus).unwrap();
        let complete: f64 = sum
            .samples()
            .iter()
            .zip(f.samples())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        assert!(complete < 1e-12);
        // orthogonality of the two halves
        let ip = inner_product(&plus, &minus).unwrap().norm();
        assert!(ip < 1e-10 * plus.norm() * minus.norm() + 1e-14);
    }

    #[test]
    fn negate_frequency_is_time_reversal() {
        let g = grid();
        let x = TimeSignal::causal_from_fn(g, |t| C64::new((-t).exp(), 0.0));
        let f = x.to_frequency();
        let rev = f.negate_frequency().to_time_unchecked(Support::Anticausal);
        let n = g.n();
        for k in 1..g.causal_len() {
            let mirrored = rev.samples()[n - k];
            assert!((mirrored - x.samples()[k]).norm() < 1e-12);
        }
        assert!((rev.samples()[0] - x.samples()[0]).norm() < 1e-12);
    }
}
