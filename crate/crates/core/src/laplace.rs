//! Off-axis evaluation of Hardy-space elements from boundary samples.
//!
//! The value of x at a point beta in the open right half-plane is the inner
//! product against the reproducing kernel, `(1/2pi) int x(iw)/(beta-iw) dw`.
//! The grid covers `|w| < omega_max` only, so the quadrature is split into
//! the window sum plus a tail correction: the samples on the outer band are
//! fitted to a short expansion in powers of `1/(iw)` and each power's tail
//! integral is added in closed form. The `1/(iw)` coefficient of that fit is
//! the right-limit of the time trace at 0 (the jump of the causal extension),
//! which the generator and observation formulas need.

use crate::error::{Error, Result};
use crate::signal::FreqSignal;
use crate::C64;

/// Number of expansion terms `c_p/(iw)^p`, p = 1..=NTERMS.
const NTERMS: usize = 5;
/// Fit band, as fractions of the Nyquist frequency.
const BAND: (f64, f64) = (0.5, 0.95);

/// Coefficients of the high-frequency expansion of a boundary sample set.
#[derive(Debug, Clone, Copy)]
pub struct TailModel {
    pub c: [C64; NTERMS],
}

impl TailModel {
    /// `c_1`, the jump of the causal time trace at t = 0 (its right limit).
    pub fn jump(&self) -> C64 {
        self.c[0]
    }
}

/// Least-squares fit of the outer frequency band to the `1/(iw)^p` model.
pub fn fit_tail(f: &FreqSignal) -> TailModel {
    let g = f.grid();
    let m = g.omega_max();
    let mut a = [[C64::new(0.0, 0.0); NTERMS]; NTERMS];
    let mut rhs = [C64::new(0.0, 0.0); NTERMS];
    for idx in 0..g.n() {
        let w = g.omega(idx);
        if w.abs() < BAND.0 * m || w.abs() > BAND.1 * m {
            continue;
        }
        let iw = C64::new(0.0, w);
        let mut u = [C64::new(0.0, 0.0); NTERMS];
        u[0] = 1.0 / iw;
        for p in 1..NTERMS {
            u[p] = u[p - 1] / iw;
        }
        let x = f.samples()[idx];
        for p in 0..NTERMS {
            for q in 0..NTERMS {
                a[p][q] += u[p].conj() * u[q];
            }
            rhs[p] += u[p].conj() * x;
        }
    }
    let c = solve_dense(&mut a, &mut rhs);
    TailModel { c }
}

fn solve_dense(a: &mut [[C64; NTERMS]; NTERMS], b: &mut [C64; NTERMS]) -> [C64; NTERMS] {
    for col in 0..NTERMS {
        let mut piv = col;
        for r in col + 1..NTERMS {
            if a[r][col].norm() > a[piv][col].norm() {
                piv = r;
            }
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..NTERMS {
            let factor = a[r][col] / a[col][col];
            for c2 in col..NTERMS {
                let v = a[col][c2];
                a[r][c2] -= factor * v;
            }
            let v = b[col];
            b[r] -= factor * v;
        }
    }
    let mut x = [C64::new(0.0, 0.0); NTERMS];
    for r in (0..NTERMS).rev() {
        let mut s = b[r];
        for c2 in r + 1..NTERMS {
            s -= a[r][c2] * x[c2];
        }
        x[r] = s / a[r][r];
    }
    x
}

/// Closed forms of the tail integrals
/// `T_p(beta) = (1/2pi) int_{|w|>M} (iw)^{-p} / (beta - iw) dw`, p = 0..=pmax.
pub fn tail_integrals(beta: C64, omega_max: f64, pmax: usize) -> Vec<C64> {
    let i = C64::new(0.0, 1.0);
    let m = omega_max;
    let pi = std::f64::consts::PI;
    // T_0 = (1/2pi) [pi + i ln((beta+iM)/(beta-iM))]
    let t0 = (C64::new(pi, 0.0) + i * (((beta + i * m) / (beta - i * m)).ln())) / (2.0 * pi);
    let mut t = vec![t0];
    for p in 1..=pmax {
        // J_p = (1/2pi) int_{|w|>M} (iw)^{-p} dw: zero for odd p
        let j_p = match p {
            2 => C64::new(-1.0 / (pi * m), 0.0),
            4 => C64::new(1.0 / (3.0 * pi * m.powi(3)), 0.0),
            6 => C64::new(-1.0 / (5.0 * pi * m.powi(5)), 0.0),
            _ => C64::new(0.0, 0.0),
        };
        let prev = t[p - 1];
        t.push((j_p + prev) / beta);
    }
    t
}

/// Evaluates the element at `beta` (Re beta > 0): window quadrature of the
/// reproducing-kernel integral plus the fitted tail correction.
pub fn evaluate(f: &FreqSignal, beta: C64) -> Result<C64> {
    if !(beta.re > 0.0) {
        return Err(Error::ResolventPoint);
    }
    let g = f.grid();
    let mut s = C64::new(0.0, 0.0);
    for idx in 0..g.n() {
        s += f.samples()[idx] / (beta - C64::new(0.0, g.omega(idx)));
    }
    s /= g.n() as f64 * g.dt();
    let model = fit_tail(f);
    let t = tail_integrals(beta, g.omega_max(), NTERMS);
    for p in 0..NTERMS {
        s += model.c[p] * t[p + 1];
    }
    Ok(s)
}

/// Right-limit of the causal time trace at t = 0.
pub fn trace_right_limit(f: &FreqSignal) -> C64 {
    fit_tail(f).jump()
}
