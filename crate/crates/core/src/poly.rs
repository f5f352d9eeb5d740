//! Complex polynomial helpers: Horner evaluation, root finding, expansion
//! from roots. Coefficients are stored lowest degree first.

use crate::error::{Error, Result};
use crate::C64;

/// Drops (numerically) vanishing leading coefficients.
pub fn trim(coeffs: &[C64]) -> Vec<C64> {
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut out: Vec<C64> = coeffs.to_vec();
    while out.len() > 1 && out.last().map(|c| c.norm()).unwrap_or(0.0) <= 1e-14 * scale {
        out.pop();
    }
    out
}

pub fn degree(coeffs: &[C64]) -> usize {
    trim(coeffs).len().saturating_sub(1)
}

/// Horner evaluation.
pub fn eval(coeffs: &[C64], s: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * s + c;
    }
    acc
}

pub fn eval_derivative(coeffs: &[C64], s: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    for (k, c) in coeffs.iter().enumerate().rev().take(coeffs.len() - 1) {
        acc = acc * s + c * k as f64;
    }
    acc
}

/// Expands `prod_k (s - roots[k])` into coefficients.
pub fn from_roots(roots: &[C64]) -> Vec<C64> {
    let mut coeffs = vec![C64::new(1.0, 0.0)];
    for r in roots {
        let mut next = vec![C64::new(0.0, 0.0); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * r;
        }
        coeffs = next;
    }
    coeffs
}

/// All roots by the Durand-Kerner iteration with a Newton polish. Intended
/// for the low degrees that arise from transfer-symbol denominators.
pub fn roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let c = trim(coeffs);
    let deg = c.len() - 1;
    if deg == 0 {
        return Ok(Vec::new());
    }
    if deg > 64 {
        return Err(Error::InvalidSymbol(format!(
            "polynomial degree {deg} exceeds the supported maximum of 64"
        )));
    }
    let lead = c[deg];
    let monic: Vec<C64> = c.iter().map(|v| v / lead).collect();
    // radius bound: 1 + max |a_k|
    let radius = 1.0
        + monic[..deg]
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max);
    let seed = C64::new(0.4, 0.9);
    let mut z: Vec<C64> = (0..deg)
        .map(|k| radius * seed.powu(k as u32 + 1) / seed.norm().powi(k as i32))
        .collect();
    for _ in 0..200 {
        let mut delta_max = 0.0f64;
        for i in 0..deg {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..deg {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = C64::new(1e-30, 0.0);
            }
            let step = eval(&monic, z[i]) / denom;
            z[i] -= step;
            delta_max = delta_max.max(step.norm());
        }
        if delta_max < 1e-14 * radius {
            break;
        }
    }
    // Newton polish
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = eval_derivative(&monic, *zi);
            if d.norm() > 1e-300 {
                *zi -= eval(&monic, *zi) / d;
            }
        }
    }
    Ok(z)
}
