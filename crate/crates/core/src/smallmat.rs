//! Dense complex linear algebra for the small matrices behind transfer
//! symbols: matrix exponential, eigenvalues via the characteristic
//! polynomial, and linear solves.

use crate::error::{Error, Result};
use crate::poly;
use crate::C64;
use nalgebra::DMatrix;

pub type CMat = DMatrix<C64>;

/// One-norm (maximum absolute column sum).
fn one_norm(a: &CMat) -> f64 {
    (0..a.ncols())
        .map(|j| a.column(j).iter().map(|v| v.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// Matrix exponential by Pade(13) with scaling and squaring.
pub fn expm(a: &CMat) -> CMat {
    assert_eq!(a.nrows(), a.ncols());
    let n = a.nrows();
    let theta13 = 5.371920351148152;
    let norm = one_norm(a);
    let s = if norm > theta13 {
        (norm / theta13).log2().ceil().max(0.0) as u32
    } else {
        0
    };
    let a1 = a.map(|v| v / (2.0f64.powi(s as i32)));
    const B: [f64; 14] = [
        64764752532480000.0,
        32382376266240000.0,
        7771770303897600.0,
        1187353796428800.0,
        129060195264000.0,
        10559470521600.0,
        670442572800.0,
        33522128640.0,
        1323241920.0,
        40840800.0,
        960960.0,
        16380.0,
        182.0,
        1.0,
    ];
    let id = CMat::identity(n, n);
    let a2 = &a1 * &a1;
    let a4 = &a2 * &a2;
    let a6 = &a2 * &a4;
    let u_inner = &a6 * (a6.map(|v| v * B[13]) + a4.map(|v| v * B[11]) + a2.map(|v| v * B[9]))
        + a6.map(|v| v * B[7])
        + a4.map(|v| v * B[5])
        + a2.map(|v| v * B[3])
        + id.map(|v| v * B[1]);
    let u = &a1 * u_inner;
    let v = &a6 * (a6.map(|v| v * B[12]) + a4.map(|v| v * B[10]) + a2.map(|v| v * B[8]))
        + a6.map(|v| v * B[6])
        + a4.map(|v| v * B[4])
        + a2.map(|v| v * B[2])
        + id.map(|v| v * B[0]);
    let num = &v + &u;
    let den = &v - &u;
    let mut r = den
        .lu()
        .solve(&num)
        .expect("Pade denominator is invertible for scaled input");
    for _ in 0..s {
        r = &r * &r;
    }
    r
}

/// Characteristic polynomial coefficients (lowest degree first, monic) via
/// the Faddeev-LeVerrier recursion. Fine for the small n used here.
pub fn characteristic_polynomial(a: &CMat) -> Vec<C64> {
    let n = a.nrows();
    let id = CMat::identity(n, n);
    let mut m = CMat::zeros(n, n);
    let mut coeffs = vec![C64::new(0.0, 0.0); n + 1];
    coeffs[n] = C64::new(1.0, 0.0);
    let mut c = C64::new(1.0, 0.0);
    for k in 1..=n {
        m = a * &(m + id.map(|v| v * c));
        let trace: C64 = (0..n).map(|i| m[(i, i)]).sum();
        c = -trace / k as f64;
        coeffs[n - k] = c;
    }
    coeffs
}

/// Eigenvalues of a small matrix (degree <= 64).
pub fn eigenvalues(a: &CMat) -> Result<Vec<C64>> {
    if a.nrows() != a.ncols() {
        return Err(Error::InvalidSymbol("matrix must be square".into()));
    }
    poly::roots(&characteristic_polynomial(a))
}

/// Solves (s*I - m) x = b.
pub fn resolvent_solve(m: &CMat, s: C64, b: &[C64]) -> Result<Vec<C64>> {
    let n = m.nrows();
    let mut shifted = m.map(|v| -v);
    for i in 0..n {
        shifted[(i, i)] += s;
    }
    let rhs = nalgebra::DVector::from_column_slice(b);
    shifted
        .lu()
        .solve(&rhs)
        .map(|x| x.iter().copied().collect())
        .ok_or(Error::EvalAtPole)
}
