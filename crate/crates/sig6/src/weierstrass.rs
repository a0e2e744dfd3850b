//! Weierstrass-side data: invariants, roots, and the real half-period.
//!
//! A modulus `kk` pins the depressed cubic
//!
//! ```text
//!   4 x^3 - g2 x - g3,    g2 = 3,   g3 = 1 - 2 kk^2,
//! ```
//!
//! whose discriminant `delta = g2^3 - 27 g3^2 = 108 kk^2 (1 - kk^2)`
//! is positive throughout the admissible range, so the three roots are
//! real and distinct. With `beta = 2 alpha / 3` and `kk = sin(alpha)`
//! they have the closed trigonometric forms
//!
//! ```text
//!   e1 = cos(beta),  e2 = cos(beta - 2pi/3),  e3 = cos(beta + 2pi/3),
//! ```
//!
//! ordered `e1 > e2 > e3`. The positive fundamental half-period of the
//! associated Weierstrass function is computed by two independent
//! routes: the classical complete elliptic integral through the AGM,
//!
//! ```text
//!   omega = K_cl(m) / sqrt(e1 - e3),   m = (e2 - e3)/(e1 - e3),
//! ```
//!
//! and direct tanh-sinh integration of `1/sqrt(4x^3 - 3x - g3)` over
//! `(e3, e2)`. Root differences are always formed from the stable
//! trigonometric identities
//!
//! ```text
//!   e1 - e3 = sqrt(3) sin(beta + pi/3),
//!   e2 - e3 = sqrt(3) sin(beta),
//!   e1 - e2 = sqrt(3) cos(beta + pi/6),
//! ```
//!
//! never by subtracting nearly equal cosines.

use crate::error::{Error, Result};
use crate::hypergeom::f12_12_one;
use crate::modulus::Modulus;
use crate::quadrature::{integrate_singular, QuadratureSpec};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Invariants, ordered roots and half-period attached to one modulus.
#[derive(Clone, Copy, Debug)]
pub struct WeierstrassData {
    /// First invariant; identically 3 in this theory.
    pub g2: f64,
    /// Second invariant, `1 - 2 kk^2`.
    pub g3: f64,
    /// Discriminant `g2^3 - 27 g3^2 = 108 kk^2 (1 - kk^2)`.
    pub delta: f64,
    /// Largest root, `cos(beta)`.
    pub e1: f64,
    /// Middle root, `cos(beta - 2pi/3)`.
    pub e2: f64,
    /// Smallest root, `cos(beta + 2pi/3)`.
    pub e3: f64,
    /// Positive fundamental half-period (AGM route).
    pub omega: f64,
    // The angle everything is derived from; kept for stable
    // recomputation of root differences.
    beta: f64,
}

/// Populates the full data set for one modulus. The roots come from
/// the closed trigonometric forms — never a generic cubic solver — so
/// their ordering is exact and nothing degrades near double roots.
pub fn build(modulus: Modulus) -> WeierstrassData {
    let beta = modulus.beta();
    let xi = modulus.xi();
    let mut data = WeierstrassData {
        g2: 3.0,
        g3: 1.0 - 2.0 * xi,
        delta: 108.0 * xi * (1.0 - xi),
        e1: beta.cos(),
        e2: (beta - 2.0 * FRAC_PI_3).cos(),
        e3: (beta + 2.0 * FRAC_PI_3).cos(),
        omega: f64::NAN,
        beta,
    };
    data.omega = half_period_agm(&data)
        .expect("the classical modulus lies in (0, 1) for every admissible signature-six modulus");
    data
}

/// The classical modulus squared, `m = (e2 - e3)/(e1 - e3)`, in its
/// cancellation-free form `sin(beta) / sin(beta + pi/3)`.
pub fn classical_m(data: &WeierstrassData) -> f64 {
    data.beta.sin() / (data.beta + FRAC_PI_3).sin()
}

/// Half-period by the AGM:
/// `omega = (pi/2) F(1/2, 1/2; 1; m) / sqrt(e1 - e3)`.
pub fn half_period_agm(data: &WeierstrassData) -> Result<f64> {
    let m = classical_m(data);
    if !(m > 0.0 && m < 1.0) {
        return Err(Error::Domain {
            what: "m",
            value: m,
            expected: "in (0, 1)",
        });
    }
    let e1_minus_e3 = SQRT_3 * (data.beta + FRAC_PI_3).sin();
    Ok(FRAC_PI_2 * f12_12_one(m)? / e1_minus_e3.sqrt())
}

/// Half-period by direct integration:
/// `omega = int_{e3}^{e2} dx / sqrt(4x^3 - 3x - g3)`.
///
/// Verification route for [`half_period_agm`]; slower and, at the
/// extremes of the admissible range, less accurate.
pub fn half_period_integral(data: &WeierstrassData, spec: QuadratureSpec) -> Result<f64> {
    omega_integral_split(data.beta, spec)
}

/// The half-period integral with both inverse-square-root endpoints
/// made benign: split at the midpoint of `(e3, e2)` and shift each
/// half so its singular endpoint sits at zero, with the cubic in the
/// factored forms
///
/// ```text
///   x = e3 + y:  4 y (e1 - e3 - y)(e2 - e3 - y),
///   x = e2 - z:  4 z (e1 - e2 + z)(e2 - e3 - z),
/// ```
///
/// which evaluate without cancellation arbitrarily close to the
/// singularities. (Evaluating `4x^3 - 3x - g3` as written loses the
/// vanishing factor to rounding within ~1e-8 of a root, which is what
/// limits a literal transcription of the integral.)
pub(crate) fn omega_integral_split(beta: f64, spec: QuadratureSpec) -> Result<f64> {
    let d13 = SQRT_3 * (beta + FRAC_PI_3).sin(); // e1 - e3
    let d23 = SQRT_3 * beta.sin(); // e2 - e3
    let d12 = SQRT_3 * (beta + FRAC_PI_6).cos(); // e1 - e2
    let half_gap = 0.5 * d23;
    let left = integrate_singular(
        |y| 1.0 / (4.0 * y * (d13 - y) * (d23 - y)).sqrt(),
        0.0,
        half_gap,
        spec,
    )?;
    let right = integrate_singular(
        |z| 1.0 / (4.0 * z * (d12 + z) * (d23 - z)).sqrt(),
        0.0,
        half_gap,
        spec,
    )?;
    Ok(left + right)
}

/// Maximum absolute residual over the three midpoint relations
///
/// ```text
///   2 (e1^2 + e2^2 + e3^2) = 3,
///  -4 (e2 e3 + e3 e1 + e1 e2) = 3,
///   (e1 - e3)^2 (1 - m + m^2) = 9/4,
/// ```
///
/// with `m` the classical modulus squared.
pub fn midpoint_relation_check(data: &WeierstrassData) -> f64 {
    let (e1, e2, e3) = (data.e1, data.e2, data.e3);
    let sum_sq = 2.0 * (e1 * e1 + e2 * e2 + e3 * e3) - 3.0;
    let sum_prod = -4.0 * (e2 * e3 + e3 * e1 + e1 * e2) - 3.0;
    let m = classical_m(data);
    let d13 = SQRT_3 * (data.beta + FRAC_PI_3).sin();
    let quarter = d13 * d13 * (1.0 - m * (1.0 - m)) - 2.25;
    sum_sq.abs().max(sum_prod.abs()).max(quarter.abs())
}
