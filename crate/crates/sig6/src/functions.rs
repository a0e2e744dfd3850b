//! The signature-six functions: the incomplete integral `f`, its
//! inverse `phi`, the sine/cosine analogues `s6` and `c6`, and the
//! complete integral `K` by four routes.
//!
//! For a modulus `kk` the incomplete integral is
//!
//! ```text
//!   f(T) = int_0^T F(1/6, 5/6; 1/2; kk^2 sin^2 t) dt,
//! ```
//!
//! an odd, strictly increasing function with derivative between 1 and
//! `F(1/6, 5/6; 1/2; kk^2)`, so it has an odd inverse `phi = f^{-1}`.
//! The complete integral is `K = f(pi/2)`, and the analogues of sine
//! and cosine are `s6 = sin . phi` and `c6 = cos . phi`. They satisfy
//! `s6^2 + c6^2 = 1`, pick up a sign under the shift `u -> u + 2K`,
//! and have period `4K`.
//!
//! `K` is computable five ways; four live here and the fifth — through
//! the Weierstrass half-period — in [`crate::weierstrass`]:
//!
//! 1. series: `K = (pi/2) F(1/6, 5/6; 1; kk^2)`;
//! 2. direct quadrature of the defining integral over `[0, pi/2]`;
//! 3. the angle substitution
//!    `K = sqrt(2) int_0^alpha cos(2 psi/3)/sqrt(cos 2 psi - cos 2 alpha) d psi`;
//! 4. the cubic substitution
//!    `K = sqrt(3/2) int_{e3}^{e2} dx/sqrt(4 x^3 - 3 x - g3)`;
//! 5. `K = sqrt(3/2) omega` with `omega` from the AGM.
//!
//! Routes 1 and 5 are fast and smooth; 2–4 exist to verify them (and
//! each other) through entirely different machinery.

use crate::error::{Error, Result};
use crate::hypergeom::{f16_56_half_unchecked, gauss_2f1_series, HyperParams, SeriesSpec};
use crate::modulus::Modulus;
use crate::quadrature::{integrate_singular, integrate_smooth, QuadratureSpec};
use crate::weierstrass;
use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

/// Immutable evaluation context: a modulus, its complete integral `K`
/// (computed once, by the series route), and the tolerance specs used
/// by every operation on the context.
#[derive(Clone, Debug)]
pub struct Sig6Context {
    modulus: Modulus,
    k: f64,
    series_spec: SeriesSpec,
    quad_spec: QuadratureSpec,
}

impl Sig6Context {
    /// Builds a context with the default tolerance specs.
    pub fn new(modulus: Modulus) -> Result<Self> {
        Self::with_specs(modulus, SeriesSpec::default(), QuadratureSpec::default())
    }

    /// Builds a context with explicit tolerance specs.
    pub fn with_specs(
        modulus: Modulus,
        series_spec: SeriesSpec,
        quad_spec: QuadratureSpec,
    ) -> Result<Self> {
        series_spec.validate()?;
        quad_spec.validate()?;
        let k = complete_k_series(modulus, series_spec)?;
        // The integrand is >= 1 with equality only at isolated points,
        // so K > pi/2 strictly; anything else signals a broken build.
        if !k.is_finite() || k <= FRAC_PI_2 {
            return Err(Error::InvalidParams(
                "complete integral violated its K > pi/2 invariant",
            ));
        }
        Ok(Self {
            modulus,
            k,
            series_spec,
            quad_spec,
        })
    }

    /// The modulus this context evaluates at.
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// The complete integral `K = f(pi/2)`.
    pub fn k(&self) -> f64 {
        self.k
    }

    /// Series truncation control used by this context.
    pub fn series_spec(&self) -> SeriesSpec {
        self.series_spec
    }

    /// Quadrature control used by this context.
    pub fn quad_spec(&self) -> QuadratureSpec {
        self.quad_spec
    }
}

/// The integrand of the incomplete integral,
/// `t -> F(1/6, 5/6; 1/2; xi sin^2 t)`, via the closed form.
fn incomplete_integrand(xi: f64) -> impl Fn(f64) -> f64 {
    move |t: f64| {
        let s = t.sin();
        f16_56_half_unchecked(xi * s * s)
    }
}

/// The incomplete integral `f(T)`.
///
/// Range reduction comes first: with `n = round(T/pi)`, the shift
/// identity `f(T + n pi) = f(T) + 2 n K` confines the quadrature to a
/// subinterval of `[-pi/2, pi/2]`, so accuracy does not degrade with
/// `|T|` and cost stays flat.
pub fn f_incomplete(ctx: &Sig6Context, t: f64) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain {
            what: "T",
            value: t,
            expected: "a finite real",
        });
    }
    let n = (t / PI).round();
    let t0 = t - n * PI;
    let g = incomplete_integrand(ctx.modulus.xi());
    let core = if t0 >= 0.0 {
        integrate_smooth(g, 0.0, t0, ctx.quad_spec)?
    } else {
        -integrate_smooth(g, t0, 0.0, ctx.quad_spec)?
    };
    Ok(2.0 * n * ctx.k + core)
}

const PHI_MAX_ITERATIONS: usize = 100;

/// The inverse `phi = f^{-1}`, to `|f(T) - u| <= 1e-13 max(1, |u|)`.
///
/// The shift identity `phi(u + 2nK) = n pi + phi(u)` first brings the
/// argument into `[-K, K]`; the reduced problem is then solved by
/// Newton iteration on a direct quadrature of the integrand (the
/// derivative `f'(T) = F(1/6, 5/6; 1/2; xi sin^2 T)` lies in
/// `[1, F(..; xi)]`, so the root is well conditioned), safeguarded by
/// bisection on a bracket slightly wider than `[-pi/2, pi/2]` — the
/// slack lets the iteration land cleanly when `u` sits within rounding
/// distance of `+-K`.
pub fn phi(ctx: &Sig6Context, u: f64) -> Result<f64> {
    if !u.is_finite() {
        return Err(Error::Domain {
            what: "u",
            value: u,
            expected: "a finite real",
        });
    }
    let k = ctx.k;
    let n = (u / (2.0 * k)).round();
    let u0 = u - 2.0 * n * k;
    let g = incomplete_integrand(ctx.modulus.xi());

    let scale = u0.abs().max(1.0);
    let tol = 1e-13 * scale;
    // Residuals are measured by quadrature; tighten it well below the
    // stop tolerance so integration noise cannot stall the iteration.
    let quad = QuadratureSpec {
        absolute_tolerance: ctx
            .quad_spec
            .absolute_tolerance
            .min(1e-14 * scale)
            .max(1e-15),
        max_refinements: ctx.quad_spec.max_refinements,
    };

    let mut lo = -FRAC_PI_2 - 1e-6;
    let mut hi = FRAC_PI_2 + 1e-6;
    let mut t = ((u0 / k) * FRAC_PI_2).clamp(lo, hi);
    for _ in 0..PHI_MAX_ITERATIONS {
        let ft = if t >= 0.0 {
            integrate_smooth(&g, 0.0, t, quad)?
        } else {
            -integrate_smooth(&g, t, 0.0, quad)?
        };
        let r = ft - u0;
        if r.abs() <= tol {
            return Ok(n * PI + t);
        }
        if r > 0.0 {
            hi = t;
        } else {
            lo = t;
        }
        let mut next = t - r / g(t);
        if !(next > lo && next < hi) || next == t {
            next = 0.5 * (lo + hi);
        }
        if next == t {
            // Bracket exhausted at this floating-point resolution.
            return Ok(n * PI + t);
        }
        t = next;
    }
    Err(Error::NoConvergence {
        iterations: PHI_MAX_ITERATIONS,
    })
}

/// The sine analogue `s6(u) = sin(phi(u))`; odd, with values in
/// `[-1, 1]`.
pub fn s6(ctx: &Sig6Context, u: f64) -> Result<f64> {
    Ok(phi(ctx, u)?.sin())
}

/// The cosine analogue `c6(u) = cos(phi(u))`; even, with values in
/// `[-1, 1]`.
pub fn c6(ctx: &Sig6Context, u: f64) -> Result<f64> {
    Ok(phi(ctx, u)?.cos())
}

/// Route 1: `K = (pi/2) F(1/6, 5/6; 1; kk^2)` by the series.
pub fn complete_k_series(modulus: Modulus, spec: SeriesSpec) -> Result<f64> {
    Ok(FRAC_PI_2 * gauss_2f1_series(HyperParams::SIG6_ONE, modulus.xi(), spec)?)
}

/// Route 2: direct adaptive quadrature of the defining integral,
/// `K = int_0^{pi/2} F(1/6, 5/6; 1/2; kk^2 sin^2 t) dt`.
pub fn complete_k_quadrature(modulus: Modulus, spec: QuadratureSpec) -> Result<f64> {
    integrate_smooth(incomplete_integrand(modulus.xi()), 0.0, FRAC_PI_2, spec)
}

/// Route 3: the angle substitution,
///
/// ```text
///   K = sqrt(2) int_0^alpha cos(2 psi / 3) / sqrt(cos 2 psi - cos 2 alpha) d psi.
/// ```
///
/// The integrand blows up like an inverse square root at `psi = alpha`
/// only. Reflecting to `y = alpha - psi` puts the singularity at zero
/// and turns the radicand into the cancellation-free product
/// `2 sin(y) sin(2 alpha - y)`.
pub fn complete_k_psi_integral(modulus: Modulus, spec: QuadratureSpec) -> Result<f64> {
    let kk = modulus.kk();
    if kk <= 1e-6 {
        // alpha -> 0 collapses the interval; nothing to integrate.
        return Err(Error::Domain {
            what: "kk",
            value: kk,
            expected: "> 1e-6 for the angle-substitution route",
        });
    }
    let alpha = modulus.alpha();
    let g = move |y: f64| {
        ((alpha - y) * (2.0 / 3.0)).cos() / (2.0 * y.sin() * (2.0 * alpha - y).sin()).sqrt()
    };
    Ok(SQRT_2 * integrate_singular(g, 0.0, alpha, spec)?)
}

/// Route 4: the cubic substitution,
///
/// ```text
///   K = sqrt(3/2) int_{e3}^{e2} dx / sqrt(4 x^3 - 3 x - g3),
/// ```
///
/// with both endpoints singular — they are the two smaller Weierstrass
/// roots. Shares the split, shifted evaluation of the half-period
/// integral in [`crate::weierstrass`].
pub fn complete_k_cubic_integral(modulus: Modulus, spec: QuadratureSpec) -> Result<f64> {
    Ok(1.5f64.sqrt() * weierstrass::omega_integral_split(modulus.beta(), spec)?)
}

#[cfg(test)]
mod tests {
    // Frozen reference decimals are kept at full printed length.
    #![allow(clippy::excessive_precision)]
    use super::*;

    // Complete integrals at reference moduli, from a 50-digit
    // evaluation of (pi/2) F(1/6, 5/6; 1; kk^2).
    const K_01: f64 = 1.572_989_734_370_173_3;
    const K_05: f64 = 1.634_168_321_814_051_9;
    const K_06: f64 = 1.669_604_481_067_874_4;
    const K_09: f64 = 1.950_599_873_959_392;

    fn ctx(kk: f64) -> Sig6Context {
        Sig6Context::new(Modulus::new(kk).unwrap()).unwrap()
    }

    #[test]
    fn k_series_matches_reference_values() {
        let spec = SeriesSpec::default();
        for &(kk, expected) in &[(0.1, K_01), (0.5, K_05), (0.6, K_06), (0.9, K_09)] {
            let k = complete_k_series(Modulus::new(kk).unwrap(), spec).unwrap();
            assert!(
                (k - expected).abs() <= 1e-13 * expected,
                "kk = {kk}: {k} vs {expected}"
            );
        }
    }

    #[test]
    fn context_construction() {
        let c = ctx(0.5);
        assert!(c.k() > FRAC_PI_2);
        assert!((c.k() - K_05).abs() <= 1e-13 * K_05);
        let bad_spec = SeriesSpec {
            relative_tolerance: 2.0,
            max_terms: 10,
        };
        assert!(Sig6Context::with_specs(
            c.modulus(),
            bad_spec,
            QuadratureSpec::default()
        )
        .is_err());
    }

    #[test]
    fn incomplete_integral_anchors() {
        let c = ctx(0.5);
        assert_eq!(f_incomplete(&c, 0.0).unwrap(), 0.0);
        let at_half_pi = f_incomplete(&c, FRAC_PI_2).unwrap();
        assert!((at_half_pi - c.k()).abs() <= 1e-11);
        let at_pi = f_incomplete(&c, PI).unwrap();
        assert!((at_pi - 2.0 * c.k()).abs() <= 1e-11);
    }

    #[test]
    fn incomplete_integral_degenerates_to_identity() {
        // At the admissible floor the integrand is 1 + O(1e-12).
        let c = ctx(1e-6);
        for &t in &[0.3, 1.0, 2.5, -4.0, 11.0] {
            assert!(
                (f_incomplete(&c, t).unwrap() - t).abs() <= 1e-10,
                "t = {t}"
            );
        }
    }

    #[test]
    fn incomplete_integral_is_odd() {
        let c = ctx(0.7);
        for &t in &[0.2, 0.9, 1.5, 2.8, 5.0] {
            let plus = f_incomplete(&c, t).unwrap();
            let minus = f_incomplete(&c, -t).unwrap();
            assert!((plus + minus).abs() <= 1e-13 * plus.abs().max(1.0));
        }
    }

    #[test]
    fn shift_identity_for_f() {
        let c = ctx(0.6);
        for &t in &[0.0, 0.4, 1.1, -0.8] {
            let shifted = f_incomplete(&c, t + PI).unwrap();
            let base = f_incomplete(&c, t).unwrap();
            assert!((shifted - base - 2.0 * c.k()).abs() <= 1e-12);
        }
    }

    #[test]
    fn phi_anchors() {
        let c = ctx(0.5);
        assert_eq!(phi(&c, 0.0).unwrap(), 0.0);
        assert!((phi(&c, c.k()).unwrap() - FRAC_PI_2).abs() <= 1e-11);
        assert!((phi(&c, 2.0 * c.k()).unwrap() - PI).abs() <= 1e-11);
        assert!((phi(&c, -c.k()).unwrap() + FRAC_PI_2).abs() <= 1e-11);
    }

    #[test]
    fn phi_round_trip() {
        let c = ctx(0.5);
        for &u in &[-2.7, -0.3, 0.9, 3.4, 4.9] {
            let t = phi(&c, u).unwrap();
            let back = f_incomplete(&c, t).unwrap();
            assert!(
                (back - u).abs() <= 1e-11 * u.abs().max(1.0),
                "u = {u}: f(phi(u)) = {back}"
            );
        }
    }

    #[test]
    fn phi_is_odd() {
        let c = ctx(0.8);
        for &u in &[0.3, 1.2, 2.9] {
            let plus = phi(&c, u).unwrap();
            let minus = phi(&c, -u).unwrap();
            assert!((plus + minus).abs() <= 1e-12);
        }
    }

    #[test]
    fn sine_cosine_analogues_at_the_quarter_points() {
        let c = ctx(0.6);
        let k = c.k();
        assert_eq!(s6(&c, 0.0).unwrap(), 0.0);
        assert_eq!(c6(&c, 0.0).unwrap(), 1.0);
        assert!((s6(&c, k).unwrap() - 1.0).abs() <= 1e-11);
        assert!(c6(&c, k).unwrap().abs() <= 1e-11);
        assert!(s6(&c, 2.0 * k).unwrap().abs() <= 1e-10);
        assert!((c6(&c, 2.0 * k).unwrap() + 1.0).abs() <= 1e-10);
    }

    #[test]
    fn quadrature_route_agrees_with_series() {
        for &kk in &[1e-6, 0.3, std::f64::consts::FRAC_1_SQRT_2, 0.9] {
            let modulus = Modulus::new(kk).unwrap();
            let by_series = complete_k_series(modulus, SeriesSpec::default()).unwrap();
            let by_quad = complete_k_quadrature(modulus, QuadratureSpec::default()).unwrap();
            assert!(
                (by_series - by_quad).abs() <= 1e-10 * by_series,
                "kk = {kk}"
            );
        }
    }

    #[test]
    fn psi_route_agrees_with_series() {
        for &(kk, tol) in &[(0.3, 1e-9), (0.5, 1e-9), (0.95, 1e-8)] {
            let modulus = Modulus::new(kk).unwrap();
            let by_series = complete_k_series(modulus, SeriesSpec::default()).unwrap();
            let by_psi = complete_k_psi_integral(modulus, QuadratureSpec::default()).unwrap();
            assert!(
                (by_series - by_psi).abs() <= tol * by_series,
                "kk = {kk}: {by_psi} vs {by_series}"
            );
        }
    }

    #[test]
    fn psi_route_rejects_the_degenerate_floor() {
        let modulus = Modulus::new(1e-6).unwrap();
        assert!(matches!(
            complete_k_psi_integral(modulus, QuadratureSpec::default()),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn cubic_route_agrees_with_series_and_omega() {
        let modulus = Modulus::new(0.6).unwrap();
        let by_series = complete_k_series(modulus, SeriesSpec::default()).unwrap();
        let by_cubic = complete_k_cubic_integral(modulus, QuadratureSpec::default()).unwrap();
        assert!((by_series - by_cubic).abs() <= 1e-9 * by_series);
        let data = crate::weierstrass::build(modulus);
        assert!((1.5f64.sqrt() * data.omega - by_cubic).abs() <= 1e-9 * by_cubic);
    }

    #[test]
    fn trivial_limit_of_k_routes() {
        // At the admissible floor K collapses to pi/2 + O(1e-12); the
        // spec's kk -> 0 trivial limit, evaluated at the smallest
        // admissible modulus.
        let modulus = Modulus::new(1e-6).unwrap();
        let by_series = complete_k_series(modulus, SeriesSpec::default()).unwrap();
        assert!((by_series - FRAC_PI_2).abs() <= 1e-11);
        let by_quad = complete_k_quadrature(modulus, QuadratureSpec::default()).unwrap();
        assert!((by_quad - FRAC_PI_2).abs() <= 1e-11);
    }

    #[test]
    fn non_finite_arguments_are_rejected() {
        let c = ctx(0.5);
        assert!(matches!(
            f_incomplete(&c, f64::NAN),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            f_incomplete(&c, f64::INFINITY),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(phi(&c, f64::NAN), Err(Error::Domain { .. })));
        assert!(matches!(
            phi(&c, f64::NEG_INFINITY),
            Err(Error::Domain { .. })
        ));
    }
}
