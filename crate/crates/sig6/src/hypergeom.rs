//! Gauss hypergeometric evaluations.
//!
//! Everything in this crate ultimately reduces to the Gauss function
//!
//! ```text
//!                      inf  (a)_n (b)_n   z^n
//!   F(a, b; c; z)  =  Sum   -----------  ----          (DLMF 15.2.1)
//!                      n=0     (c)_n      n!
//! ```
//!
//! at one of three parameter triples:
//!
//! * `(1/6, 5/6; 1/2)` — has the closed trigonometric form
//!   `F(1/6, 5/6; 1/2; sin^2 psi) = cos(2 psi / 3) / cos(psi)`,
//!   implemented by [`f16_56_half`];
//! * `(1/6, 5/6; 1)` — the signature-six complete integral,
//!   `K = (pi/2) F(1/6, 5/6; 1; kk^2)`, evaluated by the series;
//! * `(1/2, 1/2; 1)` — the classical complete elliptic integral,
//!   evaluated through the arithmetic-geometric mean by
//!   [`f12_12_one`] (DLMF 19.8.5).
//!
//! The general series evaluator [`gauss_2f1_series`] is deliberately
//! independent of the closed forms: it is the oracle the other two
//! routes are cross-checked against in the tests.

use crate::error::{Error, Result};
use crate::kahan::KahanSum;

/// Truncation control for [`gauss_2f1_series`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesSpec {
    /// Relative tolerance on the truncated tail. Default `1e-14`.
    pub relative_tolerance: f64,
    /// Hard cap on the number of series terms. Default `2_000_000`.
    pub max_terms: usize,
}

impl Default for SeriesSpec {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-14,
            max_terms: 2_000_000,
        }
    }
}

impl SeriesSpec {
    /// Checks the struct invariants.
    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance < 1.0) {
            return Err(Error::InvalidParams(
                "SeriesSpec.relative_tolerance must lie in (0, 1)",
            ));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidParams("SeriesSpec.max_terms must be at least 1"));
        }
        Ok(())
    }
}

/// Parameter triple (a, b; c) of the Gauss function.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HyperParams {
    /// `F(1/6, 5/6; 1/2; ·)` — the incomplete-integral integrand.
    pub const SIG6_HALF: HyperParams = HyperParams {
        a: 1.0 / 6.0,
        b: 5.0 / 6.0,
        c: 0.5,
    };
    /// `F(1/6, 5/6; 1; ·)` — the complete-integral series.
    pub const SIG6_ONE: HyperParams = HyperParams {
        a: 1.0 / 6.0,
        b: 5.0 / 6.0,
        c: 1.0,
    };
    /// `F(1/2, 1/2; 1; ·)` — the classical elliptic side.
    pub const CLASSICAL: HyperParams = HyperParams {
        a: 0.5,
        b: 0.5,
        c: 1.0,
    };

    /// Checks that the triple is admissible for the series.
    pub fn validate(&self) -> Result<()> {
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::InvalidParams("hypergeometric parameters must be finite"));
        }
        // The series is undefined when c is zero or a negative integer:
        // (c)_n vanishes from n = 1 - c onward.
        if self.c <= 0.0 && self.c == self.c.floor() {
            return Err(Error::InvalidParams(
                "hypergeometric parameter c must not be zero or a negative integer",
            ));
        }
        Ok(())
    }
}

/// Sums the Gauss series at `z` by the term-ratio recurrence
///
/// ```text
///   term_{n+1} = term_n * (a+n)(b+n) z / ((c+n)(1+n)),   term_0 = 1,
/// ```
///
/// with compensated accumulation. Truncation is tail-aware: iteration
/// stops once `|term| / (1 - |z|) <= relative_tolerance * |sum|`, a
/// geometric bound on the remaining tail (the term ratio tends to `z`
/// for every triple used here), which implies the plain per-term
/// criterion as well.
pub fn gauss_2f1_series(params: HyperParams, z: f64, spec: SeriesSpec) -> Result<f64> {
    params.validate()?;
    spec.validate()?;
    if !z.is_finite() || z.abs() >= 1.0 {
        return Err(Error::Domain {
            what: "z",
            value: z,
            expected: "|z| < 1",
        });
    }

    // Bound on the tail after the current term: sum_{k>=1} |z|^k = |z|/(1-|z|),
    // rounded up to 1/(1-|z|) so the test is conservative for all n.
    let tail_factor = 1.0 / (1.0 - z.abs());
    let mut term = 1.0;
    let mut sum = KahanSum::with_initial(1.0);
    for n in 0..spec.max_terms {
        let nf = n as f64;
        term *= (params.a + nf) * (params.b + nf) / ((params.c + nf) * (1.0 + nf)) * z;
        sum.add(term);
        if term.abs() * tail_factor <= spec.relative_tolerance * sum.value().abs() {
            return Ok(sum.value());
        }
    }
    Err(Error::NonConvergence {
        terms: spec.max_terms,
    })
}

/// `F(1/6, 5/6; 1/2; z)` by the closed form
///
/// ```text
///   F(1/6, 5/6; 1/2; sin^2 psi) = cos(2 psi / 3) / cos(psi),
///   psi = arcsin(sqrt(z)) in [0, pi/2).
/// ```
///
/// The angle is recovered as `atan2(sqrt(z), sqrt(1 - z))`, which stays
/// fully accurate as `z -> 1` where `arcsin(sqrt(z))` loses digits.
/// The result is `>= 1` and strictly increasing in `z`; the form
/// diverges at `z = 1` (`cos psi -> 0`), which is rejected as a domain
/// error rather than assigned a limiting value.
pub fn f16_56_half(z: f64) -> Result<f64> {
    // Negated containment so that NaN falls into the error branch.
    if !(0.0..1.0).contains(&z) {
        return Err(Error::Domain {
            what: "z",
            value: z,
            expected: "in [0, 1)",
        });
    }
    Ok(f16_56_half_unchecked(z))
}

/// Closed-form kernel of [`f16_56_half`] without the domain check, for
/// integrands whose argument is already known to lie in `[0, 1)`.
pub(crate) fn f16_56_half_unchecked(z: f64) -> f64 {
    let psi = z.sqrt().atan2((1.0 - z).sqrt());
    (2.0 * psi / 3.0).cos() / psi.cos()
}

/// `F(1/2, 1/2; 1; m) = 1 / AGM(1, sqrt(1 - m))` (DLMF 19.8.5, with
/// `K(m) = (pi/2) F(1/2, 1/2; 1; m)`).
pub fn f12_12_one(m: f64) -> Result<f64> {
    // Negated containment so that NaN falls into the error branch.
    if !(0.0..1.0).contains(&m) {
        return Err(Error::Domain {
            what: "m",
            value: m,
            expected: "in [0, 1)",
        });
    }
    Ok(1.0 / agm(1.0, (1.0 - m).sqrt()))
}

/// Arithmetic-geometric mean of `a >= b > 0`.
///
/// Quadratic convergence puts the iteration count below ten for any
/// argument of interest; the loop stops once the two means agree to
/// four ulps. The cap exists only as a safety net.
pub(crate) fn agm(a0: f64, b0: f64) -> f64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..64 {
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// The Wallis integral
///
/// ```text
///   W_n = int_0^{pi/2} sin^{2n} t dt = (pi/2) (2n)! / (2^n n!)^2,
/// ```
///
/// computed by the stable ratio recurrence `W_n = W_{n-1} (2n-1)/(2n)`
/// rather than raw factorials (which overflow near n = 85).
pub fn wallis_integral(n: u32) -> f64 {
    let mut w = std::f64::consts::FRAC_PI_2;
    for j in 1..=n {
        let jf = f64::from(j);
        w *= (2.0 * jf - 1.0) / (2.0 * jf);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn series_at_zero_is_one() {
        let v = gauss_2f1_series(HyperParams::SIG6_HALF, 0.0, SeriesSpec::default()).unwrap();
        assert_eq!(v, 1.0);
    }

    #[test]
    fn series_matches_agm_at_half() {
        let series =
            gauss_2f1_series(HyperParams::CLASSICAL, 0.5, SeriesSpec::default()).unwrap();
        let agm_route = f12_12_one(0.5).unwrap();
        assert!(rel(series, agm_route) <= 1e-12);
    }

    #[test]
    fn series_matches_closed_form_at_sin2_03() {
        // psi = 0.3: F(1/6, 5/6; 1/2; sin^2 0.3) = cos(0.2)/cos(0.3).
        let z = 0.3f64.sin().powi(2);
        let series = gauss_2f1_series(HyperParams::SIG6_HALF, z, SeriesSpec::default()).unwrap();
        let closed = 0.2f64.cos() / 0.3f64.cos();
        assert!(rel(series, closed) <= 1e-13);
    }

    #[test]
    fn closed_form_trivial_and_exact_points() {
        assert_eq!(f16_56_half(0.0).unwrap(), 1.0);
        // z = 1/2 is psi = pi/4: cos(pi/6)/cos(pi/4) = sqrt(3/2).
        assert!((f16_56_half(0.5).unwrap() - 1.5f64.sqrt()).abs() <= 1e-15);
        let z = 0.3;
        let series = gauss_2f1_series(HyperParams::SIG6_HALF, z, SeriesSpec::default()).unwrap();
        assert!(rel(f16_56_half(z).unwrap(), series) <= 1e-12);
    }

    #[test]
    fn closed_form_strictly_increasing() {
        let mut prev = f16_56_half(0.0).unwrap();
        for i in 1..=200 {
            let z = 0.999 * i as f64 / 200.0;
            let v = f16_56_half(z).unwrap();
            assert!(v > prev, "not increasing at z = {z}");
            prev = v;
        }
    }

    #[test]
    fn agm_route_trivial_and_oracle_points() {
        assert_eq!(f12_12_one(0.0).unwrap(), 1.0);
        let series =
            gauss_2f1_series(HyperParams::CLASSICAL, 0.5, SeriesSpec::default()).unwrap();
        assert!(rel(f12_12_one(0.5).unwrap(), series) <= 1e-12);
        // Near the logarithmic singularity the series needs ~4000 terms;
        // the default budget is ample.
        let series99 =
            gauss_2f1_series(HyperParams::CLASSICAL, 0.99, SeriesSpec::default()).unwrap();
        assert!(rel(f12_12_one(0.99).unwrap(), series99) <= 1e-9);
    }

    #[test]
    fn series_agm_agreement_on_grid() {
        // m in [0, 0.95] on a 50-point grid, relative 1e-11.
        for i in 0..50 {
            let m = 0.95 * i as f64 / 49.0;
            let series =
                gauss_2f1_series(HyperParams::CLASSICAL, m, SeriesSpec::default()).unwrap();
            let agm_route = f12_12_one(m).unwrap();
            assert!(
                rel(series, agm_route) <= 1e-11,
                "disagreement at m = {m}: {series} vs {agm_route}"
            );
        }
    }

    #[test]
    fn wallis_small_orders() {
        assert_eq!(wallis_integral(0), std::f64::consts::FRAC_PI_2);
        assert_eq!(wallis_integral(1), std::f64::consts::FRAC_PI_4);
        let w2 = 3.0 * std::f64::consts::PI / 16.0;
        assert!(rel(wallis_integral(2), w2) <= 1e-15);
    }

    #[test]
    fn wallis_ratio_recurrence() {
        let mut prev = wallis_integral(0);
        for n in 1..=60u32 {
            let w = wallis_integral(n);
            let expected = (2.0 * f64::from(n) - 1.0) / (2.0 * f64::from(n));
            assert!(rel(w / prev, expected) <= 1e-15);
            prev = w;
        }
    }

    #[test]
    fn terminating_series_is_polynomial() {
        // a = -3 truncates the series to a cubic; check against a
        // directly summed polynomial.
        let params = HyperParams {
            a: -3.0,
            b: 0.25,
            c: 1.5,
        };
        let z = 0.7;
        let direct = {
            // sum_{n=0}^{3} (-3)_n (1/4)_n / ((3/2)_n n!) z^n
            let mut total = 0.0;
            let mut term = 1.0;
            for n in 0..4 {
                total += term;
                let nf = n as f64;
                term *= (params.a + nf) * (params.b + nf) / ((params.c + nf) * (1.0 + nf)) * z;
            }
            total
        };
        let series = gauss_2f1_series(params, z, SeriesSpec::default()).unwrap();
        assert!((series - direct).abs() <= 1e-15 * direct.abs());
    }

    #[test]
    fn domain_and_parameter_rejection() {
        assert!(matches!(
            gauss_2f1_series(HyperParams::SIG6_HALF, 1.0, SeriesSpec::default()),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            gauss_2f1_series(
                HyperParams {
                    a: 1.0,
                    b: 1.0,
                    c: 0.0
                },
                0.5,
                SeriesSpec::default()
            ),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            gauss_2f1_series(
                HyperParams {
                    a: 1.0,
                    b: 1.0,
                    c: -3.0
                },
                0.5,
                SeriesSpec::default()
            ),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(f16_56_half(1.0), Err(Error::Domain { .. })));
        assert!(matches!(f16_56_half(-0.1), Err(Error::Domain { .. })));
        assert!(matches!(f12_12_one(1.0), Err(Error::Domain { .. })));
        assert!(matches!(f12_12_one(-1e-3), Err(Error::Domain { .. })));
    }

    #[test]
    fn budget_exhaustion_reports_nonconvergence() {
        let spec = SeriesSpec {
            relative_tolerance: 1e-14,
            max_terms: 5,
        };
        assert_eq!(
            gauss_2f1_series(HyperParams::CLASSICAL, 0.9, spec),
            Err(Error::NonConvergence { terms: 5 })
        );
    }

    #[test]
    fn spec_validation() {
        let bad_tol = SeriesSpec {
            relative_tolerance: 0.0,
            max_terms: 10,
        };
        assert!(bad_tol.validate().is_err());
        let bad_terms = SeriesSpec {
            relative_tolerance: 1e-10,
            max_terms: 0,
        };
        assert!(bad_terms.validate().is_err());
        assert!(SeriesSpec::default().validate().is_ok());
    }
}
