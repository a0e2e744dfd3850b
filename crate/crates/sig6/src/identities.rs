//! The hypergeometric identity layer: the sextic modulus map, its
//! angle parametrization, the rational parametrizations in the style
//! of Berndt, Bhargava and Garvan, and numerical verification of the
//! identity
//!
//! ```text
//!   F(1/6, 5/6; 1; xi) = (1 - x + x^2)^(1/4) F(1/2, 1/2; 1; x),
//! ```
//!
//! where `x` and `xi` are linked by the degree-six relation
//!
//! ```text
//!   4 xi (1 - xi) = (27/4) x^2 (1 - x)^2 / (1 - x + x^2)^3
//! ```
//!
//! and the branch is fixed by requiring the increasing bijection
//! `(0,1) -> (0,1)`. Verification always computes the two sides
//! through disjoint machinery — the left by the power series, the
//! right by the AGM — so a defect in either cannot certify itself.

use crate::error::{Error, Result};
use crate::hypergeom::{f12_12_one, gauss_2f1_series, HyperParams, SeriesSpec};
use crate::modulus::Modulus;

/// A classical/signature-six modulus pair `(x, xi)` on the increasing
/// branch of the sextic relation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModulusPair {
    /// Classical side, `x = k^2`.
    pub x: f64,
    /// Signature-six side, `xi = kk^2`.
    pub xi: f64,
}

/// One verified grid point.
#[derive(Clone, Copy, Debug)]
pub struct IdentityPoint {
    pub x: f64,
    pub xi: f64,
    /// Series side, `F(1/6, 5/6; 1; xi)`.
    pub lhs: f64,
    /// AGM side, `(1 - x + x^2)^(1/4) F(1/2, 1/2; 1; x)`.
    pub rhs: f64,
    /// `|lhs - rhs| / max(|rhs|, 1)`.
    pub residual: f64,
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub points: Vec<IdentityPoint>,
    pub max_relative_residual: f64,
    /// Whether the maximum residual stayed within the supplied
    /// threshold.
    pub pass: bool,
}

/// Which rational parametrization to sweep in [`verify_bbg`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BbgParametrization {
    /// `x = p(2+p)/(1+2p)`, `xi = (27/4) p^2 (1+p)^2 / (1+p+p^2)^3`.
    Theorem,
    /// `x = (1-p^2)/(1+2p)`,
    /// `xi = (1/4) (1-p)^2 (1+2p)^2 (2+p)^2 / (1+p+p^2)^3`.
    Corollary,
}

/// Maps a classical modulus `x` to its signature-six partner along the
/// increasing bijection.
///
/// Writing `u = x(1 - x)`, the right-hand side of the sextic relation
/// is `Q = (27/4) u^2 / (1 - u)^3`, and its complement has the exact
/// factorization
///
/// ```text
///   1 - Q = (x - 1/2)^2 (2 + u)^2 / (1 - u)^3,
/// ```
///
/// which this routine uses instead of forming `1 - Q` by subtraction —
/// near the fixed point `x = 1/2` the subtraction would lose half the
/// digits of `xi`. The lower branch is evaluated as
/// `xi = Q / (2 (1 + sqrt(1-Q)))`, again avoiding cancellation; at
/// `x = 1/2` everything is exact and `xi = 1/2` on the nose.
pub fn map_x_to_xi(x: f64) -> Result<ModulusPair> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain {
            what: "x",
            value: x,
            expected: "in (0, 1)",
        });
    }
    let u = x * (1.0 - x);
    let one_minus_u = 1.0 - u; // = 1 - x + x^2; u <= 1/4, no cancellation
    let cube = one_minus_u * one_minus_u * one_minus_u;
    let q = 6.75 * (u * u) / cube;
    let d = x - 0.5;
    let one_minus_q = d * d * (2.0 + u) * (2.0 + u) / cube;
    let s = one_minus_q.sqrt();
    let xi = if x <= 0.5 {
        q / (2.0 * (1.0 + s))
    } else {
        0.5 * (1.0 + s)
    };
    Ok(ModulusPair { x, xi })
}

/// The same pair from the angle side: for a modulus with angles
/// `alpha` and `beta = 2 alpha / 3`,
///
/// ```text
///   x = 2 sin(beta) / (sin(beta) + sqrt(3) cos(beta)),   xi = sin^2(alpha).
/// ```
///
/// That this lands on the sextic relation is exactly the trigonometric
/// triplication behind the identity; the tests check it numerically.
pub fn map_via_angles(modulus: Modulus) -> ModulusPair {
    let (sb, cb) = modulus.beta().sin_cos();
    let x = 2.0 * sb / (sb + 3.0f64.sqrt() * cb);
    ModulusPair {
        x,
        xi: modulus.xi(),
    }
}

/// The rational parametrization reproducing the theorem-side sweep:
///
/// ```text
///   x = p (2 + p) / (1 + 2p),
///   xi = (27/4) p^2 (1 + p)^2 / (1 + p + p^2)^3,
/// ```
///
/// with the auxiliary exact identity
/// `1 - x + x^2 = ((1 + p + p^2) / (1 + 2p))^2`.
pub fn bbg_theorem_point(p: f64) -> Result<ModulusPair> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain {
            what: "p",
            value: p,
            expected: "in (0, 1)",
        });
    }
    let x = p * (2.0 + p) / (1.0 + 2.0 * p);
    let w = 1.0 + p * (1.0 + p); // 1 + p + p^2
    let pp = p * (1.0 + p);
    let xi = 6.75 * pp * pp / (w * w * w);
    Ok(ModulusPair { x, xi })
}

/// The complementary parametrization:
///
/// ```text
///   x = (1 - p^2) / (1 + 2p),
///   xi = (1/4) (1 - p)^2 (1 + 2p)^2 (2 + p)^2 / (1 + p + p^2)^3,
/// ```
///
/// related to [`bbg_theorem_point`] at equal `p` by the simultaneous
/// replacements `x -> 1 - x`, `xi -> 1 - xi` (and `1 - x + x^2` is
/// unchanged).
pub fn bbg_corollary_point(p: f64) -> Result<ModulusPair> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain {
            what: "p",
            value: p,
            expected: "in (0, 1)",
        });
    }
    let x = (1.0 - p) * (1.0 + p) / (1.0 + 2.0 * p);
    let w = 1.0 + p * (1.0 + p);
    let num = (1.0 - p) * (1.0 + 2.0 * p) * (2.0 + p);
    let xi = 0.25 * num * num / (w * w * w);
    Ok(ModulusPair { x, xi })
}

/// Evaluates both sides of the identity at one pair, through disjoint
/// machinery, and returns `(lhs, rhs, residual)`.
fn identity_sides(pair: ModulusPair, spec: SeriesSpec) -> Result<(f64, f64, f64)> {
    let lhs = gauss_2f1_series(HyperParams::SIG6_ONE, pair.xi, spec)?;
    let one_minus_u = 1.0 - pair.x * (1.0 - pair.x);
    let prefactor = one_minus_u.sqrt().sqrt();
    let rhs = prefactor * f12_12_one(pair.x)?;
    let residual = (lhs - rhs).abs() / rhs.abs().max(1.0);
    Ok((lhs, rhs, residual))
}

fn sweep<I>(pairs: I, spec: SeriesSpec, threshold: f64) -> Result<IdentityReport>
where
    I: IntoIterator<Item = Result<ModulusPair>>,
{
    if !(threshold > 0.0 && threshold.is_finite()) {
        return Err(Error::InvalidParams(
            "verification threshold must be positive and finite",
        ));
    }
    let mut points = Vec::new();
    let mut worst = 0.0f64;
    for pair in pairs {
        let pair = pair?;
        let (lhs, rhs, residual) = identity_sides(pair, spec)?;
        worst = worst.max(residual);
        points.push(IdentityPoint {
            x: pair.x,
            xi: pair.xi,
            lhs,
            rhs,
            residual,
        });
    }
    Ok(IdentityReport {
        points,
        max_relative_residual: worst,
        pass: worst <= threshold,
    })
}

/// Verifies the sextic identity on a grid of classical moduli
/// (default acceptance grid: 45 points in `[0.02, 0.9]`; past
/// `x ~ 0.9` the series argument `xi` creeps towards 1 and the sweep
/// needs a larger term budget, not a different algorithm).
pub fn verify_sextic_identity(
    grid: &[f64],
    spec: SeriesSpec,
    threshold: f64,
) -> Result<IdentityReport> {
    sweep(grid.iter().map(|&x| map_x_to_xi(x)), spec, threshold)
}

/// Verifies the identity along one of the rational parametrizations
/// (default acceptance grid: 19 points in `[0.05, 0.95]`).
pub fn verify_bbg(
    grid: &[f64],
    which: BbgParametrization,
    spec: SeriesSpec,
    threshold: f64,
) -> Result<IdentityReport> {
    let make = match which {
        BbgParametrization::Theorem => bbg_theorem_point,
        BbgParametrization::Corollary => bbg_corollary_point,
    };
    sweep(grid.iter().map(|&p| make(p)), spec, threshold)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_3, FRAC_PI_4};

    #[test]
    fn fixed_point_is_exact() {
        // x = 1/2 gives Q = 1 exactly in f64 (every intermediate is a
        // dyadic rational) and the map must return xi = 1/2 exactly.
        assert_eq!(map_x_to_xi(0.5).unwrap().xi, 0.5);
    }

    #[test]
    fn five_eighths_maps_to_the_rational_anchor() {
        let pair = map_x_to_xi(0.625).unwrap();
        assert!((pair.xi - 243.0 / 343.0).abs() <= 1e-15);
    }

    #[test]
    fn small_x_vanishes() {
        let pair = map_x_to_xi(1e-6).unwrap();
        assert!(pair.xi > 0.0 && pair.xi < 1e-10);
    }

    #[test]
    fn branch_and_monotonicity() {
        let mut prev = 0.0;
        for i in 1..=50 {
            let x = i as f64 / 51.0;
            let pair = map_x_to_xi(x).unwrap();
            assert!(pair.xi > prev, "not strictly increasing at x = {x}");
            assert_eq!(pair.xi <= 0.5, x <= 0.5, "branch mismatch at x = {x}");
            prev = pair.xi;
        }
    }

    #[test]
    fn sextic_relation_residual_on_grid() {
        for i in 1..=50 {
            let x = i as f64 / 51.0;
            let pair = map_x_to_xi(x).unwrap();
            let u = x * (1.0 - x);
            let rhs = 6.75 * u * u / (1.0 - u).powi(3);
            let lhs = 4.0 * pair.xi * (1.0 - pair.xi);
            assert!((lhs - rhs).abs() <= 1e-12, "x = {x}");
        }
    }

    #[test]
    fn symmetry_under_complementation() {
        for i in 1..=50 {
            let x = i as f64 / 51.0;
            let xi = map_x_to_xi(x).unwrap().xi;
            let xi_c = map_x_to_xi(1.0 - x).unwrap().xi;
            assert!((xi + xi_c - 1.0).abs() <= 1e-12, "x = {x}");
        }
    }

    #[test]
    fn angle_map_at_pi_over_4() {
        // alpha = pi/4, beta = pi/6: x = 2 (1/2) / (1/2 + 3/2) = 1/2
        // and xi = sin^2(pi/4) = 1/2.
        let pair = map_via_angles(Modulus::from_alpha(FRAC_PI_4).unwrap());
        assert!((pair.x - 0.5).abs() <= 1e-15);
        assert!((pair.xi - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn angle_map_at_pi_over_3() {
        // x here equals the classical modulus of the Weierstrass data
        // at the same alpha; 50-digit value 0.65270364466613930205...
        let modulus = Modulus::from_alpha(FRAC_PI_3).unwrap();
        let pair = map_via_angles(modulus);
        assert!((pair.x - 0.652_703_644_666_139_3).abs() <= 1e-15);
        let data = crate::weierstrass::build(modulus);
        let m = crate::weierstrass::classical_m(&data);
        assert!((pair.x - m).abs() <= 1e-12);
        // Routed back through the sextic map, x must reproduce xi.
        let back = map_x_to_xi(pair.x).unwrap();
        assert!((back.xi - modulus.xi()).abs() <= 1e-12);
    }

    #[test]
    fn angle_map_satisfies_the_relation() {
        for &kk in &[0.1, 0.3, 0.5, 0.7, 0.9] {
            let pair = map_via_angles(Modulus::new(kk).unwrap());
            let u = pair.x * (1.0 - pair.x);
            let rhs = 6.75 * u * u / (1.0 - u).powi(3);
            let lhs = 4.0 * pair.xi * (1.0 - pair.xi);
            assert!((lhs - rhs).abs() <= 1e-14, "kk = {kk}");
        }
    }

    #[test]
    fn bbg_anchors_at_p_one_half_are_bit_exact() {
        // Every intermediate at p = 1/2 is a dyadic rational, so the
        // final divisions are single correct roundings of the exact
        // ratios: x = 5/8, xi = 243/343, and on the complementary side
        // x = 3/8, xi = 100/343.
        let thm = bbg_theorem_point(0.5).unwrap();
        assert_eq!(thm.x, 0.625);
        assert_eq!(thm.xi, 243.0 / 343.0);
        let cor = bbg_corollary_point(0.5).unwrap();
        assert_eq!(cor.x, 0.375);
        assert_eq!(cor.xi, 100.0 / 343.0);
        // 1 - x + x^2 = 49/64 on both sides.
        let aux_thm = 1.0 - thm.x * (1.0 - thm.x);
        let aux_cor = 1.0 - cor.x * (1.0 - cor.x);
        assert_eq!(aux_thm, 49.0 / 64.0);
        assert_eq!(aux_cor, 49.0 / 64.0);
    }

    #[test]
    fn bbg_auxiliary_identity() {
        // 1 - x + x^2 = ((1 + p + p^2)/(1 + 2p))^2 along the theorem
        // sweep.
        for i in 1..=19 {
            let p = i as f64 / 20.0;
            let pair = bbg_theorem_point(p).unwrap();
            let lhs = 1.0 - pair.x * (1.0 - pair.x);
            let ratio = (1.0 + p * (1.0 + p)) / (1.0 + 2.0 * p);
            assert!((lhs - ratio * ratio).abs() <= 1e-13, "p = {p}");
        }
    }

    #[test]
    fn bbg_complementarity() {
        for i in 1..=19 {
            let p = i as f64 / 20.0;
            let thm = bbg_theorem_point(p).unwrap();
            let cor = bbg_corollary_point(p).unwrap();
            assert!((thm.x + cor.x - 1.0).abs() <= 1e-13, "x at p = {p}");
            assert!((thm.xi + cor.xi - 1.0).abs() <= 1e-13, "xi at p = {p}");
        }
    }

    #[test]
    fn bbg_points_satisfy_the_relation() {
        for i in 1..=19 {
            let p = i as f64 / 20.0;
            for pair in [bbg_theorem_point(p).unwrap(), bbg_corollary_point(p).unwrap()] {
                let u = pair.x * (1.0 - pair.x);
                let rhs = 6.75 * u * u / (1.0 - u).powi(3);
                let lhs = 4.0 * pair.xi * (1.0 - pair.xi);
                assert!((lhs - rhs).abs() <= 1e-12, "p = {p}");
            }
        }
    }

    #[test]
    fn bbg_sweeps_are_monotone_and_cover() {
        let mut prev_thm = 0.0;
        let mut prev_cor = 1.0;
        for i in 1..=99 {
            let p = i as f64 / 100.0;
            let thm = bbg_theorem_point(p).unwrap().x;
            let cor = bbg_corollary_point(p).unwrap().x;
            assert!(thm > prev_thm, "theorem sweep not increasing at p = {p}");
            assert!(cor < prev_cor, "corollary sweep not decreasing at p = {p}");
            assert!(thm > 0.0 && thm < 1.0 && cor > 0.0 && cor < 1.0);
            prev_thm = thm;
            prev_cor = cor;
        }
    }

    #[test]
    fn identity_holds_at_spot_points() {
        let spec = SeriesSpec::default();
        let report =
            verify_sextic_identity(&[0.5, 0.625], spec, 1e-10).unwrap();
        assert!(report.pass, "residual {}", report.max_relative_residual);
        for point in &report.points {
            assert!(point.residual <= 1e-10);
        }
    }

    #[test]
    fn bbg_verification_at_p_one_half() {
        let spec = SeriesSpec::default();
        for which in [BbgParametrization::Theorem, BbgParametrization::Corollary] {
            let report = verify_bbg(&[0.5], which, spec, 1e-10).unwrap();
            assert!(report.pass);
            assert!(report.points[0].residual <= 1e-10);
        }
    }

    #[test]
    fn domain_and_threshold_rejection() {
        assert!(matches!(map_x_to_xi(0.0), Err(Error::Domain { .. })));
        assert!(matches!(map_x_to_xi(1.0), Err(Error::Domain { .. })));
        assert!(matches!(bbg_theorem_point(-0.1), Err(Error::Domain { .. })));
        assert!(matches!(bbg_corollary_point(1.0), Err(Error::Domain { .. })));
        assert!(matches!(
            verify_sextic_identity(&[0.5], SeriesSpec::default(), 0.0),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn series_budget_exhaustion_propagates() {
        let starved = SeriesSpec {
            relative_tolerance: 1e-14,
            max_terms: 10,
        };
        assert!(matches!(
            verify_sextic_identity(&[0.5], starved, 1e-9),
            Err(Error::NonConvergence { .. })
        ));
    }
}
