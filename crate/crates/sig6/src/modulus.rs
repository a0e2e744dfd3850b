//! The signature-six modulus and its derived angles.
//!
//! A modulus is a number `kk` in `(0, 1)` together with the angles it
//! determines:
//!
//! ```text
//!   kk = sin(alpha),   alpha in (0, pi/2),
//!   3 beta = 2 alpha,  beta  in (0, pi/3),
//!   xi = kk^2.
//! ```
//!
//! `alpha` is the modular angle, `beta` its rescaling that appears in
//! the classical-modulus formula and the Weierstrass root formulas,
//! and `xi` the hypergeometric argument on the signature-six side.
//! The derived fields are computed once at construction and kept
//! consistent by making the struct immutable.

use crate::error::{Error, Result};

/// A validated signature-six modulus with its derived angles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Modulus {
    kk: f64,
    alpha: f64,
    beta: f64,
    xi: f64,
}

impl Modulus {
    /// Smallest admissible `kk`. Below this every route degenerates
    /// towards the trivial integrand with no useful digits gained.
    pub const MIN_KK: f64 = 1e-6;
    /// Largest admissible `kk`; the complement of [`Self::MIN_KK`].
    pub const MAX_KK: f64 = 1.0 - 1e-6;

    /// Builds a modulus from `kk`, rejecting values outside the
    /// admissible range `[1e-6, 1 - 1e-6]`.
    pub fn new(kk: f64) -> Result<Self> {
        // Negated containment so that NaN falls into the error branch.
        if !(Self::MIN_KK..=Self::MAX_KK).contains(&kk) {
            return Err(Error::Domain {
                what: "kk",
                value: kk,
                expected: "in [1e-6, 1 - 1e-6]",
            });
        }
        let alpha = kk.asin();
        Ok(Self {
            kk,
            alpha,
            beta: 2.0 * alpha / 3.0,
            xi: kk * kk,
        })
    }

    /// Builds a modulus from the modular angle, `kk = sin(alpha)`.
    /// The resulting `kk` must land in the admissible range.
    pub fn from_alpha(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < std::f64::consts::FRAC_PI_2) {
            return Err(Error::Domain {
                what: "alpha",
                value: alpha,
                expected: "in (0, pi/2)",
            });
        }
        let kk = alpha.sin();
        if !(Self::MIN_KK..=Self::MAX_KK).contains(&kk) {
            return Err(Error::Domain {
                what: "alpha",
                value: alpha,
                expected: "sin(alpha) in [1e-6, 1 - 1e-6]",
            });
        }
        Ok(Self {
            kk,
            alpha,
            beta: 2.0 * alpha / 3.0,
            xi: kk * kk,
        })
    }

    /// The modulus `kk` itself.
    pub fn kk(&self) -> f64 {
        self.kk
    }

    /// The modular angle `alpha = arcsin(kk)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// The rescaled angle `beta = 2 alpha / 3`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The hypergeometric argument `xi = kk^2`.
    pub fn xi(&self) -> f64 {
        self.xi
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_fields_are_consistent() {
        for &kk in &[1e-6, 0.1, 0.5, 0.8660254037844386, 1.0 - 1e-6] {
            let m = Modulus::new(kk).unwrap();
            assert!((m.alpha().sin() - kk).abs() <= 1e-15);
            assert!((3.0 * m.beta() - 2.0 * m.alpha()).abs() <= 4.0 * f64::EPSILON);
            assert!((m.xi() - kk * kk).abs() <= 1e-15);
        }
    }

    #[test]
    fn from_alpha_round_trips() {
        let m = Modulus::from_alpha(std::f64::consts::FRAC_PI_3).unwrap();
        assert!((m.kk() - 0.8660254037844386).abs() <= 1e-15);
        assert_eq!(m.alpha(), std::f64::consts::FRAC_PI_3);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(Modulus::new(0.0), Err(Error::Domain { .. })));
        assert!(matches!(Modulus::new(1e-9), Err(Error::Domain { .. })));
        assert!(matches!(Modulus::new(1.0), Err(Error::Domain { .. })));
        assert!(matches!(Modulus::new(1.5), Err(Error::Domain { .. })));
        assert!(matches!(Modulus::new(f64::NAN), Err(Error::Domain { .. })));
        assert!(matches!(
            Modulus::from_alpha(0.0),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            Modulus::from_alpha(2.0),
            Err(Error::Domain { .. })
        ));
    }
}
