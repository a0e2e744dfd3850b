//! Numerical toolkit for the signature-six elliptic-like theory.
//!
//! The theory is built on the hypergeometric function
//! F(1/6, 5/6; 1/2; ·): the incomplete integral
//!
//! ```text
//! f(T) = ∫₀ᵀ F(1/6, 5/6; 1/2; ξ sin² t) dt,       ξ = kk²(3 - kk²)²/4,
//! ```
//!
//! its quarter length K = (π/2) F(1/6, 5/6; 1; ξ), the inverse
//! amplitude `phi`, and the elliptic-like functions
//! `s6 = sin ∘ phi`, `c6 = cos ∘ phi`. A sextic modulus map ties the
//! theory to the classical arithmetic-geometric mean, a cubic
//! pencil (g2 = 3, g3 = 1 - 2 kk²) ties it to Weierstrass half-periods,
//! and two rational parametrizations give closed-form test points.
//!
//! # Modules
//!
//! - [`hypergeom`] — Gauss series, the closed form of
//!   F(1/6, 5/6; 1/2; ·), and the AGM route to F(1/2, 1/2; 1; ·);
//! - [`quadrature`] — adaptive Gauss–Kronrod for smooth integrands and
//!   tanh-sinh for endpoint singularities;
//! - [`modulus`] — the validated modulus type and its derived angles;
//! - [`functions`] — the incomplete integral, `phi`, `s6`, `c6`, and
//!   four independent routes to K;
//! - [`weierstrass`] — invariants, roots, and the real half-period of
//!   the associated cubic (the fifth K route);
//! - [`identities`] — the sextic modulus map, the hypergeometric
//!   identity it encodes, and the rational parametrizations;
//! - [`selftest`] — the acceptance-criteria suite with pinned
//!   tolerances;
//! - [`cli`] — the command-line front end;
//! - [`grid`] — deterministic linear grids shared by all of the above.
//!
//! # Example
//!
//! ```
//! use sig6::functions::{self, Sig6Context};
//! use sig6::modulus::Modulus;
//!
//! let ctx = Sig6Context::new(Modulus::new(0.6).unwrap()).unwrap();
//! let k = ctx.k();
//! // The quarter length plays the role of K: f(pi/2) = K ...
//! let f_half_pi = functions::f_incomplete(&ctx, std::f64::consts::FRAC_PI_2).unwrap();
//! assert!((f_half_pi - k).abs() < 1e-10);
//! // ... and s6 rises from 0 to 1 over [0, K].
//! let s = functions::s6(&ctx, 0.5 * k).unwrap();
//! assert!(s > 0.0 && s < 1.0);
//! ```
//!
//! All computations are deterministic: fixed node sets, fixed
//! summation order, no randomness, no platform-dependent branching.

pub mod cli;
pub mod error;
pub mod functions;
pub mod grid;
pub mod hypergeom;
pub mod identities;
pub mod modulus;
pub mod quadrature;
pub mod selftest;
pub mod weierstrass;

mod kahan;

pub use error::{Error, Result};
