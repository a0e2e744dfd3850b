//! The two quadrature engines and where each one applies.
//!
//! `integrate_smooth` is adaptive Gauss-Kronrod (G7/K15): exact
//! through degree 13 per panel, with bisection driven by the embedded
//! error estimate. `integrate_singular` is tanh-sinh (double
//! exponential): it never touches the endpoints and tolerates
//! |x - endpoint|^(-1/2) blow-ups.
//!
//! The last section demonstrates the one hard limit of f64 singular
//! quadrature — at an endpoint of magnitude 1 there simply are no
//! representable abscissas within 2^-54, so a 1/sqrt singularity
//! keeps ~1e-8 of its mass out of reach. Placing the singularity at 0
//! (where offsets are exact down to subnormals) removes the problem,
//! which is how every integral in this crate is arranged.
//!
//! Run with: cargo run --example quadrature_engines

use std::f64::consts::PI;

use sig6::quadrature::{integrate_singular, integrate_smooth, QuadratureSpec};

/// (label, integrand, lower limit, upper limit, exact value)
type Case = (&'static str, fn(f64) -> f64, f64, f64, f64);

fn main() -> sig6::Result<()> {
    let spec = QuadratureSpec::default();

    println!("smooth engine (adaptive G7/K15, tol {:.0e}):", spec.absolute_tolerance);
    let cases: [Case; 3] = [
        ("int_0^pi sin x dx = 2", f64::sin, 0.0, PI, 2.0),
        ("int_0^1 x^6 dx = 1/7", |x| x.powi(6), 0.0, 1.0, 1.0 / 7.0),
        ("int_0^2 e^x dx = e^2 - 1", f64::exp, 0.0, 2.0, 2.0f64.exp() - 1.0),
    ];
    for (label, f, a, b, exact) in cases {
        let v = integrate_smooth(f, a, b, spec)?;
        println!("  {label:<28} -> {v:.16}  (error {:.2e})", (v - exact).abs());
        assert!((v - exact).abs() < 1e-12);
    }

    println!("\nsingular engine (tanh-sinh), singularity at 0:");
    let singular_cases: [Case; 3] = [
        ("int_0^1 1/sqrt(x) dx = 2", |x| 1.0 / x.sqrt(), 0.0, 1.0, 2.0),
        ("int_0^1 ln(x) dx = -1", f64::ln, 0.0, 1.0, -1.0),
        (
            "int_0^1 dx/sqrt(x(2-x)) = pi/2",
            |x| 1.0 / (x * (2.0 - x)).sqrt(),
            0.0,
            1.0,
            PI / 2.0,
        ),
    ];
    for (label, f, a, b, exact) in singular_cases {
        let v = integrate_singular(f, a, b, spec)?;
        println!("  {label:<30} -> {v:.16}  (error {:.2e})", (v - exact).abs());
        assert!((v - exact).abs() < 1e-11);
    }

    // The unit-endpoint floor: the same arcsine integral on (-1, 1).
    let loose = QuadratureSpec {
        absolute_tolerance: 1e-7,
        max_refinements: 30,
    };
    let v = integrate_singular(|x| 1.0 / ((1.0 - x) * (1.0 + x)).sqrt(), -1.0, 1.0, loose)?;
    println!("\nunit-endpoint floor demonstration:");
    println!("  int_-1^1 dx/sqrt(1 - x^2) = pi");
    println!("  computed: {v:.16}");
    println!("  error   : {:.3e}", (v - PI).abs());
    println!("  expected floor 2 sqrt(2^-53) ~ {:.3e}", 2.0 * (2.0f64.powi(-53)).sqrt());
    // The cure: split at the symmetry point and substitute so each
    // singular endpoint lands at 0, where offsets are exact.
    println!("  (split at x = 0, shift each half so the singularity sits at 0:)");
    let shifted = 2.0 * integrate_singular(|t| 1.0 / (t * (2.0 - t)).sqrt(), 0.0, 1.0, spec)?;
    println!("  computed: {shifted:.16}  (error {:.3e})", (shifted - PI).abs());
    assert!((shifted - PI).abs() < 1e-12);
    Ok(())
}
