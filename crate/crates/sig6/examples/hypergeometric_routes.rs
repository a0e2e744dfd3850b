//! The hypergeometric layer: the Gauss series against its two
//! shortcuts — the trigonometric closed form of F(1/6, 5/6; 1/2; .)
//! and the arithmetic-geometric mean for F(1/2, 1/2; 1; .) — plus the
//! Wallis integrals that anchor the series coefficients.
//!
//! Run with: cargo run --example hypergeometric_routes

use std::f64::consts::FRAC_PI_2;

use sig6::grid::linspace;
use sig6::hypergeom::{self, HyperParams, SeriesSpec};
use sig6::quadrature::{self, QuadratureSpec};

fn main() -> sig6::Result<()> {
    let spec = SeriesSpec::default();

    // Closed form: F(1/6, 5/6; 1/2; sin^2 psi) = cos(2 psi / 3) / cos(psi).
    println!("F(1/6, 5/6; 1/2; z): series vs closed form");
    println!("{:>6}  {:>22}  {:>22}  {:>9}", "z", "series", "closed", "rel diff");
    let mut worst = 0.0f64;
    for z in linspace(0.0, 0.99, 12) {
        let series = hypergeom::gauss_2f1_series(HyperParams::SIG6_HALF, z, spec)?;
        let closed = hypergeom::f16_56_half(z)?;
        let diff = (series - closed).abs() / closed;
        worst = worst.max(diff);
        println!("{z:>6.3}  {series:>22.16}  {closed:>22.16}  {diff:>9.2e}");
    }
    assert!(worst < 1e-12);
    println!("worst relative difference: {worst:.3e}\n");

    // AGM: F(1/2, 1/2; 1; m) = 1 / agm(1, sqrt(1 - m)).
    println!("F(1/2, 1/2; 1; m): series vs AGM");
    println!("{:>6}  {:>22}  {:>22}  {:>9}", "m", "series", "agm", "rel diff");
    worst = 0.0;
    for m in linspace(0.0, 0.9, 10) {
        let series = hypergeom::gauss_2f1_series(HyperParams::CLASSICAL, m, spec)?;
        let agm = hypergeom::f12_12_one(m)?;
        let diff = (series - agm).abs() / agm;
        worst = worst.max(diff);
        println!("{m:>6.3}  {series:>22.16}  {agm:>22.16}  {diff:>9.2e}");
    }
    assert!(worst < 1e-11);
    println!("worst relative difference: {worst:.3e}\n");

    // Wallis integrals: int_0^{pi/2} sin^{2n} t dt by downward
    // recursion versus direct quadrature.
    println!("Wallis integrals vs quadrature");
    println!("{:>4}  {:>22}  {:>22}  {:>9}", "n", "recursion", "quadrature", "abs diff");
    for n in [0u32, 1, 2, 5, 10, 25] {
        let exact = hypergeom::wallis_integral(n);
        let quad = quadrature::integrate_smooth(
            |t| t.sin().powi(2 * n as i32),
            0.0,
            FRAC_PI_2,
            QuadratureSpec::default(),
        )?;
        println!("{n:>4}  {exact:>22.16}  {quad:>22.16}  {:>9.2e}", (exact - quad).abs());
        assert!((exact - quad).abs() < 1e-12);
    }
    println!("\nall hypergeometric routes agree.");
    Ok(())
}
