//! The cubic pencil behind the theory: invariants g2 = 3,
//! g3 = 1 - 2 kk^2, its real roots, and the real half-period omega
//! computed two independent ways.
//!
//! The roots have the closed trigonometric form
//!
//! ```text
//!   e1 = sin(beta + pi/3),  e2 = sin(beta),  e3 = -sin(beta + 2pi/3),
//! ```
//!
//! with kk = sin(3 beta) (wrapping beta = alpha/3), and the
//! half-period satisfies K = sqrt(3/2) omega — which turns the
//! arithmetic-geometric mean into a fifth route to K.
//!
//! Run with: cargo run --example weierstrass_half_period

use sig6::functions;
use sig6::grid::linspace;
use sig6::hypergeom::SeriesSpec;
use sig6::modulus::Modulus;
use sig6::quadrature::QuadratureSpec;
use sig6::weierstrass;

fn main() -> sig6::Result<()> {
    // The showcase point alpha = pi/3, i.e. kk = sin(pi/3) = sqrt(3)/2,
    // where everything has closed forms: g3 = -1/2, delta = 81/4.
    let kk = (std::f64::consts::FRAC_PI_3).sin();
    let modulus = Modulus::new(kk)?;
    let data = weierstrass::build(modulus);
    println!("alpha = pi/3 (kk = {kk:.16}):");
    println!("  g2 = {}, g3 = {:.16}, delta = {:.16}", data.g2, data.g3, data.delta);
    println!("  e1 = {:.18}", data.e1);
    println!("  e2 = {:.18}", data.e2);
    println!("  e3 = {:.18}", data.e3);
    println!("  omega (AGM) = {:.16}", data.omega);

    let by_integral = weierstrass::half_period_integral(&data, QuadratureSpec::default())?;
    println!("  omega (int) = {by_integral:.16}");
    println!("  route difference = {:.3e}", (by_integral - data.omega).abs());

    let m = weierstrass::classical_m(&data);
    println!("  classical modulus m = {m:.18}");

    // Structural residuals across a modulus sweep.
    println!(
        "\n{:>5}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}",
        "kk", "sum", "pairs", "product", "midpoint", "K vs omega"
    );
    let mut worst = 0.0f64;
    for kk in linspace(0.1, 0.9, 9) {
        let modulus = Modulus::new(kk)?;
        let d = weierstrass::build(modulus);
        assert!(d.e1 > d.e2 && d.e2 > d.e3 && d.delta > 0.0);
        let sum = (d.e1 + d.e2 + d.e3).abs();
        let pairs = (d.e1 * d.e2 + d.e2 * d.e3 + d.e3 * d.e1 + 0.75).abs();
        let product = (d.e1 * d.e2 * d.e3 - d.g3 / 4.0).abs();
        let midpoint = weierstrass::midpoint_relation_check(&d);
        let k_series = functions::complete_k_series(modulus, SeriesSpec::default())?;
        let k_omega = (1.5f64.sqrt() * d.omega - k_series).abs() / k_series;
        worst = worst.max(k_omega);
        println!(
            "{kk:>5.2}  {sum:>10.2e}  {pairs:>10.2e}  {product:>10.2e}  {midpoint:>10.2e}  {k_omega:>10.2e}"
        );
    }
    assert!(worst < 1e-9);
    println!("\nK = sqrt(3/2) omega holds to {worst:.3e} at worst.");
    Ok(())
}
