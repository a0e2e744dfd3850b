//! The elliptic-like functions s6 and c6: evaluation, quarter-point
//! values, the Pythagorean identity, and the period structure.
//!
//! s6 = sin(phi(u)) and c6 = cos(phi(u)), where phi inverts the
//! incomplete integral f. Like sn and cn they satisfy
//! s6^2 + c6^2 = 1, flip sign under a shift by 2K, and repeat with
//! period 4K — but the underlying kernel is F(1/6, 5/6; 1/2; .)
//! rather than the classical integrand.
//!
//! Run with: cargo run --example elliptic_like_functions

use sig6::functions::{self, Sig6Context};
use sig6::grid::linspace;
use sig6::modulus::Modulus;

fn main() -> sig6::Result<()> {
    let kk = 0.6;
    let ctx = Sig6Context::new(Modulus::new(kk)?)?;
    let k = ctx.k();
    println!("modulus kk = {kk}, quarter length K = {k:.16}\n");

    println!("{:>10}  {:>23}  {:>23}  {:>23}", "u/K", "phi(u)", "s6(u)", "c6(u)");
    for u in linspace(-k, 2.0 * k, 13) {
        let t = functions::phi(&ctx, u)?;
        let s = functions::s6(&ctx, u)?;
        let c = functions::c6(&ctx, u)?;
        println!("{:>10.4}  {t:>23.16}  {s:>23.16}  {c:>23.16}", u / k);
    }

    // Quarter-point values mirror the sine and cosine table.
    println!("\nquarter points:");
    for (label, u, s_target, c_target) in [
        ("u = 0 ", 0.0, 0.0, 1.0),
        ("u = K ", k, 1.0, 0.0),
        ("u = 2K", 2.0 * k, 0.0, -1.0),
        ("u = 3K", 3.0 * k, -1.0, 0.0),
    ] {
        let s = functions::s6(&ctx, u)?;
        let c = functions::c6(&ctx, u)?;
        println!(
            "  {label}: s6 = {s:+.3e} (target {s_target:+.0}), c6 = {c:+.3e} (target {c_target:+.0})"
        );
        assert!((s - s_target).abs() < 1e-10 && (c - c_target).abs() < 1e-10);
    }

    // Structure checks on a coarse sweep.
    let mut worst_pyth = 0.0f64;
    let mut worst_quasi = 0.0f64;
    let mut worst_period = 0.0f64;
    for u in linspace(-2.0 * k, 2.0 * k, 41) {
        let s = functions::s6(&ctx, u)?;
        let c = functions::c6(&ctx, u)?;
        worst_pyth = worst_pyth.max((s * s + c * c - 1.0).abs());
        worst_quasi = worst_quasi
            .max((functions::s6(&ctx, u + 2.0 * k)? + s).abs())
            .max((functions::c6(&ctx, u + 2.0 * k)? + c).abs());
        worst_period = worst_period
            .max((functions::s6(&ctx, u + 4.0 * k)? - s).abs())
            .max((functions::c6(&ctx, u + 4.0 * k)? - c).abs());
    }
    println!("\nworst |s6^2 + c6^2 - 1|         : {worst_pyth:.3e}");
    println!("worst quasi-period residual (2K): {worst_quasi:.3e}");
    println!("worst period residual (4K)      : {worst_period:.3e}");
    assert!(worst_pyth < 1e-12 && worst_quasi < 1e-10 && worst_period < 1e-10);
    println!("\nPythagorean identity and period structure confirmed.");
    Ok(())
}
