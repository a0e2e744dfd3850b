//! The sextic modulus map and the hypergeometric identity it encodes:
//!
//! ```text
//!   F(1/6, 5/6; 1; xi(x))  =  (1 - x + x^2)^(1/4) F(1/2, 1/2; 1; x),
//!   xi(x) = 27 x^2 (1 - x)^2 / (4 (1 - x + x^2)^3).
//! ```
//!
//! The left side is summed as a Gauss series; the right side runs
//! through the arithmetic-geometric mean. The two sides share nothing
//! but f64 arithmetic.
//!
//! Run with: cargo run --example sextic_identity

use sig6::grid::linspace;
use sig6::hypergeom::SeriesSpec;
use sig6::identities;

fn main() -> sig6::Result<()> {
    // The map itself: strictly increasing, symmetric under
    // x -> 1 - x via xi -> 1 - xi, fixed point at 1/2.
    println!("{:>6}  {:>22}  {:>11}", "x", "xi(x)", "symmetry");
    for x in linspace(0.05, 0.95, 10) {
        let pair = identities::map_x_to_xi(x)?;
        let complement = identities::map_x_to_xi(1.0 - x)?;
        let symmetry = (pair.xi + complement.xi - 1.0).abs();
        println!("{x:>6.3}  {:>22.16}  {symmetry:>11.2e}", pair.xi);
    }
    let fixed = identities::map_x_to_xi(0.5)?;
    println!("\nfixed point: xi(1/2) = {} (exactly 1/2: {})", fixed.xi, fixed.xi == 0.5);

    // The identity sweep.
    let grid = linspace(0.02, 0.9, 45);
    let report = identities::verify_sextic_identity(&grid, SeriesSpec::default(), 1e-9)?;
    println!("\nidentity sweep over {} points in [0.02, 0.9]:", report.points.len());
    println!("{:>6}  {:>22}  {:>22}  {:>11}", "x", "series side", "agm side", "residual");
    for point in report.points.iter().step_by(6) {
        println!(
            "{:>6.3}  {:>22.16}  {:>22.16}  {:>11.2e}",
            point.x, point.lhs, point.rhs, point.residual
        );
    }
    println!(
        "\nmax relative residual = {:.3e} (pass at 1e-9: {})",
        report.max_relative_residual, report.pass
    );
    assert!(report.pass);

    // The same identity through the angle parametrization of the
    // modulus: x recovered from kk directly, no sextic solve.
    println!("\nangle parametrization cross-check:");
    for kk in [0.3, 0.6, 0.9] {
        let modulus = sig6::modulus::Modulus::new(kk)?;
        let by_angles = identities::map_via_angles(modulus);
        let direct = identities::map_x_to_xi(by_angles.x)?;
        println!(
            "  kk = {kk}: x = {:.16}, |xi routes differ| = {:.3e}",
            by_angles.x,
            (direct.xi - modulus.xi()).abs()
        );
    }
    Ok(())
}
