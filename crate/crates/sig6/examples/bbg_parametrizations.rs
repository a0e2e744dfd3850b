//! Two rational parametrizations of the sextic identity: closed-form
//! families of (x, xi) pairs on which the identity can be verified
//! without solving the sextic.
//!
//! Theorem form:    x = p(2 + p)/(1 + 2p) ... encoded via
//!                  w = 1 + p + p^2,  xi = 27 p^2 (1 + p)^2 / (4 w^3),
//! Corollary form:  the complementary family with
//!                  xi = (1 - p)^2 (1 + 2p)^2 (2 + p)^2 / (4 w^3).
//!
//! At p = 1/2 both families hit exact rationals — (5/8, 243/343) and
//! (3/8, 100/343) — which this example checks bit-for-bit. The two
//! families are complementary: x + x' = 1 and xi + xi' = 1 at every p.
//!
//! Run with: cargo run --example bbg_parametrizations

use sig6::grid::linspace;
use sig6::hypergeom::SeriesSpec;
use sig6::identities::{self, BbgParametrization};

fn main() -> sig6::Result<()> {
    // Exact anchors at p = 1/2.
    let thm = identities::bbg_theorem_point(0.5)?;
    let cor = identities::bbg_corollary_point(0.5)?;
    println!("p = 1/2 anchors:");
    println!(
        "  theorem  : x = {} (= 5/8: {}), xi = {} (= 243/343: {})",
        thm.x,
        thm.x == 0.625,
        thm.xi,
        thm.xi == 243.0 / 343.0
    );
    println!(
        "  corollary: x = {} (= 3/8: {}), xi = {} (= 100/343: {})",
        cor.x,
        cor.x == 0.375,
        cor.xi,
        cor.xi == 100.0 / 343.0
    );
    assert!(thm.x == 0.625 && thm.xi == 243.0 / 343.0);
    assert!(cor.x == 0.375 && cor.xi == 100.0 / 343.0);

    // Complementarity along the parameter line.
    let mut worst = 0.0f64;
    for p in linspace(0.02, 0.98, 49) {
        let a = identities::bbg_theorem_point(p)?;
        let b = identities::bbg_corollary_point(p)?;
        worst = worst
            .max((a.x + b.x - 1.0).abs())
            .max((a.xi + b.xi - 1.0).abs());
    }
    println!("\ncomplementarity: worst |x + x' - 1|, |xi + xi' - 1| = {worst:.3e}");
    assert!(worst < 1e-13);

    // Identity verification on both families.
    let grid = linspace(0.05, 0.95, 19);
    for which in [BbgParametrization::Theorem, BbgParametrization::Corollary] {
        let report = identities::verify_bbg(&grid, which, SeriesSpec::default(), 1e-9)?;
        println!(
            "\n{which:?} family over {} points: max residual {:.3e}, pass: {}",
            report.points.len(),
            report.max_relative_residual,
            report.pass
        );
        println!("{:>6}  {:>20}  {:>20}  {:>11}", "p", "x(p)", "xi(p)", "residual");
        for (p, point) in grid.iter().zip(report.points.iter()).step_by(4) {
            println!(
                "{p:>6.3}  {:>20.16}  {:>20.16}  {:>11.2e}",
                point.x, point.xi, point.residual
            );
        }
        assert!(report.pass);
    }
    println!("\nboth rational families verify the identity at 1e-9.");
    Ok(())
}
