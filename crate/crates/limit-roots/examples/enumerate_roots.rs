//! Depth-stratified enumeration of positive roots, the empirical κ/λ
//! constants, and the depth–norm audit ‖ρ‖² ≥ 1 + λ(dp(ρ) − 1).
//!
//! ```bash
//! cargo run --example enumerate_roots
//! ```

use limit_roots::{audit_depth_norm, kappa_lambda, CoxeterSpec, GeometricModule, RootTable};

fn main() {
    let spec = CoxeterSpec::triangle(5, 3, 3);
    let m = GeometricModule::build(&spec).unwrap();
    let table = RootTable::enumerate(&m, 12).unwrap();

    println!("(5,3,3) roots to depth 12: {} total", table.len());
    print!("level counts:");
    for depth in 1..=table.max_depth() {
        print!(" {}", table.at_depth(depth).len());
    }
    println!();

    let report = kappa_lambda(&m, &table).unwrap();
    println!(
        "kappa = {:.6}, lambda = 4*kappa^2 = {:.6}",
        report.kappa, report.lambda
    );
    println!(
        "pairing values below 1: {:?}",
        report
            .sampled_values
            .iter()
            .map(|v| (v * 1e6).round() / 1e6)
            .collect::<Vec<_>>()
    );

    let violations = audit_depth_norm(&m, &table, &report);
    println!("depth-norm violations: {}", violations.len());

    // A witness word regenerates its root.
    let deepest = *table.at_depth(table.max_depth()).first().unwrap();
    let (word, base) = table.witness_word(deepest);
    println!(
        "sample depth-{} root {:?} = s_{:?} applied to simple #{base}",
        table.root(deepest).depth(),
        table.root(deepest).coords().as_slice(),
        word
    );

    // The affine dihedral meets the bound with equality at 2α+β.
    let dihedral = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
    let dtable = RootTable::enumerate(&dihedral, 8).unwrap();
    let dreport = kappa_lambda(&dihedral, &dtable).unwrap();
    let rho1 = dtable
        .find(&nalgebra::DVector::from_vec(vec![2.0, 1.0]))
        .unwrap();
    let norm_sq = dtable.root(rho1).coords().norm_squared();
    println!(
        "affine dihedral: |2a+b|^2 = {norm_sq} vs bound {} (tight)",
        1.0 + dreport.lambda
    );
}
