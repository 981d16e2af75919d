//! Rank-2 limit behaviour: the affine dihedral accumulates at the
//! single midpoint, a non-affine representation at two points given by
//! the isotropic directions, and dihedral reflection subgroups of a
//! rank-3 group classify by |B(ρ₁, ρ₂)|.
//!
//! ```bash
//! cargo run --example dihedral_limits
//! ```

use limit_roots::{
    dihedral_subsystem, e2_points, visible, CoxeterSpec, GeometricModule, RootId, RootTable,
    TransverseHyperplane,
};
use nalgebra::DVector;

fn main() {
    // Affine: B(α, β) = −1 and a unique limit point.
    let m = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, 10).unwrap();
    let limits = e2_points(&m, &h, &table, 10);
    println!(
        "affine dihedral: E2 = {:?}",
        limits
            .iter()
            .map(|p| p.coords().as_slice().to_vec())
            .collect::<Vec<_>>()
    );

    // Non-affine: two limit points at c±/(c±+1), c± = −B ± √(B²−1).
    let m2 = GeometricModule::build(&CoxeterSpec::dihedral_with_b(-1.01)).unwrap();
    let h2 = TransverseHyperplane::default_cut(&m2);
    let table2 = RootTable::enumerate(&m2, 10).unwrap();
    let mut limits2 = e2_points(&m2, &h2, &table2, 10);
    limits2.sort_by(|a, b| b.coords()[0].partial_cmp(&a.coords()[0]).unwrap());
    let s = 0.0201_f64.sqrt();
    println!("B = -1.01:");
    for (p, c) in limits2.iter().zip([1.01 + s, 1.01 - s]) {
        println!(
            "  limit alpha-coordinate {:.9} (closed form {:.9}), visible from alpha: {}",
            p.coords()[0],
            c / (c + 1.0),
            visible(&m2, m2.simple_root(0), p)
        );
    }

    // The golden dihedral subsystem of (5,3,3): s_γ and s_ρ for
    // ρ = φ(α+β) generate an infinite non-affine pair with B = −φ.
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let m3 = GeometricModule::build(&CoxeterSpec::triangle(5, 3, 3)).unwrap();
    let h3 = TransverseHyperplane::default_cut(&m3);
    let table3 = RootTable::enumerate(&m3, 6).unwrap();
    let rho = table3
        .find(&DVector::from_vec(vec![golden, golden, 0.0]))
        .unwrap();
    let info = dihedral_subsystem(&m3, &h3, &table3, RootId(2), rho).unwrap();
    println!("(5,3,3) pair (gamma, golden*(alpha+beta)):");
    println!("  B = {:.12} -> {:?}", info.b_value, info.kind);
    println!("  canonical simples: {:?}", info.canonical_simples);
    for p in &info.limit_points {
        println!(
            "  limit point {:?} with |q| = {:.2e}",
            p.coords().as_slice(),
            p.q_residual(&m3)
        );
    }
}
