//! The dihedral limit points through simple roots (E₂°) densify toward
//! the full limit set: the directed Hausdorff distance from deep
//! normalized roots to E₂° shrinks as the pair depth grows.
//!
//! ```bash
//! cargo run --release --example density_trend
//! ```

use limit_roots::{
    directed_hausdorff, e2_circ_points, CoxeterSpec, GeometricModule, RootTable,
    TransverseHyperplane, Vector,
};

fn main() {
    let m = GeometricModule::build(&CoxeterSpec::triangle(4, 4, 4)).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, 12).unwrap();

    let deep: Vec<Vector> = table
        .iter()
        .filter(|(_, r)| r.depth() >= 10)
        .map(|(id, r)| h.normalize_root(r.coords(), id).unwrap().coords().clone())
        .collect();
    println!(
        "(4,4,4): {} normalized roots of depth 10..12 as the probe set",
        deep.len()
    );

    let mut previous = f64::INFINITY;
    for depth in [4u32, 6, 8, 10] {
        let shallow = RootTable::enumerate(&m, depth).unwrap();
        let circle: Vec<Vector> = e2_circ_points(&m, &h, &shallow)
            .into_iter()
            .map(|p| p.coords().clone())
            .collect();
        let distance = directed_hausdorff(&deep, &circle).unwrap();
        println!(
            "  pair depth {depth:>2}: |E2-circle| = {:>5}  directed Hausdorff = {:.6}{}",
            circle.len(),
            distance,
            if distance <= previous { "" } else { "  (!)" }
        );
        previous = distance;
    }
}
