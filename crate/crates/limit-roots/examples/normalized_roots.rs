//! Cutting root rays by a transverse hyperplane: the normalization map
//! v ↦ v/f(v), the residual identity q(ρ̂)·|ρ|₁² = 1, and rebasing the
//! same points onto another cut.
//!
//! ```bash
//! cargo run --example normalized_roots
//! ```

use limit_roots::{
    simplex_coordinates, CoxeterSpec, GeometricModule, RootTable, TransverseHyperplane, Vector,
};

fn main() {
    let m = GeometricModule::build(&CoxeterSpec::triangle(2, 3, 7)).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, 10).unwrap();

    let mut worst = 0.0_f64;
    let mut deepest_q = f64::INFINITY;
    for (id, root) in table.iter() {
        let hat = h.normalize_root(root.coords(), id).unwrap();
        let l1 = root.l1();
        worst = worst.max((m.quadratic(hat.coords()) * l1 * l1 - 1.0).abs());
        if root.depth() == table.max_depth() {
            deepest_q = deepest_q.min(m.quadratic(hat.coords()).abs());
        }
    }
    println!("(2,3,7) with {} roots:", table.len());
    println!("  max |q(normalized)·l1² − 1| = {worst:.3e}");
    println!(
        "  min |q| at depth {}: {deepest_q:.3e} (sinking into the cone)",
        table.max_depth()
    );

    // Barycentric coordinates stay inside the simplex.
    let sample = table.at_depth(7)[0];
    let hat = h
        .normalize_root(table.root(sample).coords(), sample)
        .unwrap();
    let bary = simplex_coordinates(&m, &h, &hat);
    println!(
        "  a depth-7 root in barycentric coordinates: {:?}",
        bary.as_slice()
    );

    // Rebase onto a skewed cut and back.
    let skewed =
        TransverseHyperplane::from_functional(Vector::from_vec(vec![1.5, 0.8, 2.0]), &m).unwrap();
    let there = skewed.rebase(&hat).unwrap();
    let back = h.rebase(&there).unwrap();
    println!(
        "  rebase round trip error: {:.3e} (skewed level f'(p) = {:.6})",
        (back.coords() - hat.coords()).amax(),
        skewed.eval(there.coords())
    );
}
