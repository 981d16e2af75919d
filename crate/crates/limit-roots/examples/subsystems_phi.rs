//! Reflection subsystems and canonical modules: a rank-4 simple system
//! inside a rank-3 group, the B-preserving map φ onto it, parabolic
//! restriction, and the face point that the restricted limit set
//! misses.
//!
//! ```bash
//! cargo run --example subsystems_phi
//! ```

use limit_roots::{
    act_vector, canonical_module, e2_points, parabolic_restriction, reducible_split,
    verify_phi_bijection, CoxeterSpec, GeometricModule, RootTable, TransverseHyperplane, Vector,
    Word,
};
use nalgebra::DVector;

fn main() {
    // Inside (4,4,4) the four roots {α_s, α_u, t(α_s), t(α_u)} form a
    // positively independent simple system of rank 4 in dimension 3.
    let m = GeometricModule::build(&CoxeterSpec::triangle(4, 4, 4)).unwrap();
    let t_of = |v: &Vector| m.reflect_simple(1, v);
    let roots = vec![
        m.simple_root(0).clone(),
        m.simple_root(2).clone(),
        t_of(m.simple_root(0)),
        t_of(m.simple_root(2)),
    ];
    let emb = canonical_module(&m, &roots).unwrap();
    println!("rank-4 simple system in the (4,4,4) module; canonical gram:");
    for i in 0..4 {
        let row: Vec<f64> = (0..4)
            .map(|j| (emb.source().gram()[(i, j)] * 1e6).round() / 1e6)
            .collect();
        println!("  {row:?}");
    }
    let target_table = RootTable::enumerate(&m, 12).unwrap();
    let report = verify_phi_bijection(&emb, 5, &target_table).unwrap();
    println!(
        "phi check to source depth 5: {} roots, {} missing, {} collisions, bilinear error {:.1e}",
        report.checked,
        report.missing.len(),
        report.collisions.len(),
        report.max_bilinear_error
    );

    // Rank-5 cross: restricting away the middle generator leaves two
    // affine dihedral factors with limit points at the edge midpoints,
    // yet the full group accumulates at another point of the same face.
    let spec = CoxeterSpec::new(vec![
        vec![1, 0, 2, 2, 2],
        vec![0, 1, 3, 2, 2],
        vec![2, 3, 1, 3, 2],
        vec![2, 2, 3, 1, 0],
        vec![2, 2, 2, 0, 1],
    ])
    .unwrap();
    let m5 = GeometricModule::build(&spec).unwrap();
    let h5 = TransverseHyperplane::default_cut(&m5);
    let restriction = parabolic_restriction(&m5, &[0, 1, 3, 4]).unwrap();
    println!("\nrank-5 system, restriction to indices [0,1,3,4]:");
    for factor in reducible_split(restriction.source()) {
        let fm = factor.source();
        let ftable = RootTable::enumerate(fm, 4).unwrap();
        let fh = TransverseHyperplane::default_cut(fm);
        for p in e2_points(fm, &fh, &ftable, 4) {
            let lifted = restriction.map(&factor.map(p.coords()));
            let hat = h5.normalize(&lifted).unwrap();
            println!("  restricted limit point -> {:?}", hat.coords().as_slice());
        }
    }
    let block = Word::new(vec![0, 1, 4, 3]);
    let mut v = m5.simple_root(2).clone();
    for _ in 0..4000 {
        v = act_vector(&m5, &block, &v);
    }
    let hat = h5.normalize(&v).unwrap();
    let target = DVector::from_vec(vec![0.25, 0.25, 0.0, 0.25, 0.25]);
    println!(
        "  orbit of gamma after 4000 blocks: {:?}",
        hat.coords()
            .iter()
            .map(|c| (c * 1e6).round() / 1e6)
            .collect::<Vec<_>>()
    );
    println!(
        "  distance to (1/4,1/4,0,1/4,1/4): {:.2e} -- a face limit point outside the restricted limit set",
        (hat.coords() - &target).norm()
    );
}
