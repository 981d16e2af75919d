//! Experimental sampler of the self-similar skeleton of the limit set:
//! subsets Δ_I whose quadric slice stays inside their face are
//! "generating"; the group orbit of those slices traces the fractal
//! pattern seen in the pictures. No equality with the limit set is
//! asserted.
//!
//! ```bash
//! cargo run --example fractal_skeleton
//! ```

use limit_roots::{
    f0_sample, generating_subsets, BOverride, CoxeterSpec, GeometricModule, TransverseHyperplane,
};

fn survey(name: &str, spec: &CoxeterSpec, orbit_length: usize) {
    let m = GeometricModule::build(spec).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let generating = generating_subsets(&m, &h);
    println!("{name}");
    println!("  generating subsets: {generating:?}");
    for len in [0, orbit_length] {
        let samples = f0_sample(&m, &h, len);
        let worst = samples
            .iter()
            .map(|p| p.q_residual(&m))
            .fold(0.0_f64, f64::max);
        println!(
            "  orbit length {len}: {} skeleton points, max |q| = {worst:.1e}",
            samples.len()
        );
    }
    println!();
}

fn main() {
    // Classical rank 3: the whole simplex is generating and the
    // skeleton fills the inscribed ellipse.
    survey("(4,4,4) classical", &CoxeterSpec::triangle(4, 4, 4), 2);

    // Mixed infinite labels ∞, ∞(−1.5), 4: the full set is NOT
    // generating (the conic leaves the triangle); the two infinite
    // edges contribute the seed points.
    let mixed = CoxeterSpec::with_overrides(
        vec![vec![1, 0, 0], vec![0, 1, 4], vec![0, 4, 1]],
        vec![BOverride {
            i: 0,
            j: 2,
            value: -1.5,
        }],
    )
    .unwrap();
    survey("labels ∞, ∞(−1.5), 4", &mixed, 3);

    // Rank 4 with every label infinite: seeds on all six edges, orbit
    // images sketch the gasket on the quadric.
    let rank4 = CoxeterSpec::new(vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
    ])
    .unwrap();
    survey("rank-4 all-infinite", &rank4, 2);
}
