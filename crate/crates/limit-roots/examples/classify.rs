//! Build geometric modules from label matrices and classify the
//! bilinear form: signature, irreducibility, and the finite / affine /
//! indefinite trichotomy.
//!
//! ```bash
//! cargo run --example classify
//! ```

use limit_roots::{CoxeterSpec, GeometricModule};

fn describe(name: &str, spec: &CoxeterSpec) {
    let m = GeometricModule::build(spec).unwrap();
    let sig = m.signature();
    let class = if sig.is_positive_definite() {
        "finite"
    } else if sig.is_affine() {
        "affine"
    } else {
        "indefinite"
    };
    println!("{name}");
    println!(
        "  signature      ({}, {}, {})",
        sig.n_positive, sig.n_negative, sig.n_zero
    );
    println!("  class          {class}");
    println!("  irreducible    {}", m.is_irreducible());
    println!("  components     {:?}", m.components());
    println!("  radical ∩ cone trivial: {}", m.radical_cone_trivial());
    if let Some(radical) = sig.radical_basis.first() {
        let image = m.ambient_form() * radical;
        println!("  radical ray residual |B·v| = {:.2e}", image.amax());
    }
    println!();
}

fn main() {
    describe("A2 (labels 3)", &CoxeterSpec::dihedral(3));
    describe("affine A2~ (3,3,3)", &CoxeterSpec::triangle(3, 3, 3));
    describe("hyperbolic (2,3,7)", &CoxeterSpec::triangle(2, 3, 7));
    describe("triangle (5,3,3)", &CoxeterSpec::triangle(5, 3, 3));
    describe(
        "A1 x infinite dihedral (2,2,∞)",
        &CoxeterSpec::triangle(2, 2, 0),
    );
    describe(
        "infinite dihedral with B = -1.5",
        &CoxeterSpec::dihedral_with_b(-1.5),
    );
}
