//! The projective action of the group on cut points: limit points stay
//! on the quadric slice, s_ρ fixes exactly the B-orthogonal points, and
//! images stay on the lines of their defining root pairs.
//!
//! ```bash
//! cargo run --example group_action
//! ```

use limit_roots::{
    act, act_vector, e2_points, CoxeterSpec, GeometricModule, Provenance, RootTable,
    TransverseHyperplane, Word,
};

fn main() {
    let m = GeometricModule::build(&CoxeterSpec::triangle(4, 4, 4)).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, 6).unwrap();
    let points = e2_points(&m, &h, &table, 4);
    println!(
        "(4,4,4): {} limit points from pairs of depth <= 4",
        points.len()
    );

    let x = &points[0];
    let (r1, r2) = match x.provenance() {
        Provenance::RootPair(i, j) => (*i, *j),
        _ => unreachable!(),
    };
    println!(
        "acting on {:?} (from roots #{} and #{}):",
        x.coords().as_slice(),
        r1.0,
        r2.0
    );
    for letters in [vec![0], vec![1], vec![2], vec![0, 1], vec![2, 1, 0]] {
        let word = Word::new(letters.clone());
        let image = act(&m, &h, &word, &x.as_normalized()).unwrap();
        // The image lies on the line through the images of the pair.
        let a = h
            .normalize(&act_vector(&m, &word, table.root(r1).coords()))
            .unwrap();
        let b = h
            .normalize(&act_vector(&m, &word, table.root(r2).coords()))
            .unwrap();
        let u = b.coords() - a.coords();
        let v = image.coords() - a.coords();
        let off_line = (&u * (v.dot(&u) / u.dot(&u)) - v).norm();
        println!(
            "  s_{letters:?} . x = {:?}  |q| = {:.1e}  off-line {:.1e}",
            image
                .coords()
                .iter()
                .map(|c| (c * 1e6).round() / 1e6)
                .collect::<Vec<_>>(),
            m.quadratic(image.coords()).abs(),
            off_line
        );
    }

    // Fixed exactly when the pairing vanishes.
    let fixed_dihedral = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
    let hd = TransverseHyperplane::default_cut(&fixed_dihedral);
    let mid = hd
        .normalize(&nalgebra::DVector::from_vec(vec![0.5, 0.5]))
        .unwrap();
    let image = act(&fixed_dihedral, &hd, &Word::new(vec![0]), &mid).unwrap();
    println!(
        "affine dihedral midpoint is fixed by s_alpha: moved {:.1e} (B(alpha, x) = {})",
        (image.coords() - mid.coords()).amax(),
        fixed_dihedral.bilinear(fixed_dihedral.simple_root(0), mid.coords())
    );
}
