//! Renders the classic scenes to SVG: the dihedral segment, the
//! inscribed ellipse of a classical rank-3 group hugged by normalized
//! roots, a conic crossing the triangle on mixed infinite labels, and a
//! rank-4 tetrahedron projection.
//!
//! ```bash
//! cargo run --release --example render_figures -- out/
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use limit_roots::{
    e2_circ_points, e2_points, quadric_polyline_samples, BOverride, CoxeterSpec, GeometricModule,
    LimitStyle, RootTable, Scene, SvgOptions, TransverseHyperplane,
};

fn figure(
    dir: &Path,
    name: &str,
    spec: &CoxeterSpec,
    depth: u32,
    pair_depth: u32,
    options: &SvgOptions,
) {
    let m = GeometricModule::build(spec).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, depth).unwrap();
    let mut scene = Scene::new(&m);
    scene.add_roots(&m, &h, &table).unwrap();
    if let Ok(samples) = quadric_polyline_samples(&m, &h, 720) {
        scene.add_conic(&m, &h, &samples);
    }
    if m.rank() <= 3 {
        scene.add_limit_points(
            &m,
            &h,
            &e2_points(&m, &h, &table, pair_depth),
            LimitStyle::E2,
        );
    } else {
        scene.add_limit_points(&m, &h, &e2_circ_points(&m, &h, &table), LimitStyle::E2Circ);
    }
    let svg = limit_roots::render_svg(&scene, options).unwrap();
    let path = dir.join(name);
    fs::write(&path, svg).unwrap();
    println!(
        "{} <- {} roots, {} limit points",
        path.display(),
        scene.roots().len(),
        scene.limit_points().len()
    );
}

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("figures"));
    fs::create_dir_all(&dir).unwrap();
    let options = SvgOptions::default();

    figure(
        &dir,
        "dihedral_affine.svg",
        &CoxeterSpec::dihedral(0),
        10,
        10,
        &options,
    );
    figure(
        &dir,
        "g533_ellipse.svg",
        &CoxeterSpec::triangle(5, 3, 3),
        12,
        6,
        &options,
    );

    let mixed = CoxeterSpec::with_overrides(
        vec![vec![1, 0, 0], vec![0, 1, 4], vec![0, 4, 1]],
        vec![BOverride {
            i: 0,
            j: 2,
            value: -1.5,
        }],
    )
    .unwrap();
    figure(&dir, "mixed_infinite.svg", &mixed, 8, 6, &options);

    let rank4 = CoxeterSpec::new(vec![
        vec![1, 3, 3, 4],
        vec![3, 1, 3, 4],
        vec![3, 3, 1, 4],
        vec![4, 4, 4, 1],
    ])
    .unwrap();
    figure(
        &dir,
        "rank4_tetrahedron.svg",
        &rank4,
        8,
        5,
        &SvgOptions {
            azimuth: 40.0,
            elevation: 18.0,
            ..SvgOptions::default()
        },
    );
}
