//! Static SVG rendering of cut-hyperplane scenes.
//!
//! Rank 2 draws the segment [α̂, β̂] with its points; rank 3 embeds
//! barycentric coordinates in a fixed equilateral triangle; rank 4 uses
//! a regular tetrahedron under an orthographic camera with depth-sorted
//! points. Output is deterministic byte for byte for fixed inputs.

use std::fmt::Write as _;

use crate::enumerate::RootTable;
use crate::error::{Error, Result};
use crate::limits::LimitPoint;
use crate::module::{GeometricModule, Vector};
use crate::normalize::{simplex_coordinates, NormalizedPoint, TransverseHyperplane};

/// Styling class of a limit point in a scene.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitStyle {
    E2,
    E2Circ,
    F0,
}

impl LimitStyle {
    fn color(self) -> &'static str {
        match self {
            LimitStyle::E2 => "#e0a800",
            LimitStyle::E2Circ => "#e06000",
            LimitStyle::F0 => "#9c27b0",
        }
    }
}

/// Figure-quality point data in barycentric coordinates over Δ̂.
#[derive(Debug, Clone)]
pub struct Scene {
    rank: usize,
    roots: Vec<(Vector, u32)>,
    limit_points: Vec<(Vector, LimitStyle)>,
    conic: Vec<Vec<Vector>>,
    lines: Vec<(Vector, Vector)>,
}

fn check_bary(bary: &Vector) {
    let total: f64 = bary.iter().sum();
    assert!(
        (total - 1.0).abs() <= 1e-9,
        "barycentric coordinates must sum to 1 (got {total})"
    );
}

impl Scene {
    pub fn new(m: &GeometricModule) -> Self {
        Scene {
            rank: m.rank(),
            roots: Vec::new(),
            limit_points: Vec::new(),
            conic: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[(Vector, u32)] {
        &self.roots
    }

    pub fn limit_points(&self) -> &[(Vector, LimitStyle)] {
        &self.limit_points
    }

    /// Adds every stored root as a normalized dot.
    pub fn add_roots(
        &mut self,
        m: &GeometricModule,
        h: &TransverseHyperplane,
        table: &RootTable,
    ) -> Result<()> {
        for (id, root) in table.iter() {
            let p = h.normalize_root(root.coords(), id)?;
            let bary = simplex_coordinates(m, h, &p);
            check_bary(&bary);
            self.roots.push((bary, root.depth()));
        }
        Ok(())
    }

    pub fn add_limit_points(
        &mut self,
        m: &GeometricModule,
        h: &TransverseHyperplane,
        points: &[LimitPoint],
        style: LimitStyle,
    ) {
        for p in points {
            let np = NormalizedPoint::with_parts(p.coords().clone(), None);
            let bary = simplex_coordinates(m, h, &np);
            check_bary(&bary);
            self.limit_points.push((bary, style));
        }
    }

    /// Adds the quadric slice as polylines, broken where consecutive
    /// samples jump (hyperbola branches, simplex exits).
    pub fn add_conic(&mut self, m: &GeometricModule, h: &TransverseHyperplane, samples: &[Vector]) {
        let mut run: Vec<Vector> = Vec::new();
        let mut last: Option<Vector> = None;
        for s in samples {
            let np = NormalizedPoint::with_parts(s.clone(), None);
            let bary = simplex_coordinates(m, h, &np);
            if let Some(prev) = &last {
                if (&bary - prev).norm() > 0.2 {
                    if run.len() >= 2 {
                        self.conic.push(std::mem::take(&mut run));
                    } else {
                        run.clear();
                    }
                }
            }
            last = Some(bary.clone());
            run.push(bary);
        }
        if run.len() >= 2 {
            self.conic.push(run);
        }
    }

    /// Annotation segment between two cut points.
    pub fn add_line(
        &mut self,
        m: &GeometricModule,
        h: &TransverseHyperplane,
        a: &NormalizedPoint,
        b: &NormalizedPoint,
    ) {
        let ba = simplex_coordinates(m, h, a);
        let bb = simplex_coordinates(m, h, b);
        check_bary(&ba);
        check_bary(&bb);
        self.lines.push((ba, bb));
    }
}

/// Camera and size options.
#[derive(Debug, Clone)]
pub struct SvgOptions {
    pub width: f64,
    /// Degrees; rank-4 camera only.
    pub azimuth: f64,
    /// Degrees; rank-4 camera only.
    pub elevation: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 720.0,
            azimuth: 35.0,
            elevation: 22.0,
        }
    }
}

fn fmt(x: f64) -> String {
    format!("{:.4}", x)
}

/// Renders a scene to an SVG 1.1 document. Rank 2, 3 and 4 only.
pub fn render_svg(scene: &Scene, options: &SvgOptions) -> Result<String> {
    let verts: Vec<[f64; 3]> = match scene.rank {
        2 => vec![[0.0, 0.5, 0.0], [1.0, 0.5, 0.0]],
        3 => vec![
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.5, 3.0_f64.sqrt() / 2.0, 0.0],
        ],
        4 => {
            let s = 1.0 / 3.0_f64.sqrt();
            let (az, el) = (options.azimuth.to_radians(), options.elevation.to_radians());
            let raw = [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]];
            raw.iter()
                .map(|v| {
                    // Rz(az) then Rx(el), orthographic onto (x, y).
                    let x1 = v[0] * az.cos() - v[1] * az.sin();
                    let y1 = v[0] * az.sin() + v[1] * az.cos();
                    let z1 = v[2];
                    let y2 = y1 * el.cos() - z1 * el.sin();
                    let z2 = y1 * el.sin() + z1 * el.cos();
                    [0.5 + 0.5 * x1, 0.5 + 0.5 * y2, z2]
                })
                .collect()
        }
        rank => return Err(Error::UnsupportedRank { rank }),
    };

    let width = options.width;
    let height = width * 0.9;
    let margin = 0.08 * width;
    let place = |bary: &Vector| -> [f64; 3] {
        let mut p = [0.0; 3];
        for (w, v) in bary.iter().zip(&verts) {
            p[0] += w * v[0];
            p[1] += w * v[1];
            p[2] += w * v[2];
        }
        [
            margin + p[0] * (width - 2.0 * margin),
            height - margin - p[1] * (height - 2.0 * margin),
            p[2],
        ]
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        fmt(width),
        fmt(height),
        fmt(width),
        fmt(height)
    );
    let _ = writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");

    // Simplex frame.
    let frame_edges: Vec<(usize, usize)> = match scene.rank {
        2 => vec![(0, 1)],
        3 => vec![(0, 1), (1, 2), (2, 0)],
        _ => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    };
    for (i, j) in frame_edges {
        let unit_i = Vector::from_fn(scene.rank, |k, _| if k == i { 1.0 } else { 0.0 });
        let unit_j = Vector::from_fn(scene.rank, |k, _| if k == j { 1.0 } else { 0.0 });
        let a = place(&unit_i);
        let b = place(&unit_j);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#2a7f3f\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"/>",
            fmt(a[0]),
            fmt(a[1]),
            fmt(b[0]),
            fmt(b[1])
        );
    }

    for (a, b) in &scene.lines {
        let pa = place(a);
        let pb = place(b);
        let _ = writeln!(
            svg,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888888\" stroke-width=\"0.8\" stroke-dasharray=\"3,3\"/>",
            fmt(pa[0]),
            fmt(pa[1]),
            fmt(pb[0]),
            fmt(pb[1])
        );
    }

    for polyline in &scene.conic {
        let mut path = String::new();
        for (k, bary) in polyline.iter().enumerate() {
            let p = place(bary);
            let _ = write!(
                path,
                "{}{} {}",
                if k == 0 { "M" } else { " L" },
                fmt(p[0]),
                fmt(p[1])
            );
        }
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1.5\"/>",
            path
        );
    }

    // Points, painter-ordered by camera depth for rank 4.
    let mut dots: Vec<([f64; 3], &'static str, f64)> = Vec::new();
    for (bary, depth) in &scene.roots {
        let radius = (4.0 - 0.18 * *depth as f64).max(1.4);
        dots.push((place(bary), "#2244cc", radius));
    }
    for (bary, style) in &scene.limit_points {
        dots.push((place(bary), style.color(), 2.6));
    }
    dots.sort_by(|a, b| a.0[2].partial_cmp(&b.0[2]).unwrap());
    for (p, color, radius) in dots {
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" fill-opacity=\"0.85\"/>",
            fmt(p[0]),
            fmt(p[1]),
            fmt(radius),
            color
        );
    }

    // Simplex vertices on top.
    for i in 0..scene.rank {
        let unit = Vector::from_fn(scene.rank, |k, _| if k == i { 1.0 } else { 0.0 });
        let p = place(&unit);
        let _ = writeln!(
            svg,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4.5\" fill=\"black\"/>",
            fmt(p[0]),
            fmt(p[1])
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::RootTable;
    use crate::limits::{conic_sample, e2_points, quadric_polyline_samples};
    use crate::spec::CoxeterSpec;

    fn scene_for(spec: CoxeterSpec, depth: u32) -> (Scene, usize) {
        let m = GeometricModule::build(&spec).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let table = RootTable::enumerate(&m, depth).unwrap();
        let mut scene = Scene::new(&m);
        scene.add_roots(&m, &h, &table).unwrap();
        if let Ok(samples) = quadric_polyline_samples(&m, &h, 360) {
            scene.add_conic(&m, &h, &samples);
        }
        let limits = e2_points(&m, &h, &table, depth.min(4));
        scene.add_limit_points(&m, &h, &limits, LimitStyle::E2);
        (scene, table.len())
    }

    #[test]
    fn svg_is_deterministic_and_complete() {
        let (scene, n_roots) = scene_for(CoxeterSpec::triangle(5, 3, 3), 8);
        assert_eq!(scene.roots().len(), n_roots);
        let a = render_svg(&scene, &SvgOptions::default()).unwrap();
        let b = render_svg(&scene, &SvgOptions::default()).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert_eq!(
            a.matches("<circle").count(),
            n_roots + scene.limit_points().len() + 3
        );
    }

    #[test]
    fn rank2_and_rank4_render() {
        let (scene2, _) = scene_for(CoxeterSpec::dihedral(0), 6);
        assert!(render_svg(&scene2, &SvgOptions::default()).is_ok());

        let spec4 = CoxeterSpec::new(vec![
            vec![1, 3, 3, 4],
            vec![3, 1, 3, 4],
            vec![3, 3, 1, 4],
            vec![4, 4, 4, 1],
        ])
        .unwrap();
        let (scene4, _) = scene_for(spec4, 5);
        let svg = render_svg(&scene4, &SvgOptions::default()).unwrap();
        assert!(svg.contains("<circle"));
    }

    #[test]
    fn rank5_is_unsupported() {
        let labels = (0..5usize)
            .map(|i| (0..5).map(|j| if i == j { 1 } else { 3 }).collect())
            .collect();
        let m = GeometricModule::build(&CoxeterSpec::new(labels).unwrap()).unwrap();
        let scene = Scene::new(&m);
        let err = render_svg(&scene, &SvgOptions::default()).unwrap_err();
        assert_eq!(err, Error::UnsupportedRank { rank: 5 });
    }

    #[test]
    fn affine_scene_marks_the_radical_point() {
        let m = GeometricModule::build(&CoxeterSpec::triangle(3, 3, 3)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let mut scene = Scene::new(&m);
        let q = conic_sample(&m, &h, 8).unwrap();
        scene.add_limit_points(&m, &h, &q, LimitStyle::E2);
        assert_eq!(scene.limit_points().len(), 1);
    }
}
