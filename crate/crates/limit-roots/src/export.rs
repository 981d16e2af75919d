//! CSV and JSON export of enumerated roots and limit points.

use std::io::{self, Write};

use serde_json::json;

use crate::enumerate::RootTable;
use crate::limits::{LimitPoint, Provenance};
use crate::module::GeometricModule;
use crate::normalize::{simplex_coordinates, TransverseHyperplane};

/// One row per root: depth, the n coordinates over Δ, the L¹ weight,
/// and q of the normalized root (its distance proxy to the isotropic
/// cone).
pub fn write_roots_csv<W: Write>(
    out: &mut W,
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
) -> io::Result<()> {
    write!(out, "depth")?;
    for s in 0..m.rank() {
        write!(out, ",c{s}")?;
    }
    writeln!(out, ",l1,q_normalized")?;
    for (id, root) in table.iter() {
        write!(out, "{}", root.depth())?;
        for c in root.coords().iter() {
            write!(out, ",{c}")?;
        }
        let l1 = root.l1();
        let q_hat = h
            .normalize_root(root.coords(), id)
            .map(|p| m.quadratic(p.coords()))
            .unwrap_or(f64::NAN);
        writeln!(out, ",{l1},{q_hat}")?;
    }
    Ok(())
}

/// One row per normalized root: source id, barycentric coordinates,
/// |q| residual.
pub fn write_normalized_csv<W: Write>(
    out: &mut W,
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
) -> io::Result<()> {
    write!(out, "source")?;
    for s in 0..m.rank() {
        write!(out, ",b{s}")?;
    }
    writeln!(out, ",q_abs")?;
    for (id, root) in table.iter() {
        let p = match h.normalize_root(root.coords(), id) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let bary = simplex_coordinates(m, h, &p);
        write!(out, "{}", id.0)?;
        for b in bary.iter() {
            write!(out, ",{b}")?;
        }
        writeln!(out, ",{}", m.quadratic(p.coords()).abs())?;
    }
    Ok(())
}

/// One row per limit point: coordinates and |q| residual.
pub fn write_limit_csv<W: Write>(
    out: &mut W,
    m: &GeometricModule,
    points: &[LimitPoint],
) -> io::Result<()> {
    for s in 0..m.dim() {
        write!(out, "{}x{s}", if s == 0 { "" } else { "," })?;
    }
    writeln!(out, ",q_abs")?;
    for p in points {
        for (s, c) in p.coords().iter().enumerate() {
            write!(out, "{}{c}", if s == 0 { "" } else { "," })?;
        }
        writeln!(out, ",{}", p.q_residual(m))?;
    }
    Ok(())
}

fn provenance_json(p: &Provenance) -> serde_json::Value {
    match p {
        Provenance::RootPair(i, j) => json!({"type": "root_pair", "ids": [i.0, j.0]}),
        Provenance::Acted { word, base } => json!({
            "type": "acted",
            "word": word,
            "base": provenance_json(base.provenance()),
        }),
        Provenance::ConicSample => json!({"type": "conic_sample"}),
    }
}

/// JSON array of limit points with provenance and q residuals.
pub fn limit_points_json(m: &GeometricModule, points: &[LimitPoint]) -> serde_json::Value {
    serde_json::Value::Array(
        points
            .iter()
            .map(|p| {
                json!({
                    "coords": p.coords().iter().copied().collect::<Vec<f64>>(),
                    "q_abs": p.q_residual(m),
                    "provenance": provenance_json(p.provenance()),
                })
            })
            .collect(),
    )
}
