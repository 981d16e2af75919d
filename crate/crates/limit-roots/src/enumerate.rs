//! Breadth-first enumeration of positive roots stratified by depth.
//!
//! The depth of a positive root is 1 + the least number of simple
//! reflections producing it from a simple root. Every root of depth
//! r ≥ 2 arises as s_α(ρ') from a root ρ' of depth r−1 with
//! B(α, ρ') < 0, so the whole of Φ⁺ up to a depth bound is reached by
//! expanding only strictly-negative pairings level by level.
//!
//! Roots are deduplicated on a scaled integer grid; distinct roots
//! separate far faster than the grid pitch at feasible depths, while
//! duplicate arrivals through different reflection paths differ only by
//! rounding noise. Witness words are stored as parent pointers to keep
//! memory linear.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::module::{GeometricModule, Vector};
use crate::tol::{COORD_LIMIT, DEDUP_GRID, EPS_CLASS};

/// Index of a root inside its table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootId(pub usize);

/// A positive root: coordinates over Δ, its depth, and the reflection
/// step that first produced it.
#[derive(Debug, Clone)]
pub struct Root {
    coords: Vector,
    depth: u32,
    parent: Option<(RootId, usize)>,
}

impl Root {
    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Generator index whose reflection produced this root, with the
    /// parent it was applied to. `None` on simple roots.
    pub fn parent(&self) -> Option<(RootId, usize)> {
        self.parent
    }

    /// L¹ weight Σ coords; positive on positive roots.
    pub fn l1(&self) -> f64 {
        self.coords.iter().sum()
    }
}

/// Deduplicated depth-stratified store of enumerated positive roots.
#[derive(Debug, Clone)]
pub struct RootTable {
    rank: usize,
    roots: Vec<Root>,
    by_depth: Vec<Vec<RootId>>,
    index: HashMap<Vec<i64>, Vec<RootId>>,
    max_depth: u32,
}

fn grid_key(coords: &Vector) -> Vec<i64> {
    coords
        .iter()
        .map(|&x| (x / DEDUP_GRID).round() as i64)
        .collect()
}

fn within_dedup(a: &Vector, b: &Vector) -> bool {
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| (x - y).abs() <= DEDUP_GRID)
}

impl RootTable {
    /// BFS enumeration of all positive roots of depth ≤ `max_depth`.
    ///
    /// Level r is built from level r−1 by applying every simple
    /// reflection with B(α, ρ') < −ε, generator-major then parent order,
    /// skipping anything already stored. Aborts with `DepthOverflow`
    /// when a coordinate passes 1e12.
    pub fn enumerate(m: &GeometricModule, max_depth: u32) -> Result<RootTable> {
        assert!(
            m.is_standard_basis(),
            "enumeration requires Delta to be a basis"
        );
        assert!(max_depth >= 1, "max_depth must be at least 1");
        let n = m.rank();
        let mut table = RootTable {
            rank: n,
            roots: Vec::new(),
            by_depth: vec![Vec::new(); max_depth as usize + 1],
            index: HashMap::new(),
            max_depth,
        };
        for s in 0..n {
            let root = Root {
                coords: m.simple_root(s).clone(),
                depth: 1,
                parent: None,
            };
            table.insert_new(root, 1);
        }
        for depth in 2..=max_depth {
            let parents = table.by_depth[depth as usize - 1].clone();
            for s in 0..n {
                for &pid in &parents {
                    let pairing = m.simple_pairing(s, table.roots[pid.0].coords());
                    if pairing >= -EPS_CLASS {
                        continue;
                    }
                    let mut child = table.roots[pid.0].coords().clone();
                    child[s] -= 2.0 * pairing;
                    if child[s].abs() > COORD_LIMIT {
                        return Err(Error::DepthOverflow { limit: COORD_LIMIT });
                    }
                    if table.find(&child).is_none() {
                        let root = Root {
                            coords: child,
                            depth,
                            parent: Some((pid, s)),
                        };
                        table.insert_new(root, depth);
                    }
                }
            }
        }
        Ok(table)
    }

    fn insert_new(&mut self, root: Root, depth: u32) {
        let id = RootId(self.roots.len());
        let key = grid_key(root.coords());
        self.index.entry(key).or_default().push(id);
        self.by_depth[depth as usize].push(id);
        self.roots.push(root);
    }

    /// Looks up a vector in the table within the dedup tolerance,
    /// probing neighbor grid cells when a coordinate sits near a cell
    /// boundary.
    pub fn find(&self, coords: &Vector) -> Option<RootId> {
        let mut keys = vec![grid_key(coords)];
        for (dim, &x) in coords.iter().enumerate() {
            let scaled = x / DEDUP_GRID;
            let frac = scaled - scaled.round();
            if frac.abs() >= 0.45 {
                let bump = if frac > 0.0 { 1 } else { -1 };
                let mut extra = Vec::with_capacity(keys.len());
                for k in &keys {
                    let mut k2 = k.clone();
                    k2[dim] += bump;
                    extra.push(k2);
                }
                keys.extend(extra);
            }
        }
        for key in &keys {
            if let Some(bucket) = self.index.get(key) {
                for &id in bucket {
                    if within_dedup(self.roots[id.0].coords(), coords) {
                        return Some(id);
                    }
                }
            }
        }
        None
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id.0]
    }

    pub fn ids(&self) -> impl Iterator<Item = RootId> + '_ {
        (0..self.roots.len()).map(RootId)
    }

    pub fn iter(&self) -> impl Iterator<Item = (RootId, &Root)> + '_ {
        self.roots.iter().enumerate().map(|(i, r)| (RootId(i), r))
    }

    /// Ids of the roots at exactly the given depth.
    pub fn at_depth(&self, depth: u32) -> &[RootId] {
        &self.by_depth[depth as usize]
    }

    /// Ids of roots with depth ≤ the bound, in table order.
    pub fn up_to_depth(&self, depth: u32) -> Vec<RootId> {
        self.ids()
            .filter(|id| self.roots[id.0].depth <= depth)
            .collect()
    }

    /// Generator word realizing the root's depth: the root equals
    /// s_{w[0]} s_{w[1]} … s_{w[k−1]} applied to the returned simple
    /// root, with k = depth − 1. Letters apply rightmost first.
    pub fn witness_word(&self, id: RootId) -> (Vec<usize>, usize) {
        let mut word = Vec::new();
        let mut cursor = id;
        while let Some((pid, s)) = self.roots[cursor.0].parent {
            word.push(s);
            cursor = pid;
        }
        let base = self.roots[cursor.0]
            .coords()
            .iter()
            .position(|&x| (x - 1.0).abs() <= DEDUP_GRID)
            .expect("depth-1 roots are simple");
        (word, base)
    }
}

/// Empirical κ and λ = 4κ² for the depth–norm inequality.
#[derive(Debug, Clone)]
pub struct KappaReport {
    pub kappa: f64,
    pub lambda: f64,
    /// Sorted distinct nonzero values |B(α, ρ)| < 1 seen in the table.
    pub sampled_values: Vec<f64>,
}

/// Minimum nonzero |B(α, ρ)| over simple roots α and stored roots
/// ρ ≠ α, clamped to ≤ 1. Errors with `AllOrthogonal` when every such
/// pairing vanishes (only reducible rank-1 pieces do this).
pub fn kappa_lambda(m: &GeometricModule, table: &RootTable) -> Result<KappaReport> {
    assert!(!table.is_empty(), "table must be nonempty");
    let n = m.rank();
    let mut min_value = f64::INFINITY;
    let mut below_one: Vec<f64> = Vec::new();
    for s in 0..n {
        let alpha = m.simple_root(s);
        for (_, root) in table.iter() {
            if within_dedup(root.coords(), alpha) {
                continue;
            }
            let value = m.simple_pairing(s, root.coords()).abs();
            if value <= EPS_CLASS {
                continue;
            }
            min_value = min_value.min(value);
            if value < 1.0 - EPS_CLASS {
                below_one.push(value);
            }
        }
    }
    if !min_value.is_finite() {
        return Err(Error::AllOrthogonal);
    }
    below_one.sort_by(|a, b| a.partial_cmp(b).unwrap());
    below_one.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
    let kappa = min_value.min(1.0);
    Ok(KappaReport {
        kappa,
        lambda: 4.0 * kappa * kappa,
        sampled_values: below_one,
    })
}

/// A root whose squared norm undercuts 1 + λ(dp − 1).
#[derive(Debug, Clone)]
pub struct DepthNormViolation {
    pub id: RootId,
    pub norm_sq: f64,
    pub bound: f64,
    pub slack: f64,
}

/// Audits ‖ρ‖² ≥ 1 + λ(dp(ρ) − 1) over the whole table, using the
/// Euclidean norm in which Δ is orthonormal. Violations (slack below
/// −1e−9) are returned, never thrown.
pub fn audit_depth_norm(
    _m: &GeometricModule,
    table: &RootTable,
    report: &KappaReport,
) -> Vec<DepthNormViolation> {
    let mut violations = Vec::new();
    for (id, root) in table.iter() {
        let norm_sq = root.coords().dot(root.coords());
        let bound = 1.0 + report.lambda * (root.depth() as f64 - 1.0);
        let slack = norm_sq - bound;
        if slack < -EPS_CLASS {
            violations.push(DepthNormViolation {
                id,
                norm_sq,
                bound,
                slack,
            });
        }
    }
    violations
}
