//! Limit points of normalized roots on the isotropic cone.
//!
//! Normalized roots of an infinite system accumulate only on
//! Q̂ = {q = 0} ∩ {f = 1}, inside conv(Δ̂). Two countable dense subsets
//! of the limit set are computed here from line–quadric intersections:
//!
//! * E₂ — intersections of Q̂ with lines through two normalized roots
//!   whose pairing satisfies |B(ρ₁, ρ₂)| ≥ 1 (the rank-2 reflection
//!   subgroup they generate is infinite exactly then);
//! * E₂° — the subset using lines through a *simple* root, whose
//!   W-orbit recovers all of E₂.
//!
//! The group acts on cut points projectively: apply the reflections to
//! a representative and renormalize. On Q̂ the action of s_ρ moves x to
//! the second intersection of the line through ρ̂ and x with Q̂, which
//! makes the action geometry visible in pictures.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{RootId, RootTable};
use crate::error::{Error, Result};
use crate::module::{GeometricModule, Vector};
use crate::normalize::{simplex_coordinates, NormalizedPoint, PointSource, TransverseHyperplane};
use crate::numeric::{kernel_basis, min_norm_on_simplex};
use crate::tol::{EPS_CLASS, POINT_DEDUP};

/// How a limit point was produced.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    /// Intersection of Q̂ with the line through two normalized roots.
    RootPair(RootId, RootId),
    /// Image of another limit point under a word of generators.
    Acted {
        word: Vec<usize>,
        base: Box<LimitPoint>,
    },
    /// Direct sample of the quadric slice.
    ConicSample,
}

/// A point of the isotropic cone on the cut hyperplane.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitPoint {
    coords: Vector,
    provenance: Provenance,
}

impl LimitPoint {
    /// Wraps explicit cut coordinates as a conic-sample point; the
    /// caller asserts they lie on Q̂.
    pub fn from_coords(coords: Vector) -> Self {
        LimitPoint {
            coords,
            provenance: Provenance::ConicSample,
        }
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// View as a cut point, e.g. to act on it.
    pub fn as_normalized(&self) -> NormalizedPoint {
        NormalizedPoint::with_coords(self.coords.clone())
    }

    /// |q(coords)|; ≤ 1e−9 for every point produced by this module.
    pub fn q_residual(&self, m: &GeometricModule) -> f64 {
        m.quadratic(&self.coords).abs()
    }
}

/// A word in the simple generators. Letters act rightmost first, so
/// `[i, j]` is the element s_i s_j sending x to s_i(s_j(x)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Inverse word: generators are involutions, so just reverse.
    pub fn inverse(&self) -> Word {
        let mut rev = self.0.clone();
        rev.reverse();
        Word(rev)
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

/// Intersection of a line with the quadric slice Q̂: zero, one
/// (tangent) or two points.
#[derive(Debug, Clone)]
pub struct IntersectionResult {
    points: Vec<LimitPoint>,
    pub tangent: bool,
}

impl IntersectionResult {
    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[LimitPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<LimitPoint> {
        self.points
    }
}

/// Solves q(λa + (1−λ)x) = 0, i.e.
/// q(a−x)·λ² + 2B(x, a−x)·λ + q(x) = 0, returning solutions sorted by λ
/// with the tangency flag. A discriminant within ±ε of zero counts as
/// tangent; a degenerate leading coefficient reduces to the linear case.
fn solve_on_line(m: &GeometricModule, a: &Vector, x: &Vector) -> (Vec<f64>, bool) {
    let dir = a - x;
    let lead = m.quadratic(&dir);
    let half = m.bilinear(x, &dir);
    let cst = m.quadratic(x);
    if lead.abs() <= EPS_CLASS {
        if half.abs() <= EPS_CLASS {
            return (Vec::new(), false);
        }
        return (vec![-cst / (2.0 * half)], false);
    }
    let disc = half * half - lead * cst;
    if disc < -EPS_CLASS {
        (Vec::new(), false)
    } else if disc <= EPS_CLASS {
        (vec![-half / lead], true)
    } else {
        let sq = disc.sqrt();
        let mut lams = vec![(-half - sq) / lead, (-half + sq) / lead];
        lams.sort_by(|p, q| p.partial_cmp(q).unwrap());
        (lams, false)
    }
}

/// Intersects Q̂ with the line through two distinct cut points. Points
/// are ordered by the line parameter λ of u_λ = λa + (1−λ)x. When both
/// endpoints are normalized roots the intersections carry the pair as
/// provenance.
pub fn line_quadric_intersect(
    m: &GeometricModule,
    _h: &TransverseHyperplane,
    a: &NormalizedPoint,
    x: &NormalizedPoint,
) -> Result<IntersectionResult> {
    if (a.coords() - x.coords()).amax() <= EPS_CLASS {
        return Err(Error::CoincidentPoints);
    }
    let provenance = match (a.source(), x.source()) {
        (Some(PointSource::Root(i)), Some(PointSource::Root(j))) => Provenance::RootPair(*i, *j),
        _ => Provenance::ConicSample,
    };
    let (lams, tangent) = solve_on_line(m, a.coords(), x.coords());
    let points = lams
        .into_iter()
        .map(|lam| LimitPoint {
            coords: a.coords() * lam + x.coords() * (1.0 - lam),
            provenance: provenance.clone(),
        })
        .collect();
    Ok(IntersectionResult { points, tangent })
}

/// Grid-hash dedup of points at the `POINT_DEDUP` tolerance.
struct PointDedup {
    grid: std::collections::HashMap<Vec<i64>, Vec<usize>>,
    points: Vec<LimitPoint>,
}

impl PointDedup {
    fn new() -> Self {
        PointDedup {
            grid: std::collections::HashMap::new(),
            points: Vec::new(),
        }
    }

    fn keys_near(coords: &Vector) -> Vec<Vec<i64>> {
        let base: Vec<i64> = coords
            .iter()
            .map(|&x| (x / POINT_DEDUP).round() as i64)
            .collect();
        let mut keys = vec![base];
        for (dim, &x) in coords.iter().enumerate() {
            let scaled = x / POINT_DEDUP;
            let frac = scaled - scaled.round();
            if frac.abs() >= 0.25 {
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
        keys
    }

    fn contains(&self, coords: &Vector) -> bool {
        for key in Self::keys_near(coords) {
            if let Some(bucket) = self.grid.get(&key) {
                for &i in bucket {
                    if (self.points[i].coords() - coords).norm() <= POINT_DEDUP {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn insert(&mut self, point: LimitPoint) -> bool {
        if self.contains(point.coords()) {
            return false;
        }
        let key: Vec<i64> = point
            .coords()
            .iter()
            .map(|&x| (x / POINT_DEDUP).round() as i64)
            .collect();
        self.grid.entry(key).or_default().push(self.points.len());
        self.points.push(point);
        true
    }

    fn into_points(self) -> Vec<LimitPoint> {
        self.points
    }
}

/// Limit points of every infinite dihedral reflection subgroup spanned
/// by a pair of enumerated roots of depth ≤ `max_pairs_depth`: for each
/// unordered pair with |B(ρ₁, ρ₂)| ≥ 1 the line through the normalized
/// pair meets Q̂ in one or two points. Quadratic in the number of roots.
pub fn e2_points(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
    max_pairs_depth: u32,
) -> Vec<LimitPoint> {
    let ids = table.up_to_depth(max_pairs_depth);
    let mut dedup = PointDedup::new();
    for (k, &id1) in ids.iter().enumerate() {
        let rho1 = table.root(id1).coords();
        let a = match h.normalize_root(rho1, id1) {
            Ok(p) => p,
            Err(_) => continue,
        };
        for &id2 in &ids[k + 1..] {
            let rho2 = table.root(id2).coords();
            if m.bilinear(rho1, rho2).abs() < 1.0 - EPS_CLASS {
                continue;
            }
            let x = match h.normalize_root(rho2, id2) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if let Ok(result) = line_quadric_intersect(m, h, &a, &x) {
                for p in result.into_points() {
                    dedup.insert(p);
                }
            }
        }
    }
    dedup.into_points()
}

/// E₂ restricted to pairs with a simple member: lines through a simple
/// root and any enumerated root. A subset of `e2_points` on the same
/// table.
pub fn e2_circ_points(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
) -> Vec<LimitPoint> {
    let mut dedup = PointDedup::new();
    for s in 0..m.rank() {
        let alpha = m.simple_root(s);
        let a = match h.normalize(alpha) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let a = NormalizedPoint::with_parts(a.coords().clone(), Some(PointSource::Root(RootId(s))));
        for (id, root) in table.iter() {
            if id == RootId(s) {
                continue;
            }
            if m.simple_pairing(s, root.coords()).abs() < 1.0 - EPS_CLASS {
                continue;
            }
            let x = match h.normalize_root(root.coords(), id) {
                Ok(p) => p,
                Err(_) => continue,
            };
            if let Ok(result) = line_quadric_intersect(m, h, &a, &x) {
                for p in result.into_points() {
                    dedup.insert(p);
                }
            }
        }
    }
    dedup.into_points()
}

/// Projective action of a word on a cut point: apply the reflections to
/// the representative, renormalizing once at the end. Errors with
/// `KernelCrossing` when a partial image lands on the cut kernel (the
/// point then lies outside the action domain along this word); limit
/// points never do.
pub fn act(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    word: &Word,
    x: &NormalizedPoint,
) -> Result<NormalizedPoint> {
    let mut v = x.coords().clone();
    for (applied, &letter) in word.letters().iter().rev().enumerate() {
        if letter >= m.rank() {
            return Err(Error::InvalidGenerator {
                index: letter,
                rank: m.rank(),
            });
        }
        v = m.reflect_simple(letter, &v);
        if h.eval(&v).abs() <= EPS_CLASS {
            return Err(Error::KernelCrossing {
                step: applied + 1,
                tol: EPS_CLASS,
            });
        }
    }
    let p = h.normalize(&v)?;
    Ok(NormalizedPoint::with_parts(
        p.coords().clone(),
        Some(PointSource::Acted(word.letters().to_vec())),
    ))
}

/// Applies a word to a raw vector (no renormalization): w(v).
pub fn act_vector(m: &GeometricModule, word: &Word, v: &Vector) -> Vector {
    let mut out = v.clone();
    for &letter in word.letters().iter().rev() {
        out = m.reflect_simple(letter, &out);
    }
    out
}

/// Visibility of a cone point from a normalized positive root: x is
/// visible from ρ̂ iff B(ρ, x) ≥ 0, i.e. the segment [ρ̂, x] meets Q̂
/// only in x.
pub fn visible(m: &GeometricModule, rho: &Vector, x: &LimitPoint) -> bool {
    m.bilinear(rho, x.coords()) >= -EPS_CLASS
}

/// max over a ∈ A of the distance from a to B. Pruned by sorting B
/// along its widest axis, which collapses the scan to a short window
/// for point sets concentrated near a curve.
pub fn directed_hausdorff(from: &[Vector], to: &[Vector]) -> Result<f64> {
    if from.is_empty() || to.is_empty() {
        return Err(Error::EmptySet);
    }
    let dim = to[0].len();
    let mut mean = vec![0.0; dim];
    for p in to {
        for i in 0..dim {
            mean[i] += p[i];
        }
    }
    let count = to.len() as f64;
    let mut variance = vec![0.0; dim];
    for p in to {
        for i in 0..dim {
            let d = p[i] - mean[i] / count;
            variance[i] += d * d;
        }
    }
    let axis = variance
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
        .map(|(i, _)| i)
        .unwrap_or(0);
    let mut order: Vec<usize> = (0..to.len()).collect();
    order.sort_by(|&i, &j| to[i][axis].partial_cmp(&to[j][axis]).unwrap());

    let mut worst = 0.0_f64;
    for a in from {
        let target = a[axis];
        let pos = order.partition_point(|&i| to[i][axis] < target);
        let mut best = f64::INFINITY;
        let (mut lo, mut hi) = (pos as isize - 1, pos);
        loop {
            let lo_gap = if lo >= 0 {
                let g = target - to[order[lo as usize]][axis];
                g * g
            } else {
                f64::INFINITY
            };
            let hi_gap = if hi < order.len() {
                let g = to[order[hi]][axis] - target;
                g * g
            } else {
                f64::INFINITY
            };
            if lo_gap.min(hi_gap) >= best {
                break;
            }
            if lo_gap <= hi_gap {
                let d2 = (a - &to[order[lo as usize]]).norm_squared();
                best = best.min(d2);
                lo -= 1;
            } else {
                let d2 = (a - &to[order[hi]]).norm_squared();
                best = best.min(d2);
                hi += 1;
            }
        }
        worst = worst.max(best);
    }
    Ok(worst.sqrt())
}

/// Membership of a cut point in conv(Δ̂) up to tolerance.
fn in_simplex(m: &GeometricModule, h: &TransverseHyperplane, p: &Vector, tol: f64) -> bool {
    if m.rank() == m.dim() {
        let np = NormalizedPoint::with_parts(p.clone(), None);
        return simplex_coordinates(m, h, &np).iter().all(|&b| b >= -tol);
    }
    // Non-basis Δ: distance from p to conv(Δ̂) via the simplex QP.
    let normalized_simples: Vec<Vector> = m.simple_roots().iter().map(|a| a / h.eval(a)).collect();
    let columns: Vec<Vector> = normalized_simples.iter().map(|v| v - p).collect();
    let mat = nalgebra::DMatrix::from_columns(&columns);
    let (_, value) = min_norm_on_simplex(&mat);
    value.sqrt() <= tol
}

/// Raw samples of Q̂ on the cut, optionally restricted to conv(Δ̂).
///
/// Positive semidefinite degenerate forms have Q = V⊥, so the slice is
/// the radical cut by {f = 1}; indefinite forms are sampled by shooting
/// lines from a point with q < 0 and solving the line–quadric equation.
fn quadric_cut_samples(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    count: usize,
    restrict_to_simplex: bool,
) -> Result<Vec<Vector>> {
    let sig = m.signature();
    if sig.is_positive_definite() {
        return Err(Error::EmptyQuadric);
    }
    let mut raw: Vec<Vector> = Vec::new();
    if sig.n_negative == 0 {
        // q ≥ 0 with radical: Q = V⊥. Cut the radical by the hyperplane.
        let mut rays: Vec<Vector> = Vec::new();
        for r in &sig.radical_basis {
            let level = h.eval(r);
            if level.abs() > EPS_CLASS {
                rays.push(r / level);
            }
        }
        if rays.is_empty() {
            return Ok(Vec::new());
        }
        if rays.len() == 1 {
            raw.push(rays[0].clone());
        } else {
            // Affine slice of dimension rays.len()−1: low-discrepancy
            // convex combinations of the normalized rays.
            let golden = 0.618_033_988_749_894_9_f64;
            for j in 0..count {
                let mut weights: Vec<f64> = (0..rays.len())
                    .map(|i| (golden * (j * rays.len() + i + 1) as f64).fract() + 1e-3)
                    .collect();
                let total: f64 = weights.iter().sum();
                weights.iter_mut().for_each(|w| *w /= total);
                let mut p = Vector::zeros(m.dim());
                for (w, r) in weights.iter().zip(&rays) {
                    p += r * *w;
                }
                raw.push(p);
            }
        }
    } else {
        let center = negative_center(m, h)?;
        let basis = kernel_basis(h.functional());
        let directions: Vec<Vector> = match basis.len() {
            0 => Vec::new(),
            1 => vec![basis[0].clone()],
            2 => {
                let sweeps = count.max(2).div_ceil(2);
                (0..sweeps)
                    .map(|k| {
                        let theta = std::f64::consts::PI * k as f64 / sweeps as f64;
                        &basis[0] * theta.cos() + &basis[1] * theta.sin()
                    })
                    .collect()
            }
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(0x51AB_5EED);
                (0..count.max(2))
                    .map(|_| {
                        let mut dir = Vector::zeros(m.dim());
                        for b in &basis {
                            let c: f64 = rng.gen::<f64>() * 2.0 - 1.0;
                            dir += b * c;
                        }
                        dir
                    })
                    .collect()
            }
        };
        for dir in directions {
            let lead = m.quadratic(&dir);
            let half = m.bilinear(&center, &dir);
            let cst = m.quadratic(&center);
            let ts: Vec<f64> = if lead.abs() <= 1e-14 {
                if half.abs() <= 1e-14 {
                    Vec::new()
                } else {
                    vec![-cst / (2.0 * half)]
                }
            } else {
                let disc = half * half - lead * cst;
                if disc < 0.0 {
                    Vec::new()
                } else {
                    let sq = disc.sqrt();
                    vec![(-half - sq) / lead, (-half + sq) / lead]
                }
            };
            for t in ts {
                raw.push(&center + &dir * t);
            }
        }
    }
    let mut out = Vec::new();
    for p in raw {
        if restrict_to_simplex && !in_simplex(m, h, &p, 1e-9) {
            continue;
        }
        out.push(p);
        if out.len() == count {
            break;
        }
    }
    Ok(out)
}

/// A cut point with q < 0, used as the interior anchor for ray
/// shooting: every line through it meets Q̂ in two points or none.
fn negative_center(m: &GeometricModule, h: &TransverseHyperplane) -> Result<Vector> {
    let eigen = nalgebra::SymmetricEigen::new(m.ambient_form().clone());
    let mut best: Option<(f64, Vector)> = None;
    for (i, &l) in eigen.eigenvalues.iter().enumerate() {
        if best.as_ref().is_none_or(|(bl, _)| l < *bl) {
            best = Some((l, eigen.eigenvectors.column(i).into()));
        }
    }
    let (lambda, mut v) = best.expect("form has at least one eigenvalue");
    if lambda >= 0.0 {
        return Err(Error::EmptyQuadric);
    }
    if h.eval(&v).abs() <= EPS_CLASS {
        // Nudge off the kernel while keeping q < 0.
        let mut bary = Vector::zeros(m.dim());
        for alpha in m.simple_roots() {
            bary += alpha / (h.eval(alpha) * m.rank() as f64);
        }
        let mut t = 1e-3;
        loop {
            let w = &v + &bary * t;
            if m.quadratic(&w) < 0.0 && h.eval(&w).abs() > EPS_CLASS {
                v = w;
                break;
            }
            t *= 0.5;
            assert!(t > 1e-18, "failed to nudge center off the cut kernel");
        }
    }
    let p = &v / h.eval(&v);
    Ok(p)
}

/// Samples of Q̂ ∩ conv(Δ̂) as limit points. For rank 3 the slice is a
/// conic swept by angle; an irreducible affine system contributes its
/// single radical point. Errors with `EmptyQuadric` for finite groups.
pub fn conic_sample(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    count: usize,
) -> Result<Vec<LimitPoint>> {
    let samples = quadric_cut_samples(m, h, count, true)?;
    Ok(samples
        .into_iter()
        .map(|coords| LimitPoint {
            coords,
            provenance: Provenance::ConicSample,
        })
        .collect())
}

/// Curve-ordered samples of the quadric slice for drawing (may leave
/// the simplex). On a 2-dimensional cut the slice is swept by a full
/// turn around a point with q < 0, keeping the nearest forward
/// intersection per angle, so consecutive samples are neighbors on the
/// conic; branch crossings appear as jumps for the renderer to split.
pub fn quadric_polyline_samples(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    count: usize,
) -> Result<Vec<Vector>> {
    let sig = m.signature();
    if sig.is_positive_definite() {
        return Err(Error::EmptyQuadric);
    }
    let basis = kernel_basis(h.functional());
    if sig.n_negative == 0 || basis.len() != 2 {
        return quadric_cut_samples(m, h, count, false);
    }
    let center = negative_center(m, h)?;
    let mut out = Vec::new();
    for k in 0..count.max(3) {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / count.max(3) as f64;
        let dir = &basis[0] * theta.cos() + &basis[1] * theta.sin();
        let lead = m.quadratic(&dir);
        let half = m.bilinear(&center, &dir);
        let cst = m.quadratic(&center);
        let disc = half * half - lead * cst;
        if lead.abs() <= 1e-14 || disc < 0.0 {
            continue;
        }
        let sq = disc.sqrt();
        let forward = [(-half - sq) / lead, (-half + sq) / lead]
            .into_iter()
            .filter(|&t| t > 0.0)
            .fold(f64::INFINITY, f64::min);
        if forward.is_finite() {
            out.push(&center + &dir * forward);
        }
    }
    Ok(out)
}

fn restricted_module(m: &GeometricModule, subset: &[usize]) -> GeometricModule {
    let k = subset.len();
    let mut gram = nalgebra::DMatrix::identity(k, k);
    for (a, &i) in subset.iter().enumerate() {
        for (b, &j) in subset.iter().enumerate() {
            gram[(a, b)] = m.gram()[(i, j)];
        }
    }
    GeometricModule::from_gram(gram).expect("restriction of a valid gram matrix is valid")
}

/// Subsets Δ_I whose quadric slice Q̂_I = Q̂ ∩ span(Δ_I) stays inside
/// conv(Δ̂_I), decided by sampling the restricted slice. Subsets whose
/// slice is empty pass vacuously. Requires Δ to be a basis.
pub fn generating_subsets(m: &GeometricModule, _h: &TransverseHyperplane) -> Vec<Vec<usize>> {
    assert!(
        m.is_standard_basis(),
        "generating test requires Delta to be a basis"
    );
    let n = m.rank();
    let mut generating = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let subset: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let sub = restricted_module(m, &subset);
        let sub_h = TransverseHyperplane::default_cut(&sub);
        match quadric_cut_samples(&sub, &sub_h, 240, false) {
            Err(Error::EmptyQuadric) => generating.push(subset),
            Ok(samples) => {
                if samples.iter().all(|p| p.iter().all(|&c| c >= -EPS_CLASS)) {
                    generating.push(subset);
                }
            }
            Err(_) => {}
        }
    }
    generating
}

/// Experimental sampler of the conjectured self-similar skeleton of the
/// limit set: the W-orbit (words up to `orbit_length`) of the quadric
/// slices of all generating subsets. No equality with the limit set is
/// asserted.
pub fn f0_sample(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    orbit_length: usize,
) -> Vec<LimitPoint> {
    let n = m.rank();
    let mut dedup = PointDedup::new();
    let mut bases: Vec<LimitPoint> = Vec::new();
    for subset in generating_subsets(m, h) {
        let sub = restricted_module(m, &subset);
        let sub_h = TransverseHyperplane::default_cut(&sub);
        let samples = match quadric_cut_samples(&sub, &sub_h, 120, false) {
            Ok(s) => s,
            Err(_) => continue,
        };
        for s in samples {
            let mut coords = Vector::zeros(m.dim());
            for (a, &i) in subset.iter().enumerate() {
                coords[i] = s[a];
            }
            let level = h.eval(&coords);
            if level.abs() <= EPS_CLASS {
                continue;
            }
            let point = LimitPoint {
                coords: coords / level,
                provenance: Provenance::ConicSample,
            };
            if dedup.insert(point.clone()) {
                bases.push(point);
            }
        }
    }
    // Breadth-first over words without immediate repeats.
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..orbit_length {
        let mut next = Vec::new();
        for word in &frontier {
            for s in 0..n {
                if word.first() == Some(&s) {
                    continue;
                }
                let mut w = Vec::with_capacity(word.len() + 1);
                w.push(s);
                w.extend_from_slice(word);
                next.push(w);
            }
        }
        for word in &next {
            let w = Word::new(word.clone());
            for base in &bases {
                let x = NormalizedPoint::with_parts(base.coords().clone(), None);
                if let Ok(image) = act(m, h, &w, &x) {
                    dedup.insert(LimitPoint {
                        coords: image.coords().clone(),
                        provenance: Provenance::Acted {
                            word: word.clone(),
                            base: Box::new(base.clone()),
                        },
                    });
                }
            }
        }
        frontier = next;
    }
    dedup.into_points()
}
