//! Reflection subsystems: dihedral pairs, standard parabolic
//! restriction, reducible splitting, and canonical modules.
//!
//! Two positive roots generate a rank-2 reflection subgroup that is
//! finite, affine or indefinite according to |B(ρ₁, ρ₂)| <, =, > 1; in
//! the infinite case the pair itself is the canonical simple system
//! exactly when B(ρ₁, ρ₂) ≤ −1. Any simple subsystem inside a module
//! pulls back to its canonical module (Δ declared a basis with the
//! pairing matrix as gram), and the induced map φ carries the canonical
//! root system bijectively onto the embedded one.

use nalgebra::{DMatrix, Matrix2, Vector2};

use crate::enumerate::{RootId, RootTable};
use crate::error::{Error, Result};
use crate::limits::{line_quadric_intersect, LimitPoint};
use crate::module::{GeometricModule, Vector};
use crate::normalize::TransverseHyperplane;
use crate::tol::EPS_CLASS;

/// Classification of the reflection subgroup of a root pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DihedralKind {
    Finite,
    Affine,
    InfiniteNonAffine,
}

/// Rank-2 reflection subsystem data for a pair of positive roots.
#[derive(Debug, Clone)]
pub struct DihedralInfo {
    pub kind: DihedralKind,
    /// B(ρ₁, ρ₂).
    pub b_value: f64,
    /// Canonical simple pair of the subsystem, when available: the
    /// input pair itself if B ≤ −1, otherwise located in the table.
    pub canonical_simples: Option<[RootId; 2]>,
    /// Q̂ ∩ L(ρ̂₁, ρ̂₂): empty, one (affine) or two points.
    pub limit_points: Vec<LimitPoint>,
}

/// Classifies the dihedral reflection subgroup generated by two stored
/// roots and computes its limit points.
///
/// When B(ρ₁, ρ₂) ≥ 1 the canonical pair is searched among the stored
/// roots of the plane span(ρ₁, ρ₂): the unique pair pairing ≤ −1 whose
/// cone contains every stored root of the plane. An unsuccessful search
/// is reported as `CanonicalPairNotInTable`, never guessed.
pub fn dihedral_subsystem(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    table: &RootTable,
    r1: RootId,
    r2: RootId,
) -> Result<DihedralInfo> {
    assert!(r1 != r2, "roots must be distinct");
    let rho1 = table.root(r1).coords();
    let rho2 = table.root(r2).coords();
    let b_value = m.bilinear(rho1, rho2);

    if b_value.abs() < 1.0 - EPS_CLASS {
        return Ok(DihedralInfo {
            kind: DihedralKind::Finite,
            b_value,
            canonical_simples: None,
            limit_points: Vec::new(),
        });
    }

    let kind = if (b_value.abs() - 1.0).abs() <= EPS_CLASS {
        DihedralKind::Affine
    } else {
        DihedralKind::InfiniteNonAffine
    };
    let a = h.normalize_root(rho1, r1)?;
    let x = h.normalize_root(rho2, r2)?;
    let limit_points = line_quadric_intersect(m, h, &a, &x)?.into_points();

    let canonical_simples = if b_value <= -1.0 + EPS_CLASS {
        Some([r1, r2])
    } else {
        Some(search_canonical_pair(m, table, rho1, rho2)?)
    };

    Ok(DihedralInfo {
        kind,
        b_value,
        canonical_simples,
        limit_points,
    })
}

/// Euclidean coefficients of x in the plane basis (u, v), plus the
/// out-of-plane residual.
fn plane_coefficients(u: &Vector, v: &Vector, x: &Vector) -> Option<(f64, f64, f64)> {
    let g = Matrix2::new(u.dot(u), u.dot(v), v.dot(u), v.dot(v));
    let rhs = Vector2::new(u.dot(x), v.dot(x));
    let coef = g.lu().solve(&rhs)?;
    let residual = (x - u * coef[0] - v * coef[1]).norm();
    Some((coef[0], coef[1], residual))
}

fn search_canonical_pair(
    m: &GeometricModule,
    table: &RootTable,
    rho1: &Vector,
    rho2: &Vector,
) -> Result<[RootId; 2]> {
    // Stored roots of the plane: membership decided geometrically.
    let mut members: Vec<(RootId, f64, f64)> = Vec::new();
    for (id, root) in table.iter() {
        if let Some((a, b, residual)) = plane_coefficients(rho1, rho2, root.coords()) {
            if residual <= 1e-8 {
                members.push((id, a, b));
            }
        }
    }
    for (k, &(id_a, ..)) in members.iter().enumerate() {
        for &(id_b, ..) in &members[k + 1..] {
            let sa = table.root(id_a).coords();
            let sb = table.root(id_b).coords();
            if m.bilinear(sa, sb) > -1.0 + EPS_CLASS {
                continue;
            }
            // Every plane root must sit in cone(σ_a, σ_b).
            let spans_all = members.iter().all(|&(mid, ..)| {
                let x = table.root(mid).coords();
                match plane_coefficients(sa, sb, x) {
                    Some((ca, cb, _)) => ca >= -EPS_CLASS && cb >= -EPS_CLASS,
                    None => false,
                }
            });
            if spans_all {
                return Ok([id_a, id_b]);
            }
        }
    }
    Err(Error::CanonicalPairNotInTable)
}

/// A B-preserving linear map from a canonical module onto a simple
/// subsystem of the target.
#[derive(Debug, Clone)]
pub struct SubsystemEmbedding {
    source: GeometricModule,
    target: GeometricModule,
    /// dim(target) × rank(source) matrix sending source basis vectors
    /// onto the embedded simple roots.
    matrix: DMatrix<f64>,
}

impl SubsystemEmbedding {
    pub fn source(&self) -> &GeometricModule {
        &self.source
    }

    pub fn target(&self) -> &GeometricModule {
        &self.target
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// φ(v): source coordinates to target ambient coordinates.
    pub fn map(&self, v: &Vector) -> Vector {
        &self.matrix * v
    }
}

/// Standard parabolic restriction to the simple roots indexed by `i`:
/// the canonical module of the restricted gram matrix, embedded on the
/// face spanned by Δ_I.
pub fn parabolic_restriction(m: &GeometricModule, indices: &[usize]) -> Result<SubsystemEmbedding> {
    assert!(!indices.is_empty(), "index set must be nonempty");
    let mut seen = vec![false; m.rank()];
    for &i in indices {
        if i >= m.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: m.rank(),
            });
        }
        assert!(!seen[i], "duplicate index {i}");
        seen[i] = true;
    }
    let k = indices.len();
    let mut gram = DMatrix::identity(k, k);
    for (a, &i) in indices.iter().enumerate() {
        for (b, &j) in indices.iter().enumerate() {
            gram[(a, b)] = m.gram()[(i, j)];
        }
    }
    let source = GeometricModule::from_gram(gram)?;
    let columns: Vec<Vector> = indices.iter().map(|&i| m.simple_root(i).clone()).collect();
    Ok(SubsystemEmbedding {
        source,
        target: m.clone(),
        matrix: DMatrix::from_columns(&columns),
    })
}

/// One parabolic embedding per connected component; an irreducible
/// module yields a single entry. Limit sets of distinct components live
/// in disjoint faces of the simplex.
pub fn reducible_split(m: &GeometricModule) -> Vec<SubsystemEmbedding> {
    m.components()
        .into_iter()
        .map(|part| parabolic_restriction(m, &part).expect("component indices are valid"))
        .collect()
}

/// Canonical module of a simple system given by stored root ids — the
/// row indices of an enumeration export.
pub fn canonical_module_from_ids(
    m: &GeometricModule,
    table: &RootTable,
    ids: &[RootId],
) -> Result<SubsystemEmbedding> {
    let roots: Vec<Vector> = ids
        .iter()
        .map(|&id| table.root(id).coords().clone())
        .collect();
    canonical_module(m, &roots)
}

/// Canonical module of an explicit simple system of roots in `m`: the
/// source has Δ declared a basis with gram equal to the pairwise B
/// values, and φ sends basis vector i to `roots[i]`.
pub fn canonical_module(m: &GeometricModule, roots: &[Vector]) -> Result<SubsystemEmbedding> {
    if roots.is_empty() {
        return Err(Error::InvalidSimpleSystem {
            reason: "empty root list".to_string(),
        });
    }
    let k = roots.len();
    let mut gram = DMatrix::identity(k, k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = m.bilinear(&roots[i], &roots[j]);
        }
    }
    for i in 0..k {
        if (gram[(i, i)] - 1.0).abs() > EPS_CLASS {
            return Err(Error::InvalidSimpleSystem {
                reason: format!("root {i} has q = {} instead of 1", gram[(i, i)]),
            });
        }
    }
    let source = GeometricModule::from_gram(gram).map_err(|e| match e {
        Error::InvalidGramEntry { i, j, value } => Error::InvalidSimpleSystem {
            reason: format!(
                "pairing B(root_{i}, root_{j}) = {value} is not -cos(pi/k) and not <= -1"
            ),
        },
        other => other,
    })?;
    let columns: Vec<Vector> = roots.to_vec();
    Ok(SubsystemEmbedding {
        source,
        target: m.clone(),
        matrix: DMatrix::from_columns(&columns),
    })
}

/// Outcome of checking φ against enumerated roots.
#[derive(Debug, Clone)]
pub struct PhiReport {
    /// Source roots enumerated and mapped.
    pub checked: usize,
    /// Source roots whose image was not found among the target's
    /// enumerated roots (may indicate a too-shallow target table).
    pub missing: Vec<RootId>,
    /// Source root pairs mapped onto the same target root.
    pub collisions: Vec<(RootId, RootId)>,
    /// Largest |B_target(φu, φv) − B_source(u, v)| over all pairs,
    /// scaled by max(1, ‖u‖·‖v‖) — the conditioning of evaluating a
    /// bilinear form at that magnitude. A wrong map shows up at O(1)
    /// here; honest rounding stays near machine epsilon.
    pub max_bilinear_error: f64,
}

impl PhiReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.collisions.is_empty() && self.max_bilinear_error <= 1e-10
    }

    pub fn mismatches(&self) -> usize {
        self.missing.len() + self.collisions.len() + usize::from(self.max_bilinear_error > 1e-10)
    }
}

/// Enumerates the source roots up to `depth`, maps them through φ and
/// verifies: every image is a stored positive root of the target
/// (`target_table` must be enumerated deep enough to contain them),
/// images are pairwise distinct, and φ preserves B.
pub fn verify_phi_bijection(
    emb: &SubsystemEmbedding,
    depth: u32,
    target_table: &RootTable,
) -> Result<PhiReport> {
    let source_table = RootTable::enumerate(&emb.source, depth)?;
    let mut report = PhiReport {
        checked: source_table.len(),
        missing: Vec::new(),
        collisions: Vec::new(),
        max_bilinear_error: 0.0,
    };
    let mut hits: std::collections::HashMap<RootId, RootId> = std::collections::HashMap::new();
    let images: Vec<(RootId, Vector)> = source_table
        .iter()
        .map(|(id, root)| (id, emb.map(root.coords())))
        .collect();
    for (source_id, image) in &images {
        match target_table.find(image) {
            Some(target_id) => {
                if let Some(&other) = hits.get(&target_id) {
                    report.collisions.push((other, *source_id));
                } else {
                    hits.insert(target_id, *source_id);
                }
            }
            None => report.missing.push(*source_id),
        }
    }
    for (k, (ida, ia)) in images.iter().enumerate() {
        let ua = source_table.root(*ida).coords();
        for (idb, ib) in &images[k..] {
            let ub = source_table.root(*idb).coords();
            let b_src = emb.source.bilinear(ua, ub);
            let scale = (ua.norm() * ub.norm()).max(1.0);
            let err = (emb.target.bilinear(ia, ib) - b_src).abs() / scale;
            report.max_bilinear_error = report.max_bilinear_error.max(err);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::CoxeterSpec;
    use nalgebra::DVector;

    fn golden() -> f64 {
        (1.0 + 5.0_f64.sqrt()) / 2.0
    }

    fn setup(spec: CoxeterSpec, depth: u32) -> (GeometricModule, TransverseHyperplane, RootTable) {
        let m = GeometricModule::build(&spec).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let table = RootTable::enumerate(&m, depth).unwrap();
        (m, h, table)
    }

    #[test]
    fn dihedral_gamma_rho_is_indefinite_with_canonical_pair() {
        let (m, h, table) = setup(CoxeterSpec::triangle(5, 3, 3), 4);
        let gamma = RootId(2);
        let rho = table
            .find(&DVector::from_vec(vec![golden(), golden(), 0.0]))
            .unwrap();
        let info = dihedral_subsystem(&m, &h, &table, gamma, rho).unwrap();
        assert_eq!(info.kind, DihedralKind::InfiniteNonAffine);
        assert!((info.b_value + golden()).abs() < 1e-12);
        assert_eq!(info.canonical_simples, Some([gamma, rho]));
        assert_eq!(info.limit_points.len(), 2);
    }

    #[test]
    fn dihedral_finite_pair() {
        let (m, h, table) = setup(CoxeterSpec::triangle(5, 3, 3), 3);
        let info = dihedral_subsystem(&m, &h, &table, RootId(0), RootId(1)).unwrap();
        assert_eq!(info.kind, DihedralKind::Finite);
        assert!(info.limit_points.is_empty());
        assert!(info.canonical_simples.is_none());
    }

    #[test]
    fn dihedral_affine_simples() {
        let (m, h, table) = setup(CoxeterSpec::dihedral(0), 4);
        let info = dihedral_subsystem(&m, &h, &table, RootId(0), RootId(1)).unwrap();
        assert_eq!(info.kind, DihedralKind::Affine);
        assert_eq!(info.canonical_simples, Some([RootId(0), RootId(1)]));
        assert_eq!(info.limit_points.len(), 1);
        let mid = DVector::from_vec(vec![0.5, 0.5]);
        assert!((info.limit_points[0].coords() - mid).amax() < 1e-12);
    }

    #[test]
    fn canonical_pair_search_recovers_the_simples() {
        // (α, 2α+β) pairs to +1; the canonical pair of that subgroup is
        // the simple pair (α, β) found by the cone search.
        let (m, h, table) = setup(CoxeterSpec::dihedral(0), 5);
        let rho = table.find(&DVector::from_vec(vec![2.0, 1.0])).unwrap();
        let info = dihedral_subsystem(&m, &h, &table, RootId(0), rho).unwrap();
        assert_eq!(info.kind, DihedralKind::Affine);
        assert_eq!(info.canonical_simples, Some([RootId(0), RootId(1)]));
    }

    #[test]
    fn parabolic_identity_restriction() {
        let (m, _, _) = setup(CoxeterSpec::triangle(5, 3, 3), 2);
        let emb = parabolic_restriction(&m, &[0, 1, 2]).unwrap();
        assert_eq!(emb.source().gram(), m.gram());
        for s in 0..3 {
            assert_eq!(&emb.map(emb.source().simple_root(s)), m.simple_root(s));
        }
    }

    #[test]
    fn parabolic_restriction_of_the_rank5_system() {
        let spec = CoxeterSpec::new(vec![
            vec![1, 0, 2, 2, 2],
            vec![0, 1, 3, 2, 2],
            vec![2, 3, 1, 3, 2],
            vec![2, 2, 3, 1, 0],
            vec![2, 2, 2, 0, 1],
        ])
        .unwrap();
        let m = GeometricModule::build(&spec).unwrap();
        let emb = parabolic_restriction(&m, &[0, 1, 3, 4]).unwrap();
        let parts = emb.source().components();
        assert_eq!(parts.len(), 2);
        // Both components are affine dihedral.
        for part in reducible_split(emb.source()) {
            let sig = part.source().signature();
            assert!(sig.is_affine());
        }
    }

    #[test]
    fn single_generator_restriction_is_finite() {
        let (m, _, _) = setup(CoxeterSpec::triangle(5, 3, 3), 2);
        let emb = parabolic_restriction(&m, &[1]).unwrap();
        assert!(emb.source().signature().is_positive_definite());
    }

    #[test]
    fn reducible_split_examples() {
        let (m, _, _) = setup(CoxeterSpec::triangle(5, 3, 3), 2);
        assert_eq!(reducible_split(&m).len(), 1);

        // A₁ × Ã₁: labels 2, 2, ∞.
        let spec = CoxeterSpec::triangle(2, 2, 0);
        let m2 = GeometricModule::build(&spec).unwrap();
        let parts = reducible_split(&m2);
        assert_eq!(parts.len(), 2);
        let affine_part = parts
            .iter()
            .find(|p| p.source().rank() == 2)
            .expect("the infinite dihedral factor");
        assert!(affine_part.source().signature().is_affine());
    }

    #[test]
    fn canonical_module_identity() {
        let (m, _, _) = setup(CoxeterSpec::triangle(4, 4, 4), 2);
        let roots: Vec<Vector> = m.simple_roots().to_vec();
        let emb = canonical_module(&m, &roots).unwrap();
        assert_eq!(emb.source().gram(), m.gram());
    }

    #[test]
    fn canonical_module_of_the_embedded_rank4() {
        let (m, _, _) = setup(CoxeterSpec::triangle(4, 4, 4), 2);
        let t_of = |v: &Vector| m.reflect_simple(1, v);
        let roots = vec![
            m.simple_root(0).clone(),
            m.simple_root(2).clone(),
            t_of(m.simple_root(0)),
            t_of(m.simple_root(2)),
        ];
        let emb = canonical_module(&m, &roots).unwrap();
        let s2 = 2.0_f64.sqrt() / 2.0;
        let expect = DMatrix::from_row_slice(
            4,
            4,
            &[
                1.0,
                -s2,
                0.0,
                -1.0 - s2,
                -s2,
                1.0,
                -1.0 - s2,
                0.0,
                0.0,
                -1.0 - s2,
                1.0,
                -s2,
                -1.0 - s2,
                0.0,
                -s2,
                1.0,
            ],
        );
        assert!((emb.source().gram() - expect).amax() < 1e-12);
    }

    #[test]
    fn canonical_module_of_the_golden_pair() {
        let (m, _, table) = setup(CoxeterSpec::triangle(5, 3, 3), 3);
        let rho = table
            .find(&DVector::from_vec(vec![golden(), golden(), 0.0]))
            .unwrap();
        let roots = vec![m.simple_root(2).clone(), table.root(rho).coords().clone()];
        let emb = canonical_module(&m, &roots).unwrap();
        assert!((emb.source().gram()[(0, 1)] + golden()).abs() < 1e-12);
    }

    #[test]
    fn canonical_module_rejects_positive_pairings() {
        let (m, _, table) = setup(CoxeterSpec::dihedral(3), 2);
        let sum = table.find(&DVector::from_vec(vec![1.0, 1.0])).unwrap();
        let roots = vec![m.simple_root(0).clone(), table.root(sum).coords().clone()];
        // B(α, α+β) = +1/2 is not a legal simple-system pairing.
        let err = canonical_module(&m, &roots).unwrap_err();
        assert!(matches!(err, Error::InvalidSimpleSystem { .. }));
    }

    #[test]
    fn phi_identity_is_clean() {
        let (m, _, table) = setup(CoxeterSpec::triangle(4, 4, 4), 6);
        let emb = parabolic_restriction(&m, &[0, 1, 2]).unwrap();
        let report = verify_phi_bijection(&emb, 6, &table).unwrap();
        assert!(report.is_clean());
        assert_eq!(report.checked, table.len());
    }

    #[test]
    fn phi_of_the_golden_pair_embedding_is_clean() {
        let (m, _, table) = setup(CoxeterSpec::triangle(5, 3, 3), 16);
        let rho_coords = DVector::from_vec(vec![golden(), golden(), 0.0]);
        let roots = vec![m.simple_root(2).clone(), rho_coords];
        let emb = canonical_module(&m, &roots).unwrap();
        let report = verify_phi_bijection(&emb, 5, &table).unwrap();
        assert!(report.is_clean(), "missing: {:?}", report.missing.len());
        assert_eq!(report.checked, 10);
    }
}
