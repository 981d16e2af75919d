//! Transverse hyperplanes and the normalization of roots onto them.
//!
//! A cut hyperplane {f = 1} is transverse when it meets every simple
//! ray in a single nonzero point; the normalization map sends v to
//! v / f(v). With Δ a basis the default cut is the affine span V₁ of
//! the simple roots, where f is the coordinate sum and the normalized
//! roots live inside the simplex conv(Δ). All transverse cuts are
//! homeomorphic on the normalized sets, so everything computed on one
//! cut can be rebased onto another.

use nalgebra::DMatrix;

use crate::enumerate::RootId;
use crate::error::{Error, Result};
use crate::module::{GeometricModule, Vector};
use crate::numeric::min_norm_on_simplex;
use crate::tol::{EPS_CLASS, TRANSVERSE_MARGIN};

/// Provenance of a normalized point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSource {
    Root(RootId),
    Acted(Vec<usize>),
}

/// A point on the cut hyperplane: f(coords) = 1.
#[derive(Debug, Clone)]
pub struct NormalizedPoint {
    coords: Vector,
    source: Option<PointSource>,
}

impl NormalizedPoint {
    /// Wraps coordinates already on the cut (f(coords) = 1); the caller
    /// vouches for the level.
    pub fn with_coords(coords: Vector) -> Self {
        NormalizedPoint {
            coords,
            source: None,
        }
    }

    pub fn coords(&self) -> &Vector {
        &self.coords
    }

    pub fn source(&self) -> Option<&PointSource> {
        self.source.as_ref()
    }

    pub(crate) fn with_parts(coords: Vector, source: Option<PointSource>) -> Self {
        NormalizedPoint { coords, source }
    }
}

/// A positive linear functional pinned at level 1.
#[derive(Debug, Clone)]
pub struct TransverseHyperplane {
    functional: Vector,
}

impl TransverseHyperplane {
    /// The coordinate-sum cut V₁ = {Σ v_α = 1}. Requires Δ to be a
    /// basis; for the standard basis the functional is all ones.
    pub fn default_cut(m: &GeometricModule) -> Self {
        assert_eq!(
            m.rank(),
            m.dim(),
            "default cut requires Delta to be a basis"
        );
        if m.is_standard_basis() {
            return TransverseHyperplane {
                functional: Vector::from_element(m.dim(), 1.0),
            };
        }
        // f = 1ᵀ · Δ⁻¹: the sum of Δ-coordinates as an ambient functional.
        let basis = DMatrix::from_columns(m.simple_roots());
        let ones = Vector::from_element(m.rank(), 1.0);
        let f = basis
            .transpose()
            .lu()
            .solve(&ones)
            .expect("Delta was declared a basis");
        TransverseHyperplane { functional: f }
    }

    /// Finds a cut transverse to Φ⁺ for any positively independent Δ:
    /// a strictly separating functional, scaled so the barycenter of
    /// the simple roots sits at level 1.
    pub fn make_transverse(m: &GeometricModule) -> Result<Self> {
        let columns = DMatrix::from_columns(m.simple_roots());
        let (weights, value) = min_norm_on_simplex(&columns);
        if value.sqrt() <= TRANSVERSE_MARGIN {
            return Err(Error::NotPositivelyIndependent);
        }
        // The min-norm point c of conv(Δ) satisfies ⟨c, α⟩ ≥ ‖c‖² > 0.
        let c = &columns * weights;
        let mean: f64 = m.simple_roots().iter().map(|a| c.dot(a)).sum::<f64>() / m.rank() as f64;
        Ok(TransverseHyperplane {
            functional: c / mean,
        })
    }

    /// Wraps an explicit functional, validating transversality:
    /// f(α) > ε for every simple root.
    pub fn from_functional(functional: Vector, m: &GeometricModule) -> Result<Self> {
        assert_eq!(functional.len(), m.dim(), "functional dimension mismatch");
        for (s, alpha) in m.simple_roots().iter().enumerate() {
            if functional.dot(alpha) <= EPS_CLASS {
                return Err(Error::InvalidSimpleSystem {
                    reason: format!("functional is not positive on simple root {s}"),
                });
            }
        }
        Ok(TransverseHyperplane { functional })
    }

    pub fn functional(&self) -> &Vector {
        &self.functional
    }

    /// f(v).
    pub fn eval(&self, v: &Vector) -> f64 {
        self.functional.dot(v)
    }

    /// v / f(v); errors with `OnKernel` when v is (numerically) on the
    /// direction hyperplane of the cut.
    pub fn normalize(&self, v: &Vector) -> Result<NormalizedPoint> {
        let level = self.eval(v);
        if level.abs() <= EPS_CLASS {
            return Err(Error::OnKernel { tol: EPS_CLASS });
        }
        Ok(NormalizedPoint {
            coords: v / level,
            source: None,
        })
    }

    /// Normalizes a root, tagging provenance.
    pub fn normalize_root(&self, v: &Vector, id: RootId) -> Result<NormalizedPoint> {
        let mut p = self.normalize(v)?;
        p.source = Some(PointSource::Root(id));
        Ok(p)
    }

    /// Re-cuts a point normalized on another transverse hyperplane onto
    /// this one: p / f'(p). Round trips are the identity.
    pub fn rebase(&self, p: &NormalizedPoint) -> Result<NormalizedPoint> {
        let level = self.eval(p.coords());
        if level.abs() <= EPS_CLASS {
            return Err(Error::OnKernel { tol: EPS_CLASS });
        }
        Ok(NormalizedPoint {
            coords: p.coords() / level,
            source: p.source.clone(),
        })
    }
}

/// Barycentric coordinates of a cut point over the normalized simple
/// roots Δ̂. Membership in conv(Δ̂) is all coordinates ≥ −ε. Requires Δ
/// to be a basis.
pub fn simplex_coordinates(
    m: &GeometricModule,
    h: &TransverseHyperplane,
    p: &NormalizedPoint,
) -> Vector {
    assert_eq!(
        m.rank(),
        m.dim(),
        "simplex coordinates require Delta to be a basis"
    );
    // p = Σ c_s α_s  ⇒  p = Σ (c_s f(α_s)) α̂_s, and the weights sum to
    // f(p) = 1.
    let delta_coords = if m.is_standard_basis() {
        p.coords().clone()
    } else {
        let basis = DMatrix::from_columns(m.simple_roots());
        basis
            .lu()
            .solve(p.coords())
            .expect("Delta was declared a basis")
    };
    let mut bary = delta_coords;
    for (s, alpha) in m.simple_roots().iter().enumerate() {
        bary[s] *= h.eval(alpha);
    }
    bary
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::RootTable;
    use crate::spec::CoxeterSpec;
    use nalgebra::DVector;

    #[test]
    fn default_cut_is_all_ones() {
        for rank in [2usize, 3, 5] {
            let labels = (0..rank)
                .map(|i| (0..rank).map(|j| if i == j { 1 } else { 2 }).collect())
                .collect();
            let m = GeometricModule::build(&CoxeterSpec::new(labels).unwrap()).unwrap();
            let h = TransverseHyperplane::default_cut(&m);
            assert_eq!(h.functional(), &Vector::from_element(rank, 1.0));
        }
    }

    #[test]
    fn make_transverse_on_standard_basis_is_uniform() {
        let m = GeometricModule::build(&CoxeterSpec::triangle(3, 3, 3)).unwrap();
        let h = TransverseHyperplane::make_transverse(&m).unwrap();
        let values: Vec<f64> = m.simple_roots().iter().map(|a| h.eval(a)).collect();
        for v in &values {
            assert!((v - values[0]).abs() < 1e-9);
            assert!(*v > 0.0);
        }
    }

    #[test]
    fn make_transverse_on_embedded_rank4_in_3space() {
        // Δ' = {α_s, α_u, t(α_s), t(α_u)} inside the (4,4,4) module.
        let m = GeometricModule::build(&CoxeterSpec::triangle(4, 4, 4)).unwrap();
        let t_of = |v: &Vector| m.reflect_simple(1, v);
        let roots = vec![
            m.simple_root(0).clone(),
            m.simple_root(2).clone(),
            t_of(m.simple_root(0)),
            t_of(m.simple_root(2)),
        ];
        let emb = GeometricModule::embedded(roots, m.ambient_form().clone()).unwrap();
        let h = TransverseHyperplane::make_transverse(&emb).unwrap();
        for alpha in emb.simple_roots() {
            assert!(h.eval(alpha) > TRANSVERSE_MARGIN);
        }
    }

    #[test]
    fn normalize_examples() {
        let m = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let p = h.normalize(&DVector::from_vec(vec![3.0, 1.0])).unwrap();
        assert_eq!(p.coords(), &DVector::from_vec(vec![0.75, 0.25]));

        // ρ_n = (n+1)α + nβ drifts to the midpoint of [α, β].
        let n = 2000.0;
        let p = h.normalize(&DVector::from_vec(vec![n + 1.0, n])).unwrap();
        assert!((p.coords()[0] - 0.5).abs() < 1e-3);

        let err = h
            .normalize(&DVector::from_vec(vec![1.0, -1.0]))
            .unwrap_err();
        assert!(matches!(err, Error::OnKernel { .. }));
    }

    #[test]
    fn rebase_examples() {
        let m = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let p = h.normalize(&DVector::from_vec(vec![0.5, 0.5])).unwrap();

        let same = h.rebase(&p).unwrap();
        assert_eq!(same.coords(), p.coords());

        let h2 =
            TransverseHyperplane::from_functional(DVector::from_vec(vec![2.0, 1.0]), &m).unwrap();
        let q = h2.rebase(&p).unwrap();
        assert!((q.coords() - DVector::from_vec(vec![1.0 / 3.0, 1.0 / 3.0])).amax() < 1e-15);
    }

    #[test]
    fn rebase_round_trip_is_identity() {
        let m = GeometricModule::build(&CoxeterSpec::triangle(4, 4, 4)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let h2 = TransverseHyperplane::from_functional(DVector::from_vec(vec![1.5, 0.7, 2.2]), &m)
            .unwrap();
        let mut state = 0x9e3779b97f4a7c15_u64;
        let mut unit = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            let a = unit();
            let b = unit() * (1.0 - a);
            let p = h
                .normalize(&DVector::from_vec(vec![a, b, 1.0 - a - b]))
                .unwrap();
            let back = h.rebase(&h2.rebase(&p).unwrap()).unwrap();
            assert!((back.coords() - p.coords()).amax() < 1e-12);
        }
    }

    #[test]
    fn simplex_coordinates_examples() {
        let m = GeometricModule::build(&CoxeterSpec::dihedral(0)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let alpha = h.normalize(m.simple_root(0)).unwrap();
        assert_eq!(
            simplex_coordinates(&m, &h, &alpha),
            DVector::from_vec(vec![1.0, 0.0])
        );
        let mid = h.normalize(&DVector::from_vec(vec![2.0, 2.0])).unwrap();
        assert_eq!(
            simplex_coordinates(&m, &h, &mid),
            DVector::from_vec(vec![0.5, 0.5])
        );
    }

    #[test]
    fn normalized_roots_stay_in_the_simplex() {
        let m = GeometricModule::build(&CoxeterSpec::triangle(5, 3, 3)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let table = RootTable::enumerate(&m, 9).unwrap();
        for (id, root) in table.iter() {
            let p = h.normalize_root(root.coords(), id).unwrap();
            let bary = simplex_coordinates(&m, &h, &p);
            assert!(bary.iter().all(|&b| b >= -1e-10));
            assert!((bary.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn residual_identity_on_enumerated_roots() {
        // q(ρ̂)·(|ρ|₁)² = q(ρ) = 1 for every positive root.
        let m = GeometricModule::build(&CoxeterSpec::triangle(2, 3, 7)).unwrap();
        let h = TransverseHyperplane::default_cut(&m);
        let table = RootTable::enumerate(&m, 10).unwrap();
        for (_, root) in table.iter() {
            let l1 = root.l1();
            let hat = h.normalize(root.coords()).unwrap();
            let residual = (m.quadratic(hat.coords()) * l1 * l1 - 1.0).abs();
            assert!(residual <= 1e-9);
        }
    }
}
