//! Geometric modules: a simple system Δ in a real vector space carrying a
//! symmetric bilinear form B with B(α, α) = 1 on simple roots and
//! off-diagonal values −cos(π/m) or ≤ −1.
//!
//! The reflection attached to a non-isotropic vector α is
//!
//! ```text
//! s_α(v) = v − 2 B(α, v) / B(α, α) · α
//! ```
//!
//! and the group generated by the simple reflections acts on the module
//! preserving B. A module built from a label matrix has Δ equal to the
//! standard basis; embedded modules (subsystems of a larger group) may
//! have more simple roots than ambient dimensions, as long as Δ stays
//! positively independent.

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};
use crate::numeric::min_norm_on_simplex;
use crate::spec::{CoxeterSpec, INFINITE};
use crate::tol::{EIGEN_ZERO_REL, EPS_CLASS};

/// Coordinate vector in the ambient basis of a module.
pub type Vector = DVector<f64>;

/// Eigenvalue sign counts of the form, plus a basis of its radical V⊥.
#[derive(Debug, Clone)]
pub struct SignatureReport {
    pub n_positive: usize,
    pub n_negative: usize,
    pub n_zero: usize,
    pub radical_basis: Vec<Vector>,
}

impl SignatureReport {
    /// Positive semidefinite but not definite.
    pub fn is_affine(&self) -> bool {
        self.n_negative == 0 && self.n_zero > 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_negative == 0 && self.n_zero == 0
    }
}

/// A simple system together with the matrix of B.
#[derive(Debug, Clone)]
pub struct GeometricModule {
    rank: usize,
    dim: usize,
    simple_roots: Vec<Vector>,
    /// n×n matrix of B(α_s, α_t).
    gram: DMatrix<f64>,
    /// d×d matrix of B in ambient coordinates.
    ambient: DMatrix<f64>,
    /// Cached `ambient · α_s`, so B(α_s, v) is a plain dot product.
    form_rows: Vec<Vector>,
    standard: bool,
}

impl GeometricModule {
    /// Canonical module of a label matrix: Δ is the standard basis and
    /// gram[s][t] = −cos(π/m_{s,t}) for finite labels, −1 (or the
    /// override) for ∞ labels.
    pub fn build(spec: &CoxeterSpec) -> Result<Self> {
        spec.validate()?;
        let n = spec.rank;
        let mut gram = DMatrix::identity(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let m = spec.labels[i][j];
                    gram[(i, j)] = match m {
                        INFINITE => -1.0,
                        2 => 0.0,
                        _ => -(std::f64::consts::PI / m as f64).cos(),
                    };
                }
            }
        }
        for ov in &spec.b_overrides {
            gram[(ov.i, ov.j)] = ov.value;
            gram[(ov.j, ov.i)] = ov.value;
        }
        Self::from_gram(gram)
    }

    /// Module with Δ declared a basis and B given by a valid gram matrix.
    pub fn from_gram(gram: DMatrix<f64>) -> Result<Self> {
        let n = gram.nrows();
        assert_eq!(n, gram.ncols(), "gram matrix must be square");
        validate_gram(&gram)?;
        let simple_roots: Vec<Vector> = (0..n)
            .map(|s| {
                let mut v = DVector::zeros(n);
                v[s] = 1.0;
                v
            })
            .collect();
        let form_rows = (0..n).map(|s| gram.row(s).transpose()).collect();
        Ok(GeometricModule {
            rank: n,
            dim: n,
            simple_roots,
            ambient: gram.clone(),
            gram,
            form_rows,
            standard: true,
        })
    }

    /// Module with an explicit simple system inside an ambient space
    /// carrying the form `ambient`. Used for subsystems whose simple
    /// roots are not a basis (the rank may exceed the dimension).
    pub fn embedded(simple_roots: Vec<Vector>, ambient: DMatrix<f64>) -> Result<Self> {
        let n = simple_roots.len();
        let d = ambient.nrows();
        assert_eq!(d, ambient.ncols(), "ambient form must be square");
        assert!(n > 0, "simple system must be nonempty");
        for v in &simple_roots {
            assert_eq!(v.len(), d, "simple root dimension mismatch");
        }
        let mut gram = DMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gram[(i, j)] = (simple_roots[i].transpose() * &ambient * &simple_roots[j])[(0, 0)];
            }
        }
        for i in 0..n {
            if (gram[(i, i)] - 1.0).abs() > EPS_CLASS {
                return Err(Error::InvalidSimpleSystem {
                    reason: format!("B(alpha_{i}, alpha_{i}) = {} != 1", gram[(i, i)]),
                });
            }
        }
        validate_gram(&gram)?;
        let columns = DMatrix::from_columns(&simple_roots);
        let (_, value) = min_norm_on_simplex(&columns);
        if value <= 1e-12 {
            return Err(Error::NotPositivelyIndependent);
        }
        let form_rows = simple_roots.iter().map(|a| &ambient * a).collect();
        Ok(GeometricModule {
            rank: n,
            dim: d,
            simple_roots,
            gram,
            ambient,
            form_rows,
            standard: false,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// True when Δ is the standard basis of the ambient space.
    pub fn is_standard_basis(&self) -> bool {
        self.standard
    }

    pub fn simple_root(&self, s: usize) -> &Vector {
        &self.simple_roots[s]
    }

    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    pub fn ambient_form(&self) -> &DMatrix<f64> {
        &self.ambient
    }

    /// B(u, v) in ambient coordinates.
    pub fn bilinear(&self, u: &Vector, v: &Vector) -> f64 {
        assert_eq!(u.len(), self.dim, "dimension mismatch");
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (u.transpose() * &self.ambient * v)[(0, 0)]
    }

    /// q(v) = B(v, v).
    pub fn quadratic(&self, v: &Vector) -> f64 {
        self.bilinear(v, v)
    }

    /// B(α_s, v) for a simple root, via the cached form row.
    pub fn simple_pairing(&self, s: usize, v: &Vector) -> f64 {
        self.form_rows[s].dot(v)
    }

    /// Reflection in an arbitrary non-isotropic mirror.
    pub fn reflect(&self, mirror: &Vector, v: &Vector) -> Result<Vector> {
        let qm = self.quadratic(mirror);
        if qm.abs() <= EPS_CLASS {
            return Err(Error::IsotropicMirror { tol: EPS_CLASS });
        }
        let c = 2.0 * self.bilinear(mirror, v) / qm;
        Ok(v - mirror * c)
    }

    /// Reflection in the simple root α_s (q(α_s) = 1 by construction).
    pub fn reflect_simple(&self, s: usize, v: &Vector) -> Vector {
        let c = 2.0 * self.form_rows[s].dot(v);
        v - &self.simple_roots[s] * c
    }

    /// Eigenvalue signs of the form in ambient coordinates; eigenvalues
    /// below `EIGEN_ZERO_REL` of the spectral radius count as zero and
    /// their eigenvectors span the radical.
    pub fn signature(&self) -> SignatureReport {
        let eigen = SymmetricEigen::new(self.ambient.clone());
        let max_abs = eigen
            .eigenvalues
            .iter()
            .fold(0.0_f64, |acc, &l| acc.max(l.abs()));
        let tol = EIGEN_ZERO_REL * max_abs;
        let mut report = SignatureReport {
            n_positive: 0,
            n_negative: 0,
            n_zero: 0,
            radical_basis: Vec::new(),
        };
        for (i, &l) in eigen.eigenvalues.iter().enumerate() {
            if l.abs() <= tol || max_abs == 0.0 {
                report.n_zero += 1;
                report
                    .radical_basis
                    .push(eigen.eigenvectors.column(i).into());
            } else if l > 0.0 {
                report.n_positive += 1;
            } else {
                report.n_negative += 1;
            }
        }
        report
    }

    /// Connected components of the simple-root graph with edges where
    /// the gram entry is nonzero. A singleton partition means the system
    /// is irreducible.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank;
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut part = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(i) = stack.pop() {
                part.push(i);
                for (j, visited) in seen.iter_mut().enumerate() {
                    if !*visited && self.gram[(i, j)].abs() > EPS_CLASS {
                        *visited = true;
                        stack.push(j);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn is_irreducible(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff no nonzero nonnegative combination of simple roots lies
    /// in the radical V⊥, i.e. V⊥ ∩ cone(Δ) = {0}. For an irreducible
    /// system this fails exactly in the affine case.
    pub fn radical_cone_trivial(&self) -> bool {
        let sig = self.signature();
        if sig.n_zero == 0 {
            return true;
        }
        // v in V⊥ iff ambient·v = 0; test min over the simplex of
        // ‖ambient · Δ · λ‖².
        let columns = DMatrix::from_columns(&self.simple_roots);
        let m = &self.ambient * columns;
        let (_, value) = min_norm_on_simplex(&m);
        value > 1e-12
    }
}

/// Checks Δ-pairing values: each off-diagonal entry must be −cos(π/m)
/// for an integer m ≥ 2 (within `EPS_CLASS`) or ≤ −1. Values in
/// [−1−ε, −1] are treated as exactly −1.
fn validate_gram(gram: &DMatrix<f64>) -> Result<()> {
    let n = gram.nrows();
    for i in 0..n {
        if (gram[(i, i)] - 1.0).abs() > EPS_CLASS {
            return Err(Error::InvalidGramEntry {
                i,
                j: i,
                value: gram[(i, i)],
            });
        }
        for j in (i + 1)..n {
            if (gram[(i, j)] - gram[(j, i)]).abs() > EPS_CLASS {
                return Err(Error::AsymmetricLabels { i, j });
            }
            let x = gram[(i, j)];
            if x <= -1.0 + EPS_CLASS {
                continue;
            }
            if !is_minus_cos_fraction(x) {
                return Err(Error::InvalidGramEntry { i, j, value: x });
            }
        }
    }
    Ok(())
}

fn is_minus_cos_fraction(x: f64) -> bool {
    if x > EPS_CLASS || x <= -1.0 {
        return false;
    }
    // x = −cos(π/m) for some integer m ≥ 2?
    let m = (std::f64::consts::PI / (-x).acos()).round();
    m >= 2.0 && (x + (std::f64::consts::PI / m).cos()).abs() <= EPS_CLASS
}
