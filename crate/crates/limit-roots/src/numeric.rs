//! Small numeric primitives shared by the geometry modules.

use nalgebra::{DMatrix, DVector};

/// Minimizes ‖Mλ‖² over the standard simplex {λ ≥ 0, Σλ = 1}.
///
/// Returns the minimizer and the attained value. Solved exactly by
/// enumerating support sets: the optimum restricted to its support solves
/// the equality-constrained stationarity system, so scanning every
/// support and keeping the best feasible candidate finds the global
/// minimum. Intended for the small simplex dimensions that arise here
/// (rank ≤ ~16).
pub fn min_norm_on_simplex(m: &DMatrix<f64>) -> (DVector<f64>, f64) {
    let k = m.ncols();
    assert!((1..=20).contains(&k), "simplex QP limited to <= 20 columns");
    let p = m.transpose() * m;

    let objective = |lambda: &DVector<f64>| {
        let v = m * lambda;
        v.dot(&v)
    };

    let mut best: Option<(DVector<f64>, f64)> = None;
    let mut consider = |lambda: DVector<f64>| {
        let val = objective(&lambda);
        if best.as_ref().is_none_or(|(_, b)| val < *b) {
            best = Some((lambda, val));
        }
    };

    // Vertices first; always feasible.
    for i in 0..k {
        let mut lambda = DVector::zeros(k);
        lambda[i] = 1.0;
        consider(lambda);
    }

    for mask in 1u32..(1u32 << k) {
        let support: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let s = support.len();
        if s < 2 {
            continue;
        }
        // KKT system on the support: [P_SS 1; 1ᵀ 0] [λ; μ] = [0; 1].
        let mut kkt = DMatrix::zeros(s + 1, s + 1);
        for (a, &ia) in support.iter().enumerate() {
            for (b, &ib) in support.iter().enumerate() {
                kkt[(a, b)] = p[(ia, ib)];
            }
            kkt[(a, s)] = 1.0;
            kkt[(s, a)] = 1.0;
        }
        let mut rhs = DVector::zeros(s + 1);
        rhs[s] = 1.0;
        let sol = match kkt.clone().lu().solve(&rhs) {
            Some(sol) => sol,
            None => match kkt.svd(true, true).solve(&rhs, 1e-12) {
                Ok(sol) => sol,
                Err(_) => continue,
            },
        };
        if (0..s).any(|a| sol[a] < -1e-12) {
            continue;
        }
        let mut lambda = DVector::zeros(k);
        for (a, &ia) in support.iter().enumerate() {
            lambda[ia] = sol[a].max(0.0);
        }
        let total: f64 = lambda.iter().sum();
        if total <= 0.0 {
            continue;
        }
        lambda /= total;
        consider(lambda);
    }

    best.expect("at least the vertices were considered")
}

/// Orthonormal basis of the hyperplane {v : ⟨f, v⟩ = 0} in R^d.
pub fn kernel_basis(f: &DVector<f64>) -> Vec<DVector<f64>> {
    let d = f.len();
    let fn2 = f.dot(f);
    assert!(fn2 > 0.0, "functional must be nonzero");
    let mut basis: Vec<DVector<f64>> = Vec::with_capacity(d - 1);
    for i in 0..d {
        let mut v = DVector::zeros(d);
        v[i] = 1.0;
        v -= f * (f[i] / fn2);
        for b in &basis {
            let c = b.dot(&v);
            v -= b * c;
        }
        let n = v.norm();
        if n > 1e-10 {
            basis.push(v / n);
        }
        if basis.len() == d - 1 {
            break;
        }
    }
    basis
}
