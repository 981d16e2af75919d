//! Cross-module invariants: the projective-action identities, orbit
//! structure of the limit families, ordering on the dihedral segment,
//! and an independent segment oracle for visibility.

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use limit_roots::{
    act, act_vector, canonical_module, canonical_module_from_ids, dihedral_subsystem,
    e2_circ_points, e2_points, parabolic_restriction, verify_phi_bijection, CoxeterSpec,
    DihedralKind, GeometricModule, LimitPoint, Provenance, RootId, RootTable, TransverseHyperplane,
    Vector, Word,
};

fn build(spec: CoxeterSpec, depth: u32) -> (GeometricModule, TransverseHyperplane, RootTable) {
    let m = GeometricModule::build(&spec).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let table = RootTable::enumerate(&m, depth).unwrap();
    (m, h, table)
}

fn rank5_counterexample() -> CoxeterSpec {
    CoxeterSpec::new(vec![
        vec![1, 0, 2, 2, 2],
        vec![0, 1, 3, 2, 2],
        vec![2, 3, 1, 3, 2],
        vec![2, 2, 3, 1, 0],
        vec![2, 2, 2, 0, 1],
    ])
    .unwrap()
}

/// The rank-5 orbit (s_α s_β s_ε s_δ)ⁿ(γ) has closed form
/// (n²+n, n², 1, n², n²+n): the block element is unipotent with a
/// size-3 Jordan block, so the normalized orbit converges to
/// (1/4,1/4,0,1/4,1/4) at rate Θ(1/n).
#[test]
fn counterexample_orbit_closed_form_and_convergence() {
    let m = GeometricModule::build(&rank5_counterexample()).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let block = Word::new(vec![0, 1, 4, 3]);
    let mut v = m.simple_root(2).clone();
    for n in 1..=40u64 {
        v = act_vector(&m, &block, &v);
        let nf = n as f64;
        let expect = DVector::from_vec(vec![nf * nf + nf, nf * nf, 1.0, nf * nf, nf * nf + nf]);
        assert!(
            (&v - &expect).amax() < 1e-9 * (1.0 + nf * nf),
            "closed form broken at n = {n}"
        );
    }
    // Convergence to the face point at a feasible n (coordinates stay
    // exact integers below 2^53).
    let n = 500_000.0_f64;
    let big = DVector::from_vec(vec![n * n + n, n * n, 1.0, n * n, n * n + n]);
    let hat = h.normalize(&big).unwrap();
    let target = DVector::from_vec(vec![0.25, 0.25, 0.0, 0.25, 0.25]);
    let distance = (hat.coords() - &target).norm();
    assert!(distance <= 1e-6, "distance at n = 5e5 is {distance:e}");

    // And the distance at n = 40 is ~6.2e−3, pinning the rate.
    let n = 40.0_f64;
    let forty = DVector::from_vec(vec![n * n + n, n * n, 1.0, n * n, n * n + n]);
    let hat40 = h.normalize(&forty).unwrap();
    let d40 = (hat40.coords() - &target).norm();
    assert!((d40 - 6.174e-3).abs() < 1e-5, "rate check: {d40:e}");
}

/// E₂ is the W-orbit of E₂°: every pair point maps into E₂° under the
/// inverse witness word of its first root.
#[test]
fn e2_is_the_orbit_of_e2_circle() {
    let (m, h, table) = build(CoxeterSpec::triangle(4, 4, 4), 8);
    let points = e2_points(&m, &h, &table, 4);
    assert!(!points.is_empty());
    let circle: Vec<Vector> = e2_circ_points(&m, &h, &table)
        .into_iter()
        .map(|p| p.coords().clone())
        .collect();
    for point in &points {
        let (id1, _) = match point.provenance() {
            Provenance::RootPair(i, j) => (*i, *j),
            _ => unreachable!(),
        };
        let (witness, _) = table.witness_word(id1);
        let to_simple = Word::new(witness.clone()).inverse();
        // w(ρ₁) is simple, so w·x lies on a line through a simple root.
        let moved = act(&m, &h, &to_simple, &point.as_normalized()).unwrap();
        let nearest = circle
            .iter()
            .map(|c| (c - moved.coords()).norm())
            .fold(f64::INFINITY, f64::min);
        assert!(
            nearest <= 1e-8,
            "orbit image missed E2-circle by {nearest:e}"
        );
        // Round trip back to the original point.
        let back = act(&m, &h, &Word::new(witness), &moved).unwrap();
        assert!((back.coords() - point.coords()).amax() <= 1e-8);
    }
}

/// act(s_ρ, x) = x exactly when B(ρ, x) = 0, including conjugated
/// (non-simple) reflections.
#[test]
fn fixed_point_criterion() {
    let (m, h, table) = build(CoxeterSpec::triangle(4, 4, 4), 6);
    let points = e2_points(&m, &h, &table, 4);
    for point in points.iter().take(60) {
        for s in 0..3 {
            let word = Word::new(vec![s]);
            let image = act(&m, &h, &word, &point.as_normalized()).unwrap();
            let fixed = (image.coords() - point.coords()).amax() <= 1e-8;
            let orthogonal = m.simple_pairing(s, point.coords()).abs() <= 1e-9;
            assert_eq!(fixed, orthogonal, "simple fixed-point mismatch");
        }
        // A conjugated reflection s_ρ with ρ = s₀(α₁): word 0 1 0.
        let rho = m.reflect_simple(0, m.simple_root(1));
        let word = Word::new(vec![0, 1, 0]);
        let image = act(&m, &h, &word, &point.as_normalized()).unwrap();
        let fixed = (image.coords() - point.coords()).amax() <= 1e-8;
        let orthogonal = m.bilinear(&rho, point.coords()).abs() <= 1e-9;
        assert_eq!(fixed, orthogonal, "conjugated fixed-point mismatch");
    }
}

/// On the dihedral segment the alternating orbit of normalized roots
/// marches monotonically from α toward the limit point visible from α,
/// with depth increasing along the way.
#[test]
fn rank2_alternating_orbit_is_monotone() {
    for (spec, limit_alpha) in [
        (CoxeterSpec::dihedral(0), 0.5),
        (
            CoxeterSpec::dihedral_with_b(-1.01),
            (1.01 + 0.0201_f64.sqrt()) / (2.01 + 0.0201_f64.sqrt()),
        ),
    ] {
        let (m, h, table) = build(spec, 12);
        // α, s_α·β, s_α s_β·α, s_α s_β s_α·β, …
        let mut previous = 1.0_f64;
        for k in 1..=10usize {
            let letters: Vec<usize> = (0..k).map(|i| i % 2).collect();
            let seed = if k % 2 == 1 { 1 } else { 0 };
            let root = act_vector(&m, &Word::new(letters), m.simple_root(seed));
            let id = table.find(&root).expect("alternating roots are enumerated");
            assert_eq!(
                table.root(id).depth() as usize,
                k + 1,
                "depth along the chain"
            );
            let alpha_coord = h.normalize(&root).unwrap().coords()[0];
            assert!(
                alpha_coord < previous - 1e-12,
                "not strictly monotone at step {k}"
            );
            assert!(alpha_coord > limit_alpha, "crossed the limit at step {k}");
            previous = alpha_coord;
        }
        assert!(
            previous - limit_alpha < 0.05,
            "chain should approach the limit"
        );
    }
}

/// Independent segment oracle for visibility: x is visible from ρ̂ iff
/// the segment [ρ̂, x] meets the quadric slice only at x.
#[test]
fn visibility_matches_the_segment_oracle() {
    let (m, h, table) = build(CoxeterSpec::triangle(4, 4, 4), 6);
    let points = e2_points(&m, &h, &table, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let ids: Vec<_> = table.ids().collect();
    let mut agreements = 0usize;
    let mut seen_invisible = 0usize;
    for _ in 0..400 {
        let x = &points[rng.gen_range(0..points.len())];
        let rho = table.root(ids[rng.gen_range(0..ids.len())]).coords();
        let v = h.normalize(rho).unwrap();
        // q along u(t) = (1−t)·v + t·x is quadratic with a root at t = 1;
        // visible iff the other root is outside [0, 1).
        let diff = x.coords() - v.coords();
        let a = m.quadratic(&diff);
        let _b = m.bilinear(v.coords(), &diff);
        let c = m.quadratic(v.coords());
        // t = 1 is a root; factor it out: a·t² + 2b·t + c = a(t−1)(t−c/a).
        let predicted = limit_roots::visible(&m, rho, x);
        let other_root = if a.abs() > 1e-12 {
            c / a
        } else {
            f64::INFINITY
        };
        let oracle = !(-1e-9..1.0 - 1e-9).contains(&other_root);
        assert_eq!(predicted, oracle, "visibility mismatch");
        agreements += 1;
        if !predicted {
            seen_invisible += 1;
        }
    }
    assert_eq!(agreements, 400);
    assert!(
        seen_invisible > 0,
        "the trial set should exercise both branches"
    );
}

/// The per-depth maximum of |q(ρ̂)| strictly decreases from depth 2 on
/// irreducible infinite systems: normalized roots sink into the cone.
#[test]
fn normalized_q_max_is_strictly_decreasing_per_depth() {
    for spec in [
        CoxeterSpec::triangle(5, 3, 3),
        CoxeterSpec::triangle(2, 3, 7),
        CoxeterSpec::triangle(4, 4, 4),
        CoxeterSpec::triangle(3, 3, 3),
    ] {
        let (m, h, table) = build(spec, 10);
        let mut previous = f64::INFINITY;
        for depth in 2..=10u32 {
            let level_max = table
                .at_depth(depth)
                .iter()
                .map(|&id| {
                    let hat = h.normalize(table.root(id).coords()).unwrap();
                    m.quadratic(hat.coords()).abs()
                })
                .fold(0.0_f64, f64::max);
            assert!(level_max < previous, "depth {depth}");
            previous = level_max;
        }
    }
}

/// The golden-pair embedding of the (5,3,3) group: φ carries the rank-2
/// canonical module bijectively onto the subsystem, checked to source
/// depth 8 (images reach parent depth 24).
#[test]
fn golden_pair_phi_bijection_to_depth_8() {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let (m, _, table) = build(CoxeterSpec::triangle(5, 3, 3), 24);
    let roots = vec![
        m.simple_root(2).clone(),
        DVector::from_vec(vec![golden, golden, 0.0]),
    ];
    let emb = canonical_module(&m, &roots).unwrap();
    let report = verify_phi_bijection(&emb, 8, &table).unwrap();
    assert_eq!(report.checked, 16);
    assert!(report.is_clean(), "{} mismatches", report.mismatches());
}

/// Every pair of stored roots classifies into exactly one dihedral
/// kind, consistently with |B| and with the limit-point count 0/1/2.
#[test]
fn dihedral_classification_trichotomy() {
    let (m, h, table) = build(CoxeterSpec::triangle(5, 3, 3), 4);
    let ids: Vec<RootId> = table.ids().collect();
    let mut counts = [0usize; 3];
    for (k, &a) in ids.iter().enumerate() {
        for &b in &ids[k + 1..] {
            let info = dihedral_subsystem(&m, &h, &table, a, b).unwrap();
            let abs = info.b_value.abs();
            match info.kind {
                DihedralKind::Finite => {
                    assert!(abs < 1.0 - 1e-9);
                    assert_eq!(info.limit_points.len(), 0);
                    assert!(info.canonical_simples.is_none());
                    counts[0] += 1;
                }
                DihedralKind::Affine => {
                    assert!((abs - 1.0).abs() <= 1e-9);
                    assert_eq!(info.limit_points.len(), 1);
                    counts[1] += 1;
                }
                DihedralKind::InfiniteNonAffine => {
                    assert!(abs > 1.0 + 1e-9);
                    assert_eq!(info.limit_points.len(), 2);
                    assert!(info.canonical_simples.is_some());
                    counts[2] += 1;
                }
            }
        }
    }
    assert!(counts[0] > 0 && counts[2] > 0, "kinds seen: {counts:?}");
}

/// Normalized roots of a standard parabolic subsystem live on its face:
/// barycentric coordinates vanish outside the index set.
#[test]
fn parabolic_roots_stay_on_their_face() {
    let m = GeometricModule::build(&rank5_counterexample()).unwrap();
    let h = TransverseHyperplane::default_cut(&m);
    let restriction = parabolic_restriction(&m, &[0, 1, 3, 4]).unwrap();
    let sub_table = RootTable::enumerate(restriction.source(), 5).unwrap();
    for (_, root) in sub_table.iter() {
        let lifted = restriction.map(root.coords());
        let hat = h.normalize(&lifted).unwrap();
        assert!(
            hat.coords()[2].abs() <= 1e-12,
            "gamma coordinate must vanish"
        );
        assert!(hat.coords().iter().all(|&c| c >= -1e-12));
    }
}

/// The id-based subsystem interface matches the explicit-vector one.
#[test]
fn canonical_module_accepts_root_indices() {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let (m, _, table) = build(CoxeterSpec::triangle(5, 3, 3), 4);
    let rho = table
        .find(&DVector::from_vec(vec![golden, golden, 0.0]))
        .unwrap();
    let by_id = canonical_module_from_ids(&m, &table, &[RootId(2), rho]).unwrap();
    assert!((by_id.source().gram()[(0, 1)] + golden).abs() < 1e-12);
}

/// Every limit point of a subsystem passes the parent's invariants:
/// isotropic, on the cut, inside the simplex.
#[test]
fn subsystem_limit_points_satisfy_parent_invariants() {
    let (m, h, table) = build(CoxeterSpec::triangle(5, 3, 3), 6);
    let points = e2_points(&m, &h, &table, 6);
    assert!(!points.is_empty());
    for p in &points {
        assert!(p.q_residual(&m) <= 1e-9);
        assert!((h.eval(p.coords()) - 1.0).abs() <= 1e-12);
        assert!(p.coords().iter().all(|&c| c >= -1e-9));
    }
    let _ = LimitPoint::from_coords(points[0].coords().clone());
}
