//! Root systems of infinite Coxeter groups: based geometric modules,
//! breadth-first enumeration of positive roots by depth, normalization
//! onto transverse hyperplanes, and the limit points of normalized
//! roots on the isotropic cone of the bilinear form.
//!
//! A group is described by its label matrix (with optional B-overrides
//! on ∞ edges); the crate builds the geometric module, enumerates Φ⁺,
//! cuts root rays by an affine hyperplane, and computes the dense
//! limit-point families E₂ (all root pairs spanning an infinite
//! dihedral reflection subgroup) and E₂° (pairs through a simple root),
//! together with the induced projective action of the group on the cut.
//!
//! ```
//! use limit_roots::{
//!     CoxeterSpec, GeometricModule, RootTable, TransverseHyperplane, e2_points,
//! };
//!
//! let spec = CoxeterSpec::triangle(4, 4, 4);
//! let module = GeometricModule::build(&spec).unwrap();
//! let cut = TransverseHyperplane::default_cut(&module);
//! let table = RootTable::enumerate(&module, 6).unwrap();
//! let limits = e2_points(&module, &cut, &table, 6);
//! assert!(limits.iter().all(|p| p.q_residual(&module) <= 1e-9));
//! ```
//!
//! See the `examples/` directory for one runnable program per
//! capability, and the `limit-roots` binary for the command-line
//! surface (`enum`, `limits`, `classify`, `audit`, `render`).

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod export;
pub mod limits;
pub mod module;
pub mod normalize;
mod numeric;
pub mod render;
pub mod spec;
pub mod subsystems;
pub mod tol;

pub use enumerate::{
    audit_depth_norm, kappa_lambda, DepthNormViolation, KappaReport, Root, RootId, RootTable,
};
pub use error::{Error, Result};
pub use limits::{
    act, act_vector, conic_sample, directed_hausdorff, e2_circ_points, e2_points, f0_sample,
    generating_subsets, line_quadric_intersect, quadric_polyline_samples, visible,
    IntersectionResult, LimitPoint, Provenance, Word,
};
pub use module::{GeometricModule, SignatureReport, Vector};
pub use normalize::{simplex_coordinates, NormalizedPoint, PointSource, TransverseHyperplane};
pub use render::{render_svg, LimitStyle, Scene, SvgOptions};
pub use spec::{BOverride, CoxeterSpec, INFINITE};
pub use subsystems::{
    canonical_module, canonical_module_from_ids, dihedral_subsystem, parabolic_restriction,
    reducible_split, verify_phi_bijection, DihedralInfo, DihedralKind, PhiReport,
    SubsystemEmbedding,
};
