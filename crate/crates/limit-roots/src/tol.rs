//! Numerical tolerances used across the crate.
//!
//! All scalars are `f64`. The quantities handled here (Gram entries,
//! root coordinates at desk-scale depths, barycentric coordinates) are
//! low-degree algebraic numbers that doubles resolve far beyond these
//! thresholds, so absolute tolerances are adequate.

/// Classification tolerance: is a value equal to −1, to 0, to −cos(π/m)?
pub const EPS_CLASS: f64 = 1e-9;

/// Relative cutoff for counting an eigenvalue of the Gram matrix as zero,
/// scaled by the largest |eigenvalue|.
pub const EIGEN_ZERO_REL: f64 = 1e-8;

/// Grid size for the root dedup index: coordinates are rounded onto a
/// scaled integer grid of this pitch.
pub const DEDUP_GRID: f64 = 1e-8;

/// Euclidean dedup tolerance for limit points on the cut hyperplane.
pub const POINT_DEDUP: f64 = 1e-8;

/// Coordinate magnitude beyond which enumeration aborts.
pub const COORD_LIMIT: f64 = 1e12;

/// Strict feasibility margin when searching for a transverse functional.
pub const TRANSVERSE_MARGIN: f64 = 1e-6;

/// A normalized point must satisfy |f(p) − 1| below this.
pub const LEVEL_TOL: f64 = 1e-12;
