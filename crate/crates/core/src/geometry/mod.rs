//! Convex polygon arithmetic, admissibility validation, Hausdorff distance,
//! and the corner/contour frames used by the probe identities.
//!
//! All types are immutable after construction and all operations are pure,
//! so values can be shared read-only across concurrent sweep workers.

mod class_d;
mod domain;
mod frame;
mod hausdorff;
mod nested;
mod point;
mod polygon;

pub use class_d::{hull_clearance_check, validate_class_d, ClassDParams, ClassDReport, Clause};
pub use domain::{BoundaryArc, Domain};
pub use frame::{build_sector_frame, ArcSegment, ContourPanel, Segment, SectorFrame};
pub use hausdorff::{extremal_vertex, hausdorff_distance};
pub use nested::NestedGeometry;
pub use point::{point_segment_distance, segment_segment_distance, Point2};
pub use polygon::{convex_hull, ConvexPolygon};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("polygon not strictly convex at vertex {index}: cross product {cross:e} <= tol {tol:e}")]
    NotStrictlyConvex { index: usize, cross: f64, tol: f64 },
    #[error("polygons are identical point sets; no extremal vertex exists")]
    NoExtremalVertex,
    #[error("probe frequency too low: tau {tau} < tau0 {tau0}")]
    FrequencyTooLow { tau: f64, tau0: f64 },
    #[error("inconsistent geometry: {0}")]
    InconsistentGeometry(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}
