//! Numerical laboratory for the single-measurement inverse conductivity
//! problem with convex polygonal inclusions.
//!
//! The crate covers the full computational chain at desk scale:
//!
//! * convex polygon arithmetic, admissibility classes, Hausdorff distance
//!   and the corner/contour frames used by probe identities ([`geometry`]);
//! * finite-element solution of the Neumann transmission problem on
//!   corner-graded interface-fitted meshes ([`mesh`], [`fem`]);
//! * corner singularity exponents and singular-coefficient extraction
//!   ([`corner`]);
//! * complex-exponential probes, the boundary/contour integral identity
//!   and its decay bounds ([`cgo`]);
//! * three-sphere inequalities and propagation of smallness ([`smallness`]);
//! * end-to-end stability sweeps and nested contrast recovery
//!   ([`experiments`]).

pub mod cgo;
pub mod corner;
pub mod experiments;
pub mod fem;
pub mod geometry;
pub mod mesh;
pub mod quad;
pub mod smallness;

pub use geometry::{ConvexPolygon, Domain, Point2};
