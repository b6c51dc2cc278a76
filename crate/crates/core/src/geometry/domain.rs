use super::point::Point2;
use super::polygon::ConvexPolygon;
use super::GeometryError;
use std::f64::consts::TAU;

/// The body the fields live on: a disk or a convex polygon.
#[derive(Debug, Clone)]
pub enum Domain {
    Disk { center: Point2, radius: f64 },
    Polygon(ConvexPolygon),
}

/// A sub-arc of the domain boundary in arclength parameterization.
///
/// `start` is measured from the reference point of the boundary loop (angle 0
/// for a disk, first vertex for a polygon), increasing counter-clockwise.
/// `end > start`; a full loop has `end - start == perimeter`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryArc {
    pub start: f64,
    pub end: f64,
}

impl BoundaryArc {
    pub fn new(start: f64, end: f64) -> Result<Self, GeometryError> {
        if !(end > start) {
            return Err(GeometryError::InvalidParams(format!(
                "empty boundary arc [{start}, {end}]"
            )));
        }
        Ok(Self { start, end })
    }

    pub fn length(&self) -> f64 {
        self.end - self.start
    }

    /// Full boundary of the given domain.
    pub fn full(domain: &Domain) -> Self {
        Self {
            start: 0.0,
            end: domain.perimeter(),
        }
    }

    /// Arc of a disk boundary between two polar angles (radians, CCW).
    pub fn from_angles(domain: &Domain, theta_start: f64, theta_end: f64) -> Result<Self, GeometryError> {
        match domain {
            Domain::Disk { radius, .. } => {
                let span = theta_end - theta_start;
                if !(span > 0.0) {
                    return Err(GeometryError::InvalidParams(
                        "arc angles must satisfy theta_end > theta_start".into(),
                    ));
                }
                Self::new(radius * theta_start, radius * theta_end)
            }
            Domain::Polygon(_) => Err(GeometryError::InvalidParams(
                "angle-based arcs are only defined on disk domains".into(),
            )),
        }
    }
}

impl Domain {
    pub fn disk(center: Point2, radius: f64) -> Self {
        Domain::Disk { center, radius }
    }

    pub fn perimeter(&self) -> f64 {
        match self {
            Domain::Disk { radius, .. } => TAU * radius,
            Domain::Polygon(p) => p.perimeter(),
        }
    }

    pub fn contains(&self, p: Point2) -> bool {
        match self {
            Domain::Disk { center, radius } => p.dist(*center) <= *radius,
            Domain::Polygon(poly) => poly.contains(p),
        }
    }

    /// Distance from `p` to the domain boundary (for `p` on either side).
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        match self {
            Domain::Disk { center, radius } => (p.dist(*center) - radius).abs(),
            Domain::Polygon(poly) => poly.boundary_distance(p),
        }
    }

    /// Distance from an inclusion polygon to the domain boundary.
    pub fn polygon_clearance(&self, poly: &ConvexPolygon) -> f64 {
        match self {
            Domain::Disk { center, radius } => {
                let mut max_r: f64 = 0.0;
                for (a, b) in poly.edges() {
                    // For a segment, max distance from center is at an endpoint.
                    max_r = max_r.max(a.dist(*center)).max(b.dist(*center));
                }
                radius - max_r
            }
            Domain::Polygon(outer) => outer.boundary_boundary_distance(poly),
        }
    }

    /// Point on the boundary at arclength `s` (wraps modulo perimeter).
    pub fn boundary_point(&self, s: f64) -> Point2 {
        let per = self.perimeter();
        let s = s.rem_euclid(per);
        match self {
            Domain::Disk { center, radius } => *center + Point2::from_polar(*radius, s / radius),
            Domain::Polygon(poly) => {
                let mut acc = 0.0;
                for (a, b) in poly.edges() {
                    let len = a.dist(b);
                    if s <= acc + len {
                        return a.lerp(b, (s - acc) / len);
                    }
                    acc += len;
                }
                poly.vertex(0)
            }
        }
    }

    /// Outward unit normal at arclength `s`.
    pub fn outward_normal(&self, s: f64) -> Point2 {
        let per = self.perimeter();
        let s = s.rem_euclid(per);
        match self {
            Domain::Disk { radius, .. } => Point2::from_polar(1.0, s / radius),
            Domain::Polygon(poly) => {
                let mut acc = 0.0;
                for (a, b) in poly.edges() {
                    let len = a.dist(b);
                    if s <= acc + len {
                        // CCW boundary: outward normal is the edge direction rotated -90.
                        return -((b - a).normalized().perp());
                    }
                    acc += len;
                }
                -((poly.vertex(1) - poly.vertex(0)).normalized().perp())
            }
        }
    }

    /// Arclength of the boundary point closest to `p` (p assumed near ∂Ω).
    pub fn boundary_arclength_of(&self, p: Point2) -> f64 {
        match self {
            Domain::Disk { center, radius } => {
                let theta = (p - *center).angle().rem_euclid(TAU);
                radius * theta
            }
            Domain::Polygon(poly) => {
                let mut best = (f64::INFINITY, 0.0);
                let mut acc = 0.0;
                for (a, b) in poly.edges() {
                    let len = a.dist(b);
                    let ab = b - a;
                    let t = ((p - a).dot(ab) / ab.norm_sq()).clamp(0.0, 1.0);
                    let d = p.dist(a + ab * t);
                    if d < best.0 {
                        best = (d, acc + t * len);
                    }
                    acc += len;
                }
                best.1
            }
        }
    }

    /// Closed loop of boundary nodes with spacing at most `target`, placed
    /// deterministically. Polygon vertices always appear as nodes.
    pub fn discretize_boundary(&self, target: f64) -> Vec<Point2> {
        match self {
            Domain::Disk { center, radius } => {
                let n = ((TAU * radius / target).ceil() as usize).max(8);
                (0..n)
                    .map(|i| *center + Point2::from_polar(*radius, TAU * i as f64 / n as f64))
                    .collect()
            }
            Domain::Polygon(poly) => {
                let mut nodes = Vec::new();
                for (a, b) in poly.edges() {
                    let len = a.dist(b);
                    let n = ((len / target).ceil() as usize).max(1);
                    for i in 0..n {
                        nodes.push(a.lerp(b, i as f64 / n as f64));
                    }
                }
                nodes
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_boundary_parameterization() {
        let d = Domain::disk(Point2::new(1.0, 0.0), 2.0);
        let p = d.boundary_point(0.0);
        assert!((p.x - 3.0).abs() < 1e-15 && p.y.abs() < 1e-15);
        let quarter = d.perimeter() / 4.0;
        let q = d.boundary_point(quarter);
        assert!((q.x - 1.0).abs() < 1e-12 && (q.y - 2.0).abs() < 1e-12);
        let n = d.outward_normal(quarter);
        assert!((n.x).abs() < 1e-12 && (n.y - 1.0).abs() < 1e-12);
        assert!((d.boundary_arclength_of(q) - quarter).abs() < 1e-12);
    }

    #[test]
    fn polygon_boundary_walk_and_normals() {
        let sq = ConvexPolygon::square(Point2::new(0.0, 0.0), 2.0);
        let d = Domain::Polygon(sq);
        assert!((d.perimeter() - 8.0).abs() < 1e-15);
        // Arclength 1.0 is the midpoint of the bottom edge.
        let p = d.boundary_point(1.0);
        assert!(p.x.abs() < 1e-14 && (p.y + 1.0).abs() < 1e-14);
        let n = d.outward_normal(1.0);
        assert!(n.x.abs() < 1e-14 && (n.y + 1.0).abs() < 1e-14);
    }

    #[test]
    fn clearance_of_square_in_disk() {
        let d = Domain::disk(Point2::new(0.0, 0.0), 10.0);
        let sq = ConvexPolygon::square(Point2::new(0.0, 0.0), 2.0);
        let expected = 10.0 - 2.0f64.sqrt();
        assert!((d.polygon_clearance(&sq) - expected).abs() < 1e-12);
    }
}
