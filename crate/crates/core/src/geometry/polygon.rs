use super::point::{point_segment_distance, segment_segment_distance, Point2};
use super::GeometryError;

/// A strictly convex polygon with counter-clockwise vertex order.
///
/// Strict convexity means every cross product of consecutive edge vectors is
/// positive beyond a scale-relative tolerance, so orientation and interior
/// angles are unambiguous. Instances are immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

/// Convexity tolerance relative to the squared bounding-box scale.
const CONVEXITY_REL_TOL: f64 = 1e-12;

impl ConvexPolygon {
    /// Builds a polygon from CCW-ordered vertices, rejecting anything that is
    /// not strictly convex.
    pub fn new(vertices: Vec<Point2>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::DegenerateGeometry(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::DegenerateGeometry(
                "non-finite vertex coordinate".into(),
            ));
        }
        let scale = bbox_scale(&vertices);
        let tol = CONVEXITY_REL_TOL * scale * scale;
        let n = vertices.len();
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            if a.dist(b) == 0.0 {
                return Err(GeometryError::DegenerateGeometry(format!(
                    "repeated vertex at index {i}"
                )));
            }
            let cross = (b - a).cross(c - b);
            if cross <= tol {
                return Err(GeometryError::NotStrictlyConvex {
                    index: i,
                    cross,
                    tol,
                });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i % self.vertices.len()]
    }

    /// Edges as ordered vertex pairs, CCW.
    pub fn edges(&self) -> impl Iterator<Item = (Point2, Point2)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn edge_lengths(&self) -> impl Iterator<Item = f64> + '_ {
        self.edges().map(|(a, b)| a.dist(b))
    }

    pub fn min_edge_length(&self) -> f64 {
        self.edge_lengths().fold(f64::INFINITY, f64::min)
    }

    pub fn perimeter(&self) -> f64 {
        self.edge_lengths().sum()
    }

    /// Interior angle at vertex `i`, in radians.
    pub fn interior_angle(&self, i: usize) -> f64 {
        let n = self.vertices.len();
        let prev = self.vertices[(i + n - 1) % n];
        let v = self.vertices[i];
        let next = self.vertices[(i + 1) % n];
        let u = (prev - v).normalized();
        let w = (next - v).normalized();
        u.dot(w).clamp(-1.0, 1.0).acos()
    }

    pub fn min_interior_angle(&self) -> f64 {
        (0..self.len())
            .map(|i| self.interior_angle(i))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn max_interior_angle(&self) -> f64 {
        (0..self.len())
            .map(|i| self.interior_angle(i))
            .fold(0.0, f64::max)
    }

    pub fn area(&self) -> f64 {
        let n = self.vertices.len();
        let mut s = 0.0;
        for i in 0..n {
            s += self.vertices[i].cross(self.vertices[(i + 1) % n]);
        }
        0.5 * s
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.vertices.len();
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut a = 0.0;
        for i in 0..n {
            let p = self.vertices[i];
            let q = self.vertices[(i + 1) % n];
            let w = p.cross(q);
            cx += (p.x + q.x) * w;
            cy += (p.y + q.y) * w;
            a += w;
        }
        Point2::new(cx / (3.0 * a), cy / (3.0 * a))
    }

    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }

    /// True when `p` lies inside or on the boundary (half-plane test).
    pub fn contains(&self, p: Point2) -> bool {
        self.signed_margin(p) >= 0.0
    }

    /// True when `p` lies strictly inside by more than `clearance`.
    pub fn contains_with_clearance(&self, p: Point2, clearance: f64) -> bool {
        self.signed_margin(p) > clearance
    }

    /// Smallest signed distance to the edge lines; positive inside.
    pub fn signed_margin(&self, p: Point2) -> f64 {
        let mut m = f64::INFINITY;
        for (a, b) in self.edges() {
            let e = (b - a).normalized();
            m = m.min(e.cross(p - a));
        }
        m
    }

    /// Distance from `p` to the polygon as a closed set (0 inside).
    pub fn distance(&self, p: Point2) -> f64 {
        if self.contains(p) {
            0.0
        } else {
            self.boundary_distance(p)
        }
    }

    /// Distance from `p` to the polygon boundary.
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        self.edges()
            .map(|(a, b)| point_segment_distance(p, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// Minimal distance between the boundaries of two polygons.
    pub fn boundary_boundary_distance(&self, other: &ConvexPolygon) -> f64 {
        let mut d = f64::INFINITY;
        for (a1, b1) in self.edges() {
            for (a2, b2) in other.edges() {
                d = d.min(segment_segment_distance(a1, b1, a2, b2));
            }
        }
        d
    }

    /// True when every vertex of `inner` lies strictly inside `self` with at
    /// least `clearance` margin.
    pub fn strictly_contains_polygon(&self, inner: &ConvexPolygon, clearance: f64) -> bool {
        inner
            .vertices()
            .iter()
            .all(|&v| self.contains_with_clearance(v, clearance))
    }

    pub fn translated(&self, delta: Point2) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self.vertices.iter().map(|&v| v + delta).collect(),
        }
    }

    pub fn scaled_about(&self, center: Point2, factor: f64) -> Result<ConvexPolygon, GeometryError> {
        ConvexPolygon::new(
            self.vertices
                .iter()
                .map(|&v| center + (v - center) * factor)
                .collect(),
        )
    }

    pub fn rotated_about(&self, center: Point2, angle: f64) -> ConvexPolygon {
        ConvexPolygon {
            vertices: self
                .vertices
                .iter()
                .map(|&v| center + (v - center).rotated(angle))
                .collect(),
        }
    }

    /// Axis-aligned square with the given center and side length.
    pub fn square(center: Point2, side: f64) -> ConvexPolygon {
        let h = side / 2.0;
        ConvexPolygon::new(vec![
            Point2::new(center.x - h, center.y - h),
            Point2::new(center.x + h, center.y - h),
            Point2::new(center.x + h, center.y + h),
            Point2::new(center.x - h, center.y + h),
        ])
        .expect("square is convex")
    }

    /// Regular polygon with `n` vertices, first vertex at angle `phase`.
    pub fn regular(center: Point2, radius: f64, n: usize, phase: f64) -> ConvexPolygon {
        let vertices = (0..n)
            .map(|i| {
                let t = phase + 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                center + Point2::from_polar(radius, t)
            })
            .collect();
        ConvexPolygon::new(vertices).expect("regular polygon is convex")
    }

    /// Serializes to the plain-text polygon format: one `v x y` line per
    /// vertex in CCW order; `#` starts a comment.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!("v {:.17e} {:.17e}\n", v.x, v.y));
        }
        s
    }

    /// Parses the `v x y` plain-text polygon format.
    pub fn from_text(text: &str) -> Result<Self, GeometryError> {
        let mut vertices = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("v") => {
                    let x = parse_coord(parts.next(), lineno)?;
                    let y = parse_coord(parts.next(), lineno)?;
                    vertices.push(Point2::new(x, y));
                }
                Some(tag) => {
                    return Err(GeometryError::Parse(format!(
                        "line {}: unknown record '{tag}'",
                        lineno + 1
                    )))
                }
                None => {}
            }
        }
        ConvexPolygon::new(vertices)
    }
}

fn parse_coord(tok: Option<&str>, lineno: usize) -> Result<f64, GeometryError> {
    tok.ok_or_else(|| GeometryError::Parse(format!("line {}: missing coordinate", lineno + 1)))?
        .parse::<f64>()
        .map_err(|e| GeometryError::Parse(format!("line {}: {e}", lineno + 1)))
}

fn bbox_scale(vertices: &[Point2]) -> f64 {
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in vertices {
        lo.x = lo.x.min(v.x);
        lo.y = lo.y.min(v.y);
        hi.x = hi.x.max(v.x);
        hi.y = hi.y.max(v.y);
    }
    (hi.x - lo.x).max(hi.y - lo.y).max(1.0)
}

/// Convex hull of a point set by the monotone chain, collinear points
/// dropped so the result is strictly convex.
pub fn convex_hull(points: &[Point2]) -> Result<ConvexPolygon, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::DegenerateGeometry(format!(
            "hull needs at least 3 points, got {}",
            points.len()
        )));
    }
    let mut pts: Vec<Point2> = points.to_vec();
    pts.sort_by(|a, b| (a.x, a.y).partial_cmp(&(b.x, b.y)).unwrap());
    pts.dedup_by(|a, b| a.x == b.x && a.y == b.y);

    let scale = bbox_scale(&pts);
    let tol = CONVEXITY_REL_TOL * scale * scale;

    let build = |iter: &mut dyn Iterator<Item = Point2>| {
        let mut chain: Vec<Point2> = Vec::new();
        for p in iter {
            while chain.len() >= 2 {
                let a = chain[chain.len() - 2];
                let b = chain[chain.len() - 1];
                if (b - a).cross(p - b) <= tol {
                    chain.pop();
                } else {
                    break;
                }
            }
            chain.push(p);
        }
        chain
    };

    let mut lower = build(&mut pts.iter().copied());
    let mut upper = build(&mut pts.iter().rev().copied());
    lower.pop();
    upper.pop();
    lower.append(&mut upper);

    if lower.len() < 3 {
        return Err(GeometryError::DegenerateGeometry(
            "all points collinear".into(),
        ));
    }
    ConvexPolygon::new(lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn unit_square() -> ConvexPolygon {
        ConvexPolygon::square(Point2::new(0.5, 0.5), 1.0)
    }

    #[test]
    fn rejects_clockwise_and_collinear() {
        let cw = vec![
            Point2::new(0.0, 0.0),
            Point2::new(0.0, 1.0),
            Point2::new(1.0, 0.0),
        ];
        assert!(ConvexPolygon::new(cw).is_err());
        let collinear = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(2.0, 0.0),
        ];
        assert!(ConvexPolygon::new(collinear).is_err());
    }

    #[test]
    fn rejects_nonconvex() {
        let dart = vec![
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(0.5, 0.5),
            Point2::new(0.0, 2.0),
        ];
        assert!(ConvexPolygon::new(dart).is_err());
    }

    #[test]
    fn square_medial_quantities() {
        let sq = unit_square();
        assert!((sq.area() - 1.0).abs() < 1e-15);
        assert!((sq.min_interior_angle() - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!(sq.contains(Point2::new(0.5, 0.5)));
        assert!(!sq.contains(Point2::new(1.5, 0.5)));
        assert!((sq.distance(Point2::new(2.0, 0.5)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hull_drops_interior_point_of_square() {
        let mut pts = unit_square().vertices().to_vec();
        pts.push(Point2::new(0.5, 0.5));
        let hull = convex_hull(&pts).unwrap();
        assert_eq!(hull.len(), 4);
        for v in hull.vertices() {
            assert!(unit_square().vertices().contains(v));
        }
    }

    #[test]
    fn hull_of_triangle_is_identity() {
        let tri = vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.3, 0.8),
        ];
        let hull = convex_hull(&tri).unwrap();
        assert_eq!(hull.len(), 3);
        for v in hull.vertices() {
            assert!(tri.contains(v));
        }
    }

    #[test]
    fn hull_of_collinear_points_errors() {
        let pts: Vec<Point2> = (0..5).map(|i| Point2::new(i as f64, 2.0 * i as f64)).collect();
        assert!(convex_hull(&pts).is_err());
    }

    /// O(n^3) half-plane oracle: a pair (i, j) is a hull edge iff every other
    /// point lies on one side of the line through it.
    fn brute_force_hull_vertices(pts: &[Point2]) -> Vec<Point2> {
        let n = pts.len();
        let mut on_hull = vec![false; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut all_left = true;
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    if (pts[j] - pts[i]).cross(pts[k] - pts[i]) <= 0.0 {
                        all_left = false;
                        break;
                    }
                }
                if all_left {
                    on_hull[i] = true;
                    on_hull[j] = true;
                }
            }
        }
        (0..n).filter(|&i| on_hull[i]).map(|i| pts[i]).collect()
    }

    #[test]
    fn hull_matches_half_plane_oracle_on_random_disk_points() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pts: Vec<Point2> = (0..50)
            .map(|_| {
                let r = rng.random_range(0.0f64..1.0).sqrt();
                let t = rng.random_range(0.0f64..std::f64::consts::TAU);
                Point2::from_polar(r, t)
            })
            .collect();
        let hull = convex_hull(&pts).unwrap();
        let mut expected = brute_force_hull_vertices(&pts);
        let mut got = hull.vertices().to_vec();
        let key = |p: &Point2| (p.x, p.y);
        expected.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        got.sort_by(|a, b| key(a).partial_cmp(&key(b)).unwrap());
        assert_eq!(got.len(), expected.len());
        for (g, e) in got.iter().zip(&expected) {
            assert!(g.dist(*e) < 1e-14);
        }
    }

    #[test]
    fn hull_is_idempotent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let pts: Vec<Point2> = (0..30)
                .map(|_| Point2::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let h1 = convex_hull(&pts).unwrap();
            let h2 = convex_hull(h1.vertices()).unwrap();
            assert_eq!(h1.vertices(), h2.vertices());
        }
    }

    #[test]
    fn text_round_trip() {
        let sq = unit_square();
        let text = format!("# comment line\n{}", sq.to_text());
        let back = ConvexPolygon::from_text(&text).unwrap();
        assert_eq!(back.vertices(), sq.vertices());
        assert!(ConvexPolygon::from_text("v 0 0\nv 1 0\n").is_err());
        assert!(ConvexPolygon::from_text("w 0 0\n").is_err());
    }
}
