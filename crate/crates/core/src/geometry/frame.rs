use super::point::Point2;
use super::polygon::{convex_hull, ConvexPolygon};
use super::GeometryError;
use crate::quad::{arc_quadrature, segment_quadrature, QNode, GAUSS_8};
use std::f64::consts::PI;

/// An oriented straight contour piece with the outward normal of the region
/// it bounds.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub a: Point2,
    pub b: Point2,
    pub normal: Point2,
}

/// A circular arc traversed counter-clockwise about its own center.
#[derive(Debug, Clone, Copy)]
pub struct ArcSegment {
    pub center: Point2,
    pub radius: f64,
    pub ang_start: f64,
    pub ang_end: f64,
}

impl ArcSegment {
    pub fn length(&self) -> f64 {
        self.radius * (self.ang_end - self.ang_start).abs()
    }

    pub fn point_at(&self, t: f64) -> Point2 {
        let ang = self.ang_start + t * (self.ang_end - self.ang_start);
        self.center + Point2::from_polar(self.radius, ang)
    }
}

/// Contour panels ready for quadrature, grouped per contour piece.
#[derive(Debug, Clone)]
pub struct ContourPanel {
    pub nodes: Vec<QNode>,
}

/// The corner frame at an extremal vertex: polar axis along the hull
/// bisector, ray contours along the inclusion edges, the inner radius-`h`
/// arc and the outer three-point arc used by the integral identity.
#[derive(Debug, Clone)]
pub struct SectorFrame {
    /// The corner `x_c`.
    pub corner: Point2,
    /// Opening of the union hull at the corner.
    pub opening_b: f64,
    /// Opening of the inclusion itself at the corner.
    pub opening_a: f64,
    /// Unit direction of the hull bisector (frame x-axis).
    pub bisector: Point2,
    /// Contour radius `h = min(hausdorff/2, l/5, delta0)`.
    pub radius_h: f64,
    /// Ray along the inclusion edge with positive frame angle, length `h`.
    pub gamma_plus: Segment,
    /// Ray along the inclusion edge with negative frame angle, length `h`.
    pub gamma_minus: Segment,
    /// Frame angles of the two inclusion edges at the corner.
    pub theta_plus: f64,
    pub theta_minus: f64,
    /// Inner arc at radius `h` spanning frame angles `[-(pi+b)/4, (pi+b)/4]`.
    pub arc_inner: ArcSegment,
    /// Outer arc through `(h, ±(pi+b)/4)` and `(1/tau, pi)` in frame polar
    /// coordinates.
    pub arc_outer: ArcSegment,
    /// Probe frequency.
    pub tau: f64,
    /// Minimal admissible frequency `1/[2 h sin((pi-b)/4)]`.
    pub tau0: f64,
}

impl SectorFrame {
    /// Frame coordinates of a point (x-axis along the bisector).
    pub fn to_frame(&self, p: Point2) -> Point2 {
        let d = p - self.corner;
        Point2::new(d.dot(self.bisector), d.dot(self.bisector.perp()))
    }

    pub fn from_frame(&self, local: Point2) -> Point2 {
        self.corner + self.bisector * local.x + self.bisector.perp() * local.y
    }

    /// Polar coordinates `(r, theta)` in the frame.
    pub fn frame_polar(&self, p: Point2) -> (f64, f64) {
        let local = self.to_frame(p);
        (local.norm(), local.y.atan2(local.x))
    }

    /// Quadrature nodes along `gamma_plus` then `gamma_minus`, with the
    /// inclusion's outward normals.
    pub fn gamma_quadrature(&self, max_panel: f64) -> (Vec<QNode>, Vec<QNode>) {
        let gp = segment_quadrature(
            self.gamma_plus.a,
            self.gamma_plus.b,
            self.gamma_plus.normal,
            max_panel,
            &GAUSS_8,
        );
        let gm = segment_quadrature(
            self.gamma_minus.a,
            self.gamma_minus.b,
            self.gamma_minus.normal,
            max_panel,
            &GAUSS_8,
        );
        (gp, gm)
    }

    /// Quadrature on the inner arc; normals point radially away from the
    /// corner (outward for the enclosed region).
    pub fn inner_quadrature(&self, max_panel: f64) -> Vec<QNode> {
        arc_quadrature(
            self.arc_inner.center,
            self.arc_inner.radius,
            self.arc_inner.ang_start,
            self.arc_inner.ang_end,
            true,
            max_panel,
            &GAUSS_8,
        )
    }

    /// Quadrature on the outer arc; normals point away from the arc's own
    /// center (outward for the enclosed region).
    pub fn outer_quadrature(&self, max_panel: f64) -> Vec<QNode> {
        arc_quadrature(
            self.arc_outer.center,
            self.arc_outer.radius,
            self.arc_outer.ang_start,
            self.arc_outer.ang_end,
            true,
            max_panel,
            &GAUSS_8,
        )
    }
}

/// Builds the sector frame at the extremal vertex `x_c` of `d` relative to
/// `dp`, with contour radius `h = min(hausdorff/2, l/5, delta0)`.
///
/// Fails when `tau` is below the minimal frequency `tau0`, when `x_c` is not
/// an extremal vertex of `d`, or when the contour construction violates its
/// own clearance requirements.
pub fn build_sector_frame(
    d: &ConvexPolygon,
    dp: &ConvexPolygon,
    x_c: Point2,
    tau: f64,
    l: f64,
    delta0: f64,
) -> Result<SectorFrame, GeometryError> {
    let idx = d
        .vertices()
        .iter()
        .position(|&v| v.dist(x_c) < 1e-12)
        .ok_or_else(|| {
            GeometryError::InconsistentGeometry("x_c is not a vertex of the first polygon".into())
        })?;

    let hausdorff = super::hausdorff::hausdorff_distance(d, dp);
    let d_xc = dp.distance(x_c);
    if hausdorff <= 0.0 {
        return Err(GeometryError::NoExtremalVertex);
    }
    if (d_xc - hausdorff).abs() > 1e-9 * hausdorff.max(1.0) {
        return Err(GeometryError::InconsistentGeometry(format!(
            "x_c is not extremal: dist(x_c, D') = {d_xc}, d_H = {hausdorff}"
        )));
    }

    let h = (hausdorff / 2.0).min(l / 5.0).min(delta0);
    if dp.distance(x_c) <= h {
        return Err(GeometryError::InconsistentGeometry(
            "ball B_h(x_c) intersects the comparison polygon".into(),
        ));
    }

    // Hull opening and bisector at the corner.
    let mut union_pts = d.vertices().to_vec();
    union_pts.extend_from_slice(dp.vertices());
    let hull = convex_hull(&union_pts)?;
    let h_idx = hull
        .vertices()
        .iter()
        .position(|&v| v.dist(x_c) < 1e-12)
        .ok_or_else(|| {
            GeometryError::InconsistentGeometry("extremal vertex is not on the union hull".into())
        })?;
    let hn = hull.len();
    let q_next = (hull.vertex(h_idx + 1) - x_c).normalized();
    let q_prev = (hull.vertex(h_idx + hn - 1) - x_c).normalized();
    let opening_b = q_next.dot(q_prev).clamp(-1.0, 1.0).acos();
    if opening_b >= PI {
        return Err(GeometryError::InconsistentGeometry(
            "hull opening at the corner is not convex".into(),
        ));
    }
    let bisector = (q_next + q_prev).normalized();

    // Inclusion edges at the corner, truncated at radius h.
    let n = d.len();
    let e_next = (d.vertex(idx + 1) - x_c).normalized();
    let e_prev = (d.vertex(idx + n - 1) - x_c).normalized();
    let opening_a = e_next.dot(e_prev).clamp(-1.0, 1.0).acos();
    if d.vertex(idx + 1).dist(x_c) < h || d.vertex(idx + n - 1).dist(x_c) < h {
        return Err(GeometryError::InconsistentGeometry(
            "inclusion edges at the corner are shorter than the contour radius".into(),
        ));
    }

    let frame_angle = |dir: Point2| -> f64 {
        let x = dir.dot(bisector);
        let y = dir.dot(bisector.perp());
        y.atan2(x)
    };
    let (ang_next, ang_prev) = (frame_angle(e_next), frame_angle(e_prev));
    // The CCW edge (x_c -> next) keeps the interior on its left, so the
    // outward normal is the direction rotated by -90 degrees; the edge
    // (prev -> x_c) runs opposite to e_prev.
    let (theta_plus, plus_dir, plus_normal, theta_minus, minus_dir, minus_normal) =
        if ang_next >= ang_prev {
            (
                ang_next,
                e_next,
                -e_next.perp(),
                ang_prev,
                e_prev,
                e_prev.perp(),
            )
        } else {
            (
                ang_prev,
                e_prev,
                e_prev.perp(),
                ang_next,
                e_next,
                -e_next.perp(),
            )
        };
    let half_b = opening_b / 2.0;
    if theta_plus > half_b + 1e-9 || theta_minus < -half_b - 1e-9 {
        return Err(GeometryError::InconsistentGeometry(
            "inclusion edges leave the hull cone at the corner".into(),
        ));
    }

    let tau0 = 1.0 / (2.0 * h * ((PI - opening_b) / 4.0).sin());
    if tau < tau0 * (1.0 - 1e-12) {
        return Err(GeometryError::FrequencyTooLow { tau, tau0 });
    }

    let base_ang = bisector.angle();
    let span = (PI + opening_b) / 4.0;
    let arc_inner = ArcSegment {
        center: x_c,
        radius: h,
        ang_start: base_ang - span,
        ang_end: base_ang + span,
    };

    // Outer arc: unique circle through (h, ±span) and (1/tau, pi) in frame
    // polar coordinates; its center lies on the frame axis by symmetry.
    let inv_tau = 1.0 / tau;
    let denom = h * span.cos() + inv_tau;
    if denom.abs() < 1e-300 {
        return Err(GeometryError::DegenerateGeometry(
            "outer-arc points are collinear".into(),
        ));
    }
    let c = (h * h - inv_tau * inv_tau) / (2.0 * denom);
    let radius_outer = c + inv_tau;
    if radius_outer <= 0.0 {
        return Err(GeometryError::DegenerateGeometry(
            "outer-arc circle has nonpositive radius".into(),
        ));
    }
    let center_outer = x_c + bisector * c;
    // Frame angle of the junction point (h, span) about the arc center.
    let junction = Point2::new(h * span.cos() - c, h * span.sin());
    let psi = junction.y.atan2(junction.x);
    let arc_outer = ArcSegment {
        center: center_outer,
        radius: radius_outer,
        ang_start: base_ang + psi,
        ang_end: base_ang + 2.0 * PI - psi,
    };

    let frame = SectorFrame {
        corner: x_c,
        opening_b,
        opening_a,
        bisector,
        radius_h: h,
        gamma_plus: Segment {
            a: x_c,
            b: x_c + plus_dir * h,
            normal: plus_normal,
        },
        gamma_minus: Segment {
            a: x_c,
            b: x_c + minus_dir * h,
            normal: minus_normal,
        },
        theta_plus,
        theta_minus,
        arc_inner,
        arc_outer,
        tau,
        tau0,
    };

    // Invariant battery on the outer arc: probe half-plane bound and hull
    // clearance, checked at quadrature nodes.
    let q = convex_hull(&union_pts)?;
    let tol = 1e-9 * h.max(1.0);
    for node in frame.outer_quadrature(frame.arc_outer.length() / 64.0) {
        let x_coord = (node.pos - x_c).dot(bisector);
        if x_coord < -inv_tau - tol {
            return Err(GeometryError::InconsistentGeometry(format!(
                "outer-arc node violates (x - x_c) . xhat >= -1/tau: {x_coord} < {}",
                -inv_tau
            )));
        }
        let dist_q = q.boundary_distance(node.pos);
        if dist_q < 0.5 * inv_tau - tol {
            return Err(GeometryError::InconsistentGeometry(format!(
                "outer-arc node too close to the hull: dist {dist_q} < {}",
                0.5 * inv_tau
            )));
        }
    }

    Ok(frame)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hausdorff_distance;

    fn offset_squares(t: f64) -> (ConvexPolygon, ConvexPolygon) {
        let a = ConvexPolygon::square(Point2::new(0.0, 0.0), 1.0);
        let b = a.translated(Point2::new(t, 0.0));
        (a, b)
    }

    fn frame_for_offset_squares(t: f64, tau_factor: f64) -> SectorFrame {
        let (a, b) = offset_squares(t);
        let (xc, _) = crate::geometry::extremal_vertex(&a, &b).unwrap();
        // The extremal vertex may belong to either square; order the call so
        // the owner comes first.
        let (d, dp) = if a.vertices().iter().any(|&v| v.dist(xc) < 1e-12) {
            (a, b)
        } else {
            (b, a)
        };
        let h = (hausdorff_distance(&d, &dp) / 2.0).min(1.0 / 5.0).min(10.0);
        let b_guess = std::f64::consts::FRAC_PI_2;
        let tau0 = 1.0 / (2.0 * h * ((PI - b_guess) / 4.0).sin());
        build_sector_frame(&d, &dp, xc, tau_factor * tau0, 1.0, 10.0).unwrap()
    }

    #[test]
    fn radius_is_min_of_three_lengths() {
        // Two unit squares offset by 0.5 with l = 1 and large delta0:
        // h = min(0.25, 0.2, delta0) = 0.2.
        let frame = frame_for_offset_squares(0.5, 2.0);
        assert!((frame.radius_h - 0.2).abs() < 1e-12);
        // Offset corners of axis-aligned squares keep their right angle in
        // the hull.
        assert!((frame.opening_b - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        assert!((frame.opening_a - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
    }

    #[test]
    fn tau0_matches_closed_form_for_right_angle() {
        let frame = frame_for_offset_squares(0.5, 2.0);
        let expected = 1.0 / (2.0 * frame.radius_h * (PI / 8.0).sin());
        assert!((frame.tau0 - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn low_frequency_is_rejected() {
        let (a, b) = offset_squares(0.5);
        let (xc, _) = crate::geometry::extremal_vertex(&a, &b).unwrap();
        let (d, dp) = if a.vertices().iter().any(|&v| v.dist(xc) < 1e-12) {
            (a, b)
        } else {
            (b, a)
        };
        let err = build_sector_frame(&d, &dp, xc, 0.1, 1.0, 10.0);
        assert!(matches!(err, Err(GeometryError::FrequencyTooLow { .. })));
    }

    #[test]
    fn outer_arc_passes_through_the_three_defining_points() {
        let frame = frame_for_offset_squares(0.5, 2.0);
        let span = (PI + frame.opening_b) / 4.0;
        let targets = [
            frame.from_frame(Point2::from_polar(frame.radius_h, span)),
            frame.from_frame(Point2::from_polar(1.0 / frame.tau, PI)),
            frame.from_frame(Point2::from_polar(frame.radius_h, -span)),
        ];
        for t in targets {
            let d = (t.dist(frame.arc_outer.center) - frame.arc_outer.radius).abs();
            assert!(d < 1e-12, "point off the outer arc by {d}");
        }
    }

    #[test]
    fn gamma_rays_follow_the_inclusion_edges() {
        let frame = frame_for_offset_squares(0.5, 2.0);
        assert!((frame.gamma_plus.a.dist(frame.gamma_plus.b) - frame.radius_h).abs() < 1e-12);
        assert!(
            (frame.theta_plus - frame.theta_minus - frame.opening_a).abs() < 1e-9,
            "ray angles must span the inclusion opening"
        );
        // Normals are unit and perpendicular to the rays.
        let dir = (frame.gamma_plus.b - frame.gamma_plus.a).normalized();
        assert!(dir.dot(frame.gamma_plus.normal).abs() < 1e-12);
        assert!((frame.gamma_plus.normal.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invariant_battery_on_random_class_d_pairs() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let mut built = 0;
        for _ in 0..100 {
            let n1 = rng.random_range(3..6);
            let n2 = rng.random_range(3..6);
            let p1 = ConvexPolygon::regular(
                Point2::new(0.0, 0.0),
                rng.random_range(0.6..1.0),
                n1,
                rng.random_range(0.0..1.0),
            );
            let p2 = ConvexPolygon::regular(
                Point2::new(rng.random_range(0.1..0.6), rng.random_range(-0.3..0.3)),
                rng.random_range(0.6..1.0),
                n2,
                rng.random_range(0.0..1.0),
            );
            let Ok((xc, _)) = crate::geometry::extremal_vertex(&p1, &p2) else {
                continue;
            };
            let (d, dp) = if p1.vertices().iter().any(|&v| v.dist(xc) < 1e-12) {
                (p1, p2)
            } else {
                (p2, p1)
            };
            let l = d.min_edge_length();
            let h = (hausdorff_distance(&d, &dp) / 2.0).min(l / 5.0).min(10.0);
            let tau0_upper = 1.0 / (2.0 * h * ((PI - d.max_interior_angle().max(2.0)) / 4.0).sin().abs());
            let frame = build_sector_frame(&d, &dp, xc, 4.0 * tau0_upper.abs().max(1.0) + 100.0, l, 10.0)
                .expect("frame build must succeed for valid pairs");
            built += 1;
            assert!(frame.opening_b < PI);
            assert!(frame.tau >= frame.tau0);
            // Inner arc contains the inclusion-side arc: the ray angles sit
            // inside the inner arc span.
            let span = (PI + frame.opening_b) / 4.0;
            assert!(frame.theta_plus <= span + 1e-9);
            assert!(frame.theta_minus >= -span - 1e-9);
        }
        assert!(built >= 80, "only {built} frames built out of 100 pairs");
    }
}
