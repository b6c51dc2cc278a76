use super::point::Point2;
use super::polygon::{convex_hull, ConvexPolygon};
use super::GeometryError;

/// Hausdorff distance between two convex polygons.
///
/// For convex sets the directed sup-distance over a polygon is attained at
/// one of its vertices, so the exact value is the maximum of vertex-to-set
/// distances taken both ways. No boundary sampling is involved.
pub fn hausdorff_distance(p: &ConvexPolygon, q: &ConvexPolygon) -> f64 {
    directed_vertex_sup(p, q).max(directed_vertex_sup(q, p))
}

fn directed_vertex_sup(from: &ConvexPolygon, to: &ConvexPolygon) -> f64 {
    from.vertices()
        .iter()
        .map(|&v| to.distance(v))
        .fold(0.0, f64::max)
}

/// The extremal vertex of a polygon pair: a vertex `x_c` (of either polygon)
/// whose distance to the other polygon equals the Hausdorff distance.
///
/// Returns `(x_c, h)` with `h = d_H(p, q)`. The returned vertex is always a
/// vertex of the convex hull of the union, and the hull opening at it is at
/// most `(a + pi) / 2` where `a` is the owning polygon's own opening there;
/// both facts are verified before returning.
pub fn extremal_vertex(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
) -> Result<(Point2, f64), GeometryError> {
    let mut best: Option<(Point2, f64, f64)> = None; // (vertex, dist, own angle)
    for (poly, other) in [(p, q), (q, p)] {
        for i in 0..poly.len() {
            let v = poly.vertex(i);
            let d = other.distance(v);
            if best.map(|(_, bd, _)| d > bd).unwrap_or(true) {
                best = Some((v, d, poly.interior_angle(i)));
            }
        }
    }
    let (xc, h, own_angle) = best.expect("polygons have vertices");
    if h == 0.0 {
        return Err(GeometryError::NoExtremalVertex);
    }

    let mut union_pts = p.vertices().to_vec();
    union_pts.extend_from_slice(q.vertices());
    let hull = convex_hull(&union_pts)?;
    let hull_idx = hull
        .vertices()
        .iter()
        .position(|&v| v.dist(xc) < 1e-12)
        .ok_or_else(|| {
            GeometryError::InconsistentGeometry(
                "extremal vertex is not a vertex of the union hull".into(),
            )
        })?;
    let hull_angle = hull.interior_angle(hull_idx);
    let limit = (own_angle + std::f64::consts::PI) / 2.0;
    if hull_angle > limit + 1e-9 {
        return Err(GeometryError::InconsistentGeometry(format!(
            "hull opening {hull_angle} exceeds (a + pi)/2 = {limit} at the extremal vertex"
        )));
    }
    Ok((xc, h))
}
