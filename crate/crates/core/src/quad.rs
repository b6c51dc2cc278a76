//! Gauss–Legendre panel quadrature on segments and circular arcs.

use crate::geometry::Point2;

/// 8-point Gauss–Legendre rule on [-1, 1]: (node, weight).
pub const GAUSS_8: [(f64, f64); 8] = [
    (-0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
    (-0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (-0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (-0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.183_434_642_495_649_8, 0.362_683_783_378_362_0),
    (0.525_532_409_916_329_0, 0.313_706_645_877_887_3),
    (0.796_666_477_413_626_7, 0.222_381_034_453_374_5),
    (0.960_289_856_497_536_3, 0.101_228_536_290_376_3),
];

/// 4-point Gauss–Legendre rule on [-1, 1]: (node, weight).
pub const GAUSS_4: [(f64, f64); 4] = [
    (-0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
    (-0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.339_981_043_584_856_3, 0.652_145_154_862_546_1),
    (0.861_136_311_594_052_6, 0.347_854_845_137_453_9),
];

/// A contour quadrature node: position, arclength weight, unit normal.
#[derive(Debug, Clone, Copy)]
pub struct QNode {
    pub pos: Point2,
    pub weight: f64,
    pub normal: Point2,
}

/// Gauss nodes of one straight panel `[a, b]` with a fixed unit normal.
pub fn segment_panel(a: Point2, b: Point2, normal: Point2, rule: &[(f64, f64)]) -> Vec<QNode> {
    let half = (b - a) * 0.5;
    let mid = a.lerp(b, 0.5);
    let jac = half.norm();
    rule.iter()
        .map(|&(x, w)| QNode {
            pos: mid + half * x,
            weight: w * jac,
            normal,
        })
        .collect()
}

/// Composite Gauss quadrature along the segment `[a, b]`, panels no longer
/// than `max_len`.
pub fn segment_quadrature(
    a: Point2,
    b: Point2,
    normal: Point2,
    max_len: f64,
    rule: &[(f64, f64)],
) -> Vec<QNode> {
    let len = a.dist(b);
    let n = ((len / max_len).ceil() as usize).max(1);
    let mut nodes = Vec::with_capacity(n * rule.len());
    for i in 0..n {
        let p = a.lerp(b, i as f64 / n as f64);
        let q = a.lerp(b, (i + 1) as f64 / n as f64);
        nodes.extend(segment_panel(p, q, normal, rule));
    }
    nodes
}

/// Composite Gauss quadrature along a circular arc centered at `center`,
/// traversed from `ang_start` to `ang_end`. Normals point radially away from
/// the arc center when `outward` is true, toward it otherwise.
pub fn arc_quadrature(
    center: Point2,
    radius: f64,
    ang_start: f64,
    ang_end: f64,
    outward: bool,
    max_len: f64,
    rule: &[(f64, f64)],
) -> Vec<QNode> {
    let arc_len = radius * (ang_end - ang_start).abs();
    let n = ((arc_len / max_len).ceil() as usize).max(1);
    let mut nodes = Vec::with_capacity(n * rule.len());
    let dang = (ang_end - ang_start) / n as f64;
    for i in 0..n {
        let a0 = ang_start + i as f64 * dang;
        let mid = a0 + 0.5 * dang;
        let half = 0.5 * dang;
        for &(x, w) in rule {
            let ang = mid + half * x;
            let dir = Point2::from_polar(1.0, ang);
            nodes.push(QNode {
                pos: center + dir * radius,
                weight: w * half.abs() * radius,
                normal: if outward { dir } else { -dir },
            });
        }
    }
    nodes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_rule_integrates_cubics_exactly() {
        let a = Point2::new(0.0, 0.0);
        let b = Point2::new(2.0, 0.0);
        let nodes = segment_quadrature(a, b, Point2::new(0.0, 1.0), 0.7, &GAUSS_4);
        let integral: f64 = nodes.iter().map(|n| n.weight * n.pos.x.powi(3)).sum();
        assert!((integral - 4.0).abs() < 1e-13);
        let total: f64 = nodes.iter().map(|n| n.weight).sum();
        assert!((total - 2.0).abs() < 1e-13);
    }

    #[test]
    fn arc_rule_recovers_circumference_and_moments() {
        let c = Point2::new(1.0, -1.0);
        let nodes = arc_quadrature(c, 2.0, 0.0, std::f64::consts::TAU, true, 0.05, &GAUSS_8);
        let total: f64 = nodes.iter().map(|n| n.weight).sum();
        assert!((total - std::f64::consts::TAU * 2.0).abs() < 1e-10);
        // Integral of (x - cx) over the full circle vanishes.
        let m1: f64 = nodes.iter().map(|n| n.weight * (n.pos.x - c.x)).sum();
        assert!(m1.abs() < 1e-10);
    }
}
