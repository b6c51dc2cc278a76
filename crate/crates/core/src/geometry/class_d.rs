use super::domain::Domain;
use super::polygon::{convex_hull, ConvexPolygon};
use super::GeometryError;

/// A-priori parameters of the admissible inclusion class: angle band
/// `(a_min, a_max)`, minimal edge length `l`, boundary clearance `delta0`,
/// and contrast band `(k_min, k_max)`.
#[derive(Debug, Clone, Copy)]
pub struct ClassDParams {
    pub a_min: f64,
    pub a_max: f64,
    pub l: f64,
    pub delta0: f64,
    pub k_min: f64,
    pub k_max: f64,
}

impl ClassDParams {
    pub fn new(
        a_min: f64,
        a_max: f64,
        l: f64,
        delta0: f64,
        k_min: f64,
        k_max: f64,
    ) -> Result<Self, GeometryError> {
        if !(0.0 < a_min && a_min < a_max && a_max < std::f64::consts::PI) {
            return Err(GeometryError::InvalidParams(format!(
                "angle band must satisfy 0 < a_min < a_max < pi, got ({a_min}, {a_max})"
            )));
        }
        if !(l > 0.0 && delta0 > 0.0) {
            return Err(GeometryError::InvalidParams(
                "l and delta0 must be positive".into(),
            ));
        }
        if !(0.0 < k_min && k_min < k_max) {
            return Err(GeometryError::InvalidParams(format!(
                "contrast band must satisfy 0 < k_min < k_max, got ({k_min}, {k_max})"
            )));
        }
        Ok(Self {
            a_min,
            a_max,
            l,
            delta0,
            k_min,
            k_max,
        })
    }
}

/// One clause of the admissibility definition with its measured value.
#[derive(Debug, Clone)]
pub struct Clause {
    pub name: &'static str,
    pub pass: bool,
    pub measured: f64,
    pub required: String,
}

/// Per-clause validation report for a single inclusion.
#[derive(Debug, Clone)]
pub struct ClassDReport {
    pub clauses: Vec<Clause>,
}

impl ClassDReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

/// Tolerance below which a contrast is considered equal to the background.
pub const CONTRAST_UNIT_TOL: f64 = 1e-12;

/// Checks clauses (1)-(4) of the admissibility definition for a single
/// inclusion `(p, k)` inside `domain`: contrast in band and away from 1,
/// vertex openings in the angle band, edges at least `l`, and clearance from
/// the outer boundary at least `delta0`. The pairwise hull-clearance clause
/// is [`hull_clearance_check`].
pub fn validate_class_d(
    p: &ConvexPolygon,
    k: f64,
    params: &ClassDParams,
    domain: &Domain,
) -> ClassDReport {
    let mut clauses = Vec::new();

    let contrast_ok =
        k > params.k_min && k < params.k_max && (k - 1.0).abs() > CONTRAST_UNIT_TOL && k > 0.0;
    clauses.push(Clause {
        name: "contrast",
        pass: contrast_ok,
        measured: k,
        required: format!("k in ({}, {}) and k != 1", params.k_min, params.k_max),
    });

    let min_angle = p.min_interior_angle();
    let max_angle = p.max_interior_angle();
    clauses.push(Clause {
        name: "min_angle",
        pass: min_angle > params.a_min,
        measured: min_angle,
        required: format!("> {}", params.a_min),
    });
    clauses.push(Clause {
        name: "max_angle",
        pass: max_angle < params.a_max,
        measured: max_angle,
        required: format!("< {}", params.a_max),
    });

    let min_edge = p.min_edge_length();
    clauses.push(Clause {
        name: "min_edge",
        pass: min_edge >= params.l,
        measured: min_edge,
        required: format!(">= {}", params.l),
    });

    let clearance = domain.polygon_clearance(p);
    clauses.push(Clause {
        name: "boundary_clearance",
        pass: clearance >= params.delta0,
        measured: clearance,
        required: format!(">= {}", params.delta0),
    });

    ClassDReport { clauses }
}

/// Clause (5): the convex hull of a pair of inclusions keeps distance at
/// least `delta0` from the outer boundary. A property of pairs, so exposed
/// separately from the single-inclusion report.
pub fn hull_clearance_check(
    p: &ConvexPolygon,
    q: &ConvexPolygon,
    domain: &Domain,
    delta0: f64,
) -> Result<Clause, GeometryError> {
    let mut pts = p.vertices().to_vec();
    pts.extend_from_slice(q.vertices());
    let hull = convex_hull(&pts)?;
    let clearance = domain.polygon_clearance(&hull);
    Ok(Clause {
        name: "hull_clearance",
        pass: clearance >= delta0,
        measured: clearance,
        required: format!(">= {delta0}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point2;

    fn generous_params() -> ClassDParams {
        ClassDParams::new(0.3, 3.0, 0.5, 1.0, 0.5, 5.0).unwrap()
    }

    #[test]
    fn unit_square_in_big_disk_passes() {
        let domain = Domain::disk(Point2::new(0.0, 0.0), 10.0);
        let sq = ConvexPolygon::square(Point2::new(0.0, 0.0), 1.0);
        let report = validate_class_d(&sq, 2.0, &generous_params(), &domain);
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn unit_contrast_fails_contrast_clause() {
        let domain = Domain::disk(Point2::new(0.0, 0.0), 10.0);
        let sq = ConvexPolygon::square(Point2::new(0.0, 0.0), 1.0);
        let report = validate_class_d(&sq, 1.0, &generous_params(), &domain);
        assert!(!report.clause("contrast").unwrap().pass);
        assert!(report.clause("min_angle").unwrap().pass);
    }

    #[test]
    fn needle_polygon_fails_angle_clause_with_measurement() {
        let domain = Domain::disk(Point2::new(0.0, 0.0), 10.0);
        // Thin triangle: apex angle well below any reasonable a_m.
        let needle = ConvexPolygon::new(vec![
            Point2::new(-1.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.0, 0.05),
        ])
        .unwrap();
        let report = validate_class_d(&needle, 2.0, &generous_params(), &domain);
        let clause = report.clause("min_angle").unwrap();
        assert!(!clause.pass);
        // Measured apex angle must be reported: tan(angle/2) ~ 0.05.
        let expected = needle.min_interior_angle();
        assert_eq!(clause.measured, expected);
        assert!(expected < 0.3);
    }

    #[test]
    fn hull_clearance_is_pairwise() {
        let domain = Domain::disk(Point2::new(0.0, 0.0), 2.0);
        let a = ConvexPolygon::square(Point2::new(-0.8, 0.0), 0.5);
        let b = ConvexPolygon::square(Point2::new(0.8, 0.0), 0.5);
        let clause = hull_clearance_check(&a, &b, &domain, 0.5).unwrap();
        assert!(clause.pass, "{clause:?}");
        let clause_tight = hull_clearance_check(&a, &b, &domain, 1.2).unwrap();
        assert!(!clause_tight.pass);
    }
}
