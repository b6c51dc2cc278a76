use super::polygon::ConvexPolygon;
use super::GeometryError;

/// Strictly nested convex polygons `D_1 ⊋ D_2 ⊋ …` with layerwise constant
/// contrasts: layer `j` occupies `D_j \ D_{j+1}` with conductivity `k_j`,
/// the background outside `D_1` has conductivity 1.
#[derive(Debug, Clone)]
pub struct NestedGeometry {
    layers: Vec<(ConvexPolygon, f64)>,
}

impl NestedGeometry {
    pub fn new(layers: Vec<(ConvexPolygon, f64)>) -> Result<Self, GeometryError> {
        if layers.is_empty() {
            return Err(GeometryError::InvalidParams(
                "nested geometry needs at least one layer".into(),
            ));
        }
        if (layers[0].1 - 1.0).abs() <= super::class_d::CONTRAST_UNIT_TOL {
            return Err(GeometryError::InvalidParams(
                "outermost contrast k_1 must differ from the background value 1".into(),
            ));
        }
        for w in layers.windows(2) {
            let (outer, k_outer) = &w[0];
            let (inner, k_inner) = &w[1];
            if (k_outer - k_inner).abs() <= super::class_d::CONTRAST_UNIT_TOL {
                return Err(GeometryError::InvalidParams(
                    "consecutive layer contrasts must differ".into(),
                ));
            }
            let clearance = outer.boundary_boundary_distance(inner);
            if !outer.strictly_contains_polygon(inner, 0.0) || clearance <= 0.0 {
                return Err(GeometryError::InconsistentGeometry(
                    "layers must be strictly nested with positive clearance".into(),
                ));
            }
        }
        for (_, k) in &layers {
            if !(*k > 0.0) {
                return Err(GeometryError::InvalidParams(
                    "contrasts must be positive".into(),
                ));
            }
        }
        Ok(Self { layers })
    }

    pub fn single(poly: ConvexPolygon, k: f64) -> Result<Self, GeometryError> {
        Self::new(vec![(poly, k)])
    }

    pub fn layers(&self) -> &[(ConvexPolygon, f64)] {
        &self.layers
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn polygon(&self, j: usize) -> &ConvexPolygon {
        &self.layers[j].0
    }

    pub fn contrast(&self, j: usize) -> f64 {
        self.layers[j].1
    }

    /// Same polygons with a different contrast sequence.
    pub fn with_contrasts(&self, ks: &[f64]) -> Result<NestedGeometry, GeometryError> {
        if ks.len() != self.layers.len() {
            return Err(GeometryError::InvalidParams(format!(
                "expected {} contrasts, got {}",
                self.layers.len(),
                ks.len()
            )));
        }
        NestedGeometry::new(
            self.layers
                .iter()
                .zip(ks)
                .map(|((p, _), &k)| (p.clone(), k))
                .collect(),
        )
    }

    /// Conductivity at a point: contrast of the innermost layer containing it,
    /// or 1 in the background.
    pub fn conductivity_at(&self, p: super::Point2) -> f64 {
        for (poly, k) in self.layers.iter().rev() {
            if poly.contains(p) {
                return *k;
            }
        }
        1.0
    }

    /// Region index at a point: 0 for background, j for layer `D_j \ D_{j+1}`
    /// (1-based).
    pub fn region_of(&self, p: super::Point2) -> usize {
        let mut region = 0;
        for (j, (poly, _)) in self.layers.iter().enumerate() {
            if poly.contains(p) {
                region = j + 1;
            } else {
                break;
            }
        }
        region
    }

    /// Smallest clearance between consecutive interfaces (infinite for a
    /// single layer).
    pub fn min_layer_clearance(&self) -> f64 {
        self.layers
            .windows(2)
            .map(|w| w[0].0.boundary_boundary_distance(&w[1].0))
            .fold(f64::INFINITY, f64::min)
    }
}
