//! Interface-fitted conforming triangulations with corner grading, plus the
//! audits and text formats the rest of the crate relies on.

mod delaunay;
mod generator;
mod size;

pub use generator::generate_mesh;
pub use size::{CornerGrading, SizeField};

use crate::geometry::Point2;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("geometry clearance {clearance} below 3 * target_h = {limit}")]
    Resolution { clearance: f64, limit: f64 },
    #[error("interface edge recovery failed after {0} rounds")]
    EdgeRecovery(usize),
    #[error("mesh audit failed: {0}")]
    Audit(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Tag of a boundary or interface mesh edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeTag {
    /// Edge on the outer boundary of the domain.
    Outer,
    /// Edge on the boundary of nesting layer `j` (1-based).
    Interface(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct BoundaryEdge {
    pub a: usize,
    pub b: usize,
    pub tag: EdgeTag,
}

/// An interface edge with its two adjacent triangles.
#[derive(Debug, Clone, Copy)]
pub struct InterfaceEdge {
    pub a: usize,
    pub b: usize,
    /// Triangle on the deeper (higher region index) side.
    pub tri_in: usize,
    /// Triangle on the shallower side.
    pub tri_out: usize,
}

/// A conforming triangulation with region tags and tagged boundary edges.
///
/// Triangles are CCW; region tag 0 is the background, tag `j >= 1` the
/// region strictly inside the j-th interface polygon. Immutable after
/// generation.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub nodes: Vec<Point2>,
    pub triangles: Vec<[usize; 3]>,
    pub region: Vec<usize>,
    pub boundary_edges: Vec<BoundaryEdge>,
    /// Outer boundary node indices in CCW loop order.
    outer_loop: Vec<usize>,
    /// Arclength of each outer-loop node, measured along the loop from node 0.
    outer_arclength: Vec<f64>,
    /// Interface node loops, one per layer, CCW.
    interface_loops: Vec<Vec<usize>>,
    /// Spatial bucket grid for point location.
    grid: LocatorGrid,
}

#[derive(Debug, Clone)]
struct LocatorGrid {
    lo: Point2,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
}

impl Mesh {
    pub(crate) fn assemble(
        nodes: Vec<Point2>,
        triangles: Vec<[usize; 3]>,
        region: Vec<usize>,
        boundary_edges: Vec<BoundaryEdge>,
        outer_loop: Vec<usize>,
        interface_loops: Vec<Vec<usize>>,
    ) -> Result<Self, MeshError> {
        let mut outer_arclength = Vec::with_capacity(outer_loop.len());
        let mut acc = 0.0;
        for (i, &n) in outer_loop.iter().enumerate() {
            outer_arclength.push(acc);
            let next = outer_loop[(i + 1) % outer_loop.len()];
            acc += nodes[n].dist(nodes[next]);
        }
        let grid = LocatorGrid::build(&nodes, &triangles);
        let mesh = Mesh {
            nodes,
            triangles,
            region,
            boundary_edges,
            outer_loop,
            outer_arclength,
            interface_loops,
            grid,
        };
        mesh.audit()?;
        Ok(mesh)
    }

    pub fn n_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn triangle_points(&self, t: usize) -> [Point2; 3] {
        let v = self.triangles[t];
        [self.nodes[v[0]], self.nodes[v[1]], self.nodes[v[2]]]
    }

    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        0.5 * (b - a).cross(c - a)
    }

    pub fn triangle_centroid(&self, t: usize) -> Point2 {
        let [a, b, c] = self.triangle_points(t);
        (a + b + c) / 3.0
    }

    pub fn triangle_diameter(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        a.dist(b).max(b.dist(c)).max(c.dist(a))
    }

    pub fn min_angle_deg(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangle_points(t);
        let mut min = f64::INFINITY;
        for (u, v, w) in [(a, b, c), (b, c, a), (c, a, b)] {
            let e1 = (v - u).normalized();
            let e2 = (w - u).normalized();
            min = min.min(e1.dot(e2).clamp(-1.0, 1.0).acos());
        }
        min.to_degrees()
    }

    /// Outer boundary node indices in CCW order.
    pub fn outer_loop(&self) -> &[usize] {
        &self.outer_loop
    }

    /// Arclength coordinate of each outer-loop node.
    pub fn outer_arclength(&self) -> &[f64] {
        &self.outer_arclength
    }

    pub fn outer_perimeter(&self) -> f64 {
        let last = *self.outer_loop.last().unwrap();
        let first = self.outer_loop[0];
        self.outer_arclength.last().unwrap() + self.nodes[last].dist(self.nodes[first])
    }

    /// Interface node loop of layer `j` (1-based), CCW.
    pub fn interface_loop(&self, j: usize) -> Option<&[usize]> {
        self.interface_loops.get(j - 1).map(|v| v.as_slice())
    }

    pub fn n_interfaces(&self) -> usize {
        self.interface_loops.len()
    }

    /// Interface edges of layer `j` with their two adjacent triangles.
    pub fn interface_edges(&self, j: usize) -> Vec<InterfaceEdge> {
        let map = self.edge_triangle_map();
        let Some(loop_nodes) = self.interface_loop(j) else {
            return Vec::new();
        };
        let mut edges = Vec::with_capacity(loop_nodes.len());
        for (i, &a) in loop_nodes.iter().enumerate() {
            let b = loop_nodes[(i + 1) % loop_nodes.len()];
            let key = (a.min(b), a.max(b));
            if let Some(ts) = map.get(&key) {
                if ts.len() == 2 {
                    let (t0, t1) = (ts[0], ts[1]);
                    let (tri_in, tri_out) = if self.region[t0] >= j {
                        (t0, t1)
                    } else {
                        (t1, t0)
                    };
                    edges.push(InterfaceEdge {
                        a,
                        b,
                        tri_in,
                        tri_out,
                    });
                }
            }
        }
        edges
    }

    pub(crate) fn edge_triangle_map(&self) -> HashMap<(usize, usize), Vec<usize>> {
        let mut map: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for i in 0..3 {
                let (a, b) = (tri[i], tri[(i + 1) % 3]);
                map.entry((a.min(b), a.max(b))).or_default().push(t);
            }
        }
        map
    }

    /// Index of the triangle containing `p`, if any.
    pub fn locate(&self, p: Point2) -> Option<usize> {
        self.grid.candidates(p, |t| {
            let [a, b, c] = self.triangle_points(t);
            let scale = self.triangle_diameter(t);
            let tol = -1e-12 * scale * scale;
            (b - a).cross(p - a) >= tol && (c - b).cross(p - b) >= tol && (a - c).cross(p - c) >= tol
        })
    }

    /// Barycentric coordinates of `p` in triangle `t`.
    pub fn barycentric(&self, t: usize, p: Point2) -> [f64; 3] {
        let [a, b, c] = self.triangle_points(t);
        let area = (b - a).cross(c - a);
        [
            (c - b).cross(p - b) / area,
            (a - c).cross(p - c) / area,
            (b - a).cross(p - a) / area,
        ]
    }

    /// Structural audit: conformity, orientation, boundary-edge adjacency.
    fn audit(&self) -> Result<(), MeshError> {
        for t in 0..self.triangles.len() {
            if self.triangle_area(t) <= 0.0 {
                return Err(MeshError::Audit(format!(
                    "triangle {t} has nonpositive area {}",
                    self.triangle_area(t)
                )));
            }
        }
        let map = self.edge_triangle_map();
        for (edge, ts) in &map {
            if ts.len() > 2 {
                return Err(MeshError::Audit(format!(
                    "edge {edge:?} shared by {} triangles",
                    ts.len()
                )));
            }
        }
        for be in &self.boundary_edges {
            let key = (be.a.min(be.b), be.a.max(be.b));
            let ts = map.get(&key).map(|v| v.len()).unwrap_or(0);
            let expected = match be.tag {
                EdgeTag::Outer => 1,
                EdgeTag::Interface(_) => 2,
            };
            if ts != expected {
                return Err(MeshError::Audit(format!(
                    "boundary edge {:?} ({:?}) has {ts} adjacent triangles, expected {expected}",
                    (be.a, be.b),
                    be.tag
                )));
            }
        }
        Ok(())
    }

    /// Smallest interior angle over all triangles, in degrees.
    pub fn min_angle_overall_deg(&self) -> f64 {
        (0..self.triangles.len())
            .map(|t| self.min_angle_deg(t))
            .fold(f64::INFINITY, f64::min)
    }

    /// Plain-text export: `node i x y`, `tri i a b c tag`, `bedge a b tag`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            s.push_str(&format!("node {} {:.17e} {:.17e}\n", i, n.x, n.y));
        }
        for (i, t) in self.triangles.iter().enumerate() {
            s.push_str(&format!(
                "tri {} {} {} {} {}\n",
                i, t[0], t[1], t[2], self.region[i]
            ));
        }
        for be in &self.boundary_edges {
            let tag = match be.tag {
                EdgeTag::Outer => 0,
                EdgeTag::Interface(j) => j,
            };
            s.push_str(&format!("bedge {} {} {}\n", be.a, be.b, tag));
        }
        s
    }
}

impl LocatorGrid {
    fn build(nodes: &[Point2], triangles: &[[usize; 3]]) -> Self {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for n in nodes {
            lo.x = lo.x.min(n.x);
            lo.y = lo.y.min(n.y);
            hi.x = hi.x.max(n.x);
            hi.y = hi.y.max(n.y);
        }
        let extent = (hi - lo).norm().max(1e-12);
        let target_cells = (triangles.len() as f64).sqrt().ceil().max(1.0);
        let cell = (extent / target_cells).max(1e-12);
        let nx = (((hi.x - lo.x) / cell).ceil() as usize + 1).max(1);
        let ny = (((hi.y - lo.y) / cell).ceil() as usize + 1).max(1);
        let mut cells = vec![Vec::new(); nx * ny];
        for (t, tri) in triangles.iter().enumerate() {
            let pts = [nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]];
            let (mut tx0, mut ty0) = (f64::INFINITY, f64::INFINITY);
            let (mut tx1, mut ty1) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for p in pts {
                tx0 = tx0.min(p.x);
                ty0 = ty0.min(p.y);
                tx1 = tx1.max(p.x);
                ty1 = ty1.max(p.y);
            }
            let i0 = (((tx0 - lo.x) / cell).floor() as isize).clamp(0, nx as isize - 1) as usize;
            let i1 = (((tx1 - lo.x) / cell).floor() as isize).clamp(0, nx as isize - 1) as usize;
            let j0 = (((ty0 - lo.y) / cell).floor() as isize).clamp(0, ny as isize - 1) as usize;
            let j1 = (((ty1 - lo.y) / cell).floor() as isize).clamp(0, ny as isize - 1) as usize;
            for j in j0..=j1 {
                for i in i0..=i1 {
                    cells[j * nx + i].push(t as u32);
                }
            }
        }
        LocatorGrid {
            lo,
            cell,
            nx,
            ny,
            cells,
        }
    }

    fn candidates(&self, p: Point2, mut test: impl FnMut(usize) -> bool) -> Option<usize> {
        let ci = (((p.x - self.lo.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let cj = (((p.y - self.lo.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        // Own cell first, then the ring of neighbors for points on cell seams.
        for (dj, di) in [
            (0, 0),
            (0, 1),
            (0, -1),
            (1, 0),
            (-1, 0),
            (1, 1),
            (1, -1),
            (-1, 1),
            (-1, -1),
        ] {
            let ii = ci + di;
            let jj = cj + dj;
            if ii < 0 || jj < 0 || ii >= self.nx as isize || jj >= self.ny as isize {
                continue;
            }
            for &t in &self.cells[jj as usize * self.nx + ii as usize] {
                if test(t as usize) {
                    return Some(t as usize);
                }
            }
        }
        None
    }
}
