use crate::geometry::Point2;
use std::collections::HashMap;

/// Incremental Bowyer–Watson Delaunay triangulation.
///
/// Plain f64 predicates with a zero tolerance: ties (points exactly on a
/// circumcircle) are treated as outside the cavity, which is a valid Delaunay
/// choice. Interior lattice points are jittered upstream so exact ties only
/// occur in configurations where either diagonal is acceptable.
pub struct Delaunay {
    pts: Vec<Point2>,
    tris: Vec<Tri>,
    last_alive: usize,
}

#[derive(Debug, Clone, Copy)]
struct Tri {
    v: [usize; 3],
    /// Neighbor across the edge opposite vertex i.
    n: [Option<usize>; 3],
    alive: bool,
}

fn orient2d(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn in_circle(a: Point2, b: Point2, c: Point2, d: Point2) -> f64 {
    // Positive when d is strictly inside the circumcircle of CCW (a, b, c).
    let (adx, ady) = (a.x - d.x, a.y - d.y);
    let (bdx, bdy) = (b.x - d.x, b.y - d.y);
    let (cdx, cdy) = (c.x - d.x, c.y - d.y);
    let ad = adx * adx + ady * ady;
    let bd = bdx * bdx + bdy * bdy;
    let cd = cdx * cdx + cdy * cdy;
    adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx)
}

impl Delaunay {
    /// Triangulates the given points; the result indexes into `points`.
    pub fn triangulate(points: &[Point2]) -> Vec<[usize; 3]> {
        assert!(points.len() >= 3, "need at least 3 points");
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo.x = lo.x.min(p.x);
            lo.y = lo.y.min(p.y);
            hi.x = hi.x.max(p.x);
            hi.y = hi.y.max(p.y);
        }
        let center = (lo + hi) * 0.5;
        let diag = (hi - lo).norm().max(1e-9);
        let r = 20.0 * diag;

        let n = points.len();
        let mut pts = points.to_vec();
        for i in 0..3 {
            let ang = std::f64::consts::FRAC_PI_2 + i as f64 * 2.0 * std::f64::consts::PI / 3.0;
            pts.push(center + Point2::from_polar(r, ang));
        }
        let mut dt = Delaunay {
            pts,
            tris: vec![Tri {
                v: [n, n + 1, n + 2],
                n: [None; 3],
                alive: true,
            }],
            last_alive: 0,
        };
        for i in 0..n {
            dt.insert(i);
        }
        dt.tris
            .iter()
            .filter(|t| t.alive && t.v.iter().all(|&v| v < n))
            .map(|t| t.v)
            .collect()
    }

    fn point(&self, i: usize) -> Point2 {
        self.pts[i]
    }

    fn locate(&self, p: Point2) -> usize {
        let mut t = self.last_alive;
        if !self.tris[t].alive {
            t = self
                .tris
                .iter()
                .position(|tr| tr.alive)
                .expect("triangulation is never empty");
        }
        let max_steps = 12 * (self.tris.len() as f64).sqrt() as usize + 64;
        let mut steps = 0;
        'walk: loop {
            steps += 1;
            if steps > max_steps {
                break;
            }
            let tri = self.tris[t];
            for i in 0..3 {
                let a = self.point(tri.v[(i + 1) % 3]);
                let b = self.point(tri.v[(i + 2) % 3]);
                if orient2d(a, b, p) < 0.0 {
                    match tri.n[i] {
                        Some(nb) if self.tris[nb].alive => {
                            t = nb;
                            continue 'walk;
                        }
                        _ => break 'walk,
                    }
                }
            }
            return t;
        }
        // Fallback: exhaustive scan.
        for (i, tri) in self.tris.iter().enumerate() {
            if !tri.alive {
                continue;
            }
            let (a, b, c) = (self.point(tri.v[0]), self.point(tri.v[1]), self.point(tri.v[2]));
            if orient2d(a, b, p) >= 0.0 && orient2d(b, c, p) >= 0.0 && orient2d(c, a, p) >= 0.0 {
                return i;
            }
        }
        panic!("point ({}, {}) not inside the triangulation", p.x, p.y);
    }

    fn insert(&mut self, pi: usize) {
        let p = self.point(pi);
        let seed = self.locate(p);

        // Grow the cavity of triangles whose circumcircle strictly contains p.
        let mut cavity = vec![seed];
        let mut in_cavity: HashMap<usize, bool> = HashMap::new();
        in_cavity.insert(seed, true);
        let mut stack = vec![seed];
        while let Some(t) = stack.pop() {
            for i in 0..3 {
                if let Some(nb) = self.tris[t].n[i] {
                    if !self.tris[nb].alive || in_cavity.contains_key(&nb) {
                        continue;
                    }
                    let tv = self.tris[nb].v;
                    let inside = in_circle(self.point(tv[0]), self.point(tv[1]), self.point(tv[2]), p)
                        > 0.0;
                    in_cavity.insert(nb, inside);
                    if inside {
                        cavity.push(nb);
                        stack.push(nb);
                    }
                }
            }
        }

        // Boundary edges of the cavity, with their outside neighbors.
        let mut boundary: Vec<(usize, usize, Option<usize>)> = Vec::new();
        for &t in &cavity {
            let tri = self.tris[t];
            for i in 0..3 {
                let nb = tri.n[i];
                let is_outside = match nb {
                    Some(x) => !in_cavity.get(&x).copied().unwrap_or(false),
                    None => true,
                };
                if is_outside {
                    boundary.push((tri.v[(i + 1) % 3], tri.v[(i + 2) % 3], nb));
                }
            }
        }
        for &t in &cavity {
            self.tris[t].alive = false;
        }

        // Fan retriangulation of the cavity from p.
        let mut edge_owner: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
        let mut new_tris = Vec::with_capacity(boundary.len());
        for &(a, b, outer) in &boundary {
            let idx = self.tris.len();
            let mut v = [a, b, pi];
            if orient2d(self.point(v[0]), self.point(v[1]), self.point(v[2])) < 0.0 {
                v.swap(0, 1);
            }
            self.tris.push(Tri {
                v,
                n: [None; 3],
                alive: true,
            });
            new_tris.push(idx);
            // Hook up the neighbor across the boundary edge (opposite p).
            let p_slot = v.iter().position(|&x| x == pi).unwrap();
            self.tris[idx].n[p_slot] = outer;
            if let Some(o) = outer {
                let ov = self.tris[o].v;
                for j in 0..3 {
                    let (ea, eb) = (ov[(j + 1) % 3], ov[(j + 2) % 3]);
                    if (ea == a && eb == b) || (ea == b && eb == a) {
                        self.tris[o].n[j] = Some(idx);
                    }
                }
            }
            // Internal spokes p-a and p-b pair up between new triangles.
            for j in 0..3 {
                let (ea, eb) = (v[(j + 1) % 3], v[(j + 2) % 3]);
                if ea == pi || eb == pi {
                    let key = (ea.min(eb), ea.max(eb));
                    if let Some(&(other_t, other_slot)) = edge_owner.get(&key) {
                        self.tris[idx].n[j] = Some(other_t);
                        self.tris[other_t].n[other_slot] = Some(idx);
                    } else {
                        edge_owner.insert(key, (idx, j));
                    }
                }
            }
        }
        self.last_alive = *new_tris.last().expect("cavity produces triangles");
    }
}
