use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::hull::{self, Placing};
use super::{LatticePoint, RationalVector};
use crate::arith::{self, rat, rat_of, Int, Rat, SpanLattice};
use crate::error::{Error, Result};

/// Facet inequality `<m, normal> >= -offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: LatticePoint,
    pub offset: Rat,
}

impl Facet {
    /// `<x, normal> + offset`; non-negative exactly on the polytope's side.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        arith::dot_mixed(&self.normal.0, x) + &self.offset
    }
}

/// A rational polytope with both representations kept in sync.
///
/// Vertices are sorted lexicographically. For a polytope of lower dimension
/// than its ambient space, `equations` cut out its affine span and `facets`
/// are valid inequalities whose restriction to that span is irredundant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<RationalVector>,
    facets: Vec<Facet>,
    equations: Vec<Facet>,
}

/// Irredundant V- and H-representation of the hull of `points`.
pub fn convex_hull(points: &[RationalVector], ambient_dim: usize) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(Error::input("convex hull of an empty point set"));
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != ambient_dim) {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            got: bad.dim(),
        });
    }
    let mut pts: Vec<Vec<Rat>> = points.iter().map(|p| p.0.clone()).collect();
    pts.sort();
    pts.dedup();

    let base = pts[0].clone();
    let diffs: Vec<Vec<Rat>> = pts[1..].iter().map(|p| arith::sub(p, &base)).collect();
    let (_, pivots) = arith::rref(diffs.clone(), ambient_dim);
    let dim = pivots.len();

    let equations: Vec<Facet> = arith::nullspace(&diffs, ambient_dim)
        .iter()
        .map(|n| {
            let normal = arith::primitive(n);
            let offset = -arith::dot_mixed(&normal, &base);
            Facet {
                normal: LatticePoint(normal),
                offset,
            }
        })
        .collect();

    if dim == 0 {
        return Ok(LatticePolytope {
            ambient_dim,
            dim,
            vertices: vec![RationalVector(base)],
            facets: Vec::new(),
            equations,
        });
    }

    let mut projected: BTreeMap<Vec<Rat>, Vec<Rat>> = BTreeMap::new();
    for p in &pts {
        projected.insert(pivots.iter().map(|&c| p[c].clone()).collect(), p.clone());
    }
    let proj_pts: Vec<Vec<Rat>> = projected.keys().cloned().collect();
    let fh = hull::full_hull(&proj_pts);

    let mut vertices: Vec<RationalVector> = fh
        .vertices
        .iter()
        .map(|v| RationalVector(projected[v].clone()))
        .collect();
    vertices.sort();
    let mut facets: Vec<Facet> = fh
        .facets
        .into_iter()
        .map(|h| {
            let mut normal = vec![Int::zero(); ambient_dim];
            for (k, &c) in pivots.iter().enumerate() {
                normal[c] = h.normal[k].clone();
            }
            Facet {
                normal: LatticePoint(normal),
                offset: h.offset,
            }
        })
        .collect();
    facets.sort();
    Ok(LatticePolytope {
        ambient_dim,
        dim,
        vertices,
        facets,
        equations,
    })
}

/// `Conv(e_1 × P_1, …, e_k × P_k)` in `R^k × R^n`.
pub fn cayley_polytope(polys: &[LatticePolytope]) -> Result<LatticePolytope> {
    let first = polys
        .first()
        .ok_or_else(|| Error::input("Cayley polytope of an empty list"))?;
    let n = first.ambient_dim;
    let k = polys.len();
    let mut pts = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        if p.ambient_dim != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.ambient_dim,
            });
        }
        for v in &p.vertices {
            let mut c = vec![Rat::zero(); k];
            c[i] = Rat::one();
            c.extend(v.0.iter().cloned());
            pts.push(RationalVector(c));
        }
    }
    convex_hull(&pts, k + n)
}

impl LatticePolytope {
    pub fn from_points(points: &[LatticePoint]) -> Result<Self> {
        let dim = points.first().map_or(0, |p| p.dim());
        let pts: Vec<RationalVector> = points.iter().map(|p| p.to_rational()).collect();
        convex_hull(&pts, dim)
    }

    /// Hull of integer vertex literals; panics on malformed input. Test and
    /// example convenience.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_points(&super::points(rows)).expect("valid literal polytope")
    }

    /// The bounded polyhedron `{m : <m, normal_i> >= -offset_i}`.
    ///
    /// Vertices are found as basic feasible solutions, then passed through the
    /// hull so that both representations are irredundant.
    pub fn from_inequalities(normals: &[LatticePoint], offsets: &[Rat]) -> Result<Self> {
        let n = normals
            .first()
            .ok_or_else(|| Error::input("no inequalities"))?
            .dim();
        if normals.len() != offsets.len() {
            return Err(Error::input("normals and offsets differ in length"));
        }
        if let Some(bad) = normals.iter().find(|v| v.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.dim(),
            });
        }
        if !positively_spanning(normals)? {
            return Err(Error::domain("inequalities do not bound a polytope"));
        }
        let rows: Vec<Vec<Rat>> = normals.iter().map(|v| arith::to_rat_vec(&v.0)).collect();
        let mut found: Vec<RationalVector> = Vec::new();
        for subset in combinations(normals.len(), n) {
            let a: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].clone()).collect();
            if arith::rank(&a, n) < n {
                continue;
            }
            let b: Vec<Rat> = subset.iter().map(|&i| -offsets[i].clone()).collect();
            let x = arith::solve(&a, &b).expect("nonsingular system");
            let feasible = rows
                .iter()
                .zip(offsets)
                .all(|(r, c)| !(arith::dot(r, &x) + c).is_negative());
            if feasible {
                found.push(RationalVector(x));
            }
        }
        if found.is_empty() {
            return Err(Error::domain("inequalities define an empty polytope"));
        }
        convex_hull(&found, n)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn equations(&self) -> &[Facet] {
        &self.equations
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn is_lattice_polytope(&self) -> bool {
        self.vertices.iter().all(|v| v.is_integral())
    }

    /// Integer vertices; `None` if some vertex is not a lattice point.
    pub fn lattice_vertices(&self) -> Option<Vec<LatticePoint>> {
        self.vertices.iter().map(|v| v.to_lattice()).collect()
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.equations.iter().all(|e| e.eval(x).is_zero())
            && self.facets.iter().all(|f| !f.eval(x).is_negative())
    }

    pub fn contains_point(&self, p: &LatticePoint) -> bool {
        self.contains(&arith::to_rat_vec(&p.0))
    }

    /// True when the origin lies in the interior (full-dimensional case only).
    pub fn has_interior_origin(&self) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.offset.is_positive())
    }

    /// `{u : <m, u> >= -1 for all m in P}`.
    pub fn polar_dual(&self) -> Result<LatticePolytope> {
        if !self.is_full_dimensional() {
            return Err(Error::domain(
                "polar dual needs a full-dimensional polytope",
            ));
        }
        if !self.has_interior_origin() {
            return Err(Error::domain("origin is not an interior point"));
        }
        let pts: Vec<RationalVector> = self
            .facets
            .iter()
            .map(|f| RationalVector(f.normal.0.iter().map(|x| rat_of(x) / &f.offset).collect()))
            .collect();
        convex_hull(&pts, self.ambient_dim)
    }

    pub fn is_reflexive(&self) -> bool {
        self.is_full_dimensional()
            && self.is_lattice_polytope()
            && self.has_interior_origin()
            && self
                .polar_dual()
                .map(|d| d.is_lattice_polytope())
                .unwrap_or(false)
    }

    /// All lattice points, sorted lexicographically.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let n = self.ambient_dim;
        let lo: Vec<Int> = (0..n)
            .map(|j| {
                self.vertices
                    .iter()
                    .map(|v| v.0[j].ceil().to_integer())
                    .min()
                    .unwrap()
            })
            .collect();
        let hi: Vec<Int> = (0..n)
            .map(|j| {
                self.vertices
                    .iter()
                    .map(|v| v.0[j].floor().to_integer())
                    .max()
                    .unwrap()
            })
            .collect();
        let mut out = Vec::new();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return out;
        }
        if n == 0 {
            return vec![LatticePoint(Vec::new())];
        }
        let mut cur = lo.clone();
        loop {
            if self.contains(&arith::to_rat_vec(&cur)) {
                out.push(LatticePoint(cur.clone()));
            }
            // odometer, last coordinate fastest so output is lexicographic
            let mut j = n;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                if cur[j] < hi[j] {
                    cur[j] += 1;
                    cur[(j + 1)..n].clone_from_slice(&lo[(j + 1)..n]);
                    break;
                }
            }
        }
    }

    /// Lattice points on the relative boundary.
    pub fn boundary_lattice_points(&self) -> Vec<LatticePoint> {
        self.lattice_points()
            .into_iter()
            .filter(|p| {
                let x = arith::to_rat_vec(&p.0);
                self.facets.iter().any(|f| f.eval(&x).is_zero())
            })
            .collect()
    }

    /// Lattice points in the relative interior.
    pub fn interior_lattice_points(&self) -> Vec<LatticePoint> {
        self.lattice_points()
            .into_iter()
            .filter(|p| {
                let x = arith::to_rat_vec(&p.0);
                self.facets.iter().all(|f| f.eval(&x).is_positive())
            })
            .collect()
    }

    /// Vertex coordinates in a lattice basis of the affine span (relative to
    /// the first vertex), so that unimodular simplices have volume one.
    fn span_coordinates(&self) -> Vec<Vec<Rat>> {
        let base = &self.vertices[0].0;
        let diffs: Vec<Vec<Rat>> = self
            .vertices
            .iter()
            .map(|v| arith::sub(&v.0, base))
            .collect();
        let sl = SpanLattice::new(&diffs, self.ambient_dim);
        debug_assert_eq!(sl.rank(), self.dim);
        diffs.iter().map(|d| sl.coords(d)).collect()
    }

    /// Placing triangulation of the vertex set as index tuples into
    /// [`vertices`](Self::vertices). Empty for a point.
    pub fn triangulate(&self) -> Vec<Vec<usize>> {
        if self.dim == 0 {
            return Vec::new();
        }
        let coords = self.span_coordinates();
        // span coordinates preserve the vertex order only up to relabelling;
        // placing wants sorted input, so sort and map back
        let mut order: Vec<usize> = (0..coords.len()).collect();
        order.sort_by(|&a, &b| coords[a].cmp(&coords[b]));
        let sorted: Vec<Vec<Rat>> = order.iter().map(|&i| coords[i].clone()).collect();
        Placing::run(&sorted)
            .simplices
            .into_iter()
            .map(|s| {
                let mut t: Vec<usize> = s.into_iter().map(|i| order[i]).collect();
                t.sort_unstable();
                t
            })
            .collect()
    }

    /// Normalized volume of one simplex of [`triangulate`](Self::triangulate),
    /// measured in the lattice of the affine span.
    pub fn simplex_volume(&self, simplex: &[usize]) -> Rat {
        let coords = self.span_coordinates();
        let pts: Vec<&[Rat]> = simplex.iter().map(|&i| coords[i].as_slice()).collect();
        hull::simplex_volume(&pts)
    }

    /// `d!` times the volume inside the affine span, measured against the
    /// lattice induced on that span.
    pub fn normalized_volume_exact(&self) -> Rat {
        if self.dim == 0 {
            return Rat::one();
        }
        let coords = self.span_coordinates();
        let mut sorted = coords.clone();
        sorted.sort();
        Placing::run(&sorted)
            .simplices
            .iter()
            .map(|s| {
                hull::simplex_volume(&s.iter().map(|&i| sorted[i].as_slice()).collect::<Vec<_>>())
            })
            .sum()
    }

    /// Integer normalized volume; fails for non-integral results.
    pub fn normalized_volume(&self) -> Result<Int> {
        let v = self.normalized_volume_exact();
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::domain(format!(
                "normalized volume {} is not an integer",
                arith::fmt_rat(&v)
            )))
        }
    }

    /// Normalized volume in the full ambient space: zero unless full-dimensional.
    pub fn ambient_volume(&self) -> Rat {
        if self.is_full_dimensional() {
            self.normalized_volume_exact()
        } else {
            Rat::zero()
        }
    }

    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<LatticePolytope> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut pts = Vec::with_capacity(self.vertices.len() * other.vertices.len());
        for a in &self.vertices {
            for b in &other.vertices {
                pts.push(RationalVector(arith::add(&a.0, &b.0)));
            }
        }
        convex_hull(&pts, self.ambient_dim)
    }

    /// `area(P+Q) - area(P) - area(Q)` with Euclidean areas in the plane.
    pub fn mixed_area_exact(&self, other: &LatticePolytope) -> Result<Rat> {
        for p in [self, other] {
            if p.ambient_dim != 2 {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: p.ambient_dim,
                });
            }
        }
        let sum = self.minkowski_sum(other)?;
        Ok((sum.ambient_volume() - self.ambient_volume() - other.ambient_volume()) / rat(2))
    }

    /// Mixed area of two lattice polygons (always an integer).
    pub fn mixed_area(&self, other: &LatticePolytope) -> Result<Int> {
        let m = self.mixed_area_exact(other)?;
        if m.is_integer() {
            Ok(m.to_integer())
        } else {
            Err(Error::domain(
                "mixed area of non-lattice polygons is not integral",
            ))
        }
    }

    pub fn pyramid(&self, apex: &LatticePoint) -> Result<LatticePolytope> {
        if apex.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: apex.dim(),
            });
        }
        let a = arith::to_rat_vec(&apex.0);
        if self.equations.iter().all(|e| e.eval(&a).is_zero()) {
            return Err(Error::domain(
                "pyramid apex lies in the affine span of the base",
            ));
        }
        let mut pts = self.vertices.clone();
        pts.push(RationalVector(a));
        convex_hull(&pts, self.ambient_dim)
    }

    /// Vertices minimizing `<·, functional>`.
    pub fn face_vertices(&self, functional: &LatticePoint) -> Vec<&RationalVector> {
        let vals: Vec<Rat> = self
            .vertices
            .iter()
            .map(|v| arith::dot_mixed(&functional.0, &v.0))
            .collect();
        let min = vals.iter().min().unwrap().clone();
        self.vertices
            .iter()
            .zip(&vals)
            .filter(|(_, x)| **x == min)
            .map(|(v, _)| v)
            .collect()
    }

    /// `min_{m ∈ P} <m, functional>`.
    pub fn min_value(&self, functional: &LatticePoint) -> Rat {
        self.vertices
            .iter()
            .map(|v| arith::dot_mixed(&functional.0, &v.0))
            .min()
            .unwrap()
    }

    /// Lattice length of the face minimizing `functional` if it is an edge,
    /// zero if it is a vertex. Faces of higher dimension are an error.
    pub fn face_lattice_length(&self, functional: &LatticePoint) -> Result<Int> {
        let face = self.face_vertices(functional);
        match face.len() {
            1 => Ok(Int::zero()),
            2 => {
                let d = arith::sub(&face[1].0, &face[0].0);
                let d = arith::to_int_vec(&d)
                    .ok_or_else(|| Error::domain("edge with non-lattice endpoints"))?;
                Ok(arith::gcd_all(&d))
            }
            _ => Err(Error::domain(
                "face minimizing the functional is not an edge",
            )),
        }
    }

    pub fn translate(&self, by: &LatticePoint) -> Result<LatticePolytope> {
        let t = arith::to_rat_vec(&by.0);
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| RationalVector(arith::add(&v.0, &t)))
            .collect();
        convex_hull(&pts, self.ambient_dim)
    }

    pub fn scale(&self, k: i64) -> Result<LatticePolytope> {
        let k = rat(k);
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| RationalVector(v.0.iter().map(|x| x * &k).collect()))
            .collect();
        convex_hull(&pts, self.ambient_dim)
    }

    /// Image under an integer linear map given by its rows.
    pub fn linear_image(&self, rows: &[Vec<Int>]) -> Result<LatticePolytope> {
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|v| RationalVector(rows.iter().map(|r| arith::dot_mixed(r, &v.0)).collect()))
            .collect();
        convex_hull(&pts, rows.len())
    }
}

/// Whether the vectors positively span their ambient space.
pub(crate) fn positively_spanning(vs: &[LatticePoint]) -> Result<bool> {
    let n = vs[0].dim();
    let mut pts: Vec<RationalVector> = vs.iter().map(|v| v.to_rational()).collect();
    pts.push(RationalVector(vec![Rat::zero(); n]));
    let h = convex_hull(&pts, n)?;
    Ok(h.has_interior_origin())
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::lattice::points;

    fn rv(v: &[i64]) -> RationalVector {
        RationalVector::from_i64(v)
    }

    fn anticanonical_plane() -> LatticePolytope {
        LatticePolytope::from_i64(&[&[2, -1], &[-1, 2], &[-1, -1]])
    }

    #[test]
    fn hull_drops_redundant_points() {
        let half = Rat::new(int(1), int(2));
        let pts = vec![
            rv(&[0, 0]),
            rv(&[1, 0]),
            rv(&[0, 1]),
            RationalVector(vec![half.clone(), half]),
        ];
        let p = convex_hull(&pts, 2).unwrap();
        assert_eq!(p.vertices().len(), 3);
        assert_eq!(p.facets().len(), 3);
    }

    #[test]
    fn anticanonical_triangle_facets() {
        let p = anticanonical_plane();
        let mut got: Vec<(Vec<i64>, i64)> = p
            .facets()
            .iter()
            .map(|f| {
                (
                    f.normal
                        .0
                        .iter()
                        .map(|x| i64::try_from(x).unwrap())
                        .collect(),
                    i64::try_from(f.offset.to_integer()).unwrap(),
                )
            })
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![(vec![-1, -1], 1), (vec![0, 1], 1), (vec![1, 0], 1)]
        );
    }

    #[test]
    fn hexagon_from_six_points() {
        let p =
            LatticePolytope::from_i64(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[1, 1], &[-1, -1]]);
        assert_eq!(p.vertices().len(), 6);
        assert!(p.is_reflexive());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let err = convex_hull(&[rv(&[0, 0]), rv(&[1])], 2).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        assert!(convex_hull(&[], 2).is_err());
    }

    #[test]
    fn polar_dual_of_anticanonical_triangle() {
        let d = anticanonical_plane().polar_dual().unwrap();
        assert_eq!(d, LatticePolytope::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]]));
        assert_eq!(d.polar_dual().unwrap(), anticanonical_plane());
    }

    #[test]
    fn polar_dual_of_cross_polytope_is_square() {
        let c = LatticePolytope::from_i64(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let sq = LatticePolytope::from_i64(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        assert_eq!(c.polar_dual().unwrap(), sq);
    }

    #[test]
    fn scaled_simplex_is_not_reflexive() {
        let p = LatticePolytope::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]])
            .scale(2)
            .unwrap();
        let d = p.polar_dual().unwrap();
        assert!(!d.is_lattice_polytope());
        assert!(!p.is_reflexive());
    }

    #[test]
    fn polar_dual_needs_interior_origin() {
        let p = LatticePolytope::from_i64(&[&[1, 0], &[0, 1], &[-1, -2]])
            .translate(&LatticePoint::from_i64(&[5, 5]))
            .unwrap();
        assert!(matches!(p.polar_dual(), Err(Error::Domain(_))));
        assert!(!p.is_reflexive());
    }

    #[test]
    fn lattice_points_of_small_triangles() {
        let t = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.lattice_points(), points(&[&[0, 0], &[0, 1], &[1, 0]]));
        let d2 = LatticePolytope::from_i64(&[&[-1, -1], &[1, -1], &[-1, 1]]);
        assert_eq!(
            d2.lattice_points(),
            points(&[&[-1, -1], &[-1, 0], &[-1, 1], &[0, -1], &[0, 0], &[1, -1]])
        );
        assert_eq!(anticanonical_plane().lattice_points().len(), 10);
    }

    #[test]
    fn lattice_points_of_a_lower_dimensional_segment() {
        let s = LatticePolytope::from_i64(&[&[0, 0, 0], &[2, 2, 2]]);
        assert_eq!(
            s.lattice_points(),
            points(&[&[0, 0, 0], &[1, 1, 1], &[2, 2, 2]])
        );
        assert_eq!(s.normalized_volume().unwrap(), int(2));
    }

    #[test]
    fn normalized_volumes() {
        for d in 1..=4 {
            let mut rows = vec![vec![0i64; d]];
            for i in 0..d {
                let mut e = vec![0i64; d];
                e[i] = 1;
                rows.push(e);
            }
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            assert_eq!(
                LatticePolytope::from_i64(&refs)
                    .normalized_volume()
                    .unwrap(),
                int(1)
            );
        }
        assert_eq!(anticanonical_plane().normalized_volume().unwrap(), int(9));
    }

    #[test]
    fn volume_in_affine_span_uses_induced_lattice() {
        // the standard 2-simplex sits in x+y+z=1 and is unimodular there
        let t = LatticePolytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(t.dim(), 2);
        assert_eq!(t.normalized_volume().unwrap(), int(1));
        assert_eq!(t.ambient_volume(), Rat::zero());
    }

    #[test]
    fn minkowski_identity_and_degree_sums() {
        let t = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]);
        let origin = LatticePolytope::from_i64(&[&[0, 0]]);
        assert_eq!(t.minkowski_sum(&origin).unwrap(), t);
        let t3 = t.minkowski_sum(&t).unwrap().minkowski_sum(&t).unwrap();
        assert_eq!(t3, t.scale(3).unwrap());
    }

    #[test]
    fn mixed_areas_match_bezout() {
        let t = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(t.mixed_area(&t).unwrap(), int(1));
        assert_eq!(t.mixed_area(&t.scale(2).unwrap()).unwrap(), int(2));
        let pt = LatticePolytope::from_i64(&[&[3, -4]]);
        assert_eq!(t.mixed_area(&pt).unwrap(), int(0));
        let seg = LatticePolytope::from_i64(&[&[0, 0], &[0, 1]]);
        assert_eq!(t.mixed_area(&seg).unwrap(), int(1));
        assert!(t
            .mixed_area(&LatticePolytope::from_i64(&[&[0, 0, 0]]))
            .is_err());
    }

    #[test]
    fn cayley_of_single_and_pairs() {
        let t = LatticePolytope::from_i64(&[&[0, 0], &[1, 0], &[0, 1]]);
        let c = cayley_polytope(std::slice::from_ref(&t)).unwrap();
        assert_eq!(
            c,
            LatticePolytope::from_i64(&[&[1, 0, 0], &[1, 1, 0], &[1, 0, 1]])
        );
        let s = LatticePolytope::from_i64(&[&[0], &[1]]);
        let c2 = cayley_polytope(&[s.clone(), s]).unwrap();
        assert_eq!((c2.ambient_dim(), c2.dim(), c2.vertices().len()), (3, 2, 4));
        assert!(cayley_polytope(&[]).is_err());
    }

    #[test]
    fn pyramid_over_unit_segment() {
        let s = LatticePolytope::from_i64(&[&[0, 1], &[1, 1]]);
        let p = s.pyramid(&LatticePoint::from_i64(&[0, 0])).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(
            p.normalized_volume().unwrap(),
            s.normalized_volume().unwrap()
        );
        let err = s.pyramid(&LatticePoint::from_i64(&[5, 1])).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn from_inequalities_recovers_triangle_and_point() {
        let rays = points(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let p = LatticePolytope::from_inequalities(&rays, &[rat(1), rat(1), rat(1)]).unwrap();
        assert_eq!(p, anticanonical_plane());
        let z = LatticePolytope::from_inequalities(&rays, &[rat(0), rat(0), rat(0)]).unwrap();
        assert_eq!(z, LatticePolytope::from_i64(&[&[0, 0]]));
        let half = points(&[&[1, 0], &[0, 1]]);
        assert!(matches!(
            LatticePolytope::from_inequalities(&half, &[rat(0), rat(0)]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn face_lengths() {
        let d2 = LatticePolytope::from_i64(&[&[-1, -1], &[1, -1], &[-1, 1]]);
        assert_eq!(
            d2.face_lattice_length(&LatticePoint::from_i64(&[1, 0]))
                .unwrap(),
            int(2)
        );
        assert_eq!(
            d2.face_lattice_length(&LatticePoint::from_i64(&[1, 1]))
                .unwrap(),
            int(0)
        );
    }
}
