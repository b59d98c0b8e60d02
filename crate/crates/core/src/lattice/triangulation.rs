use num_traits::{Signed, Zero};

use super::hull::Placing;
use super::{LatticePoint, LatticePolytope};
use crate::arith::{self, Int, Rat};
use crate::error::{Error, Result};

/// A triangulation of a polytope by simplices on a fixed point list.
///
/// For boundary triangulations of reflexive polytopes every simplex contains
/// the origin, so the simplices double as the maximal cones of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub polytope: LatticePolytope,
    /// Index tuples into `uses_points`, each sorted.
    pub simplices: Vec<Vec<usize>>,
    pub uses_points: Vec<LatticePoint>,
    /// Every maximal simplex has determinant ±1.
    pub unimodular: bool,
}

impl Triangulation {
    pub fn simplex_points(&self, s: usize) -> Vec<&LatticePoint> {
        self.simplices[s]
            .iter()
            .map(|&i| &self.uses_points[i])
            .collect()
    }

    /// Normalized volume of one simplex.
    pub fn simplex_volume(&self, s: usize) -> Int {
        let pts = self.simplex_points(s);
        let diffs: Vec<Vec<Int>> = pts[1..]
            .iter()
            .map(|p| p.0.iter().zip(&pts[0].0).map(|(a, b)| a - b).collect())
            .collect();
        arith::det_int(&diffs).abs()
    }

    /// The simplices with the origin removed, i.e. cones over boundary simplices.
    pub fn boundary_cells(&self) -> Vec<Vec<usize>> {
        let origin = self.uses_points.iter().position(|p| p.is_zero());
        self.simplices
            .iter()
            .map(|s| s.iter().copied().filter(|&i| Some(i) != origin).collect())
            .collect()
    }
}

/// Triangulation of a reflexive polytope coned from the origin, using every
/// boundary lattice point.
///
/// Starts from the placing triangulation of the vertex boundary and applies
/// stellar subdivisions at the remaining boundary lattice points in
/// lexicographic order. In dimension at most three the result is always
/// unimodular; in higher dimensions the flag can come out false.
pub fn maximal_boundary_triangulation(p: &LatticePolytope) -> Result<Triangulation> {
    if !p.is_reflexive() {
        return Err(Error::domain(
            "boundary triangulation needs a reflexive polytope",
        ));
    }
    let n = p.ambient_dim();
    let mut uses_points = p.lattice_points();
    let origin_idx = uses_points
        .iter()
        .position(|q| q.is_zero())
        .expect("reflexive contains 0");
    let coords: Vec<Vec<Rat>> = uses_points
        .iter()
        .map(|q| arith::to_rat_vec(&q.0))
        .collect();

    let verts = p.lattice_vertices().expect("lattice polytope");
    let vert_idx: Vec<usize> = verts
        .iter()
        .map(|v| {
            uses_points
                .binary_search(v)
                .expect("vertex is a lattice point")
        })
        .collect();
    let vert_coords: Vec<Vec<Rat>> = vert_idx.iter().map(|&i| coords[i].clone()).collect();
    let placing = Placing::run(&vert_coords);

    let mut simplices: Vec<Vec<usize>> = placing
        .boundary()
        .map(|(b, _)| {
            let mut s: Vec<usize> = b.iter().map(|&k| vert_idx[k]).collect();
            s.push(origin_idx);
            s.sort_unstable();
            s
        })
        .collect();

    for (pi, q) in coords.iter().enumerate() {
        if pi == origin_idx || simplices.iter().any(|s| s.contains(&pi)) {
            continue;
        }
        let mut next = Vec::with_capacity(simplices.len() + n);
        for s in simplices {
            let Some(bary) = barycentric(&coords, &s, q) else {
                next.push(s);
                continue;
            };
            for (k, lambda) in bary.iter().enumerate() {
                if lambda.is_positive() {
                    let mut t = s.clone();
                    t[k] = pi;
                    t.sort_unstable();
                    next.push(t);
                }
            }
        }
        simplices = next;
    }
    simplices.sort();

    let mut tri = Triangulation {
        polytope: p.clone(),
        simplices,
        uses_points: std::mem::take(&mut uses_points),
        unimodular: false,
    };
    tri.unimodular = (0..tri.simplices.len()).all(|s| tri.simplex_volume(s) == Int::from(1));
    Ok(tri)
}

/// Barycentric coordinates of `q` in the simplex `s`, or `None` if `q` lies
/// outside it.
fn barycentric(coords: &[Vec<Rat>], s: &[usize], q: &[Rat]) -> Option<Vec<Rat>> {
    let base = &coords[s[0]];
    let n = q.len();
    // columns: v_k - v_0 for k >= 1
    let a: Vec<Vec<Rat>> = (0..n)
        .map(|row| {
            s[1..]
                .iter()
                .map(|&k| &coords[k][row] - &base[row])
                .collect()
        })
        .collect();
    let b = arith::sub(q, base);
    let mu = arith::solve(&a, &b)?;
    let first = mu
        .iter()
        .fold(Rat::from_integer(1.into()), |acc, x| acc - x);
    let mut lambda = vec![first];
    lambda.extend(mu);
    if lambda.iter().any(|x| x.is_negative()) {
        return None;
    }
    debug_assert!(!lambda.iter().all(|x| x.is_zero()));
    Some(lambda)
}
