//! Beneath-beyond convex hulls with exact rational predicates.
//!
//! Points are inserted in lexicographic order. Every insertion that sees at
//! least one boundary simplex strictly from outside cones those simplices to
//! the new point, so the run also produces a placing triangulation of the
//! hull, which is what the volume code sums over.

use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::arith::{self, dot_mixed, primitive, rat, sub, Int, Rat};

/// A hyperplane `<x, normal> + offset = 0`; the inside is `>= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Halfspace {
    pub normal: Vec<Int>,
    pub offset: Rat,
}

impl Halfspace {
    pub fn eval(&self, x: &[Rat]) -> Rat {
        dot_mixed(&self.normal, x) + &self.offset
    }
}

#[derive(Debug)]
struct BoundarySimplex {
    verts: Vec<usize>,
    plane: Halfspace,
    alive: bool,
}

/// Placing run over full-dimensional points in `R^d`, `d >= 1`.
#[derive(Debug)]
pub(crate) struct Placing {
    pub simplices: Vec<Vec<usize>>,
    boundary: Vec<BoundarySimplex>,
}

impl Placing {
    /// `points` must be distinct, sorted, and affinely span `R^d`.
    pub fn run(points: &[Vec<Rat>]) -> Placing {
        let d = points[0].len();
        let init = initial_simplex(points, d);
        let interior = centroid(init.iter().map(|&i| &points[i]));

        let mut pl = Placing {
            simplices: vec![init.clone()],
            boundary: Vec::new(),
        };
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for skip in 0..=d {
            let verts: Vec<usize> = init
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != skip)
                .map(|(_, &v)| v)
                .collect();
            pl.add_boundary(points, verts, &interior, &mut ridges);
        }

        for p in 0..points.len() {
            if init.contains(&p) {
                continue;
            }
            let visible: Vec<usize> = pl
                .boundary
                .iter()
                .enumerate()
                .filter(|(_, f)| f.alive && f.plane.eval(&points[p]).is_negative())
                .map(|(i, _)| i)
                .collect();
            if visible.is_empty() {
                continue;
            }
            let mut horizon = Vec::new();
            for &f in &visible {
                let verts = pl.boundary[f].verts.clone();
                let mut simplex = verts.clone();
                simplex.push(p);
                simplex.sort_unstable();
                pl.simplices.push(simplex);
                for skip in 0..verts.len() {
                    let ridge = ridge_of(&verts, skip);
                    let neighbours = &ridges[&ridge];
                    let across = neighbours.iter().copied().find(|&g| g != f);
                    if let Some(g) = across {
                        if !visible.contains(&g) {
                            horizon.push(ridge);
                        }
                    }
                }
            }
            for &f in &visible {
                pl.boundary[f].alive = false;
                let verts = pl.boundary[f].verts.clone();
                for skip in 0..verts.len() {
                    let ridge = ridge_of(&verts, skip);
                    if let Some(list) = ridges.get_mut(&ridge) {
                        list.retain(|&g| g != f);
                    }
                }
            }
            for ridge in horizon {
                let mut verts = ridge;
                verts.push(p);
                verts.sort_unstable();
                pl.add_boundary(points, verts, &interior, &mut ridges);
            }
        }
        pl
    }

    fn add_boundary(
        &mut self,
        points: &[Vec<Rat>],
        verts: Vec<usize>,
        interior: &[Rat],
        ridges: &mut HashMap<Vec<usize>, Vec<usize>>,
    ) {
        let plane = hyperplane_through(
            verts.iter().map(|&i| points[i].as_slice()).collect(),
            interior,
        );
        let id = self.boundary.len();
        for skip in 0..verts.len() {
            ridges.entry(ridge_of(&verts, skip)).or_default().push(id);
        }
        self.boundary.push(BoundarySimplex {
            verts,
            plane,
            alive: true,
        });
    }

    /// Live boundary simplices with their supporting halfspaces.
    pub fn boundary(&self) -> impl Iterator<Item = (&[usize], &Halfspace)> {
        self.boundary
            .iter()
            .filter(|f| f.alive)
            .map(|f| (f.verts.as_slice(), &f.plane))
    }
}

fn ridge_of(verts: &[usize], skip: usize) -> Vec<usize> {
    verts
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != skip)
        .map(|(_, &v)| v)
        .collect()
}

fn centroid<'a>(pts: impl Iterator<Item = &'a Vec<Rat>>) -> Vec<Rat> {
    let pts: Vec<&Vec<Rat>> = pts.collect();
    let n = rat(pts.len() as i64);
    let d = pts[0].len();
    (0..d)
        .map(|j| pts.iter().fold(Rat::zero(), |acc, p| acc + &p[j]) / &n)
        .collect()
}

/// Greedy affinely independent prefix in input order.
fn initial_simplex(points: &[Vec<Rat>], d: usize) -> Vec<usize> {
    let mut chosen = vec![0];
    let mut diffs: Vec<Vec<Rat>> = Vec::new();
    for (i, p) in points.iter().enumerate().skip(1) {
        if chosen.len() == d + 1 {
            break;
        }
        let mut trial = diffs.clone();
        trial.push(sub(p, &points[0]));
        if arith::rank(&trial, d) == trial.len() {
            diffs = trial;
            chosen.push(i);
        }
    }
    assert_eq!(chosen.len(), d + 1, "points do not span the ambient space");
    chosen
}

/// Hyperplane through `d` affinely independent points of `R^d`, oriented so
/// that `interior` is strictly inside.
pub(crate) fn hyperplane_through(pts: Vec<&[Rat]>, interior: &[Rat]) -> Halfspace {
    let d = pts[0].len();
    let diffs: Vec<Vec<Rat>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let ns = arith::nullspace(&diffs, d);
    debug_assert_eq!(ns.len(), 1);
    let normal = primitive(&ns[0]);
    let offset = -dot_mixed(&normal, pts[0]);
    let mut h = Halfspace { normal, offset };
    if h.eval(interior).is_negative() {
        h.normal = h.normal.iter().map(|x| -x).collect();
        h.offset = -h.offset;
    }
    h
}

/// Irredundant description of the hull of full-dimensional points in `R^d`.
#[derive(Debug)]
pub(crate) struct FullHull {
    pub vertices: Vec<Vec<Rat>>,
    pub facets: Vec<Halfspace>,
}

pub(crate) fn full_hull(points: &[Vec<Rat>]) -> FullHull {
    let d = points[0].len();
    let pl = Placing::run(points);
    let mut facets: Vec<Halfspace> = pl.boundary().map(|(_, h)| h.clone()).collect();
    facets.sort();
    facets.dedup();
    let mut on_boundary: Vec<usize> = pl.boundary().flat_map(|(v, _)| v.iter().copied()).collect();
    on_boundary.sort_unstable();
    on_boundary.dedup();
    let vertices = on_boundary
        .into_iter()
        .filter(|&i| {
            let tight: Vec<Vec<Rat>> = facets
                .iter()
                .filter(|h| h.eval(&points[i]).is_zero())
                .map(|h| arith::to_rat_vec(&h.normal))
                .collect();
            arith::rank(&tight, d) == d
        })
        .map(|i| points[i].clone())
        .collect();
    FullHull { vertices, facets }
}

/// `d! · vol` of a simplex given by `d + 1` points.
pub(crate) fn simplex_volume(pts: &[&[Rat]]) -> Rat {
    let diffs: Vec<Vec<Rat>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    arith::det(&diffs).abs()
}
