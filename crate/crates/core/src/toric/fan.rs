use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticePoint, LatticePolytope};

/// A fan given by its primitive rays (sorted lexicographically) and its
/// maximal cones as sorted ray-index sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    ambient_dim: usize,
    rays: Vec<LatticePoint>,
    max_cones: Vec<Vec<usize>>,
}

impl Fan {
    /// Builds a fan, reordering rays into canonical order and remapping the
    /// cone index sets accordingly.
    pub fn new(
        ambient_dim: usize,
        rays: Vec<LatticePoint>,
        max_cones: Vec<Vec<usize>>,
    ) -> Result<Fan> {
        for r in &rays {
            if r.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: r.dim(),
                });
            }
            if !r.is_primitive() {
                return Err(Error::input(format!(
                    "ray {r} is not a primitive lattice vector"
                )));
            }
        }
        let mut order: Vec<usize> = (0..rays.len()).collect();
        order.sort_by(|&a, &b| rays[a].cmp(&rays[b]));
        let sorted: Vec<LatticePoint> = order.iter().map(|&i| rays[i].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("duplicate ray"));
        }
        let mut new_index = vec![0; rays.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut cones = Vec::with_capacity(max_cones.len());
        for c in max_cones {
            let mut mapped = Vec::with_capacity(c.len());
            for i in c {
                let &j = new_index.get(i).ok_or_else(|| {
                    Error::input(format!("cone references ray {i}, which does not exist"))
                })?;
                mapped.push(j);
            }
            mapped.sort_unstable();
            mapped.dedup();
            cones.push(mapped);
        }
        cones.sort();
        cones.dedup();
        Ok(Fan {
            ambient_dim,
            rays: sorted,
            max_cones: cones,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn max_cones(&self) -> &[Vec<usize>] {
        &self.max_cones
    }

    pub fn ray_index(&self, r: &LatticePoint) -> Option<usize> {
        self.rays.binary_search(r).ok()
    }

    pub fn cone_rays(&self, c: usize) -> Vec<LatticePoint> {
        self.max_cones[c]
            .iter()
            .map(|&i| self.rays[i].clone())
            .collect()
    }

    pub fn cone(&self, c: usize) -> Result<Cone> {
        Cone::new(&self.cone_rays(c), self.ambient_dim)
    }

    fn cone_rank(&self, c: usize) -> usize {
        let rows: Vec<Vec<Rat>> = self.max_cones[c]
            .iter()
            .map(|&i| arith::to_rat_vec(&self.rays[i].0))
            .collect();
        arith::rank(&rows, self.ambient_dim)
    }

    /// Every maximal cone's generators are linearly independent.
    pub fn is_simplicial(&self) -> bool {
        (0..self.max_cones.len()).all(|c| self.cone_rank(c) == self.max_cones[c].len())
    }

    /// Every maximal cone's generators extend to a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && self.max_cones.iter().all(|c| {
                let rows: Vec<Vec<Int>> = c.iter().map(|&i| self.rays[i].0.clone()).collect();
                is_saturated_basis(&rows, self.ambient_dim)
            })
    }

    /// Maximal cones are full-dimensional, every facet of a maximal cone is
    /// shared by exactly one other maximal cone lying on the opposite side,
    /// and an interior direction of each maximal cone lies in no other one.
    pub fn is_complete(&self) -> bool {
        self.completeness_failure().is_none()
    }

    pub fn completeness_failure(&self) -> Option<String> {
        let n = self.ambient_dim;
        if self.max_cones.is_empty() {
            return Some("fan has no cones".into());
        }
        let mut cones = Vec::with_capacity(self.max_cones.len());
        for c in 0..self.max_cones.len() {
            match self.cone(c) {
                Ok(k) if k.is_full_dimensional() && k.is_strongly_convex() => cones.push(k),
                _ => {
                    return Some(format!(
                        "maximal cone {c} is not full-dimensional and strongly convex"
                    ))
                }
            }
        }
        // facet ray-set -> (cone, inner normal)
        let mut facets: BTreeMap<Vec<usize>, Vec<(usize, LatticePoint)>> = BTreeMap::new();
        for (c, cone) in cones.iter().enumerate() {
            let normals = match cone.facet_normals() {
                Ok(v) => v,
                Err(e) => return Some(e.to_string()),
            };
            for u in normals {
                let on: Vec<usize> = self.max_cones[c]
                    .iter()
                    .copied()
                    .filter(|&i| self.rays[i].dot(&u).is_zero())
                    .collect();
                facets.entry(on).or_default().push((c, u));
            }
        }
        for (rays, owners) in &facets {
            if owners.len() != 2 {
                return Some(format!(
                    "facet {rays:?} lies in {} maximal cones",
                    owners.len()
                ));
            }
            let (a, ref u) = owners[0];
            let (b, _) = owners[1];
            let opposite = self.max_cones[b]
                .iter()
                .filter(|i| !rays.contains(i))
                .all(|&i| self.rays[i].dot(u).is_negative());
            if !opposite {
                return Some(format!("cones {a} and {b} overlap across a shared facet"));
            }
        }
        for c in 0..self.max_cones.len() {
            let mut probe = vec![Int::zero(); n];
            for &i in &self.max_cones[c] {
                for (p, x) in probe.iter_mut().zip(&self.rays[i].0) {
                    *p += x;
                }
            }
            let probe = LatticePoint(probe);
            let hits = cones
                .iter()
                .filter(|k| k.contains(&probe).unwrap_or(false))
                .count();
            if hits != 1 {
                return Some(format!(
                    "interior direction of cone {c} lies in {hits} maximal cones"
                ));
            }
        }
        None
    }

    /// All cones of a simplicial fan grouped by dimension: entry `k` lists
    /// the `k`-dimensional cones as sorted ray-index sets.
    pub fn cones_by_dim(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        if !self.is_simplicial() {
            return Err(Error::domain(
                "face enumeration is implemented for simplicial fans",
            ));
        }
        let mut by_dim: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); self.ambient_dim + 1];
        for c in &self.max_cones {
            let k = c.len();
            for mask in 0u64..(1u64 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| c[b])
                    .collect();
                by_dim[face.len()].insert(face);
            }
        }
        Ok(by_dim
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect())
    }

    /// `h^{p,p}` of the smooth complete toric variety, `p = 0..=n`.
    pub fn hodge_numbers(&self) -> Result<Vec<Int>> {
        if !self.is_smooth() {
            return Err(Error::NotSmooth("fan is not smooth".into()));
        }
        if let Some(why) = self.completeness_failure() {
            return Err(Error::domain(format!("fan is not complete: {why}")));
        }
        let n = self.ambient_dim;
        let f: Vec<usize> = self.cones_by_dim()?.iter().map(|c| c.len()).collect();
        Ok((0..=n)
            .map(|p| {
                (p..=n).fold(Int::zero(), |acc, i| {
                    let term = arith::binomial(i, p) * Int::from(f[n - i]);
                    if (i - p) % 2 == 0 {
                        acc + term
                    } else {
                        acc - term
                    }
                })
            })
            .collect())
    }

    /// Topological Euler characteristic of a smooth complete toric variety:
    /// the number of maximal cones.
    pub fn euler_characteristic(&self) -> usize {
        self.max_cones.len()
    }

    /// Whether each maximal cone of `self` sits inside some maximal cone of
    /// `coarser`.
    pub fn refines(&self, coarser: &Fan) -> Result<bool> {
        let outer: Vec<Cone> = (0..coarser.max_cones.len())
            .map(|c| coarser.cone(c))
            .collect::<Result<_>>()?;
        for c in 0..self.max_cones.len() {
            let rays = self.cone_rays(c);
            let inside = outer
                .iter()
                .any(|k| rays.iter().all(|r| k.contains(r).unwrap_or(false)));
            if !inside {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether some `g ∈ GL(n, Z)` maps `self` onto `other` (rays to rays,
    /// maximal cones to maximal cones). Tries every ordered image of one
    /// full-dimensional simplicial cone, so it is meant for small fans.
    pub fn is_isomorphic(&self, other: &Fan) -> bool {
        let n = self.ambient_dim;
        if n != other.ambient_dim
            || self.rays.len() != other.rays.len()
            || self.max_cones.len() != other.max_cones.len()
        {
            return false;
        }
        let Some(src) = self.max_cones.iter().find(|c| {
            c.len() == n && {
                let rows: Vec<Vec<Rat>> = c
                    .iter()
                    .map(|&i| arith::to_rat_vec(&self.rays[i].0))
                    .collect();
                arith::rank(&rows, n) == n
            }
        }) else {
            return false;
        };
        let basis: Vec<Vec<Rat>> = src
            .iter()
            .map(|&i| arith::to_rat_vec(&self.rays[i].0))
            .collect();
        let target_cones: BTreeSet<Vec<usize>> = other.max_cones.iter().cloned().collect();
        for tgt in other.max_cones.iter().filter(|c| c.len() == n) {
            for perm in permutations(n) {
                let images: Vec<Vec<Rat>> = perm
                    .iter()
                    .map(|&k| arith::to_rat_vec(&other.rays[tgt[k]].0))
                    .collect();
                let Some(g) = linear_map(&basis, &images, n) else {
                    continue;
                };
                if self.maps_onto(&g, other, &target_cones) {
                    return true;
                }
            }
        }
        false
    }

    fn maps_onto(&self, g: &[Vec<Int>], other: &Fan, target_cones: &BTreeSet<Vec<usize>>) -> bool {
        let mut ray_map = Vec::with_capacity(self.rays.len());
        for r in &self.rays {
            let img = LatticePoint(g.iter().map(|row| arith::dot_int(row, &r.0)).collect());
            match other.ray_index(&img) {
                Some(j) => ray_map.push(j),
                None => return false,
            }
        }
        self.max_cones.iter().all(|c| {
            let mut img: Vec<usize> = c.iter().map(|&i| ray_map[i]).collect();
            img.sort_unstable();
            target_cones.contains(&img)
        })
    }
}

/// The integer matrix `g` (rows) with `g · b_k = t_k`, if it lies in GL(n, Z).
fn linear_map(basis: &[Vec<Rat>], images: &[Vec<Rat>], n: usize) -> Option<Vec<Vec<Int>>> {
    // g · B = T with B, T having the vectors as columns; solve row by row:
    // row_i(g) · b_k = t_k[i] for all k
    let mut g = Vec::with_capacity(n);
    for i in 0..n {
        let rhs: Vec<Rat> = images.iter().map(|t| t[i].clone()).collect();
        let row = arith::solve(basis, &rhs)?;
        g.push(arith::to_int_vec(&row)?);
    }
    if arith::det_int(&g).abs() == Int::one() {
        Some(g)
    } else {
        None
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Whether the rows are part of a Z-basis of `Zⁿ` (independent and
/// generating a saturated sublattice).
pub(crate) fn is_saturated_basis(rows: &[Vec<Int>], n: usize) -> bool {
    let ce = arith::column_echelon(rows, n);
    if ce.rank != rows.len() {
        return false;
    }
    // after column reduction the leading k×k block is lower triangular
    (0..ce.rank).all(|i| ce.h[i][i].abs() == Int::one())
}

/// Normal fan of a full-dimensional polytope: one ray per facet (its
/// primitive inner normal) and one maximal cone per vertex.
pub fn normal_fan(p: &LatticePolytope) -> Result<Fan> {
    if !p.is_full_dimensional() {
        return Err(Error::domain(
            "normal fan needs a full-dimensional polytope",
        ));
    }
    let rays: Vec<LatticePoint> = p.facets().iter().map(|f| f.normal.clone()).collect();
    let cones = p
        .vertices()
        .iter()
        .map(|v| {
            p.facets()
                .iter()
                .enumerate()
                .filter(|(_, f)| f.eval(&v.0).is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Fan::new(p.ambient_dim(), rays, cones)
}

fn det2(u: &LatticePoint, v: &LatticePoint) -> Int {
    &u.0[0] * &v.0[1] - &u.0[1] * &v.0[0]
}

/// A smooth refinement of a simplicial 2-dimensional fan: every cone of
/// determinant > 1 is split at the primitive lattice point of its half-open
/// fundamental parallelogram that comes first lexicographically, until all
/// cones are unimodular.
pub fn resolve_surface_fan(fan: &Fan) -> Result<Fan> {
    if fan.ambient_dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: fan.ambient_dim(),
        });
    }
    let mut rays: Vec<LatticePoint> = fan.rays().to_vec();
    let mut todo: Vec<(LatticePoint, LatticePoint)> = Vec::new();
    let mut done: Vec<(LatticePoint, LatticePoint)> = Vec::new();
    for c in fan.max_cones() {
        match c.as_slice() {
            [a, b] => todo.push((rays[*a].clone(), rays[*b].clone())),
            [_] => done.push((rays[c[0]].clone(), rays[c[0]].clone())),
            _ => return Err(Error::domain("resolution needs a simplicial fan")),
        }
    }
    while let Some((u, v)) = todo.pop() {
        let d = det2(&u, &v);
        if d.abs() <= Int::one() {
            done.push((u, v));
            continue;
        }
        // points λu + μv, 0 ≤ λ, μ < 1, inside the bounding box of the parallelogram
        let corners = [&u.0, &v.0];
        let lo: Vec<Int> = (0..2)
            .map(|k| corners.iter().map(|c| c[k].clone().min(Int::zero())).sum())
            .collect();
        let hi: Vec<Int> = (0..2)
            .map(|k| corners.iter().map(|c| c[k].clone().max(Int::zero())).sum())
            .collect();
        let mut split = None;
        let mut x = lo[0].clone();
        'search: while x <= hi[0] {
            let mut y = lo[1].clone();
            while y <= hi[1] {
                let p = LatticePoint(vec![x.clone(), y.clone()]);
                let (lam, mu) = (det2(&p, &v), det2(&u, &p));
                let inside = |t: &Int| {
                    if d.is_positive() {
                        !t.is_negative() && *t < d
                    } else {
                        !t.is_positive() && *t > d
                    }
                };
                if !p.is_zero() && inside(&lam) && inside(&mu) && !lam.is_zero() && !mu.is_zero() {
                    split = Some(LatticePoint(arith::primitive_int(&p.0)));
                    break 'search;
                }
                y += 1;
            }
            x += 1;
        }
        let w =
            split.ok_or_else(|| Error::consistency("no lattice point in a non-unimodular cone"))?;
        if !rays.contains(&w) {
            rays.push(w.clone());
        }
        todo.push((u, w.clone()));
        todo.push((w, v));
    }
    let index = |r: &LatticePoint| rays.iter().position(|x| x == r).expect("known ray");
    let cones = done.iter().map(|(u, v)| vec![index(u), index(v)]).collect();
    Fan::new(2, rays.clone(), cones)
}

/// The face fan of a polytope containing the origin in its interior: cones
/// over its facets.
pub fn face_fan(p: &LatticePolytope) -> Result<Fan> {
    if !p.has_interior_origin() {
        return Err(Error::domain("face fan needs the origin in the interior"));
    }
    let verts = p
        .lattice_vertices()
        .ok_or_else(|| Error::domain("face fan of a polytope with non-lattice vertices"))?;
    let rays: Vec<LatticePoint> = verts
        .iter()
        .map(|v| LatticePoint(arith::primitive_int(&v.0)))
        .collect();
    let cones = p
        .facets()
        .iter()
        .map(|f| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, v)| f.eval(&arith::to_rat_vec(&v.0)).is_zero())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Fan::new(p.ambient_dim(), rays, cones)
}
