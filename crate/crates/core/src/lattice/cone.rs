use num_traits::Zero;

use super::{convex_hull, LatticePoint, LatticePolytope, RationalVector};
use crate::arith::{self, Rat};
use crate::error::{Error, Result};

/// A rational polyhedral cone given by primitive extremal ray generators,
/// sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    ambient_dim: usize,
    generators: Vec<LatticePoint>,
    dim: usize,
    strongly_convex: bool,
}

impl Cone {
    /// The cone spanned by `gens`. Generators are reduced to primitive
    /// extremal rays when the cone is strongly convex; otherwise they are
    /// kept (primitive, deduplicated) and the cone is flagged.
    pub fn new(gens: &[LatticePoint], ambient_dim: usize) -> Result<Cone> {
        if let Some(bad) = gens.iter().find(|g| g.dim() != ambient_dim) {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: bad.dim(),
            });
        }
        let mut prim: Vec<LatticePoint> = gens
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| LatticePoint(arith::primitive_int(&g.0)))
            .collect();
        prim.sort();
        prim.dedup();
        if prim.is_empty() {
            return Ok(Cone {
                ambient_dim,
                generators: prim,
                dim: 0,
                strongly_convex: true,
            });
        }
        let q = hull_with_origin(&prim, ambient_dim)?;
        let origin = vec![Rat::zero(); ambient_dim];
        let strongly_convex = q.vertices().iter().any(|v| v.0 == origin);
        let dim = q.dim();
        if !strongly_convex {
            return Ok(Cone {
                ambient_dim,
                generators: prim,
                dim,
                strongly_convex,
            });
        }
        let through_origin: Vec<Vec<Rat>> = q
            .facets()
            .iter()
            .filter(|f| f.offset.is_zero())
            .chain(q.equations())
            .map(|f| arith::to_rat_vec(&f.normal.0))
            .collect();
        let generators = prim
            .into_iter()
            .filter(|g| {
                let x = arith::to_rat_vec(&g.0);
                let tight: Vec<Vec<Rat>> = through_origin
                    .iter()
                    .filter(|n| arith::dot(n, &x).is_zero())
                    .cloned()
                    .collect();
                arith::rank(&tight, ambient_dim) == ambient_dim - 1
            })
            .collect();
        Ok(Cone {
            ambient_dim,
            generators,
            dim,
            strongly_convex,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &[LatticePoint] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_strongly_convex(&self) -> bool {
        self.strongly_convex
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    /// Primitive inner facet normals `u` with `<v, u> >= 0` on the cone.
    pub fn facet_normals(&self) -> Result<Vec<LatticePoint>> {
        if !self.is_full_dimensional() {
            return Err(Error::domain("facet normals need a full-dimensional cone"));
        }
        let q = hull_with_origin(&self.generators, self.ambient_dim)?;
        let mut normals: Vec<LatticePoint> = q
            .facets()
            .iter()
            .filter(|f| f.offset.is_zero())
            .map(|f| f.normal.clone())
            .collect();
        normals.sort();
        Ok(normals)
    }

    /// `{u : <v, u> >= 0 for all v in C}` for a full-dimensional strongly
    /// convex cone.
    pub fn dual_cone(&self) -> Result<Cone> {
        if !self.strongly_convex || !self.is_full_dimensional() {
            return Err(Error::domain(
                "dual cone is only represented for full-dimensional strongly convex cones",
            ));
        }
        Cone::new(&self.facet_normals()?, self.ambient_dim)
    }

    pub fn contains(&self, x: &LatticePoint) -> Result<bool> {
        let normals = self.facet_normals()?;
        Ok(normals.iter().all(|n| n.dot(x) >= 0.into()))
    }
}

fn hull_with_origin(gens: &[LatticePoint], n: usize) -> Result<LatticePolytope> {
    let mut pts: Vec<RationalVector> = gens.iter().map(|g| g.to_rational()).collect();
    pts.push(RationalVector(vec![Rat::zero(); n]));
    convex_hull(&pts, n)
}
