//! Exact polyhedral kernel: lattice polytopes, cones and triangulations.

mod cone;
pub(crate) mod hull;
mod polytope;
mod triangulation;

use std::fmt;

use crate::arith::{self, Int, Rat};

pub use cone::Cone;
pub use polytope::{cayley_polytope, convex_hull, Facet, LatticePolytope};
pub use triangulation::{maximal_boundary_triangulation, Triangulation};

/// A point of `Zⁿ`. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<Int>);

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticePoint(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint(arith::ints(coords))
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![Int::from(0); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x == &Int::from(0))
    }

    pub fn is_primitive(&self) -> bool {
        arith::gcd_all(&self.0) == Int::from(1)
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector(arith::to_rat_vec(&self.0))
    }

    pub fn dot(&self, other: &LatticePoint) -> Int {
        arith::dot_int(&self.0, &other.0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Qⁿ`, kept in lowest terms by construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(pub Vec<Rat>);

impl RationalVector {
    pub fn from_i64(coords: &[i64]) -> Self {
        RationalVector(coords.iter().map(|&x| arith::rat(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        arith::is_integral(&self.0)
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        arith::to_int_vec(&self.0).map(LatticePoint)
    }
}

impl From<&LatticePoint> for RationalVector {
    fn from(p: &LatticePoint) -> Self {
        p.to_rational()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", arith::fmt_rat(x))?;
        }
        write!(f, ")")
    }
}

/// Shorthand for a list of lattice points from integer literals.
pub fn points(rows: &[&[i64]]) -> Vec<LatticePoint> {
    rows.iter().map(|r| LatticePoint::from_i64(r)).collect()
}
