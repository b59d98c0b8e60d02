use num_traits::{One, Zero};

use super::Fan;
use crate::arith::{self, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};

/// A torus-invariant Weil divisor `Σ a_ρ D_ρ` on the toric variety of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricDivisor<'a> {
    fan: &'a Fan,
    coeffs: Vec<Int>,
}

impl<'a> ToricDivisor<'a> {
    pub fn new(fan: &'a Fan, coeffs: Vec<Int>) -> Result<Self> {
        if coeffs.len() != fan.rays().len() {
            return Err(Error::DimensionMismatch {
                expected: fan.rays().len(),
                got: coeffs.len(),
            });
        }
        Ok(ToricDivisor { fan, coeffs })
    }

    pub fn from_i64(fan: &'a Fan, coeffs: &[i64]) -> Result<Self> {
        Self::new(fan, arith::ints(coeffs))
    }

    /// `D_ρ` for the ray with index `i`.
    pub fn prime(fan: &'a Fan, i: usize) -> Self {
        let mut coeffs = vec![Int::zero(); fan.rays().len()];
        coeffs[i] = Int::one();
        ToricDivisor { fan, coeffs }
    }

    /// `-K = Σ D_ρ`.
    pub fn anticanonical(fan: &'a Fan) -> Self {
        ToricDivisor {
            fan,
            coeffs: vec![Int::one(); fan.rays().len()],
        }
    }

    pub fn fan(&self) -> &'a Fan {
        self.fan
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn scaled(&self, k: &Int) -> Self {
        ToricDivisor {
            fan: self.fan,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    pub fn plus(&self, other: &ToricDivisor<'_>) -> Result<Self> {
        if self.fan != other.fan {
            return Err(Error::input("divisors live on different fans"));
        }
        Ok(ToricDivisor {
            fan: self.fan,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `Δ_D = { m : <m, u_ρ> ≥ -a_ρ }`.
    pub fn polytope(&self) -> Result<LatticePolytope> {
        let offsets: Vec<Rat> = self.coeffs.iter().map(arith::rat_of).collect();
        LatticePolytope::from_inequalities(self.fan.rays(), &offsets)
    }

    /// Rational linear pieces of the support function: for each maximal
    /// cone σ the `m_σ ∈ Q^n` with `<m_σ, u_ρ> = a_ρ` for all `ρ ∈ σ`.
    pub fn rational_support(&self) -> Result<Vec<Vec<Rat>>> {
        let n = self.fan.ambient_dim();
        let mut out = Vec::with_capacity(self.fan.max_cones().len());
        for (c, cone) in self.fan.max_cones().iter().enumerate() {
            let rows: Vec<Vec<Rat>> = cone
                .iter()
                .map(|&i| arith::to_rat_vec(&self.fan.rays()[i].0))
                .collect();
            let rhs: Vec<Rat> = cone
                .iter()
                .map(|&i| arith::rat_of(&self.coeffs[i]))
                .collect();
            let m = arith::solve(&rows, &rhs).ok_or_else(|| {
                Error::NotCartier(format!(
                    "no linear function matches the divisor on maximal cone {c}"
                ))
            })?;
            if arith::rank(&rows, n) < n {
                return Err(Error::domain(format!(
                    "maximal cone {c} is not full-dimensional"
                )));
            }
            out.push(m);
        }
        Ok(out)
    }

    /// Cartier data; errors with `NotCartier` when some `m_σ` is not integral.
    pub fn cartier_data(&self) -> Result<CartierData> {
        let rational = self.rational_support()?;
        let mut m_sigma = Vec::with_capacity(rational.len());
        for (c, m) in rational.iter().enumerate() {
            let m = arith::to_int_vec(m).ok_or_else(|| {
                Error::NotCartier(format!("m_σ on maximal cone {c} is not integral"))
            })?;
            m_sigma.push(LatticePoint(m));
        }
        let (nef, ample) = convexity(self.fan, &self.coeffs, &rational);
        Ok(CartierData {
            m_sigma,
            nef,
            ample,
        })
    }

    /// Q-Cartier and the support function is convex.
    pub fn is_nef(&self) -> Result<bool> {
        let rational = self.rational_support()?;
        Ok(convexity(self.fan, &self.coeffs, &rational).0)
    }

    pub fn is_ample(&self) -> Result<bool> {
        let rational = self.rational_support()?;
        Ok(convexity(self.fan, &self.coeffs, &rational).1)
    }
}

/// (nef, ample): `<m_σ, u_ρ> ≤ a_ρ` for all ρ, strictly for ρ ∉ σ.
fn convexity(fan: &Fan, coeffs: &[Int], support: &[Vec<Rat>]) -> (bool, bool) {
    let mut nef = true;
    let mut ample = true;
    for (cone, m) in fan.max_cones().iter().zip(support) {
        for (i, u) in fan.rays().iter().enumerate() {
            let v = arith::dot_mixed(&u.0, m);
            let a = arith::rat_of(&coeffs[i]);
            if v > a {
                nef = false;
                ample = false;
            } else if v == a && !cone.contains(&i) {
                ample = false;
            }
        }
    }
    (nef, ample)
}

/// Linear pieces `m_σ` of the support function, one per maximal cone in
/// fan order, normalised so that `<m_σ, u_ρ> = a_ρ` for `ρ ∈ σ`.
///
/// With this sign the polytope `Δ_D` has the vertices `-m_σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartierData {
    pub m_sigma: Vec<LatticePoint>,
    pub nef: bool,
    pub ample: bool,
}

impl CartierData {
    /// The vertex of `Δ_D` dual to maximal cone `c` (for nef `D`).
    pub fn vertex(&self, c: usize) -> LatticePoint {
        LatticePoint(self.m_sigma[c].0.iter().map(|x| -x).collect())
    }
}

/// `m` with `D2 - D1 = Σ <m, u_ρ> D_ρ`, i.e. `D2 = D1 + div(χ^m)`, if the
/// two divisors are linearly equivalent.
pub fn linearly_equivalent(
    d1: &ToricDivisor<'_>,
    d2: &ToricDivisor<'_>,
) -> Result<Option<LatticePoint>> {
    if d1.fan != d2.fan {
        return Err(Error::input("divisors live on different fans"));
    }
    let fan = d1.fan;
    let rows: Vec<Vec<Rat>> = fan.rays().iter().map(|u| arith::to_rat_vec(&u.0)).collect();
    let rhs: Vec<Rat> = d2
        .coeffs
        .iter()
        .zip(&d1.coeffs)
        .map(|(b, a)| arith::rat_of(&(b - a)))
        .collect();
    // the solution is unique when the rays span, which they do for complete fans
    Ok(arith::solve(&rows, &rhs)
        .and_then(|m| arith::to_int_vec(&m))
        .map(LatticePoint))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rat};
    use crate::lattice::points;

    fn plane() -> Fan {
        Fan::new(
            2,
            points(&[&[1, 0], &[0, 1], &[-1, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap()
    }

    #[test]
    fn anticanonical_polytope_of_the_plane() {
        let f = plane();
        let k = ToricDivisor::anticanonical(&f);
        let p = k.polytope().unwrap();
        assert_eq!(
            p,
            LatticePolytope::from_i64(&[&[2, -1], &[-1, 2], &[-1, -1]])
        );
        let c = k.cartier_data().unwrap();
        assert!(c.nef && c.ample);
        let mut verts: Vec<LatticePoint> = (0..3).map(|i| c.vertex(i)).collect();
        verts.sort();
        assert_eq!(verts, points(&[&[-1, -1], &[-1, 2], &[2, -1]]));
    }

    #[test]
    fn lines_in_the_plane_are_equivalent() {
        let f = plane();
        // rays are sorted: (-1,-1)=0, (0,1)=1, (1,0)=2
        let d1 = ToricDivisor::prime(&f, 2);
        let d2 = ToricDivisor::prime(&f, 1);
        let m = linearly_equivalent(&d1, &d2).unwrap().unwrap();
        assert_eq!(m, LatticePoint::from_i64(&[-1, 1]));
        let h = ToricDivisor::prime(&f, 0);
        let three_h = h.scaled(&Int::from(3));
        assert!(
            linearly_equivalent(&three_h, &ToricDivisor::anticanonical(&f))
                .unwrap()
                .is_some()
        );
        assert!(linearly_equivalent(&h, &ToricDivisor::anticanonical(&f))
            .unwrap()
            .is_none());
    }

    #[test]
    fn nef_and_ample_on_a_hirzebruch_surface() {
        // F_1: rays (1,0), (0,1), (-1,1), (0,-1)
        let f = Fan::new(
            2,
            points(&[&[1, 0], &[0, 1], &[-1, 1], &[0, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        let idx = |v: &[i64]| f.ray_index(&LatticePoint::from_i64(v)).unwrap();
        let mut fibre = vec![Int::zero(); 4];
        fibre[idx(&[1, 0])] = Int::one();
        let fibre = ToricDivisor::new(&f, fibre).unwrap();
        assert!(fibre.is_nef().unwrap());
        assert!(!fibre.is_ample().unwrap());
        let mut neg = vec![Int::zero(); 4];
        neg[idx(&[0, 1])] = Int::one();
        // D_{(0,1)} is the (-1)-curve on this fan
        let neg = ToricDivisor::new(&f, neg).unwrap();
        assert!(!neg.is_nef().unwrap());
        assert!(ToricDivisor::anticanonical(&f).is_ample().unwrap());
    }

    #[test]
    fn non_cartier_divisor_on_a_singular_fan() {
        // weighted plane P(1,1,2): rays (1,0), (0,1), (-1,-2)
        let f = Fan::new(
            2,
            points(&[&[1, 0], &[0, 1], &[-1, -2]]),
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        let d = ToricDivisor::prime(&f, f.ray_index(&LatticePoint::from_i64(&[1, 0])).unwrap());
        assert!(matches!(d.cartier_data(), Err(Error::NotCartier(_))));
        assert!(d.is_nef().unwrap());
        let support = d.rational_support().unwrap();
        assert!(support.iter().any(|m| m.contains(&(rat(-1) / rat(2)))));
        assert_eq!(d.coeffs(), ints(&[0, 0, 1]).as_slice());
    }
}
