use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{linearly_equivalent, Fan, ToricDivisor};
use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticePoint};

/// Fan of `P(L ⊕ O)` over the toric variety of `fan`, where `L = O(Σ a_j D_j)`.
///
/// Rays are `ρ̄_j = (ρ_j, a_j)`, `e_∞ = (0, 1)` and `e_0 = (0, -1)`; each
/// maximal cone τ lifts to `τ̄ ∪ {e_0}` and `τ̄ ∪ {e_∞}`.
pub fn projective_bundle_fan(fan: &Fan, a: &ToricDivisor<'_>) -> Result<Fan> {
    if a.fan() != fan {
        return Err(Error::input("bundle divisor lives on a different fan"));
    }
    if a.coeffs().iter().any(|x| x.is_negative()) {
        return Err(Error::input("bundle coefficients must be nonnegative"));
    }
    let n = fan.ambient_dim();
    let mut rays: Vec<LatticePoint> = fan
        .rays()
        .iter()
        .zip(a.coeffs())
        .map(|(u, aj)| {
            let mut v = u.0.clone();
            v.push(aj.clone());
            LatticePoint(v)
        })
        .collect();
    let e_inf = fan.rays().len();
    let e_zero = e_inf + 1;
    let mut top = vec![Int::zero(); n + 1];
    top[n] = Int::one();
    rays.push(LatticePoint(top.clone()));
    top[n] = -Int::one();
    rays.push(LatticePoint(top));
    let mut cones = Vec::with_capacity(2 * fan.max_cones().len());
    for c in fan.max_cones() {
        for extra in [e_zero, e_inf] {
            let mut lifted = c.clone();
            lifted.push(extra);
            cones.push(lifted);
        }
    }
    Fan::new(n + 1, rays, cones)
}

/// Indices of `e_∞` and `e_0` in a fan built by [`projective_bundle_fan`].
pub fn bundle_section_rays(z: &Fan) -> (usize, usize) {
    let n = z.ambient_dim();
    let mut e = vec![Int::zero(); n];
    e[n - 1] = Int::one();
    let inf = z
        .ray_index(&LatticePoint(e.clone()))
        .expect("e_inf present");
    e[n - 1] = -Int::one();
    let zero = z.ray_index(&LatticePoint(e)).expect("e_0 present");
    (inf, zero)
}

/// `H = D_∞ + Σ a_j D_{ρ̄_j}` on the fan `z` of `P(L ⊕ O)`; its sections
/// restrict to `O(1)` on every fibre.
pub fn bundle_hyperplane<'z>(z: &'z Fan, a: &ToricDivisor<'_>) -> Result<ToricDivisor<'z>> {
    let base = a.fan();
    if z.ambient_dim() != base.ambient_dim() + 1 {
        return Err(Error::DimensionMismatch {
            expected: base.ambient_dim() + 1,
            got: z.ambient_dim(),
        });
    }
    let (inf, _) = bundle_section_rays(z);
    let mut coeffs = vec![Int::zero(); z.rays().len()];
    coeffs[inf] = Int::one();
    for (u, aj) in base.rays().iter().zip(a.coeffs()) {
        let mut v = u.0.clone();
        v.push(aj.clone());
        let i = z
            .ray_index(&LatticePoint(v))
            .ok_or_else(|| Error::input("fan is not the projective bundle of this divisor"))?;
        coeffs[i] = aj.clone();
    }
    ToricDivisor::new(z, coeffs)
}

/// Result of contracting along a big and nef divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub fan: Fan,
    /// Push-forward coefficients, indexed by the rays of the new fan.
    pub coeffs: Vec<Int>,
    /// Shared `m_σ` of each new maximal cone.
    pub m_sigma: Vec<LatticePoint>,
    /// For each maximal cone of the source fan, the new cone it maps into.
    pub cone_map: Vec<usize>,
}

impl Contraction {
    pub fn divisor(&self) -> ToricDivisor<'_> {
        ToricDivisor::new(&self.fan, self.coeffs.clone()).expect("lengths agree")
    }
}

/// Glue maximal cones with the same Cartier datum into the fan of `Δ_D`.
pub fn semiample_contraction(fan: &Fan, d: &ToricDivisor<'_>) -> Result<Contraction> {
    if d.fan() != fan {
        return Err(Error::input("divisor lives on a different fan"));
    }
    let data = d.cartier_data()?;
    if !data.nef {
        return Err(Error::NotNef("support function is not convex".into()));
    }
    if !d.polytope()?.is_full_dimensional() {
        return Err(Error::domain("divisor polytope is not full-dimensional"));
    }
    let n = fan.ambient_dim();
    let mut groups: BTreeMap<LatticePoint, Vec<usize>> = BTreeMap::new();
    for (c, m) in data.m_sigma.iter().enumerate() {
        groups.entry(m.clone()).or_default().push(c);
    }
    let mut merged = Vec::with_capacity(groups.len());
    for (m, members) in &groups {
        let mut rays: Vec<usize> = members
            .iter()
            .flat_map(|&c| fan.max_cones()[c].iter().copied())
            .collect();
        rays.sort_unstable();
        rays.dedup();
        let pts: Vec<LatticePoint> = rays.iter().map(|&i| fan.rays()[i].clone()).collect();
        let cone = Cone::new(&pts, n)?;
        if !cone.is_strongly_convex() {
            return Err(Error::domain("merged cone contains a line"));
        }
        let kept: Vec<usize> = cone
            .generators()
            .iter()
            .map(|g| fan.ray_index(g).expect("extremal ray is an old ray"))
            .collect();
        merged.push((m.clone(), members.clone(), kept));
    }
    let mut survivors: Vec<usize> = merged
        .iter()
        .flat_map(|(_, _, k)| k.iter().copied())
        .collect();
    survivors.sort_unstable();
    survivors.dedup();
    let new_rays: Vec<LatticePoint> = survivors.iter().map(|&i| fan.rays()[i].clone()).collect();
    let local = |i: usize| survivors.binary_search(&i).expect("survivor");
    let cones: Vec<Vec<usize>> = merged
        .iter()
        .map(|(_, _, k)| k.iter().map(|&i| local(i)).collect())
        .collect();
    let new_fan = Fan::new(n, new_rays, cones)?;

    // survivors are sorted, so new ray order equals survivor order
    let coeffs: Vec<Int> = survivors.iter().map(|&i| d.coeffs()[i].clone()).collect();
    let mut m_sigma = vec![LatticePoint::zero(n); new_fan.max_cones().len()];
    let mut cone_map = vec![0; fan.max_cones().len()];
    for (m, members, kept) in merged {
        let mut key: Vec<usize> = kept.iter().map(|&i| local(i)).collect();
        key.sort_unstable();
        let idx = new_fan
            .max_cones()
            .iter()
            .position(|c| *c == key)
            .expect("cone present");
        m_sigma[idx] = m;
        for c in members {
            cone_map[c] = idx;
        }
    }
    Ok(Contraction {
        fan: new_fan,
        coeffs,
        m_sigma,
        cone_map,
    })
}

/// `-K` has a strictly convex support function on a complete fan.
pub fn is_fano(fan: &Fan) -> bool {
    fan.is_complete() && ToricDivisor::anticanonical(fan).is_ample().unwrap_or(false)
}

/// `(r - 1)·a ~ -K`, the condition for the `r`-fold cyclic cover branched
/// along a section of `O(a)` to have trivial canonical class.
pub fn is_calabi_yau_cover(fan: &Fan, a: &ToricDivisor<'_>, r: u32) -> Result<bool> {
    if r < 2 {
        return Err(Error::input("cover degree must be at least 2"));
    }
    let lhs = a.scaled(&Int::from(r - 1));
    Ok(linearly_equivalent(&lhs, &ToricDivisor::anticanonical(fan))?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::points;

    fn line() -> Fan {
        Fan::new(1, points(&[&[1], &[-1]]), vec![vec![0], vec![1]]).unwrap()
    }

    fn plane() -> Fan {
        Fan::new(
            2,
            points(&[&[1, 0], &[0, 1], &[-1, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap()
    }

    fn coeff_on(f: &Fan, ray: &[i64], c: i64) -> Vec<Int> {
        let mut v = vec![Int::zero(); f.rays().len()];
        v[f.ray_index(&LatticePoint::from_i64(ray)).unwrap()] = Int::from(c);
        v
    }

    #[test]
    fn bundle_over_the_line() {
        let f = line();
        let a = ToricDivisor::from_i64(&f, &[1, 1]).unwrap();
        let z = projective_bundle_fan(&f, &a).unwrap();
        assert_eq!(
            z.rays(),
            points(&[&[-1, 1], &[0, -1], &[0, 1], &[1, 1]]).as_slice()
        );
        assert_eq!(z.max_cones().len(), 4);
        assert!(z.is_smooth() && z.is_complete());
        // D_{e0} ~ Σ a_j D_{ρ̄j} + D_{e∞} with m = (0, 1)
        let (inf, zero) = bundle_section_rays(&z);
        let d0 = ToricDivisor::prime(&z, zero);
        let mut rhs = vec![Int::one(); 4];
        rhs[zero] = Int::zero();
        let rhs = ToricDivisor::new(&z, rhs).unwrap();
        let m = linearly_equivalent(&rhs, &d0).unwrap();
        assert_eq!(m, Some(LatticePoint::from_i64(&[0, -1])));
        assert_eq!(
            linearly_equivalent(&d0, &rhs).unwrap(),
            Some(LatticePoint::from_i64(&[0, 1]))
        );
        // all a_j = 1: 2H ~ -K
        let h = ToricDivisor::new(&z, {
            let mut v = vec![Int::one(); 4];
            v[zero] = Int::zero();
            v
        })
        .unwrap();
        assert!(
            linearly_equivalent(&h.scaled(&Int::from(2)), &ToricDivisor::anticanonical(&z))
                .unwrap()
                .is_some()
        );
        assert_ne!(inf, zero);
    }

    #[test]
    fn bundle_over_the_plane_contracts_to_projective_space() {
        let f = plane();
        let a = ToricDivisor::new(&f, coeff_on(&f, &[1, 0], 1)).unwrap();
        assert!(is_calabi_yau_cover(&f, &a, 4).unwrap());
        let z = projective_bundle_fan(&f, &a).unwrap();
        assert_eq!(
            z.rays(),
            points(&[
                &[-1, -1, 0],
                &[0, 0, -1],
                &[0, 0, 1],
                &[0, 1, 0],
                &[1, 0, 1]
            ])
            .as_slice()
        );
        assert_eq!(z.max_cones().len(), 6);
        assert!(z.is_smooth() && z.is_complete());

        let mut h = coeff_on(&z, &[0, 0, 1], 1);
        h[z.ray_index(&LatticePoint::from_i64(&[1, 0, 1])).unwrap()] = Int::one();
        let h = ToricDivisor::new(&z, h).unwrap();
        assert_eq!(bundle_hyperplane(&z, &a).unwrap(), h);
        let data = h.cartier_data().unwrap();
        assert!(data.nef && !data.ample);
        let (inf, _) = bundle_section_rays(&z);
        for (c, m) in z.max_cones().iter().zip(&data.m_sigma) {
            if c.contains(&inf) {
                assert_eq!(*m, LatticePoint::from_i64(&[0, 0, 1]));
            } else {
                assert_eq!(m.0[2], Int::zero());
            }
        }

        let con = semiample_contraction(&z, &h).unwrap();
        assert_eq!(con.fan.max_cones().len(), 4);
        assert!(con.fan.is_smooth() && con.fan.is_complete());
        assert!(is_fano(&con.fan));
        let p3 = Fan::new(
            3,
            points(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        assert!(con.fan.is_isomorphic(&p3));
        let hp = con.divisor();
        let four_h = hp.scaled(&Int::from(4));
        assert!(
            linearly_equivalent(&four_h, &ToricDivisor::anticanonical(&con.fan))
                .unwrap()
                .is_some()
        );
        assert!(z.refines(&con.fan).unwrap());
        assert!(con.divisor().is_ample().unwrap());
    }

    #[test]
    fn ample_divisor_contracts_nothing() {
        let f = plane();
        let k = ToricDivisor::anticanonical(&f);
        let con = semiample_contraction(&f, &k).unwrap();
        assert_eq!(con.fan, f);
    }

    #[test]
    fn blow_up_contracts_to_the_plane() {
        let f = Fan::new(
            2,
            points(&[&[1, 0], &[1, 1], &[0, 1], &[-1, -1]]),
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        let pullback = ToricDivisor::new(&f, coeff_on(&f, &[-1, -1], 1)).unwrap();
        let con = semiample_contraction(&f, &pullback).unwrap();
        assert_eq!(con.fan, plane());
    }

    #[test]
    fn hirzebruch_two_is_not_fano() {
        let f = line();
        let a = ToricDivisor::new(&f, coeff_on(&f, &[1], 2)).unwrap();
        let z = projective_bundle_fan(&f, &a).unwrap();
        assert!(z.is_smooth() && z.is_complete());
        assert!(!is_fano(&z));
        assert!(is_fano(&plane()));
    }

    #[test]
    fn calabi_yau_condition() {
        let l = line();
        let two = ToricDivisor::new(&l, coeff_on(&l, &[1], 2)).unwrap();
        assert!(is_calabi_yau_cover(&l, &two, 2).unwrap());
        let p = plane();
        let three = ToricDivisor::new(&p, coeff_on(&p, &[1, 0], 3)).unwrap();
        assert!(!is_calabi_yau_cover(&p, &three, 3).unwrap());
        assert!(is_calabi_yau_cover(&p, &three, 2).unwrap());
        assert!(is_calabi_yau_cover(&p, &three, 1).is_err());
        let p3 = Fan::new(
            3,
            points(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        let quad = ToricDivisor::new(&p3, coeff_on(&p3, &[1, 0, 0], 2)).unwrap();
        assert!(is_calabi_yau_cover(&p3, &quad, 3).unwrap());
    }
}
