//! Nef-partitions of reflexive polytopes and their Batyrev–Borisov duals.

use num_traits::{One, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticePoint, LatticePolytope, RationalVector};
use crate::toric::{normal_fan, Fan, ToricDivisor};

/// A partition `Σ(1) = I_1 ⊔ … ⊔ I_r` of the rays of the normal fan of a
/// reflexive polytope `Δ` into groups with nef sums `E_s = Σ_{ρ∈I_s} D_ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefPartition {
    pub delta: LatticePolytope,
    pub fan: Fan,
    /// Sorted ray-index sets into `fan.rays()`.
    pub parts: Vec<Vec<usize>>,
    /// `Δ_s`, the polytope of `E_s`.
    pub section_polytopes: Vec<LatticePolytope>,
}

impl NefPartition {
    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn dim(&self) -> usize {
        self.delta.ambient_dim()
    }

    /// The divisor `E_s` as a coefficient vector on `fan`.
    pub fn part_divisor(&self, s: usize) -> ToricDivisor<'_> {
        let mut coeffs = vec![Int::zero(); self.fan.rays().len()];
        for &i in &self.parts[s] {
            coeffs[i] = Int::one();
        }
        ToricDivisor::new(&self.fan, coeffs).expect("lengths agree")
    }

    pub fn part_rays(&self, s: usize) -> Vec<LatticePoint> {
        self.parts[s]
            .iter()
            .map(|&i| self.fan.rays()[i].clone())
            .collect()
    }
}

/// Checks that `parts` partitions the rays of the normal fan of `p` into
/// nef groups and computes their section polytopes.
pub fn build_nef_partition(p: &LatticePolytope, parts: &[Vec<usize>]) -> Result<NefPartition> {
    if !p.is_reflexive() {
        return Err(Error::input("nef-partitions need a reflexive polytope"));
    }
    let fan = normal_fan(p)?;
    let nrays = fan.rays().len();
    if parts.is_empty() {
        return Err(Error::input("a nef-partition needs at least one part"));
    }
    let mut seen = vec![false; nrays];
    let mut sorted_parts = Vec::with_capacity(parts.len());
    for (s, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::input(format!("part {s} is empty")));
        }
        for &i in part {
            if i >= nrays {
                return Err(Error::input(format!(
                    "part {s} names ray {i}, but the fan has {nrays} rays"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::input(format!(
                    "ray {i} appears in more than one part"
                )));
            }
        }
        let mut q = part.clone();
        q.sort_unstable();
        sorted_parts.push(q);
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::input(format!("ray {i} is not assigned to any part")));
    }
    let mut np = NefPartition {
        delta: p.clone(),
        fan,
        parts: sorted_parts,
        section_polytopes: Vec::new(),
    };
    let mut polys = Vec::with_capacity(np.r());
    for s in 0..np.r() {
        let e = np.part_divisor(s);
        // Cartier, not just Q-Cartier: Δ_s must be a lattice polytope
        let data = e.cartier_data().map_err(|err| match err {
            Error::NotCartier(why) => {
                Error::NotCartier(format!("part {s} ({:?}): {why}", np.parts[s]))
            }
            other => other,
        })?;
        if !data.nef {
            return Err(Error::NotNef(format!(
                "part {s} ({:?}) does not give a nef divisor",
                np.parts[s]
            )));
        }
        let poly = e.polytope()?;
        if !poly.contains_point(&LatticePoint::zero(np.dim())) {
            return Err(Error::domain(format!(
                "section polytope of part {s} does not contain 0"
            )));
        }
        polys.push(poly);
    }
    let sum = minkowski_all(&polys)?;
    if sum != np.delta {
        return Err(Error::consistency(
            "Minkowski sum of the section polytopes differs from Δ",
        ));
    }
    np.section_polytopes = polys;
    Ok(np)
}

fn minkowski_all(polys: &[LatticePolytope]) -> Result<LatticePolytope> {
    let mut acc = polys[0].clone();
    for q in &polys[1..] {
        acc = acc.minkowski_sum(q)?;
    }
    Ok(acc)
}

/// `∇ = ∇_1 + … + ∇_r` with `∇_k = Conv(0 ∪ I_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualNefPartition {
    pub nabla: LatticePolytope,
    pub nabla_parts: Vec<LatticePolytope>,
    /// `∇^∨ = Conv(Δ_1 ∪ … ∪ Δ_r)`.
    pub nabla_polar: LatticePolytope,
}

pub fn dualize(np: &NefPartition) -> Result<DualNefPartition> {
    let n = np.dim();
    let nabla_parts: Vec<LatticePolytope> = (0..np.r())
        .map(|s| {
            let mut pts = np.part_rays(s);
            pts.push(LatticePoint::zero(n));
            LatticePolytope::from_points(&pts)
        })
        .collect::<Result<_>>()?;
    let nabla = minkowski_all(&nabla_parts)?;
    if !nabla.is_reflexive() {
        return Err(Error::consistency("dual polytope ∇ is not reflexive"));
    }
    let all: Vec<RationalVector> = np
        .section_polytopes
        .iter()
        .flat_map(|p| p.vertices().iter().cloned())
        .collect();
    let nabla_polar = crate::lattice::convex_hull(&all, n)?;
    if nabla.polar_dual()? != nabla_polar {
        return Err(Error::consistency(
            "polar of ∇ differs from the hull of the section polytopes",
        ));
    }
    Ok(DualNefPartition {
        nabla,
        nabla_parts,
        nabla_polar,
    })
}

impl DualNefPartition {
    pub fn r(&self) -> usize {
        self.nabla_parts.len()
    }

    /// The dual nef-partition as a nef-partition of `∇`: a ray of the normal
    /// fan of `∇` (a vertex of `∇^∨`) goes to part `k` when it lies in `Δ_k`.
    pub fn as_nef_partition(&self, np: &NefPartition) -> Result<NefPartition> {
        let fan = normal_fan(&self.nabla)?;
        let mut parts = vec![Vec::new(); np.r()];
        for (i, u) in fan.rays().iter().enumerate() {
            let owners: Vec<usize> = (0..np.r())
                .filter(|&k| np.section_polytopes[k].contains_point(u))
                .collect();
            match owners.as_slice() {
                [k] => parts[*k].push(i),
                _ => {
                    return Err(Error::consistency(format!(
                        "vertex {u} of ∇^∨ lies in {} section polytopes",
                        owners.len()
                    )))
                }
            }
        }
        build_nef_partition(&self.nabla, &parts)
    }
}

/// Dualizing twice returns `Δ` with the same section polytopes.
pub fn double_dual_check(np: &NefPartition) -> Result<bool> {
    let dual = dualize(np)?;
    let back = dualize(&dual.as_nef_partition(np)?)?;
    Ok(back.nabla == np.delta && back.nabla_parts == np.section_polytopes)
}

fn cayley_generators(polys: &[LatticePolytope]) -> Result<Vec<LatticePoint>> {
    let r = polys.len();
    let mut gens = Vec::new();
    for (i, p) in polys.iter().enumerate() {
        let verts = p
            .lattice_vertices()
            .ok_or_else(|| Error::domain("Cayley cone of a non-lattice polytope"))?;
        for v in verts {
            let mut g = vec![Int::zero(); r];
            g[i] = Int::one();
            g.extend(v.0);
            gens.push(LatticePoint(g));
        }
    }
    Ok(gens)
}

/// `σ_Δ`, generated by `(e_i, w)` for `w` a vertex of `Δ_i`.
pub fn cayley_cone(np: &NefPartition) -> Result<Cone> {
    Cone::new(
        &cayley_generators(&np.section_polytopes)?,
        np.r() + np.dim(),
    )
}

/// `σ_∇`, generated by `(e_i, v)` for `v` a vertex of `∇_i`.
pub fn dual_cayley_cone(dual: &DualNefPartition) -> Result<Cone> {
    Cone::new(
        &cayley_generators(&dual.nabla_parts)?,
        dual.r() + dual.nabla.ambient_dim(),
    )
}

/// `S = Conv(0 ∪ ⋃ e_i × (Δ_i ∩ M))`, whose normalized volume equals that of `∇^∨`.
pub fn s_polytope(np: &NefPartition) -> Result<LatticePolytope> {
    let r = np.r();
    let mut pts = vec![LatticePoint::zero(r + np.dim())];
    for (i, p) in np.section_polytopes.iter().enumerate() {
        for m in p.lattice_points() {
            let mut g = vec![Int::zero(); r];
            g[i] = Int::one();
            g.extend(m.0);
            pts.push(LatticePoint(g));
        }
    }
    LatticePolytope::from_points(&pts)
}

/// `min_{m ∈ Δ_i} <m, ν> = -δ_ij` for every nonzero vertex `ν` of `∇_j`.
pub fn pairing_holds(np: &NefPartition, dual: &DualNefPartition) -> bool {
    np.section_polytopes.iter().enumerate().all(|(i, di)| {
        dual.nabla_parts.iter().enumerate().all(|(j, nj)| {
            let want = if i == j { -Rat::one() } else { Rat::zero() };
            nj.lattice_vertices()
                .unwrap_or_default()
                .iter()
                .filter(|v| !v.is_zero())
                .all(|v| di.min_value(v) == want)
        })
    })
}
