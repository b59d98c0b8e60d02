//! Euler characteristics and Hodge numbers of double covers branched along
//! nef-partitions, and their mirror-duality checks.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::lattice::{cayley_polytope, LatticePoint, LatticePolytope};
use crate::nefpart::{dualize, NefPartition};
use crate::toric::{mpcp_fan, Fan, ToricDivisor};

/// One Danilov–Khovanskii term: the subset `J` and `vol_{n+|J|}(Λ_J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DkTerm {
    pub subset: Vec<usize>,
    pub volume: Int,
}

/// `vol_{n+|J|}(Λ_J)` for every nonempty `J`, in binary-counter order.
pub fn dk_terms(polys: &[LatticePolytope]) -> Result<Vec<DkTerm>> {
    let k = polys.len();
    let n = polys.first().map_or(0, |p| p.ambient_dim());
    let mut out = Vec::with_capacity((1 << k) - 1);
    for mask in 1u32..(1 << k) {
        let subset: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let chosen: Vec<LatticePolytope> = subset.iter().map(|&i| polys[i].clone()).collect();
        let base = cayley_polytope(&chosen)?;
        let lambda = base.pyramid(&LatticePoint::zero(n + subset.len()))?;
        let v = lambda.ambient_volume();
        if !v.is_integer() {
            return Err(Error::consistency(
                "normalized volume of a lattice pyramid is not integral",
            ));
        }
        out.push(DkTerm {
            subset,
            volume: v.to_integer(),
        });
    }
    Ok(out)
}

fn dk_sum(n: usize, terms: &[DkTerm], within: u32) -> Int {
    terms
        .iter()
        .filter(|t| t.subset.iter().all(|&i| within & (1 << i) != 0))
        .fold(Int::zero(), |acc, t| {
            // -(-1)^{n+|J|-1} = (-1)^{n+|J|}
            if (n + t.subset.len()).is_multiple_of(2) {
                acc + &t.volume
            } else {
                acc - &t.volume
            }
        })
}

/// `χ(D_1 ∩ … ∩ D_k ∩ T)` for general members of the given section polytopes.
pub fn dk_euler_polytopes(polys: &[LatticePolytope]) -> Result<Int> {
    let n = polys
        .first()
        .ok_or_else(|| Error::input("no divisors given"))?
        .ambient_dim();
    let terms = dk_terms(polys)?;
    Ok(dk_sum(n, &terms, u32::MAX))
}

/// `χ(D_1 ∩ … ∩ D_k ∩ T)` for general `D_i ∈ |Z_i|`, the `Z_i` nef.
pub fn dk_euler(fan: &Fan, divisors: &[ToricDivisor<'_>]) -> Result<Int> {
    dk_euler_polytopes(&nef_polytopes(fan, divisors)?)
}

fn nef_polytopes(fan: &Fan, divisors: &[ToricDivisor<'_>]) -> Result<Vec<LatticePolytope>> {
    if divisors.len() > 20 {
        return Err(Error::input("too many divisors for the subset sum"));
    }
    divisors
        .iter()
        .enumerate()
        .map(|(i, d)| {
            if d.fan() != fan {
                return Err(Error::input(format!(
                    "divisor {i} lives on a different fan"
                )));
            }
            if !d.is_nef()? {
                return Err(Error::NotNef(format!("divisor {i} is not nef")));
            }
            d.polytope()
        })
        .collect()
}

/// `χ(T ∩ (D_1 ∪ … ∪ D_k))` by inclusion–exclusion over the intersections.
pub fn union_euler_polytopes(polys: &[LatticePolytope]) -> Result<Int> {
    let n = polys
        .first()
        .ok_or_else(|| Error::input("no divisors given"))?
        .ambient_dim();
    let terms = dk_terms(polys)?;
    Ok(union_from_terms(n, polys.len(), &terms))
}

fn union_from_terms(n: usize, k: usize, terms: &[DkTerm]) -> Int {
    (1u32..(1 << k)).fold(Int::zero(), |acc, mask| {
        let chi = dk_sum(n, terms, mask);
        if mask.count_ones() % 2 == 1 {
            acc + chi
        } else {
            acc - chi
        }
    })
}

pub fn union_euler(fan: &Fan, divisors: &[ToricDivisor<'_>]) -> Result<Int> {
    union_euler_polytopes(&nef_polytopes(fan, divisors)?)
}

/// `χ(Y)` for an `r`-fold cyclic cover of `X` branched along `D`.
pub fn branched_cover_euler(chi_x: &Int, chi_d: &Int, r: u32) -> Result<Int> {
    if r == 0 {
        return Err(Error::input("cover degree must be positive"));
    }
    Ok(chi_d + Int::from(r) * (chi_x - chi_d))
}

/// Topological and Hodge-theoretic data of the double cover `Y → X` and its
/// mirror `Y∨ → X∨`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInvariants {
    pub n: usize,
    pub chi_x: Int,
    pub chi_xdual: Int,
    pub chi_y: Int,
    pub chi_ydual: Int,
    /// `h^{p,q}(Y)` for `p + q ≠ n`, equal to `h^{p,q}(X)`.
    pub hodge_offdiag: BTreeMap<(usize, usize), Int>,
    /// `h^{p,p}(X)` and `h^{p,p}(X∨)`.
    pub hodge_x: Vec<Int>,
    pub hodge_xdual: Vec<Int>,
    pub h11_y: Option<Int>,
    pub h21_y: Option<Int>,
    pub duality_ok: bool,
    /// The toric part of the branch divisor is simple normal crossing on
    /// both sides (both resolutions smooth); generic members are assumed.
    pub snc_expected: bool,
}

struct Side {
    chi: Int,
    hodge: Vec<Int>,
}

fn side(delta: &LatticePolytope, label: &str) -> Result<Side> {
    let m = mpcp_fan(delta)?;
    if !m.unimodular {
        return Err(Error::NotSmooth(format!(
            "the maximal triangulation for {label} is not unimodular, so the resolution is singular"
        )));
    }
    let count = Int::from(m.fan.max_cones().len());
    let vol = delta.polar_dual()?.normalized_volume()?;
    if count != vol {
        return Err(Error::consistency(format!(
            "{label}: {count} maximal cones but polar volume {vol}"
        )));
    }
    let hodge = m.fan.hodge_numbers()?;
    let total: Int = hodge.iter().sum();
    if total != count {
        return Err(Error::consistency(format!(
            "{label}: Hodge numbers do not add up to χ"
        )));
    }
    Ok(Side { chi: count, hodge })
}

fn sign(n: usize) -> Int {
    if n.is_multiple_of(2) {
        Int::one()
    } else {
        -Int::one()
    }
}

pub fn double_cover_invariants(np: &NefPartition) -> Result<CoverInvariants> {
    let dual = dualize(np)?;
    let n = np.dim();
    let x = side(&np.delta, "X")?;
    let xd = side(&dual.nabla, "X∨")?;
    let chi_y = &x.chi + sign(n) * &xd.chi;
    let chi_ydual = &xd.chi + sign(n) * &x.chi;
    let mut hodge_offdiag = BTreeMap::new();
    for p in 0..=n {
        for q in 0..=n {
            if p + q != n {
                let v = if p == q {
                    x.hodge[p].clone()
                } else {
                    Int::zero()
                };
                hodge_offdiag.insert((p, q), v);
            }
        }
    }
    let (h11_y, h21_y) = if n == 3 {
        let h11 = x.hodge[1].clone();
        let h21 = xd.hodge[1].clone();
        if Int::from(2) * (&h11 - &h21) != chi_y {
            return Err(Error::consistency("χ(Y) ≠ 2(h11 − h21)"));
        }
        (Some(h11), Some(h21))
    } else {
        (None, None)
    };
    let duality_ok = chi_y == sign(n) * &chi_ydual;
    Ok(CoverInvariants {
        n,
        chi_x: x.chi,
        chi_xdual: xd.chi,
        chi_y,
        chi_ydual,
        hodge_offdiag,
        hodge_x: x.hodge,
        hodge_xdual: xd.hodge,
        h11_y,
        h21_y,
        duality_ok,
        snc_expected: true,
    })
}

/// The two computations of `χ(Y)` and `χ(Y∨)` with every volume used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub invariants: CoverInvariants,
    /// `χ(T ∩ ⋃ C_i)` on each side, from the Danilov–Khovanskii sums.
    pub chi_branch_torus: Int,
    pub chi_branch_torus_dual: Int,
    /// `χ(Y)` and `χ(Y∨)` via the branched-cover formula.
    pub chi_y_dk: Int,
    pub chi_ydual_dk: Int,
    pub dk_terms: Vec<DkTerm>,
    pub dk_terms_dual: Vec<DkTerm>,
    pub ok: bool,
}

/// χ(Y) through Danilov–Khovanskii and the branched-cover formula, against
/// the closed form `χ(X) + (-1)^n χ(X∨)`, on both sides of the mirror.
pub fn verify_mirror_duality(np: &NefPartition) -> Result<DualityReport> {
    let inv = double_cover_invariants(np)?;
    let dual = dualize(np)?;
    let dual_np = dual.as_nef_partition(np)?;
    let n = np.dim();
    let r = np.r();
    let terms = dk_terms(&np.section_polytopes)?;
    let terms_dual = dk_terms(&dual_np.section_polytopes)?;
    let union = union_from_terms(n, r, &terms);
    let union_dual = union_from_terms(n, r, &terms_dual);
    // branch divisor = toric boundary ∪ generic C_i; χ(T) = 0
    let chi_y_dk = branched_cover_euler(&inv.chi_x, &(&inv.chi_x + &union), 2)?;
    let chi_ydual_dk = branched_cover_euler(&inv.chi_xdual, &(&inv.chi_xdual + &union_dual), 2)?;
    let ok = chi_y_dk == inv.chi_y
        && chi_ydual_dk == inv.chi_ydual
        && chi_y_dk == sign(n) * &chi_ydual_dk
        && inv.duality_ok;
    Ok(DualityReport {
        invariants: inv,
        chi_branch_torus: union,
        chi_branch_torus_dual: union_dual,
        chi_y_dk,
        chi_ydual_dk,
        dk_terms: terms,
        dk_terms_dual: terms_dual,
        ok,
    })
}

/// Expected number of nodes of the branch curve of a surface double cover:
/// pairwise intersection numbers of the toric boundary components and the
/// generic curves `C_i`.
pub fn surface_node_count(np: &NefPartition) -> Result<Int> {
    if np.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: np.dim(),
        });
    }
    let m = mpcp_fan(&np.delta)?;
    // in a complete 2-dimensional fan the 2-cones are the maximal cones
    let toric = Int::from(m.fan.max_cones().len());
    let mut toric_generic = Int::zero();
    for rho in m.fan.rays() {
        for p in &np.section_polytopes {
            toric_generic += edge_length(p, rho)?;
        }
    }
    let mut generic = Int::zero();
    for i in 0..np.r() {
        for j in i + 1..np.r() {
            generic += np.section_polytopes[i].mixed_area(&np.section_polytopes[j])?;
        }
    }
    Ok(toric + toric_generic + generic)
}

/// Lattice length of the edge of `p` with inner normal `rho`, 0 if the face
/// in that direction is a vertex or `p` is a point.
fn edge_length(p: &LatticePolytope, rho: &LatticePoint) -> Result<Int> {
    if p.dim() == 0 {
        return Ok(Int::zero());
    }
    let face = p.face_vertices(rho);
    if face.len() < 2 {
        return Ok(Int::zero());
    }
    p.face_lattice_length(rho)
}

/// Whether every number is nonnegative, as Hodge numbers must be.
pub fn all_nonnegative(v: &BTreeMap<(usize, usize), Int>) -> bool {
    v.values().all(|x| !x.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::nefpart::build_nef_partition;
    use crate::toric::normal_fan;

    fn big_triangle() -> LatticePolytope {
        LatticePolytope::from_i64(&[&[2, -1], &[-1, 2], &[-1, -1]])
    }

    fn p3_delta() -> LatticePolytope {
        LatticePolytope::from_i64(&[&[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3], &[-1, -1, -1]])
    }

    #[test]
    fn dk_single_curves_in_the_plane() {
        let f = normal_fan(&big_triangle()).unwrap();
        let line = ToricDivisor::prime(&f, 0);
        assert_eq!(dk_euler(&f, std::slice::from_ref(&line)).unwrap(), int(-1));
        let cubic = ToricDivisor::anticanonical(&f);
        assert_eq!(dk_euler(&f, &[cubic]).unwrap(), int(-9));
        // two general lines meet once in the torus, three never
        let l2 = ToricDivisor::prime(&f, 1);
        let l3 = ToricDivisor::prime(&f, 2);
        assert_eq!(dk_euler(&f, &[line.clone(), l2.clone()]).unwrap(), int(1));
        assert_eq!(
            dk_euler(&f, &[line.clone(), l2.clone(), l3.clone()]).unwrap(),
            int(0)
        );
        assert_eq!(union_euler(&f, &[line, l2, l3]).unwrap(), int(-6));
    }

    #[test]
    fn branched_cover_formula() {
        assert_eq!(branched_cover_euler(&int(3), &int(-3), 2).unwrap(), int(9));
        assert_eq!(branched_cover_euler(&int(3), &int(-3), 1).unwrap(), int(3));
        assert_eq!(branched_cover_euler(&int(5), &int(5), 7).unwrap(), int(5));
        assert!(branched_cover_euler(&int(1), &int(1), 0).is_err());
    }

    #[test]
    fn six_lines_double_plane() {
        let np = build_nef_partition(&big_triangle(), &[vec![2], vec![1], vec![0]]).unwrap();
        let inv = double_cover_invariants(&np).unwrap();
        assert_eq!((inv.chi_x.clone(), inv.chi_xdual.clone()), (int(3), int(6)));
        assert_eq!((inv.chi_y.clone(), inv.chi_ydual.clone()), (int(9), int(9)));
        assert!(inv.duality_ok);
        let rep = verify_mirror_duality(&np).unwrap();
        assert!(rep.ok);
        assert_eq!(rep.chi_branch_torus, int(-6));
        assert_eq!(rep.dk_terms.len(), 7);
        assert_eq!(surface_node_count(&np).unwrap(), int(15));
    }

    #[test]
    fn conic_and_line_partition() {
        let np = build_nef_partition(&big_triangle(), &[vec![1, 2], vec![0]]).unwrap();
        assert!(verify_mirror_duality(&np).unwrap().ok);
        assert_eq!(surface_node_count(&np).unwrap(), int(14));
    }

    #[test]
    fn quadric_pair_in_projective_three_space() {
        // rays: (-1,-1,-1)=0, (0,0,1)=1, (0,1,0)=2, (1,0,0)=3
        let np = build_nef_partition(&p3_delta(), &[vec![2, 3], vec![0, 1]]).unwrap();
        let rep = verify_mirror_duality(&np).unwrap();
        assert!(rep.ok);
        let inv = &rep.invariants;
        assert_eq!(inv.chi_x, int(4));
        assert_eq!(inv.chi_y, int(4) - &inv.chi_xdual);
        assert_eq!(inv.chi_ydual, -inv.chi_y.clone());
        assert_eq!(inv.h11_y, Some(int(1)));
        assert_eq!(inv.hodge_offdiag[&(1, 1)], int(1));
        assert!(surface_node_count(&np).is_err());
    }

    #[test]
    fn square_with_trivial_partition() {
        let sq = LatticePolytope::from_i64(&[&[1, 1], &[1, -1], &[-1, 1], &[-1, -1]]);
        let np = build_nef_partition(&sq, &[vec![0, 1, 2, 3]]).unwrap();
        let inv = double_cover_invariants(&np).unwrap();
        assert_eq!(inv.chi_y, &inv.chi_x + &inv.chi_xdual);
        assert!(verify_mirror_duality(&np).unwrap().ok);
    }
}
