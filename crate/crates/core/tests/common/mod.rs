//! Generators shared by the property suites.
#![allow(dead_code)]

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nefmirror::arith::{ints, Int};
use nefmirror::lattice::{LatticePoint, LatticePolytope};
use nefmirror::nefpart::{build_nef_partition, NefPartition};
use nefmirror::toric::normal_fan;

/// Distinct reflexive polygons found by seeded sampling in `[-2, 2]²`.
pub fn reflexive_pool() -> &'static [LatticePolytope] {
    static POOL: OnceLock<Vec<LatticePolytope>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut rng = StdRng::seed_from_u64(16);
        let mut pool: Vec<LatticePolytope> = Vec::new();
        for _ in 0..20_000 {
            let k = rng.gen_range(3..=6);
            let pts: Vec<LatticePoint> = (0..k)
                .map(|_| LatticePoint::from_i64(&[rng.gen_range(-2..=2), rng.gen_range(-2..=2)]))
                .collect();
            if let Ok(p) = LatticePolytope::from_points(&pts) {
                if p.is_full_dimensional() && p.is_reflexive() && !pool.contains(&p) {
                    pool.push(p);
                }
            }
            if pool.len() == 24 {
                break;
            }
        }
        pool
    })
}

/// Products of elementary matrices, so always in GL(2, Z).
pub fn unimodular2() -> impl Strategy<Value = Vec<Vec<Int>>> {
    prop::collection::vec((0..3u8, -1i64..=1), 0..4).prop_map(|steps| {
        let mut m = [[1i64, 0], [0, 1]];
        for (kind, t) in steps {
            let e = match kind {
                0 => [[1, t], [0, 1]],
                1 => [[1, 0], [t, 1]],
                _ => [[0, 1], [1, 0]],
            };
            m = [
                [
                    e[0][0] * m[0][0] + e[0][1] * m[1][0],
                    e[0][0] * m[0][1] + e[0][1] * m[1][1],
                ],
                [
                    e[1][0] * m[0][0] + e[1][1] * m[1][0],
                    e[1][0] * m[0][1] + e[1][1] * m[1][1],
                ],
            ];
        }
        vec![ints(&m[0]), ints(&m[1])]
    })
}

pub fn reflexive_polygon() -> impl Strategy<Value = LatticePolytope> {
    (0..reflexive_pool().len(), unimodular2())
        .prop_map(|(i, g)| reflexive_pool()[i].linear_image(&g).expect("linear image"))
}

/// Every nef-partition of `p` into `r` parts (each unordered split once).
pub fn nef_partitions(p: &LatticePolytope, r: usize) -> Vec<NefPartition> {
    let k = normal_fan(p).expect("normal fan").rays().len();
    let mut out = Vec::new();
    let total = (r as u64).pow(k as u32);
    for code in 0..total {
        let mut parts = vec![Vec::new(); r];
        let mut c = code;
        for i in 0..k {
            parts[(c % r as u64) as usize].push(i);
            c /= r as u64;
        }
        // canonical labelling: part s starts before part s+1
        let firsts: Vec<Option<&usize>> = parts.iter().map(|p| p.first()).collect();
        if firsts.iter().any(Option::is_none) || firsts.windows(2).any(|w| w[0] > w[1]) {
            continue;
        }
        if let Ok(np) = build_nef_partition(p, &parts) {
            out.push(np);
        }
    }
    out
}

pub fn lattice_polygon(range: i64) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec((-range..=range, -range..=range), 3..7).prop_filter_map(
        "degenerate",
        |pts| {
            let pts: Vec<LatticePoint> = pts
                .iter()
                .map(|&(x, y)| LatticePoint::from_i64(&[x, y]))
                .collect();
            LatticePolytope::from_points(&pts)
                .ok()
                .filter(|p| p.is_full_dimensional())
        },
    )
}

pub fn lattice_polytope3(range: i64) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec((-range..=range, -range..=range, -range..=range), 4..9).prop_filter_map(
        "degenerate",
        |pts| {
            let pts: Vec<LatticePoint> = pts
                .iter()
                .map(|&(x, y, z)| LatticePoint::from_i64(&[x, y, z]))
                .collect();
            LatticePolytope::from_points(&pts)
                .ok()
                .filter(|p| p.is_full_dimensional())
        },
    )
}
