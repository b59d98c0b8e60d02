mod common;

use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::{lattice_polygon, lattice_polytope3, reflexive_polygon, reflexive_pool};
use nefmirror::arith::{rat, Rat};
use nefmirror::lattice::{Cone, LatticePoint, LatticePolytope};

fn lifted(p: &LatticePolytope) -> LatticePolytope {
    // p placed at height 1 above the origin
    let pts: Vec<LatticePoint> = p
        .lattice_vertices()
        .unwrap()
        .into_iter()
        .map(|v| {
            let mut c = v.0.clone();
            c.push(1.into());
            LatticePoint(c)
        })
        .collect();
    LatticePolytope::from_points(&pts).unwrap()
}

#[test]
fn pool_is_large_enough() {
    assert!(reflexive_pool().len() >= 12, "{}", reflexive_pool().len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pick(p in lattice_polygon(4)) {
        let vol = p.normalized_volume().unwrap();
        let i = p.interior_lattice_points().len() as i64;
        let b = p.boundary_lattice_points().len() as i64;
        prop_assert_eq!(vol, (2 * i + b - 2).into());
    }

    #[test]
    fn triangulation_volume_is_additive(p in lattice_polytope3(2)) {
        let total: Rat = p.triangulate().iter().map(|s| p.simplex_volume(s)).sum();
        prop_assert_eq!(total, p.normalized_volume_exact());
        for s in p.triangulate() {
            prop_assert!(p.simplex_volume(&s).is_positive());
        }
    }

    #[test]
    fn vertices_are_tight_on_enough_facets(p in lattice_polytope3(2)) {
        for v in p.vertices() {
            let tight = p.facets().iter().filter(|f| f.eval(&v.0).is_zero()).count();
            prop_assert!(tight >= p.dim());
            prop_assert!(p.facets().iter().all(|f| !f.eval(&v.0).is_negative()));
        }
        for f in p.facets() {
            prop_assert!(f.normal.is_primitive());
        }
    }

    #[test]
    fn polar_is_an_involution(p in reflexive_polygon()) {
        let d = p.polar_dual().unwrap();
        prop_assert!(d.is_reflexive());
        prop_assert_eq!(d.polar_dual().unwrap(), p);
    }

    #[test]
    fn pyramid_at_height_one(p in lattice_polygon(2)) {
        let apex = LatticePoint::zero(3);
        let pyr = lifted(&p).pyramid(&apex).unwrap();
        prop_assert_eq!(pyr.normalized_volume().unwrap(), p.normalized_volume().unwrap());
    }

    #[test]
    fn minkowski_laws(p in lattice_polygon(2), q in lattice_polygon(2), r in lattice_polygon(2)) {
        prop_assert_eq!(p.minkowski_sum(&q).unwrap(), q.minkowski_sum(&p).unwrap());
        let left = p.minkowski_sum(&q).unwrap().minkowski_sum(&r).unwrap();
        let right = p.minkowski_sum(&q.minkowski_sum(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn mixed_area_laws(p in lattice_polygon(2), q in lattice_polygon(2), t in (-3i64..=3, -3i64..=3)) {
        let m = p.mixed_area(&q).unwrap();
        prop_assert_eq!(&m, &q.mixed_area(&p).unwrap());
        prop_assert!(!m.is_negative());
        let moved = p.translate(&LatticePoint::from_i64(&[t.0, t.1])).unwrap();
        prop_assert_eq!(moved.mixed_area(&q).unwrap(), m);
        // MV(P, P) = 2·area(P) = normalized volume
        prop_assert_eq!(p.mixed_area(&p).unwrap(), p.normalized_volume().unwrap());
    }

    #[test]
    fn scaling(p in lattice_polygon(2), k in 1i64..4) {
        prop_assert_eq!(p.scale(k).unwrap().normalized_volume_exact(), p.normalized_volume_exact() * rat(k * k));
    }

    #[test]
    fn dual_cone_involution(p in lattice_polygon(2)) {
        // the cone over p at height 1 is full-dimensional and strongly convex
        let gens: Vec<LatticePoint> = lifted(&p).lattice_vertices().unwrap();
        let c = Cone::new(&gens, 3).unwrap();
        prop_assert!(c.is_strongly_convex() && c.is_full_dimensional());
        let back = c.dual_cone().unwrap().dual_cone().unwrap();
        prop_assert_eq!(back.generators(), c.generators());
    }
}
