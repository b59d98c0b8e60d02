mod common;

use num_traits::Zero;
use proptest::prelude::*;

use common::{lattice_polygon, reflexive_polygon};
use nefmirror::arith::Int;
use nefmirror::lattice::LatticePolytope;
use nefmirror::toric::*;

fn smooth_fan_of(p: &LatticePolytope) -> Fan {
    resolve_surface_fan(&normal_fan(p).unwrap()).unwrap()
}

fn divisor_of<'f>(fan: &'f Fan, p: &LatticePolytope) -> ToricDivisor<'f> {
    let coeffs = fan
        .rays()
        .iter()
        .map(|r| -p.min_value(r).to_integer())
        .collect();
    ToricDivisor::new(fan, coeffs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn hodge_numbers_are_palindromic_and_sum_to_chi(p in lattice_polygon(3)) {
        let fan = smooth_fan_of(&p);
        prop_assert!(fan.is_smooth() && fan.is_complete());
        let h = fan.hodge_numbers().unwrap();
        let rev: Vec<Int> = h.iter().rev().cloned().collect();
        prop_assert_eq!(&h, &rev);
        let total: Int = h.iter().sum();
        prop_assert_eq!(total, Int::from(fan.max_cones().len()));
        prop_assert_eq!(fan.euler_characteristic(), fan.max_cones().len());
    }

    #[test]
    fn nef_divisor_polytope_round_trip(p in lattice_polygon(3)) {
        let fan = smooth_fan_of(&p);
        let d = divisor_of(&fan, &p);
        prop_assert!(d.is_nef().unwrap());
        prop_assert_eq!(d.polytope().unwrap(), p.clone());
        prop_assert!(fan.refines(&normal_fan(&p).unwrap()).unwrap());
        // vertices of Δ_D are the -m_σ
        let data = d.cartier_data().unwrap();
        for c in 0..fan.max_cones().len() {
            let v = data.vertex(c);
            prop_assert!(p.contains_point(&v));
        }
    }

    #[test]
    fn contraction_carries_the_cartier_data(p in lattice_polygon(3)) {
        let fan = smooth_fan_of(&p);
        let d = divisor_of(&fan, &p);
        let con = semiample_contraction(&fan, &d).unwrap();
        let data = d.cartier_data().unwrap();
        for (c, &target) in con.cone_map.iter().enumerate() {
            prop_assert_eq!(&data.m_sigma[c], &con.m_sigma[target]);
        }
        prop_assert!(con.divisor().is_ample().unwrap());
        prop_assert!(fan.refines(&con.fan).unwrap());
        prop_assert_eq!(con.fan.max_cones().len(), p.vertices().len());
    }

    #[test]
    fn bundle_fans_are_smooth_and_complete(p in lattice_polygon(2), a in prop::collection::vec(0i64..3, 16)) {
        let fan = smooth_fan_of(&p);
        let coeffs: Vec<i64> = a.iter().cycle().take(fan.rays().len()).copied().collect();
        let a = ToricDivisor::from_i64(&fan, &coeffs).unwrap();
        let z = projective_bundle_fan(&fan, &a).unwrap();
        prop_assert!(z.is_smooth() && z.is_complete());
        prop_assert_eq!(z.max_cones().len(), 2 * fan.max_cones().len());
        // the tautological divisor is nef exactly when the twist is
        prop_assert_eq!(bundle_hyperplane(&z, &a).unwrap().is_nef().unwrap(), a.is_nef().unwrap());
    }

    #[test]
    fn all_ones_bundle_is_anticanonical_twice(p in lattice_polygon(2)) {
        // a = -K of the base
        let fan = smooth_fan_of(&p);
        let a = ToricDivisor::anticanonical(&fan);
        let z = projective_bundle_fan(&fan, &a).unwrap();
        let h = bundle_hyperplane(&z, &a).unwrap();
        let two_h = h.scaled(&2.into());
        prop_assert!(linearly_equivalent(&two_h, &ToricDivisor::anticanonical(&z)).unwrap().is_some());
    }

    #[test]
    fn mpcp_fan_uses_every_boundary_point(p in reflexive_polygon()) {
        let m = mpcp_fan(&p).unwrap();
        let polar = p.polar_dual().unwrap();
        let nonzero = polar.lattice_points().into_iter().filter(|x| !x.is_zero()).count();
        prop_assert_eq!(m.fan.rays().len(), nonzero);
        prop_assert!(m.unimodular && m.fan.is_smooth() && m.fan.is_complete());
        prop_assert!(m.fan.refines(&face_fan(&polar).unwrap()).unwrap());
        prop_assert_eq!(Int::from(m.fan.max_cones().len()), polar.normalized_volume().unwrap());
        let h = m.fan.hodge_numbers().unwrap();
        prop_assert!(h.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn fan_isomorphism_is_invariant_under_gl2(p in reflexive_polygon(), g in common::unimodular2()) {
        let f = normal_fan(&p).unwrap();
        let q = p.linear_image(&g).unwrap();
        prop_assert!(f.is_isomorphic(&normal_fan(&q).unwrap()));
    }
}
