use super::Fan;
use crate::error::Result;
use crate::lattice::{maximal_boundary_triangulation, LatticePolytope};

/// Fan of a maximal crepant partial resolution of the Gorenstein toric Fano
/// variety of a reflexive polytope `Δ`: cones over a maximal triangulation
/// of `∂Δ*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpcpFan {
    pub fan: Fan,
    /// Every maximal cone is unimodular, i.e. the resolution is smooth.
    pub unimodular: bool,
}

pub fn mpcp_fan(delta: &LatticePolytope) -> Result<MpcpFan> {
    let polar = delta.polar_dual()?;
    let tri = maximal_boundary_triangulation(&polar)?;
    let origin = tri
        .uses_points
        .iter()
        .position(|p| p.is_zero())
        .expect("origin");
    let rays = tri
        .uses_points
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    let shift = |i: usize| if i > origin { i - 1 } else { i };
    let cones = tri
        .boundary_cells()
        .into_iter()
        .map(|c| c.into_iter().map(shift).collect())
        .collect();
    let fan = Fan::new(delta.ambient_dim(), rays, cones)?;
    Ok(MpcpFan {
        fan,
        unimodular: tri.unimodular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::face_fan;

    #[test]
    fn anticanonical_triangle_gives_the_plane() {
        let delta = LatticePolytope::from_i64(&[&[2, -1], &[-1, 2], &[-1, -1]]);
        let m = mpcp_fan(&delta).unwrap();
        assert!(m.unimodular && m.fan.is_smooth() && m.fan.is_complete());
        assert_eq!(m.fan.max_cones().len(), 3);
    }

    #[test]
    fn fan_polytope_of_the_plane_resolves_to_the_hexagon() {
        // Δ = conv(e1, e2, -e1-e2); its polar is the big triangle with 9 boundary points
        let delta = LatticePolytope::from_i64(&[&[1, 0], &[0, 1], &[-1, -1]]);
        let m = mpcp_fan(&delta).unwrap();
        assert_eq!(m.fan.rays().len(), 9);
        assert_eq!(m.fan.max_cones().len(), 9);
        assert!(m.fan.is_smooth() && m.fan.is_complete());
        let coarse = face_fan(&delta.polar_dual().unwrap()).unwrap();
        assert!(m.fan.refines(&coarse).unwrap());
    }

    #[test]
    fn projective_three_space_quartic_mirror() {
        let delta = LatticePolytope::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]);
        let m = mpcp_fan(&delta).unwrap();
        assert!(m.unimodular);
        assert_eq!(m.fan.rays().len(), 34);
        assert_eq!(m.fan.max_cones().len(), 64);
        assert!(m.fan.is_complete());
    }
}
