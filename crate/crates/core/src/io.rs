//! JSON documents for polytopes, fans, nef-partitions, reports and GKZ data.
//!
//! Coordinates are written as JSON integers when they fit in an `i64` and as
//! decimal strings otherwise; rationals are `"p/q"` strings. Readers accept
//! both forms. Derived data (facets, fan structure) is always recomputed on
//! load, never read back.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::arith::{self, Int, Rat};
use crate::error::{Error, Result};
use crate::invariants::{DkTerm, DualityReport};
use crate::lattice::{LatticePoint, LatticePolytope, RationalVector};
use crate::nefpart::{build_nef_partition, DualNefPartition, NefPartition};
use crate::periods::GkzData;
use crate::toric::{normal_fan, Fan};

/// A coordinate as it appears in a document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    pub fn to_rat(&self) -> Result<Rat> {
        match self {
            Coord::Int(n) => Ok(Rat::from_integer(Int::from(*n))),
            Coord::Text(s) => arith::parse_rat(s.trim())
                .ok_or_else(|| Error::input(format!("cannot parse coordinate `{s}`"))),
        }
    }

    pub fn to_int(&self) -> Result<Int> {
        let q = self.to_rat()?;
        if !q.is_integer() {
            return Err(Error::input(format!(
                "coordinate {} is not an integer",
                arith::fmt_rat(&q)
            )));
        }
        Ok(q.to_integer())
    }
}

fn int_value(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(n) => json!(n),
        Err(_) => json!(x.to_string()),
    }
}

fn rat_value(x: &Rat) -> Value {
    if x.is_integer() {
        int_value(&x.to_integer())
    } else {
        json!(arith::fmt_rat(x))
    }
}

pub fn point_value(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(int_value).collect())
}

fn rvec_value(v: &RationalVector) -> Value {
    Value::Array(v.coords().iter().map(rat_value).collect())
}

fn points_value(ps: &[LatticePoint]) -> Value {
    Value::Array(ps.iter().map(point_value).collect())
}

fn lattice_rows(rows: &[Vec<Coord>], dim: Option<usize>) -> Result<Vec<LatticePoint>> {
    rows.iter()
        .map(|r| {
            if let Some(d) = dim {
                if r.len() != d {
                    return Err(Error::DimensionMismatch {
                        expected: d,
                        got: r.len(),
                    });
                }
            }
            Ok(LatticePoint::new(
                r.iter().map(Coord::to_int).collect::<Result<_>>()?,
            ))
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub dim: usize,
    pub vertices: Vec<Vec<Coord>>,
}

impl PolytopeDoc {
    pub fn build(&self) -> Result<LatticePolytope> {
        let pts: Vec<RationalVector> = self
            .vertices
            .iter()
            .map(|r| {
                if r.len() != self.dim {
                    return Err(Error::DimensionMismatch {
                        expected: self.dim,
                        got: r.len(),
                    });
                }
                Ok(RationalVector(
                    r.iter().map(Coord::to_rat).collect::<Result<_>>()?,
                ))
            })
            .collect::<Result<_>>()?;
        if pts.is_empty() {
            return Err(Error::input("polytope has no vertices"));
        }
        crate::lattice::convex_hull(&pts, self.dim)
    }
}

pub fn polytope_to_json(p: &LatticePolytope) -> Value {
    json!({
        "dim": p.ambient_dim(),
        "vertices": Value::Array(p.vertices().iter().map(rvec_value).collect()),
    })
}

pub fn polytope_from_json(text: &str) -> Result<LatticePolytope> {
    serde_json::from_str::<PolytopeDoc>(text)?.build()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanDoc {
    pub dim: usize,
    pub rays: Vec<Vec<Coord>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanDoc {
    /// The fan, and for each input ray its index in the canonical ordering.
    pub fn build(&self) -> Result<(Fan, Vec<usize>)> {
        let rays = lattice_rows(&self.rays, Some(self.dim))?;
        let fan = Fan::new(self.dim, rays.clone(), self.max_cones.clone())?;
        let perm = rays
            .iter()
            .map(|r| {
                fan.ray_index(r)
                    .ok_or_else(|| Error::consistency("ray lost in canonicalization"))
            })
            .collect::<Result<_>>()?;
        Ok((fan, perm))
    }
}

pub fn fan_to_json(f: &Fan) -> Value {
    json!({
        "dim": f.ambient_dim(),
        "rays": points_value(f.rays()),
        "max_cones": f.max_cones(),
    })
}

pub fn fan_from_json(text: &str) -> Result<Fan> {
    Ok(serde_json::from_str::<FanDoc>(text)?.build()?.0)
}

/// `parts` index the rays of the normal fan of `Δ` in canonical order.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NefPartitionDoc {
    pub delta_vertices: Vec<Vec<Coord>>,
    pub parts: Vec<Vec<usize>>,
}

impl NefPartitionDoc {
    pub fn build(&self) -> Result<NefPartition> {
        let dim = self
            .delta_vertices
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::input("delta_vertices is empty"))?;
        let pts = lattice_rows(&self.delta_vertices, Some(dim))?;
        let delta = LatticePolytope::from_points(&pts)?;
        build_nef_partition(&delta, &self.parts)
    }
}

pub fn nef_partition_to_json(np: &NefPartition) -> Value {
    json!({
        "delta_vertices": Value::Array(np.delta.vertices().iter().map(rvec_value).collect()),
        "parts": np.parts,
    })
}

pub fn nef_partition_from_json(text: &str) -> Result<NefPartition> {
    serde_json::from_str::<NefPartitionDoc>(text)?.build()
}

/// The dual nef-partition as a nef-partition document on `∇`, together with
/// the normal fan of `∇`, the parts `∇_k` and the polytope `∇∨`.
pub fn dual_to_json(np: &NefPartition, dual: &DualNefPartition) -> Result<Value> {
    let as_np = dual.as_nef_partition(np)?;
    let fan = normal_fan(&dual.nabla)?;
    Ok(json!({
        "delta_vertices": Value::Array(dual.nabla.vertices().iter().map(rvec_value).collect()),
        "parts": as_np.parts,
        "fan": fan_to_json(&fan),
        "nabla_parts": Value::Array(dual.nabla_parts.iter().map(polytope_to_json).collect()),
        "nabla_polar": polytope_to_json(&dual.nabla_polar),
    }))
}

fn dk_terms_value(terms: &[DkTerm]) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|t| json!({ "J": t.subset, "volume": int_value(&t.volume) }))
            .collect(),
    )
}

fn ints_value(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

pub fn report_to_json(rep: &DualityReport) -> Value {
    let inv = &rep.invariants;
    let offdiag: serde_json::Map<String, Value> = inv
        .hodge_offdiag
        .iter()
        .map(|((p, q), v)| (format!("{p},{q}"), int_value(v)))
        .collect();
    let mut hodge = json!({
        "X": ints_value(&inv.hodge_x),
        "Xdual": ints_value(&inv.hodge_xdual),
        "Y_offdiag": offdiag,
    });
    if let (Some(h11), Some(h21)) = (&inv.h11_y, &inv.h21_y) {
        hodge["h11_Y"] = int_value(h11);
        hodge["h21_Y"] = int_value(h21);
    }
    json!({
        "n": inv.n,
        "chi_X": int_value(&inv.chi_x),
        "chi_Xdual": int_value(&inv.chi_xdual),
        "chi_Y": int_value(&inv.chi_y),
        "chi_Ydual": int_value(&inv.chi_ydual),
        "chi_Y_dk": int_value(&rep.chi_y_dk),
        "chi_Ydual_dk": int_value(&rep.chi_ydual_dk),
        "duality_ok": rep.ok,
        "snc_expected": inv.snc_expected,
        "hodge": hodge,
        "dk_terms": dk_terms_value(&rep.dk_terms),
        "dk_terms_dual": dk_terms_value(&rep.dk_terms_dual),
    })
}

pub fn report_markdown(rep: &DualityReport) -> String {
    let inv = &rep.invariants;
    let join = |v: &[Int]| v.iter().map(Int::to_string).collect::<Vec<_>>().join(", ");
    let mut s = String::new();
    s.push_str(&format!("# Double cover invariants (n = {})\n\n", inv.n));
    s.push_str("| quantity | value |\n|---|---|\n");
    for (k, v) in [
        ("χ(X)", &inv.chi_x),
        ("χ(X∨)", &inv.chi_xdual),
        ("χ(Y)", &inv.chi_y),
        ("χ(Y∨)", &inv.chi_ydual),
        ("χ(Y) via DK", &rep.chi_y_dk),
        ("χ(Y∨) via DK", &rep.chi_ydual_dk),
    ] {
        s.push_str(&format!("| {k} | {v} |\n"));
    }
    if let (Some(h11), Some(h21)) = (&inv.h11_y, &inv.h21_y) {
        s.push_str(&format!("| h¹¹(Y) | {h11} |\n| h²¹(Y) | {h21} |\n"));
    }
    s.push_str(&format!(
        "\nDuality holds: **{}**\n\n",
        if rep.ok { "yes" } else { "no" }
    ));
    s.push_str(&format!(
        "h^{{p,p}}(X) = ({})  \nh^{{p,p}}(X∨) = ({})\n\n",
        join(&inv.hodge_x),
        join(&inv.hodge_xdual)
    ));
    s.push_str("| J | volume |\n|---|---|\n");
    for t in &rep.dk_terms {
        let j: Vec<String> = t.subset.iter().map(usize::to_string).collect();
        s.push_str(&format!("| {{{}}} | {} |\n", j.join(","), t.volume));
    }
    s
}

pub fn gkz_to_json(g: &GkzData) -> Value {
    let a: Vec<Value> = g.a.iter().map(|row| ints_value(row)).collect();
    let beta: Vec<Value> = g.beta.iter().map(|b| json!(arith::fmt_rat(b))).collect();
    let groups: Vec<usize> = g.column_groups.iter().map(|(k, _)| *k).collect();
    json!({
        "A": a,
        "beta": beta,
        "groups": groups,
        "kernel": Value::Array(g.kernel_basis.iter().map(|l| ints_value(l)).collect()),
    })
}

/// Two-space-indented JSON with a trailing newline.
pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("Value always serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::verify_mirror_duality;
    use crate::nefpart::dualize;

    const TRIPLE: &str = r#"{"delta_vertices": [[2,-1],[-1,2],[-1,-1]], "parts": [[2],[1],[0]]}"#;

    #[test]
    fn polytope_round_trip() {
        let p =
            polytope_from_json(r#"{"dim": 2, "vertices": [[0,0],[2,0],[0,"2"],[1,1]]}"#).unwrap();
        assert_eq!(p.vertices().len(), 3);
        let back = polytope_from_json(&polytope_to_json(&p).to_string()).unwrap();
        assert_eq!(p, back);
        let half = polytope_from_json(r#"{"dim": 1, "vertices": [["-1/2"],[1]]}"#).unwrap();
        assert!(!half.is_lattice_polytope());
        assert_eq!(polytope_to_json(&half)["vertices"][0][0], json!("-1/2"));
    }

    #[test]
    fn malformed_documents() {
        assert!(polytope_from_json("{").is_err());
        assert!(polytope_from_json(r#"{"dim": 2, "vertices": [[1]]}"#).is_err());
        assert!(polytope_from_json(r#"{"dim": 1, "vertices": [["x"]]}"#).is_err());
        assert!(nef_partition_from_json(r#"{"delta_vertices": [], "parts": []}"#).is_err());
        assert!(fan_from_json(r#"{"dim": 2, "rays": [[2,0]], "max_cones": [[0]]}"#).is_err());
    }

    #[test]
    fn fan_doc_reports_the_permutation() {
        let doc: FanDoc = serde_json::from_str(
            r#"{"dim": 2, "rays": [[1,0],[0,1],[-1,-1]], "max_cones": [[0,1],[1,2],[0,2]]}"#,
        )
        .unwrap();
        let (fan, perm) = doc.build().unwrap();
        assert_eq!(perm, vec![2, 1, 0]);
        assert!(fan.is_smooth() && fan.is_complete());
        assert_eq!(fan_from_json(&fan_to_json(&fan).to_string()).unwrap(), fan);
    }

    #[test]
    fn dual_document_of_the_triple() {
        let np = nef_partition_from_json(TRIPLE).unwrap();
        let v = dual_to_json(&np, &dualize(&np).unwrap()).unwrap();
        assert_eq!(v["fan"]["rays"].as_array().unwrap().len(), 6);
        assert_eq!(v["delta_vertices"].as_array().unwrap().len(), 6);
        let again: NefPartitionDoc = serde_json::from_value(v).unwrap();
        assert_eq!(again.build().unwrap().r(), 3);
    }

    #[test]
    fn report_fields() {
        let np = nef_partition_from_json(TRIPLE).unwrap();
        let rep = verify_mirror_duality(&np).unwrap();
        let v = report_to_json(&rep);
        assert_eq!(v["chi_Y"], json!(9));
        assert_eq!(v["chi_Ydual"], json!(9));
        assert_eq!(v["duality_ok"], json!(true));
        assert_eq!(v["dk_terms"].as_array().unwrap().len(), 7);
        assert!(v["dk_terms"][0]["J"].is_array());
        let md = report_markdown(&rep);
        assert!(md.contains("| χ(Y) | 9 |"));
        assert_eq!(pretty(&v), pretty(&report_to_json(&rep)));
    }
}
