//! The example catalog and its runner.
//!
//! Each entry is either a nef-partition or a projective-bundle example, with
//! an optional block of expected values and optional golden comparisons. The
//! built-in catalog is compiled in; `NEFMIRROR_CATALOG` points at a
//! replacement file.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::Int;
use crate::error::{Error, Result};
use crate::invariants::{surface_node_count, verify_mirror_duality};
use crate::io::{FanDoc, NefPartitionDoc};
use crate::nefpart::{
    cayley_cone, double_dual_check, dual_cayley_cone, dualize, pairing_holds, s_polytope,
};
use crate::periods::{gkz_data, golden, taut_system, Side};
use crate::toric::{
    bundle_hyperplane, is_calabi_yau_cover, is_fano, linearly_equivalent, projective_bundle_fan,
    semiample_contraction, ToricDivisor,
};

pub const CATALOG_ENV: &str = "NEFMIRROR_CATALOG";

const BUILTIN: &str = include_str!("../data/catalog.json");

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    #[serde(flatten)]
    pub item: CatalogItem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub goldens: Vec<Golden>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CatalogItem {
    NefPartition { nef_partition: NefPartitionDoc },
    Bundle { bundle: BundleDoc },
}

/// `P(O(a) ⊕ O)` over the toric variety of `fan`, with an `r`-fold cover.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BundleDoc {
    pub fan: FanDoc,
    /// Coefficients in the order of `fan.rays` as written.
    pub a: Vec<i64>,
    pub r: u32,
}

#[allow(non_snake_case)]
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_X: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_Xdual: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_Y: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi_Ydual: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h11_Y: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h21_Y: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub node_count: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duality_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contracted_max_cones: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fano: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub calabi_yau: Option<bool>,
}

/// Stored reference data an entry is compared against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Golden {
    /// Dual-side GKZ matrix of the three-line partition.
    GkzSixLinesDual,
    /// Primal-side GKZ matrix of the line-plus-conic partition.
    GkzLineConicPrimal,
}

impl Golden {
    pub fn side(self) -> Side {
        match self {
            Golden::GkzSixLinesDual => Side::Dual,
            Golden::GkzLineConicPrimal => Side::Primal,
        }
    }

    pub fn matrix(self) -> Vec<Vec<i64>> {
        match self {
            Golden::GkzSixLinesDual => golden::to_rows(&golden::SIX_LINES_DUAL_A),
            Golden::GkzLineConicPrimal => golden::to_rows(&golden::LINE_CONIC_PRIMAL_A),
        }
    }
}

impl Catalog {
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN).expect("built-in catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Catalog> {
        let cat: Catalog = serde_json::from_str(text)?;
        let mut seen = BTreeSet::new();
        for e in &cat.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(Error::input(format!(
                    "duplicate catalog entry `{}`",
                    e.name
                )));
            }
        }
        Ok(cat)
    }

    pub fn from_path(path: &Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read catalog {}: {e}", path.display())))?;
        Catalog::parse(&text)
    }

    /// The file named by `NEFMIRROR_CATALOG` if set, else the built-in one.
    pub fn load() -> Result<Catalog> {
        match std::env::var_os(CATALOG_ENV) {
            Some(p) => Catalog::from_path(Path::new(&p)),
            None => Ok(Catalog::builtin()),
        }
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl CatalogEntry {
    pub fn nef_partition_doc(&self) -> Option<&NefPartitionDoc> {
        match &self.item {
            CatalogItem::NefPartition { nef_partition } => Some(nef_partition),
            CatalogItem::Bundle { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryOutcome {
    pub name: String,
    pub checks: Vec<Check>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogSummary {
    pub outcomes: Vec<EntryOutcome>,
    /// Checks that belong to no single entry (the tautological system).
    pub global: Vec<Check>,
    pub warnings: Vec<String>,
}

impl CatalogSummary {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(EntryOutcome::passed) && self.global.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for w in &self.warnings {
            s.push_str(&format!("warning: {w}\n"));
        }
        for o in &self.outcomes {
            let status = if o.passed() { "ok" } else { "FAIL" };
            s.push_str(&format!(
                "{status:4} {} ({} checks)\n",
                o.name,
                o.checks.len()
            ));
            for c in o.failures() {
                s.push_str(&format!("     {}: {}\n", c.label, c.detail));
            }
        }
        for c in &self.global {
            let status = if c.passed { "ok" } else { "FAIL" };
            s.push_str(&format!("{status:4} {}: {}\n", c.label, c.detail));
        }
        let failed = self.outcomes.iter().filter(|o| !o.passed()).count();
        s.push_str(&format!(
            "{} entries, {failed} failed\n",
            self.outcomes.len()
        ));
        s
    }
}

fn compare<T: PartialEq + std::fmt::Display>(
    checks: &mut Vec<Check>,
    label: &str,
    want: Option<T>,
    got: T,
) {
    if let Some(w) = want {
        let ok = w == got;
        checks.push(Check::new(label, ok, format!("expected {w}, got {got}")));
    }
}

fn as_i64(x: &Int) -> i64 {
    i64::try_from(x).unwrap_or(i64::MAX)
}

fn run_nef_partition(
    doc: &NefPartitionDoc,
    expected: &Expected,
    goldens: &[Golden],
) -> Result<Vec<Check>> {
    let np = doc.build()?;
    let dual = dualize(&np)?;
    let rep = verify_mirror_duality(&np)?;
    let inv = &rep.invariants;
    let mut checks = vec![Check::new(
        "mirror duality",
        rep.ok,
        format!(
            "χ(Y) = {} (DK {}), χ(Y∨) = {} (DK {})",
            inv.chi_y, rep.chi_y_dk, inv.chi_ydual, rep.chi_ydual_dk
        ),
    )];
    checks.push(Check::new(
        "double dual",
        double_dual_check(&np)?,
        "∇∨ of the dual recovers Δ",
    ));
    checks.push(Check::new(
        "pairing",
        pairing_holds(&np, &dual),
        "min ⟨Δ_i, ∇_j⟩ = −δ_ij",
    ));
    let vs = s_polytope(&np)?.normalized_volume()?;
    let vn = dual.nabla_polar.normalized_volume()?;
    checks.push(Check::new(
        "volume identity",
        vs == vn,
        format!("vol S = {vs}, vol ∇∨ = {vn}"),
    ));
    let c = cayley_cone(&np)?.dual_cone()?;
    let d = dual_cayley_cone(&dual)?;
    checks.push(Check::new(
        "gorenstein cones",
        c.generators() == d.generators(),
        format!(
            "{} vs {} generators",
            c.generators().len(),
            d.generators().len()
        ),
    ));

    compare(&mut checks, "chi_X", expected.chi_X, as_i64(&inv.chi_x));
    compare(
        &mut checks,
        "chi_Xdual",
        expected.chi_Xdual,
        as_i64(&inv.chi_xdual),
    );
    compare(&mut checks, "chi_Y", expected.chi_Y, as_i64(&inv.chi_y));
    compare(
        &mut checks,
        "chi_Ydual",
        expected.chi_Ydual,
        as_i64(&inv.chi_ydual),
    );
    compare(&mut checks, "duality_ok", expected.duality_ok, rep.ok);
    if expected.h11_Y.is_some() || expected.h21_Y.is_some() {
        let (h11, h21) = match (&inv.h11_y, &inv.h21_y) {
            (Some(a), Some(b)) => (as_i64(a), as_i64(b)),
            _ => return Err(Error::input("h11_Y/h21_Y are only defined for threefolds")),
        };
        compare(&mut checks, "h11_Y", expected.h11_Y, h11);
        compare(&mut checks, "h21_Y", expected.h21_Y, h21);
    }
    if expected.node_count.is_some() {
        compare(
            &mut checks,
            "node_count",
            expected.node_count,
            as_i64(&surface_node_count(&np)?),
        );
    }
    for g in goldens {
        let data = gkz_data(&np, g.side())?;
        let ok = data.matches_up_to_group_permutation(&g.matrix()) && data.kernel_is_exact();
        checks.push(Check::new(
            format!("golden {g:?}"),
            ok,
            format!("A is {}×{}", data.shape().0, data.shape().1),
        ));
    }
    Ok(checks)
}

fn run_bundle(doc: &BundleDoc, expected: &Expected) -> Result<Vec<Check>> {
    let (fan, perm) = doc.fan.build()?;
    if doc.a.len() != perm.len() {
        return Err(Error::DimensionMismatch {
            expected: perm.len(),
            got: doc.a.len(),
        });
    }
    let mut coeffs = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        coeffs[p] = doc.a[i];
    }
    let a = ToricDivisor::from_i64(&fan, &coeffs)?;
    let z = projective_bundle_fan(&fan, &a)?;
    let mut checks = vec![Check::new(
        "bundle fan",
        z.is_smooth() && z.is_complete(),
        format!(
            "{} rays, {} maximal cones",
            z.rays().len(),
            z.max_cones().len()
        ),
    )];
    let h = bundle_hyperplane(&z, &a)?;
    let con = semiample_contraction(&z, &h)?;
    let hp = con.divisor();
    let rh = hp.scaled(&Int::from(doc.r));
    let anti = linearly_equivalent(&rh, &ToricDivisor::anticanonical(&con.fan))?.is_some();
    checks.push(Check::new("r·H′ ~ −K", anti, format!("r = {}", doc.r)));
    checks.push(Check::new(
        "contraction smooth",
        con.fan.is_smooth() && con.fan.is_complete(),
        "",
    ));
    checks.push(Check::new(
        "refinement",
        z.refines(&con.fan)?,
        "bundle fan refines the contraction",
    ));
    compare(
        &mut checks,
        "contracted_max_cones",
        expected.contracted_max_cones,
        con.fan.max_cones().len(),
    );
    compare(&mut checks, "fano", expected.fano, is_fano(&con.fan));
    compare(
        &mut checks,
        "calabi_yau",
        expected.calabi_yau,
        is_calabi_yau_cover(&fan, &a, doc.r)?,
    );
    Ok(checks)
}

pub fn run_entry(entry: &CatalogEntry) -> EntryOutcome {
    let expected = entry.expected.clone().unwrap_or_default();
    let result = match &entry.item {
        CatalogItem::NefPartition { nef_partition } => {
            run_nef_partition(nef_partition, &expected, &entry.goldens)
        }
        CatalogItem::Bundle { bundle } => run_bundle(bundle, &expected),
    };
    let checks = result.unwrap_or_else(|e| vec![Check::new("evaluation", false, e.to_string())]);
    EntryOutcome {
        name: entry.name.clone(),
        checks,
    }
}

/// Runs every entry in order plus the tautological-system golden check.
pub fn run_catalog(cat: &Catalog) -> CatalogSummary {
    let outcomes = cat.entries.iter().map(run_entry).collect();
    let taut = taut_system(&[1, 1, 1, 1, 2], 2).and_then(|sys| golden::missing_from(&sys));
    let global = vec![match taut {
        Ok(m) => Check::new(
            "tautological system (1,1,1,1,2)",
            m.is_empty(),
            format!("{} reference operators missing", m.len()),
        ),
        Err(e) => Check::new("tautological system (1,1,1,1,2)", false, e.to_string()),
    }];
    let warnings = if cat.entries.is_empty() {
        vec!["catalog is empty".to_string()]
    } else {
        Vec::new()
    };
    CatalogSummary {
        outcomes,
        global,
        warnings,
    }
}
