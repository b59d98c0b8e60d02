use num_traits::{One, Zero};

use crate::arith::{self, rat, Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{LatticePoint, LatticePolytope};
use crate::nefpart::{dualize, NefPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// Columns from the section polytopes `Δ_i`.
    Primal,
    /// Columns from the dual parts `∇_i`.
    Dual,
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "primal" => Ok(Side::Primal),
            "dual" => Ok(Side::Dual),
            _ => Err(Error::input(format!(
                "unknown side `{s}` (expected primal or dual)"
            ))),
        }
    }
}

/// A-hypergeometric data `(A, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkzData {
    /// `r` indicator rows followed by `n` coordinate rows.
    pub a: Vec<Vec<Int>>,
    pub beta: Vec<Rat>,
    /// `(group, lattice point)` per column.
    pub column_groups: Vec<(usize, LatticePoint)>,
    /// Z-basis of `{l : A l = 0}`, one relation per row.
    pub kernel_basis: Vec<Vec<Int>>,
}

/// Builds `(A, β)` from lattice-point groups, each containing the origin.
/// Within a group the origin comes first, the rest in lexicographic order.
pub fn gkz_from_groups(groups: &[LatticePolytope]) -> Result<GkzData> {
    let r = groups.len();
    let n = groups
        .first()
        .ok_or_else(|| Error::input("no column groups"))?
        .ambient_dim();
    let mut column_groups = Vec::new();
    for (g, p) in groups.iter().enumerate() {
        let zero = LatticePoint::zero(n);
        let pts = p.lattice_points();
        if !pts.contains(&zero) {
            return Err(Error::domain(format!(
                "group {g} polytope does not contain 0"
            )));
        }
        column_groups.push((g, zero));
        column_groups.extend(pts.into_iter().filter(|q| !q.is_zero()).map(|q| (g, q)));
    }
    let ncols = column_groups.len();
    let mut a = vec![vec![Int::zero(); ncols]; r + n];
    for (c, (g, q)) in column_groups.iter().enumerate() {
        a[*g][c] = Int::one();
        for (k, x) in q.0.iter().enumerate() {
            a[r + k][c] = x.clone();
        }
    }
    let mut beta = vec![rat(-1) / rat(2); r];
    beta.extend(std::iter::repeat_n(Rat::zero(), n));
    let kernel_basis = arith::integer_kernel(&a, ncols);
    Ok(GkzData {
        a,
        beta,
        column_groups,
        kernel_basis,
    })
}

pub fn gkz_data(np: &NefPartition, side: Side) -> Result<GkzData> {
    match side {
        Side::Primal => gkz_from_groups(&np.section_polytopes),
        Side::Dual => gkz_from_groups(&dualize(np)?.nabla_parts),
    }
}

impl GkzData {
    pub fn shape(&self) -> (usize, usize) {
        (self.a.len(), self.a.first().map_or(0, Vec::len))
    }

    pub fn column(&self, c: usize) -> Vec<Int> {
        self.a.iter().map(|row| row[c].clone()).collect()
    }

    pub fn kernel_is_exact(&self) -> bool {
        self.kernel_basis
            .iter()
            .all(|l| self.a.iter().all(|row| arith::dot_int(row, l).is_zero()))
    }

    /// Equal to `golden` after permuting columns inside each indicator group.
    pub fn matches_up_to_group_permutation(&self, golden: &[Vec<i64>]) -> bool {
        let (rows, cols) = self.shape();
        if golden.len() != rows || golden.iter().any(|r| r.len() != cols) {
            return false;
        }
        let columns = |m: &dyn Fn(usize) -> Vec<Int>| {
            let mut v: Vec<Vec<Int>> = (0..cols).map(m).collect();
            v.sort();
            v
        };
        let ours = columns(&|c| self.column(c));
        let theirs = columns(&|c| golden.iter().map(|row| Int::from(row[c])).collect());
        // sorting whole columns also sorts within groups, since the
        // indicator rows come first
        ours == theirs
    }

    /// Plain-text rendering: one bracketed row per line, then `β`.
    pub fn render(&self) -> String {
        let width = self
            .a
            .iter()
            .flatten()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        for row in &self.a {
            let cells: Vec<String> = row
                .iter()
                .map(|x| format!("{:>width$}", x.to_string()))
                .collect();
            out.push_str(&format!("[ {} ]\n", cells.join(" ")));
        }
        let beta: Vec<String> = self.beta.iter().map(arith::fmt_rat).collect();
        out.push_str(&format!("beta = ({})\n", beta.join(", ")));
        out
    }
}
