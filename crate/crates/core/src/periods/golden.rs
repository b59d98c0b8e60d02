//! Reference data for the six-line double plane: the published GKZ matrices
//! and the tautological operator lists, with containment checks.

use super::operator::{parse_operators, DiffOperator};
use super::taut::TautSystem;
use crate::error::Result;

/// Dual side of the partition with three lines: columns `0, ρ_i` per group.
pub const SIX_LINES_DUAL_A: [[i64; 6]; 5] = [
    [1, 1, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, -1],
    [0, 0, 0, 1, 0, -1],
];

/// Primal side of the line-plus-conic partition `{ρ₃}, {ρ₁, ρ₂}`.
pub const LINE_CONIC_PRIMAL_A: [[i64; 9]; 4] = [
    [1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, -1, -1, -1, 0, 1],
    [0, 0, 1, 0, 1, 0, -1, -1, -1],
];

pub fn to_rows<const C: usize>(m: &[[i64; C]]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

const EULER: &str = "
b11*d(b11) + b21*d(b21) + b31*d(b31) + b41*d(b41) + b51*d(b51) + b61*d(b61) + 1/2
a11*d(a11) + a21*d(a21) + a31*d(a31) + 1/2
a12*d(a12) + a22*d(a22) + a32*d(a32) + 1/2
a13*d(a13) + a23*d(a23) + a33*d(a33) + 1/2
a14*d(a14) + a24*d(a24) + a34*d(a34) + 1/2
";

const SYMMETRY: &str = "
a11*d(a21) + a12*d(a22) + a13*d(a23) + a14*d(a24) + 2*b11*d(b41) + b41*d(b21) + b51*d(b61)
a11*d(a31) + a12*d(a32) + a13*d(a33) + a14*d(a34) + 2*b11*d(b51) + b41*d(b61) + b51*d(b31)
a21*d(a31) + a22*d(a32) + a23*d(a33) + a24*d(a34) + 2*b21*d(b61) + b41*d(b51) + b61*d(b31)
a21*d(a11) + a22*d(a12) + a23*d(a13) + a24*d(a14) + 2*b21*d(b41) + b41*d(b11) + b61*d(b51)
a31*d(a11) + a32*d(a12) + a33*d(a13) + a34*d(a14) + 2*b31*d(b51) + b51*d(b11) + b61*d(b41)
a31*d(a21) + a32*d(a22) + a33*d(a23) + a34*d(a24) + 2*b31*d(b61) + b51*d(b41) + b61*d(b21)
a11*d(a11) + a12*d(a12) + a13*d(a13) + a14*d(a14) + 2*b11*d(b11) + b41*d(b41) + b51*d(b51) + 1
a21*d(a21) + a22*d(a22) + a23*d(a23) + a24*d(a24) + 2*b21*d(b21) + b41*d(b41) + b61*d(b61) + 1
a31*d(a31) + a32*d(a32) + a33*d(a33) + a34*d(a34) + 2*b31*d(b31) + b51*d(b51) + b61*d(b61) + 1
";

const BOXES_B: &str = "
d(b11)*d(b21) - d(b41)*d(b41)
d(b11)*d(b31) - d(b51)*d(b51)
d(b21)*d(b31) - d(b61)*d(b61)
d(b11)*d(b61) - d(b41)*d(b51)
d(b21)*d(b51) - d(b41)*d(b61)
d(b31)*d(b41) - d(b51)*d(b61)
d(a11)*d(b21) - d(a21)*d(b41)
d(a11)*d(b31) - d(a31)*d(b51)
d(a11)*d(b41) - d(a21)*d(b11)
d(a11)*d(b51) - d(a31)*d(b11)
d(a11)*d(b61) - d(a21)*d(b51)
d(a11)*d(b61) - d(a31)*d(b41)
d(a21)*d(b31) - d(a31)*d(b61)
";

pub fn euler_operators() -> Vec<DiffOperator> {
    parse_operators(EULER).expect("valid reference operators")
}

pub fn symmetry_operators() -> Vec<DiffOperator> {
    parse_operators(SYMMETRY).expect("valid reference operators")
}

/// `∂a_ij ∂a_kl − ∂a_il ∂a_kj` for `1 ≤ i, k ≤ 3`, `1 ≤ j, l ≤ 4` (nonzero
/// ones, one per sign class) followed by the listed quadratic relations
/// involving `b`.
pub fn box_operators() -> Vec<DiffOperator> {
    let mut out: Vec<DiffOperator> = Vec::new();
    for i in 1..=3 {
        for k in 1..=3 {
            for j in 1..=4 {
                for l in 1..=4 {
                    let s = format!("d(a{i}{j})*d(a{k}{l}) - d(a{i}{l})*d(a{k}{j})");
                    let op: DiffOperator = s.parse().expect("valid");
                    if op.is_zero() {
                        continue;
                    }
                    let op = op.sign_normalized();
                    if !out.contains(&op) {
                        out.push(op);
                    }
                }
            }
        }
    }
    out.extend(parse_operators(BOXES_B).expect("valid reference operators"));
    out
}

/// Reference operators missing from a generated system (empty on success).
/// Box operators are compared up to an overall sign.
pub fn missing_from(sys: &TautSystem) -> Result<Vec<DiffOperator>> {
    let mut missing = Vec::new();
    for op in euler_operators() {
        if !sys.euler.contains(&op) {
            missing.push(op);
        }
    }
    for op in symmetry_operators() {
        if !sys.symmetry.contains(&op) {
            missing.push(op);
        }
    }
    let boxes: Vec<DiffOperator> = sys
        .boxes
        .iter()
        .map(DiffOperator::sign_normalized)
        .collect();
    for op in box_operators() {
        if !boxes.contains(&op.sign_normalized()) {
            missing.push(op);
        }
    }
    Ok(missing)
}
