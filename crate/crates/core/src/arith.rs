//! Exact integer and rational linear algebra.
//!
//! Everything geometric in this crate bottoms out here: Gaussian elimination
//! over `BigRational`, fraction-free determinants over `BigInt`, and a
//! unimodular column reduction (column-style Hermite form) that yields integer
//! kernels and lattice bases of rational subspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_of(n: &Int) -> Rat {
    BigRational::from_integer(n.clone())
}

pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_of).collect()
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

/// `<a, b>` for an integer vector against a rational one.
pub fn dot_mixed(a: &[Int], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + y * x)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn to_int_vec(v: &[Rat]) -> Option<Vec<Int>> {
    if is_integral(v) {
        Some(v.iter().map(|x| x.to_integer()).collect())
    } else {
        None
    }
}

pub fn gcd_all<'a>(v: impl IntoIterator<Item = &'a Int>) -> Int {
    v.into_iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Scale a rational vector to the primitive integer vector on the same ray.
/// The zero vector maps to the zero vector.
pub fn primitive(v: &[Rat]) -> Vec<Int> {
    let lcm = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_of(&lcm)).to_integer()).collect();
    primitive_int(&scaled)
}

pub fn primitive_int(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Reduced row echelon form. Returns the reduced matrix and the pivot columns.
pub fn rref(mut m: Vec<Vec<Rat>>, ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row >= m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let delta = &f * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    rref(rows.to_vec(), ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(rows.to_vec(), ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rat::zero(); ncols];
            v[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Some solution of `a · x = b`, or `None` when inconsistent. Free variables
/// are set to zero.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (r, pivots) = rref(aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[i][ncols].clone();
    }
    Some(x)
}

pub fn det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut d = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                let delta = &f * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    d
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn det_int(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::one();
    }
    let mut m = rows.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Int::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Result of reducing an integer matrix `A` (m × n) by unimodular column
/// operations: `A · W = H` where the last `n - rank` columns of `H` vanish.
#[derive(Debug, Clone)]
pub struct ColumnEchelon {
    pub h: Vec<Vec<Int>>,
    pub w: Vec<Vec<Int>>,
    pub rank: usize,
}

pub fn column_echelon(a: &[Vec<Int>], ncols: usize) -> ColumnEchelon {
    let mut h: Vec<Vec<Int>> = a.to_vec();
    let mut w: Vec<Vec<Int>> = (0..ncols)
        .map(|i| {
            (0..ncols)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut k = 0;
    for i in 0..h.len() {
        if k == ncols {
            break;
        }
        loop {
            // smallest nonzero entry in row i among columns k..
            let piv = (k..ncols)
                .filter(|&j| !h[i][j].is_zero())
                .min_by(|&x, &y| h[i][x].abs().cmp(&h[i][y].abs()));
            let Some(piv) = piv else { break };
            swap_cols(&mut h, k, piv);
            swap_cols(&mut w, k, piv);
            let mut done = true;
            for j in k + 1..ncols {
                if h[i][j].is_zero() {
                    continue;
                }
                let q = h[i][j].div_floor(&h[i][k]);
                col_axpy(&mut h, j, k, &q);
                col_axpy(&mut w, j, k, &q);
                if !h[i][j].is_zero() {
                    done = false;
                }
            }
            if done {
                if h[i][k].is_negative() {
                    negate_col(&mut h, k);
                    negate_col(&mut w, k);
                }
                k += 1;
                break;
            }
        }
    }
    ColumnEchelon { h, w, rank: k }
}

fn swap_cols(m: &mut [Vec<Int>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// column `dst` -= q · column `src`
fn col_axpy(m: &mut [Vec<Int>], dst: usize, src: usize, q: &Int) {
    for row in m.iter_mut() {
        let delta = q * &row[src];
        row[dst] -= delta;
    }
}

fn negate_col(m: &mut [Vec<Int>], c: usize) {
    for row in m.iter_mut() {
        row[c] = -row[c].clone();
    }
}

/// A Z-basis of the integer kernel `{x ∈ Zⁿ : A x = 0}`, as rows.
pub fn integer_kernel(a: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let ce = column_echelon(a, ncols);
    (ce.rank..ncols)
        .map(|j| ce.w.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Coordinates with respect to a lattice basis of `span(rows) ∩ Zⁿ`.
///
/// `rows` are arbitrary rational vectors spanning a subspace `L`. The helper
/// maps any vector of `L` to its coordinates in a basis of the saturated
/// lattice `L ∩ Zⁿ`, so lattice volumes in `L` become ordinary
/// normalized volumes in `Z^rank`.
pub struct SpanLattice {
    w: Vec<Vec<Int>>,
    rank: usize,
}

impl SpanLattice {
    pub fn new(rows: &[Vec<Rat>], ncols: usize) -> Self {
        let int_rows: Vec<Vec<Int>> = rows.iter().map(|r| primitive(r)).collect();
        let ce = column_echelon(&int_rows, ncols);
        SpanLattice {
            w: ce.w,
            rank: ce.rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self, x: &[Rat]) -> Vec<Rat> {
        (0..self.rank)
            .map(|j| {
                x.iter()
                    .zip(&self.w)
                    .fold(Rat::zero(), |acc, (xi, wrow)| acc + xi * rat_of(&wrow[j]))
            })
            .collect()
    }
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut r = Int::one();
    for i in 0..k {
        r = r * Int::from(n - i) / Int::from(i + 1);
    }
    r
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

pub fn fmt_rat(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}
