use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::operator::{DiffOperator, Term};
use crate::arith::{rat, Rat};
use crate::error::{Error, Result};

/// A coefficient of a generic section of `O(d)` on projective space, i.e. the
/// coordinate dual to one monomial of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffVar {
    pub label: String,
    /// Index into the bundle-degree list.
    pub bundle: usize,
    /// Exponents over the homogeneous coordinates.
    pub monomial: Vec<u32>,
}

/// Degree-`d` monomials in `k` variables: support size ascending, then
/// lexicographically descending (`x, y, z`; `x², y², z², xy, xz, yz`).
pub fn monomials(k: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == k {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(k, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        rec(k, d, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|m| m.iter().filter(|&&e| e > 0).count());
    out
}

fn degree_letter(d: u32) -> char {
    // a, b, c, … by degree; wraps past z, which no sane input reaches
    (b'a' + ((d - 1) % 26) as u8) as char
}

/// Coefficient variables of the bundles in order, labelled
/// `<letter of degree><monomial index><index among bundles of that degree>`,
/// with `_` between the indices once either exceeds 9.
pub fn coefficient_vars(degrees: &[u32], dim: usize) -> Result<Vec<CoeffVar>> {
    if dim == 0 {
        return Err(Error::input("projective space dimension must be positive"));
    }
    if let Some(d) = degrees.iter().find(|&&d| d == 0) {
        return Err(Error::input(format!(
            "bundle degrees must be positive, got {d}"
        )));
    }
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    let mut vars = Vec::new();
    for (b, &d) in degrees.iter().enumerate() {
        let nth = {
            let c = seen.entry(d).or_insert(0);
            *c += 1;
            *c
        };
        for (i, m) in monomials(dim + 1, d).into_iter().enumerate() {
            let i = i + 1;
            let sep = if i > 9 || nth > 9 { "_" } else { "" };
            vars.push(CoeffVar {
                label: format!("{}{i}{sep}{nth}", degree_letter(d)),
                bundle: b,
                monomial: m,
            });
        }
    }
    Ok(vars)
}

/// The tautological system of a product of line bundles on projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TautSystem {
    pub vars: Vec<CoeffVar>,
    /// One per bundle: `Σ c ∂_c + 1/2`.
    pub euler: Vec<DiffOperator>,
    /// One per ordered pair `(u, v)` of homogeneous coordinates:
    /// `Σ m_u c_m ∂_{c_{m - e_u + e_v}}`, plus 1 when `u = v`.
    pub symmetry: Vec<DiffOperator>,
    /// Every `∂c1∂c2 − ∂c3∂c4` with equal bundle multisets and equal
    /// product monomials, first term positive.
    pub boxes: Vec<DiffOperator>,
}

impl TautSystem {
    pub fn operators(&self) -> Vec<DiffOperator> {
        self.euler
            .iter()
            .chain(&self.symmetry)
            .chain(&self.boxes)
            .cloned()
            .collect()
    }
}

pub fn taut_system(degrees: &[u32], dim: usize) -> Result<TautSystem> {
    let vars = coefficient_vars(degrees, dim)?;
    let k = dim + 1;
    let half = rat(1) / rat(2);

    let euler = (0..degrees.len())
        .map(|b| {
            let terms = vars
                .iter()
                .filter(|v| v.bundle == b)
                .map(|v| Term {
                    derivs: vec![v.label.clone()],
                    multiplier: Some(v.label.clone()),
                    coeff: Rat::one(),
                })
                .collect();
            DiffOperator::new(terms, half.clone())
        })
        .collect::<Result<_>>()?;

    let index: BTreeMap<(usize, &[u32]), &str> = vars
        .iter()
        .map(|v| ((v.bundle, v.monomial.as_slice()), v.label.as_str()))
        .collect();
    let mut symmetry = Vec::with_capacity(k * k);
    for u in 0..k {
        for w in 0..k {
            let mut terms = Vec::new();
            for v in &vars {
                let mu = v.monomial[u];
                if mu == 0 {
                    continue;
                }
                let mut target = v.monomial.clone();
                target[u] -= 1;
                target[w] += 1;
                let to = index[&(v.bundle, target.as_slice())];
                terms.push(Term {
                    derivs: vec![to.to_string()],
                    multiplier: Some(v.label.clone()),
                    coeff: Rat::from_integer(mu.into()),
                });
            }
            let constant = if u == w { Rat::one() } else { Rat::zero() };
            symmetry.push(DiffOperator::new(terms, constant)?);
        }
    }

    // group unordered pairs by (bundle pair, product monomial)
    let mut groups: BTreeMap<((usize, usize), Vec<u32>), Vec<(usize, usize)>> = BTreeMap::new();
    for i in 0..vars.len() {
        for j in i..vars.len() {
            let (a, b) = (&vars[i], &vars[j]);
            let bundles = (a.bundle.min(b.bundle), a.bundle.max(b.bundle));
            let prod: Vec<u32> = a
                .monomial
                .iter()
                .zip(&b.monomial)
                .map(|(x, y)| x + y)
                .collect();
            groups.entry((bundles, prod)).or_default().push((i, j));
        }
    }
    let mut boxes = Vec::new();
    for pairs in groups.values() {
        for (s, &(i, j)) in pairs.iter().enumerate() {
            for &(p, q) in &pairs[s + 1..] {
                let term = |x: usize, y: usize, c: i64| Term {
                    derivs: vec![vars[x].label.clone(), vars[y].label.clone()],
                    multiplier: None,
                    coeff: rat(c),
                };
                let op = DiffOperator::new(vec![term(i, j, 1), term(p, q, -1)], Rat::zero())?;
                boxes.push(op.sign_normalized());
            }
        }
    }
    boxes.sort_by_key(|o| o.to_string());
    Ok(TautSystem {
        vars,
        euler,
        symmetry,
        boxes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order() {
        assert_eq!(
            monomials(3, 1),
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        assert_eq!(
            monomials(3, 2),
            vec![
                vec![2, 0, 0],
                vec![0, 2, 0],
                vec![0, 0, 2],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 1, 1]
            ]
        );
        assert_eq!(monomials(3, 3).len(), 10);
    }

    #[test]
    fn labels() {
        let vars = coefficient_vars(&[1, 1, 1, 1, 2], 2).unwrap();
        let labels: Vec<&str> = vars.iter().map(|v| v.label.as_str()).collect();
        assert_eq!(&labels[..4], &["a11", "a21", "a31", "a12"]);
        assert_eq!(&labels[12..], &["b11", "b21", "b31", "b41", "b51", "b61"]);
        let many = coefficient_vars(&[3], 3).unwrap();
        assert_eq!(many.last().unwrap().label, "c20_1");
        assert!(coefficient_vars(&[1, 0], 2).is_err());
    }

    #[test]
    fn counts_for_the_six_line_system() {
        let sys = taut_system(&[1, 1, 1, 1, 2], 2).unwrap();
        assert_eq!(sys.euler.len(), 5);
        assert_eq!(sys.symmetry.len(), 9);
        let kind = |o: &DiffOperator| {
            let letters: String = o.terms()[0].derivs.iter().map(|d| &d[..1]).collect();
            letters
        };
        let count = |k: &str| sys.boxes.iter().filter(|o| kind(o) == k).count();
        assert_eq!((count("aa"), count("bb"), count("ab")), (18, 6, 36));
        assert_eq!(
            sys.euler[0].to_string(),
            "a11*d(a11) + a21*d(a21) + a31*d(a31) + 1/2"
        );
    }

    #[test]
    fn small_systems() {
        let line = taut_system(&[1], 1).unwrap();
        assert_eq!(
            (line.euler.len(), line.symmetry.len(), line.boxes.len()),
            (1, 4, 0)
        );
        let conic = taut_system(&[2], 1).unwrap();
        assert_eq!(conic.boxes.len(), 1);
        assert_eq!(conic.boxes[0].to_string(), "d(b11)*d(b21) - d(b31)*d(b31)");
        assert!(taut_system(&[0], 1).is_err());
    }
}
