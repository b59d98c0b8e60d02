use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Rat};
use crate::error::{Error, Result};

/// `coeff · multiplier · ∂/∂derivs[0] ∂/∂derivs[1] …`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    /// Sorted; at most two entries.
    pub derivs: Vec<String>,
    pub multiplier: Option<String>,
    pub coeff: Rat,
}

/// A linear differential operator in the coefficient variables with
/// polynomial coefficients of degree ≤ 1, kept in canonical form: terms
/// sorted by `(derivs, multiplier)`, like terms merged, zeros dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    terms: Vec<Term>,
    constant: Rat,
}

impl DiffOperator {
    pub fn new(terms: Vec<Term>, constant: Rat) -> Result<Self> {
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|mut t| {
                t.derivs.sort();
                t
            })
            .collect();
        for t in &terms {
            if t.derivs.is_empty() || t.derivs.len() > 2 {
                return Err(Error::input("operator terms need one or two derivatives"));
            }
        }
        terms.sort_by(|a, b| (&a.derivs, &a.multiplier).cmp(&(&b.derivs, &b.multiplier)));
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.derivs == t.derivs && last.multiplier == t.multiplier => {
                    last.coeff += t.coeff
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Ok(DiffOperator {
            terms: merged,
            constant,
        })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    /// Scales so the first term has a positive coefficient.
    pub fn sign_normalized(&self) -> DiffOperator {
        match self.terms.first() {
            Some(t) if t.coeff.is_negative() => DiffOperator {
                terms: self
                    .terms
                    .iter()
                    .map(|t| Term {
                        coeff: -t.coeff.clone(),
                        ..t.clone()
                    })
                    .collect(),
                constant: -self.constant.clone(),
            },
            _ => self.clone(),
        }
    }

    /// Second-order part only, i.e. a box operator `∂c1∂c2 − ∂c3∂c4`.
    pub fn is_binomial(&self) -> bool {
        self.constant.is_zero()
            && self.terms.len() == 2
            && self
                .terms
                .iter()
                .all(|t| t.derivs.len() == 2 && t.multiplier.is_none())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &Term, first: bool) -> fmt::Result {
    let mag = t.coeff.abs();
    if first {
        if t.coeff.is_negative() {
            write!(f, "-")?;
        }
    } else if t.coeff.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut parts: Vec<String> = Vec::new();
    if !mag.is_one() {
        parts.push(arith::fmt_rat(&mag));
    }
    if let Some(m) = &t.multiplier {
        parts.push(m.clone());
    }
    parts.extend(t.derivs.iter().map(|d| format!("d({d})")));
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            write_term(f, t, i == 0)?;
        }
        if !self.constant.is_zero() || self.terms.is_empty() {
            let mag = arith::fmt_rat(&self.constant.abs());
            match (self.terms.is_empty(), self.constant.is_negative()) {
                (true, true) => write!(f, "-{mag}")?,
                (true, false) => write!(f, "{mag}")?,
                (false, true) => write!(f, " - {mag}")?,
                (false, false) => write!(f, " + {mag}")?,
            }
        }
        Ok(())
    }
}

fn is_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for DiffOperator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::input("empty operator"));
        }
        // split into signed chunks at top-level " + " / " - "
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let (mut neg, mut rest) = match s.strip_prefix('-') {
            Some(r) => (true, r.trim_start()),
            None => (false, s),
        };
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let cut = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (p, m) => p.or(m),
            };
            match cut {
                Some(i) => {
                    chunks.push((neg, rest[..i].trim().to_string()));
                    neg = rest[i..].starts_with(" - ");
                    rest = &rest[i + 3..];
                }
                None => {
                    chunks.push((neg, rest.trim().to_string()));
                    break;
                }
            }
        }
        let mut terms = Vec::new();
        let mut constant = Rat::zero();
        for (neg, chunk) in chunks {
            let mut coeff = Rat::one();
            let mut multiplier = None;
            let mut derivs = Vec::new();
            for factor in chunk.split('*').map(str::trim) {
                if let Some(inner) = factor.strip_prefix("d(").and_then(|x| x.strip_suffix(')')) {
                    if !is_label(inner) {
                        return Err(Error::input(format!("bad variable name `{inner}`")));
                    }
                    derivs.push(inner.to_string());
                } else if is_label(factor) {
                    if multiplier.replace(factor.to_string()).is_some() {
                        return Err(Error::input(format!("term `{chunk}` has two multipliers")));
                    }
                } else {
                    let c = arith::parse_rat(factor)
                        .ok_or_else(|| Error::input(format!("cannot parse factor `{factor}`")))?;
                    coeff *= c;
                }
            }
            if neg {
                coeff = -coeff;
            }
            if derivs.is_empty() {
                if multiplier.is_some() {
                    return Err(Error::input(format!("term `{chunk}` has no derivative")));
                }
                constant += coeff;
            } else {
                terms.push(Term {
                    derivs,
                    multiplier,
                    coeff,
                });
            }
        }
        DiffOperator::new(terms, constant)
    }
}

/// One operator per line.
pub fn serialize_operators(ops: &[DiffOperator]) -> String {
    ops.iter().map(|o| format!("{o}\n")).collect()
}

/// Inverse of [`serialize_operators`]; blank lines and `#` comments are skipped.
pub fn parse_operators(text: &str) -> Result<Vec<DiffOperator>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn euler_rendering() {
        let terms = ["a31", "a11", "a21"]
            .iter()
            .map(|c| Term {
                derivs: vec![c.to_string()],
                multiplier: Some(c.to_string()),
                coeff: rat(1),
            })
            .collect();
        let op = DiffOperator::new(terms, rat(1) / rat(2)).unwrap();
        assert_eq!(op.to_string(), "a11*d(a11) + a21*d(a21) + a31*d(a31) + 1/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "a11*d(a21) + a12*d(a22) + 2*b11*d(b41) + 1",
            "d(a11)*d(a22) - d(a12)*d(a21)",
            "-d(b41)*d(b41) + d(b11)*d(b21)",
            "-3/2",
            "x*d(y) - 1/2",
        ] {
            let op: DiffOperator = s.parse().unwrap();
            let again: DiffOperator = op.to_string().parse().unwrap();
            assert_eq!(op, again, "{s}");
        }
        let op: DiffOperator = "-d(b41)*d(b41) + d(b11)*d(b21)".parse().unwrap();
        assert_eq!(op.to_string(), "d(b11)*d(b21) - d(b41)*d(b41)");
        assert!(op.is_binomial());
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let op: DiffOperator = "x*d(y) + 2*x*d(y) - 3*x*d(y) + d(z)".parse().unwrap();
        assert_eq!(op.to_string(), "d(z)");
        let zero: DiffOperator = "d(z) - d(z)".parse().unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!("d(a1)*d(a2)*d(a3)".parse::<DiffOperator>().is_err());
        assert!("a*b*d(c)".parse::<DiffOperator>().is_err());
        assert!("2*x".parse::<DiffOperator>().is_err());
        assert!("d(1x)".parse::<DiffOperator>().is_err());
        assert!(parse_operators("").unwrap().is_empty());
        assert_eq!(serialize_operators(&[]), "");
    }
}
