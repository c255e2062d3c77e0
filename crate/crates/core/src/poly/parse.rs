//! Text and JSON forms of polynomials.
//!
//! Text: terms joined by `+`/`-`, each term a `*`-joined product of an
//! optional integer or fraction coefficient and powers such as `x1^3` or
//! `y2`. Whitespace is ignored. Exponents may be negative (`t^-2`).
//!
//! JSON: a list of `{"coeff": "num/den", "exps": [..]}` objects.

use std::sync::Arc;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<i32>,
}

/// Either accepted input form of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyRepr {
    Text(String),
    Terms(Vec<TermJson>),
}

impl PolyRepr {
    pub fn to_poly(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        match self {
            PolyRepr::Text(s) => Polynomial::parse(ring, s),
            PolyRepr::Terms(ts) => Polynomial::from_terms_json(ring, ts),
        }
    }
}

impl Polynomial {
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Polynomial::zero(ring);
        for (neg, body) in split_terms(&s)? {
            let (m, mut c) = parse_term(ring, body)?;
            if neg {
                c = -c;
            }
            out = &out + &Polynomial::term(ring, m, c);
        }
        Ok(out)
    }

    pub fn from_terms_json(ring: &Arc<Ring>, terms: &[TermJson]) -> Result<Polynomial> {
        Polynomial::from_terms(
            ring,
            terms
                .iter()
                .map(|t| Ok((t.exps.clone(), parse_rational(&t.coeff)?)))
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

/// Splits at top-level `+`/`-`, leaving a `-` that follows `^` in place.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut start = 0;
    let mut neg = false;
    let mut i = 0;
    if matches!(bytes.first(), Some(b'+') | Some(b'-')) {
        neg = bytes[0] == b'-';
        start = 1;
        i = 1;
    }
    while i < bytes.len() {
        let b = bytes[i];
        if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
            out.push((neg, &s[start..i]));
            neg = b == b'-';
            start = i + 1;
        }
        i += 1;
    }
    out.push((neg, &s[start..]));
    if out.iter().any(|(_, t)| t.is_empty()) {
        return Err(Error::Parse(format!("empty term in `{s}`")));
    }
    Ok(out)
}

fn parse_term(ring: &Arc<Ring>, term: &str) -> Result<(Monomial, Rational)> {
    let mut exps = vec![0i32; ring.nvars()];
    let mut coeff = Rational::one();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in `{term}`")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            coeff *= parse_rational(factor)?;
            continue;
        }
        if !(first.is_ascii_alphabetic() || first == '_') {
            return Err(Error::Parse(format!("unexpected `{factor}`")));
        }
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::Parse(format!("bad variable `{name}`")));
        }
        let idx = ring
            .index_of(name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        exps[idx] += exp;
    }
    Ok((Monomial(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    #[test]
    fn parses_grammar() {
        let r = Ring::new(["x1", "x2", "t"]);
        let p = Polynomial::parse(&r, " 3 * x1^2 * x2 - 1/2*x2 + t^-1 - 4").unwrap();
        assert_eq!(p.coeff_of(&[2, 1, 0]), q(3));
        assert_eq!(p.coeff_of(&[0, 1, 0]), q_frac(-1, 2));
        assert_eq!(p.coeff_of(&[0, 0, -1]), q(1));
        assert_eq!(p.constant_term(), q(-4));
        assert_eq!(Polynomial::parse(&r, "-x1").unwrap().coeff_of(&[1, 0, 0]), q(-1));
    }

    #[test]
    fn rejects_garbage() {
        let r = Ring::new(["x1"]);
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "x1 + ").is_err());
        assert!(Polynomial::parse(&r, "z9").is_err());
        assert!(Polynomial::parse(&r, "x1^a").is_err());
        assert!(Polynomial::parse(&r, "x1**2").is_err());
    }

    #[test]
    fn json_forms() {
        let r = Ring::new(["x1", "x2"]);
        let p = Polynomial::parse(&r, "2/3*x1*x2 - x2^4").unwrap();
        let js = serde_json::to_string(&p.to_terms_json()).unwrap();
        let back: PolyRepr = serde_json::from_str(&js).unwrap();
        assert_eq!(back.to_poly(&r).unwrap(), p);
        let text: PolyRepr = serde_json::from_str("\"x1 + 1\"").unwrap();
        assert_eq!(text.to_poly(&r).unwrap(), Polynomial::parse(&r, "1+x1").unwrap());
    }
}
