//! Exact multivariate (Laurent) polynomials over the rationals.
//!
//! A [`Polynomial`] is a sparse map from [`Monomial`] to non-zero
//! [`Rational`] coefficients together with the [`Ring`] it lives in. The term
//! map is canonical, so structural equality is polynomial equality.
//!
//! Arithmetic operators on references panic on an ambient mismatch; the
//! `try_*` methods report it as [`Error::AmbientMismatch`] instead.

mod map;
mod monomial;
mod parse;
mod ring;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

pub use map::PolyMap;
pub use monomial::Monomial;
pub use parse::{PolyRepr, TermJson};
pub use ring::Ring;

use crate::error::{Error, Result};
use crate::rational::{format_rational, q, rational_pow, Rational};

#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    /// The generator `x_i`.
    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::var_pow(ring, i, 1)
    }

    /// `x_i^e`; negative `e` gives the adjoined inverse.
    pub fn var_pow(ring: &Arc<Ring>, i: usize, e: i32) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i, e), Rational::one())
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, collecting
    /// like terms.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Vec<i32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(ring);
        for (exps, c) in terms {
            if exps.len() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    got: exps.len(),
                });
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    /// Monomial with coefficient one.
    pub fn monomial(ring: &Arc<Ring>, exps: &[i32]) -> Self {
        Self::term(ring, Monomial(exps.to_vec()), Rational::one())
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn same_ring(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// True when no variable occurs with a negative exponent.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(Monomial::is_polynomial)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeff_of(&self, exps: &[i32]) -> Rational {
        self.coeff(&Monomial(exps.to_vec()))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Largest monomial in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Highest exponent of `x_i` occurring.
    pub fn degree_in(&self, i: usize) -> i32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Whether `x_i` occurs at all.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] != 0)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a single-term polynomial.
    pub fn monomial_inverse(&self) -> Option<Polynomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Polynomial::term(&self.ring, m.inverse(), c.recip()))
    }

    /// Integer power including negative exponents (which require a
    /// single-term base).
    pub fn pow_i(&self, e: i32) -> Option<Polynomial> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            self.monomial_inverse().map(|inv| inv.pow(e.unsigned_abs()))
        }
    }

    /// Formal partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut exps = m.0.clone();
                exps[i] -= 1;
                out.add_term(Monomial(exps), c * q(e as i64));
            }
        }
        out
    }

    /// Exact value at `point`.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: point.len(),
            });
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e != 0 {
                    v *= rational_pow(x, e)?;
                }
            }
            sum += v;
        }
        Ok(sum)
    }

    /// Substitutes `images[i]` for `x_i`. All images live in `target`; a
    /// variable that occurs in `self` without an image is an error.
    pub fn substitute(
        &self,
        target: &Arc<Ring>,
        images: &[Option<Polynomial>],
    ) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        for img in images.iter().flatten() {
            if !(Arc::ptr_eq(img.ring(), target) || **img.ring() == **target) {
                return Err(Error::AmbientMismatch {
                    left: target.to_string(),
                    right: img.ring().to_string(),
                });
            }
        }
        let mut cache: HashMap<(usize, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = images[i]
                    .as_ref()
                    .ok_or_else(|| Error::MissingImage(self.ring.name(i).to_string()))?;
                let power = match cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = img.pow_i(e).ok_or_else(|| {
                            Error::NonMonomialInverse(self.ring.name(i).to_string())
                        })?;
                        cache.insert((i, e), p.clone());
                        p
                    }
                };
                t = &t * &power;
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Substitution with every variable mapped.
    pub fn compose(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Result<Polynomial> {
        let images: Vec<Option<Polynomial>> = images.iter().cloned().map(Some).collect();
        self.substitute(target, &images)
    }

    /// Substitutes some variables, keeping the others, within the same ring.
    pub fn substitute_some(&self, assignment: &[(usize, Polynomial)]) -> Result<Polynomial> {
        let mut images: Vec<Option<Polynomial>> = (0..self.nvars())
            .map(|i| Some(Polynomial::var(&self.ring, i)))
            .collect();
        for (i, p) in assignment {
            images[*i] = Some(p.clone());
        }
        self.substitute(&self.ring.clone(), &images)
    }

    /// Moves variable `i` to variable `map[i]` of `target`.
    pub fn rename(&self, target: &Arc<Ring>, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars());
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.nvars()];
            for (i, &e) in m.0.iter().enumerate() {
                exps[map[i]] += e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial in a ring whose variables are found by
    /// name; fails if a used variable is absent from `target`.
    pub fn rename_by_name(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.nvars());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(j),
                None if !self.involves(i) => map.push(usize::MAX),
                None => return Err(Error::MissingImage(name.clone())),
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0; target.nvars()];
            for (i, &e) in m.0.iter().enumerate() {
                if e != 0 {
                    exps[map[i]] += e;
                }
            }
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / divisor`; a non-zero remainder is an error.
    pub fn divide_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if !self.is_polynomial() || !divisor.is_polynomial() {
            return Err(Error::Constraint(
                "exact division needs polynomial operands".into(),
            ));
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term() {
            let Some(qm) = m.div(&lm) else {
                return Err(Error::NonExactDivision);
            };
            let qc = c / &lc;
            let t = Polynomial::term(&self.ring, qm, qc);
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Coefficients of `self` viewed as a polynomial in the variables `vars`
    /// with coefficients in the remaining ones. Keys are the exponents of
    /// `vars`.
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Vec<i32>, Polynomial> {
        let mut out: BTreeMap<Vec<i32>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key: Vec<i32> = vars.iter().map(|&i| m.0[i]).collect();
            let mut rest = m.0.clone();
            for &i in vars {
                rest[i] = 0;
            }
            out.entry(key)
                .or_insert_with(|| Polynomial::zero(&self.ring))
                .add_term(Monomial(rest), c.clone());
        }
        out
    }

    /// Canonical JSON term list.
    pub fn to_terms_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermJson {
                coeff: format_rational(c),
                exps: m.0.clone(),
            })
            .collect()
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial add")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial sub")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial mul")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q_frac;

    fn r2() -> Arc<Ring> {
        Ring::monoid(2)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&r2(), s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&p("x1") + &p("-x1")).is_zero());
        assert_eq!(&p("x1 + x2") + &p("x2"), p("x1 + 2*x2"));
        assert_eq!(&p("2*x2*y2") + &Polynomial::zero(&r2()), p("2*x2*y2"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p("x1") * &p("x1"), p("x1^2"));
        assert_eq!(&p("x1+y1") * &p("x1-y1"), p("x1^2 - y1^2"));
        let s = p("x1*y2 + y1*x2");
        assert_eq!(s.pow(2), p("x1^2*y2^2 + 2*x1*y1*x2*y2 + y1^2*x2^2"));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let other = Polynomial::var(&Ring::indexed("x", 2), 0);
        assert!(matches!(
            p("x1").try_add(&other),
            Err(Error::AmbientMismatch { .. })
        ));
        assert!(p("x1").try_mul(&other).is_err());
    }

    #[test]
    fn substitute_examples() {
        // x2 -> x2 + a*x1^b with b = 3 and formal parameter a
        let ring = Ring::new(["x1", "x2", "a"]);
        let x2sq = Polynomial::parse(&ring, "x2^2").unwrap();
        let img = Polynomial::parse(&ring, "x2 + a*x1^3").unwrap();
        let got = x2sq.substitute_some(&[(1, img)]).unwrap();
        assert_eq!(
            got,
            Polynomial::parse(&ring, "x2^2 + 2*a*x1^3*x2 + a^2*x1^6").unwrap()
        );
        let f = p("x1^2*y2 - 3/2*x2");
        assert_eq!(f.substitute_some(&[]).unwrap(), f);
    }

    #[test]
    fn substitute_missing_image() {
        let f = p("x1 + x2");
        let ring = Ring::indexed("t", 1);
        let imgs = vec![Some(Polynomial::var(&ring, 0)), None, None, None];
        assert_eq!(
            f.substitute(&ring, &imgs),
            Err(Error::MissingImage("x2".into()))
        );
    }

    #[test]
    fn evaluate_examples() {
        let ring = Ring::indexed("x", 2);
        let f = Polynomial::parse(&ring, "x1*x2").unwrap();
        assert_eq!(f.evaluate(&[q(2), q(3)]).unwrap(), q(6));
        assert_eq!(Polynomial::zero(&ring).evaluate(&[q(5), q_frac(1, 3)]).unwrap(), q(0));
        assert!(f.evaluate(&[q(1)]).is_err());
    }

    #[test]
    fn divide_examples() {
        assert_eq!(p("x1^2*y1").divide_exact(&p("x1")).unwrap(), p("x1*y1"));
        assert_eq!(
            p("x1+x2").divide_exact(&p("x1")),
            Err(Error::NonExactDivision)
        );
        // (x1*y2 + y1*x2)^2 - (x1*y2)^2 - (y1*x2)^2 over x1*y1
        let num = &(&p("x1*y2 + y1*x2").pow(2) - &p("x1*y2").pow(2)) - &p("y1*x2").pow(2);
        assert_eq!(num.divide_exact(&p("x1*y1")).unwrap(), p("2*x2*y2"));
        assert_eq!(p("x1").divide_exact(&Polynomial::zero(&r2())), Err(Error::DivisionByZero));
    }

    #[test]
    fn laurent_substitution_clears() {
        // t -> y1, a -> y1^-1*y2 in t*(x2 + a*x1)
        let src = Ring::new(["x1", "x2", "t", "a"]);
        let f = Polynomial::parse(&src, "t*x2 + t*a*x1").unwrap();
        let tgt = r2();
        let imgs = vec![
            Polynomial::var(&tgt, 0),
            Polynomial::var(&tgt, 1),
            Polynomial::var(&tgt, 2),
            Polynomial::parse(&tgt, "y1^-1*y2").unwrap(),
        ];
        let g = f.compose(&tgt, &imgs).unwrap();
        assert_eq!(g, p("y1*x2 + x1*y2"));
        assert!(g.is_polynomial());
    }

    #[test]
    fn display_round_trip() {
        let f = p("-1/2*x1^3*y2 + x2 - 7");
        assert_eq!(Polynomial::parse(&r2(), &f.to_string()).unwrap(), f);
        assert_eq!(Polynomial::zero(&r2()).to_string(), "0");
    }
}
