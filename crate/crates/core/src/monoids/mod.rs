//! Polynomial multiplications on `A^n` and their monoid axioms.

mod from_action;
mod verify;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::catalog::FamilyDescriptor;
use crate::error::{Error, Result};
use crate::poly::{PolyMap, PolyRepr, Polynomial, Ring};
use crate::rational::{serde_rational, Rational};

pub use from_action::monoid_from_action;
pub use verify::{AxiomCheck, AxiomReport, Witness};

/// A multiplication `mu: A^n × A^n → A^n` given by `n` polynomials in
/// `x1..xn, y1..yn`, with optional unit, zero and family metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidStructure {
    dim: usize,
    mu: PolyMap,
    pub unit: Option<Vec<Rational>>,
    pub zero: Option<Vec<Rational>>,
    pub family: Option<FamilyDescriptor>,
}

impl MonoidStructure {
    pub fn new(components: Vec<Polynomial>) -> Result<MonoidStructure> {
        let dim = components.len();
        let ring = Ring::monoid(dim);
        let mu = PolyMap::new(&ring, components)?;
        Ok(MonoidStructure {
            dim,
            mu,
            unit: None,
            zero: None,
            family: None,
        })
    }

    /// Components in the text grammar over `x1..xn, y1..yn`.
    pub fn parse(components: &[&str]) -> Result<MonoidStructure> {
        let ring = Ring::monoid(components.len());
        MonoidStructure::new(
            components
                .iter()
                .map(|s| Polynomial::parse(&ring, s))
                .collect::<Result<_>>()?,
        )
    }

    pub fn with_unit(mut self, unit: Vec<Rational>) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn with_zero(mut self, zero: Vec<Rational>) -> Self {
        self.zero = Some(zero);
        self
    }

    pub fn with_family(mut self, family: FamilyDescriptor) -> Self {
        self.family = Some(family);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.mu.source()
    }

    pub fn mu(&self) -> &PolyMap {
        &self.mu
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        self.mu.component(i)
    }

    fn check_point(&self, p: &[Rational]) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: p.len(),
            });
        }
        Ok(())
    }

    /// `p * q`.
    pub fn multiply(&self, p: &[Rational], q: &[Rational]) -> Result<Vec<Rational>> {
        self.check_point(p)?;
        self.check_point(q)?;
        let point: Vec<Rational> = p.iter().chain(q).cloned().collect();
        self.mu.evaluate(&point)
    }

    /// `p^m` for `m >= 1` by repeated squaring. Assumes associativity.
    pub fn power(&self, p: &[Rational], m: u64) -> Result<Vec<Rational>> {
        if m == 0 {
            return Err(Error::Constraint("power exponent must be positive".into()));
        }
        self.check_point(p)?;
        let mut base = p.to_vec();
        let mut acc: Option<Vec<Rational>> = None;
        let mut e = m;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => self.multiply(&a, &base)?,
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = self.multiply(&base, &base)?;
        }
        Ok(acc.unwrap())
    }

    /// The linear map `y ↦ mu(p, y)` when `mu` is bilinear: entry `(k, j)` is
    /// the coefficient of `y_j` in `mu_k(p, y)`.
    pub(crate) fn left_multiplication(&self, p: &[Rational]) -> Result<crate::linalg::Matrix> {
        self.check_point(p)?;
        let n = self.dim;
        let ring = self.ring().clone();
        let assign: Vec<(usize, Polynomial)> = p
            .iter()
            .enumerate()
            .map(|(i, v)| (i, Polynomial::constant(&ring, v.clone())))
            .collect();
        let mut m = crate::linalg::Matrix::zeros(n, n);
        for k in 0..n {
            let row = self.mu.component(k).substitute_some(&assign)?;
            for (mono, c) in row.terms() {
                let e = mono.exps();
                let Some(j) = (n..2 * n).find(|&j| e[j] == 1) else {
                    return Err(Error::WrongFamily("multiplication is not bilinear".into()));
                };
                if mono.total_degree() != 1 {
                    return Err(Error::WrongFamily("multiplication is not bilinear".into()));
                }
                m[(k, j - n)] = c.clone();
            }
        }
        Ok(m)
    }

    pub fn to_json(&self) -> MonoidJson {
        MonoidJson {
            dim: self.dim,
            mu: self
                .mu
                .components()
                .iter()
                .map(|p| PolyRepr::Terms(p.to_terms_json()))
                .collect(),
            unit: self.unit.clone(),
            zero: self.zero.clone(),
            family: self.family.clone(),
        }
    }

    pub fn from_json(js: &MonoidJson) -> Result<MonoidStructure> {
        if js.mu.len() != js.dim {
            return Err(Error::DimensionMismatch {
                expected: js.dim,
                got: js.mu.len(),
            });
        }
        let ring = Ring::monoid(js.dim);
        let comps = js
            .mu
            .iter()
            .map(|r| r.to_poly(&ring))
            .collect::<Result<Vec<_>>>()?;
        let mut s = MonoidStructure::new(comps)?;
        for pt in js.unit.iter().chain(&js.zero) {
            s.check_point(pt)?;
        }
        s.unit = js.unit.clone();
        s.zero = js.zero.clone();
        s.family = js.family.clone();
        Ok(s)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("monoid serializes")
    }

    pub fn from_json_str(s: &str) -> Result<MonoidStructure> {
        let js: MonoidJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        MonoidStructure::from_json(&js)
    }
}

/// JSON descriptor `{dim, mu, unit, zero, family}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub dim: usize,
    pub mu: Vec<PolyRepr>,
    #[serde(default, with = "serde_rational::opt_vec")]
    pub unit: Option<Vec<Rational>>,
    #[serde(default, with = "serde_rational::opt_vec")]
    pub zero: Option<Vec<Rational>>,
    #[serde(default)]
    pub family: Option<FamilyDescriptor>,
}
