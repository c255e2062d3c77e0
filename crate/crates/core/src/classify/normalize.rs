use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use super::actions::mono;
use crate::derivations::{Derivation, DerivationDegree, DerivationJson, Grading, PolyAutomorphism};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Ring};
use crate::rational::{format_rational, Rational};

/// Two derivations of `K[x1, x2, x3]` together with weights `(a, b, c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingPair {
    weights: [i64; 3],
    delta1: Derivation,
    delta2: Derivation,
}

/// File form of a pair; `weights` may instead come from the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<[i64; 3]>,
    pub delta1: DerivationJson,
    pub delta2: DerivationJson,
}

impl CommutingPair {
    pub fn new(weights: [i64; 3], delta1: Derivation, delta2: Derivation) -> Result<CommutingPair> {
        let [a, b, c] = weights;
        if !(0 < a && a <= b && b <= c) {
            return Err(Error::InvalidPair("weights must satisfy 0 < a <= b <= c".into()));
        }
        if a.gcd(&b).gcd(&c) != 1 {
            return Err(Error::InvalidPair("weights must have gcd 1".into()));
        }
        let ring = Ring::indexed("x", 3);
        for d in [&delta1, &delta2] {
            if **d.ring() != *ring || d.ngens() != 3 {
                return Err(Error::InvalidPair(format!(
                    "derivations must act on [{ring}] without coefficient variables"
                )));
            }
        }
        Ok(CommutingPair {
            weights,
            delta1,
            delta2,
        })
    }

    pub fn parse(weights: [i64; 3], delta1: &[&str], delta2: &[&str]) -> Result<CommutingPair> {
        let ring = Ring::indexed("x", 3);
        CommutingPair::new(
            weights,
            Derivation::parse(&ring, delta1)?,
            Derivation::parse(&ring, delta2)?,
        )
    }

    pub fn weights(&self) -> [i64; 3] {
        self.weights
    }

    pub fn grading(&self) -> Grading {
        Grading::z(&self.weights)
    }

    pub fn delta1(&self) -> &Derivation {
        &self.delta1
    }

    pub fn delta2(&self) -> &Derivation {
        &self.delta2
    }

    pub fn deltas(&self) -> [&Derivation; 2] {
        [&self.delta1, &self.delta2]
    }

    pub fn to_json(&self) -> PairJson {
        PairJson {
            weights: Some(self.weights),
            delta1: self.delta1.to_json(),
            delta2: self.delta2.to_json(),
        }
    }

    /// Reads a pair; `weights` overrides the file's weights when given.
    pub fn from_json(js: &PairJson, weights: Option<[i64; 3]>) -> Result<CommutingPair> {
        let w = weights
            .or(js.weights)
            .ok_or_else(|| Error::InvalidPair("no weights given".into()))?;
        CommutingPair::new(w, Derivation::from_json(&js.delta1)?, Derivation::from_json(&js.delta2)?)
    }

    /// `δ̃_i(x̃_j) = δ_i(forward_j)∘inverse`.
    pub fn conjugate(&self, forward: &PolyAutomorphism, inverse: &PolyAutomorphism) -> Result<CommutingPair> {
        CommutingPair::new(
            self.weights,
            self.delta1.conjugate(forward, inverse)?,
            self.delta2.conjugate(forward, inverse)?,
        )
    }
}

/// Which hypothesis of the normalization a pair satisfies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDiagnostics {
    pub degree_zero: bool,
    pub commuting: bool,
    pub locally_nilpotent: bool,
    /// Dimension of the common kernel on the span of `x1, x2, x3`.
    pub kernel_dim: usize,
}

impl PairDiagnostics {
    pub fn kernel_ok(&self) -> bool {
        self.kernel_dim <= 1
    }

    pub fn is_valid(&self) -> bool {
        self.degree_zero && self.commuting && self.locally_nilpotent && self.kernel_ok()
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.degree_zero {
            out.push("not homogeneous of degree 0".to_string());
        }
        if !self.commuting {
            out.push("derivations do not commute".to_string());
        }
        if !self.locally_nilpotent {
            out.push("not locally nilpotent".to_string());
        }
        if !self.kernel_ok() {
            out.push(format!("common kernel on the variables has dimension {}", self.kernel_dim));
        }
        out
    }
}

pub fn validate_pair(p: &CommutingPair) -> PairDiagnostics {
    let g = p.grading();
    let degree_zero = p.deltas().iter().all(|d| match d.degree(&g) {
        DerivationDegree::Zero => true,
        DerivationDegree::Degree(v) => v == [0],
        DerivationDegree::NotHomogeneous => false,
    });
    let commuting = p
        .delta1
        .commutator(&p.delta2)
        .map(|c| c.is_zero())
        .unwrap_or(false);
    let locally_nilpotent = degree_zero
        && p
            .deltas()
            .iter()
            .all(|d| d.is_locally_nilpotent(&g).unwrap_or(false));
    PairDiagnostics {
        degree_zero,
        commuting,
        locally_nilpotent,
        kernel_dim: 3 - linear_image_matrix(p).rank(),
    }
}

/// Rows indexed by `(i, monomial)`, column `j` the coefficient of that
/// monomial in `δ_i(x_j)`.
fn linear_image_matrix(p: &CommutingPair) -> Matrix {
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for d in p.deltas() {
        let mut monos: Vec<Vec<i32>> = d
            .images()
            .iter()
            .flat_map(|img| img.terms().map(|(m, _)| m.exps().to_vec()).collect::<Vec<_>>())
            .collect();
        monos.sort();
        monos.dedup();
        for m in monos {
            rows.push(d.images().iter().map(|img| img.coeff_of(&m)).collect());
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(1, 3);
    }
    Matrix::from_rows(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PairType {
    #[serde(rename = "1")]
    Type1,
    #[serde(rename = "2")]
    Type2,
}

impl PairType {
    pub fn number(self) -> u8 {
        match self {
            PairType::Type1 => 1,
            PairType::Type2 => 2,
        }
    }
}

/// A normal form together with the coordinate change producing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizationResult {
    pub kind: PairType,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub beta: [Rational; 2],
    pub gamma: [Rational; 2],
    /// New coordinates as polynomials in the old ones.
    pub forward: PolyAutomorphism,
    /// Old coordinates as polynomials in the new ones.
    pub inverse: PolyAutomorphism,
    pub normalized: CommutingPair,
}

impl NormalizationResult {
    pub fn to_json(&self) -> serde_json::Value {
        let strs = |v: &[Rational; 2]| v.iter().map(format_rational).collect::<Vec<_>>();
        let comps = |a: &PolyAutomorphism| a.components().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        let images = |d: &Derivation| d.images().iter().map(|p| p.to_string()).collect::<Vec<_>>();
        json!({
            "type": self.kind.number(),
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "e": self.e,
            "beta": strs(&self.beta),
            "gamma": strs(&self.gamma),
            "change_of_variables": comps(&self.forward),
            "inverse_change": comps(&self.inverse),
            "normalized": {
                "weights": self.normalized.weights,
                "delta1": images(&self.normalized.delta1),
                "delta2": images(&self.normalized.delta2),
            },
        })
    }
}

/// The normal form of a pair: `Type 1` when `δ_i(x3) = γ_i x1^c + β_i x1^e x2^d`,
/// `Type 2` when `δ_i(x3) = γ_i x1^c`; in both `δ_i(x2) = β_i x1^b`.
pub fn normal_form(kind: PairType, weights: [i64; 3], beta: &[Rational; 2], gamma: &[Rational; 2]) -> Result<CommutingPair> {
    let [_, b, c] = weights;
    let (d, e) = (c / b, c % b);
    let ring = Ring::indexed("x", 3);
    let make = |i: usize| -> Result<Derivation> {
        let mut third = mono(&ring, &[(0, c)]).scale(&gamma[i]);
        if kind == PairType::Type1 {
            third = &third + &mono(&ring, &[(0, e), (1, d)]).scale(&beta[i]);
        }
        Derivation::new(
            &ring,
            vec![Polynomial::zero(&ring), mono(&ring, &[(0, b)]).scale(&beta[i]), third],
        )
    };
    CommutingPair::new(weights, make(0)?, make(1)?)
}

fn linear_change(ring: &Arc<Ring>, m: &Matrix) -> Result<PolyAutomorphism> {
    let comps = (0..3)
        .map(|k| {
            (0..3).fold(Polynomial::zero(ring), |acc, j| {
                &acc + &Polynomial::var(ring, j).scale(&m[(k, j)])
            })
        })
        .collect();
    PolyAutomorphism::new(3, ring, comps)
}

/// Adapted basis of a flag `0 ⊂ V_1 ⊂ … ⊂ K^m` with `A_i V_k ⊂ V_{k-1}`.
fn flag_basis(mats: &[Matrix]) -> Result<Vec<Vec<Rational>>> {
    let m = mats[0].rows();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    while basis.len() < m {
        let p = if basis.is_empty() {
            Matrix::identity(m)
        } else {
            Matrix::from_rows(Matrix::from_rows(basis.clone()).kernel())
        };
        let mut stacked = p.mul(&mats[0]);
        for a in &mats[1..] {
            stacked = stacked.stack(&p.mul(a));
        }
        let before = basis.len();
        for v in stacked.kernel() {
            let mut trial = basis.clone();
            trial.push(v.clone());
            if Matrix::from_rows(trial).rank() > basis.len() {
                basis.push(v);
            }
        }
        if basis.len() == before {
            return Err(Error::Internal("induced linear maps are not nilpotent".into()));
        }
    }
    Ok(basis)
}

/// Step 1: a linear change inside each equal-weight block making the induced
/// maps strictly triangular.
fn triangularize(p: &CommutingPair) -> Result<Matrix> {
    let w = p.weights;
    let mut f = Matrix::zeros(3, 3);
    let mut start = 0;
    while start < 3 {
        let mut end = start + 1;
        while end < 3 && w[end] == w[start] {
            end += 1;
        }
        let idx: Vec<usize> = (start..end).collect();
        let unit = |i: usize| {
            let mut e = vec![0i32; 3];
            e[i] = 1;
            e
        };
        let mats: Vec<Matrix> = p
            .deltas()
            .iter()
            .map(|d| {
                Matrix::from_rows(
                    idx.iter()
                        .map(|&r| idx.iter().map(|&s| d.image(s).coeff_of(&unit(r))).collect())
                        .collect(),
                )
            })
            .collect();
        for (k, v) in flag_basis(&mats)?.into_iter().enumerate() {
            for (j, x) in v.into_iter().enumerate() {
                f[(idx[k], idx[j])] = x;
            }
        }
        start = end;
    }
    Ok(f)
}

fn violated(msg: impl Into<String>) -> Error {
    Error::KernelConditionViolated(msg.into())
}

/// Brings a valid pair to Type 1 or Type 2 by a homogeneous change of
/// coordinates.
pub fn normalize_pair(p: &CommutingPair) -> Result<NormalizationResult> {
    let diag = validate_pair(p);
    if !diag.is_valid() {
        return Err(Error::InvalidPair(diag.failures().join("; ")));
    }
    let [a, b, c] = p.weights;
    let ring = Ring::indexed("x", 3);

    // Step 1
    let f = triangularize(p)?;
    let g = f
        .inverse()
        .ok_or_else(|| Error::Internal("flag basis is singular".into()))?;
    let fwd1 = linear_change(&ring, &f)?;
    let inv1 = linear_change(&ring, &g)?;
    let step1 = p.conjugate(&fwd1, &inv1)?;

    if a != 1 {
        return Err(violated(format!("lowest weight is {a}, not 1")));
    }
    let (d, e) = (c / b, c % b);
    let mut beta: [Rational; 2] = [Rational::zero(), Rational::zero()];
    let mut xi: [Vec<Rational>; 2] = [Vec::new(), Vec::new()];
    for (i, delta) in step1.deltas().into_iter().enumerate() {
        if !delta.image(0).is_zero() {
            return Err(violated("x1 is not in the common kernel"));
        }
        let x1b = mono(&ring, &[(0, b)]);
        let img2 = delta.image(1);
        beta[i] = img2.coeff_of(&vec![b as i32, 0, 0]);
        if *img2 != x1b.scale(&beta[i]) {
            return Err(violated(format!("image of x2 is not a multiple of x1^{b}")));
        }
        let img3 = delta.image(2);
        let mut rest = img3.clone();
        for l in 0..=d {
            let m = mono(&ring, &[(0, c - b * l), (1, l)]);
            let coeff = img3.coeff_of(&vec![(c - b * l) as i32, l as i32, 0]);
            rest = &rest - &m.scale(&coeff);
            xi[i].push(coeff);
        }
        if !rest.is_zero() {
            return Err(violated("image of x3 leaves the span of x1^(c-bl) x2^l"));
        }
    }

    // Step 2
    let istar = (0..2)
        .find(|&i| !beta[i].is_zero())
        .ok_or_else(|| violated("x1 and x2 both lie in the common kernel"))?;
    let common: Vec<Rational> = (0..=d as usize)
        .map(|l| if l == 0 { Rational::zero() } else { &xi[istar][l] / &beta[istar] })
        .collect();
    for i in 0..2 {
        for l in 1..=d as usize {
            if xi[i][l] != &beta[i] * &common[l] {
                return Err(Error::Internal(format!(
                    "no common polynomial P: coefficient {l} of derivation {}",
                    i + 1
                )));
            }
        }
    }
    let gamma0 = [xi[0][0].clone(), xi[1][0].clone()];

    // Step 3
    let xi_d = &common[d as usize];
    let (kind, alpha) = if xi_d.is_zero() {
        (PairType::Type2, Rational::one())
    } else {
        (PairType::Type1, xi_d.recip())
    };
    let mut shift = Polynomial::zero(&ring);
    for l in 1..d {
        let coeff = &common[l as usize] / Rational::from_integer((l + 1).into());
        shift = &shift + &mono(&ring, &[(0, c - b * (l + 1)), (1, l + 1)]).scale(&coeff);
    }
    let x = |i| Polynomial::var(&ring, i);
    let fwd3 = PolyAutomorphism::new(3, &ring, vec![x(0), x(1), (&x(2) - &shift).scale(&alpha)])?;
    let inv3 = PolyAutomorphism::new(3, &ring, vec![x(0), x(1), &x(2).scale(&alpha.recip()) + &shift])?;
    let forward = fwd3.compose(&fwd1)?;
    let inverse = inv1.compose(&inv3)?;
    let gamma = [&gamma0[0] * &alpha, &gamma0[1] * &alpha];

    let normalized = p.conjugate(&forward, &inverse)?;
    let expected = normal_form(kind, p.weights, &beta, &gamma)?;
    if normalized != expected {
        return Err(Error::Internal("conjugated pair is not in normal form".into()));
    }
    Ok(NormalizationResult {
        kind,
        b,
        c,
        d,
        e,
        beta,
        gamma,
        forward,
        inverse,
        normalized,
    })
}
