use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{Grading, PolyAutomorphism, PolyDegree};
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyRepr, Polynomial, Ring};
use crate::rational::{factorial, Rational};

/// A derivation of `K[x_1..x_n]`, given by the images of the generators.
///
/// The ambient ring may carry extra variables past the first `n`; these are
/// constants for the derivation (`δ(a) = 0`), which lets coefficients be
/// formal parameters as in `α₁δ₁ + α₂δ₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    ring: Arc<Ring>,
    images: Vec<Polynomial>,
}

/// Degree of a derivation under a grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationDegree {
    /// The zero derivation is homogeneous of every degree.
    Zero,
    Degree(Vec<i64>),
    NotHomogeneous,
}

impl Derivation {
    pub fn new(ring: &Arc<Ring>, images: Vec<Polynomial>) -> Result<Derivation> {
        if images.len() > ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: images.len(),
            });
        }
        for p in &images {
            if **p.ring() != **ring {
                return Err(Error::AmbientMismatch {
                    left: ring.to_string(),
                    right: p.ring().to_string(),
                });
            }
        }
        Ok(Derivation {
            ring: ring.clone(),
            images,
        })
    }

    pub fn parse(ring: &Arc<Ring>, images: &[&str]) -> Result<Derivation> {
        let imgs = images
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(ring, imgs)
    }

    pub fn zero(ring: &Arc<Ring>, n: usize) -> Derivation {
        Derivation {
            ring: ring.clone(),
            images: vec![Polynomial::zero(ring); n],
        }
    }

    /// `g · ∂/∂x_i`.
    pub fn partial_times(ring: &Arc<Ring>, n: usize, i: usize, g: Polynomial) -> Derivation {
        let mut d = Derivation::zero(ring, n);
        d.images[i] = g;
        d
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Number of generators the derivation acts on.
    pub fn ngens(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Polynomial {
        &self.images[i]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Polynomial::is_zero)
    }

    fn check_same(&self, other: &Derivation) -> Result<()> {
        if *self.ring != *other.ring || self.ngens() != other.ngens() {
            return Err(Error::AmbientMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    /// Leibniz extension: `δ(f) = Σ ∂f/∂x_i · δ(x_i)`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if **f.ring() != *self.ring {
            return Err(Error::AmbientMismatch {
                left: self.ring.to_string(),
                right: f.ring().to_string(),
            });
        }
        let mut out = Polynomial::zero(&self.ring);
        for (i, img) in self.images.iter().enumerate() {
            if img.is_zero() || !f.involves(i) {
                continue;
            }
            out = &out + &(&f.partial(i) * img);
        }
        Ok(out)
    }

    pub fn apply_n(&self, f: &Polynomial, k: usize) -> Result<Polynomial> {
        let mut g = f.clone();
        for _ in 0..k {
            if g.is_zero() {
                break;
            }
            g = self.apply(&g)?;
        }
        Ok(g)
    }

    pub fn try_add(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        Ok(Derivation {
            ring: self.ring.clone(),
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// `c · δ` for a coefficient `c` (a constant or a polynomial in the
    /// coefficient variables).
    pub fn scale(&self, c: &Polynomial) -> Result<Derivation> {
        Ok(Derivation {
            ring: self.ring.clone(),
            images: self
                .images
                .iter()
                .map(|p| p.try_mul(c))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// The same derivation in a larger ring (matched by variable name).
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<Derivation> {
        for i in 0..self.ngens() {
            if ring.name(i) != self.ring.name(i) {
                return Err(Error::AmbientMismatch {
                    left: self.ring.to_string(),
                    right: ring.to_string(),
                });
            }
        }
        Ok(Derivation {
            ring: ring.clone(),
            images: self
                .images
                .iter()
                .map(|p| p.rename_by_name(ring))
                .collect::<Result<Vec<_>>>()?,
        })
    }

    /// `[δ₁, δ₂] = δ₁∘δ₂ − δ₂∘δ₁`, given on generators.
    pub fn commutator(&self, other: &Derivation) -> Result<Derivation> {
        self.check_same(other)?;
        let images = (0..self.ngens())
            .map(|i| {
                let a = self.apply(other.image(i))?;
                let b = other.apply(self.image(i))?;
                Ok(&a - &b)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Derivation {
            ring: self.ring.clone(),
            images,
        })
    }

    pub fn degree(&self, grading: &Grading) -> DerivationDegree {
        assert_eq!(grading.nvars(), self.ngens(), "grading size");
        let mut found: Option<Vec<i64>> = None;
        for (i, img) in self.images.iter().enumerate() {
            let d = match grading.degree(img) {
                PolyDegree::Zero => continue,
                PolyDegree::Mixed => return DerivationDegree::NotHomogeneous,
                PolyDegree::Homogeneous(d) => d,
            };
            let shift: Vec<i64> = d
                .iter()
                .zip(grading.var_degree(i))
                .map(|(a, b)| a - b)
                .collect();
            match &found {
                None => found = Some(shift),
                Some(f) if *f != shift => return DerivationDegree::NotHomogeneous,
                _ => {}
            }
        }
        found.map_or(DerivationDegree::Zero, DerivationDegree::Degree)
    }

    /// The finite-dimensional δ-invariant space used to decide nilpotency on
    /// `x_i`, or `None` when local nilpotency is automatic (strictly negative
    /// coarsened degree).
    fn invariant_space(&self, grading: &Grading, i: usize) -> Result<Option<Vec<Monomial>>> {
        if !grading.is_positive() {
            return Err(Error::UndecidedRegime("grading is not positive".into()));
        }
        let nv = self.ring.nvars();
        match self.degree(grading) {
            DerivationDegree::Zero => Ok(Some(Vec::new())),
            DerivationDegree::NotHomogeneous => {
                Err(Error::UndecidedRegime("derivation is not homogeneous".into()))
            }
            DerivationDegree::Degree(d) => {
                let level: i64 = d.iter().sum();
                if d.iter().all(|&x| x == 0) {
                    Ok(Some(grading.component_basis(&grading.var_degree(i), nv)))
                } else if level == 0 {
                    Ok(Some(grading.level_basis(grading.level(i), nv)))
                } else if level < 0 {
                    Ok(None)
                } else {
                    Err(Error::UndecidedRegime(
                        "derivation has positive degree".into(),
                    ))
                }
            }
        }
    }

    /// Decides local nilpotency for a homogeneous derivation of degree zero
    /// (or coarsened degree zero) under a positive grading by testing the
    /// induced linear map on each generator's component for nilpotency;
    /// strictly negative degree is locally nilpotent by degree descent.
    pub fn is_locally_nilpotent(&self, grading: &Grading) -> Result<bool> {
        for i in 0..self.ngens() {
            let Some(basis) = self.invariant_space(grading, i)? else {
                continue;
            };
            if basis.is_empty() {
                continue;
            }
            let m = self.restricted_matrix(grading, &basis)?;
            if !poly_matrix_pow_is_zero(&m, basis.len()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix of δ on the span of `basis`; entries are polynomials in the
    /// coefficient variables. Column `j` holds `δ(basis[j])`.
    fn restricted_matrix(&self, grading: &Grading, basis: &[Monomial]) -> Result<Vec<Vec<Polynomial>>> {
        let n = self.ngens();
        let gens: Vec<usize> = (0..n).collect();
        let dim = basis.len();
        let zero = Polynomial::zero(&self.ring);
        let mut m = vec![vec![zero; dim]; dim];
        for (j, b) in basis.iter().enumerate() {
            let img = self.apply(&Polynomial::term(&self.ring, b.clone(), Rational::from_integer(1.into())))?;
            for (key, coeff) in img.coefficients_in(&gens) {
                let row = basis
                    .iter()
                    .position(|bm| bm.exps()[..n] == key[..])
                    .ok_or_else(|| {
                        Error::Internal(format!(
                            "image leaves the graded component (grading rank {})",
                            grading.rank()
                        ))
                    })?;
                m[row][j] = coeff;
            }
        }
        Ok(m)
    }

    /// Iteration budget for the exponential series on `x_i`.
    fn series_budget(&self, grading: &Grading, i: usize) -> Result<usize> {
        if let Some(basis) = self.invariant_space(grading, i)? {
            return Ok(basis.len() + 1);
        }
        let DerivationDegree::Degree(d) = self.degree(grading) else {
            unreachable!("negative-degree branch implies homogeneous");
        };
        let drop: i64 = -d.iter().sum::<i64>();
        Ok((grading.level(i) / drop) as usize + 2)
    }

    /// `exp(δ)`: `x_i ↦ Σ_k δ^k(x_i)/k!`. Coefficient variables of the ring
    /// become the parameters of the returned automorphism family.
    pub fn exp_map(&self, grading: &Grading) -> Result<PolyAutomorphism> {
        if !self.is_locally_nilpotent(grading)? {
            return Err(Error::NotLocallyNilpotent(
                "nilpotency test failed on a generator component".into(),
            ));
        }
        let n = self.ngens();
        let mut comps = Vec::with_capacity(n);
        for i in 0..n {
            let budget = self.series_budget(grading, i)?;
            let mut term = Polynomial::var(&self.ring, i);
            let mut sum = term.clone();
            let mut k = 0u32;
            loop {
                term = self.apply(&term)?;
                k += 1;
                if term.is_zero() {
                    break;
                }
                if k as usize > budget {
                    return Err(Error::ExpDidNotTerminate(budget));
                }
                let inv = Rational::new(1.into(), factorial(k));
                sum = &sum + &term.scale(&inv);
            }
            comps.push(sum);
        }
        PolyAutomorphism::new(n, &self.ring, comps)
    }

    /// `exp(α δ)` with `α` a fresh formal parameter named `param`.
    pub fn exp_action(&self, param: &str, grading: &Grading) -> Result<PolyAutomorphism> {
        if self.ring.index_of(param).is_some() {
            return Err(Error::ParameterClash(param.to_string()));
        }
        let ring = self.ring.extended(&[param]);
        let alpha = Polynomial::var(&ring, ring.nvars() - 1);
        self.embed(&ring)?.scale(&alpha)?.exp_map(grading)
    }

    /// Conjugate by a change of coordinates: with `forward` giving the new
    /// coordinates as polynomials in the old ones and `inverse` the old in
    /// terms of the new, returns `δ̃` with `δ̃(x̃_j) = δ(forward_j)∘inverse`.
    pub fn conjugate(&self, forward: &PolyAutomorphism, inverse: &PolyAutomorphism) -> Result<Derivation> {
        let n = self.ngens();
        if forward.dim() != n || inverse.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: forward.dim(),
            });
        }
        let images = forward
            .components()
            .iter()
            .map(|phi| {
                let img = self.apply(&phi.rename_by_name(&self.ring)?)?;
                inverse.pull_back(&img)
            })
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&self.ring, images)
    }

    pub fn to_json(&self) -> DerivationJson {
        DerivationJson {
            vars: self.ngens(),
            coeffs: self.ring.names()[self.ngens()..].to_vec(),
            images: self
                .images
                .iter()
                .map(|p| PolyRepr::Terms(p.to_terms_json()))
                .collect(),
        }
    }

    pub fn from_json(js: &DerivationJson) -> Result<Derivation> {
        let ring = Ring::indexed("x", js.vars).extended(&js.coeffs);
        if js.images.len() != js.vars {
            return Err(Error::DimensionMismatch {
                expected: js.vars,
                got: js.images.len(),
            });
        }
        let images = js
            .images
            .iter()
            .map(|r| r.to_poly(&ring))
            .collect::<Result<Vec<_>>>()?;
        Derivation::new(&ring, images)
    }
}

/// JSON form `{vars: n, images: [poly, …]}`; `coeffs` names optional
/// coefficient variables appended after `x1..xn`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub vars: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coeffs: Vec<String>,
    pub images: Vec<PolyRepr>,
}

fn poly_matrix_mul(a: &[Vec<Polynomial>], b: &[Vec<Polynomial>]) -> Vec<Vec<Polynomial>> {
    let n = a.len();
    let zero = a[0][0].clone().scale(&Rational::zero());
    let mut out = vec![vec![zero; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// `M^k == 0` for a square matrix of polynomials.
fn poly_matrix_pow_is_zero(m: &[Vec<Polynomial>], k: usize) -> bool {
    let mut acc = m.to_vec();
    for _ in 1..k {
        if acc.iter().flatten().all(Polynomial::is_zero) {
            return true;
        }
        acc = poly_matrix_mul(&acc, m);
    }
    acc.iter().flatten().all(Polynomial::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn r3() -> Arc<Ring> {
        Ring::indexed("x", 3)
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&r3(), s).unwrap()
    }

    #[test]
    fn apply_examples() {
        let d = Derivation::parse(&r3(), &["0", "x1", "0"]).unwrap();
        assert_eq!(d.apply(&p("x2^2")).unwrap(), p("2*x1*x2"));
        assert!(d.apply(&p("5")).unwrap().is_zero());
        // Type 1 with b = 1, c = 2 (d = 2, e = 0), β = 3, γ = -1
        let t1 = Derivation::parse(&r3(), &["0", "3*x1", "-x1^2 + 3*x2^2"]).unwrap();
        assert_eq!(t1.apply(&p("x3")).unwrap(), p("-x1^2 + 3*x2^2"));
    }

    #[test]
    fn degree_examples() {
        let b = 3;
        let d = Derivation::parse(&r3(), &["0", &format!("x1^{b}"), "0"]).unwrap();
        assert_eq!(d.degree(&Grading::z(&[1, b, 5])), DerivationDegree::Degree(vec![0]));
        let r2 = Ring::indexed("x", 2);
        let e = Derivation::parse(&r2, &["x2", "0"]).unwrap();
        assert_eq!(e.degree(&Grading::z(&[1, 2])), DerivationDegree::Degree(vec![1]));
        let f = Derivation::parse(&r2, &["x1 + x2^2", "0"]).unwrap();
        assert_eq!(f.degree(&Grading::z(&[1, 1])), DerivationDegree::NotHomogeneous);
        assert_eq!(Derivation::zero(&r2, 2).degree(&Grading::z(&[1, 1])), DerivationDegree::Zero);
    }

    #[test]
    fn lnd_examples() {
        let g = Grading::z(&[1, 2, 5]);
        let root = Derivation::parse(&r3(), &["0", "x1^2", "0"]).unwrap();
        assert!(root.is_locally_nilpotent(&g).unwrap());
        let euler = Derivation::parse(&r3(), &["0", "x2", "0"]).unwrap();
        assert!(!euler.is_locally_nilpotent(&g).unwrap());
        let neg = Derivation::parse(&r3(), &["0", "0", "x2"]).unwrap();
        assert!(neg.is_locally_nilpotent(&g).unwrap());
        let pos = Derivation::parse(&r3(), &["x2", "0", "0"]).unwrap();
        assert!(matches!(pos.is_locally_nilpotent(&g), Err(Error::UndecidedRegime(_))));
        let mixed = Derivation::parse(&r3(), &["0", "x1 + x1^2", "0"]).unwrap();
        assert!(matches!(mixed.is_locally_nilpotent(&g), Err(Error::UndecidedRegime(_))));
        assert!(matches!(
            root.is_locally_nilpotent(&Grading::z(&[1, 0, 1])),
            Err(Error::UndecidedRegime(_))
        ));
    }

    #[test]
    fn commutator_examples() {
        let d1 = Derivation::parse(&r3(), &["0", "x1", "0"]).unwrap();
        let d2 = Derivation::parse(&r3(), &["0", "0", "x2"]).unwrap();
        let c = d1.commutator(&d2).unwrap();
        assert_eq!(c, Derivation::parse(&r3(), &["0", "0", "x1"]).unwrap());
        assert!(d1.commutator(&d1).unwrap().is_zero());
    }

    #[test]
    fn exp_examples() {
        let b = 2;
        let g = Grading::z(&[1, b, 3]);
        let d = Derivation::parse(&r3(), &["0", "x1^2", "0"]).unwrap();
        let phi = d.exp_action("a", &g).unwrap();
        let ring = phi.ring().clone();
        let want = ["x1", "x2 + a*x1^2", "x3"]
            .map(|s| Polynomial::parse(&ring, s).unwrap());
        assert_eq!(phi.components(), &want);
        let zero = Derivation::zero(&r3(), 3).exp_action("a", &g).unwrap();
        assert!(zero.is_identity());
        let bad = Derivation::parse(&r3(), &["0", "x2", "0"]).unwrap();
        assert!(matches!(bad.exp_action("a", &g), Err(Error::NotLocallyNilpotent(_))));
    }

    #[test]
    fn exp_series_has_factorials() {
        // δ = x1 ∂/∂x2 + x2 ∂/∂x3 on weights (1,1,1): x3 ↦ x3 + a x2 + a² x1 / 2
        let g = Grading::z(&[1, 1, 1]);
        let d = Derivation::parse(&r3(), &["0", "x1", "x2"]).unwrap();
        let phi = d.exp_action("a", &g).unwrap();
        let want = Polynomial::parse(phi.ring(), "x3 + a*x2 + 1/2*a^2*x1").unwrap();
        assert_eq!(phi.component(2), &want);
        assert_eq!(want.coeff_of(&[1, 0, 0, 2]), crate::rational::q_frac(1, 2));
        let _ = q(0);
    }

    #[test]
    fn json_round_trip() {
        let d = Derivation::parse(&r3(), &["0", "x1", "2/3*x1*x2"]).unwrap();
        let js = serde_json::to_string(&d.to_json()).unwrap();
        let back: DerivationJson = serde_json::from_str(&js).unwrap();
        assert_eq!(Derivation::from_json(&back).unwrap(), d);
    }
}
