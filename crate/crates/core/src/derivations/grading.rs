use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, Polynomial};

/// A `Z^r`-grading making the first `n` variables homogeneous.
///
/// `weights[i]` is the degree of `x_i` (a vector of length `r`). Variables of
/// the ambient ring past the `n` graded ones are treated as coefficients of
/// degree zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    pub weights: Vec<Vec<i64>>,
}

/// Homogeneity verdict for a single polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyDegree {
    Zero,
    Homogeneous(Vec<i64>),
    Mixed,
}

impl Grading {
    /// `Z`-grading with the given positive or negative weights.
    pub fn z(weights: &[i64]) -> Grading {
        Grading {
            weights: weights.iter().map(|&w| vec![w]).collect(),
        }
    }

    pub fn from_matrix(weights: Vec<Vec<i64>>) -> Grading {
        let r = weights.first().map_or(0, Vec::len);
        assert!(weights.iter().all(|w| w.len() == r), "ragged weight matrix");
        Grading { weights }
    }

    /// The trivial grading of rank 0 on `n` variables.
    pub fn trivial(n: usize) -> Grading {
        Grading {
            weights: vec![Vec::new(); n],
        }
    }

    pub fn rank(&self) -> usize {
        self.weights.first().map_or(0, Vec::len)
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Coarsening functional `ℓ(w) = Σ w_k`.
    pub(crate) fn level(&self, i: usize) -> i64 {
        self.weights[i].iter().sum()
    }

    /// Positive in the sense used for decidability: the coarsening
    /// `ℓ(w) = Σ w_k` is strictly positive on every variable, so every graded
    /// component is finite-dimensional.
    pub fn is_positive(&self) -> bool {
        (0..self.nvars()).all(|i| self.level(i) > 0)
    }

    pub fn degree_of(&self, m: &Monomial) -> Vec<i64> {
        let mut d = vec![0i64; self.rank()];
        for (i, w) in self.weights.iter().enumerate() {
            let e = m.exps()[i] as i64;
            if e != 0 {
                for (dk, wk) in d.iter_mut().zip(w) {
                    *dk += e * wk;
                }
            }
        }
        d
    }

    pub fn var_degree(&self, i: usize) -> Vec<i64> {
        self.weights[i].clone()
    }

    pub fn degree(&self, p: &Polynomial) -> PolyDegree {
        let mut found: Option<Vec<i64>> = None;
        for (m, _) in p.terms() {
            let d = self.degree_of(m);
            match &found {
                None => found = Some(d),
                Some(f) if *f != d => return PolyDegree::Mixed,
                _ => {}
            }
        }
        found.map_or(PolyDegree::Zero, PolyDegree::Homogeneous)
    }

    pub fn is_homogeneous_of(&self, p: &Polynomial, deg: &[i64]) -> bool {
        match self.degree(p) {
            PolyDegree::Zero => true,
            PolyDegree::Homogeneous(d) => d == deg,
            PolyDegree::Mixed => false,
        }
    }

    /// Monomials in the graded variables of the given degree, padded to
    /// `ring_nvars` exponents. Requires a positive grading.
    pub fn component_basis(&self, deg: &[i64], ring_nvars: usize) -> Vec<Monomial> {
        let target: i64 = deg.iter().sum();
        self.level_basis(target, ring_nvars)
            .into_iter()
            .filter(|m| self.degree_of(m) == deg)
            .collect()
    }

    /// Monomials with coarsened degree `ℓ = level`.
    pub fn level_basis(&self, level: i64, ring_nvars: usize) -> Vec<Monomial> {
        assert!(self.is_positive(), "component enumeration needs a positive grading");
        let mut out = Vec::new();
        let mut exps = vec![0i32; ring_nvars];
        self.enumerate(0, level, &mut exps, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, i: usize, remaining: i64, exps: &mut Vec<i32>, out: &mut Vec<Monomial>) {
        if i == self.nvars() {
            if remaining == 0 {
                out.push(Monomial::new(exps.clone()));
            }
            return;
        }
        let w = self.level(i);
        let mut e = 0;
        while e * w <= remaining {
            exps[i] = e as i32;
            self.enumerate(i + 1, remaining - e * w, exps, out);
            e += 1;
        }
        exps[i] = 0;
    }
}
