use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{FamilyDescriptor, FamilyTag};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::monoids::MonoidStructure;
use crate::poly::{Polynomial, Ring};
use crate::rational::{format_rational, parse_rational, q, Rational};

/// Structure constants of an `n`-dimensional commutative algebra:
/// `gamma[k][i][j]` is the coefficient of `e_k` in `e_i · e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAlgebra", into = "RawAlgebra")]
pub struct AlgebraStructureConstants {
    dim: usize,
    gamma: Vec<Vec<Vec<Rational>>>,
    unit: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct RawAlgebra {
    dim: usize,
    gamma: Vec<Vec<Vec<String>>>,
    unit: Vec<String>,
}

impl TryFrom<RawAlgebra> for AlgebraStructureConstants {
    type Error = Error;

    fn try_from(raw: RawAlgebra) -> Result<Self> {
        let gamma = raw
            .gamma
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|s| parse_rational(s)).collect())
                    .collect()
            })
            .collect::<Result<_>>()?;
        let unit = raw.unit.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
        AlgebraStructureConstants::new(raw.dim, gamma, unit)
    }
}

impl From<AlgebraStructureConstants> for RawAlgebra {
    fn from(a: AlgebraStructureConstants) -> Self {
        RawAlgebra {
            dim: a.dim,
            gamma: a
                .gamma
                .iter()
                .map(|m| m.iter().map(|row| row.iter().map(format_rational).collect()).collect())
                .collect(),
            unit: a.unit.iter().map(format_rational).collect(),
        }
    }
}

/// The four commutative unital algebras of dimension three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraPreset {
    /// `K ⊕ K ⊕ K`
    Split,
    /// `K ⊕ K[T]/(T^2)`
    KPlusDual,
    /// `K[T1, T2]/(T1^2, T1 T2, T2^2)`
    SquareZero,
    /// `K[T]/(T^3)`
    Truncated3,
}

impl AlgebraPreset {
    pub const ALL: [AlgebraPreset; 4] = [
        AlgebraPreset::Split,
        AlgebraPreset::KPlusDual,
        AlgebraPreset::SquareZero,
        AlgebraPreset::Truncated3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraPreset::Split => "kkk",
            AlgebraPreset::KPlusDual => "k-kt2",
            AlgebraPreset::SquareZero => "kt1t2",
            AlgebraPreset::Truncated3 => "kt3",
        }
    }

    pub fn from_name(s: &str) -> Option<AlgebraPreset> {
        AlgebraPreset::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn constants(self) -> AlgebraStructureConstants {
        // (k, i, j) triples with gamma = 1, 0-based; symmetric pairs listed once
        let (products, unit): (&[(usize, usize, usize)], [i64; 3]) = match self {
            AlgebraPreset::Split => (&[(0, 0, 0), (1, 1, 1), (2, 2, 2)], [1, 1, 1]),
            AlgebraPreset::KPlusDual => (&[(0, 0, 0), (1, 1, 1), (2, 1, 2)], [1, 1, 0]),
            AlgebraPreset::SquareZero => (&[(0, 0, 0), (1, 0, 1), (2, 0, 2)], [1, 0, 0]),
            AlgebraPreset::Truncated3 => (&[(0, 0, 0), (1, 0, 1), (2, 0, 2), (2, 1, 1)], [1, 0, 0]),
        };
        let mut gamma = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for &(k, i, j) in products {
            gamma[k][i][j] = Rational::one();
            gamma[k][j][i] = Rational::one();
        }
        AlgebraStructureConstants::new(3, gamma, unit.iter().map(|&u| q(u)).collect())
            .expect("preset shape")
    }
}

impl AlgebraStructureConstants {
    /// Checks shapes only; see [`validate`](Self::validate) for the axioms.
    pub fn new(dim: usize, gamma: Vec<Vec<Vec<Rational>>>, unit: Vec<Rational>) -> Result<Self> {
        let ok = gamma.len() == dim
            && gamma.iter().all(|m| m.len() == dim && m.iter().all(|r| r.len() == dim))
            && unit.len() == dim;
        if !ok {
            return Err(Error::BadAlgebra(format!(
                "structure constants must be {dim}x{dim}x{dim} with a unit of length {dim}"
            )));
        }
        Ok(AlgebraStructureConstants { dim, gamma, unit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gamma(&self) -> &[Vec<Vec<Rational>>] {
        &self.gamma
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn product(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        (0..self.dim)
            .map(|k| {
                let mut s = Rational::zero();
                for i in 0..self.dim {
                    if a[i].is_zero() {
                        continue;
                    }
                    for j in 0..self.dim {
                        if !b[j].is_zero() && !self.gamma[k][i][j].is_zero() {
                            s += &a[i] * &b[j] * &self.gamma[k][i][j];
                        }
                    }
                }
                s
            })
            .collect()
    }

    fn basis(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        v[i] = Rational::one();
        v
    }

    /// Symmetry, associativity on basis triples, and the unit. The error
    /// names the first failing entry or basis triple.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for k in 0..n {
            for i in 0..n {
                for j in 0..i {
                    if self.gamma[k][i][j] != self.gamma[k][j][i] {
                        return Err(Error::BadAlgebra(format!(
                            "not commutative: gamma[{k}][{i}][{j}] != gamma[{k}][{j}][{i}]"
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(&self.basis(i), &self.basis(j));
                for l in 0..n {
                    let left = self.product(&ij, &self.basis(l));
                    let jl = self.product(&self.basis(j), &self.basis(l));
                    let right = self.product(&self.basis(i), &jl);
                    if left != right {
                        return Err(Error::BadAlgebra(format!(
                            "not associative: witness triple (e{}, e{}, e{})",
                            i + 1,
                            j + 1,
                            l + 1
                        )));
                    }
                }
            }
        }
        for j in 0..n {
            if self.product(&self.unit, &self.basis(j)) != self.basis(j) {
                return Err(Error::BadAlgebra(format!(
                    "unit fails on e{}",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Rank of the trace form `(a, b) ↦ Tr(L_{ab})`. Its radical is the
    /// nilradical, so this is the number of local summands, which is the
    /// rank of the unit group.
    pub fn trace_form_rank(&self) -> usize {
        let n = self.dim;
        let tr: Vec<Rational> = (0..n)
            .map(|k| (0..n).fold(Rational::zero(), |acc, m| acc + &self.gamma[m][k][m]))
            .collect();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &self.gamma[k][i][j] * &tr[k]))
                    .collect()
            })
            .collect();
        Matrix::from_rows(rows).rank()
    }
}

/// `K[T]/(T^n)` in the basis `1, T, …, T^{n-1}`.
pub fn make_truncated_poly_algebra(n: usize) -> Result<AlgebraStructureConstants> {
    if n == 0 {
        return Err(Error::Constraint("truncated algebra needs n >= 1".into()));
    }
    let mut gamma = vec![vec![vec![Rational::zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n - i {
            gamma[i + j][i][j] = Rational::one();
        }
    }
    let mut unit = vec![Rational::zero(); n];
    unit[0] = Rational::one();
    AlgebraStructureConstants::new(n, gamma, unit)
}

/// The multiplicative monoid `mu_k = Σ gamma[k][i][j] x_i y_j`, with the
/// algebra unit and the origin as zero.
pub fn make_bilinear(a: &AlgebraStructureConstants) -> Result<MonoidStructure> {
    a.validate()?;
    let n = a.dim();
    let ring = Ring::monoid(n);
    let comps = (0..n)
        .map(|k| {
            let mut terms = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if !a.gamma[k][i][j].is_zero() {
                        let mut e = vec![0i32; 2 * n];
                        e[i] += 1;
                        e[n + j] += 1;
                        terms.push((e, a.gamma[k][i][j].clone()));
                    }
                }
            }
            Polynomial::from_terms(&ring, terms)
        })
        .collect::<Result<Vec<_>>>()?;
    let rank = a.trace_form_rank();
    Ok(MonoidStructure::new(comps)?
        .with_unit(a.unit.clone())
        .with_zero(vec![Rational::zero(); n])
        .with_family(FamilyDescriptor::new(
            FamilyTag::Bilinear,
            vec![n as i64, rank as i64],
        )?))
}
