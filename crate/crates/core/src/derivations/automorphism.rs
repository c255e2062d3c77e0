use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use num_traits::Zero;

use crate::rational::Rational;

/// A polynomial endomorphism of `A^n`, possibly depending on formal
/// parameters.
///
/// The ambient ring starts with the `n` coordinates `x1..xn`; every further
/// variable is a parameter. Parameters may carry negative exponents, which
/// is how an invertible torus parameter `t` is represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyAutomorphism {
    n: usize,
    ring: Arc<Ring>,
    components: Vec<Polynomial>,
}

/// Ring `a` followed by the names of `b` that `a` lacks.
pub(crate) fn union_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Arc<Ring> {
    let extra: Vec<&str> = b
        .names()
        .iter()
        .filter(|n| a.index_of(n).is_none())
        .map(String::as_str)
        .collect();
    if extra.is_empty() {
        a.clone()
    } else {
        a.extended(&extra)
    }
}

impl PolyAutomorphism {
    pub fn new(n: usize, ring: &Arc<Ring>, components: Vec<Polynomial>) -> Result<PolyAutomorphism> {
        if components.len() != n || ring.nvars() < n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: components.len(),
            });
        }
        for c in &components {
            if **c.ring() != **ring {
                return Err(Error::AmbientMismatch {
                    left: ring.to_string(),
                    right: c.ring().to_string(),
                });
            }
        }
        Ok(PolyAutomorphism {
            n,
            ring: ring.clone(),
            components,
        })
    }

    /// Parses components over `x1..xn` followed by the named parameters.
    pub fn parse(n: usize, params: &[&str], components: &[&str]) -> Result<PolyAutomorphism> {
        let ring = Ring::indexed("x", n).extended(params);
        let comps = components
            .iter()
            .map(|s| Polynomial::parse(&ring, s))
            .collect::<Result<Vec<_>>>()?;
        PolyAutomorphism::new(n, &ring, comps)
    }

    pub fn identity(ring: &Arc<Ring>, n: usize) -> PolyAutomorphism {
        PolyAutomorphism {
            n,
            ring: ring.clone(),
            components: (0..n).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn params(&self) -> &[String] {
        &self.ring.names()[self.n..]
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.ring.index_of(name).filter(|&i| i >= self.n)
    }

    pub fn is_identity(&self) -> bool {
        self.components
            .iter()
            .enumerate()
            .all(|(i, c)| *c == Polynomial::var(&self.ring, i))
    }

    /// `f ∘ φ`: substitutes the components for the coordinates of `f`.
    ///
    /// Variables of `f` past the coordinates are matched by name and kept;
    /// the result lives in the union of both rings.
    pub fn pull_back(&self, f: &Polynomial) -> Result<Polynomial> {
        let target = union_ring(&self.ring, f.ring());
        let comps = self
            .components
            .iter()
            .map(|c| c.rename_by_name(&target))
            .collect::<Result<Vec<_>>>()?;
        let images: Vec<Option<Polynomial>> = (0..f.nvars())
            .map(|i| {
                if i < self.n && f.ring().name(i) == self.ring.name(i) {
                    Some(comps[i].clone())
                } else {
                    let j = target.index_of(f.ring().name(i)).unwrap();
                    Some(Polynomial::var(&target, j))
                }
            })
            .collect();
        f.substitute(&target, &images)
    }

    /// Point-map composition `self ∘ other` (apply `other` first). Parameter
    /// sets must be disjoint.
    pub fn compose(&self, other: &PolyAutomorphism) -> Result<PolyAutomorphism> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        for i in 0..self.n {
            if self.ring.name(i) != other.ring.name(i) {
                return Err(Error::AmbientMismatch {
                    left: self.ring.to_string(),
                    right: other.ring.to_string(),
                });
            }
        }
        if let Some(p) = self.params().iter().find(|p| other.param_index(p).is_some()) {
            return Err(Error::ParameterClash(p.clone()));
        }
        let target = union_ring(&self.ring, &other.ring);
        let inner: Vec<Polynomial> = other
            .components
            .iter()
            .map(|c| c.rename_by_name(&target))
            .collect::<Result<_>>()?;
        let images: Vec<Option<Polynomial>> = (0..self.ring.nvars())
            .map(|i| {
                if i < self.n {
                    Some(inner[i].clone())
                } else {
                    Some(Polynomial::var(&target, target.index_of(self.ring.name(i)).unwrap()))
                }
            })
            .collect();
        let components = self
            .components
            .iter()
            .map(|c| c.substitute(&target, &images))
            .collect::<Result<Vec<_>>>()?;
        PolyAutomorphism::new(self.n, &target, components)
    }

    /// Renames parameters; names not listed are kept.
    pub fn rename_params(&self, renames: &[(&str, &str)]) -> Result<PolyAutomorphism> {
        let names: Vec<String> = self
            .ring
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| {
                if i < self.n {
                    return n.clone();
                }
                renames
                    .iter()
                    .find(|(old, _)| old == n)
                    .map_or_else(|| n.clone(), |(_, new)| new.to_string())
            })
            .collect();
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::ParameterClash(dup.clone()));
        }
        let ring = Ring::new(names);
        let map: Vec<usize> = (0..ring.nvars()).collect();
        Ok(PolyAutomorphism {
            n: self.n,
            components: self.components.iter().map(|c| c.rename(&ring, &map)).collect(),
            ring,
        })
    }

    /// Substitutes polynomials (in the same ring) for parameters, then drops
    /// every parameter that no longer occurs.
    pub fn substitute_params(&self, values: &[(&str, Polynomial)]) -> Result<PolyAutomorphism> {
        let mut assignment = Vec::with_capacity(values.len());
        for (name, v) in values {
            let i = self
                .param_index(name)
                .ok_or_else(|| Error::MissingImage(name.to_string()))?;
            assignment.push((i, v.rename_by_name(&self.ring)?));
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.substitute_some(&assignment))
            .collect::<Result<Vec<_>>>()?;
        PolyAutomorphism::new(self.n, &self.ring, comps)?.prune_params()
    }

    /// Specializes the named parameters to rational values.
    pub fn specialize(&self, values: &[(&str, Rational)]) -> Result<PolyAutomorphism> {
        let vals: Vec<(&str, Polynomial)> = values
            .iter()
            .map(|(n, v)| (*n, Polynomial::constant(&self.ring, v.clone())))
            .collect();
        self.substitute_params(&vals)
    }

    /// Drops parameters no component involves.
    pub fn prune_params(&self) -> Result<PolyAutomorphism> {
        let keep: Vec<&str> = self
            .ring
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i < self.n || self.components.iter().any(|c| c.involves(*i)))
            .map(|(_, n)| n.as_str())
            .collect();
        if keep.len() == self.ring.nvars() {
            return Ok(self.clone());
        }
        let ring = Ring::new(keep);
        let comps = self
            .components
            .iter()
            .map(|c| c.rename_by_name(&ring))
            .collect::<Result<Vec<_>>>()?;
        PolyAutomorphism::new(self.n, &ring, comps)
    }

    /// Inverse of a triangular map `x_k ↦ s_k x_k + g_k(x_1, …, x_{k-1})`
    /// with non-zero rational `s_k`; `g_k` may involve parameters.
    pub fn triangular_inverse(&self) -> Result<PolyAutomorphism> {
        let ring = &self.ring;
        let mut inverse: Vec<Polynomial> = Vec::with_capacity(self.n);
        for k in 0..self.n {
            let comp = &self.components[k];
            let mut lin = vec![0i32; ring.nvars()];
            lin[k] = 1;
            let s = comp.coeff_of(&lin);
            let rest = comp - &Polynomial::term(ring, crate::poly::Monomial::new(lin), s.clone());
            if s.is_zero() || (k..self.n).any(|j| rest.involves(j)) {
                return Err(Error::Constraint(format!(
                    "component {} is not triangular",
                    k + 1
                )));
            }
            let images: Vec<Option<Polynomial>> = (0..ring.nvars())
                .map(|j| {
                    if j < k {
                        Some(inverse[j].clone())
                    } else if j >= self.n {
                        Some(Polynomial::var(ring, j))
                    } else {
                        None
                    }
                })
                .collect();
            let g = rest.substitute(ring, &images)?;
            let xk = &Polynomial::var(ring, k) - &g;
            inverse.push(xk.scale(&s.recip()));
        }
        PolyAutomorphism::new(self.n, ring, inverse)
    }

    /// The same family over a ring that lists at least this ring's names
    /// (coordinates first, in order).
    pub fn embed(&self, ring: &Arc<Ring>) -> Result<PolyAutomorphism> {
        let comps = self
            .components
            .iter()
            .map(|c| c.rename_by_name(ring))
            .collect::<Result<Vec<_>>>()?;
        PolyAutomorphism::new(self.n, ring, comps)
    }
}
