use std::sync::Arc;

use super::{Polynomial, Ring};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial morphism `A^n -> A^m`: `m` components in the `n` source
/// variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    source: Arc<Ring>,
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(source: &Arc<Ring>, components: Vec<Polynomial>) -> Result<PolyMap> {
        for c in &components {
            if !(**c.ring() == **source) {
                return Err(Error::AmbientMismatch {
                    left: source.to_string(),
                    right: c.ring().to_string(),
                });
            }
        }
        Ok(PolyMap {
            source: source.clone(),
            components,
        })
    }

    /// Parses one text polynomial per component.
    pub fn parse(source: &Arc<Ring>, components: &[&str]) -> Result<PolyMap> {
        let comps = components
            .iter()
            .map(|s| Polynomial::parse(source, s))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(source, comps)
    }

    pub fn identity(ring: &Arc<Ring>) -> PolyMap {
        PolyMap {
            source: ring.clone(),
            components: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn source_dim(&self) -> usize {
        self.source.nvars()
    }

    pub fn target_dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<Rational>> {
        self.components.iter().map(|c| c.evaluate(point)).collect()
    }

    /// `self ∘ inner`: substitutes `inner`'s components for the source
    /// variables of `self`.
    pub fn after(&self, inner: &PolyMap) -> Result<PolyMap> {
        if inner.target_dim() != self.source_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.source_dim(),
                got: inner.target_dim(),
            });
        }
        let comps = self
            .components
            .iter()
            .map(|c| c.compose(&inner.source, &inner.components))
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(&inner.source, comps)
    }
}
