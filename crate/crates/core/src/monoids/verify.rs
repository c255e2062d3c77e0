use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::MonoidStructure;
use crate::error::Result;
use crate::poly::{Polynomial, Ring};
use crate::rational::{random_point, random_rational, serde_rational, Rational};

/// Evidence that an axiom fails: the first failing component (1-based), the
/// lexicographically smallest monomial of the difference, and a point where
/// the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub component: usize,
    pub variables: Vec<String>,
    pub monomial: Vec<i32>,
    #[serde(with = "serde_rational::vec")]
    pub point: Vec<Rational>,
    #[serde(with = "serde_rational")]
    pub left: Rational,
    #[serde(with = "serde_rational")]
    pub right: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl AxiomCheck {
    fn pass() -> AxiomCheck {
        AxiomCheck {
            holds: true,
            witness: None,
        }
    }
}

/// All axiom checks of one monoid. Unit and zero are present only when the
/// monoid declares them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub commutative: AxiomCheck,
    pub associative: AxiomCheck,
    pub unit: Option<AxiomCheck>,
    pub zero: Option<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.commutative.holds
            && self.associative.holds
            && self.unit.as_ref().is_none_or(|c| c.holds)
            && self.zero.as_ref().is_none_or(|c| c.holds)
    }
}

fn lex_min_monomial(p: &Polynomial) -> Vec<i32> {
    p.terms()
        .map(|(m, _)| m.exps().to_vec())
        .min()
        .expect("nonzero difference")
}

/// A random point where `left - right` does not vanish.
fn separating_point(left: &Polynomial, right: &Polynomial, rng: &mut ChaCha8Rng) -> Result<Vec<Rational>> {
    let diff = left - right;
    let n = diff.nvars();
    for attempt in 0..64i64 {
        let point: Vec<Rational> = (0..n)
            .map(|_| random_rational(rng, 9 + attempt * 10, 5))
            .collect();
        if !diff.evaluate(&point)?.eq(&Rational::from_integer(0.into())) {
            return Ok(point);
        }
    }
    Err(crate::error::Error::Internal(
        "no separating point found for a nonzero difference".into(),
    ))
}

fn compare(
    ring: &Ring,
    lhs: &[Polynomial],
    rhs: &[Polynomial],
    rng: &mut ChaCha8Rng,
) -> Result<AxiomCheck> {
    for (k, (l, r)) in lhs.iter().zip(rhs).enumerate() {
        if l == r {
            continue;
        }
        let point = separating_point(l, r, rng)?;
        return Ok(AxiomCheck {
            holds: false,
            witness: Some(Witness {
                component: k + 1,
                variables: ring.names().to_vec(),
                monomial: lex_min_monomial(&(l - r)),
                left: l.evaluate(&point)?,
                right: r.evaluate(&point)?,
                point,
            }),
        });
    }
    Ok(AxiomCheck::pass())
}

impl MonoidStructure {
    /// `mu(x, y) = mu(y, x)` as polynomial identities.
    pub fn verify_commutative(&self, seed: u64) -> Result<AxiomCheck> {
        let n = self.dim();
        let ring = self.ring().clone();
        let swap: Vec<usize> = (0..2 * n).map(|i| (i + n) % (2 * n)).collect();
        let swapped: Vec<Polynomial> = self
            .mu()
            .components()
            .iter()
            .map(|p| p.rename(&ring, &swap))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        compare(&ring, self.mu().components(), &swapped, &mut rng)
    }

    /// `mu(mu(x, y), z) = mu(x, mu(y, z))` in `3n` variables, after a
    /// five-point random pre-check.
    pub fn verify_associative(&self, seed: u64) -> Result<AxiomCheck> {
        let n = self.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triple = Ring::triple(n);
        let first: Vec<usize> = (0..2 * n).collect();
        let shifted: Vec<usize> = (n..3 * n).collect();
        let xy: Vec<Polynomial> = self
            .mu()
            .components()
            .iter()
            .map(|p| p.rename(&triple, &first))
            .collect();
        let yz: Vec<Polynomial> = self
            .mu()
            .components()
            .iter()
            .map(|p| p.rename(&triple, &shifted))
            .collect();
        let var = |i: usize| Polynomial::var(&triple, i);
        let left_images: Vec<Polynomial> = xy.iter().cloned().chain((2 * n..3 * n).map(var)).collect();
        let right_images: Vec<Polynomial> = (0..n).map(var).chain(yz.iter().cloned()).collect();
        let side = |k: usize, images: &[Polynomial]| self.component(k).compose(&triple, images);

        for _ in 0..5 {
            let point = random_point(&mut rng, 3 * n);
            let (x, rest) = point.split_at(n);
            let (y, z) = rest.split_at(n);
            let l = self.multiply(&self.multiply(x, y)?, z)?;
            let r = self.multiply(x, &self.multiply(y, z)?)?;
            if let Some(k) = (0..n).find(|&k| l[k] != r[k]) {
                let diff = &side(k, &left_images)? - &side(k, &right_images)?;
                return Ok(AxiomCheck {
                    holds: false,
                    witness: Some(Witness {
                        component: k + 1,
                        variables: triple.names().to_vec(),
                        monomial: lex_min_monomial(&diff),
                        point,
                        left: l[k].clone(),
                        right: r[k].clone(),
                    }),
                });
            }
        }
        let lhs = (0..n).map(|k| side(k, &left_images)).collect::<Result<Vec<_>>>()?;
        let rhs = (0..n).map(|k| side(k, &right_images)).collect::<Result<Vec<_>>>()?;
        compare(&triple, &lhs, &rhs, &mut rng)
    }

    /// Substitutes the point `p` for `x` and compares `mu(p, y)` with
    /// `target(y)`; the comparison lives in `y1..yn`.
    fn check_left_action(&self, p: &[Rational], target: impl Fn(usize, &std::sync::Arc<Ring>) -> Polynomial, seed: u64) -> Result<AxiomCheck> {
        self.check_point(p)?;
        let n = self.dim();
        let yring = Ring::indexed("y", n);
        let mut images: Vec<Polynomial> = p
            .iter()
            .map(|v| Polynomial::constant(&yring, v.clone()))
            .collect();
        images.extend((0..n).map(|i| Polynomial::var(&yring, i)));
        let lhs = self
            .mu()
            .components()
            .iter()
            .map(|c| c.compose(&yring, &images))
            .collect::<Result<Vec<_>>>()?;
        let rhs: Vec<Polynomial> = (0..n).map(|k| target(k, &yring)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        compare(&yring, &lhs, &rhs, &mut rng)
    }

    /// `mu(e, y) = y` identically.
    pub fn verify_unit(&self, e: &[Rational], seed: u64) -> Result<AxiomCheck> {
        self.check_left_action(e, |k, r| Polynomial::var(r, k), seed)
    }

    /// `mu(z, y) = z` identically.
    pub fn verify_zero(&self, z: &[Rational], seed: u64) -> Result<AxiomCheck> {
        self.check_left_action(z, |k, r| Polynomial::constant(r, z[k].clone()), seed)
    }

    /// Every axiom the monoid declares.
    pub fn verify_all(&self, seed: u64) -> Result<AxiomReport> {
        Ok(AxiomReport {
            commutative: self.verify_commutative(seed)?,
            associative: self.verify_associative(seed)?,
            unit: self.unit.as_ref().map(|e| self.verify_unit(e, seed)).transpose()?,
            zero: self.zero.as_ref().map(|z| self.verify_zero(z, seed)).transpose()?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn commutativity() {
        let m2 = MonoidStructure::parse(&["x1*y1", "x2*y2"]).unwrap();
        assert!(m2.verify_commutative(1).unwrap().holds);
        let bad = MonoidStructure::parse(&["x1*y1", "x1*y2"]).unwrap();
        let c = bad.verify_commutative(1).unwrap();
        assert!(!c.holds);
        let w = c.witness.unwrap();
        assert_eq!(w.component, 2);
        assert_ne!(w.left, w.right);
        let v = bad.mu().component(1).evaluate(&w.point).unwrap();
        assert_eq!(v, w.left);
    }

    #[test]
    fn associativity() {
        let m3 = MonoidStructure::parse(&["x1*y1", "x2*y2", "x3*y3"]).unwrap();
        assert!(m3.verify_associative(7).unwrap().holds);
        let bad = MonoidStructure::parse(&["x1*y1", "x1*y2 + y1*x2 + x2^2*y2"]).unwrap();
        let c = bad.verify_associative(7).unwrap();
        assert!(!c.holds);
        let w = c.witness.unwrap();
        assert_eq!(w.component, 2);
        let (x, rest) = w.point.split_at(2);
        let (y, z) = rest.split_at(2);
        let l = bad.multiply(&bad.multiply(x, y).unwrap(), z).unwrap();
        let r = bad.multiply(x, &bad.multiply(y, z).unwrap()).unwrap();
        assert_eq!((l[1].clone(), r[1].clone()), (w.left, w.right));
    }

    #[test]
    fn unit_and_zero() {
        let m2 = MonoidStructure::parse(&["x1*y1", "x2*y2"]).unwrap();
        assert!(m2.verify_unit(&pt(&[1, 1]), 0).unwrap().holds);
        assert!(!m2.verify_unit(&pt(&[1, 0]), 0).unwrap().holds);
        assert!(m2.verify_zero(&pt(&[0, 0]), 0).unwrap().holds);
        let a = MonoidStructure::parse(&["x1 + y1", "x2 + y2"]).unwrap();
        assert!(!a.verify_zero(&pt(&[0, 0]), 0).unwrap().holds);
        assert!(!a.verify_zero(&pt(&[3, -1]), 0).unwrap().holds);
    }
}
