use super::MonoidStructure;
use crate::derivations::PolyAutomorphism;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::rational::Rational;

/// The multiplication induced by an action with an open orbit through `base`.
///
/// `solution` gives, for every parameter of `action`, a Laurent polynomial in
/// `y1..yn` such that the group element it names sends `base` to `y`. The
/// product `x * y` is that group element applied to `x`. The result must be
/// polynomial; otherwise the embedding does not extend and this fails with
/// [`Error::EmbeddingNotPolynomial`]. The returned monoid carries `base` as
/// its unit.
pub fn monoid_from_action<S: AsRef<str>>(
    action: &PolyAutomorphism,
    base: &[Rational],
    solution: &[(S, Polynomial)],
) -> Result<MonoidStructure> {
    let n = action.dim();
    if base.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: base.len(),
        });
    }
    let ring = Ring::monoid(n);
    let mut param_images = Vec::with_capacity(action.params().len());
    for p in action.params() {
        let (_, sol) = solution
            .iter()
            .find(|(name, _)| name.as_ref() == p)
            .ok_or_else(|| Error::MissingImage(p.clone()))?;
        param_images.push(sol.rename_by_name(&ring)?);
    }

    let at = |coords: Vec<Polynomial>| -> Result<Vec<Polynomial>> {
        let images: Vec<Polynomial> = coords.into_iter().chain(param_images.iter().cloned()).collect();
        action
            .components()
            .iter()
            .map(|c| c.compose(&ring, &images))
            .collect()
    };

    let orbit = at(base
        .iter()
        .map(|v| Polynomial::constant(&ring, v.clone()))
        .collect())?;
    for (k, o) in orbit.iter().enumerate() {
        if *o != Polynomial::var(&ring, n + k) {
            return Err(Error::Constraint(format!(
                "parameter solution does not send the base point to y (component {})",
                k + 1
            )));
        }
    }

    let mu = at((0..n).map(|i| Polynomial::var(&ring, i)).collect())?;
    if let Some((k, _)) = mu.iter().enumerate().find(|(_, p)| !p.is_polynomial()) {
        return Err(Error::EmbeddingNotPolynomial(format!(
            "component {} keeps a negative power",
            k + 1
        )));
    }
    Ok(MonoidStructure::new(mu)?.with_unit(base.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn demazure_on_a2() {
        // t x1, t^b (x2 + a x1^b) with b = 2, base (1, 0)
        let action = PolyAutomorphism::parse(2, &["t", "a"], &["t*x1", "t^2*x2 + t^2*a*x1^2"]).unwrap();
        let y = Ring::indexed("y", 2);
        let sol = [
            ("t", Polynomial::parse(&y, "y1").unwrap()),
            ("a", Polynomial::parse(&y, "y1^-2*y2").unwrap()),
        ];
        let s = monoid_from_action(&action, &[q(1), q(0)], &sol).unwrap();
        assert_eq!(s, MonoidStructure::parse(&["x1*y1", "x1^2*y2 + y1^2*x2"]).unwrap().with_unit(vec![q(1), q(0)]));
    }

    #[test]
    fn denominators_must_clear() {
        let action = PolyAutomorphism::parse(2, &["t", "a"], &["t*x1", "t^-1*x2 + a"]).unwrap();
        let y = Ring::indexed("y", 2);
        let sol = [
            ("t", Polynomial::parse(&y, "y1").unwrap()),
            ("a", Polynomial::parse(&y, "y2").unwrap()),
        ];
        let err = monoid_from_action(&action, &[q(1), q(0)], &sol).unwrap_err();
        assert!(matches!(err, Error::EmbeddingNotPolynomial(_)), "{err}");
    }
}
