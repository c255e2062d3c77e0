use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::actions::{a3_action, mono, split_weights};
use crate::catalog::{A3Kind, FamilyTag};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};
use crate::rational::{format_rational, serde_rational, Rational};

/// The set of `(α₁, α₂)` whose unipotent element fixes a given `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StabilizerSet {
    Origin,
    /// The line `alpha1·α₁ + alpha2·α₂ = 0`, scaled so the last non-zero
    /// coefficient is 1.
    Line {
        #[serde(with = "serde_rational")]
        alpha1: Rational,
        #[serde(with = "serde_rational")]
        alpha2: Rational,
    },
    Plane,
}

impl StabilizerSet {
    fn line(alpha1: Rational, alpha2: Rational) -> StabilizerSet {
        let s = if alpha2.is_zero() { alpha1.clone() } else { alpha2.clone() };
        StabilizerSet::Line {
            alpha1: alpha1 / &s,
            alpha2: alpha2 / &s,
        }
    }

    pub fn contains(&self, a1: &Rational, a2: &Rational) -> bool {
        match self {
            StabilizerSet::Origin => a1.is_zero() && a2.is_zero(),
            StabilizerSet::Line { alpha1, alpha2 } => (alpha1 * a1 + alpha2 * a2).is_zero(),
            StabilizerSet::Plane => true,
        }
    }

    /// A non-zero point of the set, if any.
    pub fn direction(&self) -> Option<(Rational, Rational)> {
        match self {
            StabilizerSet::Origin => None,
            StabilizerSet::Line { alpha1, alpha2 } => Some((-alpha2.clone(), alpha1.clone())),
            StabilizerSet::Plane => Some((Rational::one(), Rational::zero())),
        }
    }
}

impl std::fmt::Display for StabilizerSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StabilizerSet::Origin => f.write_str("{0}"),
            StabilizerSet::Plane => f.write_str("all of K^2"),
            StabilizerSet::Line { alpha1, alpha2 } => {
                let mut terms = Vec::new();
                for (c, v) in [(alpha1, "a1"), (alpha2, "a2")] {
                    if c.is_zero() {
                        continue;
                    }
                    if c.is_one() {
                        terms.push(v.to_string());
                    } else {
                        terms.push(format!("{}*{v}", format_rational(c)));
                    }
                }
                write!(f, "{{{} = 0}}", terms.join(" + "))
            }
        }
    }
}

/// Stabilizer of `f = λ x3 + Σ_{l=1}^d λ_l x1^{c-bl} x2^l` in the unipotent
/// part of [`a3_action`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerReport {
    pub family: FamilyTag,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational::vec")]
    pub lambdas: Vec<Rational>,
    pub element: String,
    /// Row `m` collects the coefficient of `x1^{c-bm} x2^m` in
    /// `f∘φ(1,α₁,α₂) − f`; columns are `λ_1..λ_d, λ`.
    pub system: Vec<Vec<String>>,
    pub set: StabilizerSet,
}

fn element(ring: &Arc<Ring>, b: i64, c: i64, lambda: &Rational, lambdas: &[Rational]) -> Polynomial {
    let mut f = mono(ring, &[(2, 1)]).scale(lambda);
    for (l, coeff) in lambdas.iter().enumerate() {
        let l = l as i64 + 1;
        f = &f + &mono(ring, &[(0, c - b * l), (1, l)]).scale(coeff);
    }
    f
}

/// The linear system in `λ_1..λ_d, λ`, with entries polynomial in
/// `a1, a2`, obtained by pulling each basis element back along the action.
pub fn stabilizer_system(kind: A3Kind, b: i64, c: i64) -> Result<Vec<Vec<Polynomial>>> {
    let (d, _) = split_weights(b, c)?;
    let action = a3_action(kind, b, c)?.specialize(&[("t", Rational::one())])?;
    let ring = action.ring().clone();
    let alpha = Ring::new(["a1", "a2"]);
    let basis: Vec<Polynomial> = (1..=d)
        .map(|l| mono(&ring, &[(0, c - b * l), (1, l)]))
        .chain([mono(&ring, &[(2, 1)])])
        .collect();
    let rows = (d + 1) as usize;
    let mut system = vec![vec![Polynomial::zero(&alpha); basis.len()]; rows];
    for (col, g) in basis.iter().enumerate() {
        let diff = &action.pull_back(g)? - g;
        for (key, coeff) in diff.coefficients_in(&[0, 1, 2]) {
            let m = key[1] as i64;
            if key[2] != 0 || m > d || key[0] as i64 != c - b * m {
                return Err(Error::Internal(format!(
                    "pull-back leaves the degree-{c} component"
                )));
            }
            system[m as usize][col] = coeff.rename_by_name(&alpha)?;
        }
    }
    Ok(system)
}

pub fn unipotent_stabilizer(
    kind: A3Kind,
    b: i64,
    c: i64,
    lambda: &Rational,
    lambdas: &[Rational],
) -> Result<StabilizerReport> {
    kind.check(b, c)?;
    let (d, _) = split_weights(b, c)?;
    if lambdas.len() != d as usize {
        return Err(Error::DimensionMismatch {
            expected: d as usize,
            got: lambdas.len(),
        });
    }
    let system = stabilizer_system(kind, b, c)?;
    let alpha = Ring::new(["a1", "a2"]);
    let weights: Vec<&Rational> = lambdas.iter().chain([lambda]).collect();
    let equations: Vec<Polynomial> = system
        .iter()
        .map(|row| {
            row.iter()
                .zip(&weights)
                .fold(Polynomial::zero(&alpha), |acc, (p, w)| &acc + &p.scale(w))
        })
        .collect();
    let set = solve_subspace(&equations)?;
    Ok(StabilizerReport {
        family: kind.tag(),
        b,
        c,
        d,
        lambda: lambda.clone(),
        lambdas: lambdas.to_vec(),
        element: element(&Ring::indexed("x", 3), b, c, lambda, lambdas).to_string(),
        system: system
            .iter()
            .map(|row| row.iter().map(Polynomial::to_string).collect())
            .collect(),
        set,
    })
}

impl StabilizerReport {
    pub fn element_poly(&self) -> Polynomial {
        element(&Ring::indexed("x", 3), self.b, self.c, &self.lambda, &self.lambdas)
    }
}

/// Common zeros of `equations` in `K^2`, known in advance to form a linear
/// subspace (the stabilizer of a vector-group action).
fn solve_subspace(equations: &[Polynomial]) -> Result<StabilizerSet> {
    if equations.iter().all(Polynomial::is_zero) {
        return Ok(StabilizerSet::Plane);
    }
    let on_line = |u: &Polynomial, v: &Polynomial, ring: &Arc<Ring>| -> Result<Vec<Polynomial>> {
        equations
            .iter()
            .map(|e| e.compose(ring, &[u.clone(), v.clone()]))
            .collect()
    };

    // the line α₁ = 0
    let s_ring = Ring::new(["s"]);
    let s = Polynomial::var(&s_ring, 0);
    let vertical = on_line(&Polynomial::zero(&s_ring), &s, &s_ring)?;
    let vertical = vertical.iter().all(Polynomial::is_zero);

    // lines α₂ = m α₁: every s-coefficient of E(s, m s) must vanish at m
    let sm = Ring::new(["s", "m"]);
    let (s, m) = (Polynomial::var(&sm, 0), Polynomial::var(&sm, 1));
    let mut g: Vec<Rational> = Vec::new();
    for e in on_line(&s, &(&m * &s), &sm)? {
        for coeff in e.coefficients_in(&[0]).into_values() {
            g = upoly_gcd(&g, &univariate(&coeff, 1));
        }
    }
    let slope = match g.len() {
        0 => return Err(Error::Internal("stabilizer equations vanish on every line".into())),
        1 => None,
        k => {
            let deg = k - 1;
            let r = -(&g[deg - 1]) / (&g[deg] * Rational::from_integer((deg as i64).into()));
            if !upoly_eval(&g, &r).is_zero() {
                return Err(Error::Internal("stabilizer is not a linear subspace".into()));
            }
            Some(r)
        }
    };
    match (vertical, slope) {
        (false, None) => Ok(StabilizerSet::Origin),
        (true, None) => Ok(StabilizerSet::line(Rational::one(), Rational::zero())),
        (false, Some(r)) => Ok(StabilizerSet::line(-r, Rational::one())),
        (true, Some(_)) => Err(Error::Internal("two stabilizer lines without the plane".into())),
    }
}

/// Coefficients (low degree first) of `p` in variable `var`; `p` must not
/// involve any other variable.
fn univariate(p: &Polynomial, var: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    for (mono, c) in p.terms() {
        let e = mono.exps()[var] as usize;
        if out.len() <= e {
            out.resize(e + 1, Rational::zero());
        }
        out[e] += c;
    }
    trim(out)
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn upoly_eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn upoly_rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut r = a.to_vec();
    let lead = b.last().expect("non-zero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Monic gcd; the empty vector is the zero polynomial.
fn upoly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = upoly_rem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

/// Verdict of [`distinguish_rank1_families`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NonIsomorphic,
    Inconclusive,
    InsufficientSamples,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::NonIsomorphic => "non-isomorphic",
            Verdict::Inconclusive => "inconclusive",
            Verdict::InsufficientSamples => "insufficient samples",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyLines {
    pub family: FamilyTag,
    pub probes: Vec<StabilizerReport>,
    /// Distinct one-dimensional stabilizers among the probes.
    pub lines: Vec<StabilizerSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishReport {
    pub b: i64,
    pub c: i64,
    #[serde(with = "serde_rational::vec")]
    pub samples: Vec<Rational>,
    pub families: Vec<FamilyLines>,
    pub verdict: Verdict,
}

/// Separates the two rank-one families on `A^3` by counting one-dimensional
/// stabilizers of degree-`c` elements. Probes are `x3 + s·x1^{c-b} x2` for
/// each sample `s` and `x1^{c-b} x2`.
pub fn distinguish_rank1_families(b: i64, c: i64, samples: &[Rational]) -> Result<DistinguishReport> {
    let (d, _) = split_weights(b, c)?;
    let mut distinct: Vec<Rational> = Vec::new();
    for s in samples {
        if !distinct.contains(s) {
            distinct.push(s.clone());
        }
    }
    let mut report = DistinguishReport {
        b,
        c,
        samples: distinct.clone(),
        families: Vec::new(),
        verdict: Verdict::InsufficientSamples,
    };
    if distinct.len() < 3 {
        return Ok(report);
    }
    let mut probes: Vec<(Rational, Vec<Rational>)> = distinct
        .iter()
        .map(|s| {
            let mut ls = vec![Rational::zero(); d as usize];
            ls[0] = s.clone();
            (Rational::one(), ls)
        })
        .collect();
    let mut pure = vec![Rational::zero(); d as usize];
    pure[0] = Rational::one();
    probes.push((Rational::zero(), pure));

    for kind in [A3Kind::MbAbcA, A3Kind::MbAcA] {
        let mut fl = FamilyLines {
            family: kind.tag(),
            probes: Vec::new(),
            lines: Vec::new(),
        };
        for (lambda, ls) in &probes {
            let r = unipotent_stabilizer(kind, b, c, lambda, ls)?;
            if matches!(r.set, StabilizerSet::Line { .. }) && !fl.lines.contains(&r.set) {
                fl.lines.push(r.set.clone());
            }
            fl.probes.push(r);
        }
        report.families.push(fl);
    }
    let (q_lines, plain_lines) = (report.families[0].lines.len(), report.families[1].lines.len());
    report.verdict = if q_lines == 1 && plain_lines >= 3 {
        Verdict::NonIsomorphic
    } else {
        Verdict::Inconclusive
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn fixes(kind: A3Kind, b: i64, c: i64, report: &StabilizerReport, a1: Rational, a2: Rational) -> bool {
        let phi = a3_action(kind, b, c)
            .unwrap()
            .specialize(&[("t", q(1)), ("a1", a1), ("a2", a2)])
            .unwrap();
        let f = report.element_poly();
        phi.pull_back(&f).unwrap() == f
    }

    #[test]
    fn closed_form_matrix_for_the_q_family() {
        // rows m = 0..d; entry C(l,m) a1^(l-m) for l > m, and
        // C(d+1,m) a1^(d+1-m) (+ a2 in row 0) in the λ column
        let sys = stabilizer_system(A3Kind::MbAbcA, 1, 2).unwrap();
        let alpha = Ring::new(["a1", "a2"]);
        let p = |s: &str| Polynomial::parse(&alpha, s).unwrap();
        let want = vec![
            vec![p("a1"), p("a1^2"), p("a2 + a1^3")],
            vec![p("0"), p("2*a1"), p("3*a1^2")],
            vec![p("0"), p("0"), p("3*a1")],
        ];
        assert_eq!(sys, want);
    }

    #[test]
    fn three_cases() {
        for (b, c) in [(1, 1), (1, 3), (2, 5)] {
            let (d, _) = split_weights(b, c).unwrap();
            let zeros = vec![q(0); d as usize];
            let r = unipotent_stabilizer(A3Kind::MbAbcA, b, c, &q(1), &zeros).unwrap();
            assert_eq!(r.set, StabilizerSet::Origin);
            let mut ls = zeros.clone();
            ls[d as usize - 1] = q(3);
            let r = unipotent_stabilizer(A3Kind::MbAbcA, b, c, &q(0), &ls).unwrap();
            assert_eq!(r.set, StabilizerSet::line(q(1), q(0)));
            assert!(fixes(A3Kind::MbAbcA, b, c, &r, q(0), q(5)));
            let r = unipotent_stabilizer(A3Kind::MbAbcA, b, c, &q(0), &zeros).unwrap();
            assert_eq!(r.set, StabilizerSet::Plane);
        }
    }

    #[test]
    fn plain_family_lines() {
        let r = unipotent_stabilizer(A3Kind::MbAcA, 1, 2, &q(1), &[q(2), q(0)]).unwrap();
        assert_eq!(r.set, StabilizerSet::line(q(2), q(1)));
        assert_eq!(r.set.to_string(), "{2*a1 + a2 = 0}");
        let (a1, a2) = r.set.direction().unwrap();
        assert!(fixes(A3Kind::MbAcA, 1, 2, &r, a1.clone(), a2.clone()));
        assert!(!fixes(A3Kind::MbAcA, 1, 2, &r, a1, a2 + q(1)));
    }

    #[test]
    fn verdicts() {
        let rep = distinguish_rank1_families(1, 2, &[q(0), q(1), q(2)]).unwrap();
        assert_eq!(rep.verdict, Verdict::NonIsomorphic);
        assert_eq!(rep.families[0].lines, vec![StabilizerSet::line(q(1), q(0))]);
        assert_eq!(rep.families[1].lines.len(), 4);
        let rep = distinguish_rank1_families(1, 1, &[q(5), q(5)]).unwrap();
        assert_eq!(rep.verdict, Verdict::InsufficientSamples);
        assert!(rep.families.is_empty());
    }

    #[test]
    fn gcd_of_univariates() {
        // (m - 1)(m + 2) and (m - 1)^2
        let a = vec![q(-2), q(1), q(1)];
        let b = vec![q(1), q(-2), q(1)];
        assert_eq!(upoly_gcd(&a, &b), vec![q(-1), q(1)]);
        assert_eq!(upoly_gcd(&[], &b), b);
    }
}
