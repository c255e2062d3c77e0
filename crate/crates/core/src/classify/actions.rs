use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::A3Kind;
use crate::derivations::{Derivation, Grading, PolyAutomorphism};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Polynomial, Ring};
use crate::rational::{binomial, random_point, Rational};

/// `c = b·d + e` with `0 <= e < b`.
pub fn split_weights(b: i64, c: i64) -> Result<(i64, i64)> {
    if b < 1 || c < b {
        return Err(Error::Constraint("need 1 <= b <= c".into()));
    }
    Ok((c / b, c % b))
}

pub(crate) fn mono(ring: &Arc<Ring>, pairs: &[(usize, i64)]) -> Polynomial {
    let mut e = vec![0i32; ring.nvars()];
    for &(i, k) in pairs {
        e[i] += k as i32;
    }
    Polynomial::monomial(ring, &e)
}

/// `Σ_{k=1}^{d+1} C(d+1,k) a^k x1^{e+b(k-1)} x2^{d+1-k}` with `x1, x2` at
/// ring positions 0, 1 and `a` at position `a`.
fn root_sum(ring: &Arc<Ring>, b: i64, c: i64, a: usize) -> Result<Polynomial> {
    let (d, e) = split_weights(b, c)?;
    let mut s = Polynomial::zero(ring);
    for k in 1..=d + 1 {
        let coeff = Rational::from_integer(binomial((d + 1) as u32, k as u32));
        let m = mono(ring, &[(a, k), (0, e + b * (k - 1)), (1, d + 1 - k)]);
        s = &s + &m.scale(&coeff);
    }
    Ok(s)
}

/// The two commuting derivations behind the rank-one actions on `A^3`:
/// `δ₁ = x1^b ∂₂ + α x1^e x2^d ∂₃` and `δ₂ = x1^c ∂₃`, with `α = d+1` for
/// `MbAbcA` and `α = 0` for `MbAcA`.
pub fn a3_derivations(kind: A3Kind, b: i64, c: i64) -> Result<(Derivation, Derivation)> {
    let (d, e) = split_weights(b, c)?;
    let ring = Ring::indexed("x", 3);
    let alpha = match kind {
        A3Kind::MbAbcA => Rational::from_integer((d + 1).into()),
        A3Kind::MbAcA => Rational::zero(),
    };
    let d1 = Derivation::new(
        &ring,
        vec![
            Polynomial::zero(&ring),
            mono(&ring, &[(0, b)]),
            mono(&ring, &[(0, e), (1, d)]).scale(&alpha),
        ],
    )?;
    let d2 = Derivation::new(
        &ring,
        vec![Polynomial::zero(&ring), Polynomial::zero(&ring), mono(&ring, &[(0, c)])],
    )?;
    Ok((d1, d2))
}

/// `t·exp(a1 δ₁ + a2 δ₂)` on `A^3` over `x1, x2, x3, t, a1, a2`.
pub fn a3_action(kind: A3Kind, b: i64, c: i64) -> Result<PolyAutomorphism> {
    kind.check(b, c)?;
    split_weights(b, c)?;
    let ring = Ring::indexed("x", 3).extended(&["t", "a1", "a2"]);
    let (t, a1, a2) = (3, 4, 5);
    let mut third = &mono(&ring, &[(2, 1)]) + &mono(&ring, &[(a2, 1), (0, c)]);
    if kind == A3Kind::MbAbcA {
        third = &third + &root_sum(&ring, b, c, a1)?;
    }
    let comps = vec![
        mono(&ring, &[(t, 1), (0, 1)]),
        &mono(&ring, &[(t, b), (1, 1)]) + &mono(&ring, &[(t, b), (a1, 1), (0, b)]),
        &third * &mono(&ring, &[(t, c)]),
    ];
    PolyAutomorphism::new(3, &ring, comps)
}

/// Parameters of [`a3_action`] sending `(1, 0, 0)` to `y`.
pub fn a3_solution(kind: A3Kind, b: i64, c: i64) -> Result<Vec<(String, Polynomial)>> {
    let (d, _) = split_weights(b, c)?;
    let y = Ring::indexed("y", 3);
    let mut a2 = mono(&y, &[(0, -c), (2, 1)]);
    if kind == A3Kind::MbAbcA {
        a2 = &a2 - &mono(&y, &[(0, -b * (d + 1)), (1, d + 1)]);
    }
    Ok(vec![
        ("t".into(), Polynomial::var(&y, 0)),
        ("a1".into(), mono(&y, &[(0, -b), (1, 1)])),
        ("a2".into(), a2),
    ])
}

/// The two additive actions on the weighted projective plane `P(1,b,c)`,
/// lifted to `A^3` with parameters `a1, a2`.
pub fn wpp_actions(b: i64, c: i64) -> Result<[PolyAutomorphism; 2]> {
    split_weights(b, c)?;
    if b.gcd(&c) != 1 {
        return Err(Error::Constraint(format!("gcd({b}, {c}) must be 1")));
    }
    let ring = Ring::indexed("x", 3).extended(&["a1", "a2"]);
    let x2 = &mono(&ring, &[(1, 1)]) + &mono(&ring, &[(3, 1), (0, b)]);
    let x3 = &mono(&ring, &[(2, 1)]) + &mono(&ring, &[(4, 1), (0, c)]);
    let first = PolyAutomorphism::new(3, &ring, vec![mono(&ring, &[(0, 1)]), x2.clone(), x3.clone()])?;
    let x3b = &x3 + &root_sum(&ring, b, c, 3)?;
    let second = PolyAutomorphism::new(3, &ring, vec![mono(&ring, &[(0, 1)]), x2, x3b])?;
    Ok([first, second])
}

/// `Z^2`-grading of the Cox ring of the Hirzebruch surface `F_d`.
pub fn hirzebruch_grading(d: i64) -> Grading {
    Grading::from_matrix(vec![vec![1, 0], vec![0, 1], vec![1, 0], vec![d, 1]])
}

/// The normalized and the non-normalized additive action on `F_d`, lifted
/// to `A^4`. The second needs `d >= 1`.
pub fn hirzebruch_actions(d: i64) -> Result<[PolyAutomorphism; 2]> {
    if d < 1 {
        return Err(Error::Constraint("hirzebruch actions need d >= 1".into()));
    }
    let ring = Ring::indexed("x", 4).extended(&["a1", "a2"]);
    let m = |p: &[(usize, i64)]| mono(&ring, p);
    let x3 = &m(&[(2, 1)]) + &m(&[(4, 1), (0, 1)]);
    let normal = vec![
        m(&[(0, 1)]),
        m(&[(1, 1)]),
        x3.clone(),
        &m(&[(3, 1)]) + &m(&[(5, 1), (0, d), (1, 1)]),
    ];
    let half = Rational::new(1.into(), 2.into());
    let x4 = &(&(&m(&[(3, 1)]) + &m(&[(5, 1), (0, d), (1, 1)])) + &m(&[(4, 2), (0, d), (1, 1)]).scale(&half))
        + &m(&[(4, 1), (0, d - 1), (1, 1), (2, 1)]);
    let other = vec![m(&[(0, 1)]), m(&[(1, 1)]), x3, x4];
    Ok([
        PolyAutomorphism::new(4, &ring, normal)?,
        PolyAutomorphism::new(4, &ring, other)?,
    ])
}

/// `x_i ↦ x_i + a_i` on `A^n`.
pub fn translation_action(n: usize) -> PolyAutomorphism {
    let params: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let ring = Ring::indexed("x", n).extended(&params);
    let comps = (0..n)
        .map(|i| &Polynomial::var(&ring, i) + &Polynomial::var(&ring, n + i))
        .collect();
    PolyAutomorphism::new(n, &ring, comps).expect("well-formed translation")
}

/// Outcome of [`verify_additive_action`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub params: usize,
    pub identity: bool,
    pub group_law: bool,
    pub faithful: bool,
    pub open_orbit: bool,
    pub homogeneous: bool,
    pub jacobian_rank: usize,
    /// Rank of the parameter Jacobian together with the torus Euler vectors.
    pub orbit_rank: usize,
    pub attempts: usize,
}

impl ActionReport {
    pub fn all_pass(&self) -> bool {
        self.identity && self.group_law && self.faithful && self.open_orbit && self.homogeneous
    }

    pub fn failed(&self) -> Vec<&'static str> {
        [
            ("identity", self.identity),
            ("group law", self.group_law),
            ("faithful", self.faithful),
            ("open orbit", self.open_orbit),
            ("homogeneous", self.homogeneous),
        ]
        .into_iter()
        .filter(|(_, ok)| !ok)
        .map(|(name, _)| name)
        .collect()
    }
}

const MAX_ATTEMPTS: usize = 5;

/// Checks that `action` (coordinates followed by parameters `a_1..a_s`) is an
/// additive action commuting with the torus of `grading`: identity at zero,
/// the symbolic group law, a parameter Jacobian of rank `s` at a seeded
/// point, an open orbit for the group extended by the torus, and
/// homogeneity of each component in its coordinate's degree.
pub fn verify_additive_action(action: &PolyAutomorphism, grading: &Grading, seed: u64) -> Result<ActionReport> {
    let n = action.dim();
    if grading.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: grading.nvars(),
        });
    }
    let params: Vec<String> = action.params().to_vec();
    let s = params.len();

    let zero: Vec<(&str, Rational)> = params.iter().map(|p| (p.as_str(), Rational::zero())).collect();
    let identity = action.specialize(&zero)?.is_identity();

    let group_law = group_law_holds(action, &params)?;

    let homogeneous = action
        .components()
        .iter()
        .enumerate()
        .all(|(k, c)| grading.is_homogeneous_of(c, &grading.var_degree(k)));

    let ring = action.ring();
    let jac: Vec<Vec<Polynomial>> = action
        .components()
        .iter()
        .map(|c| (0..s).map(|j| c.partial(n + j)).collect())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut jacobian_rank, mut orbit_rank, mut attempts) = (0, 0, 0);
    while attempts < MAX_ATTEMPTS {
        attempts += 1;
        let x0 = random_point(&mut rng, n);
        let mut point = x0.clone();
        point.resize(ring.nvars(), Rational::zero());
        let mut rows = Vec::with_capacity(n);
        for (k, row) in jac.iter().enumerate() {
            let mut r = row.iter().map(|p| p.evaluate(&point)).collect::<Result<Vec<_>>>()?;
            let jr = r.len();
            r.extend((0..grading.rank()).map(|g| &x0[k] * Rational::from_integer(grading.weights[k][g].into())));
            debug_assert_eq!(jr, s);
            rows.push(r);
        }
        let full = Matrix::from_rows(rows.clone());
        let jm = Matrix::from_rows(rows.iter().map(|r| r[..s].to_vec()).collect());
        jacobian_rank = if s == 0 { 0 } else { jm.rank() };
        orbit_rank = if full.cols() == 0 { 0 } else { full.rank() };
        if jacobian_rank == s && orbit_rank == n {
            break;
        }
    }

    Ok(ActionReport {
        params: s,
        identity,
        group_law,
        faithful: jacobian_rank == s,
        open_orbit: orbit_rank == n,
        homogeneous,
        jacobian_rank,
        orbit_rank,
        attempts,
    })
}

/// `φ(α)∘φ(β) = φ(α+β)` as a polynomial identity.
fn group_law_holds(action: &PolyAutomorphism, params: &[String]) -> Result<bool> {
    let fresh: Vec<String> = params.iter().map(|p| format!("{p}_b")).collect();
    let renames: Vec<(&str, &str)> = params.iter().map(String::as_str).zip(fresh.iter().map(String::as_str)).collect();
    let other = action.rename_params(&renames)?;
    let lhs = action.compose(&other)?;
    let ring = lhs.ring().clone();
    let sums: Vec<(&str, Polynomial)> = params
        .iter()
        .zip(&fresh)
        .map(|(p, f)| {
            let v = |name: &str| Polynomial::var(&ring, ring.index_of(name).expect("union ring"));
            (p.as_str(), &v(p) + &v(f))
        })
        .collect();
    let rhs = action.embed(&ring)?.substitute_params(&sums)?;
    for (l, r) in lhs.components().iter().zip(rhs.components()) {
        if *l != r.rename_by_name(&ring)? {
            return Ok(false);
        }
    }
    Ok(true)
}
