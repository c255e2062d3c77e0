use num_traits::Zero;

use super::{FamilyDescriptor, FamilyTag};
use crate::derivations::PolyAutomorphism;
use crate::error::{Error, Result};
use crate::monoids::MonoidStructure;
use crate::poly::{Polynomial, Ring};
use crate::rational::{binomial, q, Rational};

fn ones(n: usize) -> Vec<Rational> {
    vec![q(1); n]
}

fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// `(1, …, 1, 0)` with `n - 1` ones.
fn torus_unit(n: usize) -> Vec<Rational> {
    let mut u = ones(n);
    u[n - 1] = Rational::zero();
    u
}

fn check_sorted(name: &str, b: &[i64]) -> Result<()> {
    if b.iter().any(|&x| x < 0) {
        return Err(Error::Constraint(format!("{name} must be non-negative")));
    }
    if b.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Constraint(format!("{name} must be sorted")));
    }
    Ok(())
}

fn exps(ring: &Ring, pairs: &[(usize, i64)]) -> Vec<i32> {
    let mut e = vec![0i32; ring.nvars()];
    for &(i, k) in pairs {
        e[i] += k as i32;
    }
    e
}

/// `Q_{b,c}` in the ring `x1, y1, x2, y2`:
/// `Σ_{k=1}^{d} C(d+1,k) x1^{e+b(k-1)} y1^{e+b(d-k)} x2^{d-k+1} y2^k`
/// where `c = b d + e`, `0 <= e < b`.
pub fn q_poly(b: i64, c: i64) -> Result<Polynomial> {
    if b < 1 || c < b {
        return Err(Error::Constraint("Q_{b,c} needs 1 <= b <= c".into()));
    }
    let ring = Ring::new(["x1", "y1", "x2", "y2"]);
    let (d, e) = (c / b, c % b);
    let terms = (1..=d).map(|k| {
        (
            vec![
                (e + b * (k - 1)) as i32,
                (e + b * (d - k)) as i32,
                (d - k + 1) as i32,
                k as i32,
            ],
            Rational::from_integer(binomial((d + 1) as u32, k as u32)),
        )
    });
    Polynomial::from_terms(&ring, terms)
}

pub fn make_rank0(n: usize) -> Result<MonoidStructure> {
    let ring = Ring::monoid(n);
    let comps = (0..n)
        .map(|i| &Polynomial::var(&ring, i) + &Polynomial::var(&ring, n + i))
        .collect();
    Ok(MonoidStructure::new(comps)?
        .with_unit(zeros(n))
        .with_family(FamilyDescriptor::new(FamilyTag::Rank0, vec![n as i64])?))
}

pub fn make_toric(n: usize) -> Result<MonoidStructure> {
    let ring = Ring::monoid(n);
    let comps = (0..n)
        .map(|i| Polynomial::monomial(&ring, &exps(&ring, &[(i, 1), (n + i, 1)])))
        .collect();
    Ok(MonoidStructure::new(comps)?
        .with_unit(ones(n))
        .with_zero(zeros(n))
        .with_family(FamilyDescriptor::new(FamilyTag::Toric, vec![n as i64])?))
}

/// `(x1 y1, …, x(n-1) y(n-1), x^b yn + y^b xn)` untagged.
fn corank1_map(n: usize, b: &[i64]) -> Result<MonoidStructure> {
    if n == 0 || b.len() + 1 != n {
        return Err(Error::Constraint(format!(
            "b must have n - 1 = {} entries",
            n.saturating_sub(1)
        )));
    }
    check_sorted("b", b)?;
    let ring = Ring::monoid(n);
    let mut comps: Vec<Polynomial> = (0..n - 1)
        .map(|i| Polynomial::monomial(&ring, &exps(&ring, &[(i, 1), (n + i, 1)])))
        .collect();
    let mut xb_yn: Vec<(usize, i64)> = b.iter().enumerate().map(|(i, &bi)| (i, bi)).collect();
    xb_yn.push((2 * n - 1, 1));
    let mut yb_xn: Vec<(usize, i64)> = b.iter().enumerate().map(|(i, &bi)| (n + i, bi)).collect();
    yb_xn.push((n - 1, 1));
    comps.push(
        &Polynomial::monomial(&ring, &exps(&ring, &xb_yn))
            + &Polynomial::monomial(&ring, &exps(&ring, &yb_xn)),
    );
    let mut s = MonoidStructure::new(comps)?.with_unit(torus_unit(n));
    if b.iter().any(|&x| x > 0) {
        s = s.with_zero(zeros(n));
    }
    Ok(s)
}

/// Demazure-root monoid on `A^n` with exponent vector `b` (length `n - 1`,
/// sorted, non-negative). Has a zero iff some `b_i > 0`.
pub fn make_corank1(n: usize, b: &[i64]) -> Result<MonoidStructure> {
    let s = corank1_map(n, b)?;
    let mut params = vec![n as i64];
    params.extend_from_slice(b);
    Ok(s.with_family(FamilyDescriptor::new(FamilyTag::Corank1, params)?))
}

/// `M +_b A` on `A^2`.
pub fn make_a2_mba(b: i64) -> Result<MonoidStructure> {
    let s = corank1_map(2, &[b])?;
    Ok(s.with_family(FamilyDescriptor::new(FamilyTag::A2MbA, vec![b])?))
}

/// `M M +_{b,c} A` on `A^3`, `0 <= b <= c`.
pub fn make_a3_mmbca(b: i64, c: i64) -> Result<MonoidStructure> {
    let s = corank1_map(3, &[b, c])?;
    Ok(s.with_family(FamilyDescriptor::new(FamilyTag::A3MMbcA, vec![b, c])?))
}

/// The two rank-one families on `A^3` with a unipotent part of dimension two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum A3Kind {
    /// `M +_b A +_c A`: third component without `Q_{b,c}`.
    MbAcA,
    /// `M +_b A +_{b,c} A`: third component with `Q_{b,c}`.
    MbAbcA,
}

impl A3Kind {
    pub fn tag(self) -> FamilyTag {
        match self {
            A3Kind::MbAcA => FamilyTag::A3MbAcA,
            A3Kind::MbAbcA => FamilyTag::A3MbAbcA,
        }
    }

    pub(crate) fn check(self, b: i64, c: i64) -> Result<()> {
        let low = match self {
            A3Kind::MbAcA => 0,
            A3Kind::MbAbcA => 1,
        };
        if b < low || c < b {
            return Err(Error::Constraint(format!(
                "{} requires {low} <= b <= c",
                self.tag()
            )));
        }
        Ok(())
    }
}

pub fn make_a3(kind: A3Kind, b: i64, c: i64) -> Result<MonoidStructure> {
    kind.check(b, c)?;
    let ring = Ring::monoid(3);
    let m = |pairs: &[(usize, i64)]| Polynomial::monomial(&ring, &exps(&ring, pairs));
    let mut third = &m(&[(0, c), (5, 1)]) + &m(&[(3, c), (2, 1)]);
    if kind == A3Kind::MbAbcA {
        third = &third + &q_poly(b, c)?.rename_by_name(&ring)?;
    }
    let comps = vec![
        m(&[(0, 1), (3, 1)]),
        &m(&[(0, b), (4, 1)]) + &m(&[(3, b), (1, 1)]),
        third,
    ];
    let mut s = MonoidStructure::new(comps)?
        .with_unit(vec![q(1), q(0), q(0)])
        .with_family(FamilyDescriptor::new(kind.tag(), vec![b, c])?);
    if b >= 1 {
        s = s.with_zero(zeros(3));
    }
    Ok(s)
}

/// Monoids on `A^4` from the two additive actions on the Hirzebruch surface
/// `F_d`. The non-normalized one needs `d >= 1`.
pub fn make_hirzebruch(d: i64, normalized: bool) -> Result<MonoidStructure> {
    if d < 0 || (!normalized && d < 1) {
        return Err(Error::Constraint(
            "hirzebruch needs d >= 0, and d >= 1 when not normalized".into(),
        ));
    }
    let ring = Ring::monoid(4);
    let m = |pairs: &[(usize, i64)]| Polynomial::monomial(&ring, &exps(&ring, pairs));
    let mut fourth = &m(&[(0, d), (1, 1), (7, 1)]) + &m(&[(4, d), (5, 1), (3, 1)]);
    if !normalized {
        fourth = &fourth + &m(&[(0, d - 1), (4, d - 1), (1, 1), (5, 1), (2, 1), (6, 1)]);
    }
    let comps = vec![
        m(&[(0, 1), (4, 1)]),
        m(&[(1, 1), (5, 1)]),
        &m(&[(0, 1), (6, 1)]) + &m(&[(4, 1), (2, 1)]),
        fourth,
    ];
    Ok(MonoidStructure::new(comps)?
        .with_unit(vec![q(1), q(1), q(0), q(0)])
        .with_zero(zeros(4))
        .with_family(FamilyDescriptor::new(
            FamilyTag::Hirzebruch,
            vec![d, normalized as i64],
        )?))
}

/// The multiplicative monoid of `K[T]/(T^n)`.
pub fn make_truncated(n: usize) -> Result<MonoidStructure> {
    let s = super::make_bilinear(&super::make_truncated_poly_algebra(n)?)?;
    Ok(s.with_family(FamilyDescriptor::new(FamilyTag::LocalTruncated, vec![n as i64])?))
}

/// The torus-times-root action `(t_i x_i, t^b (x_n + a x^b))` on `A^n` with
/// parameters `t1..t(n-1), a`.
pub fn demazure_action(b: &[i64]) -> Result<PolyAutomorphism> {
    check_sorted("b", b)?;
    let n = b.len() + 1;
    let params: Vec<String> = (1..n).map(|i| format!("t{i}")).chain(["a".to_string()]).collect();
    let ring = Ring::indexed("x", n).extended(&params);
    let m = |pairs: &[(usize, i64)]| Polynomial::monomial(&ring, &exps(&ring, pairs));
    let mut comps: Vec<Polynomial> = (0..n - 1).map(|i| m(&[(i, 1), (n + i, 1)])).collect();
    let tb: Vec<(usize, i64)> = b.iter().enumerate().map(|(i, &bi)| (n + i, bi)).collect();
    let mut shift = tb.clone();
    shift.push((n - 1, 1));
    let mut root = tb;
    root.extend(b.iter().enumerate().map(|(i, &bi)| (i, bi)));
    root.push((2 * n - 1, 1));
    comps.push(&m(&shift) + &m(&root));
    PolyAutomorphism::new(n, &ring, comps)
}

/// Parameters of [`demazure_action`] sending `(1, …, 1, 0)` to `y`:
/// `t_i = y_i`, `a = y^{-b} y_n`.
pub fn demazure_solution(b: &[i64]) -> Vec<(String, Polynomial)> {
    let n = b.len() + 1;
    let y = Ring::indexed("y", n);
    let mut out: Vec<(String, Polynomial)> = (0..n - 1)
        .map(|i| (format!("t{}", i + 1), Polynomial::var(&y, i)))
        .collect();
    let mut e: Vec<i32> = b.iter().map(|&bi| -bi as i32).collect();
    e.push(1);
    out.push(("a".to_string(), Polynomial::monomial(&y, &e)));
    out
}
