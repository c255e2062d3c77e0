//! Idempotents, nilpotents, invertibility and group-like powers of concrete
//! monoids, driven by the family metadata of catalog entries.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::FamilyTag;
use crate::error::{Error, Result};
use crate::monoids::MonoidStructure;
use crate::rational::{serde_rational, Rational};

/// Idempotents found among the `{0,1}`-points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdempotentSet {
    #[serde(serialize_with = "ser_points")]
    pub points: Vec<Vec<Rational>>,
    /// True when the candidates provably contain every idempotent, which
    /// holds for catalog families.
    pub complete: bool,
}

fn ser_points<S: serde::Serializer>(points: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    #[derive(Serialize)]
    struct P<'a>(#[serde(with = "serde_rational::vec")] &'a Vec<Rational>);
    let mut seq = s.serialize_seq(Some(points.len()))?;
    for p in points {
        seq.serialize_element(&P(p))?;
    }
    seq.end()
}

fn binary_points(n: usize) -> impl Iterator<Item = Vec<Rational>> {
    (0u64..1 << n).map(move |mask| {
        (0..n)
            .map(|i| if mask >> i & 1 == 1 { Rational::one() } else { Rational::zero() })
            .collect()
    })
}

pub fn idempotents(s: &MonoidStructure) -> Result<IdempotentSet> {
    let mut points = Vec::new();
    for e in binary_points(s.dim()) {
        if s.multiply(&e, &e)? == e {
            points.push(e);
        }
    }
    Ok(IdempotentSet {
        points,
        complete: s.family.is_some(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub rank: usize,
    pub count: usize,
    pub lower_bound: usize,
    /// `count >= 2^rank`, with equality when `rank <= 2`.
    pub holds: bool,
}

pub fn check_idempotent_bound(s: &MonoidStructure) -> Result<BoundReport> {
    let rank = s.family.as_ref().ok_or(Error::MissingMetadata)?.rank;
    let count = idempotents(s)?.points.len();
    let lower_bound = 1usize << rank;
    Ok(BoundReport {
        rank,
        count,
        lower_bound,
        holds: count >= lower_bound && (rank > 2 || count == lower_bound),
    })
}

/// How a family describes its group of invertible elements.
enum Units {
    /// Non-vanishing of these coordinates.
    Coordinates(Vec<usize>),
    /// Invertibility of left multiplication (algebra families).
    Algebra,
}

fn units(s: &MonoidStructure) -> Result<Units> {
    let fam = s.family.as_ref().ok_or(Error::MissingMetadata)?;
    let n = s.dim();
    Ok(match fam.tag {
        FamilyTag::Rank0 => Units::Coordinates(Vec::new()),
        FamilyTag::Toric => Units::Coordinates((0..n).collect()),
        FamilyTag::Corank1 => Units::Coordinates((0..n - 1).collect()),
        FamilyTag::A2MbA | FamilyTag::A3MbAcA | FamilyTag::A3MbAbcA => Units::Coordinates(vec![0]),
        FamilyTag::A3MMbcA | FamilyTag::Hirzebruch => Units::Coordinates(vec![0, 1]),
        FamilyTag::Bilinear | FamilyTag::LocalTruncated => Units::Algebra,
    })
}

pub fn is_invertible(s: &MonoidStructure, p: &[Rational]) -> Result<bool> {
    Ok(match units(s)? {
        Units::Coordinates(idx) => {
            if p.len() != s.dim() {
                return Err(Error::DimensionMismatch {
                    expected: s.dim(),
                    got: p.len(),
                });
            }
            idx.iter().all(|&i| !p[i].is_zero())
        }
        Units::Algebra => !s.left_multiplication(p)?.determinant().is_zero(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// First `k` with `p^(2^k) = 0`.
    pub index: Option<u32>,
}

/// Tests `p^(2^k) = 0` for `k = 0..=dim`.
pub fn is_nilpotent(s: &MonoidStructure, p: &[Rational]) -> Result<Nilpotency> {
    let zero = s.zero.as_ref().ok_or(Error::NoZero)?;
    let mut a = p.to_vec();
    for k in 0..=s.dim() as u32 {
        if a == *zero {
            return Ok(Nilpotency {
                nilpotent: true,
                index: Some(k),
            });
        }
        a = s.multiply(&a, &a)?;
    }
    Ok(Nilpotency {
        nilpotent: false,
        index: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyReport {
    pub points: usize,
    pub invertible: usize,
    pub nilpotent: usize,
    /// Largest `k` with `p^(2^k) = 0` first reached.
    pub max_index: u32,
    #[serde(serialize_with = "ser_points")]
    pub violations: Vec<Vec<Rational>>,
}

impl DichotomyReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that each sample point is invertible or nilpotent, never both.
pub fn dichotomy_rank1(s: &MonoidStructure, points: &[Vec<Rational>]) -> Result<DichotomyReport> {
    let fam = s.family.as_ref().ok_or(Error::MissingMetadata)?;
    if fam.rank != 1 {
        return Err(Error::WrongFamily(format!("{fam} has rank {}, not 1", fam.rank)));
    }
    if s.zero.is_none() {
        return Err(Error::WrongFamily(format!("{fam} has no zero")));
    }
    let mut r = DichotomyReport {
        points: points.len(),
        invertible: 0,
        nilpotent: 0,
        max_index: 0,
        violations: Vec::new(),
    };
    for p in points {
        let inv = is_invertible(s, p)?;
        let nil = is_nilpotent(s, p)?;
        r.invertible += inv as usize;
        if let Some(k) = nil.index {
            r.nilpotent += 1;
            r.max_index = r.max_index.max(k);
        }
        if inv == nil.nilpotent {
            r.violations.push(p.clone());
        }
    }
    Ok(r)
}

/// All integer points of `{-radius..radius}^n`, lexicographically.
pub fn grid(n: usize, radius: i64) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                (-radius..=radius).map(move |v| {
                    let mut q = p.clone();
                    q.push(Rational::from_integer(v.into()));
                    q
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupLikePower {
    pub k: u32,
    pub m: u64,
    #[serde(with = "serde_rational::vec")]
    pub point: Vec<Rational>,
}

/// Whether `a` lies in the unit-group orbit of an idempotent.
fn is_group_like(s: &MonoidStructure, a: &[Rational], idem: &[Vec<Rational>]) -> Result<bool> {
    match units(s)? {
        Units::Algebra => {
            let a2 = s.multiply(a, a)?;
            Ok(s.left_multiplication(a)?.rank() == s.left_multiplication(&a2)?.rank())
        }
        Units::Coordinates(idx) => {
            let pattern = |p: &[Rational]| idx.iter().map(|&i| !p[i].is_zero()).collect::<Vec<_>>();
            let want = pattern(a);
            for e in idem.iter().filter(|e| pattern(e) == want) {
                if s.multiply(a, e)? == a {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
}

/// Smallest `m = 2^k`, `k <= dim`, with `p^m` group-like.
pub fn group_like_power(s: &MonoidStructure, p: &[Rational]) -> Result<GroupLikePower> {
    let idem = idempotents(s)?.points;
    let mut a = p.to_vec();
    for k in 0..=s.dim() as u32 {
        if is_group_like(s, &a, &idem)? {
            return Ok(GroupLikePower { k, m: 1 << k, point: a });
        }
        a = s.multiply(&a, &a)?;
    }
    Err(Error::Internal(format!(
        "no group-like power up to exponent 2^{}",
        s.dim()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{make_a3, make_bilinear, make_corank1, make_toric, A3Kind, AlgebraPreset};
    use crate::rational::q;

    fn pt(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn idempotent_examples() {
        let t = make_toric(3).unwrap();
        assert_eq!(idempotents(&t).unwrap().points.len(), 8);
        let s = make_a3(A3Kind::MbAbcA, 1, 1).unwrap();
        assert_eq!(idempotents(&s).unwrap().points, vec![pt(&[0, 0, 0]), pt(&[1, 0, 0])]);
        let c = make_corank1(4, &[1, 2, 3]).unwrap();
        let set = idempotents(&c).unwrap();
        assert_eq!(set.points.len(), 8);
        assert!(set.points.iter().all(|e| e[3].is_zero()));
        let bare = crate::MonoidStructure::parse(&["x1*y1"]).unwrap();
        assert!(!idempotents(&bare).unwrap().complete);
        assert!(check_idempotent_bound(&c).unwrap().holds);
    }

    #[test]
    fn invertible_and_nilpotent() {
        let s = make_a3(A3Kind::MbAcA, 1, 1).unwrap();
        assert!(is_invertible(&s, &pt(&[2, 1, 1])).unwrap());
        assert!(!is_invertible(&s, &pt(&[0, 5, 7])).unwrap());
        let n = is_nilpotent(&s, &pt(&[0, 1, 1])).unwrap();
        assert_eq!(n.index, Some(1));
        let r0 = crate::catalog::make_rank0(2).unwrap();
        assert_eq!(is_nilpotent(&r0, &pt(&[0, 1])), Err(Error::NoZero));
        assert!(is_invertible(&r0, &pt(&[0, 0])).unwrap());
        let t = make_toric(2).unwrap();
        assert!(!is_nilpotent(&t, &pt(&[0, 1])).unwrap().nilpotent);
        let k = make_bilinear(&AlgebraPreset::Truncated3.constants()).unwrap();
        assert!(is_invertible(&k, &pt(&[1, 4, 0])).unwrap());
        assert!(!is_invertible(&k, &pt(&[0, 4, 0])).unwrap());
    }

    #[test]
    fn dichotomy_on_grid() {
        let s = make_a3(A3Kind::MbAbcA, 2, 3).unwrap();
        let r = dichotomy_rank1(&s, &grid(3, 1)).unwrap();
        assert!(r.holds());
        assert_eq!(r.points, 27);
        assert_eq!(r.invertible + r.nilpotent, 27);
        let t = make_toric(2).unwrap();
        assert!(matches!(dichotomy_rank1(&t, &grid(2, 1)), Err(Error::WrongFamily(_))));
    }

    #[test]
    fn group_like_powers() {
        let s = make_a3(A3Kind::MbAcA, 1, 1).unwrap();
        let g = group_like_power(&s, &pt(&[0, 1, 1])).unwrap();
        assert_eq!((g.m, g.point), (2, pt(&[0, 0, 0])));
        assert_eq!(group_like_power(&s, &pt(&[3, 1, 1])).unwrap().m, 1);
        let c = make_corank1(3, &[1, 2]).unwrap();
        for p in grid(3, 1) {
            assert!(group_like_power(&c, &p).unwrap().m <= 2);
        }
        let k = make_bilinear(&AlgebraPreset::SquareZero.constants()).unwrap();
        assert_eq!(group_like_power(&k, &pt(&[0, 1, 1])).unwrap().m, 2);
    }
}
