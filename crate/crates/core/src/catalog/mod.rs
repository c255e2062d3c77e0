//! Constructors for the classified families of commutative monoids on `A^n`
//! and for the named examples built from algebras and toric actions.

mod algebra;
mod families;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use algebra::{make_bilinear, make_truncated_poly_algebra, AlgebraPreset, AlgebraStructureConstants};
pub use families::{
    demazure_action, demazure_solution, make_a2_mba, make_a3, make_a3_mmbca, make_corank1, make_hirzebruch,
    make_rank0, make_toric, make_truncated, q_poly, A3Kind,
};

/// Isomorphism-class families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    /// The vector group `G_a^n`.
    #[serde(rename = "rank0_nA")]
    Rank0,
    /// The torus closure `M^n`.
    #[serde(rename = "toric_nM")]
    Toric,
    /// Demazure-root monoids `x^b y_n + y^b x_n`.
    #[serde(rename = "corank1")]
    Corank1,
    #[serde(rename = "A2_MbA")]
    A2MbA,
    #[serde(rename = "A3_MbAcA")]
    A3MbAcA,
    #[serde(rename = "A3_MbAbcA")]
    A3MbAbcA,
    #[serde(rename = "A3_MMbcA")]
    A3MMbcA,
    /// The multiplicative monoid of a commutative algebra.
    #[serde(rename = "bilinear_algebra")]
    Bilinear,
    /// Monoids on `A^4` from additive actions on Hirzebruch surfaces.
    #[serde(rename = "hirzebruch")]
    Hirzebruch,
    /// `K[T]/(T^n)`.
    #[serde(rename = "local_truncated")]
    LocalTruncated,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 10] = [
        FamilyTag::Rank0,
        FamilyTag::Toric,
        FamilyTag::Corank1,
        FamilyTag::A2MbA,
        FamilyTag::A3MbAcA,
        FamilyTag::A3MbAbcA,
        FamilyTag::A3MMbcA,
        FamilyTag::Bilinear,
        FamilyTag::Hirzebruch,
        FamilyTag::LocalTruncated,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Rank0 => "rank0_nA",
            FamilyTag::Toric => "toric_nM",
            FamilyTag::Corank1 => "corank1",
            FamilyTag::A2MbA => "A2_MbA",
            FamilyTag::A3MbAcA => "A3_MbAcA",
            FamilyTag::A3MbAbcA => "A3_MbAbcA",
            FamilyTag::A3MMbcA => "A3_MMbcA",
            FamilyTag::Bilinear => "bilinear_algebra",
            FamilyTag::Hirzebruch => "hirzebruch",
            FamilyTag::LocalTruncated => "local_truncated",
        }
    }

    /// Layout of the `params` vector.
    pub fn params_layout(self) -> &'static str {
        match self {
            FamilyTag::Rank0 | FamilyTag::Toric | FamilyTag::LocalTruncated => "[n]",
            FamilyTag::Corank1 => "[n, b1, ..., b(n-1)]",
            FamilyTag::A2MbA => "[b]",
            FamilyTag::A3MbAcA | FamilyTag::A3MbAbcA | FamilyTag::A3MMbcA => "[b, c]",
            FamilyTag::Bilinear => "[n, rank]",
            FamilyTag::Hirzebruch => "[d, normalized (0 or 1)]",
        }
    }

    pub fn constraints(self) -> &'static str {
        match self {
            FamilyTag::Rank0 | FamilyTag::Toric | FamilyTag::LocalTruncated => "n >= 1",
            FamilyTag::Corank1 => "n >= 1, 0 <= b1 <= ... <= b(n-1)",
            FamilyTag::A2MbA => "b >= 0",
            FamilyTag::A3MbAcA | FamilyTag::A3MMbcA => "0 <= b <= c",
            FamilyTag::A3MbAbcA => "1 <= b <= c",
            FamilyTag::Bilinear => "symmetric, associative structure constants with a unit",
            FamilyTag::Hirzebruch => "d >= 0; d >= 1 when not normalized",
        }
    }
}

impl std::fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A catalog entry: family tag, integer parameters, and the rank/corank of
/// the group of invertible elements as listed for that family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDescriptor")]
pub struct FamilyDescriptor {
    pub tag: FamilyTag,
    pub params: Vec<i64>,
    pub rank: usize,
    pub corank: usize,
}

#[derive(Deserialize)]
struct RawDescriptor {
    tag: FamilyTag,
    params: Vec<i64>,
    rank: Option<usize>,
    corank: Option<usize>,
}

impl TryFrom<RawDescriptor> for FamilyDescriptor {
    type Error = Error;

    fn try_from(raw: RawDescriptor) -> Result<Self> {
        let d = FamilyDescriptor::new(raw.tag, raw.params)?;
        if raw.rank.is_some_and(|r| r != d.rank) || raw.corank.is_some_and(|c| c != d.corank) {
            return Err(Error::Parse(format!(
                "rank/corank disagree with family {}",
                d.tag
            )));
        }
        Ok(d)
    }
}

fn param_count(tag: FamilyTag, params: &[i64], want: usize) -> Result<()> {
    if params.len() != want {
        return Err(Error::Constraint(format!(
            "{tag} expects params {}",
            tag.params_layout()
        )));
    }
    Ok(())
}

impl FamilyDescriptor {
    /// Builds the descriptor and assigns rank/corank from the family.
    pub fn new(tag: FamilyTag, params: Vec<i64>) -> Result<FamilyDescriptor> {
        let positive_n = |p: &[i64]| -> Result<usize> {
            match p.first() {
                Some(&n) if n >= 1 => Ok(n as usize),
                _ => Err(Error::Constraint(format!("{tag} needs n >= 1"))),
            }
        };
        let (rank, corank) = match tag {
            FamilyTag::Rank0 => {
                param_count(tag, &params, 1)?;
                (0, positive_n(&params)?)
            }
            FamilyTag::Toric => {
                param_count(tag, &params, 1)?;
                (positive_n(&params)?, 0)
            }
            FamilyTag::LocalTruncated => {
                param_count(tag, &params, 1)?;
                (1, positive_n(&params)? - 1)
            }
            FamilyTag::Corank1 => {
                let n = positive_n(&params)?;
                param_count(tag, &params, n)?;
                (n - 1, 1)
            }
            FamilyTag::A2MbA => {
                param_count(tag, &params, 1)?;
                (1, 1)
            }
            FamilyTag::A3MbAcA | FamilyTag::A3MbAbcA => {
                param_count(tag, &params, 2)?;
                (1, 2)
            }
            FamilyTag::A3MMbcA => {
                param_count(tag, &params, 2)?;
                (2, 1)
            }
            FamilyTag::Bilinear => {
                param_count(tag, &params, 2)?;
                let n = positive_n(&params)?;
                let r = params[1];
                if r < 0 || r as usize > n {
                    return Err(Error::Constraint("bilinear rank must lie in 0..=n".into()));
                }
                (r as usize, n - r as usize)
            }
            FamilyTag::Hirzebruch => {
                param_count(tag, &params, 2)?;
                (2, 2)
            }
        };
        Ok(FamilyDescriptor {
            tag,
            params,
            rank,
            corank,
        })
    }

    pub fn dim(&self) -> usize {
        self.rank + self.corank
    }
}

impl std::fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ps: Vec<String> = self.params.iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.tag, ps.join(","))
    }
}

/// One row of `catalog list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyInfo {
    pub name: &'static str,
    pub tag: &'static str,
    pub params: &'static str,
    pub constraints: &'static str,
    pub formula: &'static str,
}

/// The families reachable from the command line, in a fixed order.
pub fn family_list() -> Vec<FamilyInfo> {
    let row = |name, tag: FamilyTag, constraints, formula| FamilyInfo {
        name,
        tag: tag.as_str(),
        params: tag.params_layout(),
        constraints,
        formula,
    };
    vec![
        row("rank0", FamilyTag::Rank0, "--n N, N >= 1", "(x1 + y1, ..., xn + yn)"),
        row("toric", FamilyTag::Toric, "--n N, N >= 1", "(x1*y1, ..., xn*yn)"),
        row(
            "corank1",
            FamilyTag::Corank1,
            "--n N --b B1,...,B(N-1), 0 <= B1 <= ... <= B(N-1)",
            "(x1*y1, ..., x(n-1)*y(n-1), x^b*yn + y^b*xn)",
        ),
        row("a2-mba", FamilyTag::A2MbA, "--b B, B >= 0", "(x1*y1, x1^b*y2 + y1^b*x2)"),
        row(
            "a3-mbaca",
            FamilyTag::A3MbAcA,
            "--b B --c C, 0 <= B <= C",
            "(x1*y1, x1^b*y2 + y1^b*x2, x1^c*y3 + y1^c*x3)",
        ),
        row(
            "a3-mbabca",
            FamilyTag::A3MbAbcA,
            "--b B --c C, 1 <= B <= C",
            "(x1*y1, x1^b*y2 + y1^b*x2, x1^c*y3 + y1^c*x3 + Q_{b,c})",
        ),
        row(
            "a3-mmbca",
            FamilyTag::A3MMbcA,
            "--b B --c C, 0 <= B <= C",
            "(x1*y1, x2*y2, x1^b*x2^c*y3 + y1^b*y2^c*x3)",
        ),
        row(
            "bilinear",
            FamilyTag::Bilinear,
            "--algebra kkk|k-kt2|kt1t2|kt3",
            "(sum_ij gamma^k_ij xi*yj)_k",
        ),
        row(
            "truncated",
            FamilyTag::LocalTruncated,
            "--n N, N >= 1",
            "multiplication of K[T]/(T^n)",
        ),
        row(
            "hirzebruch",
            FamilyTag::Hirzebruch,
            "--d D [--normalized true|false], D >= 1 unless normalized",
            "(x1*y1, x2*y2, x1*y3 + y1*x3, x1^d*x2*y4 + y1^d*y2*x4 [+ x1^(d-1)*y1^(d-1)*x2*y2*x3*y3])",
        ),
    ]
}

/// Parameters for [`build_family`]; which ones are read depends on the family.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FamilyArgs {
    pub n: Option<usize>,
    pub b: Vec<i64>,
    pub c: Option<i64>,
    pub d: Option<i64>,
    /// Hirzebruch only; defaults to true.
    pub normalized: Option<bool>,
    pub algebra: Option<AlgebraStructureConstants>,
}

impl FamilyArgs {
    fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T> {
        v.ok_or_else(|| Error::Constraint(format!("{family} needs {flag}")))
    }

    fn single_b(&self, family: &str) -> Result<i64> {
        match self.b.as_slice() {
            [b] => Ok(*b),
            [] => Err(Error::Constraint(format!("{family} needs b"))),
            _ => Err(Error::Constraint(format!("{family} takes a single b"))),
        }
    }
}

/// Builds a monoid by its [`family_list`] name.
pub fn build_family(name: &str, a: &FamilyArgs) -> Result<crate::MonoidStructure> {
    match name {
        "rank0" => make_rank0(FamilyArgs::need(a.n, "n", name)?),
        "toric" => make_toric(FamilyArgs::need(a.n, "n", name)?),
        "truncated" => make_truncated(FamilyArgs::need(a.n, "n", name)?),
        "corank1" => {
            let n = a.n.unwrap_or(a.b.len() + 1);
            if n != a.b.len() + 1 {
                return Err(Error::Constraint(format!(
                    "corank1 with n = {n} needs {} values of b",
                    n.saturating_sub(1)
                )));
            }
            make_corank1(n, &a.b)
        }
        "a2-mba" => make_a2_mba(a.single_b(name)?),
        "a3-mbaca" => make_a3(A3Kind::MbAcA, a.single_b(name)?, FamilyArgs::need(a.c, "c", name)?),
        "a3-mbabca" => make_a3(A3Kind::MbAbcA, a.single_b(name)?, FamilyArgs::need(a.c, "c", name)?),
        "a3-mmbca" => make_a3_mmbca(a.single_b(name)?, FamilyArgs::need(a.c, "c", name)?),
        "hirzebruch" => make_hirzebruch(FamilyArgs::need(a.d, "d", name)?, a.normalized.unwrap_or(true)),
        "bilinear" => make_bilinear(
            a.algebra
                .as_ref()
                .ok_or_else(|| Error::Constraint("bilinear needs an algebra".into()))?,
        ),
        other => Err(Error::Constraint(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_json() {
        let d = FamilyDescriptor::new(FamilyTag::A3MbAbcA, vec![1, 3]).unwrap();
        assert_eq!((d.rank, d.corank), (1, 2));
        let js = serde_json::to_string(&d).unwrap();
        assert_eq!(js, r#"{"tag":"A3_MbAbcA","params":[1,3],"rank":1,"corank":2}"#);
        let back: FamilyDescriptor = serde_json::from_str(&js).unwrap();
        assert_eq!(back, d);
        let short: FamilyDescriptor = serde_json::from_str(r#"{"tag":"toric_nM","params":[3]}"#).unwrap();
        assert_eq!((short.rank, short.corank), (3, 0));
        assert!(serde_json::from_str::<FamilyDescriptor>(r#"{"tag":"toric_nM","params":[3],"rank":1}"#).is_err());
        assert!(FamilyDescriptor::new(FamilyTag::Corank1, vec![3, 1]).is_err());
    }

    #[test]
    fn build_by_name() {
        for row in family_list() {
            let args = match row.name {
                "rank0" | "toric" | "truncated" => FamilyArgs { n: Some(2), ..Default::default() },
                "corank1" => FamilyArgs { b: vec![0, 2], ..Default::default() },
                "a2-mba" => FamilyArgs { b: vec![1], ..Default::default() },
                "hirzebruch" => FamilyArgs { d: Some(1), ..Default::default() },
                "bilinear" => FamilyArgs {
                    algebra: Some(AlgebraPreset::Truncated3.constants()),
                    ..Default::default()
                },
                _ => FamilyArgs { b: vec![1], c: Some(2), ..Default::default() },
            };
            let m = build_family(row.name, &args).unwrap();
            assert_eq!(m.family.as_ref().unwrap().tag.as_str(), row.tag, "{}", row.name);
        }
        assert!(build_family("a3-mbaca", &FamilyArgs { b: vec![1], ..Default::default() }).is_err());
        assert!(build_family("corank1", &FamilyArgs { n: Some(4), b: vec![1], ..Default::default() }).is_err());
        assert!(build_family("nope", &FamilyArgs::default()).is_err());
    }
}
