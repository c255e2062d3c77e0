use std::io::Read;
use std::path::Path;

use affmon::catalog::{build_family, AlgebraPreset, AlgebraStructureConstants, FamilyArgs};
use affmon::rational::parse_rational;
use affmon::{MonoidStructure, Rational};

use crate::{CliError, FamilyParams, MonoidSource};

pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

pub fn parse_point(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|t| parse_rational(t.trim()).map_err(CliError::from))
        .collect()
}

fn algebra(arg: &str) -> Result<AlgebraStructureConstants, CliError> {
    if let Some(p) = AlgebraPreset::from_name(arg) {
        return Ok(p.constants());
    }
    let text = read_input(Path::new(arg))?;
    serde_json::from_str(&text).map_err(|e| CliError(format!("algebra {arg}: {e}")))
}

pub fn build(family: &str, p: &FamilyParams) -> Result<MonoidStructure, CliError> {
    let args = FamilyArgs {
        n: p.n,
        b: p.b.clone(),
        c: p.c,
        d: p.d,
        normalized: p.normalized,
        algebra: p.algebra.as_deref().map(algebra).transpose()?,
    };
    build_family(family, &args).map_err(|e| match e {
        affmon::Error::Constraint(msg) if msg.starts_with("unknown family") => {
            CliError(format!("{msg} (see `affmon catalog list`)"))
        }
        e => e.into(),
    })
}

pub fn monoid(src: &MonoidSource) -> Result<MonoidStructure, CliError> {
    match (&src.monoid, &src.family) {
        (Some(path), _) => Ok(MonoidStructure::from_json_str(&read_input(path)?)?),
        (None, Some(f)) => build(f, &src.params),
        (None, None) => Err(CliError("give --monoid FILE or --family NAME".into())),
    }
}
