//! Python bindings. Points are sequences of ints, `Fraction`s or strings such
//! as `"-1/2"`; coordinates come back as strings. Reports are plain dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use affmon::catalog::{build_family, family_list, AlgebraPreset, AlgebraStructureConstants, FamilyArgs};
use affmon::classify::{distinguish_rank1_families, normalize_pair, validate_pair, verify_additive_action, wpp_actions, CommutingPair};
use affmon::rational::{format_rational, parse_rational};
use affmon::structure::{dichotomy_rank1, grid, group_like_power, idempotents, is_invertible, is_nilpotent};
use affmon::{Grading, MonoidStructure, Rational};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: serde::Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(v).map_err(err)?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

fn point(p: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    p.iter()
        .map(|x| parse_rational(x.str()?.to_str()?.trim()).map_err(err))
        .collect()
}

fn strs(p: &[Rational]) -> Vec<String> {
    p.iter().map(format_rational).collect()
}

/// A commutative monoid structure on `A^n`.
#[pyclass(name = "Monoid", module = "affmon_py")]
struct PyMonoid {
    inner: MonoidStructure,
}

impl PyMonoid {
    fn check(&self, p: &[Rational]) -> PyResult<()> {
        if p.len() != self.inner.dim() {
            return Err(PyValueError::new_err(format!(
                "point has {} coordinates, monoid has dimension {}",
                p.len(),
                self.inner.dim()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyMonoid {
    /// Builds a catalog family by name, as listed by `family_list()`.
    #[staticmethod]
    #[pyo3(signature = (family, *, n=None, b=None, c=None, d=None, normalized=None, algebra=None))]
    fn build(
        family: &str,
        n: Option<usize>,
        b: Option<Vec<i64>>,
        c: Option<i64>,
        d: Option<i64>,
        normalized: Option<bool>,
        algebra: Option<&str>,
    ) -> PyResult<Self> {
        let algebra = match algebra {
            None => None,
            Some(name) => match AlgebraPreset::from_name(name) {
                Some(p) => Some(p.constants()),
                None => Some(serde_json::from_str::<AlgebraStructureConstants>(name).map_err(err)?),
            },
        };
        let args = FamilyArgs {
            n,
            b: b.unwrap_or_default(),
            c,
            d,
            normalized,
            algebra,
        };
        Ok(PyMonoid {
            inner: build_family(family, &args).map_err(err)?,
        })
    }

    /// Multiplication given by component strings in `x1..xn, y1..yn`.
    #[staticmethod]
    #[pyo3(signature = (components, unit=None, zero=None))]
    fn parse(
        components: Vec<String>,
        unit: Option<Vec<Bound<'_, PyAny>>>,
        zero: Option<Vec<Bound<'_, PyAny>>>,
    ) -> PyResult<Self> {
        let comps: Vec<&str> = components.iter().map(String::as_str).collect();
        let mut m = MonoidStructure::parse(&comps).map_err(err)?;
        if let Some(u) = unit {
            m = m.with_unit(point(&u)?);
        }
        if let Some(z) = zero {
            m = m.with_zero(point(&z)?);
        }
        Ok(PyMonoid { inner: m })
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        Ok(PyMonoid {
            inner: MonoidStructure::from_json_str(s).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn family(&self) -> Option<String> {
        self.inner.family.as_ref().map(|f| f.to_string())
    }

    fn components(&self) -> Vec<String> {
        (0..self.inner.dim()).map(|i| self.inner.component(i).to_string()).collect()
    }

    fn multiply(&self, p: Vec<Bound<'_, PyAny>>, q: Vec<Bound<'_, PyAny>>) -> PyResult<Vec<String>> {
        let (p, q) = (point(&p)?, point(&q)?);
        self.check(&p)?;
        self.check(&q)?;
        Ok(strs(&self.inner.multiply(&p, &q).map_err(err)?))
    }

    /// Axiom report; `all_pass` is added to the dict.
    #[pyo3(signature = (seed=0))]
    fn verify(&self, py: Python<'_>, seed: u64) -> PyResult<Py<PyAny>> {
        let r = self.inner.verify_all(seed).map_err(err)?;
        let mut v = serde_json::to_value(&r).map_err(err)?;
        v["all_pass"] = r.all_pass().into();
        to_py(py, &v)
    }

    fn idempotents(&self) -> PyResult<Vec<Vec<String>>> {
        let set = idempotents(&self.inner).map_err(err)?;
        Ok(set.points.iter().map(|p| strs(p)).collect())
    }

    fn is_invertible(&self, p: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
        let p = point(&p)?;
        self.check(&p)?;
        is_invertible(&self.inner, &p).map_err(err)
    }

    /// The first `k` with `p^(2^k) = 0`, or `None`.
    fn nilpotent_index(&self, p: Vec<Bound<'_, PyAny>>) -> PyResult<Option<u32>> {
        let p = point(&p)?;
        self.check(&p)?;
        Ok(is_nilpotent(&self.inner, &p).map_err(err)?.index)
    }

    /// `(m, p^m)` for the smallest power of two `m` with `p^m` group-like.
    fn group_like_power(&self, p: Vec<Bound<'_, PyAny>>) -> PyResult<(u64, Vec<String>)> {
        let p = point(&p)?;
        self.check(&p)?;
        let g = group_like_power(&self.inner, &p).map_err(err)?;
        Ok((g.m, strs(&g.point)))
    }

    #[pyo3(signature = (radius=2))]
    fn dichotomy(&self, py: Python<'_>, radius: i64) -> PyResult<Py<PyAny>> {
        let r = dichotomy_rank1(&self.inner, &grid(self.inner.dim(), radius)).map_err(err)?;
        to_py(py, &r)
    }

    fn __repr__(&self) -> String {
        match &self.inner.family {
            Some(f) => format!("Monoid({f})"),
            None => format!("Monoid({})", self.components().join(", ")),
        }
    }
}

#[pyfunction]
fn family_names() -> Vec<&'static str> {
    family_list().into_iter().map(|r| r.name).collect()
}

/// Normal form of a commuting pair given by the images of `x1, x2, x3`.
#[pyfunction]
fn normalize(py: Python<'_>, weights: [i64; 3], delta1: Vec<String>, delta2: Vec<String>) -> PyResult<Py<PyAny>> {
    let d1: Vec<&str> = delta1.iter().map(String::as_str).collect();
    let d2: Vec<&str> = delta2.iter().map(String::as_str).collect();
    let pair = CommutingPair::parse(weights, &d1, &d2).map_err(err)?;
    let diag = validate_pair(&pair);
    if !diag.is_valid() {
        return Err(PyValueError::new_err(format!("invalid pair: {}", diag.failures().join("; "))));
    }
    to_py(py, &normalize_pair(&pair).map_err(err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (b, c, samples=None))]
fn distinguish(py: Python<'_>, b: i64, c: i64, samples: Option<Vec<Bound<'_, PyAny>>>) -> PyResult<Py<PyAny>> {
    let samples = match samples {
        Some(s) => point(&s)?,
        None => (0..3).map(|i| Rational::from_integer(i.into())).collect(),
    };
    to_py(py, &distinguish_rank1_families(b, c, &samples).map_err(err)?)
}

/// Both additive actions on `P(1, b, c)` with their verification reports.
#[pyfunction]
#[pyo3(signature = (b, c, seed=0))]
fn wpp(py: Python<'_>, b: i64, c: i64, seed: u64) -> PyResult<Py<PyAny>> {
    let grading = Grading::z(&[1, b, c]);
    let mut out = Vec::new();
    for action in wpp_actions(b, c).map_err(err)? {
        let r = verify_additive_action(&action, &grading, seed).map_err(err)?;
        let comps: Vec<String> = action.components().iter().map(|p| p.to_string()).collect();
        out.push(serde_json::json!({ "components": comps, "all_pass": r.all_pass(), "report": r }));
    }
    to_py(py, &out)
}

#[pymodule]
fn affmon_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonoid>()?;
    m.add_function(wrap_pyfunction!(family_names, m)?)?;
    m.add_function(wrap_pyfunction!(normalize, m)?)?;
    m.add_function(wrap_pyfunction!(distinguish, m)?)?;
    m.add_function(wrap_pyfunction!(wpp, m)?)?;
    Ok(())
}
