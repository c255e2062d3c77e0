use std::fmt::Write as _;

use affmon::catalog::family_list;
use affmon::classify::{
    distinguish_rank1_families, normalize_pair, validate_pair, verify_additive_action, wpp_actions, ActionReport,
    CommutingPair, PairJson, Verdict,
};
use affmon::poly::PolyRepr;
use affmon::rational::format_rational;
use affmon::structure::{
    check_idempotent_bound, dichotomy_rank1, grid, group_like_power, idempotents, is_invertible, is_nilpotent,
};
use affmon::{Grading, MonoidStructure, PolyAutomorphism, Rational};
use serde::Deserialize;
use serde_json::json;

use crate::source::{build, monoid, parse_point, read_input};
use crate::{CatalogCmd, Cli, CliError, ClassifyCmd, Command, Report, StructureCmd};

type Out = Result<Report, CliError>;

fn report(json: serde_json::Value, text: String, ok: bool) -> Out {
    Ok(Report {
        json,
        text,
        status: if ok { 0 } else { 1 },
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report serializes")
}

fn point_str(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Catalog(CatalogCmd::List) => catalog_list(),
        Command::Catalog(CatalogCmd::Build { family, params }) => {
            let s = build(family, params)?;
            let json: serde_json::Value =
                serde_json::from_str(&s.to_json_string()).map_err(|e| CliError(e.to_string()))?;
            report(json, monoid_text(&s), true)
        }
        Command::Verify { input } => {
            let text = read_input(input)?;
            if text.trim().is_empty() {
                return Err(CliError(format!("{}: empty input", input.display())));
            }
            let s = MonoidStructure::from_json_str(&text)?;
            verify(&s, cli.seed)
        }
        Command::Classify(cmd) => classify(cmd, cli.seed),
        Command::Structure(cmd) => structure(cmd),
    }
}

fn catalog_list() -> Out {
    let rows = family_list();
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "{:<11} {:<28} {}", r.name, r.constraints, r.formula);
    }
    report(to_value(&rows), text, true)
}

fn monoid_text(s: &MonoidStructure) -> String {
    let mut text = String::new();
    if let Some(f) = &s.family {
        let _ = writeln!(text, "family {f}, rank {}, corank {}", f.rank, f.corank);
    }
    for i in 0..s.dim() {
        let _ = writeln!(text, "mu{} = {}", i + 1, s.component(i));
    }
    if let Some(u) = &s.unit {
        let _ = writeln!(text, "unit {}", point_str(u));
    }
    if let Some(z) = &s.zero {
        let _ = writeln!(text, "zero {}", point_str(z));
    }
    text
}

fn verify(s: &MonoidStructure, seed: u64) -> Out {
    let r = s.verify_all(seed)?;
    let mut text = String::new();
    let checks = [
        ("commutative", Some(&r.commutative)),
        ("associative", Some(&r.associative)),
        ("unit", r.unit.as_ref()),
        ("zero", r.zero.as_ref()),
    ];
    for (name, check) in checks {
        let Some(c) = check else { continue };
        let _ = write!(text, "{name}: {}", if c.holds { "ok" } else { "FAILS" });
        if let Some(w) = &c.witness {
            let _ = write!(
                text,
                " (component {} at {}: {} != {})",
                w.component,
                point_str(&w.point),
                format_rational(&w.left),
                format_rational(&w.right)
            );
        }
        text.push('\n');
    }
    let ok = r.all_pass();
    let mut json = to_value(&r);
    json["all_pass"] = json!(ok);
    report(json, text, ok)
}

fn classify(cmd: &ClassifyCmd, seed: u64) -> Out {
    match cmd {
        ClassifyCmd::Normalize { weights, pair } => {
            let js: PairJson =
                serde_json::from_str(&read_input(pair)?).map_err(|e| CliError(format!("{}: {e}", pair.display())))?;
            let w = match weights.as_deref() {
                Some(&[a, b, c]) => Some([a, b, c]),
                Some(_) => return Err(CliError("--weights takes three values".into())),
                None => None,
            };
            let p = CommutingPair::from_json(&js, w)?;
            let diag = validate_pair(&p);
            if !diag.is_valid() {
                let failures = diag.failures();
                let text = format!("invalid pair: {}\n", failures.join("; "));
                return report(json!({ "valid": false, "diagnostics": diag, "failures": failures }), text, false);
            }
            match normalize_pair(&p) {
                Ok(r) => {
                    let text = format!(
                        "type {}, b = {}, c = {}, d = {}, e = {}\ndelta1 = ({})\ndelta2 = ({})\n",
                        r.kind.number(),
                        r.b,
                        r.c,
                        r.d,
                        r.e,
                        join(r.normalized.delta1().images()),
                        join(r.normalized.delta2().images())
                    );
                    report(r.to_json(), text, true)
                }
                Err(affmon::Error::KernelConditionViolated(msg)) => report(
                    json!({ "valid": false, "failures": [msg.clone()] }),
                    format!("kernel condition violated: {msg}\n"),
                    false,
                ),
                Err(e) => Err(e.into()),
            }
        }
        ClassifyCmd::Distinguish { b, c, samples } => {
            let samples = samples
                .iter()
                .map(|s| affmon::rational::parse_rational(s.trim()))
                .collect::<affmon::Result<Vec<_>>>()?;
            let r = distinguish_rank1_families(*b, *c, &samples)?;
            let mut text = String::new();
            for f in &r.families {
                let lines: Vec<String> = f.lines.iter().map(|l| l.to_string()).collect();
                let _ = writeln!(text, "{}: {} line(s) {}", f.family, f.lines.len(), lines.join(" "));
            }
            let _ = writeln!(text, "verdict: {}", r.verdict);
            let ok = r.verdict == Verdict::NonIsomorphic;
            report(to_value(&r), text, ok)
        }
        ClassifyCmd::Wpp { b, c } => {
            let grading = Grading::z(&[1, *b, *c]);
            let mut entries = Vec::new();
            let mut text = String::new();
            let mut ok = true;
            for (name, action) in ["normalized", "non-normalized"].into_iter().zip(wpp_actions(*b, *c)?) {
                let r = verify_additive_action(&action, &grading, seed)?;
                ok &= r.all_pass();
                let comps: Vec<String> = action.components().iter().map(|p| p.to_string()).collect();
                let _ = writeln!(text, "{name}: ({})  {}", comps.join(", "), action_verdict(&r));
                entries.push(json!({ "name": name, "components": comps, "report": r, "all_pass": r.all_pass() }));
            }
            report(json!({ "weights": [1, b, c], "actions": entries }), text, ok)
        }
        ClassifyCmd::VerifyAction { action } => {
            let js: ActionFile =
                serde_json::from_str(&read_input(action)?).map_err(|e| CliError(format!("{}: {e}", action.display())))?;
            let params: Vec<&str> = js.params.iter().map(String::as_str).collect();
            let ring = affmon::Ring::indexed("x", js.dim).extended(&params);
            let comps = js
                .components
                .iter()
                .map(|c| c.to_poly(&ring))
                .collect::<affmon::Result<Vec<_>>>()?;
            let act = PolyAutomorphism::new(js.dim, &ring, comps)?;
            let grading = match js.weights {
                Weights::Z(w) => Grading::z(&w),
                Weights::Matrix(m) => Grading::from_matrix(m),
            };
            let r = verify_additive_action(&act, &grading, seed)?;
            let ok = r.all_pass();
            let mut json = to_value(&r);
            json["all_pass"] = json!(ok);
            report(json, format!("{}\n", action_verdict(&r)), ok)
        }
    }
}

fn join(ps: &[affmon::Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}

fn action_verdict(r: &ActionReport) -> String {
    if r.all_pass() {
        format!("additive action of rank {}", r.params)
    } else {
        format!("fails: {}", r.failed().join(", "))
    }
}

#[derive(Deserialize)]
struct ActionFile {
    dim: usize,
    #[serde(default)]
    params: Vec<String>,
    components: Vec<PolyRepr>,
    weights: Weights,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Weights {
    Z(Vec<i64>),
    Matrix(Vec<Vec<i64>>),
}

fn structure(cmd: &StructureCmd) -> Out {
    match cmd {
        StructureCmd::Idempotents { source } => {
            let s = monoid(source)?;
            let set = idempotents(&s)?;
            let mut text = String::new();
            let _ = writeln!(text, "{} idempotent(s){}", set.points.len(), if set.complete { "" } else { " among {0,1}-points" });
            for p in &set.points {
                let _ = writeln!(text, "  {}", point_str(p));
            }
            let mut json = json!({ "count": set.points.len(), "idempotents": set });
            let mut ok = true;
            if s.family.is_some() {
                let bound = check_idempotent_bound(&s)?;
                let _ = writeln!(
                    text,
                    "bound 2^{} = {}: {}",
                    bound.rank,
                    bound.lower_bound,
                    if bound.holds { "holds" } else { "FAILS" }
                );
                ok = bound.holds;
                json["bound"] = to_value(&bound);
            }
            report(json, text, ok)
        }
        StructureCmd::Nilpotent { source, point } => {
            let s = monoid(source)?;
            let p = parse_point(point)?;
            check_dim(&s, &p)?;
            let nil = is_nilpotent(&s, &p)?;
            let text = match nil.index {
                Some(k) => format!("{} is nilpotent: p^(2^{k}) = 0\n", point_str(&p)),
                None => format!("{} is not nilpotent\n", point_str(&p)),
            };
            let mut json = to_value(&nil);
            json["point"] = json!(p.iter().map(format_rational).collect::<Vec<_>>());
            report(json, text, true)
        }
        StructureCmd::Dichotomy { source, grid: radius } => {
            if *radius < 0 {
                return Err(CliError("--grid must be non-negative".into()));
            }
            let s = monoid(source)?;
            let pts = grid(s.dim(), *radius);
            let r = dichotomy_rank1(&s, &pts)?;
            let mut text = format!(
                "holds at {}/{} points ({} invertible, {} nilpotent, max index {})\n",
                r.points - r.violations.len(),
                r.points,
                r.invertible,
                r.nilpotent,
                r.max_index
            );
            for v in &r.violations {
                let _ = writeln!(text, "  violation at {}", point_str(v));
            }
            let ok = r.holds();
            let mut json = to_value(&r);
            json["holds"] = json!(ok);
            report(json, text, ok)
        }
        StructureCmd::GroupLike { source, point } => {
            let s = monoid(source)?;
            let p = parse_point(point)?;
            check_dim(&s, &p)?;
            let g = group_like_power(&s, &p)?;
            let text = format!(
                "p^{} = {} is group-like (k = {}){}\n",
                g.m,
                point_str(&g.point),
                g.k,
                if is_invertible(&s, &p)? { ", p invertible" } else { "" }
            );
            report(to_value(&g), text, true)
        }
    }
}

fn check_dim(s: &MonoidStructure, p: &[Rational]) -> Result<(), CliError> {
    if p.len() != s.dim() {
        return Err(CliError(format!("point has {} coordinates, monoid has dimension {}", p.len(), s.dim())));
    }
    Ok(())
}
