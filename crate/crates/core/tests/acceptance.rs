//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Every comparison is exact rational equality; criterion 10
//! re-checks the symbolic verdicts of 1-9 at 5 seeded random points each.

use std::process::ExitCode;
use std::time::Instant;

use affmon::catalog::{
    demazure_action, demazure_solution, make_a2_mba, make_a3, make_a3_mmbca, make_bilinear, make_corank1,
    make_hirzebruch, make_rank0, make_toric, make_truncated, q_poly, A3Kind, AlgebraPreset,
};
use affmon::classify::{
    a3_action, a3_derivations, a3_solution, distinguish_rank1_families, hirzebruch_actions, hirzebruch_grading,
    normal_form, normalize_pair, split_weights, unipotent_stabilizer, validate_pair, verify_additive_action,
    wpp_actions, CommutingPair, PairType, StabilizerSet, Verdict,
};
use affmon::monoids::monoid_from_action;
use affmon::rational::{q, random_rational};
use affmon::structure::{dichotomy_rank1, grid, idempotents};
use affmon::{Derivation, Grading, MonoidStructure, PolyAutomorphism, Polynomial, Rational, Ring};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORACLE_POINTS: usize = 5;

/// Re-evaluates symbolic identities at random points.
struct Oracle {
    rng: ChaCha8Rng,
    checks: usize,
    disagreements: Vec<String>,
}

impl Oracle {
    fn nonzero(&mut self) -> Rational {
        loop {
            let r = random_rational(&mut self.rng, 9, 5);
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// `lhs == rhs` symbolically agrees with equality at the sample points.
    fn polys(&mut self, label: &str, lhs: &Polynomial, rhs: &Polynomial) {
        let ring = lhs.ring().clone();
        let rhs = rhs.rename_by_name(&ring).expect("comparable rings");
        let symbolic = *lhs == rhs;
        let mut numeric = true;
        for _ in 0..ORACLE_POINTS {
            let pt: Vec<Rational> = (0..ring.nvars()).map(|_| self.nonzero()).collect();
            numeric &= lhs.evaluate(&pt).unwrap() == rhs.evaluate(&pt).unwrap();
        }
        self.record(label, symbolic, numeric);
    }

    fn maps(&mut self, label: &str, lhs: &[Polynomial], rhs: &[Polynomial]) {
        for (k, (l, r)) in lhs.iter().zip(rhs).enumerate() {
            self.polys(&format!("{label} component {}", k + 1), l, r);
        }
    }

    fn record(&mut self, label: &str, symbolic: bool, numeric: bool) {
        self.checks += 1;
        if symbolic != numeric {
            self.disagreements.push(format!("{label}: symbolic {symbolic}, numeric {numeric}"));
        }
    }

    /// Monoid axioms re-evaluated on random points.
    fn monoid(&mut self, label: &str, s: &MonoidStructure, symbolic_pass: bool) {
        let n = s.dim();
        let mut numeric = true;
        for _ in 0..ORACLE_POINTS {
            let mut p = || (0..n).map(|_| self.nonzero()).collect::<Vec<_>>();
            let (x, y, z) = (p(), p(), p());
            let xy = s.multiply(&x, &y).unwrap();
            numeric &= xy == s.multiply(&y, &x).unwrap();
            numeric &= s.multiply(&xy, &z).unwrap() == s.multiply(&x, &s.multiply(&y, &z).unwrap()).unwrap();
            if let Some(e) = &s.unit {
                numeric &= s.multiply(e, &x).unwrap() == x;
            }
            if let Some(o) = &s.zero {
                numeric &= s.multiply(o, &x).unwrap() == *o;
            }
        }
        self.record(label, symbolic_pass, numeric);
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn sorted_tuples(len: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<i64>| {
                let lo = t.last().copied().unwrap_or(0);
                (lo..=max).map(move |v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect();
    }
    out
}

fn catalog_matrix() -> Vec<(String, MonoidStructure)> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        out.push((format!("rank0 n={n}"), make_rank0(n).unwrap()));
        out.push((format!("toric n={n}"), make_toric(n).unwrap()));
        out.push((format!("truncated n={n}"), make_truncated(n).unwrap()));
        for b in sorted_tuples(n - 1, 5) {
            out.push((format!("corank1 n={n} b={b:?}"), make_corank1(n, &b).unwrap()));
        }
    }
    for b in 0..=5 {
        out.push((format!("A2_MbA b={b}"), make_a2_mba(b).unwrap()));
        for c in b..=5 {
            out.push((format!("A3_MbAcA b={b} c={c}"), make_a3(A3Kind::MbAcA, b, c).unwrap()));
            out.push((format!("A3_MMbcA b={b} c={c}"), make_a3_mmbca(b, c).unwrap()));
            if b >= 1 {
                out.push((format!("A3_MbAbcA b={b} c={c}"), make_a3(A3Kind::MbAbcA, b, c).unwrap()));
            }
        }
        out.push((format!("hirzebruch d={b} normalized"), make_hirzebruch(b, true).unwrap()));
        if b >= 1 {
            out.push((format!("hirzebruch d={b}"), make_hirzebruch(b, false).unwrap()));
        }
    }
    for preset in AlgebraPreset::ALL {
        out.push((format!("bilinear {}", preset.name()), make_bilinear(&preset.constants()).unwrap()));
    }
    out
}

fn criterion_1(oracle: &mut Oracle) -> Outcome {
    let mut failed = Vec::new();
    let all = catalog_matrix();
    for (i, (name, s)) in all.iter().enumerate() {
        let r = s.verify_all(i as u64).unwrap();
        let declared_ok = r.unit.is_some() && (s.zero.is_none() || r.zero.is_some());
        if !r.all_pass() || !declared_ok {
            failed.push(name.clone());
        }
        oracle.monoid(name, s, r.all_pass());
    }
    outcome(failed.is_empty(), format!("{} monoids, failures: {failed:?}", all.len()))
}

fn criterion_2(oracle: &mut Oracle) -> Outcome {
    let ring = Ring::new(["x1", "y1", "x2", "y2"]);
    let v = |i| Polynomial::var(&ring, i);
    let mut bad = Vec::new();
    let mut count = 0;
    for b in 1..=8i64 {
        for c in b..=8 {
            let (d, e) = split_weights(b, c).unwrap();
            let qp = q_poly(b, c).unwrap();
            let lhs = &(&v(0) * &v(1)).pow((b - e) as u32) * &qp;
            let u = &v(0).pow(b as u32) * &v(3);
            let w = &v(1).pow(b as u32) * &v(2);
            let k = (d + 1) as u32;
            let rhs = &(&(&u + &w).pow(k) - &u.pow(k)) - &w.pow(k);
            oracle.polys(&format!("Q_{b},{c}"), &lhs, &rhs);
            if lhs != rhs {
                bad.push((b, c));
            }
            count += 1;
        }
    }
    let q11 = Polynomial::parse(&ring, "2*x2*y2").unwrap();
    let q13 = Polynomial::parse(&ring, "4*x1^2*x2*y2^3 + 6*x1*y1*x2^2*y2^2 + 4*y1^2*x2^3*y2").unwrap();
    let examples = q_poly(1, 1).unwrap() == q11 && q_poly(1, 3).unwrap() == q13;
    oracle.polys("Q_1,1 example", &q_poly(1, 1).unwrap(), &q11);
    oracle.polys("Q_1,3 example", &q_poly(1, 3).unwrap(), &q13);
    outcome(
        bad.is_empty() && examples,
        format!("{count} closed forms, mismatches {bad:?}, Q_1,1 and Q_1,3 examples match: {examples}"),
    )
}

/// `φ(α)∘φ(β)` against `φ(α+β)` for every parameter of `action`.
fn group_law(oracle: &mut Oracle, label: &str, action: &PolyAutomorphism) -> bool {
    let params: Vec<String> = action.params().to_vec();
    let fresh: Vec<String> = params.iter().map(|p| format!("{p}_b")).collect();
    let renames: Vec<(&str, &str)> = params.iter().map(String::as_str).zip(fresh.iter().map(String::as_str)).collect();
    let lhs = action.compose(&action.rename_params(&renames).unwrap()).unwrap();
    let ring = lhs.ring().clone();
    let var = |n: &str| Polynomial::var(&ring, ring.index_of(n).unwrap());
    let sums: Vec<(&str, Polynomial)> = params.iter().zip(&fresh).map(|(p, f)| (p.as_str(), &var(p) + &var(f))).collect();
    let rhs = action.embed(&ring).unwrap().substitute_params(&sums).unwrap();
    let rhs: Vec<Polynomial> = rhs.components().iter().map(|c| c.rename_by_name(&ring).unwrap()).collect();
    oracle.maps(label, lhs.components(), &rhs);
    lhs.components() == rhs.as_slice()
}

fn criterion_3(oracle: &mut Oracle) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=4usize {
        for b in 0..=5i64 {
            let ring = Ring::indexed("x", n);
            let mut e = vec![0i32; n];
            e[0] = b as i32;
            let delta = Derivation::partial_times(&ring, n, n - 1, Polynomial::monomial(&ring, &e));
            let mut w = vec![1i64; n];
            if b >= 1 {
                w[n - 1] = b;
            }
            let phi = delta.exp_action("a", &Grading::z(&w)).unwrap();
            let label = format!("root n={n} b={b}");
            if !group_law(oracle, &label, &phi) {
                bad.push(label);
            }
            count += 1;
        }
    }
    for kind in [A3Kind::MbAcA, A3Kind::MbAbcA] {
        for b in 1..=4i64 {
            for c in b..=4 {
                let (d1, d2) = a3_derivations(kind, b, c).unwrap();
                let ring = Ring::indexed("x", 3).extended(&["a1", "a2"]);
                let a1 = Polynomial::var(&ring, 3);
                let a2 = Polynomial::var(&ring, 4);
                let sum = d1
                    .embed(&ring)
                    .unwrap()
                    .scale(&a1)
                    .unwrap()
                    .try_add(&d2.embed(&ring).unwrap().scale(&a2).unwrap())
                    .unwrap();
                let phi = sum.exp_map(&Grading::z(&[1, b, c])).unwrap();
                let label = format!("{kind:?} b={b} c={c}");
                if !group_law(oracle, &label, &phi) {
                    bad.push(label);
                }
                count += 1;
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} exponentials, failures {bad:?}"))
}

fn criterion_4(oracle: &mut Oracle) -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=4usize {
        for b in sorted_tuples(n - 1, 4) {
            let action = demazure_action(&b).unwrap();
            let mut base = vec![q(1); n];
            base[n - 1] = q(0);
            let built = monoid_from_action(&action, &base, &demazure_solution(&b)).unwrap();
            let want = make_corank1(n, &b).unwrap();
            let label = format!("corank1 n={n} b={b:?}");
            oracle.maps(&label, built.mu().components(), want.mu().components());
            if built.mu() != want.mu() || built.unit != want.unit {
                bad.push(label);
            }
            count += 1;
        }
    }
    for kind in [A3Kind::MbAbcA, A3Kind::MbAcA] {
        for b in 1..=4i64 {
            for c in b..=4 {
                let action = a3_action(kind, b, c).unwrap();
                let built = monoid_from_action(&action, &[q(1), q(0), q(0)], &a3_solution(kind, b, c).unwrap()).unwrap();
                let want = make_a3(kind, b, c).unwrap();
                let label = format!("{kind:?} b={b} c={c}");
                oracle.maps(&label, built.mu().components(), want.mu().components());
                if built.mu() != want.mu() {
                    bad.push(label);
                }
                count += 1;
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} round trips, failures {bad:?}"))
}

fn x_mono(ring: &std::sync::Arc<Ring>, e: [i64; 3]) -> Polynomial {
    Polynomial::monomial(ring, &e.map(|v| v as i32))
}

/// A pair `δ_i(x2) = β_i x1^b`, `δ_i(x3) = γ_i x1^c + β_i Σ ξ_l x1^{c-bl} x2^l`;
/// it is of the first type exactly when `ξ_d ≠ 0`.
fn random_pair(rng: &mut ChaCha8Rng, b: i64, c: i64, top_zero: bool) -> CommutingPair {
    let (d, _) = split_weights(b, c).unwrap();
    let ring = Ring::indexed("x", 3);
    loop {
        let small = |rng: &mut ChaCha8Rng| random_rational(rng, 4, 3);
        let beta = [small(rng), small(rng)];
        let gamma = [small(rng), small(rng)];
        let mut xi: Vec<Rational> = (1..=d).map(|_| small(rng)).collect();
        if top_zero {
            *xi.last_mut().unwrap() = Rational::zero();
        } else if xi.last().unwrap().is_zero() {
            continue;
        }
        let mut p = Polynomial::zero(&ring);
        for (l, x) in xi.iter().enumerate() {
            let l = l as i64 + 1;
            p = &p + &x_mono(&ring, [c - b * l, l, 0]).scale(x);
        }
        let delta = |i: usize| {
            Derivation::new(
                &ring,
                vec![
                    Polynomial::zero(&ring),
                    x_mono(&ring, [b, 0, 0]).scale(&beta[i]),
                    &x_mono(&ring, [c, 0, 0]).scale(&gamma[i]) + &p.scale(&beta[i]),
                ],
            )
            .unwrap()
        };
        let pair = CommutingPair::new([1, b, c], delta(0), delta(1)).unwrap();
        if validate_pair(&pair).is_valid() {
            return pair;
        }
    }
}

/// A random degree-preserving triangular automorphism and its inverse.
fn random_triangular(rng: &mut ChaCha8Rng, b: i64, c: i64) -> (PolyAutomorphism, PolyAutomorphism) {
    let (d, _) = split_weights(b, c).unwrap();
    let ring = Ring::indexed("x", 3);
    let unit = |rng: &mut ChaCha8Rng| loop {
        let r = random_rational(rng, 3, 2);
        if !r.is_zero() {
            return r;
        }
    };
    let x1 = x_mono(&ring, [1, 0, 0]).scale(&unit(rng));
    let x2 = &x_mono(&ring, [0, 1, 0]).scale(&unit(rng)) + &x_mono(&ring, [b, 0, 0]).scale(&random_rational(rng, 3, 2));
    let mut x3 = x_mono(&ring, [0, 0, 1]).scale(&unit(rng));
    for l in 0..=d {
        x3 = &x3 + &x_mono(&ring, [c - b * l, l, 0]).scale(&random_rational(rng, 3, 2));
    }
    let fwd = PolyAutomorphism::new(3, &ring, vec![x1, x2, x3]).unwrap();
    let inv = fwd.triangular_inverse().unwrap();
    (fwd, inv)
}

fn criterion_5(oracle: &mut Oracle) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut bad = Vec::new();
    let mut count = 0;
    for b in 1..=4i64 {
        for c in b..=4 {
            for trial in 0..100 {
                let top_zero = trial % 2 == 1;
                let expected = if top_zero { PairType::Type2 } else { PairType::Type1 };
                let base = random_pair(&mut rng, b, c, top_zero);
                let (f, g) = random_triangular(&mut rng, b, c);
                let pair = base.conjugate(&f, &g).unwrap();
                let label = format!("({b},{c}) trial {trial}");
                let r = match normalize_pair(&pair) {
                    Ok(r) => r,
                    Err(e) => {
                        bad.push(format!("{label}: {e}"));
                        continue;
                    }
                };
                let conj = pair.conjugate(&r.forward, &r.inverse).unwrap();
                for (u, v) in conj.deltas().iter().zip(r.normalized.deltas()) {
                    oracle.maps(&label, u.images(), v.images());
                }
                let mut ok = conj == r.normalized && validate_pair(&r.normalized).is_valid() && r.kind == expected;
                ok &= normal_form(r.kind, [1, b, c], &r.beta, &r.gamma).unwrap() == r.normalized;
                let again = normalize_pair(&r.normalized).unwrap();
                ok &= again.kind == r.kind && again.forward.is_identity() && again.normalized == r.normalized;
                let (f2, g2) = random_triangular(&mut rng, b, c);
                let moved = r.normalized.conjugate(&f2, &g2).unwrap();
                ok &= normalize_pair(&moved).map(|m| m.kind) == Ok(r.kind);
                if !ok {
                    bad.push(label);
                }
                count += 1;
            }
        }
    }
    outcome(bad.is_empty(), format!("{count} pairs, failures {:?}", &bad[..bad.len().min(5)]))
}

fn fixes(oracle: &mut Oracle, kind: A3Kind, b: i64, c: i64, f: &Polynomial, a1: Rational, a2: Rational) -> bool {
    let phi = a3_action(kind, b, c)
        .unwrap()
        .specialize(&[("t", q(1)), ("a1", a1), ("a2", a2)])
        .unwrap();
    let moved = phi.pull_back(f).unwrap();
    oracle.polys("stabilizer point", &moved, f);
    moved == *f
}

fn criterion_6(oracle: &mut Oracle) -> Outcome {
    let mut bad = Vec::new();
    for b in 1..=4i64 {
        for c in b..=4 {
            let rep = distinguish_rank1_families(b, c, &[q(0), q(1), q(2)]).unwrap();
            let q_lines = &rep.families[0].lines;
            let plain = &rep.families[1].lines;
            if rep.verdict != Verdict::NonIsomorphic || q_lines.len() != 1 || plain.len() < 3 {
                bad.push(format!("distinguish ({b},{c})"));
            }
            for fam in &rep.families {
                let kind = if fam.family == A3Kind::MbAbcA.tag() { A3Kind::MbAbcA } else { A3Kind::MbAcA };
                for probe in &fam.probes {
                    if let Some((u, v)) = probe.set.direction() {
                        let f = probe.element_poly();
                        if !fixes(oracle, kind, b, c, &f, u * q(3), v * q(3)) {
                            bad.push(format!("unsound stabilizer ({b},{c}) {}", probe.element));
                        }
                    }
                }
            }
            let (d, _) = split_weights(b, c).unwrap();
            let zeros = vec![q(0); d as usize];
            let mut some = zeros.clone();
            some[0] = q(1);
            let cases = [
                (q(1), zeros.clone(), StabilizerSet::Origin),
                (q(0), some, StabilizerSet::Line { alpha1: q(1), alpha2: q(0) }),
                (q(0), zeros, StabilizerSet::Plane),
            ];
            for (lambda, ls, want) in cases {
                let r = unipotent_stabilizer(A3Kind::MbAbcA, b, c, &lambda, &ls).unwrap();
                if r.set != want {
                    bad.push(format!("case {want} at ({b},{c}) gave {}", r.set));
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("10 weight pairs x (verdict + 3 cases), failures {bad:?}"))
}

fn criterion_7() -> Outcome {
    let count = |s: &MonoidStructure| idempotents(s).unwrap().points.len();
    let mut checks: Vec<(String, usize, usize)> = vec![
        ("2M".into(), count(&make_toric(2).unwrap()), 4),
        ("3M".into(), count(&make_toric(3).unwrap()), 8),
    ];
    for b in 0..=5i64 {
        for c in b..=5 {
            if b >= 1 {
                checks.push((format!("MbAbcA({b},{c})"), count(&make_a3(A3Kind::MbAbcA, b, c).unwrap()), 2));
            }
            checks.push((format!("MbAcA({b},{c})"), count(&make_a3(A3Kind::MbAcA, b, c).unwrap()), 2));
            checks.push((format!("MMbcA({b},{c})"), count(&make_a3_mmbca(b, c).unwrap()), 4));
        }
    }
    for d in 1..=3 {
        checks.push((format!("hirzebruch({d}, normalized)"), count(&make_hirzebruch(d, true).unwrap()), 4));
        checks.push((format!("hirzebruch({d})"), count(&make_hirzebruch(d, false).unwrap()), 4));
    }
    for n in 2..=4usize {
        for b in sorted_tuples(n - 1, 3).into_iter().filter(|b| b.iter().all(|&x| x > 0)) {
            checks.push((format!("corank1({n},{b:?})"), count(&make_corank1(n, &b).unwrap()), 1 << (n - 1)));
        }
    }
    let bad: Vec<_> = checks.iter().filter(|(_, got, want)| got != want).collect();
    outcome(bad.is_empty(), format!("{} counts, mismatches {bad:?}", checks.len()))
}

fn criterion_8(oracle: &mut Oracle) -> Outcome {
    let pts = grid(3, 2);
    let mut bad = Vec::new();
    let mut total = 0;
    for kind in [A3Kind::MbAcA, A3Kind::MbAbcA] {
        for b in 1..=3i64 {
            for c in b..=3 {
                let s = make_a3(kind, b, c).unwrap();
                let r = dichotomy_rank1(&s, &pts).unwrap();
                total += r.points;
                if !r.holds() || r.max_index as usize > s.dim() {
                    bad.push(format!("{kind:?}({b},{c})"));
                }
                // nilpotent points are exactly those with x1 = 0; check one square symbolically
                let ring = s.ring().clone();
                let x1 = Polynomial::var(&ring, 0);
                let sq: Vec<Polynomial> = s
                    .mu()
                    .components()
                    .iter()
                    .map(|p| {
                        let imgs: Vec<Polynomial> =
                            (0..3).map(|i| Polynomial::var(&ring, i)).chain((0..3).map(|i| Polynomial::var(&ring, i))).collect();
                        p.compose(&ring, &imgs).unwrap()
                    })
                    .collect();
                oracle.polys("square keeps an x1 factor", &sq[0], &(&x1 * &x1));
            }
        }
    }
    outcome(bad.is_empty(), format!("{total} grid points, violations {bad:?}"))
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    for (b, c) in [(1, 1), (1, 2), (2, 3), (3, 5)] {
        for (i, a) in wpp_actions(b, c).unwrap().iter().enumerate() {
            let r = verify_additive_action(a, &Grading::z(&[1, b, c]), 9).unwrap();
            if !r.all_pass() {
                bad.push(format!("wpp({b},{c}) #{} {:?}", i + 1, r.failed()));
            }
        }
    }
    for d in 1..=3 {
        for (i, a) in hirzebruch_actions(d).unwrap().iter().enumerate() {
            let r = verify_additive_action(a, &hirzebruch_grading(d), 9).unwrap();
            if !r.all_pass() {
                bad.push(format!("hirzebruch({d}) #{} {:?}", i + 1, r.failed()));
            }
        }
    }
    outcome(bad.is_empty(), format!("8 wpp + 6 hirzebruch actions, failures {bad:?}"))
}

fn main() -> ExitCode {
    let mut oracle = Oracle {
        rng: ChaCha8Rng::seed_from_u64(10),
        checks: 0,
        disagreements: Vec::new(),
    };
    let mut results: Vec<(u8, &str, Outcome, f64)> = Vec::new();
    let mut run = |id: u8, name: &'static str, f: &mut dyn FnMut(&mut Oracle) -> Outcome, o: &mut Oracle| {
        let t = Instant::now();
        let out = f(o);
        results.push((id, name, out, t.elapsed().as_secs_f64()));
    };
    run(1, "catalog axiom suite", &mut criterion_1, &mut oracle);
    run(2, "Q_{b,c} closed form", &mut criterion_2, &mut oracle);
    run(3, "exponential group law", &mut criterion_3, &mut oracle);
    run(4, "embedding round trip", &mut criterion_4, &mut oracle);
    run(5, "normalization soundness", &mut criterion_5, &mut oracle);
    run(6, "non-isomorphism witness", &mut criterion_6, &mut oracle);
    run(7, "idempotent counts", &mut |_| criterion_7(), &mut oracle);
    run(8, "invertible/nilpotent dichotomy", &mut criterion_8, &mut oracle);
    run(9, "additive action verification", &mut |_| criterion_9(), &mut oracle);
    let agree = oracle.disagreements.is_empty() && oracle.checks > 0;
    results.push((
        10,
        "oracle agreement",
        outcome(
            agree,
            format!(
                "{} identities x {ORACLE_POINTS} points, disagreements {:?}",
                oracle.checks, oracle.disagreements
            ),
        ),
        0.0,
    ));

    let mut all = true;
    for (id, name, out, secs) in &results {
        all &= out.pass;
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id:>2}: {name} ({secs:.1}s) - {}", out.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
