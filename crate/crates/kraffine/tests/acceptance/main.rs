//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are reported but do not fail the run; any
//! other failure exits non-zero. Tolerances are exact equality throughout;
//! runtime bounds are pinned per criterion.

mod ak_cases;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use kraffine::arquiver::{build_gamma, CoordQuiver};
use kraffine::commuting::{schur_weyl_quiver, verify_commuting_family, SWDatum};
use kraffine::dorey::{higher_dorey_instances, verify_dominant_multiplicity, DoreyCase};
use kraffine::qchar::{
    classical_dimension, dominant_monomials, kr_highest_monomial, kr_qcharacter_type_a,
};
use kraffine::scalar::neg_q_pow;
use kraffine::tsystem::{convert_identity, tsystem_identities, verify_tsystem_qchar, Convention};
use kraffine::ucoef::{
    ak_ratio_check, canonical_eq_mod_units, ucoef_from_denominators, universal_coefficient, Side,
};
use kraffine::{AffineType, Denominators, Error, QMonomial, RootMultiset};
use num_bigint::BigInt;

const CAP: usize = 2_000_000;

/// Criteria that cannot be met as specified; see the decisions ledger.
const KNOWN_RED: &[u32] = &[4, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome {
            pass,
            detail: detail.into(),
        }
    }
}

fn ty(s: &str) -> AffineType {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn within(limit: Duration, o: Outcome, start: Instant) -> Outcome {
    let t = start.elapsed();
    if t > limit {
        Outcome::new(
            false,
            format!("{} (took {t:.2?}, limit {limit:?})", o.detail),
        )
    } else {
        o
    }
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 12] = [
        (1, "G2 golden table", c01_g2_golden),
        (2, "denominator symmetry sweep", c02_symmetry),
        (3, "factorized normal form", c03_normal_form),
        (
            4,
            "D^(2) substitution vs explicit formulas",
            c04_d2_cross_check,
        ),
        (5, "universal-coefficient consistency", c05_ucoef),
        (6, "AK-ratio regressions", c06_ak_ratios),
        (7, "type-A q-character oracle", c07_qchar),
        (
            8,
            "T-system conversion and q-character identity",
            c08_tsystem,
        ),
        (9, "higher Dorey multiplicities", c09_higher_dorey),
        (10, "HL commuting families", c10_commuting),
        (11, "Schur-Weyl quivers", c11_schur_weyl),
        (12, "AR quiver figures and convexity", c12_ar_quivers),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, name, f) in criteria {
        let start = Instant::now();
        let o = f();
        let t = start.elapsed();
        let tag = match (o.pass, KNOWN_RED.contains(&id)) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known)",
            (false, false) => "FAIL",
        };
        println!("[{tag}] C{id:02} {name}: {} [{t:.2?}]", o.detail);
        if o.pass {
            passed += 1;
        } else if !KNOWN_RED.contains(&id) {
            unexpected.push(id);
        }
    }
    println!("acceptance: {passed}/12 pass; known red: {KNOWN_RED:?}");
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}

fn qt_roots(signed: &[(i64, i64)]) -> RootMultiset {
    RootMultiset::new(
        signed
            .iter()
            .map(|&(s, e)| {
                QMonomial::qt().pow(e)
                    * if s < 0 {
                        QMonomial::minus_one()
                    } else {
                        QMonomial::ONE
                    }
            })
            .collect(),
    )
}

fn c01_g2_golden() -> Outcome {
    let start = Instant::now();
    let den = Denominators::new(ty("G2~1"));
    // (k, m, l, p, roots as (sign, q_t exponent)); "(z + q_t^e)" is the root −q_t^e.
    let golden: Vec<(&str, u32, u32, u32, u32, Vec<(i64, i64)>)> = vec![
        (
            "d_{1,1^2}",
            1,
            1,
            1,
            2,
            vec![(-1, 9), (-1, 11), (-1, 13), (-1, 15)],
        ),
        (
            "d_{1,1^3}",
            1,
            1,
            1,
            3,
            vec![(1, 12), (1, 14), (1, 16), (1, 18)],
        ),
        ("d_{1^2,2}", 1, 2, 2, 1, vec![(1, 10), (1, 14)]),
        (
            "d_{1,2^2}",
            1,
            1,
            2,
            2,
            vec![(1, 6), (1, 8), (1, 10), (1, 12)],
        ),
        (
            "d_{1,2^3}",
            1,
            1,
            2,
            3,
            vec![(-1, 5), (-1, 9), (-1, 7), (-1, 11), (-1, 9), (-1, 13)],
        ),
        (
            "d_{1,2^4}",
            1,
            1,
            2,
            4,
            vec![(1, 6), (1, 8), (1, 10), (1, 10), (1, 12), (1, 14)],
        ),
        (
            "d_{2,2^2}",
            2,
            1,
            2,
            2,
            vec![(-1, 3), (-1, 7), (-1, 9), (-1, 13)],
        ),
        (
            "d_{2,2^3}",
            2,
            1,
            2,
            3,
            vec![(1, 4), (1, 8), (1, 10), (1, 14)],
        ),
        (
            "d_{2^2,2^2}",
            2,
            2,
            2,
            2,
            vec![(1, 2), (1, 4), (1, 8), (1, 8), (1, 10), (1, 12), (1, 14)],
        ),
        ("d_{2,2}", 2, 1, 2, 1, vec![(1, 2), (1, 8), (1, 12)]),
    ];
    let mut bad = Vec::new();
    for (name, k, m, l, p, roots) in &golden {
        match den.kr(*k, *m, *l, *p) {
            Ok(d) if d == qt_roots(roots) => {}
            Ok(d) => bad.push(format!("{name} = {d}")),
            Err(e) => bad.push(format!("{name}: {e}")),
        }
    }
    let o = Outcome::new(
        bad.is_empty(),
        format!(
            "{}/{} identities exact {bad:?}",
            golden.len() - bad.len(),
            golden.len()
        ),
    );
    within(Duration::from_secs(1), o, start)
}

const RANK5_TYPES: &[&str] = &[
    "A1~1", "A2~1", "A3~1", "A4~1", "A5~1", "B2~1", "B3~1", "B4~1", "B5~1", "C2~1", "C3~1", "C4~1",
    "C5~1", "D4~1", "D5~1", "G2~1", "A2~2", "A3~2", "A4~2", "A5~2", "D3~2", "D4~2", "D5~2", "D6~2",
    "D4~3",
];

fn c02_symmetry() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut skipped, mut bad) = (0, 0, Vec::new());
    for t in RANK5_TYPES {
        let ty = ty(t);
        let den = Denominators::new(ty);
        for k in ty.nodes() {
            for l in ty.nodes() {
                for m in 1..=4 {
                    for p in 1..=4 {
                        match (den.kr(k, m, l, p), den.kr(l, p, k, m)) {
                            (Ok(a), Ok(b)) => {
                                checked += 1;
                                if a != b {
                                    bad.push(format!("{t} ({k}^{m},{l}^{p})"));
                                }
                            }
                            (Err(Error::FundamentalDataUnavailable { .. }), _)
                            | (_, Err(Error::FundamentalDataUnavailable { .. })) => skipped += 1,
                            (Err(e), _) | (_, Err(e)) => {
                                bad.push(format!("{t} ({k}^{m},{l}^{p}): {e}"))
                            }
                        }
                    }
                }
            }
        }
    }
    let o = Outcome::new(
        bad.is_empty() && checked > 0,
        format!(
            "{checked} pairs symmetric, {skipped} without data, {} asymmetric {:?}",
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    );
    within(Duration::from_secs(30), o, start)
}

/// `∏_{t<min(m,p)} d_{k,l}((−q)^{−|p−m|−2t} z)`, computed root by root.
fn shifted_product(fund: &RootMultiset, m: u32, p: u32) -> RootMultiset {
    let (m, p) = (m as i64, p as i64);
    let mut roots = Vec::new();
    for t in 0..m.min(p) {
        let c = neg_q_pow((p - m).abs() + 2 * t);
        roots.extend(fund.roots().iter().map(|&r| r * c));
    }
    RootMultiset::new(roots)
}

/// Independent closed forms for `A_{n-1}^{(1)}` and the non-spin part of `D_n^{(1)}`.
fn closed_form(ty: AffineType, k: u32, m: u32, l: u32, p: u32) -> Option<RootMultiset> {
    let (k, m, l, p) = (k as i64, m as i64, l as i64, p as i64);
    let n = ty.rank as i64;
    let mut roots = Vec::new();
    if ty.twist != 1 {
        return None;
    }
    match ty.family {
        kraffine::Family::A => {
            let n = n + 1;
            for t in 0..m.min(p) {
                for s in 1..=k.min(l).min(n - k).min(n - l) {
                    roots.push(neg_q_pow((k - l).abs() + (m - p).abs() + 2 * s + 2 * t));
                }
            }
        }
        kraffine::Family::D if k < n - 1 && l < n - 1 => {
            for t in 0..m.min(p) {
                for s in 1..=k.min(l) {
                    roots.push(neg_q_pow((k - l).abs() + (m - p).abs() + 2 * s + 2 * t));
                    roots.push(neg_q_pow(2 * n - 2 - k - l + (m - p).abs() + 2 * s + 2 * t));
                }
            }
        }
        _ => return None,
    }
    Some(RootMultiset::new(roots))
}

fn c03_normal_form() -> Outcome {
    let mut scope: Vec<(AffineType, Vec<(u32, u32)>)> = Vec::new();
    for t in [
        "A1~1", "A2~1", "A3~1", "A4~1", "A5~1", "D4~1", "D5~1", "A3~2", "A5~2",
    ] {
        let ty = ty(t);
        let nodes: Vec<u32> = ty.nodes().collect();
        let pairs = nodes
            .iter()
            .flat_map(|&k| nodes.iter().map(move |&l| (k, l)))
            .collect();
        scope.push((ty, pairs));
    }
    scope.push((ty("D4~3"), vec![(2, 2)]));
    let (mut checked, mut oracle, mut bad) = (0, 0, Vec::new());
    for (ty, pairs) in scope {
        let den = Denominators::new(ty);
        for (k, l) in pairs {
            let fund = den.fundamental(k, l).expect("fundamental data");
            for m in 1..=4 {
                for p in 1..=4 {
                    let d = den.kr(k, m, l, p).expect("kr");
                    checked += 1;
                    if d != shifted_product(&fund, m, p) {
                        bad.push(format!("{ty} ({k}^{m},{l}^{p})"));
                    }
                    if let Some(c) = closed_form(ty, k, m, l, p) {
                        oracle += 1;
                        if d != c {
                            bad.push(format!("{ty} ({k}^{m},{l}^{p}) vs closed form"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{checked} products exact, {oracle} also against closed forms, {} mismatches {:?}",
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    )
}

fn c04_d2_cross_check() -> Outcome {
    let (mut checked, mut bad) = (0, BTreeMap::<&str, usize>::new());
    for t in ["D3~2", "D4~2", "D5~2", "D6~2"] {
        let ty = ty(t);
        let den = Denominators::new(ty);
        let n = ty.nodes().count() as u32;
        for k in ty.nodes() {
            for l in ty.nodes() {
                for m in 1..=4 {
                    for p in 1..=4 {
                        checked += 1;
                        let a = den.kr(k, m, l, p).expect("substitution");
                        let b = den.d2_explicit(k, m, l, p).expect("explicit");
                        if a != b {
                            let class = match (k == n, l == n) {
                                (true, true) => "spin-spin",
                                (false, false) => "non-spin",
                                _ => "mixed",
                            };
                            *bad.entry(class).or_default() += 1;
                        }
                    }
                }
            }
        }
    }
    let total: usize = bad.values().sum();
    Outcome::new(
        total == 0,
        format!(
            "{}/{checked} agree; disagreements by class {bad:?}",
            checked - total
        ),
    )
}

fn c05_ucoef() -> Outcome {
    let start = Instant::now();
    let types = [
        "A1~1", "A2~1", "A3~1", "A4~1", "B2~1", "B3~1", "B4~1", "C2~1", "C3~1", "C4~1", "D4~1",
        "D5~1", "G2~1", "D4~3",
    ];
    let (mut checked, mut skipped, mut bad) = (0, 0, Vec::new());
    let mut per_family = BTreeMap::<String, usize>::new();
    for t in types {
        let ty = ty(t);
        let den = Denominators::new(ty);
        for k in ty.nodes() {
            for l in ty.nodes() {
                for m in 1..=3 {
                    for p in 1..=3 {
                        let a = universal_coefficient(ty, k, m, l, p);
                        let b = ucoef_from_denominators(&den, k, m, l, p);
                        match (a, b) {
                            (Ok(a), Ok(b)) => {
                                checked += 1;
                                *per_family
                                    .entry(format!("{:?}{}", ty.family, ty.twist))
                                    .or_default() += 1;
                                if !canonical_eq_mod_units(&a, &b).unwrap_or(false) {
                                    bad.push(format!("{t} ({k}^{m},{l}^{p})"));
                                }
                            }
                            (Err(Error::FundamentalDataUnavailable { .. }), _)
                            | (_, Err(Error::FundamentalDataUnavailable { .. })) => skipped += 1,
                            (Err(e), _) | (_, Err(e)) => {
                                bad.push(format!("{t} ({k}^{m},{l}^{p}): {e}"))
                            }
                        }
                    }
                }
            }
        }
    }
    let o = Outcome::new(
        bad.is_empty() && checked >= 200,
        format!(
            "{checked} tuples consistent ({skipped} without data), families {per_family:?}, {} inconsistent {:?}",
            bad.len(),
            &bad[..bad.len().min(5)]
        ),
    );
    within(Duration::from_secs(60), o, start)
}

fn c06_ak_ratios() -> Outcome {
    let cases = ak_cases::cases();
    let mut bad = Vec::new();
    for c in &cases {
        let ty = ty(c.ty);
        let den = Denominators::new(ty);
        let rep = match ak_ratio_check(&den, c.factors, c.target, c.probe, c.side) {
            Ok(r) => r,
            Err(e) => {
                bad.push(format!("{}: {e}", c.label));
                continue;
            }
        };
        // Multiply back the target denominator to recover the displayed numerator.
        let (a, b, ratio) = match c.side {
            Side::Left => (c.probe, c.target, c.target.spectral / c.probe.spectral),
            Side::Right => (c.target, c.probe, c.probe.spectral / c.target.spectral),
        };
        let d0 = den
            .kr(a.node, a.level, b.node, b.level)
            .unwrap()
            .scaled(ratio.inv());
        let mut got = BTreeMap::<QMonomial, i64>::new();
        for (r, m) in rep.finite_part.factors() {
            *got.entry(r).or_default() += m;
        }
        for &r in d0.roots() {
            *got.entry(r).or_default() += 1;
        }
        got.retain(|_, m| *m != 0);
        let mut want = BTreeMap::<QMonomial, i64>::new();
        for &r in &c.numerator {
            *want.entry(r).or_default() += 1;
        }
        if !rep.is_laurent || got != want {
            bad.push(format!(
                "{} (laurent {}, got {got:?})",
                c.label, rep.is_laurent
            ));
        }
    }
    // Labels read "<type> <display>, <parameters>"; the same display at another rank counts once.
    let displays: std::collections::BTreeSet<String> = cases
        .iter()
        .map(|c| {
            let head = c.label.split(", ").next().unwrap();
            let (t, rest) = head.split_once(' ').unwrap();
            format!("{} {rest}", &t[..1])
        })
        .collect();
    Outcome::new(
        bad.is_empty() && displays.len() >= 15,
        format!(
            "{}/{} instances from {} displays Laurent with the displayed numerator {:?}",
            cases.len() - bad.len(),
            cases.len(),
            displays.len(),
            &bad[..bad.len().min(3)]
        ),
    )
}

/// Hook-content formula for the `k × m` rectangle with `n` letters.
fn weyl_dimension(n: u32, k: u32, m: u32) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        for j in 0..m {
            num *= (n + j - i) as u128;
            den *= ((m - j) + (k - i) - 1) as u128;
        }
    }
    num / den
}

fn c07_qchar() -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    let a = neg_q_pow(3);
    for n in 2..=6u32 {
        let ty = ty(&format!("A{}~1", n - 1));
        for k in 1..n {
            for m in 1..=4 {
                checked += 1;
                let chi = match kr_qcharacter_type_a(n, k, m, a, CAP) {
                    Ok(c) => c,
                    Err(e) => {
                        bad.push(format!("n={n} {k}^{m}: {e}"));
                        continue;
                    }
                };
                let dim_ok = classical_dimension(&chi) == BigInt::from(weyl_dimension(n, k, m));
                let dom = dominant_monomials(&chi);
                let top = kr_highest_monomial(ty, k, m, a).unwrap();
                let dom_ok = dom.len() == 1 && dom[0].0 == top && dom[0].1 == BigInt::from(1);
                if !dim_ok || !dom_ok {
                    bad.push(format!(
                        "n={n} {k}^{m} dim_ok={dim_ok} dominant={}",
                        dom.len()
                    ));
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{}/{checked} KR modules: dimension, unique dominant monomial, calibrated top {bad:?}",
            checked - bad.len()
        ),
    )
}

fn c08_tsystem() -> Outcome {
    let start = Instant::now();
    let untwisted = [
        "A2~1", "A3~1", "A4~1", "B2~1", "B3~1", "B4~1", "C2~1", "C3~1", "C4~1", "D4~1", "D5~1",
        "G2~1",
    ];
    let (mut conv_checked, mut conv_bad) = (0, Vec::new());
    for t in untwisted {
        let ty = ty(t);
        for i in ty.nodes() {
            for level in 1..=4 {
                let ids = tsystem_identities(ty, i, level, QMonomial::ONE, Convention::W).unwrap();
                for id in &ids {
                    conv_checked += 1;
                    if convert_identity(id).is_err() {
                        conv_bad.push(format!("{t} i={i} k={level}"));
                    }
                }
            }
        }
    }
    let (mut chi_checked, mut chi_bad) = (0, Vec::new());
    for t in ["A1~1", "A2~1", "A3~1"] {
        let ty = ty(t);
        for i in ty.nodes() {
            for level in 1..=3 {
                for id in tsystem_identities(ty, i, level, QMonomial::ONE, Convention::V).unwrap() {
                    chi_checked += 1;
                    if !verify_tsystem_qchar(&id, CAP).unwrap_or(false) {
                        chi_bad.push(format!("{t} i={i} k={level}"));
                    }
                }
            }
        }
    }
    let o = Outcome::new(
        conv_bad.is_empty() && chi_bad.is_empty(),
        format!(
            "(a) {}/{conv_checked} W->V conversions match, mismatches {conv_bad:?}; (b) {}/{chi_checked} chi-identities exact {chi_bad:?}",
            conv_checked - conv_bad.len(),
            chi_checked - chi_bad.len()
        ),
    );
    within(Duration::from_secs(60), o, start)
}

fn c09_higher_dorey() -> Outcome {
    let (mut checked, mut bad) = (0, Vec::new());
    for r in 2..=5u32 {
        let ty = ty(&format!("A{r}~1"));
        for k in 1..r {
            for l in 1..=(r - k) {
                for m in 1..=2 {
                    for inst in higher_dorey_instances(ty, DoreyCase::General { k, l }, m).unwrap()
                    {
                        checked += 1;
                        let c = verify_dominant_multiplicity(&inst, CAP).unwrap();
                        // Negative control: detune one factor by q².
                        let mut off = inst.clone();
                        off.factors[0].spectral = off.factors[0].spectral * QMonomial::q().pow(2);
                        let c0 = verify_dominant_multiplicity(&off, CAP).unwrap();
                        if c != BigInt::from(1) || c0 != BigInt::from(0) {
                            bad.push(format!("A{r} k={k} l={l} m={m}: {c}, control {c0}"));
                        }
                    }
                }
            }
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{}/{checked} instances multiplicity 1 with control 0 {bad:?}",
            checked - bad.len()
        ),
    )
}

fn c10_commuting() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for t in ["A3~1", "B2~1", "B3~1", "C3~1", "D4~1", "G2~1"] {
        let start = Instant::now();
        let den = Denominators::new(ty(t));
        let at12 = verify_commuting_family(&den, 12).unwrap();
        let mut depth = 12;
        let mut big = at12.clone();
        while big.modules.len() < 25 && depth < 60 {
            depth += 1;
            big = verify_commuting_family(&den, depth).unwrap();
        }
        let t_ok = at12.violations.is_empty()
            && big.violations.is_empty()
            && big.modules.len() >= 25
            && start.elapsed() < Duration::from_secs(30);
        ok &= t_ok;
        lines.push(format!(
            "{t}: R=12 {}/{} ({} modules), R={depth} {}/{} ({} modules)",
            at12.violations.len(),
            at12.pairs_checked,
            at12.modules.len(),
            big.violations.len(),
            big.pairs_checked,
            big.modules.len()
        ));
    }
    Outcome::new(ok, format!("violations/pairs: {}", lines.join("; ")))
}

fn c11_schur_weyl() -> Outcome {
    let mut got = Vec::new();
    for (t, xi, want) in [("B3~1", 12, "A5"), ("C3~1", 9, "D4")] {
        let ty = ty(t);
        let datum = SWDatum::from_ar_quiver(&build_gamma(ty, xi).unwrap()).unwrap();
        let sw = schur_weyl_quiver(&Denominators::new(ty), &datum).unwrap();
        got.push((t, sw.dynkin_type(), want));
    }
    let ok = got.iter().all(|(_, g, w)| g.as_deref() == Some(*w));
    Outcome::new(
        ok,
        format!(
            "{:?}",
            got.iter()
                .map(|(t, g, _)| format!("{t} -> {}", g.as_deref().unwrap_or("?")))
                .collect::<Vec<_>>()
        ),
    )
}

type Figure = &'static [&'static [(&'static str, i64)]];

const FIGURES: &[(&str, i64, Option<usize>, Figure)] = &[
    (
        "B3~1",
        12,
        None,
        &[
            &[
                ("[3,5]", 4),
                ("[1,4]", 6),
                ("[2]", 8),
                ("[5]", 10),
                ("[1]", 12),
            ],
            &[
                ("[3,4]", 2),
                ("[2,4]", 4),
                ("[2,5]", 6),
                ("[1,5]", 8),
                ("[1,2]", 10),
            ],
            &[
                ("[3]", 1),
                ("[4]", 3),
                ("[2,3]", 5),
                ("[4,5]", 7),
                ("[1,3]", 9),
            ],
        ],
    ),
    (
        "B3~1",
        12,
        Some(1),
        &[
            &[
                ("[1]", 2),
                ("[3,5]", 4),
                ("[2,4]", 6),
                ("[1,2]", 8),
                ("[5]", 10),
            ],
            &[
                ("[3,4]", 2),
                ("[1,4]", 4),
                ("[1,5]", 6),
                ("[2,5]", 8),
                ("[2]", 10),
            ],
            &[
                ("[3]", 1),
                ("[4]", 3),
                ("[1,3]", 5),
                ("[4,5]", 7),
                ("[2,3]", 9),
            ],
        ],
    ),
    (
        "C3~1",
        9,
        None,
        &[
            &[("<1,4>", 3), ("<3,-4>", 5), ("<2,-3>", 7), ("<1,-2>", 9)],
            &[("<2,4>", 2), ("<1,3>", 4), ("<2,-4>", 6), ("<1,-3>", 8)],
            &[("<3,4>", 1), ("<2,3>", 3), ("<1,2>", 5), ("<1,-4>", 7)],
        ],
    ),
    (
        "C3~1",
        9,
        Some(1),
        &[
            &[("<1,-2>", 1), ("<2,4>", 3), ("<3,-4>", 5), ("<1,-3>", 7)],
            &[("<1,4>", 2), ("<2,3>", 4), ("<1,-4>", 6), ("<2,-3>", 8)],
            &[("<3,4>", 1), ("<1,3>", 3), ("<1,2>", 5), ("<2,-4>", 7)],
        ],
    ),
    (
        "G2~1",
        12,
        None,
        &[
            &[
                ("<2,4>", 2),
                ("<2,3>", 4),
                ("<1,2>", 6),
                ("<1,3>", 8),
                ("<1,-4>", 10),
                ("<1,-2>", 12),
            ],
            &[
                ("<2,-3>", 1),
                ("<3,4>", 3),
                ("<2,-4>", 5),
                ("<1,4>", 7),
                ("<3,-4>", 9),
                ("<1,-3>", 11),
            ],
        ],
    ),
    (
        "G2~1",
        12,
        Some(1),
        &[
            &[
                ("<1,-2>", 0),
                ("<1,4>", 2),
                ("<1,3>", 4),
                ("<1,2>", 6),
                ("<2,3>", 8),
                ("<2,-4>", 10),
            ],
            &[
                ("<1,-3>", 1),
                ("<3,4>", 3),
                ("<1,-4>", 5),
                ("<2,4>", 7),
                ("<3,-4>", 9),
                ("<2,-3>", 11),
            ],
        ],
    ),
];

/// Reflects at the lowest-numbered sink.
fn step(g: &CoordQuiver) -> CoordQuiver {
    (1..=g.system.rank)
        .find_map(|i| g.reflect(i).ok())
        .expect("every AR quiver has a sink")
}

fn c12_ar_quivers() -> Outcome {
    let mut bad = Vec::new();
    for &(t, xi, refl, fig) in FIGURES {
        let mut g = build_gamma(ty(t), xi).unwrap();
        if let Some(i) = refl {
            g = g.reflect(i).unwrap();
        }
        let rows = g.rows();
        let want: Vec<Vec<(String, i64)>> = fig
            .iter()
            .map(|r| r.iter().map(|&(l, p)| (l.to_string(), p)).collect())
            .collect();
        if rows != want {
            bad.push(format!("{t} reflect {refl:?}"));
        }
    }
    let (mut quivers, mut pairs) = (0usize, 0usize);
    for t in RANK5_TYPES {
        let mut g = build_gamma(ty(t), 0).unwrap();
        // A full orbit of sink reflections visits every vertex as a sink once.
        for _ in 0..=g.len() {
            quivers += 1;
            pairs += g.len() * g.len().saturating_sub(1) / 2;
            let v = g.convexity_violations();
            if !v.is_empty() {
                bad.push(format!("{t}: {} convexity violations", v.len()));
                break;
            }
            g = step(&g);
        }
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "{} figures exact; convexity on {quivers} quivers ({pairs} root pairs) {bad:?}",
            FIGURES.len()
        ),
    )
}
