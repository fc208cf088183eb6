//! Acceptance suite: one verdict line per criterion.
//!
//! Runs without the libtest harness so the verdict lines always reach
//! stdout. A criterion may print FAIL only in the way its analysis below
//! predicts; anything unexpected panics and fails the target.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::Rng;

use lieexp::bracket::{bracket, divergence, hamiltonian_field_in, hamiltonian_target, jacobi_residual};
use lieexp::grading::{
    compare_h, compare_o, decompose, grade_key, grade_key_of, max_grade, min_grade, stat_hh, stat_lp,
    GradeKey,
};
use lieexp::ideal::{
    abelian_control, annihilated, lemma2_generate, reduce_precondition, simplicity_experiment,
    tactic_reduce_components, tactic_strip_exponentials, ClosureConfig, Lemma2Pattern, StripTarget,
    DEFAULT_SEARCH_BOUND,
};
use lieexp::random::{rng, Sampler};
use lieexp::structure::{center_probe, check_derivation, find_ad_diagonal, is_ad_diagonal, LinearMapTable};
use lieexp::{
    cli, parse_element, AlgebraSignature, Element, MonoKey, Monomial, Rational, TruncationCaps, Var,
};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn pass(detail: impl Into<String>) -> Self {
        Verdict {
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Verdict {
            pass: false,
            detail: detail.into(),
        }
    }
}

fn sig(s: &str) -> Arc<AlgebraSignature> {
    Arc::new(s.parse().unwrap_or_else(|e| panic!("{s}: {e}")))
}

fn el(src: &str, sig: &Arc<AlgebraSignature>) -> Element {
    parse_element(src, sig.clone()).unwrap_or_else(|e| panic!("{src}: {e}"))
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn within(start: Instant, limit: Duration, what: &str) {
    let spent = start.elapsed();
    assert!(spent < limit, "{what} took {spent:?}, limit {limit:?}");
}

/// Functions `e^{ax+by} x^i y^j` in one pair of variables, kept as a map
/// from `(a, b, i, j)` to an integer coefficient. Independent of the crate.
type Oracle = BTreeMap<(i64, i64, i64, i64), i64>;

fn oracle_dx(f: &Oracle) -> Oracle {
    let mut out = Oracle::new();
    for (&(a, b, i, j), &c) in f {
        *out.entry((a, b, i, j)).or_default() += a * c;
        *out.entry((a, b, i - 1, j)).or_default() += i * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn oracle_dy(f: &Oracle) -> Oracle {
    let mut out = Oracle::new();
    for (&(a, b, i, j), &c) in f {
        *out.entry((a, b, i, j)).or_default() += b * c;
        *out.entry((a, b, i, j - 1)).or_default() += j * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn oracle_mul(f: &Oracle, g: &Oracle) -> Oracle {
    let mut out = Oracle::new();
    for (&(a, b, i, j), &c) in f {
        for (&(a2, b2, i2, j2), &c2) in g {
            *out.entry((a + a2, b + b2, i + i2, j + j2)).or_default() += c * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn oracle_poisson(f: &Oracle, g: &Oracle) -> Oracle {
    let mut out = oracle_mul(&oracle_dx(f), &oracle_dy(g));
    for (k, c) in oracle_mul(&oracle_dy(f), &oracle_dx(g)) {
        *out.entry(k).or_default() -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn as_oracle(e: &Element) -> Oracle {
    let x = Var::x(0);
    let y = Var::y(0);
    e.terms()
        .iter()
        .map(|m| {
            let exp = |v: Var| m.key.exp.iter().find(|(s, _)| s.var == v).map_or(0, |(_, a)| a);
            assert!(m.coeff.is_integer());
            let c: i64 = m.coeff.to_integer().try_into().expect("small coefficient");
            ((exp(x), exp(y), m.key.poly.get(x), m.key.poly.get(y)), c)
        })
        .collect()
}

/// 1. The center computation `{e^{ax}e^{by}y, e^{-ax}e^{-by}}`.
///
/// Under `{f,g} = f_x g_y − f_y g_x` the `y`-linear terms cancel:
/// `(a y E)(−b G) − E(b y + 1)(−a G) = a`. The closed form `−2ab·y − a`
/// therefore agrees only when `a = 0`. The engine is checked against the
/// independent oracle and the disagreement set is checked to be exactly
/// `a ≠ 0`.
fn criterion_1() -> Verdict {
    let start = Instant::now();
    let h = sig("H(1,1)");
    let mut formula_mismatch = Vec::new();
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            let f = el(&format!("e^{{{a}*x1}}*e^{{{b}*y1}}*y1"), &h);
            let g = el(&format!("e^{{{}*x1}}*e^{{{}*y1}}", -a, -b), &h);
            let got = bracket(&f, &g).unwrap();
            let of = BTreeMap::from([((a, b, 0, 1), 1)]);
            let og = BTreeMap::from([((-a, -b, 0, 0), 1)]);
            assert_eq!(as_oracle(&got), oracle_poisson(&of, &og), "a={a} b={b}");
            assert_eq!(got, Element::constant(h.clone(), int(a)).unwrap());
            let formula = el("y1", &h)
                .scale(&int(-2 * a * b))
                .add(&Element::constant(h.clone(), int(-a)).unwrap())
                .unwrap();
            if got != formula {
                formula_mismatch.push((a, b));
            }
        }
    }
    within(start, Duration::from_secs(1), "criterion 1");
    let predicted: Vec<(i64, i64)> = (-3..=3)
        .flat_map(|a| (-3..=3).map(move |b| (a, b)))
        .filter(|&(a, _)| a != 0)
        .collect();
    assert_eq!(formula_mismatch, predicted);
    Verdict::fail(format!(
        "engine equals the independent oracle value a on all 49 pairs; the closed form -2ab*y1 - a differs on {} pairs (every a != 0)",
        formula_mismatch.len()
    ))
}

/// 2. `[x^i ∂, x^j ∂] = (j−i) x^{i+j−1} ∂` and `[x∂, x^i∂] = (i−1) x^i ∂`.
fn criterion_2() -> Verdict {
    let start = Instant::now();
    let w = sig("W(1)");
    let m = |i: i64| -> Element {
        Element::basis(w.clone(), MonoKey::one().with_poly(Var::x(0), i).with_deriv(0)).unwrap()
    };
    for i in 0..=10 {
        for j in 0..=10 {
            let want = if i + j == 0 {
                Element::zero(w.clone())
            } else {
                m(i + j - 1).scale(&int(j - i))
            };
            assert_eq!(bracket(&m(i), &m(j)).unwrap(), want, "i={i} j={j}");
        }
        assert_eq!(bracket(&m(1), &m(i)).unwrap(), m(i).scale(&int(i - 1)));
    }
    within(start, Duration::from_secs(1), "criterion 2");
    Verdict::pass("121 structure constants and 11 eigenvalue relations exact")
}

/// 3. Jacobi identity and antisymmetry on 1000 triples per algebra.
fn criterion_3() -> Verdict {
    let start = Instant::now();
    let cases = [
        ("W(2; x1:[1,2], x2:[1,2])", 2, 1),
        ("H(2)", 2, 0),
        ("Hbar(1,1)", 2, 1),
        ("W+(1)", 3, 0),
    ];
    for (s, p, a) in cases {
        let g = sig(s);
        let sampler = Sampler::new(TruncationCaps::for_signature(&g, p, a)).with_max_terms(3);
        let mut r = rng(3);
        for _ in 0..1000 {
            let (x, y, z) = (
                sampler.element(&g, &mut r),
                sampler.element(&g, &mut r),
                sampler.element(&g, &mut r),
            );
            assert!(
                jacobi_residual(&x, &y, &z).unwrap().is_zero(),
                "{s}: {x}, {y}, {z}"
            );
            let xy = bracket(&x, &y).unwrap();
            assert!(xy.add(&bracket(&y, &x).unwrap()).unwrap().is_zero());
        }
    }
    within(start, Duration::from_secs(60), "criterion 3");
    Verdict::pass(format!("4000 triples, zero residuals, {:.1?}", start.elapsed()))
}

/// 4. Hamiltonian fields are divergence-free and bracket-preserving.
fn criterion_4() -> Verdict {
    let h = sig("H(2)");
    let target = Arc::new(hamiltonian_target(&h).unwrap());
    let sampler = Sampler::new(TruncationCaps::for_signature(&h, 3, 0));
    let mut r = rng(4);
    for _ in 0..100 {
        let u = sampler.element(&h, &mut r);
        let hu = hamiltonian_field_in(&u, target.clone()).unwrap();
        assert!(divergence(&hu).unwrap().is_zero(), "{u}");
    }
    for _ in 0..100 {
        let u = sampler.element(&h, &mut r);
        let v = sampler.element(&h, &mut r);
        let lhs = hamiltonian_field_in(&bracket(&u, &v).unwrap(), target.clone()).unwrap();
        let rhs = bracket(
            &hamiltonian_field_in(&u, target.clone()).unwrap(),
            &hamiltonian_field_in(&v, target.clone()).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs, "{u}, {v}");
    }
    Verdict::pass("100 divergence checks and 100 homomorphism checks exact")
}

/// 5. Brackets of homogeneous elements are homogeneous of the summed grade.
fn criterion_5() -> Verdict {
    let mut checked = 0;
    for (s, p, a) in [("W(1; x1:[1,2])", 3, 2), ("H(1,1)", 2, 2)] {
        let g = sig(s);
        let sampler = Sampler::new(TruncationCaps::for_signature(&g, p, a));
        let mut r = rng(5);
        for _ in 0..250 {
            let (ga, gb) = (sampler.grade(&g, &mut r), sampler.grade(&g, &mut r));
            let x = sampler.homogeneous(&g, &ga, &mut r).unwrap();
            let y = sampler.homogeneous(&g, &gb, &mut r).unwrap();
            let z = bracket(&x, &y).unwrap();
            let parts = decompose(&z);
            assert!(parts.len() <= 1, "{s}: [{x}, {y}] = {z}");
            if let Some(k) = parts.keys().next() {
                assert_eq!(*k, ga.sum(&gb));
            }
            for m in z.terms() {
                assert_eq!(grade_key(m, &g).unwrap(), ga.sum(&gb));
            }
            checked += 1;
        }
    }
    Verdict::pass(format!("{checked} homogeneous pairs, grades add"))
}

/// 6. The worked statistics: `h_h = 2` and `lp = 9`.
fn criterion_6() -> Verdict {
    let h2 = sig("H(2,2)");
    let l = el(
        "e^{3*x1}*e^{4*x2}*x1^5*x2^7 + 5*e^{3*x1}*e^{4*x2}*x1^6*x2^-7 + 9*e^{4*x1}*x2^7",
        &h2,
    );
    let hh = stat_hh(&l).unwrap();
    let h7 = sig("H(7,7)");
    let l = el("e^{x1}*x2^7 + x1*x3^-1*x7^9", &h7);
    let lp = stat_lp(&l).unwrap();
    assert_eq!((hh, lp), (2, 9));
    Verdict::pass("h_h = 2, lp = 9")
}

/// 7. Ad-diagonal search, center probe and eigenvalues.
fn criterion_7() -> Verdict {
    let h2 = sig("H(2)");
    let found = find_ad_diagonal(&h2, &TruncationCaps::for_signature(&h2, 3, 0)).unwrap();
    assert_eq!(found, vec![el("x1*y1", &h2), el("x2*y2", &h2)]);
    for (s, p, a) in [("Hbar(1,0)", 0, 2), ("Hbar(1,1)", 1, 1)] {
        let g = sig(s);
        assert!(
            find_ad_diagonal(&g, &TruncationCaps::for_signature(&g, p, a))
                .unwrap()
                .is_empty(),
            "{s}"
        );
    }
    let h11 = sig("H(1,1)");
    let center = center_probe(&h11, &TruncationCaps::for_signature(&h11, 2, 1)).unwrap();
    assert_eq!(center, vec![el("1", &h11)]);
    let h1 = sig("H(1)");
    let caps = TruncationCaps::for_signature(&h1, 4, 0);
    let report = is_ad_diagonal(&el("x1*y1", &h1), &caps).unwrap();
    assert!(report.diagonal);
    let mut count = 0;
    for key in caps.enumerate(&h1).unwrap() {
        let (a, b) = (key.poly.get(Var::x(0)), key.poly.get(Var::y(0)));
        assert_eq!(report.eigenvalue(&key), Some(&int(b - a)), "{key}");
        count += 1;
    }
    Verdict::pass(format!(
        "H(2) gives x1*y1, x2*y2; quotients give none; center = constants; {count} eigenvalues b-a"
    ))
}

/// 8. `S`, `ad(z)` and `α·S + ad(z)` are derivations; the identity is not.
fn criterion_8() -> Verdict {
    let h = sig("H(1)");
    let caps = TruncationCaps::for_signature(&h, 3, 0);
    let s = LinearMapTable::scalar(&h, &caps).unwrap();
    assert!(check_derivation(&s, &caps).unwrap().is_derivation());
    let sampler = Sampler::new(caps.clone());
    let mut r = rng(8);
    for k in 0..50 {
        let z = sampler.element(&h, &mut r);
        let ad = LinearMapTable::inner(&z, &caps).unwrap();
        assert!(check_derivation(&ad, &caps).unwrap().is_derivation(), "ad({z})");
        let alpha = int(k % 7 - 3);
        let mixed = s.combine(&alpha, &ad, &Rational::one()).unwrap();
        assert!(
            check_derivation(&mixed, &caps).unwrap().is_derivation(),
            "{alpha}*S + ad({z})"
        );
    }
    let id = LinearMapTable::identity(&h, &caps).unwrap();
    let report = check_derivation(&id, &caps).unwrap();
    assert!(!report.is_derivation());
    Verdict::pass(format!(
        "S and 50 ad(z), 50 combinations pass; identity fails with {} residuals",
        report.residuals.len()
    ))
}

/// 9. Simplicity corroboration by saturation.
///
/// `Hbar(1,1)` with Laurent polynomial parts is not perfect: every bracket is
/// a sum of total derivatives, so each exponential class carries a linear
/// functional that vanishes on all brackets. The coverage bound recorded in
/// each report comes from those functionals; the suite checks the
/// functionals independently on random brackets and checks that every run
/// reaches its bound.
fn criterion_9() -> Verdict {
    let start = Instant::now();
    let config = ClosureConfig::default();
    let mut lines = Vec::new();
    let mut all_one = true;
    for (s, p, a) in [("W(1; x1:[1])", 3, 1), ("Hbar(1,1)", 2, 1), ("Hbar(1,0)", 0, 2)] {
        let g = sig(s);
        let caps = TruncationCaps::for_signature(&g, p, a);
        let summary = simplicity_experiment(&g, &caps, 20, 7, &config).unwrap();
        assert_eq!(summary.reports.len(), 20);
        assert!(summary.attains_bounds(), "{s} stopped below its certified bound");
        for rep in &summary.reports {
            assert!(rep.reached_by_round.windows(2).all(|w| w[0] <= w[1]));
        }
        if !summary.corroborated() {
            all_one = false;
            assert_eq!(s, "Hbar(1,1)", "only the Laurent Poisson case has obstructions");
            let sampler = Sampler::new(caps.clone());
            let mut r = rng(9);
            for _ in 0..200 {
                let (x, y) = (sampler.element(&g, &mut r), sampler.element(&g, &mut r));
                assert!(annihilated(&bracket(&x, &y).unwrap()));
            }
            assert!(!annihilated(&el("x1^-1*y1^-1", &g)));
        }
        lines.push(format!("{s} min coverage {}", summary.min_coverage()));
    }
    let h1 = sig("H(1)");
    let control = abelian_control(&h1, &TruncationCaps::for_signature(&h1, 2, 0)).unwrap();
    assert!(control.coverage() < Rational::one());
    lines.push(format!("control {}", control.coverage()));
    within(start, Duration::from_secs(600), "criterion 9");
    let detail = format!("{}; {:.0?}", lines.join(", "), start.elapsed());
    if all_one {
        Verdict::pass(detail)
    } else {
        Verdict::fail(format!(
            "{detail}; Hbar(1,1) is capped by bracket obstructions (x1^-1*y1^-1 and one twisted residue per exponential class), every seed reaches the cap"
        ))
    }
}

/// 10. Proof-step replays: generation traces, strip and reduce tactics.
fn criterion_10() -> Verdict {
    let w = sig("W(1; x1:[1])");
    let caps = TruncationCaps::for_signature(&w, 3, 2);
    let sampler = Sampler::new(caps.clone());
    let mut r = rng(10);
    for _ in 0..50 {
        let target = sampler.key(&w, &mut r);
        let t = lemma2_generate(&target, &w).unwrap();
        if t.pattern != Lemma2Pattern::Seed {
            assert!(!t.multiple.is_zero());
            assert_eq!(t.evaluate().unwrap(), t.target.scale(&t.multiple));
        }
    }

    let mut findings = 0;
    let (mut down, mut up) = (0, 0);
    let algebras = [("W(1; x1:[1])", 2, 1), ("H(1,1)", 2, 1)];
    for (s, p, a) in algebras {
        let g = sig(s);
        let sampler = Sampler::new(TruncationCaps::for_signature(&g, p, a));
        let mut done = 0;
        while done < 50 {
            let l = sampler.element(&g, &mut r);
            let Some(target) = StripTarget::of(&l) else {
                continue;
            };
            match tactic_strip_exponentials(&l, DEFAULT_SEARCH_BOUND) {
                Ok(trace) => {
                    trace.verify().unwrap();
                    assert!(target.improved_by(&trace.output), "{l} -> {}", trace.output);
                    match target {
                        StripTarget::Max(g0) => {
                            assert!(max_grade(&trace.output).unwrap() < g0);
                            down += 1;
                        }
                        StripTarget::Min(g0) => {
                            assert!(min_grade(&trace.output).unwrap() > g0);
                            up += 1;
                        }
                    }
                }
                Err(_) => findings += 1,
            }
            done += 1;
        }
    }

    let mut reduced = 0;
    for (s, p, a) in algebras {
        let g = sig(s);
        let sampler = Sampler::new(TruncationCaps::for_signature(&g, p, a)).with_max_terms(3);
        let zero = GradeKey::zero(g.grade_len());
        let mut done = 0;
        while done < 50 {
            let l = sampler
                .element(&g, &mut r)
                .add(&sampler.homogeneous(&g, &zero, &mut r).unwrap())
                .unwrap();
            if reduce_precondition(&l).is_err() {
                continue;
            }
            match tactic_reduce_components(&l, DEFAULT_SEARCH_BOUND) {
                Ok(trace) => {
                    trace.verify().unwrap();
                    assert!(!trace.output.is_zero());
                    assert!(decompose(&trace.output).len() < decompose(&l).len(), "{l}");
                    reduced += 1;
                }
                Err(_) => findings += 1,
            }
            done += 1;
        }
    }
    assert_eq!(findings, 0);
    Verdict::pass(format!(
        "50 generation traces exact; strip: {down} max-grade decreases, {up} min-grade increases on all-nonpositive elements; {reduced} reductions; 0 findings"
    ))
}

type CompareFn = fn(&Monomial, &Monomial, &AlgebraSignature) -> lieexp::Result<std::cmp::Ordering>;

/// 11. Both monomial orders are total orders.
fn criterion_11() -> Verdict {
    use std::cmp::Ordering::*;
    let mut r = rng(11);
    for (s, cmp) in [
        ("W(2; x1:[1], x2:[1])", compare_o as CompareFn),
        ("H(2,2)", compare_h as CompareFn),
    ] {
        let g = sig(s);
        let sampler = Sampler::new(TruncationCaps::for_signature(&g, 2, 1));
        let c = |a: &Monomial, b: &Monomial| -> std::cmp::Ordering { cmp(a, b, &g).unwrap() };
        for _ in 0..10_000 {
            let mut draw = || Monomial::unit(sampler.key(&g, &mut r));
            let (a, b, d) = (draw(), draw(), draw());
            assert_eq!(c(&a, &b), c(&b, &a).reverse());
            assert_eq!(c(&a, &b) == Equal, a.key == b.key);
            if c(&a, &b) != Greater && c(&b, &d) != Greater {
                assert_ne!(c(&a, &d), Greater);
            }
            let _ = grade_key_of(&a.key, &g).unwrap();
        }
    }
    Verdict::pass("10^4 triples per order: antisymmetric, total, transitive")
}

/// 12. Parse/print round trip and deterministic JSON.
fn criterion_12() -> Verdict {
    let mut r = rng(12);
    let algebras = ["W(2; x1:[1,2], x2:[1])", "H(2,2)", "Hbar(1,1)", "W+(1)", "H(1,0)"];
    for k in 0..10_000 {
        let g = sig(algebras[k % algebras.len()]);
        let sampler =
            Sampler::new(TruncationCaps::for_signature(&g, 3, 2)).with_max_terms(r.gen_range(1..=5));
        let e = sampler.element(&g, &mut r);
        let text = e.to_string();
        let back = parse_element(&text, g.clone()).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_string(), text);
    }
    let args = [
        "lieexp",
        "simplicity",
        "--algebra",
        "W(1; x1:[1])",
        "--poly-cap",
        "3",
        "--exp-cap",
        "1",
        "--seeds",
        "5",
        "--rng",
        "7",
        "--json",
    ];
    let first = cli::run_with_limit(args, None);
    let second = cli::run_with_limit(args, None);
    assert_eq!(first.code, 0, "{}", first.stderr);
    assert_eq!(first.stdout, second.stdout);
    Verdict::pass(format!(
        "10^4 round trips; two JSON runs byte-identical ({} bytes)",
        first.stdout.len()
    ))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() {
    let criteria: [Criterion; 12] = [
        ("center computation", criterion_1),
        ("Witt structure constants", criterion_2),
        ("Jacobi and antisymmetry", criterion_3),
        ("Hamiltonian fields", criterion_4),
        ("gradation compatibility", criterion_5),
        ("statistics fixtures", criterion_6),
        ("structural probes", criterion_7),
        ("derivations", criterion_8),
        ("simplicity corroboration", criterion_9),
        ("proof-step replays", criterion_10),
        ("order laws", criterion_11),
        ("CLI round trip", criterion_12),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut passed = 0;
    let mut run = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let id = format!("criterion {}", i + 1);
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|p| id.ends_with(p.as_str()) || name.contains(p.as_str()))
        {
            continue;
        }
        let v = f();
        run += 1;
        passed += v.pass as usize;
        println!(
            "{id:<13} {:<4} {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail
        );
    }
    println!("acceptance: {passed}/{run} criteria pass");
}
