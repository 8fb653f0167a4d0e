//! Acceptance gate. Prints one line per criterion.
//!
//! A line reads FAIL either because a computation disagrees with what it
//! should (a regression, which makes this binary exit nonzero) or because the
//! criterion's own wording is contradicted by exact computation. In the second
//! case the line says what holds instead, and those checks are enforced.

use std::process::ExitCode;
use std::time::Instant;

use kronecker::engine::{kron_with, Method};
use kronecker::hunt::{
    codimension_two_pattern, family_triple, family_triples_in, family_value, hunt_strong_sh,
    HuntConfig, SearchBox,
};
use kronecker::kron2row::{kron_two_row, RosasGeometry};
use kronecker::oracle::lr_saturation_check;
use kronecker::partition::{partitions_bounded, partitions_of};
use kronecker::poly::{int, rat, Polynomial};
use kronecker::reduced::{murnaghan_littlewood_lr, rkron_at, rkron_one_row, ReducedIndex};
use kronecker::selftest::selftest;
use kronecker::stretch::{
    analyze_triple, check_strong_ph2, check_strong_sh, decompose_shape, fit_quasipolynomial,
    positivity_index, sample_stretch, saturation_index, shape_constant, shifted_shape_value,
};
use kronecker::{lr_coeff, AnalysisConfig, Index, KronTriple, Oracle, Partition, SaturationDomain};
use num_traits::{One, Signed};

enum Outcome {
    Pass(String),
    /// A computation is wrong.
    Regression(String),
    /// The statement as worded is false; `String` says what was verified instead.
    Worded(String),
}

type Check = Result<Outcome, String>;

fn p(parts: &[u64]) -> Partition {
    Partition::from_padded(parts.to_vec()).unwrap()
}

fn triple(l: &[u64], m: &[u64], n: &[u64]) -> KronTriple {
    KronTriple::new(p(l), p(m), p(n)).unwrap()
}

fn poly(c: &[(i64, i64)]) -> Polynomial {
    Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let expected: Vec<u128> = (1..=6).map(family_value).collect();
    for (i, j, k) in [(2, 1, 6), (2, 1, 7), (3, 1, 8), (3, 2, 9)] {
        let t = family_triple(i, j, k).map_err(err)?;
        let got = sample_stretch(&t, 6).map_err(err)?;
        let got: Vec<u128> = got.values.iter().map(|&(_, g)| g).collect();
        if got != expected {
            return Ok(Outcome::Regression(format!(
                "({i},{j},{k}): {got:?} != {expected:?}"
            )));
        }
    }
    Ok(Outcome::Pass(format!(
        "4 families x N=1..6 give {expected:?} in {:.2?}",
        start.elapsed()
    )))
}

fn criterion_2() -> Check {
    let t = triple(&[6, 4, 2], &[6, 6], &[7, 5]);
    let cfg = AnalysisConfig::default();
    let r = analyze_triple(&t, &cfg, &Oracle::default()).map_err(err)?;
    let f = &r.quasipolynomial;
    let class = saturation_index(f, cfg.cap, SaturationDomain::Class);
    let ok = f.branch(1) == &poly(&[(-1, 2), (1, 2)])
        && f.branch(2) == &poly(&[(1, 1), (1, 2)])
        && !r.strong_sh_holds
        && r.saturation_index == Index::Value(1)
        && class == Index::Value(1)
        && r.positivity_index == Index::Value(1);
    let detail = format!(
        "{f}; strong SH {}; s = {} (class domain {class}); p = {}",
        r.strong_sh_holds, r.saturation_index, r.positivity_index
    );
    Ok(if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Regression(detail)
    })
}

fn criterion_3() -> Check {
    let t = triple(&[10, 6, 2], &[10, 8], &[11, 7]);
    let f = fit_quasipolynomial(&sample_stretch(&t, 12).map_err(err)?, 2, 2).map_err(err)?;
    let ok = f.branch(1) == &poly(&[(-1, 4), (3, 2), (7, 4)])
        && f.branch(2) == &poly(&[(1, 1), (3, 2), (7, 4)])
        && check_strong_sh(&f)
        && !check_strong_ph2(&f);
    let detail = format!(
        "{f}; strong SH {}; strong PH2 {}",
        check_strong_sh(&f),
        check_strong_ph2(&f)
    );
    Ok(if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Regression(detail)
    })
}

fn criterion_4() -> Check {
    let t = triple(&[1, 1], &[1, 1], &[1, 1]);
    let oracle = Oracle::new(20);
    for n in 1..=10u64 {
        let s = t.stretch(n).map_err(err)?;
        let want = u128::from(n % 2 == 0);
        let (a, b) = (
            kron_two_row(&s).map_err(err)?,
            oracle.kron(&s).map_err(err)?,
        );
        if a != want || b != want {
            return Ok(Outcome::Regression(format!(
                "N = {n}: rosas {a}, oracle {b}, want {want}"
            )));
        }
    }
    Ok(Outcome::Pass(
        "rosas and oracle give [N even] for N = 1..10".into(),
    ))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let r = selftest(11, &Oracle::new(11), None).map_err(err)?;
    let bad: Vec<String> = r
        .mismatches()
        .take(5)
        .map(|c| c.triple.to_string())
        .collect();
    let detail = format!(
        "{} triples of weight <= 11 in {:.2?}",
        r.comparisons.len(),
        start.elapsed()
    );
    Ok(if bad.is_empty() {
        Outcome::Pass(detail)
    } else {
        Outcome::Regression(format!("{detail}; mismatches {bad:?}"))
    })
}

fn criterion_6() -> Check {
    let oracle = Oracle::new(40);
    let mut count = 0;
    for m2 in 0..=4u64 {
        for n2 in 0..=4u64 {
            for l2 in 0..=4u64 {
                for l3 in 0..=l2 {
                    let idx = ReducedIndex::new(p(&[l2, l3]), p(&[m2]), p(&[n2]));
                    let n0 = idx.stable_weight();
                    let at_n0 = rkron_at(&oracle, &idx, n0).map_err(err)?;
                    let at_next = rkron_at(&oracle, &idx, n0 + 1).map_err(err)?;
                    let system = rkron_one_row(m2, n2, l2, l3).map_err(err)?;
                    if at_n0 != at_next || system != at_n0 {
                        return Ok(Outcome::Regression(format!(
                            "{idx:?}: system {system}, n0 {at_n0}, n0+1 {at_next}"
                        )));
                    }
                    count += 1;
                }
            }
        }
    }
    Ok(Outcome::Pass(format!(
        "{count} indices; system = value at n0 = value at n0+1"
    )))
}

fn criterion_7() -> Check {
    let oracle = Oracle::new(40);
    let mut count = 0;
    for w in 0..=8u64 {
        for lambda in partitions_of(w) {
            for a in 0..=w {
                for mu in partitions_of(a) {
                    for nu in partitions_of(w - a) {
                        let lr = lr_coeff(&lambda, &mu, &nu).map_err(err)?;
                        let ml =
                            murnaghan_littlewood_lr(&oracle, &lambda, &mu, &nu).map_err(err)?;
                        if lr != ml {
                            return Ok(Outcome::Regression(format!(
                                "({lambda}; {mu}, {nu}): lr {lr}, reduced {ml}"
                            )));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass(format!("{count} triples with |lambda| <= 8")))
}

fn criterion_8() -> Check {
    let start = Instant::now();
    let oracle = Oracle::new(0);
    let cfg = HuntConfig {
        n_max: 4,
        ..HuntConfig::default()
    };
    let smallest = family_triple(2, 1, 6).map_err(err)?;
    let mut pair = vec![smallest.clone(), smallest.swapped()];
    pair.sort();

    let box12 = SearchBox::new(12).map_err(err)?;
    let out12 = hunt_strong_sh(&box12, &cfg, &oracle).map_err(err)?;
    let light = hunt_strong_sh(&box12.with_max_weight(12), &cfg, &oracle).map_err(err)?;
    let out16 = hunt_strong_sh(&SearchBox::new(16).map_err(err)?, &cfg, &oracle).map_err(err)?;
    let pattern16 = out16
        .hits
        .iter()
        .all(|h| codimension_two_pattern(&h.triple));

    let family12 = family_triples_in(&box12);
    if !out12.classification.holds()
        || out12.hit_triples() != family12
        || light.hit_triples() != pair
        || !out16.classification.holds()
        || !pattern16
    {
        return Ok(Outcome::Regression(format!(
            "lambda1 <= 12: {} hits vs {} family members; |lambda| <= 12: {:?}; lambda1 <= 16 pattern {pattern16}",
            out12.hits.len(),
            family12.len(),
            light.hit_triples().iter().map(|t| t.to_string()).collect::<Vec<_>>()
        )));
    }
    let detail = format!(
        "lambda1 <= 16: {} hits, all with mu1 = mu2 = nu2 + 1, lambda2, lambda3 even, and equal to the \
         counterexample family; |lambda| <= 12 gives exactly {smallest} and its swap; {:.2?}",
        out16.hits.len(),
        start.elapsed()
    );
    Ok(if out12.hit_triples() == pair {
        Outcome::Pass(detail)
    } else {
        Outcome::Worded(format!(
            "lambda1 <= 12 has {} hits, not 2: the counterexample family itself puts {} members there, \
             e.g. {}. {detail}",
            out12.hits.len(),
            family12.len(),
            family_triple(2, 1, 7).map_err(err)?
        ))
    })
}

fn criterion_9() -> Check {
    let start = Instant::now();
    let oracle = Oracle::new(0);
    let cfg = AnalysisConfig {
        n_max: 10,
        ..AnalysisConfig::default()
    };
    let triples = SearchBox::new(10).map_err(err)?.triples();
    let mut worst = 0;
    let mut literal_odd_fails = 0usize;
    let mut example = None;
    for t in &triples {
        let r = analyze_triple(t, &cfg, &oracle).map_err(|e| format!("{t}: {e}"))?;
        let f = &r.quasipolynomial;
        let Index::Value(pi) = positivity_index(f, cfg.cap) else {
            return Ok(Outcome::Regression(format!(
                "{t}: positivity index over the cap"
            )));
        };
        worst = worst.max(pi);
        let d = decompose_shape(f).map_err(|e| format!("{t}: {e}"))?;
        // Δ(0) = 1 is a property of the cells supporting g; g ≡ 0 has Δ ≡ 0
        let zero = f.is_identically_zero();
        if d.q.is_negative() || d.l.is_negative() || (!zero && !d.delta_even.is_one()) {
            return Ok(Outcome::Regression(format!(
                "{t}: Q = {}, L = {}, delta_even = {}",
                d.q, d.l, d.delta_even
            )));
        }
        let g1 = f.evaluate(1);
        let from_origin = shape_constant(&d) + &d.delta_even;
        for n in 1..=9u64 {
            let lhs = f.evaluate(n + 1);
            let displayed = shifted_shape_value(&d, n, &g1);
            if n % 2 == 0 && lhs != displayed {
                return Ok(Outcome::Regression(format!(
                    "{t}: N = {n}: {lhs} != {displayed}"
                )));
            }
            if n % 2 == 1 {
                if lhs != shifted_shape_value(&d, n, &from_origin) {
                    return Ok(Outcome::Regression(format!(
                        "{t}: odd N = {n} with Delta(0)"
                    )));
                }
                if lhs != displayed {
                    literal_odd_fails += 1;
                    if example.is_none() {
                        example = Some(format!("{t} at N = {n}: {lhs} vs {displayed}"));
                    }
                }
            }
        }
    }
    if worst > 1 {
        return Ok(Outcome::Regression(format!("positivity index {worst} > 1")));
    }
    let detail = format!(
        "{} triples: max positivity index {worst}; Q, L >= 0 throughout, delta_even = 1 wherever g is not identically 0; \
         displayed identity exact at every even N; {:.2?}",
        triples.len(),
        start.elapsed()
    );
    Ok(match example {
        None => Outcome::Pass(detail),
        Some(ex) => Outcome::Worded(format!(
            "displayed identity fails at odd N in {literal_odd_fails} (triple, N) cases, e.g. {ex}; \
             there the constant is Q/4 + L/2 + Delta(0) instead of g(1), which holds everywhere. {detail}"
        )),
    })
}

fn criterion_10() -> Check {
    let oracle = Oracle::new(12);
    let mut parts = Vec::new();

    // reduction lemma on every l(lambda) = 4 triple of weight <= 12
    let mut reduced = 0;
    for n in 4..=12u64 {
        let two = partitions_bounded(n, n, 2);
        for lambda in partitions_bounded(n, n, 4)
            .into_iter()
            .filter(|l| l.length() == 4)
        {
            for mu in &two {
                for nu in &two {
                    let t = KronTriple::new(lambda.clone(), mu.clone(), nu.clone()).map_err(err)?;
                    let (a, b) = (
                        kron_with(&t, Method::Reduction, &oracle).map_err(err)?,
                        oracle.kron(&t).map_err(err)?,
                    );
                    if a != b {
                        return Ok(Outcome::Regression(format!("reduction {t}: {a} vs {b}")));
                    }
                    reduced += 1;
                }
            }
        }
    }
    parts.push(format!("reduction {reduced}"));

    let mut pairs = 0;
    for n in 0..=8u64 {
        let ps = partitions_of(n);
        for a in &ps {
            for b in &ps {
                let ip = oracle.inner_product(a, b).map_err(err)?;
                let want = if a == b { int(1) } else { int(0) };
                if ip != want {
                    return Ok(Outcome::Regression(format!("<{a}, {b}> = {ip}")));
                }
                pairs += 1;
            }
        }
    }
    parts.push(format!("orthogonality {pairs}"));

    let mut sym = 0;
    for n in 1..=7u64 {
        let ps = partitions_of(n);
        for l in &ps {
            for m in &ps {
                for k in &ps {
                    let g = oracle
                        .kron(&KronTriple::new(l.clone(), m.clone(), k.clone()).map_err(err)?)
                        .map_err(err)?;
                    for (a, b, c) in [(m, l, k), (k, m, l), (l, k, m), (m, k, l), (k, l, m)] {
                        let h = oracle
                            .kron(&KronTriple::new(a.clone(), b.clone(), c.clone()).map_err(err)?)
                            .map_err(err)?;
                        if g != h {
                            return Ok(Outcome::Regression(format!("symmetry ({l}; {m}, {k})")));
                        }
                    }
                    sym += 1;
                }
            }
        }
    }
    // the fast path across permutations, where every shape has at most two rows
    for n in 1..=14u64 {
        let two = partitions_bounded(n, n, 2);
        for l in &two {
            for m in &two {
                for k in &two {
                    let g = kron_two_row(
                        &KronTriple::new(l.clone(), m.clone(), k.clone()).map_err(err)?,
                    )
                    .map_err(err)?;
                    for (a, b, c) in [(m, l, k), (k, m, l), (l, k, m), (m, k, l), (k, l, m)] {
                        let h = kron_two_row(
                            &KronTriple::new(a.clone(), b.clone(), c.clone()).map_err(err)?,
                        )
                        .map_err(err)?;
                        if g != h {
                            return Ok(Outcome::Regression(format!(
                                "rosas symmetry ({l}; {m}, {k})"
                            )));
                        }
                    }
                    sym += 1;
                }
            }
        }
    }
    parts.push(format!("symmetry {sym}"));

    let mut nonneg = 0;
    for t in SearchBox::new(12).map_err(err)?.triples() {
        let geo = RosasGeometry::new(&t).map_err(err)?;
        let (plus, minus) = (
            geo.count_by_rows(geo.r_plus()),
            geo.count_by_rows(geo.r_minus()),
        );
        if plus < minus {
            return Ok(Outcome::Regression(format!("negative count for {t}")));
        }
        nonneg += 1;
    }
    parts.push(format!("nonnegativity {nonneg}"));

    let mut sat = 0;
    for w in 0..=6u64 {
        for lambda in partitions_of(w) {
            for a in 0..=w {
                for mu in partitions_of(a) {
                    for nu in partitions_of(w - a) {
                        if !lr_saturation_check(&lambda, &mu, &nu, 4).map_err(err)? {
                            return Ok(Outcome::Regression(format!(
                                "LR saturation ({lambda}; {mu}, {nu})"
                            )));
                        }
                        sat += 1;
                    }
                }
            }
        }
    }
    parts.push(format!("LR saturation {sat}"));
    Ok(Outcome::Pass(parts.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("counterexample family values", criterion_1),
        ("smallest counter-example", criterion_2),
        ("PH2 counter-example", criterion_3),
        ("alternating family", criterion_4),
        ("three-way equivalence", criterion_5),
        ("one-row system vs stable limit", criterion_6),
        ("Murnaghan-Littlewood", criterion_7),
        ("classification hunt", criterion_8),
        ("positivity index and shift identity", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut regressions = 0;
    let mut worded = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let line = match run() {
            Ok(Outcome::Pass(d)) => format!("PASS  {name}: {d}"),
            Ok(Outcome::Worded(d)) => {
                worded += 1;
                format!("FAIL  {name} (as worded): {d}")
            }
            Ok(Outcome::Regression(d)) => {
                regressions += 1;
                format!("FAIL  {name}: {d}")
            }
            Err(e) => {
                regressions += 1;
                format!("FAIL  {name}: error {e}")
            }
        };
        println!("criterion {:>2}  {line}", i + 1);
    }
    println!(
        "acceptance: {} pass, {worded} fail as worded, {regressions} regressions",
        criteria.len() - worded - regressions
    );
    if regressions == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
