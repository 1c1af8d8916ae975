use hankel_core::closedform::{closed_form_transform, random_bseq, series_for_transform, step_recursion_check};
use hankel_core::hankel::{condensation_check, verify_reduction, Reduction};
use hankel_core::orthopoly::{orthogonality_check, classify_p_polys};
use hankel_core::{hankel_transform, BSeq, Builtin, Numerators, PowerSeries, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::args::Suite;
use crate::commands::Outcome;
use crate::error::CliResult;
use crate::source::Resolved;

pub struct Settings {
    pub kmax: Option<usize>,
    pub upto: Option<usize>,
    pub cases: usize,
    pub seed: u64,
}

struct Case {
    label: String,
    failures: Vec<String>,
}

/// Sequences to run on: the given `--b`, or `cases` random ones from `seed`.
fn corpus(src: &Resolved, st: &Settings) -> Vec<BSeq> {
    if let Ok(b) = src.bseq() {
        return vec![b.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(st.seed);
    (0..st.cases).map(|_| random_bseq(&mut rng, 10, 12)).collect()
}

fn label(b: &BSeq) -> String {
    let v: Vec<String> = b.values().iter().map(i64::to_string).collect();
    v.join(",")
}

/// Unit series `1 + c_1 x + ...` with small integer coefficients.
fn random_unit_series(rng: &mut impl Rng, order: usize) -> PowerSeries {
    PowerSeries::from_fn(order, |i| {
        if i == 0 {
            Scalar::one()
        } else {
            Scalar::from_int(rng.random_range(-3..=3))
        }
    })
}

fn random_nonzero(rng: &mut impl Rng) -> Scalar {
    let v = rng.random_range(1..=3);
    Scalar::from_int(if rng.random_bool(0.5) { v } else { -v })
}

/// `1/(1 - a x^p g)` through `x^order`.
fn tail_series(a: &Scalar, p: usize, g: &PowerSeries, order: usize) -> CliResult<PowerSeries> {
    let h = PowerSeries::from_fn(order, |i| if i >= p { g.coeff((i - p) as i64) * a } else { Scalar::zero() });
    Ok(PowerSeries::geometric(&h)?)
}

fn run_orthogonality(b: &BSeq, nums: &Numerators, st: &Settings) -> CliResult<Vec<String>> {
    let kmax = st.kmax.unwrap_or(7).min(b.last_index());
    Ok(orthogonality_check(b, nums, kmax)?
        .iter()
        .filter(|r| !r.holds())
        .map(|r| format!("k = {}", r.k))
        .collect())
}

fn run_closed_form(b: &BSeq, nums: &Numerators, upto: usize) -> CliResult<Vec<String>> {
    let s = series_for_transform(b, nums, upto)?;
    let brute = hankel_transform(&s, 0, upto)?;
    let ext = b.extended_for_order(2 * upto);
    let predicted = closed_form_transform(&ext, upto)?;
    let mut failures = Vec::new();
    for (n, (d, p)) in brute.iter().zip(&predicted).enumerate() {
        if *d != p.evaluate(nums)? {
            failures.push(format!("d({n}) = {d}, predicted {p}"));
        }
    }
    Ok(failures)
}

fn run_signs(b: &BSeq, seed: u64, upto: usize) -> CliResult<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = b.extended_for_order(2 * upto).last_index() + 2;
    let list: Vec<Scalar> = (0..count)
        .map(|_| Scalar::from_int(if rng.random_bool(0.5) { 1 } else { -1 }))
        .collect();
    let nums = Numerators::List(list);
    let mut failures = run_closed_form(b, &nums, upto)?;
    let s = series_for_transform(b, &nums, upto)?;
    for (n, d) in hankel_transform(&s, 0, upto)?.iter().enumerate() {
        if !d.is_zero() && d.as_i64().map(i64::abs) != Some(1) {
            failures.push(format!("d({n}) = {d} is not a sign"));
        }
    }
    Ok(failures)
}

fn run_step(b: &BSeq) -> CliResult<Vec<String>> {
    let mut failures = Vec::new();
    for k in 0..b.last_index().min(4) {
        for n in 1..=2 {
            if !step_recursion_check(b, k, n)?.holds {
                failures.push(format!("k = {k}, n = {n}"));
            }
        }
    }
    Ok(failures)
}

fn run_classification(b: &BSeq, nums: &Numerators) -> CliResult<Vec<String>> {
    let max_m = (b.largest() + 1).min(9) as usize;
    Ok(classify_p_polys(b, nums, max_m)?
        .iter()
        .filter(|r| !r.holds)
        .map(|r| format!("m = {}", r.m))
        .collect())
}

fn run_reductions(seed: u64) -> CliResult<Vec<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = 16;
    let s = random_unit_series(&mut rng, order);
    let a = random_nonzero(&mut rng);
    let p = rng.random_range(1..=3usize);
    let g = random_unit_series(&mut rng, order);
    let tail = |p: usize| tail_series(&a, p, &g, order);
    let mut checks: Vec<(String, PowerSeries, Reduction, i64)> = Vec::new();
    for n in 1..=5 {
        checks.push(("reciprocal".into(), s.clone(), Reduction::Reciprocal, n));
        checks.push(("reciprocal-odd".into(), s.clone(), Reduction::ReciprocalOdd, n));
        for m in 0..=3 {
            checks.push((format!("reciprocal-shifted m={m}"), s.clone(), Reduction::ReciprocalShifted { m }, n));
        }
        checks.push(("quadratic-tail".into(), tail(2)?, Reduction::QuadraticTail { a: a.clone() }, n));
        checks.push(("linear-tail".into(), tail(1)?, Reduction::LinearTail { a: a.clone() }, n));
        checks.push((
            "linear-tail-shifted".into(),
            tail(1)?,
            Reduction::LinearTailShifted { a: a.clone() },
            n,
        ));
    }
    let f = tail(p)?;
    for m in -1..=3i64 {
        for n in 0..m {
            checks.push((format!("tail-vanishing m={m}"), f.clone(), Reduction::TailVanishing { m, p, a: a.clone() }, n));
        }
        checks.push((format!("tail-unit m={m}"), f.clone(), Reduction::TailUnit { m, p, a: a.clone() }, m));
        for n in 1..=4 {
            checks.push((format!("tail m={m} p={p}"), f.clone(), Reduction::TailReduction { m, p, a: a.clone() }, n));
        }
    }
    let mut failures = Vec::new();
    for (name, series, red, n) in checks {
        if !verify_reduction(&series, &red, n)?.holds {
            failures.push(format!("{name}, n = {n}"));
        }
    }
    Ok(failures)
}

fn run_condensation(src: &Resolved, upto: usize) -> CliResult<Vec<Case>> {
    let mut targets: Vec<(String, PowerSeries)> = Vec::new();
    if src.builtin.is_some() || src.series.is_some() || src.fraction.is_some() {
        targets.push(("input".into(), src.series(2 * upto + 2)?));
    } else {
        for name in Builtin::NAMES {
            let b = Builtin::from_name(name, Some(2), None)?;
            targets.push((name.to_string(), b.series(2 * upto + 2)));
        }
    }
    targets
        .into_par_iter()
        .map(|(label, s)| {
            let mut failures = Vec::new();
            for n in 0..=upto {
                if !condensation_check(&s, n)?.holds {
                    failures.push(format!("n = {n}"));
                }
            }
            Ok(Case { label, failures })
        })
        .collect()
}

pub fn verify(src: &Resolved, suite: Suite, st: &Settings) -> CliResult<Outcome> {
    let nums = &src.numerators;
    let cases: Vec<Case> = match suite {
        Suite::Reductions => (0..st.cases as u64)
            .into_par_iter()
            .map(|i| {
                Ok(Case {
                    label: format!("series {i}"),
                    failures: run_reductions(st.seed.wrapping_add(i))?,
                })
            })
            .collect::<CliResult<_>>()?,
        Suite::Condensation => run_condensation(src, st.upto.unwrap_or(5))?,
        _ => {
            let sequences = corpus(src, st);
            sequences
                .par_iter()
                .enumerate()
                .map(|(i, b)| {
                    let failures = match suite {
                        Suite::Orthogonality => run_orthogonality(b, nums, st)?,
                        Suite::ClosedForm => run_closed_form(b, nums, st.upto.unwrap_or(10))?,
                        Suite::Signs => run_signs(b, st.seed.wrapping_add(i as u64), st.upto.unwrap_or(10))?,
                        Suite::Step => run_step(b)?,
                        Suite::Classification => run_classification(b, nums)?,
                        Suite::Reductions | Suite::Condensation => unreachable!("handled above"),
                    };
                    Ok(Case { label: label(b), failures })
                })
                .collect::<CliResult<_>>()?
        }
    };
    let failed = cases.iter().filter(|c| !c.failures.is_empty()).count();
    let value = json!({
        "suite": suite.to_possible_value().map(|v| v.get_name().to_string()),
        "cases": cases.len(),
        "failed": failed,
        "failures": cases
            .iter()
            .filter(|c| !c.failures.is_empty())
            .map(|c| json!({ "case": c.label, "failures": c.failures }))
            .collect::<Vec<Value>>(),
    });
    let failure = (failed > 0).then(|| format!("{failed} of {} cases failed", cases.len()));
    Ok(Outcome { value, failure })
}
