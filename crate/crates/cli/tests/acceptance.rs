//! Acceptance suite: one line per criterion.
//!
//! Runs as a plain binary so the PASS/FAIL lines are always shown. The
//! process fails when any check fails, except checks listed in
//! `KNOWN_FAILURES`, which must keep failing.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chowforms::chowlab::{
    chow_degree_oracle, ideal_claim_hilbert_check, verify_chow_tangent, verify_terracini,
};
use chowforms::decomp::{
    forward_check, reconstruct, synth_instance, verify_smoothness_case, vsh_point_count, SamplingPlan,
};
use chowforms::exactalg::PrimeField;
use chowforms::formulas::{ah_rank, chow_degree, defective_classification, is_defective, smin, vsh_degree};
use chowforms::polyring::{apply, random_form, Form, Ring};
use chowforms::rng::seeded;
use num_bigint::BigUint;
use num_integer::Integer;
use serde_json::Value;

const GUARD: u64 = 10_000_000;

/// The paper states that a and b have 86 digits; the degree formula it
/// gives yields 76-digit numbers, so this check cannot pass.
const KNOWN_FAILURES: &[&str] = &["1/digits"];

struct Check {
    id: String,
    pass: bool,
    detail: String,
}

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Option<Duration>,
    checks: Vec<Check>,
}

impl Criterion {
    fn new(number: u32, title: &'static str, limit: Option<Duration>) -> Self {
        Self {
            number,
            title,
            limit,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            id: format!("{}/{name}", self.number),
            pass,
            detail: detail.into(),
        });
    }
}

fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i)
}

/// `C(m, k)` from factorials.
fn binom_fact(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::from(0u32);
    }
    factorial(m) / (factorial(k) * factorial(m - k))
}

fn partitions(n: u64, s: u64) -> BigUint {
    factorial(n * s) / (factorial(n).pow(s as u32) * factorial(s))
}

fn criterion_1() -> Criterion {
    let mut c = Criterion::new(1, "golden zero-dimensional table", Some(Duration::from_secs(5)));
    let out = Command::new(env!("CARGO_BIN_EXE_chowforms"))
        .args(["formulas", "--n", "2..100", "--d", "1..34", "--zero-dim", "--json"])
        .output()
        .expect("run chowforms");
    c.check("exit", out.status.success(), format!("status {}", out.status));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let rows: Vec<(u64, u64, u64, String)> = doc["results"]
        .as_array()
        .map(|rs| {
            rs.iter()
                .map(|r| {
                    (
                        r["d"].as_u64().unwrap_or(0),
                        r["n"].as_u64().unwrap_or(0),
                        r["smin"].as_u64().unwrap_or(0),
                        r["vsh_degree"].as_str().unwrap_or("").to_string(),
                    )
                })
                .collect()
        })
        .unwrap_or_default();
    let a = partitions(3, 28).to_string();
    let b = partitions(6, 14).to_string();
    let expected: Vec<(u64, u64, u64, String)> = vec![
        (5, 2, 3, "15".into()),
        (8, 2, 5, "945".into()),
        (17, 6, 14, b.clone()),
        (20, 2, 14, "213458046676875".into()),
        (25, 2, 18, "221643095476699771875".into()),
        (34, 3, 28, a.clone()),
    ];
    c.check("rows", rows == expected, format!("{} rows, expected {}", rows.len(), expected.len()));
    c.check(
        "digits",
        a.len() == 86 && b.len() == 86,
        format!("a has {} digits, b has {} digits, expected 86 each", a.len(), b.len()),
    );
    c
}

fn criterion_2() -> Criterion {
    let mut c = Criterion::new(2, "defectivity classification", Some(Duration::from_secs(5)));
    let mut mismatches = Vec::new();
    for n in 2..=30 {
        for d in 2..=60 {
            if Ok(is_defective(n, d)) != defective_classification(n, d) {
                mismatches.push((n, d));
            }
        }
    }
    c.check("grid", mismatches.is_empty(), format!("{} mismatches on 2..30 x 2..60", mismatches.len()));
    c
}

fn criterion_3() -> Criterion {
    let mut c = Criterion::new(3, "generic Waring rank table", None);
    let specials = [((2, 4), 6u32), ((3, 4), 10), ((4, 4), 15), ((4, 3), 8)];
    let ok = specials.iter().all(|&((n, d), r)| ah_rank(n, d) == BigUint::from(r));
    c.check("exceptions", ok, "(2,4)->6 (3,4)->10 (4,4)->15 (4,3)->8");
    let mut bad = 0;
    for n in 1..=30u64 {
        for d in 1..=30u64 {
            let want = if d == 2 {
                BigUint::from(n + 1)
            } else if let Some(&(_, r)) = specials.iter().find(|((a, b), _)| (*a, *b) == (n, d)) {
                BigUint::from(r)
            } else {
                binom_fact(n + d, d).div_ceil(&BigUint::from(n + 1))
            };
            if ah_rank(n, d) != want {
                bad += 1;
            }
        }
    }
    c.check("grid", bad == 0, format!("{bad} mismatches on 30 x 30"));
    c
}

fn criterion_4() -> Criterion {
    let mut c = Criterion::new(4, "Chow tangent space", Some(Duration::from_secs(30)));
    let fp = PrimeField::default();
    let mut failed = Vec::new();
    for n in 2..=4 {
        for s in 2..=4 {
            for seed in 0..3 {
                let ok = verify_chow_tangent(&fp, n, s, seed, 5).map(|r| {
                    r.pass && r.computed["tangent_dim"] == (n * s + 1) as i64 && r.computed["tangent_in_meets"] == 1
                });
                if ok != Ok(true) {
                    failed.push((n, s, seed));
                }
            }
        }
    }
    c.check("grid", failed.is_empty(), format!("27 runs, failures {failed:?}"));
    c
}

fn criterion_5() -> Criterion {
    let mut c = Criterion::new(5, "Chow variety degree", Some(Duration::from_secs(60)));
    let mut bad = Vec::new();
    for n in 1..=6 {
        for s in 1..=12 {
            if chow_degree(n, s) != partitions(n, s) {
                bad.push((n, s));
            }
        }
    }
    c.check("identity", bad.is_empty(), format!("n<=6 s<=12, mismatches {bad:?}"));
    let fp = PrimeField::default();
    let mut counts = Vec::new();
    let mut ok = true;
    for (n, s) in [(2, 2), (2, 3), (2, 4), (3, 2)] {
        let got = chow_degree_oracle(&fp, n, s, 0, GUARD).ok();
        let want = chow_degree(n as u64, s as u64);
        ok &= got.map(BigUint::from) == Some(want.clone());
        counts.push(format!("({n},{s}) {got:?}/{want}"));
    }
    c.check("enumeration", ok, counts.join(" "));
    c
}

fn criterion_6() -> Criterion {
    let mut c = Criterion::new(6, "Terracini oracle for smin", Some(Duration::from_secs(120)));
    let fp = PrimeField::default();
    let mut bad = Vec::new();
    let mut retries = 0;
    for n in 1..=3usize {
        for d in 1..=8usize {
            match verify_terracini(&fp, n, d, 0, 5) {
                Ok(r) if r.pass => retries += r.retries_used,
                Ok(r) => bad.push((n, d, Some(r.computed["smin"]))),
                Err(_) => bad.push((n, d, None)),
            }
        }
    }
    c.check("grid", bad.is_empty(), format!("n<=3 d<=8, {retries} retries used, mismatches {bad:?}"));
    c
}

fn criterion_7() -> Criterion {
    let mut c = Criterion::new(7, "codimension-one round trip", Some(Duration::from_secs(60)));
    let fp = PrimeField::default();
    let mut bad = Vec::new();
    let mut runs = 0;
    for n in 1..=3usize {
        for d in 1..=6usize {
            let s = smin(n as u64, d as u64) as usize;
            for seed in 0..5 {
                runs += 1;
                let ok = (|| -> chowforms::Result<bool> {
                    let inst = synth_instance(&fp, n, d, s, seed)?;
                    if !forward_check(&fp, &inst.f, &inst.hyperplanes)? {
                        return Ok(false);
                    }
                    let rec = reconstruct(&fp, &inst.f, &inst.hyperplanes, SamplingPlan::new(n, d, seed), 5)?;
                    let summands = rec.instance.summands.expect("summands");
                    let mut sum = Form::zero(&fp, n, d, Ring::S);
                    for (l, g) in inst.hyperplanes.iter().zip(&summands) {
                        if !apply(&fp, &l.to_form(), g)?.is_zero(&fp) {
                            return Ok(false);
                        }
                        sum = sum.add(&fp, g)?;
                    }
                    Ok(summands.len() == s && sum == inst.f)
                })();
                if ok != Ok(true) {
                    bad.push((n, d, seed));
                }
            }
        }
    }
    c.check("grid", bad.is_empty(), format!("{runs} instances, failures {bad:?}"));
    c
}

fn criterion_8() -> Criterion {
    let mut c = Criterion::new(8, "smoothness in the zero-dimensional case", None);
    let fp = PrimeField::default();
    for (d, dim) in [(5usize, 4i64), (8, 11)] {
        let mut seen = BTreeSet::new();
        let mut ok = true;
        for seed in 0..5 {
            match verify_smoothness_case(&fp, 2, d, seed, 5) {
                Ok(r) => {
                    ok &= r.pass && r.computed["perp_dim"] == dim && r.computed["ideal_dim"] == dim;
                    seen.insert((r.computed["perp_dim"], r.computed["ideal_dim"]));
                }
                Err(_) => ok = false,
            }
        }
        c.check(&format!("d{d}"), ok, format!("(2,{d}) dims seen {seen:?}, expected {dim}"));
    }
    c
}

fn criterion_9() -> Criterion {
    let mut c = Criterion::new(9, "VSH rational points over F_11", Some(Duration::from_secs(120)));
    let fp = PrimeField::new(11).unwrap();
    let bound = vsh_degree(2, 5);
    let (mut planted, mut generic, mut below) = (Vec::new(), Vec::new(), Vec::new());
    for seed in 0..20 {
        let inst = synth_instance(&fp, 2, 5, 3, seed).expect("instance");
        planted.push(vsh_point_count(&fp, &inst.f, 3, GUARD).ok());
        let f = random_form(&fp, 2, 5, Ring::S, &mut seeded(seed));
        generic.push(vsh_point_count(&fp, &f, 3, GUARD).ok());
        below.push(vsh_point_count(&fp, &f, 2, GUARD).ok());
    }
    c.check(
        "planted",
        planted.iter().all(|x| x.is_some_and(|v| v >= 1)),
        format!("synthetic counts {planted:?}"),
    );
    c.check(
        "generic",
        generic.iter().all(|x| x.is_some_and(|v| BigUint::from(v) <= bound)),
        format!("generic counts {generic:?}, bound {bound}"),
    );
    c.check("below_smin", below.iter().all(|x| *x == Some(0)), format!("s=2 counts {below:?}"));
    c
}

fn criterion_10() -> Criterion {
    let mut c = Criterion::new(10, "ideal of pairwise meets", None);
    let fp = PrimeField::default();
    let mut bad = Vec::new();
    for n in 2..=3 {
        for s in 3..=4 {
            for seed in 0..3 {
                let ok = ideal_claim_hilbert_check(&fp, n, s, s - 1..=s + 2, seed, 5)
                    .map(|r| r.pass && r.computed.len() == 4);
                if ok != Ok(true) {
                    bad.push((n, s, seed));
                }
            }
        }
    }
    c.check("grid", bad.is_empty(), format!("12 runs, failures {bad:?}"));
    c
}

fn main() -> ExitCode {
    let criteria: [fn() -> Criterion; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    for run in criteria {
        let start = Instant::now();
        let mut c = run();
        let elapsed = start.elapsed();
        if let Some(limit) = c.limit {
            c.check("runtime", elapsed <= limit, format!("{elapsed:.2?} (limit {limit:?})"));
        }
        let pass = c.checks.iter().all(|k| k.pass);
        println!(
            "criterion {:>2} {:<42} {}  ({elapsed:.2?})",
            c.number,
            c.title,
            if pass { "PASS" } else { "FAIL" }
        );
        for k in &c.checks {
            let known = KNOWN_FAILURES.contains(&k.id.as_str());
            println!(
                "    {:<16} {}{}  {}",
                k.id,
                if k.pass { "pass" } else { "fail" },
                if known { " (known)" } else { "" },
                k.detail
            );
            if k.pass == known {
                unexpected.push(k.id.clone());
            }
        }
    }
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected results: {unexpected:?}");
        ExitCode::FAILURE
    }
}
