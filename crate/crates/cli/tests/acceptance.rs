//! Acceptance criteria 1-10. Prints one `[PASS]`/`[FAIL]` line per criterion
//! and exits nonzero if any fails.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use monideal::decomposition::{
    check_localization, decomposition_exponents, primary_decompose, verify_growth_frobenius,
    verify_growth_ordinary, GrowthCertificate, PrimaryComponent,
};
use monideal::katzman::{build_instance, growth_exponent, verify_katzman};
use monideal::regularity::{
    colon_regularity_check, regularity, verify_power_regularity, CoefficientField,
};
use monideal::{Limits, Monomial, MonomialIdeal, Ring};
use monideal_cli::random::{self, ring_of_dim};
use monideal_cli::report::{to_json, GrowthDoc, KatzmanDoc, VerifyRegDoc};
use rand::Rng;

const QQ: CoefficientField = CoefficientField::Rationals;

struct Outcome {
    pass: bool,
    summary: String,
    /// Everything the criterion computed, for the determinism check.
    transcript: String,
}

/// Instances kept for the brute-force comparison of criterion 3.
#[derive(Default)]
struct Corpus {
    decomposed: Vec<(MonomialIdeal, Vec<PrimaryComponent>)>,
}

fn intersect_all(ring: &Ring, comps: &[PrimaryComponent]) -> MonomialIdeal {
    comps.iter().fold(MonomialIdeal::unit(ring), |acc, q| {
        acc.intersect(q.ideal()).expect("same ring")
    })
}

fn criterion1(seed: u64, corpus: &mut Corpus) -> Outcome {
    let mut rng = random::rng(seed);
    let mut failures = 0;
    let mut transcript = String::new();
    for _ in 0..500 {
        let d = rng.gen_range(1..=5);
        let i = random::ideal(&mut rng, &ring_of_dim(d, 0), 8, 4);
        match decomposition_exponents(&i) {
            Ok((l, k)) => {
                failures += usize::from(l != k);
                writeln!(transcript, "{i} | l = {l}, k = {k}").unwrap();
            }
            Err(e) => {
                failures += 1;
                writeln!(transcript, "{i} | error {e}").unwrap();
            }
        }
        if d <= 3 {
            corpus
                .decomposed
                .push((i.clone(), primary_decompose(&i).expect("proper nonzero")));
        }
    }
    Outcome {
        pass: failures == 0,
        summary: format!("l = k on 500 random ideals (d <= 5, <= 8 generators, exponents <= 4): {failures} failures"),
        transcript,
    }
}

fn criterion2(seed: u64, corpus: &mut Corpus) -> Outcome {
    let mut rng = random::rng(seed);
    let mut failures = 0;
    let mut worst = (0u64, 1u64);
    let mut transcript = String::new();
    for k in 0..200 {
        let d = rng.gen_range(1..=4);
        let ring = ring_of_dim(d, 0);
        let i = random::ideal(&mut rng, &ring, 4, 3);
        let j = if rng.gen_bool(0.25) {
            MonomialIdeal::zero(&ring)
        } else {
            random::ideal(&mut rng, &ring, 3, 3)
        };
        let v = [1u32, 2, 3][rng.gen_range(0..3)];
        let cert: GrowthCertificate = if k % 2 == 0 {
            verify_growth_ordinary(&i, &j, v)
        } else {
            verify_growth_frobenius(&i, &j, 1 << v)
        }
        .expect("I + J is proper and nonzero");
        let comps: Vec<PrimaryComponent> =
            cert.per_component.iter().map(|(q, _)| q.clone()).collect();
        let meet = intersect_all(&ring, &comps);
        let target = &cert.ideal_described;
        let equal = meet.contains_ideal(target).unwrap() && target.contains_ideal(&meet).unwrap();
        failures += usize::from(!cert.holds() || !equal);
        for (_, idx) in &cert.per_component {
            if idx * worst.1 > worst.0 * cert.bound {
                worst = (*idx, cert.bound);
            }
        }
        transcript.push_str(&to_json(&GrowthDoc::new(&cert)));
        if d <= 3 {
            corpus.decomposed.push((target.clone(), comps));
        }
    }
    Outcome {
        pass: failures == 0,
        summary: format!(
            "exponent index <= n l d (q l d) and components intersect to the ideal on 200 random pairs: \
             {failures} failures, tightest index/bound {}/{}",
            worst.0, worst.1
        ),
        transcript,
    }
}

/// Calls `f` on every exponent vector of total degree at most `deg`.
fn for_each_monomial(d: usize, deg: u64, f: &mut dyn FnMut(&Monomial)) {
    fn go(exps: &mut Vec<u32>, d: usize, left: u64, f: &mut dyn FnMut(&Monomial)) {
        if exps.len() == d {
            f(&Monomial::new(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps.push(e as u32);
            go(exps, d, left - e, f);
            exps.pop();
        }
    }
    go(&mut Vec::with_capacity(d), d, deg, f);
}

fn criterion3(corpus: &Corpus) -> Outcome {
    let mut failures = 0;
    let mut checked = 0u64;
    let mut transcript = String::new();
    for (i, comps) in &corpus.decomposed {
        let d = i.dim();
        let deg = 2 * u64::from(i.max_exponent()) * d as u64;
        let mut bad = None;
        for_each_monomial(d, deg, &mut |m| {
            checked += 1;
            let in_i = i.contains_monomial(m).unwrap();
            let in_all = comps
                .iter()
                .all(|q| q.ideal().contains_monomial(m).unwrap());
            if in_i != in_all && bad.is_none() {
                bad = Some(m.display(i.ring()).to_string());
            }
        });
        if let Some(m) = &bad {
            failures += 1;
            writeln!(transcript, "{i} | disagree at {m}").unwrap();
        } else {
            writeln!(transcript, "{i} | agree up to degree {deg}").unwrap();
        }
    }
    Outcome {
        pass: failures == 0,
        summary: format!(
            "membership in I and in all components agrees on {} instances with d <= 3 ({checked} monomials): \
             {failures} failures",
            corpus.decomposed.len()
        ),
        transcript,
    }
}

fn criterion4(seed: u64) -> Outcome {
    let mut rng = random::rng(seed);
    let mut failures = 0;
    let mut transcript = String::new();
    for _ in 0..200 {
        let d = rng.gen_range(1..=4);
        let ring = ring_of_dim(d, 0);
        let i = random::ideal(&mut rng, &ring, 4, 3);
        let j = random::ideal(&mut rng, &ring, 3, 3);
        let u = random::monomial(&mut rng, d, 2);
        let c = check_localization(&i, &j, &u).expect("same ring");
        failures += usize::from(!c.holds());
        writeln!(
            transcript,
            "{i} | {j} | {} | {} | {}",
            u.display(&ring),
            c.lhs,
            c.rhs
        )
        .unwrap();
    }
    Outcome {
        pass: failures == 0,
        summary: format!("tight closure commutes with localization on 200 random (I, J, u), d <= 4: {failures} failures"),
        transcript,
    }
}

fn criterion5() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut growth = Vec::new();
    let mut transcript = String::new();
    for (p, e) in [(2u64, 1u32), (2, 2), (3, 1), (5, 1)] {
        let mut rng = random::rng(p * 100 + u64::from(e));
        let result = build_instance(p, e, &mut rng, &limits).and_then(|inst| {
            let cert = verify_katzman(&inst, &limits)?;
            let g = growth_exponent(&inst)?;
            Ok((cert, g))
        });
        match result {
            Ok((cert, g)) => {
                let lettered_ok = cert.checks.iter().filter(|c| c.label.len() == 1).count() == 9
                    && cert
                        .checks
                        .iter()
                        .filter(|c| c.label.len() == 1)
                        .all(|c| c.holds);
                if !lettered_ok || g.value > 2 {
                    failures.push(format!("(p, e) = ({p}, {e})"));
                }
                growth.push(format!("q={}:{}", cert.instance.q, g.value));
                transcript.push_str(&to_json(&KatzmanDoc::new(&cert, Some(&g))));
            }
            Err(err) => failures.push(format!("(p, e) = ({p}, {e}): {err}")),
        }
    }
    Outcome {
        pass: failures.is_empty(),
        summary: format!(
            "checks (a)-(i) and growth exponent <= 2 for (p, e) in (2,1), (2,2), (3,1), (5,1): growth {}{}",
            growth.join(" "),
            if failures.is_empty() { String::new() } else { format!("; failed {}", failures.join(", ")) }
        ),
        transcript,
    }
}

fn criterion6() -> Outcome {
    let limits = Limits::default();
    let mut failures = Vec::new();
    let mut transcript = String::new();
    let mut check = |i: MonomialIdeal, want: i64| {
        let got = regularity(&i, QQ, &limits).expect("proper nonzero");
        writeln!(transcript, "reg({i}) = {got}").unwrap();
        if got != want {
            failures.push(format!("reg({i}) = {got}, expected {want}"));
        }
    };
    let r1 = ring_of_dim(1, 0);
    for a in 1..=5u32 {
        check(
            MonomialIdeal::new(&r1, [Monomial::var_power(1, 0, a)]).unwrap(),
            i64::from(a),
        );
    }
    let r3 = ring_of_dim(3, 0);
    for t in 1..=3usize {
        let mut a = vec![1u32; t];
        loop {
            let gens = a
                .iter()
                .enumerate()
                .map(|(v, &e)| Monomial::var_power(3, v, e));
            let want = a.iter().map(|&e| i64::from(e)).sum::<i64>() - t as i64 + 1;
            check(MonomialIdeal::new(&r3, gens).unwrap(), want);
            let Some(pos) = a.iter().position(|&e| e < 3) else {
                break;
            };
            a[pos] += 1;
            a[..pos].iter_mut().for_each(|e| *e = 1);
        }
    }
    let m = MonomialIdeal::prime(&r3, 0..3);
    for n in 1..=3u32 {
        check(m.power(n).unwrap(), i64::from(n));
    }
    let lines = transcript.lines().count();
    Outcome {
        pass: failures.is_empty(),
        summary: format!(
            "principal, pure-power complete intersection and (x,y,z)^n regularities exact on {lines} ideals{}",
            if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }
        ),
        transcript,
    }
}

fn criterion7(seed: u64) -> Outcome {
    let limits = Limits::default();
    let mut rng = random::rng(seed);
    let (mut failures, mut cases) = (0, 0);
    let mut transcript = String::new();
    for _ in 0..100 {
        let d = rng.gen_range(1..=3);
        let i = random::ideal(&mut rng, &ring_of_dim(d, 0), 4, 3);
        for var in 0..d {
            for l in 1..=2 {
                let c = colon_regularity_check(&i, var, l, QQ, &limits).expect("proper nonzero");
                cases += 1;
                failures += usize::from(!c.holds());
                writeln!(transcript, "{i} | var {var} | l {l} | {c:?}").unwrap();
            }
        }
    }
    Outcome {
        pass: failures == 0,
        summary: format!(
            "intersection identity and both colon bounds on 100 random ideals, every variable, l in 1,2 \
             ({cases} cases): {failures} failures"
        ),
        transcript,
    }
}

fn criterion8(seed: u64) -> Outcome {
    let limits = Limits::default();
    let mut rng = random::rng(seed);
    let mut inputs: Vec<(Vec<MonomialIdeal>, u32)> = Vec::new();
    let r2 = ring_of_dim(2, 0);
    let id = |s: &[&[u32]]| {
        MonomialIdeal::new(&r2, s.iter().map(|e| Monomial::new(e.to_vec()))).unwrap()
    };
    inputs.push((vec![id(&[&[1, 0], &[0, 1]])], 4));
    inputs.push((vec![id(&[&[2, 0], &[1, 1]])], 3));
    inputs.push((vec![id(&[&[2, 0]]), id(&[&[0, 1]])], 3));
    inputs.push((vec![id(&[&[2, 0], &[0, 2]])], 3));
    for _ in 0..50 {
        let d = rng.gen_range(1..=3);
        let ring = ring_of_dim(d, 0);
        let m = rng.gen_range(1..=2);
        inputs.push((
            (0..m)
                .map(|_| random::ideal(&mut rng, &ring, 3, 3))
                .collect(),
            3,
        ));
    }
    let mut failures = 0;
    let mut max_ratio = 0f64;
    let mut transcript = String::new();
    for (ideals, n_max) in &inputs {
        let v =
            verify_power_regularity(ideals, *n_max, QQ, &limits).expect("proper nonzero inputs");
        failures += usize::from(!v.holds());
        for row in &v.rows {
            max_ratio = max_ratio.max(row.slack_ratio());
        }
        transcript.push_str(&to_json(&VerifyRegDoc::new(&v, QQ)));
    }
    Outcome {
        pass: failures == 0,
        summary: format!(
            "reg(sum I_j^n) <= n max(dl, L) for n <= 3 on 4 worked + 50 random inputs: {failures} failures, \
             largest reg/bound {max_ratio:.3}"
        ),
        transcript,
    }
}

fn criterion9(seed: u64) -> Outcome {
    let limits = Limits::default();
    let mut rng = random::rng(seed);
    let mut failures = 0;
    let mut transcript = String::new();
    for _ in 0..30 {
        let d = rng.gen_range(1..=3);
        let i = random::strongly_stable(&mut rng, &ring_of_dim(d, 0), 3, 3);
        let base = regularity(&i, QQ, &limits).unwrap();
        write!(transcript, "{i} | reg {base}").unwrap();
        for n in 1..=3u32 {
            let r = regularity(&i.power(n).unwrap(), QQ, &limits).unwrap();
            failures += usize::from(r > i64::from(n) * base);
            write!(transcript, " | n={n}: {r}").unwrap();
        }
        transcript.push('\n');
    }
    Outcome {
        pass: failures == 0,
        summary: format!("reg(I^n) <= n reg(I), n <= 3, on 30 random strongly stable ideals: {failures} failures"),
        transcript,
    }
}

const SEED: u64 = 20_240_611;

fn run_all() -> Vec<(u32, Outcome, Duration, u64)> {
    let mut corpus = Corpus::default();
    let mut out = Vec::new();
    let mut timed = |n: u32, budget_s: u64, f: &mut dyn FnMut() -> Outcome| {
        let start = Instant::now();
        let o = f();
        out.push((n, o, start.elapsed(), budget_s));
    };
    timed(1, 10, &mut || criterion1(SEED + 1, &mut corpus));
    timed(2, 60, &mut || criterion2(SEED + 2, &mut corpus));
    timed(3, 60, &mut || criterion3(&corpus));
    timed(4, 30, &mut || criterion4(SEED + 4));
    timed(5, 300, &mut criterion5);
    timed(6, 60, &mut criterion6);
    timed(7, 300, &mut || criterion7(SEED + 7));
    timed(8, 600, &mut || criterion8(SEED + 8));
    timed(9, 300, &mut || criterion9(SEED + 9));
    out
}

fn main() {
    let first = run_all();
    let mut all_pass = true;
    for (n, o, t, budget) in &first {
        all_pass &= o.pass;
        let over = if t.as_secs() >= *budget {
            ", over expected runtime"
        } else {
            ""
        };
        println!(
            "[{}] criterion {n}: {} ({:.1} s, expected < {budget} s{over})",
            if o.pass { "PASS" } else { "FAIL" },
            o.summary,
            t.as_secs_f64()
        );
    }

    let start = Instant::now();
    let second = run_all();
    let differing: Vec<String> = first
        .iter()
        .zip(&second)
        .filter(|(a, b)| a.1.transcript != b.1.transcript)
        .map(|(a, _)| a.0.to_string())
        .collect();
    let bytes: usize = first.iter().map(|(_, o, _, _)| o.transcript.len()).sum();
    let pass10 = differing.is_empty();
    all_pass &= pass10;
    println!(
        "[{}] criterion 10: rerunning criteria 1-9 with the same seeds gives byte-identical certificates \
         ({bytes} bytes compared{}) ({:.1} s)",
        if pass10 { "PASS" } else { "FAIL" },
        if pass10 { String::new() } else { format!("; differs in {}", differing.join(", ")) },
        start.elapsed().as_secs_f64()
    );
    if !all_pass {
        std::process::exit(1);
    }
}
