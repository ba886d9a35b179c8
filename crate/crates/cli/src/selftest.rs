//! Randomized invariant suites behind `monideal selftest`.

use std::io::{self, Write};

use monideal::decomposition::{
    check_localization, decomposition_exponents, irreducible_decompose, verify_growth_frobenius,
    verify_growth_ordinary,
};
use monideal::groebner::{colon_fp, intersect_fp, FpRing, IdealFp};
use monideal::regularity::{colon_regularity_check, CoefficientField};
use monideal::{minimalize, Limits, Monomial, MonomialIdeal};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::parse::parse_ideal;
use crate::random;
use crate::report::to_json;

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub suite: &'static str,
    pub case: usize,
    pub detail: String,
}

type Case = fn(&mut ChaCha8Rng, bool) -> Result<(), String>;

fn is_minimal_sorted(gens: &[Monomial]) -> bool {
    gens.windows(2).all(|w| w[0] > w[1])
        && gens.iter().enumerate().all(|(a, g)| {
            gens.iter()
                .enumerate()
                .all(|(b, h)| a == b || !g.divides(h))
        })
}

fn minimalize_case(rng: &mut ChaCha8Rng, fault: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=4);
    let ring = random::ring_of_dim(d, 0);
    let raw: Vec<Monomial> = (0..rng.gen_range(1..=8))
        .map(|_| random::monomial(rng, d, 4))
        .collect();
    let i = minimalize(&ring, raw.clone()).map_err(|e| e.to_string())?;
    let mut gens = i.generators().to_vec();
    if fault {
        let extra = gens[0]
            .checked_mul(&Monomial::var_power(d, 0, 1))
            .map_err(|e| e.to_string())?;
        gens.push(extra);
    }
    if !is_minimal_sorted(&gens) {
        let shown: Vec<String> = gens.iter().map(|g| g.display(&ring).to_string()).collect();
        return Err(format!(
            "minimalize returned a non-canonical list: {}",
            shown.join(", ")
        ));
    }
    for g in &raw {
        if !gens.iter().any(|h| h.divides(g)) {
            return Err(format!("{} is lost by minimalize", g.display(&ring)));
        }
    }
    Ok(())
}

fn roundtrip_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=6);
    let ring = random::ring_of_dim(d, 0);
    let i = random::ideal(rng, &ring, 6, 5);
    let back = parse_ideal(&ring, &i.to_string()).map_err(|e| e.to_string())?;
    if back != i {
        return Err(format!("`{i}` re-parses as `{back}`"));
    }
    Ok(())
}

fn decomposition_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=4);
    let ring = random::ring_of_dim(d, 0);
    let i = random::ideal(rng, &ring, 6, 3);
    let dec = irreducible_decompose(&i).map_err(|e| e.to_string())?;
    if dec.intersection() != i {
        return Err(format!(
            "intersection of `{dec}` is `{}`, not `{i}`",
            dec.intersection()
        ));
    }
    let (l, k) = decomposition_exponents(&i).map_err(|e| e.to_string())?;
    if l != k {
        return Err(format!("{i}: l = {l}, k = {k}"));
    }
    Ok(())
}

fn growth_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=3);
    let ring = random::ring_of_dim(d, 0);
    let i = random::ideal(rng, &ring, 3, 3);
    let j = if rng.gen_bool(0.3) {
        MonomialIdeal::zero(&ring)
    } else {
        random::ideal(rng, &ring, 3, 3)
    };
    let cert = if rng.gen_bool(0.5) {
        verify_growth_ordinary(&i, &j, rng.gen_range(1..=3))
    } else {
        verify_growth_frobenius(&i, &j, [2, 4][rng.gen_range(0..2)])
    }
    .map_err(|e| e.to_string())?;
    if !cert.holds() {
        return Err(to_json(&crate::report::GrowthDoc::new(&cert)));
    }
    Ok(())
}

fn localization_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=4);
    let ring = random::ring_of_dim(d, 0);
    let i = random::ideal(rng, &ring, 4, 3);
    let j = random::ideal(rng, &ring, 3, 3);
    let u = random::monomial(rng, d, 2);
    let c = check_localization(&i, &j, &u).map_err(|e| e.to_string())?;
    if !c.holds() {
        return Err(to_json(&crate::report::LocalizationDoc::new(
            &i, &j, &u, &c,
        )));
    }
    Ok(())
}

fn regularity_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let d = rng.gen_range(1..=3);
    let ring = random::ring_of_dim(d, 0);
    let i = random::ideal(rng, &ring, 4, 2);
    let var = rng.gen_range(0..d);
    let l = rng.gen_range(1..=2);
    let c = colon_regularity_check(&i, var, l, CoefficientField::Rationals, &Limits::default())
        .map_err(|e| e.to_string())?;
    if !c.holds() {
        return Err(format!("{i}, variable {}, l = {l}: {c:?}", ring.name(var)));
    }
    Ok(())
}

fn groebner_case(rng: &mut ChaCha8Rng, _: bool) -> Result<(), String> {
    let p = [2u32, 3, 5, 7][rng.gen_range(0..4)];
    let ring = FpRing::new(random::ring_of_dim(2, p)).map_err(|e| e.to_string())?;
    let limits = Limits::default();
    let make = |rng: &mut ChaCha8Rng| {
        let gens = (0..2).map(|_| random::poly(rng, &ring, 3, 2)).collect();
        IdealFp::new(&ring, gens, &limits).map_err(|e| e.to_string())
    };
    let i = make(rng)?;
    let j = make(rng)?;
    let cap = intersect_fp(&i, &j, &limits).map_err(|e| e.to_string())?;
    if !i.contains_ideal(&cap) || !j.contains_ideal(&cap) {
        return Err(format!("({i}) ∩ ({j}) = ({cap}) is not contained in both"));
    }
    for g in i.generators() {
        for h in j.generators() {
            if !cap.contains(&(g * h)) {
                return Err(format!(
                    "({g})({h}) is missing from ({i}) ∩ ({j}) = ({cap})"
                ));
            }
        }
    }
    let f = random::poly(rng, &ring, 2, 1);
    let c = colon_fp(&i, &f, &limits).map_err(|e| e.to_string())?;
    if let Some(g) = c.basis().iter().find(|g| !i.contains(&(&f * *g))) {
        return Err(format!("({f})({g}) is not in ({i})"));
    }
    Ok(())
}

const SUITES: [(&str, Case); 7] = [
    ("minimalize", minimalize_case),
    ("parse-roundtrip", roundtrip_case),
    ("decomposition", decomposition_case),
    ("growth", growth_case),
    ("localization", localization_case),
    ("regularity", regularity_case),
    ("groebner", groebner_case),
];

/// Runs every suite with `budget` cases; returns the exit code.
pub fn run(
    seed: u64,
    budget: usize,
    inject_fault: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    if budget == 0 {
        writeln!(err, "warning: budget is 0, no cases will run")?;
    }
    let mut first: Option<Counterexample> = None;
    for (k, (name, case)) in SUITES.iter().enumerate() {
        let mut rng = random::rng(seed.wrapping_add(k as u64));
        let (mut passed, mut failed) = (0, 0);
        for n in 0..budget {
            let fault = inject_fault && k == 0 && n == 0;
            match case(&mut rng, fault) {
                Ok(()) => passed += 1,
                Err(detail) => {
                    failed += 1;
                    first.get_or_insert(Counterexample {
                        suite: name,
                        case: n,
                        detail,
                    });
                }
            }
        }
        writeln!(out, "{name}: {passed} passed, {failed} failed")?;
    }
    match first {
        None => Ok(crate::app::EXIT_OK),
        Some(c) => {
            write!(out, "{}", to_json(&c))?;
            Ok(crate::app::EXIT_COUNTEREXAMPLE)
        }
    }
}
