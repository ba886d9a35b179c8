//! Katzman's family `I_q = (x^q, y^q, xy(x-y)(x-ty))` in `F_p[t, x, y]`.
//!
//! [`build_instance`] sets up `I_q`, `τ_q = 1 + t + ... + t^(q-2)`,
//! `G_q = x^2 y^(q-1)`, the factorization of `τ_q` and the candidate
//! components. [`verify_katzman`] then checks, with the Buchberger engine,
//! that
//!
//! ```text
//! I_q = J_q ∩ (I_q + (σ_1)) ∩ ... ∩ (I_q + (σ_r)),    J_q = I_q : τ_q,
//! ```
//!
//! and that every component `Q` satisfies `(√Q)^(2q) ⊆ Q`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use rand_core::RngCore;

use crate::groebner::{
    colon_fp, factor_univariate, intersect_fp, is_squarefree, saturate_fp, FpRing, IdealFp, PolyFp,
};
use crate::ring::is_prime;
use crate::{Error, Limits, Monomial, Result, Ring};

const T: usize = 0;
const X: usize = 1;
const Y: usize = 2;

#[derive(Debug, Clone)]
pub struct KatzmanInstance {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub ring: FpRing,
    pub tau: PolyFp,
    pub g: PolyFp,
    pub i_q: IdealFp,
    /// `I_q : τ_q`
    pub j_q: IdealFp,
    /// Monic irreducible factors of `τ_q`; empty when `q = 2`.
    pub sigma: Vec<PolyFp>,
    /// `I_q + (σ_i)`, in the order of `sigma`.
    pub components: Vec<IdealFp>,
}

fn mono(ring: &FpRing, t: u32, x: u32, y: u32) -> PolyFp {
    PolyFp::monomial(ring, Monomial::new(vec![t, x, y]), 1)
}

pub fn build_instance<R: RngCore + ?Sized>(
    p: u64,
    e: u32,
    rng: &mut R,
    limits: &Limits,
) -> Result<KatzmanInstance> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::domain(format!("{p} is not a prime below 2^31")));
    }
    if e == 0 {
        return Err(Error::domain("the exponent e must be at least 1"));
    }
    let q = p
        .checked_pow(e)
        .filter(|&q| q <= limits.max_katzman_q)
        .ok_or_else(|| Error::resource(format!("q = {p}^{e}"), limits.max_katzman_q))?;
    let ring = FpRing::new(Ring::new(["t", "x", "y"], p as u32)?)?;
    let qe = q as u32;

    let tau = PolyFp::from_terms(
        &ring,
        (0..qe - 1).map(|i| (Monomial::new(vec![i, 0, 0]), 1)),
    );
    let g = mono(&ring, 0, 2, qe - 1);
    let x = PolyFp::var(&ring, X);
    let y = PolyFp::var(&ring, Y);
    let t = PolyFp::var(&ring, T);
    let quartic = &(&(&x * &y) * &(&x - &y)) * &(&x - &(&t * &y));
    let i_q = IdealFp::new(&ring, vec![x.pow(qe), y.pow(qe), quartic], limits)?;
    let j_q = colon_fp(&i_q, &tau, limits)?;

    let fac = factor_univariate(&tau, T, rng)?;
    if !fac.is_squarefree() || !is_squarefree(&tau, T)? {
        return Err(Error::Invariant(format!("τ_{q} = {tau} is not squarefree")));
    }
    let sigma: Vec<PolyFp> = fac.factors.into_iter().map(|(s, _)| s).collect();
    let components = sigma
        .iter()
        .map(|s| i_q.with_generator(s, limits))
        .collect::<Result<Vec<_>>>()?;
    Ok(KatzmanInstance {
        p,
        e,
        q,
        ring,
        tau,
        g,
        i_q,
        j_q,
        sigma,
        components,
    })
}

/// A named polynomial attached to a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub role: String,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: &'static str,
    pub claim: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    /// Extra facts such as the number of generators checked.
    pub note: String,
}

/// Which generator description of `I_q : τ_q` matches the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JqRendering {
    /// `I_q : τ_q = I_q + (x^2 y^(q-1))`
    pub q_minus_1: bool,
    /// `I_q : τ_q = I_q + (x^2 y^(q-2))`
    pub q_minus_2: bool,
}

#[derive(Debug, Clone)]
pub struct KatzmanCertificate {
    pub instance: KatzmanInstance,
    pub checks: Vec<Check>,
    pub rendering: JqRendering,
    /// `2q`
    pub bound: u64,
}

impl KatzmanCertificate {
    pub fn certified(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

fn w(role: impl Into<String>, poly: impl ToString) -> Witness {
    Witness {
        role: role.into(),
        poly: poly.to_string(),
    }
}

/// First element of `elems` outside `ideal`, with its normal form.
fn first_outside<'a>(
    ideal: &IdealFp,
    elems: impl IntoIterator<Item = &'a PolyFp>,
) -> Option<(PolyFp, PolyFp)> {
    elems.into_iter().find_map(|f| {
        let nf = ideal.normal_form(f);
        (!nf.is_zero()).then(|| (f.clone(), nf))
    })
}

fn containment(label: &'static str, claim: String, ideal: &IdealFp, elems: &[PolyFp]) -> Check {
    match first_outside(ideal, elems) {
        None => Check {
            label,
            claim,
            holds: true,
            witnesses: Vec::new(),
            note: format!("elements checked: {}", elems.len()),
        },
        Some((f, nf)) => Check {
            label,
            claim,
            holds: false,
            witnesses: vec![w("offending element", f), w("normal form", nf)],
            note: String::new(),
        },
    }
}

fn equality(label: &'static str, claim: String, lhs: &IdealFp, rhs: &IdealFp) -> Check {
    let bad = first_outside(rhs, lhs.basis()).or_else(|| first_outside(lhs, rhs.basis()));
    match bad {
        None => Check {
            label,
            claim,
            holds: true,
            witnesses: vec![w("reduced basis", lhs)],
            note: String::new(),
        },
        Some((f, nf)) => Check {
            label,
            claim,
            holds: false,
            witnesses: vec![
                w("lhs", lhs),
                w("rhs", rhs),
                w("offending element", f),
                w("normal form", nf),
            ],
            note: String::new(),
        },
    }
}

/// Generators `x^a y^b s^c` (`a + b + c = n`) of `(x, y, s)^n`, or of
/// `(x, y)^n` when `s` is `None`.
fn power_generators(ring: &FpRing, s: Option<&PolyFp>, n: u32) -> Vec<PolyFp> {
    let mut out = Vec::new();
    let mut s_pow = PolyFp::constant(ring, 1);
    for c in 0..=n {
        if c > 0 {
            match s {
                Some(s) => s_pow = &s_pow * s,
                None => break,
            }
        }
        for a in 0..=n - c {
            out.push(&mono(ring, 0, a, n - c - a) * &s_pow);
        }
    }
    out
}

pub fn verify_katzman(inst: &KatzmanInstance, limits: &Limits) -> Result<KatzmanCertificate> {
    let ring = &inst.ring;
    let q = inst.q;
    let qe = q as u32;
    let mut checks = Vec::new();

    let tg = &inst.tau * &inst.g;
    let mut a = containment(
        "a",
        format!("τ_{q} G_{q} ∈ I_{q}"),
        &inst.i_q,
        core::slice::from_ref(&tg),
    );
    a.witnesses.push(w("τ_q G_q", &tg));
    checks.push(a);

    let plus = |k: u32| inst.i_q.with_generator(&mono(ring, 0, 2, k), limits);
    let r1 = plus(qe - 1)?;
    let r2 = plus(qe - 2)?;
    let rendering = JqRendering {
        q_minus_1: r1 == inst.j_q,
        q_minus_2: r2 == inst.j_q,
    };
    let g1 = mono(ring, 0, 2, qe - 1);
    let g2 = mono(ring, 0, 2, qe - 2);
    let mut b = equality(
        "b",
        format!("I_{q} : τ_{q} = I_{q} + ({g1})"),
        &inst.j_q,
        &r1,
    );
    b.note = format!(
        "I_{q} + ({g2}) {} I_{q} : τ_{q}",
        if rendering.q_minus_2 {
            "also equals"
        } else {
            "differs from"
        }
    );
    checks.push(b);

    let t = PolyFp::var(ring, T);
    let mut c_holds = true;
    let mut c_witnesses = Vec::new();
    for f in [t.clone(), &t + &PolyFp::constant(ring, 1), inst.tau.clone()] {
        let c = colon_fp(&inst.j_q, &f, limits)?;
        c_witnesses.push(w("f", &f));
        if c != inst.j_q {
            c_holds = false;
            c_witnesses.extend(equality("c", String::new(), &c, &inst.j_q).witnesses);
        }
    }
    checks.push(Check {
        label: "c",
        claim: format!("J_{q} : f = J_{q} for f in t, t + 1, τ_{q}"),
        holds: c_holds,
        witnesses: c_witnesses,
        note: String::new(),
    });

    let sat = saturate_fp(&inst.i_q, &inst.tau, limits)?;
    let twice = colon_fp(&inst.j_q, &inst.tau, limits)?;
    let mut d = equality(
        "d",
        format!("I_{q} : τ_{q}^2 = I_{q} : τ_{q}"),
        &twice,
        &inst.j_q,
    );
    // the fixed point is reached after at most one proper step
    d.holds &= sat.ideal == inst.j_q && sat.steps <= 1;
    d.note = format!(
        "saturation by τ_{q} stabilizes after {} proper steps",
        sat.steps
    );
    checks.push(d);

    let with_tau = inst.i_q.with_generator(&inst.tau, limits)?;
    let rejoined = intersect_fp(&inst.j_q, &with_tau, limits)?;
    checks.push(equality(
        "e",
        format!("I_{q} = (I_{q} : τ_{q}) ∩ (I_{q} + (τ_{q}))"),
        &rejoined,
        &inst.i_q,
    ));

    let mut meet = IdealFp::unit(ring);
    for c in &inst.components {
        meet = intersect_fp(&meet, c, limits)?;
    }
    let mut f = equality(
        "f",
        format!("I_{q} + (τ_{q}) = ∩ (I_{q} + (σ_i))"),
        &meet,
        &with_tau,
    );
    for s in &inst.sigma {
        f.witnesses.push(w("σ", s));
    }
    checks.push(f);

    checks.push(containment(
        "g",
        format!("(x, y)^{} ⊆ J_{q}", q + 1),
        &inst.j_q,
        &power_generators(ring, None, qe + 1),
    ));
    checks.push(containment(
        "h",
        format!("(x, y)^{} ⊆ J_{q}", 2 * q),
        &inst.j_q,
        &power_generators(ring, None, 2 * qe),
    ));

    let mut i_holds = true;
    let mut i_witnesses = Vec::new();
    for (s, comp) in inst.sigma.iter().zip(&inst.components) {
        i_witnesses.push(w("σ", s));
        let fast = [mono(ring, 0, qe, 0), mono(ring, 0, 0, qe), s.clone()];
        if let Some((bad, nf)) = first_outside(comp, &fast) {
            i_holds = false;
            i_witnesses.extend([w("offending element", bad), w("normal form", nf)]);
        }
        // x^a y^b σ^c with a + b + c = 2q lies in (x^q, y^q, σ) since c > 0, a >= q or b >= q
        let n = 2 * qe;
        let combinatorial = (0..=n).all(|c| (0..=n - c).all(|a| c > 0 || a >= qe || n - a >= qe));
        i_holds &= combinatorial;
    }
    checks.push(Check {
        label: "i",
        claim: format!(
            "(x, y, σ_i)^{} ⊆ (x^{q}, y^{q}, σ_i) ⊆ I_{q} + (σ_i)",
            2 * q
        ),
        holds: i_holds,
        witnesses: i_witnesses,
        note: format!("components: {}", inst.components.len()),
    });

    // √J_q = (x, y): x^q, y^q ∈ J_q and J_q ⊆ (x, y)
    let xy = IdealFp::new(
        ring,
        vec![PolyFp::var(ring, X), PolyFp::var(ring, Y)],
        limits,
    )?;
    let mut rad = containment(
        "radical J",
        format!("x^{q}, y^{q} ∈ J_{q} ⊆ (x, y)"),
        &inst.j_q,
        &[mono(ring, 0, qe, 0), mono(ring, 0, 0, qe)],
    );
    if let Some((bad, nf)) = first_outside(&xy, inst.j_q.basis()) {
        rad.holds = false;
        rad.witnesses = vec![w("offending element", bad), w("normal form", nf)];
    }
    checks.push(rad);

    let mut rad_s = Check {
        label: "radical σ",
        claim: format!("x^{q}, y^{q}, σ_i ∈ I_{q} + (σ_i) ⊆ (x, y, σ_i)"),
        holds: true,
        witnesses: Vec::new(),
        note: format!("components: {}", inst.components.len()),
    };
    for (s, comp) in inst.sigma.iter().zip(&inst.components) {
        let prime = xy.with_generator(s, limits)?;
        let up = [mono(ring, 0, qe, 0), mono(ring, 0, 0, qe), s.clone()];
        let bad = first_outside(comp, &up).or_else(|| first_outside(&prime, comp.basis()));
        if let Some((bad, nf)) = bad {
            rad_s.holds = false;
            rad_s
                .witnesses
                .extend([w("σ", s), w("offending element", bad), w("normal form", nf)]);
        }
    }
    checks.push(rad_s);

    Ok(KatzmanCertificate {
        instance: inst.clone(),
        checks,
        rendering,
        bound: 2 * q,
    })
}

/// Least `N` with `(√Q)^N ⊆ Q` for every component, and the derived
/// multiple of `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthExponent {
    /// `(component, N)`, with `J_q` first.
    pub per_component: Vec<(String, u32)>,
    /// Least `L` with `(√Q)^(L q) ⊆ Q` for all components.
    pub value: u64,
}

fn least_power(ring: &FpRing, s: Option<&PolyFp>, comp: &IdealFp, hi: u32) -> Result<u32> {
    let holds = |n: u32| first_outside(comp, &power_generators(ring, s, n)).is_none();
    if !holds(hi) {
        return Err(Error::Invariant(format!("(√Q)^{hi} ⊄ Q for Q = {comp}")));
    }
    // containment is monotone in N
    let (mut lo, mut hi) = (0u32, hi);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if holds(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn growth_exponent(inst: &KatzmanInstance) -> Result<GrowthExponent> {
    let cap = 4 * inst.q as u32;
    let mut per_component = vec![(
        "J".to_string(),
        least_power(&inst.ring, None, &inst.j_q, cap)?,
    )];
    for (s, comp) in inst.sigma.iter().zip(&inst.components) {
        per_component.push((
            format!("I + ({s})"),
            least_power(&inst.ring, Some(s), comp, cap)?,
        ));
    }
    let value = per_component
        .iter()
        .map(|&(_, n)| u64::from(n).div_ceil(inst.q))
        .max()
        .unwrap_or(0);
    Ok(GrowthExponent {
        per_component,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn instance(p: u64, e: u32) -> KatzmanInstance {
        build_instance(p, e, &mut ChaCha8Rng::seed_from_u64(1), &Limits::default()).unwrap()
    }

    #[test]
    fn instance_shapes() {
        let k = instance(2, 1);
        assert_eq!(k.q, 2);
        assert!(k.tau.is_unit());
        assert_eq!(k.g.to_string(), "x^2*y");
        assert!(k.sigma.is_empty());
        assert_eq!(instance(3, 1).tau.to_string(), "t + 1");
        let k = instance(2, 2);
        assert_eq!(k.tau.to_string(), "t^2 + t + 1");
        assert_eq!(k.sigma.len(), 1);
        // degree 2 with no root in F_2
        assert!((0..2).all(|a| (1 + a + a * a) % 2 != 0));
    }

    #[test]
    fn rejects_bad_parameters() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let l = Limits::default();
        assert!(matches!(
            build_instance(4, 1, &mut rng, &l),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            build_instance(2, 0, &mut rng, &l),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            build_instance(2, 6, &mut rng, &l),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn membership_of_tau_g() {
        let k = instance(3, 1);
        assert!(k.i_q.contains(&(&k.tau * &k.g)));
        assert!(!k.i_q.contains(&k.g));
    }

    fn certify(p: u64, e: u32) {
        let k = instance(p, e);
        let cert = verify_katzman(&k, &Limits::default()).unwrap();
        for c in &cert.checks {
            assert!(
                c.holds,
                "p={p} e={e} check ({}) {}: {:?}",
                c.label, c.claim, c.witnesses
            );
        }
        assert_eq!(cert.checks.len(), 11);
        assert!(cert.rendering.q_minus_1);
        assert_eq!(cert.rendering.q_minus_2, k.q == 2);
        let g = growth_exponent(&k).unwrap();
        assert!(g.value <= 2, "{g:?}");
    }

    #[test]
    fn certify_small_instances() {
        certify(2, 1);
        certify(3, 1);
        certify(2, 2);
    }

    #[test]
    fn certify_p5() {
        let k = instance(5, 1);
        let prod = k
            .sigma
            .iter()
            .fold(PolyFp::constant(&k.ring, 1), |acc, s| &acc * s);
        assert_eq!(prod, k.tau);
        // 1 + t + t^2 + t^3 = (t + 1)(t^2 + 1) = (t + 1)(t + 2)(t + 3) over F_5
        assert_eq!(k.sigma.len(), 3);
        certify(5, 1);
    }

    #[test]
    fn detects_a_wrong_component() {
        let mut k = instance(3, 1);
        k.j_q = k.i_q.clone();
        let cert = verify_katzman(&k, &Limits::default()).unwrap();
        assert!(!cert.certified());
        let b = cert.checks.iter().find(|c| c.label == "b").unwrap();
        assert!(!b.holds);
        assert!(b.witnesses.iter().any(|w| w.role == "normal form"));
    }

    #[test]
    fn certify_larger_q() {
        certify(2, 3);
        certify(3, 2);
    }
}
