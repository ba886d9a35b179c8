//! Castelnuovo-Mumford regularity of monomial ideals.
//!
//! Multigraded Betti numbers come from Hochster-style upper Koszul simplicial
//! complexes: for a multidegree `m`,
//! `K^m(I) = { σ ⊆ supp(m) : x^m / x^σ ∈ I }` and
//! `β_{i,m}(I) = dim H̃_{i-1}(K^m(I); k)`.
//! Regularity is read off the table as `max { |m| - i : β_{i,m} ≠ 0 }`; this
//! is the regularity of the ideal, not of the quotient.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::ring::is_prime;
use crate::{Error, Limits, Monomial, MonomialIdeal, Result};

mod bound;
mod linalg;

pub use bound::{
    power_regularity_bound, verify_power_regularity, PowerCheck, PowerRegularityVerification,
    RegularityBoundReport, Witness,
};

/// Field over which homology ranks are taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientField {
    #[default]
    Rationals,
    Prime(u32),
}

impl CoefficientField {
    /// Rationals for characteristic 0, `F_p` otherwise.
    pub fn for_characteristic(p: u32) -> Result<Self> {
        match p {
            0 => Ok(CoefficientField::Rationals),
            p if is_prime(u64::from(p)) => Ok(CoefficientField::Prime(p)),
            p => Err(Error::Domain(alloc::format!(
                "characteristic {p} is not prime"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: CoefficientField,
    /// `(i, multidegree) -> β_{i,m}`, nonzero entries only.
    pub entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn regularity(&self) -> i64 {
        self.entries
            .keys()
            .map(|(i, m)| m.degree() as i64 - *i as i64)
            .max()
            .unwrap_or(0)
    }

    /// Total Betti numbers `β_i = Σ_m β_{i,m}`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for ((i, _), b) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += b;
        }
        out
    }

    /// Graded table `(i, degree) -> β_{i,j}`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, m), b) in &self.entries {
            *out.entry((*i, m.degree())).or_insert(0) += b;
        }
        out
    }
}

fn require_proper_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        return Err(Error::domain("regularity of the zero ideal is undefined"));
    }
    if i.is_unit() {
        return Err(Error::domain("the unit ideal has no Betti table"));
    }
    Ok(())
}

pub fn betti_table(
    i: &MonomialIdeal,
    field: CoefficientField,
    limits: &Limits,
) -> Result<BettiTable> {
    require_proper_nonzero(i)?;
    if i.generators().len() > limits.max_generators {
        return Err(Error::resource(
            "generator count for Betti table",
            limits.max_generators as u64,
        ));
    }
    let d = i.dim();
    let lcm = i
        .generators()
        .iter()
        .fold(Monomial::one(d), |acc, g| acc.lcm(g));
    let mut divisors: u64 = 1;
    for &e in lcm.exponents() {
        divisors = divisors.saturating_mul(u64::from(e) + 1);
    }
    if divisors > limits.max_divisors {
        return Err(Error::resource(
            "divisors of the generator lcm",
            limits.max_divisors,
        ));
    }

    let mut entries = BTreeMap::new();
    let mut exps = vec![0u32; d];
    loop {
        let m = Monomial::new(exps.clone());
        // K^m is a cone unless m is an lcm of generators.
        let below = i
            .generators()
            .iter()
            .filter(|g| g.divides(&m))
            .fold(Monomial::one(d), |acc, g| acc.lcm(g));
        if below == m && !m.is_one() {
            for (k, b) in koszul_betti(i, &m, field).into_iter().enumerate() {
                if b > 0 {
                    entries.insert((k, m.clone()), b);
                }
            }
        }
        // next divisor of lcm, mixed radix
        let mut v = 0;
        loop {
            if v == d {
                return Ok(BettiTable { field, entries });
            }
            if exps[v] < lcm.exponent(v) {
                exps[v] += 1;
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// `β_{k,m}` for `k = 0..=|supp m|` from the reduced homology of `K^m(I)`.
fn koszul_betti(i: &MonomialIdeal, m: &Monomial, field: CoefficientField) -> Vec<u64> {
    let support: Vec<usize> = m.support().collect();
    let s = support.len();
    // faces[k] = bitmasks over `support` of size k
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    let mut exps = m.exponents().to_vec();
    for mask in 0u32..(1 << s) {
        for (bit, &v) in support.iter().enumerate() {
            exps[v] = m.exponent(v) - (mask >> bit & 1);
        }
        if i.has(&Monomial::new(exps.clone())) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of ∂_k : C_k -> C_{k-1}, faces of size k to size k-1
    let mut ranks = vec![0usize; s + 2];
    for k in 1..=s {
        if faces[k].is_empty() || faces[k - 1].is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = faces[k - 1]
            .iter()
            .enumerate()
            .map(|(n, &f)| (f, n))
            .collect();
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|&face| {
                let mut row = vec![0i64; faces[k - 1].len()];
                let mut position = 0;
                for bit in 0..s {
                    if face >> bit & 1 == 1 {
                        let sub = face & !(1 << bit);
                        if let Some(&col) = index.get(&sub) {
                            row[col] = if position % 2 == 0 { 1 } else { -1 };
                        }
                        position += 1;
                    }
                }
                row
            })
            .collect();
        ranks[k] = linalg::rank(rows, field);
    }
    (0..=s)
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

/// `reg(I)`, with `reg(1) = 0`; the zero ideal is a domain error.
pub fn regularity(i: &MonomialIdeal, field: CoefficientField, limits: &Limits) -> Result<i64> {
    if i.is_unit() {
        return Ok(0);
    }
    Ok(betti_table(i, field, limits)?.regularity())
}

/// Least `N` with `(x_1, ..., x_d)^N ⊆ I` for a maximal-ideal-primary `I`.
/// Bayer-Stillman gives `reg(I) <= N`.
pub fn bs_primary_bound(i: &MonomialIdeal, limits: &Limits) -> Result<u64> {
    if i.is_zero() {
        return Err(Error::domain(
            "the zero ideal is not primary to the maximal ideal",
        ));
    }
    if i.is_unit() {
        return Ok(0);
    }
    let d = i.dim();
    let mut caps = vec![0u32; d];
    for g in i.generators() {
        if let Some((v, a)) = g.as_pure_power() {
            caps[v] = a;
        }
    }
    if caps.contains(&0) {
        return Err(Error::domain("ideal is not primary to the maximal ideal"));
    }
    let boxed: u64 = caps
        .iter()
        .fold(1u64, |acc, &a| acc.saturating_mul(u64::from(a)));
    if boxed > limits.max_divisors {
        return Err(Error::resource(
            "standard monomial box",
            limits.max_divisors,
        ));
    }
    // every standard monomial sits in the box below the pure powers
    let mut best = 0u64;
    let mut exps = vec![0u32; d];
    loop {
        let m = Monomial::new(exps.clone());
        if !i.has(&m) {
            best = best.max(m.degree() + 1);
        }
        let mut v = 0;
        loop {
            if v == d {
                return Ok(best);
            }
            if exps[v] + 1 < caps[v] {
                exps[v] += 1;
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

/// Borel-fixed test in characteristic zero: for each generator `g`, each
/// `x_j | g` and each `i < j`, `g x_i / x_j ∈ I`.
pub fn is_strongly_stable(i: &MonomialIdeal) -> bool {
    let d = i.dim();
    i.generators().iter().all(|g| {
        (0..d).filter(|&j| g.exponent(j) > 0).all(|j| {
            (0..j).all(|k| {
                let mut exps = g.exponents().to_vec();
                exps[j] -= 1;
                exps[k] += 1;
                i.has(&Monomial::new(exps))
            })
        })
    })
}

/// The three regularity relations between `I`, `I : x^l`, `I ∩ (x^l)` and
/// `I + (x^l)` for one variable power `x^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColonRegularityCheck {
    pub reg_ideal: i64,
    pub reg_colon: i64,
    pub reg_intersection: i64,
    pub reg_sum: i64,
    pub l: i64,
}

impl ColonRegularityCheck {
    /// `reg(I ∩ x^l R) = l + reg(I : x^l)`
    pub fn intersection_identity(&self) -> bool {
        self.reg_intersection == self.l + self.reg_colon
    }

    /// `reg(I : x^l) <= max{0, reg I - l, reg(I + x^l R) + 1 - l}`
    pub fn colon_bound(&self) -> bool {
        self.reg_colon
            <= 0.max(self.reg_ideal - self.l)
                .max(self.reg_sum + 1 - self.l)
    }

    /// `reg I <= max{reg(I : x^l) + l, reg(I + x^l R)}`
    pub fn ideal_bound(&self) -> bool {
        self.reg_ideal <= (self.reg_colon + self.l).max(self.reg_sum)
    }

    pub fn holds(&self) -> bool {
        self.intersection_identity() && self.colon_bound() && self.ideal_bound()
    }
}

pub fn colon_regularity_check(
    i: &MonomialIdeal,
    var: usize,
    l: u32,
    field: CoefficientField,
    limits: &Limits,
) -> Result<ColonRegularityCheck> {
    if var >= i.dim() || l == 0 {
        return Err(Error::domain("need a ring variable and a positive power"));
    }
    let xl = Monomial::var_power(i.dim(), var, l);
    let principal = MonomialIdeal::new(i.ring(), [xl.clone()])?;
    Ok(ColonRegularityCheck {
        reg_ideal: regularity(i, field, limits)?,
        reg_colon: regularity(&i.colon(&xl)?, field, limits)?,
        reg_intersection: regularity(&i.intersect(&principal)?, field, limits)?,
        reg_sum: regularity(&i.sum(&principal)?, field, limits)?,
        l: i64::from(l),
    })
}
