//! A computable linear bound for the regularity of sums of powers.
//!
//! For monomial ideals `I_1, ..., I_m` in `d` variables, with `l` the largest
//! exponent in their generators and `r` the number of variables in the
//! radical of `I = Σ I_j`,
//!
//! ```text
//! L = max over nonempty S ⊆ (non-radical variables), x_q ∈ S of
//!     (d - |S| - r) l + (m + |S| - 2 + d) reg((I : x_q^l) + Σ_{x_i ∈ S, i ≠ q} x_i^l R)
//! ```
//!
//! and `reg(Σ I_j^n) <= n max{d l, L}` for every `n`. When every variable is
//! in the radical there is no `S` and the bound is `d l n`.

use alloc::vec::Vec;

use super::{is_strongly_stable, regularity, CoefficientField};
use crate::{max_exponent, Error, Limits, Monomial, MonomialIdeal, Result};

/// One `(S, x_q)` term of the maximum defining `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub subset: Vec<usize>,
    pub pivot: usize,
    pub sub_ideal: MonomialIdeal,
    pub sub_regularity: i64,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityBoundReport {
    pub ideals: Vec<MonomialIdeal>,
    pub l: u32,
    pub d: usize,
    pub r: usize,
    pub radical_variables: Vec<usize>,
    /// `None` when every variable lies in the radical.
    pub big_l: Option<i64>,
    /// `B = max{d l, L}`
    pub bound: i64,
    pub witnesses: Vec<Witness>,
}

/// Nonempty subsets of `vars`, by increasing size and then lexicographically.
fn subsets_in_order(vars: &[usize]) -> Vec<Vec<usize>> {
    let n = vars.len();
    let mut out: Vec<Vec<usize>> = (1u64..(1 << n))
        .map(|mask| {
            (0..n)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| vars[b])
                .collect()
        })
        .collect();
    out.sort_by(|a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn power_regularity_bound(
    ideals: &[MonomialIdeal],
    field: CoefficientField,
    limits: &Limits,
) -> Result<RegularityBoundReport> {
    let first = ideals
        .first()
        .ok_or_else(|| Error::domain("need at least one ideal"))?;
    let ring = first.ring();
    for i in ideals {
        ring.check_same(i.ring())?;
        if !i.is_proper_nonzero() {
            return Err(Error::domain("every ideal must be proper and nonzero"));
        }
    }
    let d = ring.dim();
    let m = ideals.len() as i64;
    let l = max_exponent(ideals);
    let sum = ideals
        .iter()
        .try_fold(MonomialIdeal::zero(ring), |acc, i| acc.sum(i))?;
    let radical_variables = sum.radical_variables();
    let r = radical_variables.len();
    let free: Vec<usize> = (0..d).filter(|v| !radical_variables.contains(v)).collect();
    if free.len() >= 64 || (1u64 << free.len()) > limits.max_subsets {
        return Err(Error::resource(
            "subsets of non-radical variables",
            limits.max_subsets,
        ));
    }

    let mut witnesses = Vec::new();
    for subset in subsets_in_order(&free) {
        for &pivot in &subset {
            let colon = sum.colon(&Monomial::var_power(d, pivot, l))?;
            let extra = MonomialIdeal::new(
                ring,
                subset
                    .iter()
                    .filter(|&&v| v != pivot)
                    .map(|&v| Monomial::var_power(d, v, l)),
            )?;
            let sub_ideal = colon.sum(&extra)?;
            let sub_regularity = regularity(&sub_ideal, field, limits)?;
            let s = subset.len() as i64;
            let value =
                (d as i64 - s - r as i64) * i64::from(l) + (m + s - 2 + d as i64) * sub_regularity;
            witnesses.push(Witness {
                subset: subset.clone(),
                pivot,
                sub_ideal,
                sub_regularity,
                value,
            });
        }
    }
    let big_l = witnesses.iter().map(|w| w.value).max();
    let dl = d as i64 * i64::from(l);
    Ok(RegularityBoundReport {
        ideals: ideals.to_vec(),
        l,
        d,
        r,
        radical_variables,
        big_l,
        bound: big_l.map_or(dl, |x| x.max(dl)),
        witnesses,
    })
}

/// One row of [`verify_power_regularity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCheck {
    pub n: u32,
    pub regularity: i64,
    /// `n B`
    pub bound: i64,
    /// `n reg(I)`, only for a single strongly stable ideal.
    pub stable_bound: Option<i64>,
}

impl PowerCheck {
    pub fn holds(&self) -> bool {
        self.regularity <= self.bound && self.stable_bound.is_none_or(|b| self.regularity <= b)
    }

    /// `reg / (n B)`; the bound is not expected to be sharp.
    pub fn slack_ratio(&self) -> f64 {
        self.regularity as f64 / self.bound as f64
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerRegularityVerification {
    pub report: RegularityBoundReport,
    pub rows: Vec<PowerCheck>,
}

impl PowerRegularityVerification {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(PowerCheck::holds)
    }
}

/// Checks `reg(Σ I_j^n) <= n B` for `n = 1..=n_max` against the Betti-table
/// regularity. For a single strongly stable ideal it also checks
/// `reg(I^n) <= n reg(I)`.
pub fn verify_power_regularity(
    ideals: &[MonomialIdeal],
    n_max: u32,
    field: CoefficientField,
    limits: &Limits,
) -> Result<PowerRegularityVerification> {
    let report = power_regularity_bound(ideals, field, limits)?;
    let ring = report.ideals[0].ring().clone();
    let stable_reg = match ideals {
        [single] if is_strongly_stable(single) => Some(regularity(single, field, limits)?),
        _ => None,
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let mut total = MonomialIdeal::zero(&ring);
        for i in ideals {
            total = total.sum(&i.power(n)?)?;
        }
        rows.push(PowerCheck {
            n,
            regularity: regularity(&total, field, limits)?,
            bound: i64::from(n) * report.bound,
            stable_bound: stable_reg.map(|r| i64::from(n) * r),
        });
    }
    Ok(PowerRegularityVerification { report, rows })
}
