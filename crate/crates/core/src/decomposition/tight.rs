//! Tight closure of monomial ideals in `R = S/J` for a monomial ideal `J`.
//!
//! For such rings the tight closure of `I` is `∩_P (I + J + P)` over the
//! minimal primes `P` of `J`: tight closure may be computed modulo minimal
//! primes, and every `S/P` is a polynomial ring, where all ideals are
//! tightly closed.

use alloc::vec::Vec;

use super::{intersect_all, irreducible_decompose};
use crate::{Monomial, MonomialIdeal, Result};

/// Minimal primes of `S/J` as prime monomial ideals, in the canonical order
/// of the decomposition of `√J`. The zero ideal has the single minimal prime
/// `(0)`; the unit ideal has none.
pub fn minimal_primes(j: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    if j.is_zero() {
        return Ok(alloc::vec![MonomialIdeal::zero(j.ring())]);
    }
    if j.is_unit() {
        return Ok(Vec::new());
    }
    let dec = irreducible_decompose(&j.radical())?;
    Ok(dec.components().iter().map(|c| c.ideal(j.ring())).collect())
}

/// `I^*` in `S/J`, represented by its preimage in `S` (which contains `J`).
pub fn tight_closure(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    let base = i.sum(j)?;
    let mut pieces = Vec::new();
    for p in minimal_primes(j)? {
        pieces.push(base.sum(&p)?);
    }
    Ok(intersect_all(i.ring(), pieces))
}

/// Both sides of the localization identity
/// `(∩_P (I+J+P)) : u^∞ = ∩_{P ∌ u} ((I+J+P) : u^∞)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationCheck {
    pub lhs: MonomialIdeal,
    pub rhs: MonomialIdeal,
}

impl LocalizationCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Compares the contraction of `I^* R_u` with the intersection of the
/// contractions of `(I + P) R_u` over the minimal primes that survive in `R_u`.
/// This is the monomial content of "tight closure commutes with localization
/// at powers of `u`".
pub fn check_localization(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    u: &Monomial,
) -> Result<LocalizationCheck> {
    let lhs = tight_closure(i, j)?.saturate(u)?;
    let base = i.sum(j)?;
    let mut pieces = Vec::new();
    for p in minimal_primes(j)? {
        if p.contains_monomial(u)? {
            continue;
        }
        pieces.push(base.sum(&p)?.saturate(u)?);
    }
    let rhs = intersect_all(i.ring(), pieces);
    Ok(LocalizationCheck { lhs, rhs })
}
