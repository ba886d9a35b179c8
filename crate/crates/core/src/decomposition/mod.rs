//! Minimal irreducible and primary decompositions of monomial ideals.
//!
//! Irreducible monomial ideals are exactly `(x_{i_1}^{a_1}, ..., x_{i_t}^{a_t})`
//! and are indexed by the monomial `x_{i_1}^{a_1} ... x_{i_t}^{a_t}`. Every
//! proper nonzero monomial ideal has a unique irredundant decomposition into
//! such ideals; grouping its pieces by radical gives a primary decomposition.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Monomial, MonomialIdeal, Result, Ring};

mod growth;
mod tight;

pub use growth::{
    strict_growth_scan, verify_growth_frobenius, verify_growth_ordinary, GrowthCertificate,
    GrowthKind, StrictScan,
};
pub use tight::{check_localization, minimal_primes, tight_closure, LocalizationCheck};

/// The irreducible ideal `J_m` for an index monomial `m != 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent {
    index: Monomial,
}

impl IrreducibleComponent {
    pub fn new(index: Monomial) -> Result<Self> {
        if index.is_one() {
            return Err(Error::domain(
                "the unit monomial does not index a proper irreducible ideal",
            ));
        }
        Ok(IrreducibleComponent { index })
    }

    pub fn index_monomial(&self) -> &Monomial {
        &self.index
    }

    /// Variables appearing in the index monomial; the radical is the prime
    /// they generate.
    pub fn support(&self) -> Vec<usize> {
        self.index.support().collect()
    }

    pub fn ideal(&self, ring: &Ring) -> MonomialIdeal {
        let d = self.index.dim();
        let gens = self
            .index
            .support()
            .map(|i| Monomial::var_power(d, i, self.index.exponent(i)));
        MonomialIdeal::new(ring, gens).expect("index monomial matches ring")
    }

    /// `J_m ⊆ J_n`
    fn is_contained_in(&self, other: &IrreducibleComponent) -> bool {
        self.index.support().all(|i| {
            other.index.exponent(i) > 0 && other.index.exponent(i) <= self.index.exponent(i)
        })
    }

    /// Least `N` with `(√J_m)^N ⊆ J_m`: one more than the largest degree of a
    /// monomial in the support variables that avoids every `x_i^{a_i}`.
    pub fn exponent_index(&self) -> u64 {
        self.index
            .exponents()
            .iter()
            .filter(|&&a| a > 0)
            .map(|&a| u64::from(a - 1))
            .sum::<u64>()
            + 1
    }
}

fn component_order(a: &IrreducibleComponent, b: &IrreducibleComponent) -> core::cmp::Ordering {
    a.index
        .support_size()
        .cmp(&b.index.support_size())
        .then_with(|| b.index.cmp(&a.index))
}

/// A minimal irreducible decomposition `I = J_{m_1} ∩ ... ∩ J_{m_r}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleDecomposition {
    ring: Ring,
    components: Vec<IrreducibleComponent>,
}

impl IrreducibleDecomposition {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Components ordered by support size, then by decreasing index monomial.
    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn intersection(&self) -> MonomialIdeal {
        intersect_all(
            &self.ring,
            self.components.iter().map(|c| c.ideal(&self.ring)),
        )
    }

    /// Largest exponent in any index monomial.
    pub fn max_index_exponent(&self) -> u32 {
        self.components
            .iter()
            .flat_map(|c| c.index.exponents().iter().copied())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IrreducibleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∩ ")?;
            }
            write!(f, "({})", c.ideal(&self.ring))?;
        }
        Ok(())
    }
}

pub(crate) fn intersect_all(
    ring: &Ring,
    ideals: impl IntoIterator<Item = MonomialIdeal>,
) -> MonomialIdeal {
    ideals
        .into_iter()
        .fold(MonomialIdeal::unit(ring), |acc, i| {
            acc.intersect(&i).expect("same ring")
        })
}

fn require_proper_nonzero(i: &MonomialIdeal) -> Result<()> {
    if i.is_zero() {
        Err(Error::domain(
            "the zero ideal has no irreducible decomposition",
        ))
    } else if i.is_unit() {
        Err(Error::domain(
            "the unit ideal has no irreducible decomposition",
        ))
    } else {
        Ok(())
    }
}

/// Minimal irreducible decomposition by recursive generator splitting.
///
/// A mixed generator `g = x_i^{a_i} * v` splits `I` into `I + (x_i^{a_i})` and
/// `I + (v)`; ideals generated by pure powers are the leaves. The first mixed
/// generator in canonical order is split at its lowest-index variable.
pub fn irreducible_decompose(i: &MonomialIdeal) -> Result<IrreducibleDecomposition> {
    require_proper_nonzero(i)?;
    let mut seen = BTreeSet::new();
    let mut leaves = BTreeSet::new();
    split(i, &mut seen, &mut leaves)?;

    let candidates: Vec<IrreducibleComponent> = leaves
        .into_iter()
        .map(|index| IrreducibleComponent { index })
        .collect();
    // Monomial irreducibles are meet-prime among monomial ideals, so a leaf
    // contains the intersection of the others iff it contains another leaf.
    let mut components: Vec<IrreducibleComponent> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|other| other != *c && other.is_contained_in(c))
        })
        .cloned()
        .collect();
    components.sort_by(component_order);
    Ok(IrreducibleDecomposition {
        ring: i.ring().clone(),
        components,
    })
}

fn split(
    i: &MonomialIdeal,
    seen: &mut BTreeSet<Vec<Monomial>>,
    leaves: &mut BTreeSet<Monomial>,
) -> Result<()> {
    if !seen.insert(i.generators().to_vec()) {
        return Ok(());
    }
    let mixed = i.generators().iter().find(|g| g.support_size() >= 2);
    let Some(g) = mixed else {
        let d = i.dim();
        let mut index = Monomial::one(d);
        for g in i.generators() {
            index = index.checked_mul(g)?;
        }
        leaves.insert(index);
        return Ok(());
    };
    let var = g.support().next().expect("mixed generator has support");
    let pure = Monomial::var_power(i.dim(), var, g.exponent(var));
    let rest = g.checked_div(&pure).expect("pure part divides g");
    for piece in [pure, rest] {
        let bigger = i.sum(&MonomialIdeal::new(i.ring(), [piece])?)?;
        split(&bigger, seen, leaves)?;
    }
    Ok(())
}

/// `(l, k)`: the largest exponent among index monomials of the minimal
/// irreducible decomposition, and the largest exponent among minimal
/// generators. They always agree; a mismatch is reported as an invariant
/// violation.
pub fn decomposition_exponents(i: &MonomialIdeal) -> Result<(u32, u32)> {
    let dec = irreducible_decompose(i)?;
    let l = dec.max_index_exponent();
    let k = i.max_exponent();
    if l != k {
        return Err(Error::Invariant(alloc::format!(
            "largest decomposition exponent {l} differs from largest generator exponent {k} for ({i})"
        )));
    }
    Ok((l, k))
}

/// A primary component: the intersection of the irreducible pieces sharing
/// one radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimaryComponent {
    radical: Vec<usize>,
    ideal: MonomialIdeal,
    pieces: Vec<IrreducibleComponent>,
}

impl PrimaryComponent {
    /// Sorted indices of the variables generating the associated prime.
    pub fn radical_variables(&self) -> &[usize] {
        &self.radical
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.ideal.ring(), self.radical.iter().copied())
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn pieces(&self) -> &[IrreducibleComponent] {
        &self.pieces
    }

    /// Least `N` with `(√Q)^N ⊆ Q`.
    pub fn exponent_index(&self) -> u64 {
        self.pieces
            .iter()
            .map(IrreducibleComponent::exponent_index)
            .max()
            .unwrap_or(0)
    }
}

/// Free-function form of [`PrimaryComponent::exponent_index`].
pub fn exponent_index(q: &PrimaryComponent) -> u64 {
    q.exponent_index()
}

/// Irredundant primary decomposition, ordered like the irreducible pieces
/// (smaller associated primes first).
pub fn primary_decompose(i: &MonomialIdeal) -> Result<Vec<PrimaryComponent>> {
    let dec = irreducible_decompose(i)?;
    Ok(group_by_radical(&dec))
}

pub(crate) fn group_by_radical(dec: &IrreducibleDecomposition) -> Vec<PrimaryComponent> {
    let mut out: Vec<PrimaryComponent> = Vec::new();
    for c in &dec.components {
        let support = c.support();
        match out.iter_mut().find(|p| p.radical == support) {
            Some(p) => p.pieces.push(c.clone()),
            None => out.push(PrimaryComponent {
                radical: support,
                ideal: MonomialIdeal::zero(&dec.ring),
                pieces: alloc::vec![c.clone()],
            }),
        }
    }
    for p in &mut out {
        p.ideal = intersect_all(&dec.ring, p.pieces.iter().map(|c| c.ideal(&dec.ring)));
    }
    out
}
