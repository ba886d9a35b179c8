use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Monomial, Result, Ring};

/// A monomial ideal in canonical form: its minimal monomial generators,
/// sorted in decreasing lexicographic order.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`. Two values are equal exactly when the ideals are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Minimal generating set of the ideal generated by `gens`.
pub fn minimalize(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    for g in &gens {
        if g.dim() != ring.dim() {
            return Err(Error::DimensionMismatch {
                expected: ring.dim(),
                found: g.dim(),
            });
        }
    }
    Ok(MonomialIdeal {
        ring: ring.clone(),
        gens: minimal_set(&mut gens),
    })
}

fn minimal_set(gens: &mut Vec<Monomial>) -> Vec<Monomial> {
    // A divisor of g has degree <= deg g, so scanning by degree means every
    // candidate only needs testing against already kept generators.
    gens.sort_unstable_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens.drain(..) {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_unstable_by(|a, b| b.cmp(a));
    kept
}

/// Largest exponent of any variable in any generator of any of the ideals.
pub fn max_exponent(ideals: &[MonomialIdeal]) -> u32 {
    ideals
        .iter()
        .flat_map(|i| i.gens.iter())
        .flat_map(|g| g.exponents().iter().copied())
        .max()
        .unwrap_or(0)
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: alloc::vec![Monomial::one(ring.dim())],
        }
    }

    /// The prime `(x_i : i in vars)`.
    pub fn prime(ring: &Ring, vars: impl IntoIterator<Item = usize>) -> Self {
        let d = ring.dim();
        let mut gens: Vec<Monomial> = vars
            .into_iter()
            .map(|i| Monomial::var_power(d, i, 1))
            .collect();
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimal_set(&mut gens),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: m.dim(),
            })
        }
    }

    fn with_gens(&self, mut gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_set(&mut gens),
        }
    }

    /// Membership test, assuming matching dimension.
    pub(crate) fn has(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.has(m))
    }

    /// `other ⊆ self`
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(other.gens.iter().all(|g| self.has(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(self.with_gens(gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.checked_mul(h)?);
            }
        }
        Ok(self.with_gens(gens))
    }

    /// `I^n`, with `I^0` the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I^[q]`, generated by the `q`-th powers of the generators.
    pub fn frobenius_power(&self, q: u32) -> Result<MonomialIdeal> {
        if q == 0 {
            return Err(Error::domain("Frobenius exponent must be positive"));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_pow(q))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_gens(gens))
    }

    /// `I : m`
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        let gens = self.gens.iter().map(|g| g.quotient_by_gcd(m)).collect();
        Ok(self.with_gens(gens))
    }

    /// `I : J`. Colon by the zero ideal is the unit ideal.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut acc = MonomialIdeal::unit(&self.ring);
        for g in &other.gens {
            acc = acc.intersect(&self.colon(g)?)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(self.with_gens(gens))
    }

    /// `I : u^∞`, by iterating the colon until it stabilizes.
    pub fn saturate(&self, u: &Monomial) -> Result<MonomialIdeal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(u)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        self.with_gens(self.gens.iter().map(Monomial::squarefree_part).collect())
    }

    /// Indices `i` with `x_i` in the radical, i.e. some generator is a pure
    /// power of `x_i`. Every variable qualifies for the unit ideal.
    pub fn radical_variables(&self) -> Vec<usize> {
        if self.is_unit() {
            return (0..self.dim()).collect();
        }
        let mut vars: Vec<usize> = self
            .gens
            .iter()
            .filter_map(|g| g.as_pure_power())
            .map(|(i, _)| i)
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// Largest exponent occurring in the generators.
    pub fn max_exponent(&self) -> u32 {
        max_exponent(core::slice::from_ref(self))
    }
}

impl fmt::Display for MonomialIdeal {
    /// `x^2, x*y, y^2`; the zero ideal is `0` and the unit ideal `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        Ok(())
    }
}
