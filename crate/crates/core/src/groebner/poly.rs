use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{inv_mod, TermOrder};
use crate::ring::is_prime;
use crate::{Error, Monomial, Result, Ring};

/// A polynomial ring over `F_p`: a [`Ring`] whose characteristic is a prime
/// below `2^31`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpRing {
    ring: Ring,
    p: u64,
}

impl FpRing {
    pub fn new(ring: Ring) -> Result<Self> {
        let p = u64::from(ring.characteristic());
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Domain(alloc::format!(
                "characteristic {p} is not a prime below 2^31"
            )));
        }
        Ok(FpRing { ring, p })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub(crate) fn with_extra_variable(&self, base: &str) -> FpRing {
        FpRing {
            ring: self.ring.with_extra_variable(base),
            p: self.p,
        }
    }

    pub(crate) fn check_same(&self, other: &FpRing) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    fn reduce(&self, c: i64) -> u64 {
        c.rem_euclid(self.p as i64) as u64
    }
}

/// A polynomial with coefficients in `F_p`. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    ring: FpRing,
    terms: BTreeMap<Monomial, u64>,
}

impl PolyFp {
    pub fn zero(ring: &FpRing) -> Self {
        PolyFp {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &FpRing, c: i64) -> Self {
        Self::monomial(ring, Monomial::one(ring.dim()), c)
    }

    pub fn var(ring: &FpRing, i: usize) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.dim(), i, 1), 1)
    }

    pub fn monomial(ring: &FpRing, m: Monomial, c: i64) -> Self {
        Self::from_terms(ring, [(m, c)])
    }

    /// Sums the given terms; coefficients are reduced mod `p`.
    pub fn from_terms(ring: &FpRing, terms: impl IntoIterator<Item = (Monomial, i64)>) -> Self {
        let mut out = PolyFp::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.dim(), ring.dim(), "monomial dimension");
            let c = ring.reduce(c);
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn from_residues(
        ring: &FpRing,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Self {
        let mut out = PolyFp::zero(ring);
        for (m, c) in terms {
            out.add_term(m, c % ring.p);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: u64) {
        if c == 0 {
            return;
        }
        let p = self.ring.p;
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &FpRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(Monomial::is_one)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> u64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: TermOrder) -> Vec<(Monomial, u64)> {
        let mut v: Vec<(Monomial, u64)> = self.terms.iter().map(|(m, &c)| (m.clone(), c)).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: TermOrder) -> Option<(&Monomial, u64)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(m, &c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    pub fn scale(&self, c: u64) -> PolyFp {
        PolyFp::from_residues(
            &self.ring,
            self.terms
                .iter()
                .map(|(m, &a)| (m.clone(), a * (c % self.ring.p))),
        )
    }

    /// `c * m * self`
    pub fn mul_term(&self, m: &Monomial, c: u64) -> PolyFp {
        PolyFp::from_residues(
            &self.ring,
            self.terms.iter().map(|(t, &a)| {
                (
                    t.checked_mul(m).expect("exponent overflow"),
                    a * (c % self.ring.p),
                )
            }),
        )
    }

    /// Scaled so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: TermOrder) -> PolyFp {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(inv_mod(c, self.ring.p)),
            None => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> PolyFp {
        let mut acc = PolyFp::constant(&self.ring, 1);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn exact_div(&self, divisor: &PolyFp) -> Option<PolyFp> {
        let order = TermOrder::GrevLex;
        let (lm, lc) = divisor.leading_term(order)?;
        let (lm, lc_inv) = (lm.clone(), inv_mod(lc, self.ring.p));
        let mut rem = self.clone();
        let mut quot = PolyFp::zero(&self.ring);
        while let Some((m, c)) = rem.leading_term(order) {
            let t = m.checked_div(&lm)?;
            let coef = c * lc_inv % self.ring.p;
            rem = &rem - &divisor.mul_term(&t, coef);
            quot.add_term(t, coef);
        }
        Some(quot)
    }

    /// The same polynomial in the ring with `extra` trailing variables.
    pub(crate) fn extend_into(&self, ring: &FpRing) -> PolyFp {
        let extra = ring.dim() - self.ring.dim();
        PolyFp::from_residues(
            ring,
            self.terms.iter().map(|(m, &c)| (m.extended(extra), c)),
        )
    }

    /// Drops trailing variables that do not occur.
    pub(crate) fn restrict_to(&self, ring: &FpRing) -> PolyFp {
        let d = ring.dim();
        PolyFp::from_residues(
            ring,
            self.terms.iter().map(|(m, &c)| {
                debug_assert!(m.exponents()[d..].iter().all(|&e| e == 0));
                (m.truncated(d), c)
            }),
        )
    }
}

impl Add for &PolyFp {
    type Output = PolyFp;

    fn add(self, rhs: &PolyFp) -> PolyFp {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl Neg for &PolyFp {
    type Output = PolyFp;

    fn neg(self) -> PolyFp {
        let p = self.ring.p;
        PolyFp::from_residues(
            &self.ring,
            self.terms.iter().map(|(m, &c)| (m.clone(), p - c)),
        )
    }
}

impl Sub for &PolyFp {
    type Output = PolyFp;

    fn sub(self, rhs: &PolyFp) -> PolyFp {
        self + &(-rhs)
    }
}

impl Mul for &PolyFp {
    type Output = PolyFp;

    fn mul(self, rhs: &PolyFp) -> PolyFp {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut out = PolyFp::zero(&self.ring);
        for (m, &a) in &self.terms {
            for (n, &b) in &rhs.terms {
                out.add_term(
                    m.checked_mul(n).expect("exponent overflow"),
                    a * b % self.ring.p,
                );
            }
        }
        out
    }
}

impl fmt::Display for PolyFp {
    /// Terms in decreasing grevlex order, e.g. `x^2*y + 2*t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms(TermOrder::GrevLex).iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{}", m.display(&self.ring.ring))?;
            } else {
                write!(f, "{c}*{}", m.display(&self.ring.ring))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    pub(crate) fn txy(p: u32) -> FpRing {
        FpRing::new(Ring::new(["t", "x", "y"], p).unwrap()).unwrap()
    }

    #[test]
    fn needs_prime_characteristic() {
        assert!(FpRing::new(Ring::new(["x"], 0).unwrap()).is_err());
        assert!(FpRing::new(Ring::new(["x"], 4).unwrap()).is_err());
        assert!(FpRing::new(Ring::new(["x"], 7).unwrap()).is_ok());
    }

    #[test]
    fn arithmetic_mod_p() {
        let r = txy(3);
        let x = PolyFp::var(&r, 1);
        let y = PolyFp::var(&r, 2);
        let one = PolyFp::constant(&r, 1);
        let s = &x + &y;
        // (x + y)^3 = x^3 + y^3 in characteristic 3
        assert_eq!(s.pow(3), &x.pow(3) + &y.pow(3));
        assert!((&(&x - &x) + &PolyFp::zero(&r)).is_zero());
        assert_eq!(PolyFp::constant(&r, -1), PolyFp::constant(&r, 2));
        assert!(PolyFp::constant(&r, 3).is_zero());
        assert!(one.is_unit());
        assert_eq!((&s * &s).to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(
            (&(&x * &y) + &PolyFp::constant(&r, 5)).to_string(),
            "x*y + 2"
        );
    }

    #[test]
    fn exact_division() {
        let r = txy(5);
        let x = PolyFp::var(&r, 1);
        let y = PolyFp::var(&r, 2);
        let t = PolyFp::var(&r, 0);
        let a = &(&x - &(&t * &y)) + &PolyFp::constant(&r, 1);
        let b = &(&x * &x) - &y;
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a));
        assert_eq!((&prod + &PolyFp::constant(&r, 1)).exact_div(&b), None);
    }
}
