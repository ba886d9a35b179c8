use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result, Ring};

/// A monomial `x_1^{a_1} ... x_d^{a_d}` stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on exponent vectors with `x_1` most
/// significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(dim: usize) -> Self {
        Monomial { exps: vec![0; dim] }
    }

    /// `x_var^exp`
    pub fn var_power(dim: usize, var: usize, exp: u32) -> Self {
        let mut exps = vec![0; dim];
        exps[var] = exp;
        Monomial { exps }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    /// `Some((i, a))` when the monomial is `x_i^a` with `a >= 1`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.min(b))
    }

    /// `self / gcd(self, other)`, the colon generator.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.saturating_sub(b))
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.dim(), other.dim());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn checked_pow(&self, n: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(n).ok_or(Error::ExponentOverflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Exact quotient, `None` unless `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| self.quotient_by_gcd(other))
    }

    /// Every positive exponent replaced by 1.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| u32::from(e > 0)).collect(),
        }
    }

    pub(crate) fn extended(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(core::iter::repeat_n(0, extra));
        Monomial { exps }
    }

    pub(crate) fn truncated(&self, dim: usize) -> Monomial {
        Monomial {
            exps: self.exps[..dim].to_vec(),
        }
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.dim(), other.dim());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Renders with the ring's variable names, e.g. `x^2*y`; the unit is `1`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> DisplayMonomial<'a> {
        DisplayMonomial { mono: self, ring }
    }
}

pub struct DisplayMonomial<'a> {
    mono: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
