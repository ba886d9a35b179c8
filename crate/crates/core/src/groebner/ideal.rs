use alloc::vec::Vec;
use core::fmt;

use super::{groebner_basis, normal_form, FpRing, PolyFp, TermOrder};
use crate::{Error, Limits, Result};

/// An ideal of `F_p[x_1, ..., x_d]` together with its reduced grevlex
/// Gröbner basis, computed once at construction. Equality compares bases,
/// so it is ideal equality.
#[derive(Debug, Clone)]
pub struct IdealFp {
    ring: FpRing,
    generators: Vec<PolyFp>,
    basis: Vec<PolyFp>,
}

impl PartialEq for IdealFp {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.basis == other.basis
    }
}

impl Eq for IdealFp {}

impl IdealFp {
    pub fn new(ring: &FpRing, generators: Vec<PolyFp>, limits: &Limits) -> Result<Self> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        let generators: Vec<PolyFp> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let basis = groebner_basis(&generators, TermOrder::GrevLex, limits)?;
        Ok(IdealFp {
            ring: ring.clone(),
            generators,
            basis,
        })
    }

    pub fn unit(ring: &FpRing) -> Self {
        let one = PolyFp::constant(ring, 1);
        IdealFp {
            ring: ring.clone(),
            generators: alloc::vec![one.clone()],
            basis: alloc::vec![one],
        }
    }

    pub fn ring(&self) -> &FpRing {
        &self.ring
    }

    pub fn generators(&self) -> &[PolyFp] {
        &self.generators
    }

    /// Reduced grevlex basis.
    pub fn basis(&self) -> &[PolyFp] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn normal_form(&self, f: &PolyFp) -> PolyFp {
        normal_form(f, &self.basis, TermOrder::GrevLex)
    }

    pub fn contains(&self, f: &PolyFp) -> bool {
        self.normal_form(f).is_zero()
    }

    /// `other ⊆ self`
    pub fn contains_ideal(&self, other: &IdealFp) -> bool {
        other.basis.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &IdealFp, limits: &Limits) -> Result<IdealFp> {
        let gens = self.basis.iter().chain(&other.basis).cloned().collect();
        IdealFp::new(&self.ring, gens, limits)
    }

    pub fn with_generator(&self, f: &PolyFp, limits: &Limits) -> Result<IdealFp> {
        let mut gens = self.basis.clone();
        gens.push(f.clone());
        IdealFp::new(&self.ring, gens, limits)
    }
}

impl fmt::Display for IdealFp {
    /// The reduced basis, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("0");
        }
        for (k, g) in self.basis.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// `f ∈ I`
pub fn membership(f: &PolyFp, i: &IdealFp) -> bool {
    i.contains(f)
}

/// `I ∩ J` by eliminating `w` from `w I + (1 - w) J`.
pub fn intersect_fp(i: &IdealFp, j: &IdealFp, limits: &Limits) -> Result<IdealFp> {
    i.ring.check_same(&j.ring)?;
    let d = i.ring.dim();
    let big = i.ring.with_extra_variable("w");
    let w = PolyFp::var(&big, d);
    let one_minus_w = &PolyFp::constant(&big, 1) - &w;
    let gens: Vec<PolyFp> = i
        .basis
        .iter()
        .map(|g| &w * &g.extend_into(&big))
        .chain(j.basis.iter().map(|h| &one_minus_w * &h.extend_into(&big)))
        .collect();
    let basis = groebner_basis(&gens, TermOrder::Elimination { split: d }, limits)?;
    let kept = basis
        .iter()
        .filter(|g| g.degree_in(d) == Some(0))
        .map(|g| g.restrict_to(&i.ring))
        .collect();
    IdealFp::new(&i.ring, kept, limits)
}

/// `I : f`, as `(I ∩ (f)) / f`. The colon by zero is the unit ideal.
pub fn colon_fp(i: &IdealFp, f: &PolyFp, limits: &Limits) -> Result<IdealFp> {
    i.ring.check_same(f.ring())?;
    if f.is_zero() {
        return Ok(IdealFp::unit(&i.ring));
    }
    let principal = IdealFp::new(&i.ring, alloc::vec![f.clone()], limits)?;
    let cap = intersect_fp(i, &principal, limits)?;
    let mut quotients = Vec::with_capacity(cap.basis.len());
    for g in &cap.basis {
        let q = g.exact_div(f).ok_or_else(|| {
            Error::Engine(alloc::format!(
                "{g} lies in (f) but is not divisible by f = {f}"
            ))
        })?;
        quotients.push(q);
    }
    IdealFp::new(&i.ring, quotients, limits)
}

/// `I : f^∞` together with the number of colon steps that changed the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub ideal: IdealFp,
    pub steps: usize,
}

pub fn saturate_fp(i: &IdealFp, f: &PolyFp, limits: &Limits) -> Result<Saturation> {
    let mut current = i.clone();
    let mut steps = 0;
    loop {
        let next = colon_fp(&current, f, limits)?;
        if next == current {
            return Ok(Saturation {
                ideal: current,
                steps,
            });
        }
        current = next;
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Monomial, Ring};
    use alloc::string::ToString;
    use alloc::vec;

    fn ring(names: &[&str], p: u32) -> FpRing {
        FpRing::new(Ring::new(names.iter().copied(), p).unwrap()).unwrap()
    }

    fn ideal(r: &FpRing, gens: Vec<PolyFp>) -> IdealFp {
        IdealFp::new(r, gens, &Limits::default()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y"], 5);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let i = ideal(&r, vec![&x * &x, y.clone()]);
        assert!(!membership(&x, &i));
        assert!(membership(&(&(&x * &x) + &(&x * &y)), &i));
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"], 3);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let l = Limits::default();
        let cap =
            intersect_fp(&ideal(&r, vec![x.clone()]), &ideal(&r, vec![y.clone()]), &l).unwrap();
        assert_eq!(cap, ideal(&r, vec![&x * &y]));
        let i = ideal(&r, vec![&x * &x, &(&x * &y) - &y]);
        assert_eq!(intersect_fp(&i, &IdealFp::unit(&r), &l).unwrap(), i);
    }

    #[test]
    fn univariate_intersection_is_lcm() {
        // (f) ∩ (g) = (f g / gcd(f, g)); here f = (t+1)(t+2), g = (t+1)t over F_5
        let r = ring(&["t"], 5);
        let t = PolyFp::var(&r, 0);
        let c = |k| PolyFp::constant(&r, k);
        let f = &(&t + &c(1)) * &(&t + &c(2));
        let g = &(&t + &c(1)) * &t;
        let l = Limits::default();
        let cap =
            intersect_fp(&ideal(&r, vec![f.clone()]), &ideal(&r, vec![g.clone()]), &l).unwrap();
        let lcm = &(&(&t + &c(1)) * &(&t + &c(2))) * &t;
        assert_eq!(cap.basis(), &[lcm]);
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"], 7);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let l = Limits::default();
        let c = colon_fp(&ideal(&r, vec![&x * &x]), &x, &l).unwrap();
        assert_eq!(c, ideal(&r, vec![x.clone()]));
        let xmy = &x - &y;
        let c = colon_fp(&ideal(&r, vec![&(&x * &y) * &xmy]), &xmy, &l).unwrap();
        assert_eq!(c, ideal(&r, vec![&x * &y]));
        assert!(colon_fp(&c, &PolyFp::zero(&r), &l).unwrap().is_unit());
        // soundness: f * g ∈ I for every generator of I : f
        let i = ideal(&r, vec![&x.pow(3) - &y, &(&x * &y) * &y]);
        let c = colon_fp(&i, &x, &l).unwrap();
        assert!(c.basis().iter().all(|g| i.contains(&(&x * g))));
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"], 2);
        let x = PolyFp::var(&r, 0);
        let l = Limits::default();
        let s = saturate_fp(&ideal(&r, vec![&x * &x]), &x, &l).unwrap();
        assert!(s.ideal.is_unit());
        assert_eq!(s.steps, 2);
        let i = ideal(&r, vec![&x * &PolyFp::var(&r, 1)]);
        let s = saturate_fp(&i, &PolyFp::constant(&r, 1), &l).unwrap();
        assert_eq!(s.ideal, i);
        assert_eq!(s.steps, 0);
    }

    #[test]
    fn display_is_reduced_basis() {
        let r = ring(&["x", "y"], 2);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let i = ideal(&r, vec![&x * &x, &(&x * &y) + &(&y * &y)]);
        assert_eq!(i.to_string(), "y^3, x^2, x*y + y^2");
        let _ = Monomial::one(2);
    }
}
