//! Factorization of univariate polynomials over `F_p`: squarefree
//! decomposition, distinct-degree splitting and Cantor–Zassenhaus.
//! Polynomials are dense coefficient vectors, lowest degree first, with no
//! trailing zeros.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigUint;
use rand_core::RngCore;

use super::{inv_mod, FpRing, PolyFp};
use crate::{Error, Monomial, Result};

type Dense = Vec<u64>;

/// `f = unit * Π g_i^{e_i}` with monic irreducible `g_i`, sorted by degree
/// and then by coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub var: usize,
    pub factors: Vec<(PolyFp, u32)>,
}

impl Factorization {
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn expand(&self, ring: &FpRing) -> PolyFp {
        let mut acc = PolyFp::constant(ring, self.unit as i64);
        for (g, e) in &self.factors {
            acc = &acc * &g.pow(*e);
        }
        acc
    }
}

fn to_dense(f: &PolyFp, var: usize) -> Result<Dense> {
    let mut out = Dense::new();
    for (m, c) in f.terms() {
        if m.support().any(|v| v != var) {
            return Err(Error::domain(alloc::format!(
                "{f} is not a polynomial in {} alone",
                f.ring().ring().name(var)
            )));
        }
        let k = m.exponent(var) as usize;
        if out.len() <= k {
            out.resize(k + 1, 0);
        }
        out[k] = c;
    }
    Ok(out)
}

fn from_dense(ring: &FpRing, var: usize, a: &[u64]) -> PolyFp {
    PolyFp::from_residues(
        ring,
        a.iter()
            .enumerate()
            .map(|(k, &c)| (Monomial::var_power(ring.dim(), var, k as u32), c)),
    )
}

struct Fp(u64);

impl Fp {
    fn trim(a: &mut Dense) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn deg(a: &[u64]) -> usize {
        a.len().saturating_sub(1)
    }

    fn is_one(a: &[u64]) -> bool {
        a == [1]
    }

    fn sub(&self, a: &[u64], b: &[u64]) -> Dense {
        let mut out = vec![0; a.len().max(b.len())];
        for (k, o) in out.iter_mut().enumerate() {
            let x = a.get(k).copied().unwrap_or(0);
            let y = b.get(k).copied().unwrap_or(0);
            *o = (x + self.0 - y) % self.0;
        }
        Fp::trim(&mut out);
        out
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Dense {
        let neg: Dense = b.iter().map(|&c| (self.0 - c) % self.0).collect();
        self.sub(a, &neg)
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Dense {
        if a.is_empty() || b.is_empty() {
            return Dense::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.0;
            }
        }
        Fp::trim(&mut out);
        out
    }

    fn divrem(&self, a: &[u64], b: &[u64]) -> (Dense, Dense) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut rem = a.to_vec();
        let db = Fp::deg(b);
        let inv = inv_mod(b[db], self.0);
        if rem.len() < b.len() {
            return (Dense::new(), rem);
        }
        let mut quot = vec![0; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db] * inv % self.0;
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + self.0 - c * y % self.0) % self.0;
            }
        }
        Fp::trim(&mut rem);
        Fp::trim(&mut quot);
        (quot, rem)
    }

    fn rem(&self, a: &[u64], b: &[u64]) -> Dense {
        self.divrem(a, b).1
    }

    fn quo(&self, a: &[u64], b: &[u64]) -> Dense {
        self.divrem(a, b).0
    }

    fn monic(&self, a: &[u64]) -> Dense {
        match a.last() {
            None => Dense::new(),
            Some(&lc) => {
                let inv = inv_mod(lc, self.0);
                a.iter().map(|&c| c * inv % self.0).collect()
            }
        }
    }

    fn gcd(&self, a: &[u64], b: &[u64]) -> Dense {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    fn derivative(&self, a: &[u64]) -> Dense {
        let mut out: Dense = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (k as u64 % self.0) * c % self.0)
            .collect();
        Fp::trim(&mut out);
        out
    }

    fn powmod(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> Dense {
        let mut acc = vec![1];
        let base = self.rem(base, modulus);
        for bit in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(bit) {
                acc = self.rem(&self.mul(&acc, &base), modulus);
            }
        }
        self.rem(&acc, modulus)
    }

    /// Yun's algorithm, with `p`-th roots when the derivative vanishes.
    fn squarefree(&self, f: &[u64]) -> Vec<(Dense, u32)> {
        let mut out = Vec::new();
        if Fp::deg(f) == 0 {
            return out;
        }
        let c = self.gcd(f, &self.derivative(f));
        let mut w = self.quo(f, &c);
        let mut c = c;
        let mut i = 1;
        while !Fp::is_one(&w) {
            let y = self.gcd(&w, &c);
            let z = self.quo(&w, &y);
            if !Fp::is_one(&z) {
                out.push((z, i));
            }
            i += 1;
            c = self.quo(&c, &y);
            w = y;
        }
        if !Fp::is_one(&c) {
            // c is a polynomial in x^p; over F_p its p-th root just rescales exponents
            let root: Dense = c.iter().step_by(self.0 as usize).copied().collect();
            for (g, e) in self.squarefree(&root) {
                out.push((g, e * self.0 as u32));
            }
        }
        out
    }

    /// Splits a squarefree monic `f` into products of irreducibles of equal
    /// degree.
    fn distinct_degree(&self, f: &[u64]) -> Vec<(Dense, usize)> {
        let x = vec![0, 1];
        let p = BigUint::from(self.0);
        let mut out = Vec::new();
        let mut f = f.to_vec();
        let mut h = x.clone();
        let mut i = 1;
        while Fp::deg(&f) >= 2 * i {
            h = self.powmod(&h, &p, &f);
            let g = self.gcd(&f, &self.sub(&h, &x));
            if !Fp::is_one(&g) {
                f = self.quo(&f, &g);
                h = self.rem(&h, &f);
                out.push((g, i));
            }
            i += 1;
        }
        if Fp::deg(&f) > 0 {
            let d = Fp::deg(&f);
            out.push((f, d));
        }
        out
    }

    fn random_below<R: RngCore + ?Sized>(&self, n: usize, rng: &mut R) -> Dense {
        let mut a: Dense = (0..n).map(|_| rng.next_u64() % self.0).collect();
        Fp::trim(&mut a);
        a
    }

    /// Cantor–Zassenhaus on a product of irreducibles all of degree `d`.
    fn equal_degree<R: RngCore + ?Sized>(&self, f: &[u64], d: usize, rng: &mut R) -> Vec<Dense> {
        if Fp::deg(f) == d {
            return vec![f.to_vec()];
        }
        loop {
            let a = self.random_below(Fp::deg(f), rng);
            if a.is_empty() {
                continue;
            }
            let b = if self.0 == 2 {
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = self.rem(&self.mul(&t, &t), f);
                    acc = self.add(&acc, &t);
                }
                acc
            } else {
                let e = (BigUint::from(self.0).pow(d as u32) - 1u32) / 2u32;
                self.sub(&self.powmod(&a, &e, f), &[1])
            };
            let g = self.gcd(f, &b);
            if Fp::deg(&g) > 0 && Fp::deg(&g) < Fp::deg(f) {
                let rest = self.quo(f, &g);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&self.monic(&rest), d, rng));
                return out;
            }
        }
    }
}

/// Complete factorization of a polynomial in the single variable `var`.
/// The randomness only affects running time; the result is sorted.
pub fn factor_univariate<R: RngCore + ?Sized>(
    f: &PolyFp,
    var: usize,
    rng: &mut R,
) -> Result<Factorization> {
    let ring = f.ring();
    if var >= ring.dim() {
        return Err(Error::domain(alloc::format!(
            "variable index {var} out of range"
        )));
    }
    let dense = to_dense(f, var)?;
    let Some(&unit) = dense.last() else {
        return Err(Error::domain("cannot factor the zero polynomial"));
    };
    let fp = Fp(ring.p());
    let mut factors: Vec<(Dense, u32)> = Vec::new();
    for (part, e) in fp.squarefree(&fp.monic(&dense)) {
        for (block, d) in fp.distinct_degree(&part) {
            for g in fp.equal_degree(&block, d, rng) {
                factors.push((g, e));
            }
        }
    }
    factors.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
            .then(a.1.cmp(&b.1))
    });
    // a factor can appear in several squarefree parts only through p-th roots
    let mut merged: Vec<(Dense, u32)> = Vec::new();
    for (g, e) in factors {
        match merged.last_mut() {
            Some(last) if last.0 == g => last.1 += e,
            _ => merged.push((g, e)),
        }
    }
    Ok(Factorization {
        unit,
        var,
        factors: merged
            .into_iter()
            .map(|(g, e)| (from_dense(ring, var, &g), e))
            .collect(),
    })
}

/// `gcd(f, f') = 1` for a polynomial in `var` alone.
pub fn is_squarefree(f: &PolyFp, var: usize) -> Result<bool> {
    let dense = to_dense(f, var)?;
    if dense.is_empty() {
        return Ok(false);
    }
    let fp = Fp(f.ring().p());
    Ok(Fp::deg(&fp.gcd(&dense, &fp.derivative(&dense))) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ring;
    use alloc::string::ToString;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring_t(p: u32) -> FpRing {
        FpRing::new(Ring::new(["t"], p).unwrap()).unwrap()
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    fn poly(r: &FpRing, coeffs: &[i64]) -> PolyFp {
        PolyFp::from_terms(
            r,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (Monomial::var_power(1, 0, k as u32), c)),
        )
    }

    fn is_irreducible_brute(g: &[u64], p: u64) -> bool {
        // no monic factor of degree 1..=deg/2
        let fp = Fp(p);
        let n = Fp::deg(g);
        for d in 1..=n / 2 {
            let count = p.pow(d as u32);
            for code in 0..count {
                let mut h = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    h.push(c % p);
                    c /= p;
                }
                h.push(1);
                if fp.rem(g, &h).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn small_factorizations() {
        let r = ring_t(2);
        // 1 + t + t^2 + t^3 = (1 + t)^3 over F_2
        let f = factor_univariate(&poly(&r, &[1, 1, 1, 1]), 0, &mut rng()).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].0.to_string(), "t + 1");
        assert_eq!(f.factors[0].1, 3);
        // t^2 + t + 1 is irreducible over F_2
        let f = factor_univariate(&poly(&r, &[1, 1, 1]), 0, &mut rng()).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.factors[0].1, 1);
        let r = ring_t(5);
        // t^4 - 1 splits into linear factors over F_5
        let f = factor_univariate(&poly(&r, &[-1, 0, 0, 0, 1]), 0, &mut rng()).unwrap();
        assert_eq!(f.factors.len(), 4);
        assert!(f.is_squarefree());
        let r = ring_t(3);
        // t^3 - t^... a p-th power: (t^3 + 2)^1 = (t + 2)^3 over F_3
        let f = factor_univariate(&poly(&r, &[2, 0, 0, 1]), 0, &mut rng()).unwrap();
        assert_eq!(f.factors, vec![(poly(&r, &[2, 1]), 3)]);
    }

    #[test]
    fn squarefree_checks() {
        let r = ring_t(3);
        assert!(is_squarefree(&poly(&r, &[1, 1]), 0).unwrap());
        assert!(!is_squarefree(&poly(&r, &[1, 2, 1]), 0).unwrap());
        assert!(!is_squarefree(&poly(&r, &[1, 0, 0, 1]), 0).unwrap());
        let two = FpRing::new(Ring::new(["t", "x"], 3).unwrap()).unwrap();
        assert!(is_squarefree(&PolyFp::var(&two, 1), 0).is_err());
    }

    #[test]
    fn rejects_zero_and_multivariate() {
        let r = FpRing::new(Ring::new(["t", "x"], 5).unwrap()).unwrap();
        assert!(factor_univariate(&PolyFp::zero(&r), 0, &mut rng()).is_err());
        let f = &PolyFp::var(&r, 0) * &PolyFp::var(&r, 1);
        assert!(factor_univariate(&f, 0, &mut rng()).is_err());
        // univariate in the second variable is fine
        let g = &PolyFp::var(&r, 1).pow(2) - &PolyFp::constant(&r, 1);
        assert_eq!(
            factor_univariate(&g, 1, &mut rng()).unwrap().factors.len(),
            2
        );
    }

    proptest! {
        #[test]
        fn factorization_is_complete(
            p in prop::sample::select(vec![2u32, 3, 5, 7, 13]),
            coeffs in prop::collection::vec(-20i64..20, 1..9),
            seed in any::<u64>(),
        ) {
            let r = ring_t(p);
            let f = poly(&r, &coeffs);
            prop_assume!(!f.is_zero());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let fac = factor_univariate(&f, 0, &mut rng).unwrap();
            prop_assert_eq!(fac.expand(&r), f.clone());
            for (g, _) in &fac.factors {
                let dense = to_dense(g, 0).unwrap();
                prop_assert_eq!(*dense.last().unwrap(), 1);
                prop_assert!(is_irreducible_brute(&dense, u64::from(p)));
            }
            // sorted output does not depend on the seed
            let again = factor_univariate(&f, 0, &mut ChaCha8Rng::seed_from_u64(seed ^ 1)).unwrap();
            prop_assert_eq!(fac, again);
        }
    }
}
