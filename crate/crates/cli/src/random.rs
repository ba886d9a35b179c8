//! Seeded random inputs shared by `selftest` and the acceptance suite.

use monideal::groebner::{FpRing, PolyFp};
use monideal::{Monomial, MonomialIdeal, Ring};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `x, y, z, w, v, u`, then `x7, x8, ...`.
pub fn ring_of_dim(d: usize, characteristic: u32) -> Ring {
    const NAMES: [&str; 6] = ["x", "y", "z", "w", "v", "u"];
    let names = (0..d).map(|i| match NAMES.get(i) {
        Some(n) => n.to_string(),
        None => format!("x{}", i + 1),
    });
    Ring::new(names, characteristic).expect("generated names are valid")
}

/// A monomial other than 1 with exponents in `0..=max_exp`.
pub fn monomial<R: Rng>(rng: &mut R, d: usize, max_exp: u32) -> Monomial {
    loop {
        let exps: Vec<u32> = (0..d).map(|_| rng.gen_range(0..=max_exp)).collect();
        if exps.iter().any(|&e| e > 0) {
            return Monomial::new(exps);
        }
    }
}

/// A proper nonzero ideal with between 1 and `max_gens` generators before
/// minimalization.
pub fn ideal<R: Rng>(rng: &mut R, ring: &Ring, max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let k = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..k).map(|_| monomial(rng, ring.dim(), max_exp)).collect();
    MonomialIdeal::new(ring, gens).expect("dimensions match")
}

/// The smallest strongly stable ideal containing a few random monomials.
pub fn strongly_stable<R: Rng>(
    rng: &mut R,
    ring: &Ring,
    max_gens: usize,
    max_exp: u32,
) -> MonomialIdeal {
    let d = ring.dim();
    let mut gens: Vec<Monomial> = ideal(rng, ring, max_gens, max_exp).generators().to_vec();
    let mut k = 0;
    while k < gens.len() {
        let g = gens[k].clone();
        for j in 1..d {
            if g.exponent(j) == 0 {
                continue;
            }
            for i in 0..j {
                let mut e = g.exponents().to_vec();
                e[j] -= 1;
                e[i] += 1;
                let m = Monomial::new(e);
                if !gens.contains(&m) {
                    gens.push(m);
                }
            }
        }
        k += 1;
    }
    MonomialIdeal::new(ring, gens).expect("dimensions match")
}

pub fn poly<R: Rng>(rng: &mut R, ring: &FpRing, terms: usize, max_exp: u32) -> PolyFp {
    let p = ring.p() as i64;
    PolyFp::from_terms(
        ring,
        (0..terms).map(|_| {
            let exps = (0..ring.dim())
                .map(|_| rng.gen_range(0..=max_exp))
                .collect();
            (Monomial::new(exps), rng.gen_range(1..p))
        }),
    )
}
