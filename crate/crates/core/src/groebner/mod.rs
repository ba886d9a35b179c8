//! Polynomial arithmetic over a prime field `F_p` with Buchberger's
//! algorithm, ideal intersections, colons, saturations and univariate
//! factorization.
//!
//! Coefficients are residues `0..p` with `p < 2^31`, so every product of two
//! residues fits in a `u64`.

mod engine;
mod ideal;
mod order;
mod poly;
mod univariate;

pub use engine::{groebner_basis, normal_form};
pub use ideal::{colon_fp, intersect_fp, membership, saturate_fp, IdealFp, Saturation};
pub use order::TermOrder;
pub use poly::{FpRing, PolyFp};
pub use univariate::{factor_univariate, is_squarefree, Factorization};

/// Inverse of a nonzero residue by the extended Euclidean algorithm.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u64
}
