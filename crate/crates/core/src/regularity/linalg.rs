//! Matrix rank over `Q` (fraction-free elimination) and over `F_p`.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use super::CoefficientField;

/// Rank of a dense integer matrix given as rows.
pub(crate) fn rank(rows: Vec<Vec<i64>>, field: CoefficientField) -> usize {
    match field {
        CoefficientField::Rationals => rank_rational(rows),
        CoefficientField::Prime(p) => rank_mod_p(rows, u64::from(p)),
    }
}

/// Bareiss elimination; every intermediate entry is a minor of the input,
/// so the arithmetic stays exact without fractions.
fn rank_rational(rows: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(BigInt::from).collect())
        .collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        for r in rank + 1..n_rows {
            for c in col + 1..n_cols {
                let v = (&a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c]) / &prev;
                a[r][c] = v;
            }
            a[r][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

fn rank_mod_p(rows: Vec<Vec<i64>>, p: u64) -> usize {
    let pi = p as i64;
    let mut a: Vec<Vec<u64>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| v.rem_euclid(pi) as u64).collect())
        .collect();
    let n_rows = a.len();
    let n_cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = crate::groebner::inv_mod(a[rank][col], p);
        for c in col..n_cols {
            a[rank][c] = a[rank][c] * inv % p;
        }
        for r in rank + 1..n_rows {
            let f = a[r][col];
            if f == 0 {
                continue;
            }
            for c in col..n_cols {
                a[r][c] = (a[r][c] + p - f * a[rank][c] % p) % p;
            }
        }
        rank += 1;
    }
    rank
}
