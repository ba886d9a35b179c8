//! Linear growth of primary components for `I^n + J` and `I^[q] + J`.
//!
//! With `l` the largest exponent among the generators of `I` and `J` and `d`
//! the number of variables, every component `Q` of the canonical primary
//! decomposition satisfies `(√Q)^{n l d} ⊆ Q` (resp. `q l d`). The
//! certificates here record the true exponent index of each component next
//! to that bound.

use alloc::vec::Vec;

use super::{primary_decompose, PrimaryComponent};
use crate::{max_exponent, Error, MonomialIdeal, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthKind {
    /// `I^n + J`
    Ordinary(u32),
    /// `I^[q] + J`
    Frobenius(u32),
}

impl GrowthKind {
    pub fn multiplier(self) -> u32 {
        match self {
            GrowthKind::Ordinary(n) | GrowthKind::Frobenius(n) => n,
        }
    }

    fn target(self, i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
        let raised = match self {
            GrowthKind::Ordinary(n) => i.power(n)?,
            GrowthKind::Frobenius(q) => i.frobenius_power(q)?,
        };
        raised.sum(j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthCertificate {
    pub ideal_described: MonomialIdeal,
    pub kind: GrowthKind,
    pub l: u32,
    pub d: usize,
    pub bound: u64,
    /// Each primary component with its exponent index.
    pub per_component: Vec<(PrimaryComponent, u64)>,
}

impl GrowthCertificate {
    pub fn holds(&self) -> bool {
        self.per_component.iter().all(|(_, idx)| *idx <= self.bound)
    }

    /// Components whose exponent index exceeds the bound.
    pub fn violations(&self) -> impl Iterator<Item = &(PrimaryComponent, u64)> {
        self.per_component
            .iter()
            .filter(|(_, idx)| *idx > self.bound)
    }
}

fn certify(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    kind: GrowthKind,
    l: u32,
) -> Result<GrowthCertificate> {
    i.ring().check_same(j.ring())?;
    if kind.multiplier() == 0 {
        return Err(Error::domain("n and q must be positive"));
    }
    let target = kind.target(i, j)?;
    if target.is_unit() {
        return Err(Error::domain("I + J is the unit ideal"));
    }
    if target.is_zero() {
        return Err(Error::domain("I + J is the zero ideal"));
    }
    let d = i.dim();
    let bound = u64::from(kind.multiplier())
        .checked_mul(u64::from(l))
        .and_then(|b| b.checked_mul(d as u64))
        .ok_or(Error::ExponentOverflow)?;
    let per_component = primary_decompose(&target)?
        .into_iter()
        .map(|q| {
            let idx = q.exponent_index();
            (q, idx)
        })
        .collect();
    Ok(GrowthCertificate {
        ideal_described: target,
        kind,
        l,
        d,
        bound,
        per_component,
    })
}

/// Certificate for `I^n + J` with bound `n l d`.
pub fn verify_growth_ordinary(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    n: u32,
) -> Result<GrowthCertificate> {
    certify(
        i,
        j,
        GrowthKind::Ordinary(n),
        max_exponent(&[i.clone(), j.clone()]),
    )
}

/// Certificate for `I^[q] + J` with bound `q l d`. `q` is not required to be
/// a power of the characteristic.
pub fn verify_growth_frobenius(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    q: u32,
) -> Result<GrowthCertificate> {
    certify(
        i,
        j,
        GrowthKind::Frobenius(q),
        max_exponent(&[i.clone(), j.clone()]),
    )
}

/// Result of re-running the growth check with `l` taken from `I` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictScan {
    pub l_strict: u32,
    /// `(n or q, bound, largest exponent index, holds)`
    pub rows: Vec<(u32, u64, u64, bool)>,
    /// Smallest scanned value from which the strict bound holds for every
    /// later scanned value.
    pub first_holding: Option<u32>,
}

/// Scans `values` (all `n` or all `q`, per `frobenius`) using the strict `l`
/// drawn from the generators of `I` only. The strict bound is only expected
/// for large `n`/`q`, so this reports where it starts holding instead of
/// asserting it.
pub fn strict_growth_scan(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    frobenius: bool,
    values: &[u32],
) -> Result<StrictScan> {
    let l_strict = i.max_exponent();
    let mut rows = Vec::with_capacity(values.len());
    for &v in values {
        let kind = if frobenius {
            GrowthKind::Frobenius(v)
        } else {
            GrowthKind::Ordinary(v)
        };
        let cert = certify(i, j, kind, l_strict)?;
        let worst = cert
            .per_component
            .iter()
            .map(|(_, x)| *x)
            .max()
            .unwrap_or(0);
        rows.push((v, cert.bound, worst, cert.holds()));
    }
    let mut first_holding = None;
    for (v, _, _, holds) in rows.iter().rev() {
        if !holds {
            break;
        }
        first_holding = Some(*v);
    }
    Ok(StrictScan {
        l_strict,
        rows,
        first_holding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::tests::{arb_ideal, ideal, ring};
    use proptest::prelude::*;

    #[test]
    fn ordinary_examples() {
        let r = ring(2);
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        let zero = MonomialIdeal::zero(&r);
        let cert = verify_growth_ordinary(&m, &zero, 3).unwrap();
        assert_eq!(cert.bound, 6);
        assert_eq!(cert.per_component.len(), 1);
        assert_eq!(cert.per_component[0].1, 3);
        assert_eq!(cert.ideal_described, m.power(3).unwrap());
        assert!(cert.holds());

        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let cert = verify_growth_ordinary(&i, &zero, 1).unwrap();
        assert_eq!(cert.bound, 4);
        // (x) has index 1; (x^2, y) has index 2 since (x, y)^2 ⊆ (x^2, y)
        assert_eq!(
            cert.per_component.iter().map(|c| c.1).collect::<Vec<_>>(),
            [1, 2]
        );

        let unit_sum = verify_growth_ordinary(&m, &MonomialIdeal::unit(&r), 1);
        assert!(matches!(unit_sum, Err(Error::Domain(_))));
    }

    #[test]
    fn frobenius_examples() {
        let r = ring(2);
        let m = ideal(&r, &[&[1, 0], &[0, 1]]);
        let zero = MonomialIdeal::zero(&r);
        let cert = verify_growth_frobenius(&m, &zero, 4).unwrap();
        assert_eq!(cert.ideal_described, ideal(&r, &[&[4, 0], &[0, 4]]));
        assert_eq!(cert.per_component.len(), 1);
        assert_eq!(cert.per_component[0].1, 7);
        assert_eq!(cert.bound, 8);

        let xy = ideal(&r, &[&[1, 1]]);
        for q in [2, 3, 5] {
            let cert = verify_growth_frobenius(&xy, &zero, q).unwrap();
            assert!(cert
                .per_component
                .iter()
                .all(|(_, idx)| *idx <= 2 * u64::from(q)));
            assert!(cert.holds());
        }

        let i = ideal(&r, &[&[2, 0], &[1, 1]]);
        let j = ideal(&r, &[&[0, 3]]);
        let a = verify_growth_frobenius(&i, &j, 1).unwrap();
        let b = verify_growth_ordinary(&i, &j, 1).unwrap();
        assert_eq!(a.ideal_described, b.ideal_described);
        assert_eq!(a.per_component, b.per_component);
        assert_eq!(a.bound, b.bound);
    }

    #[test]
    fn strict_scan_reports_threshold() {
        let r = ring(2);
        // J carries a large exponent that I does not.
        let i = ideal(&r, &[&[1, 0]]);
        let j = ideal(&r, &[&[0, 9]]);
        let scan = strict_growth_scan(&i, &j, false, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(scan.l_strict, 1);
        // component (x^n, y^9) has index n + 8 against bound 2n
        let holds: Vec<bool> = scan.rows.iter().map(|r| r.3).collect();
        assert_eq!(holds, [false, false, false, false, false, false]);
        assert_eq!(scan.first_holding, None);
        let scan = strict_growth_scan(&i, &j, false, &[7, 8, 9, 10]).unwrap();
        assert_eq!(scan.first_holding, Some(8));
    }

    proptest! {
        #[test]
        fn bounds_never_violated(
            (i, j) in (1usize..=4).prop_flat_map(|d| (arb_ideal(d, 4, 3), arb_ideal(d, 3, 3))),
            n in 1u32..=3,
            q in prop::sample::select(alloc::vec![2u32, 3, 4, 8]),
        ) {
            let sum = i.sum(&j).unwrap();
            prop_assume!(!sum.is_unit());
            let a = verify_growth_ordinary(&i, &j, n).unwrap();
            prop_assert!(a.holds());
            let b = verify_growth_frobenius(&i, &j, q).unwrap();
            prop_assert!(b.holds());
        }
    }
}
