//! Buchberger's algorithm with the coprime and chain criteria.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::{inv_mod, FpRing, PolyFp, TermOrder};
use crate::{Error, Limits, Monomial, Result};

/// Terms sorted by decreasing monomial under the working order.
type Terms = Vec<(Monomial, u64)>;

struct Engine {
    order: TermOrder,
    p: u64,
}

impl Engine {
    fn monic(&self, t: Terms) -> Terms {
        let Some(&(_, lc)) = t.first() else { return t };
        let inv = inv_mod(lc, self.p);
        t.into_iter().map(|(m, c)| (m, c * inv % self.p)).collect()
    }

    /// `f - coef * shift * g` where `shift * lm(g)` equals `lm(f)`.
    fn sub_multiple(
        &self,
        f: &[(Monomial, u64)],
        g: &[(Monomial, u64)],
        shift: &Monomial,
        coef: u64,
    ) -> Terms {
        let p = self.p;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut gi = g
            .iter()
            .map(|(m, c)| {
                (
                    m.checked_mul(shift).expect("exponent overflow"),
                    c * coef % p,
                )
            })
            .peekable();
        let mut fi = f.iter().cloned().peekable();
        loop {
            match (fi.peek(), gi.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(fi.next().unwrap()),
                (None, Some(_)) => {
                    let (m, c) = gi.next().unwrap();
                    out.push((m, (p - c) % p));
                }
                (Some(a), Some(b)) => match self.order.cmp(&a.0, &b.0) {
                    Ordering::Greater => out.push(fi.next().unwrap()),
                    Ordering::Less => {
                        let (m, c) = gi.next().unwrap();
                        out.push((m, (p - c) % p));
                    }
                    Ordering::Equal => {
                        let (m, a) = fi.next().unwrap();
                        let (_, b) = gi.next().unwrap();
                        let c = (a + p - b) % p;
                        if c != 0 {
                            out.push((m, c));
                        }
                    }
                },
            }
        }
        out
    }

    /// Full reduction of `f` by monic `basis` elements.
    fn reduce(&self, f: Terms, basis: &[Terms]) -> Terms {
        let mut f = f;
        let mut rem: Terms = Vec::new();
        while let Some((m, c)) = f.first().cloned() {
            let divisor = basis.iter().find(|g| g[0].0.divides(&m));
            match divisor {
                Some(g) => {
                    let shift = m.checked_div(&g[0].0).expect("divides");
                    f = self.sub_multiple(&f, g, &shift, c);
                }
                None => {
                    rem.push((m, c));
                    f.remove(0);
                }
            }
        }
        rem
    }

    fn s_poly(&self, f: &Terms, g: &Terms) -> Terms {
        let lcm = f[0].0.lcm(&g[0].0);
        let sf = lcm.checked_div(&f[0].0).expect("divides");
        let sg = lcm.checked_div(&g[0].0).expect("divides");
        let a: Terms = f
            .iter()
            .map(|(m, c)| (m.checked_mul(&sf).expect("exponent overflow"), *c))
            .collect();
        // both monic: leading terms cancel
        self.sub_multiple(&a, g, &sg, 1)
    }

    fn run(&self, gens: Vec<Terms>, limits: &Limits) -> Result<Vec<Terms>> {
        let mut basis: Vec<Terms> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in gens {
            let g = self.monic(self.reduce(g, &basis));
            if !g.is_empty() {
                self.push(&mut basis, &mut pairs, g);
            }
        }
        let mut reductions = 0usize;
        while !pairs.is_empty() {
            let (pos, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let la = basis[a.0][0].0.lcm(&basis[a.1][0].0);
                    let lb = basis[b.0][0].0.lcm(&basis[b.1][0].0);
                    self.order.cmp(&la, &lb).then_with(|| a.cmp(b))
                })
                .expect("nonempty");
            let (i, j) = pairs.swap_remove(pos);
            let (lm_i, lm_j) = (&basis[i][0].0, &basis[j][0].0);
            if lm_i.gcd(lm_j).is_one() {
                continue;
            }
            let lcm = lm_i.lcm(lm_j);
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].0.divides(&lcm)
                    && !pairs.contains(&ordered(i, k))
                    && !pairs.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            reductions += 1;
            if reductions > limits.spair_budget {
                return Err(Error::Resource {
                    what: "S-pair budget".into(),
                    limit: limits.spair_budget as u64,
                    progress: alloc::format!(
                        "; basis size {}, pending pairs {}",
                        basis.len(),
                        pairs.len()
                    ),
                });
            }
            let h = self.reduce(self.s_poly(&basis[i], &basis[j]), &basis);
            if !h.is_empty() {
                let h = self.monic(h);
                self.push(&mut basis, &mut pairs, h);
            }
        }
        Ok(self.reduced(basis))
    }

    fn push(&self, basis: &mut Vec<Terms>, pairs: &mut Vec<(usize, usize)>, g: Terms) {
        let n = basis.len();
        pairs.extend((0..n).map(|k| (k, n)));
        basis.push(g);
    }

    fn reduced(&self, mut basis: Vec<Terms>) -> Vec<Terms> {
        basis.sort_by(|a, b| self.order.cmp(&a[0].0, &b[0].0));
        let mut minimal: Vec<Terms> = Vec::new();
        for g in basis {
            if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
                minimal.push(g);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let others: Vec<Terms> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, g)| g.clone())
                .collect();
            let lead = minimal[k][0].clone();
            let tail = self.reduce(minimal[k][1..].to_vec(), &others);
            let mut g = Vec::with_capacity(tail.len() + 1);
            g.push(lead);
            g.extend(tail);
            out.push(self.monic(g));
        }
        // largest leading monomial first
        out.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        out
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`,
/// monic and sorted by decreasing leading monomial. The zero ideal has the
/// empty basis.
pub fn groebner_basis(gens: &[PolyFp], order: TermOrder, limits: &Limits) -> Result<Vec<PolyFp>> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let engine = Engine { order, p: ring.p() };
    let input: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.sorted_terms(order))
        .collect();
    let basis = engine.run(input, limits)?;
    Ok(basis
        .into_iter()
        .map(|t| PolyFp::from_residues(&ring, t))
        .collect())
}

/// Remainder of `f` on full reduction by a Gröbner basis for `order`.
pub fn normal_form(f: &PolyFp, basis: &[PolyFp], order: TermOrder) -> PolyFp {
    let ring: &FpRing = f.ring();
    let engine = Engine { order, p: ring.p() };
    let basis: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine.monic(g.sorted_terms(order)))
        .collect();
    PolyFp::from_residues(ring, engine.reduce(f.sorted_terms(order), &basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ring;
    use alloc::string::ToString;
    use alloc::vec;

    fn xy(p: u32) -> FpRing {
        FpRing::new(Ring::new(["x", "y"], p).unwrap()).unwrap()
    }

    fn s_pairs_reduce_to_zero(basis: &[PolyFp], order: TermOrder) -> bool {
        let e = Engine {
            order,
            p: basis[0].ring().p(),
        };
        let terms: Vec<Terms> = basis.iter().map(|g| g.sorted_terms(order)).collect();
        (0..terms.len())
            .all(|i| (0..i).all(|j| e.reduce(e.s_poly(&terms[i], &terms[j]), &terms).is_empty()))
    }

    #[test]
    fn coordinate_ideal() {
        let r = xy(7);
        let gb = groebner_basis(
            &[PolyFp::var(&r, 0), PolyFp::var(&r, 1)],
            TermOrder::GrevLex,
            &Limits::default(),
        )
        .unwrap();
        assert_eq!(
            gb.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["x", "y"]
        );
    }

    #[test]
    fn principal_is_made_monic() {
        let r = xy(7);
        let f = PolyFp::from_terms(
            &r,
            [
                (Monomial::new(vec![2, 0]), 3),
                (Monomial::new(vec![0, 1]), 1),
            ],
        );
        let gb = groebner_basis(std::slice::from_ref(&f), TermOrder::GrevLex, &Limits::default()).unwrap();
        assert_eq!(gb, [f.monic(TermOrder::GrevLex)]);
        assert_eq!(gb[0].to_string(), "x^2 + 5*y");
    }

    #[test]
    fn mixed_example_over_f2() {
        // (x^2, x*y + y^2): y^3 = (x + y)(x*y + y^2) - y*x^2
        let r = xy(2);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let f = &x * &x;
        let g = &(&x * &y) + &(&y * &y);
        let gb = groebner_basis(
            &[f.clone(), g.clone()],
            TermOrder::GrevLex,
            &Limits::default(),
        )
        .unwrap();
        let y3 = y.pow(3);
        let cofactor_witness = &(&(&x + &y) * &g) - &(&y * &f);
        assert_eq!(cofactor_witness, y3);
        assert!(normal_form(&y3, &gb, TermOrder::GrevLex).is_zero());
        assert!(gb.contains(&y3));
        assert!(s_pairs_reduce_to_zero(&gb, TermOrder::GrevLex));
    }

    #[test]
    fn budget_is_enforced() {
        let r = xy(5);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let gens = [&(&x * &x) - &y, &(&x * &y) - &PolyFp::constant(&r, 1)];
        let limits = Limits {
            spair_budget: 0,
            ..Limits::default()
        };
        let err = groebner_basis(&gens, TermOrder::GrevLex, &limits).unwrap_err();
        assert!(matches!(err, Error::Resource { .. }));
        let gb = groebner_basis(&gens, TermOrder::GrevLex, &Limits::default()).unwrap();
        assert!(s_pairs_reduce_to_zero(&gb, TermOrder::GrevLex));
    }

    #[test]
    fn normal_form_difference_lies_in_ideal() {
        let r = xy(3);
        let x = PolyFp::var(&r, 0);
        let y = PolyFp::var(&r, 1);
        let gb = groebner_basis(
            &[&(&x * &x) - &y, &(&y * &y) - &x],
            TermOrder::GrevLex,
            &Limits::default(),
        )
        .unwrap();
        let f = &(&x.pow(3) * &y) + &(&x * &PolyFp::constant(&r, 2));
        let nf = normal_form(&f, &gb, TermOrder::GrevLex);
        assert!(normal_form(&(&f - &nf), &gb, TermOrder::GrevLex).is_zero());
        // remainder is reduced: no term divisible by a leading monomial
        for (m, _) in nf.terms() {
            assert!(gb
                .iter()
                .all(|g| !g.leading_term(TermOrder::GrevLex).unwrap().0.divides(m)));
        }
    }
}
