use core::cmp::Ordering;

use crate::Monomial;

/// Monomial orders used by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermOrder {
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Block order eliminating the variables with index `>= split`: compare
    /// grevlex on that block first, then grevlex on the rest.
    Elimination { split: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Elimination { split } => {
                grevlex(&a[split..], &b[split..]).then_with(|| grevlex(&a[..split], &b[..split]))
            }
        }
    }
}
