use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A polynomial ring `k[x_1, ..., x_d]` described by its ordered variable
/// names and the characteristic of `k`.
///
/// Cloning is cheap; the names live behind an `Arc`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    inner: Arc<RingData>,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    names: Vec<String>,
    characteristic: u32,
}

impl Ring {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        characteristic: u32,
    ) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::domain("a ring needs at least one variable"));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::domain("empty variable name"));
            }
            if names[..i].contains(name) {
                return Err(Error::Domain(alloc::format!(
                    "duplicate variable name `{name}`"
                )));
            }
        }
        Ok(Ring {
            inner: Arc::new(RingData {
                names,
                characteristic,
            }),
        })
    }

    pub fn dim(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.inner.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// 0 or a prime. Monomial operations ignore it.
    pub fn characteristic(&self) -> u32 {
        self.inner.characteristic
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if Arc::ptr_eq(&self.inner, &other.inner) || self == other {
            Ok(())
        } else if self.dim() != other.dim() {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        } else {
            Err(Error::domain("operands live in different rings"))
        }
    }

    /// Same variables plus one fresh trailing variable (used for elimination).
    pub(crate) fn with_extra_variable(&self, base: &str) -> Ring {
        let mut name = String::from(base);
        while self.index_of(&name).is_some() {
            name.push('_');
        }
        let mut names = self.inner.names.clone();
        names.push(name);
        Ring {
            inner: Arc::new(RingData {
                names,
                characteristic: self.inner.characteristic,
            }),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}
