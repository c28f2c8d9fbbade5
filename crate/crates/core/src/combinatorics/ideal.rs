//! Monomial ideals given by minimal generators over an explicit ambient variable set.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Monomial, Ring, VariableId};
use crate::error::{Error, Result};

/// Keeps only generators not divisible by another, in canonical (degree, grlex) order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.grlex_cmp(a)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ambient: Vec<u32>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// `ambient` lists ring variable indices; every generator must live in them.
    pub fn new(mut ambient: Vec<u32>, gens: Vec<Monomial>) -> Result<Self> {
        ambient.sort_unstable();
        ambient.dedup();
        for g in &gens {
            if let Some(v) = g.support().find(|v| ambient.binary_search(v).is_err()) {
                return Err(Error::InvalidParameters(format!(
                    "generator uses variable #{v} outside the ambient set"
                )));
            }
        }
        Ok(MonomialIdeal {
            ambient,
            gens: minimalize(gens),
        })
    }

    pub fn zero(ambient: Vec<u32>) -> Self {
        MonomialIdeal::new(ambient, Vec::new()).expect("no generators")
    }

    /// Ambient given as variables of `ring`.
    pub fn from_variables(ring: &Ring, pool: &[VariableId], gens: Vec<Monomial>) -> Result<Self> {
        let ambient = pool.iter().map(|&v| ring.index_of(v)).collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ambient, gens)
    }

    pub fn ambient(&self) -> &[u32] {
        &self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `(I : v)`.
    pub fn colon_by_variable(&self, v: u32) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient.clone(),
            gens: minimalize(self.gens.iter().map(|g| g.colon_var(v)).collect()),
        }
    }

    /// `I + J` over the union of the ambients.
    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut ambient = self.ambient.clone();
        ambient.extend_from_slice(&other.ambient);
        ambient.sort_unstable();
        ambient.dedup();
        MonomialIdeal {
            ambient,
            gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()),
        }
    }

    /// `I + v J`.
    pub fn sum_with_multiple(&self, v: u32, other: &MonomialIdeal) -> MonomialIdeal {
        let vm = Monomial::var(v);
        let shifted = other.gens.iter().map(|g| g.mul(&vm)).collect::<Vec<_>>();
        let mut ambient = self.ambient.clone();
        ambient.extend_from_slice(&other.ambient);
        ambient.push(v);
        ambient.sort_unstable();
        ambient.dedup();
        MonomialIdeal {
            ambient,
            gens: minimalize(self.gens.iter().cloned().chain(shifted).collect()),
        }
    }

    /// Generators not involving `v`, over the ambient without `v`.
    pub fn restrict_away(&self, v: u32) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient.iter().copied().filter(|&u| u != v).collect(),
            gens: self.gens.iter().filter(|g| g.exponent(v) == 0).cloned().collect(),
        }
    }

    /// Same generators over another ambient set.
    pub fn with_ambient(&self, ambient: Vec<u32>) -> Result<MonomialIdeal> {
        MonomialIdeal::new(ambient, self.gens.clone())
    }

    /// `√I`, generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal {
            ambient: self.ambient.clone(),
            gens: minimalize(self.gens.iter().map(|g| Monomial::from_support(g.support())).collect()),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a Arc<Ring>) -> impl fmt::Display + 'a {
        DisplayIdeal { ideal: self, ring }
    }
}

struct DisplayIdeal<'a> {
    ideal: &'a MonomialIdeal,
    ring: &'a Arc<Ring>,
}

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gs: Vec<String> = self.ideal.gens.iter().map(|g| self.ring.format_monomial(g)).collect();
        write!(f, "({})", gs.join(", "))
    }
}
