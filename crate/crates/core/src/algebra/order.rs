//! Graded term orders given by a ranking of the variables, and the ring that
//! carries one.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::monomial::{Monomial, VariableId};
use crate::error::{Error, Result};

/// How the variable ranking of a [`TermOrder`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderKind {
    /// Row-major reading order of V: `(block, row, col)` ascending, earlier is larger.
    VReadingGrlex,
    /// Any other ranking (block-column-major, reversed, user supplied).
    CustomPermutationGrlex,
}

/// Named rankings available from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderChoice {
    /// `(block, row, col)` ascending.
    VReading,
    /// `(block, col, row)` ascending; also diagonal on H and V.
    BlockColumn,
    /// The V reading order reversed. Not diagonal.
    Reversed,
}

impl FromStr for OrderChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "v-reading" | "v-reading-grlex" => Ok(OrderChoice::VReading),
            "block-column" => Ok(OrderChoice::BlockColumn),
            "reversed" => Ok(OrderChoice::Reversed),
            other => Err(Error::Parse(format!("unknown term order `{other}`"))),
        }
    }
}

impl fmt::Display for OrderChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderChoice::VReading => "v-reading",
            OrderChoice::BlockColumn => "block-column",
            OrderChoice::Reversed => "reversed",
        })
    }
}

/// A graded lexicographic order: compare total degree, then lexicographically
/// with `rank[0]` the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    pub rank: Vec<VariableId>,
}

impl TermOrder {
    pub fn v_reading(pool: &[VariableId]) -> Self {
        let mut rank = pool.to_vec();
        rank.sort();
        rank.dedup();
        TermOrder {
            kind: OrderKind::VReadingGrlex,
            rank,
        }
    }

    pub fn block_column(pool: &[VariableId]) -> Self {
        let mut rank = pool.to_vec();
        rank.sort_by_key(|v| (v.block, v.col, v.row));
        rank.dedup();
        TermOrder {
            kind: OrderKind::CustomPermutationGrlex,
            rank,
        }
    }

    pub fn reversed(pool: &[VariableId]) -> Self {
        let mut rank = TermOrder::v_reading(pool).rank;
        rank.reverse();
        TermOrder {
            kind: OrderKind::CustomPermutationGrlex,
            rank,
        }
    }

    pub fn custom(rank: Vec<VariableId>) -> Result<Self> {
        let mut seen = rank.clone();
        seen.sort();
        seen.dedup();
        if seen.len() != rank.len() {
            return Err(Error::InvalidOrder("ranking repeats a variable".into()));
        }
        Ok(TermOrder {
            kind: OrderKind::CustomPermutationGrlex,
            rank,
        })
    }

    pub fn from_choice(choice: OrderChoice, pool: &[VariableId]) -> Self {
        match choice {
            OrderChoice::VReading => TermOrder::v_reading(pool),
            OrderChoice::BlockColumn => TermOrder::block_column(pool),
            OrderChoice::Reversed => TermOrder::reversed(pool),
        }
    }
}

/// A polynomial ring: coefficient field, term order, and the dense variable
/// indexing the order induces (index 0 is the largest variable).
#[derive(Debug)]
pub struct Ring {
    field: Field,
    order: TermOrder,
    index: HashMap<VariableId, u32>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.order == other.order
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(field: Field, order: TermOrder) -> Self {
        let index = order.rank.iter().enumerate().map(|(i, v)| (*v, i as u32)).collect();
        Ring { field, order, index }
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.order.rank.len()
    }

    pub fn variables(&self) -> &[VariableId] {
        &self.order.rank
    }

    pub fn index_of(&self, v: VariableId) -> Result<u32> {
        self.index
            .get(&v)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(v.to_string()))
    }

    #[inline]
    pub fn var(&self, index: u32) -> VariableId {
        self.order.rank[index as usize]
    }

    /// The monomial order of this ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.grlex_cmp(b)
    }

    pub fn monomial_of(&self, vars: &[(VariableId, u32)]) -> Result<Monomial> {
        let pairs = vars
            .iter()
            .map(|(v, e)| Ok((self.index_of(*v)?, *e)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::from_pairs(pairs))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.exps()
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    self.var(v).to_string()
                } else {
                    format!("{}^{e}", self.var(v))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Compares two monomials written over [`VariableId`]s under `ord`.
pub fn compare_monomials(a: &[(VariableId, u32)], b: &[(VariableId, u32)], ord: &TermOrder) -> Result<Ordering> {
    let ring = Ring::new(Field::Rationals, ord.clone());
    Ok(ring.cmp(&ring.monomial_of(a)?, &ring.monomial_of(b)?))
}
