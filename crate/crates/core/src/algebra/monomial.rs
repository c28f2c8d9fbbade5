//! Indeterminates `x[q,i,j]` and sparse monomials over a ring's dense variable indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// The indeterminate `x[block,row,col]` (all 1-based).
///
/// H and V share entries: H position `(i, (q-1)n + j)` and V position
/// `((q-1)m + i, j)` both name `VariableId { block: q, row: i, col: j }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VariableId {
    pub block: u16,
    pub row: u16,
    pub col: u16,
}

impl VariableId {
    pub fn new(block: u16, row: u16, col: u16) -> Self {
        VariableId { block, row, col }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{},{}]", self.block, self.row, self.col)
    }
}

/// A monomial as a sorted sparse exponent list over ring variable indices.
///
/// Index 0 is the largest variable of the ring's term order, so lexicographic
/// comparison only needs the raw indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[(u32, u32); 6]>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(index: u32) -> Self {
        Monomial::var_pow(index, 1)
    }

    pub fn var_pow(index: u32, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        let mut exps = SmallVec::new();
        exps.push((index, e));
        Monomial { exps, degree: e }
    }

    /// Builds a monomial from arbitrary (index, exponent) pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(u32, u32); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(u32, u32); 6]> = SmallVec::new();
        for (i, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 += e,
                _ => out.push((i, e)),
            }
        }
        let degree = out.iter().map(|p| p.1).sum();
        Monomial { exps: out, degree }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn from_support<I: IntoIterator<Item = u32>>(vars: I) -> Self {
        Monomial::from_pairs(vars.into_iter().map(|v| (v, 1)))
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exps(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, var: u32) -> u32 {
        match self.exps.binary_search_by_key(&var, |p| p.0) {
            Ok(k) => self.exps[k].1,
            Err(_) => 0,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|p| p.1 == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|p| p.0)
    }

    /// Bloom-style mask over `index % 128`; `a | b` implies `mask(a) ⊆ mask(b)`.
    #[inline]
    pub fn mask(&self) -> u128 {
        self.exps.iter().fold(0u128, |m, p| m | (1u128 << (p.0 % 128)))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out: SmallVec<[(u32, u32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial {
            exps: out,
            degree: self.degree + other.degree,
        }
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree || self.exps.len() > other.exps.len() {
            return false;
        }
        let b = &other.exps;
        let mut j = 0;
        for &(v, e) in self.exps.iter() {
            while j < b.len() && b[j].0 < v {
                j += 1;
            }
            if j == b.len() || b[j].0 != v || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut out: SmallVec<[(u32, u32); 6]> = SmallVec::with_capacity(other.exps.len());
        let a = &self.exps;
        let mut i = 0;
        for &(v, e) in other.exps.iter() {
            if i < a.len() && a[i].0 == v {
                if e > a[i].1 {
                    out.push((v, e - a[i].1));
                }
                i += 1;
            } else {
                out.push((v, e));
            }
        }
        Monomial {
            exps: out,
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.exps, &other.exps);
        let mut out: SmallVec<[(u32, u32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1.max(b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        let degree = out.iter().map(|p| p.1).sum();
        Monomial { exps: out, degree }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => return false,
            }
        }
        true
    }

    /// `(self : x_var)`: lowers the exponent of `var` by one when present.
    pub fn colon_var(&self, var: u32) -> Monomial {
        match self.exps.binary_search_by_key(&var, |p| p.0) {
            Ok(k) => {
                let mut exps = self.exps.clone();
                if exps[k].1 == 1 {
                    exps.remove(k);
                } else {
                    exps[k].1 -= 1;
                }
                Monomial {
                    exps,
                    degree: self.degree - 1,
                }
            }
            Err(_) => self.clone(),
        }
    }

    /// Graded lexicographic comparison; smaller indices are larger variables.
    #[inline]
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()) {
            if a.0 != b.0 {
                // The side holding the smaller index carries the larger variable.
                return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
            }
            if a.1 != b.1 {
                return a.1.cmp(&b.1);
            }
        }
        self.exps.len().cmp(&other.exps.len())
    }

    /// Maps variable indices through `f` (used when changing rings).
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> Monomial {
        Monomial::from_pairs(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, e)| if *e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(u32, u32)]) -> Monomial {
        Monomial::from_pairs(p.iter().copied())
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[(0, 1), (3, 2)]);
        let b = m(&[(0, 2), (1, 1), (3, 2)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[(0, 1), (1, 1)]));
        assert_eq!(a.mul(&a.quotient_of(&b)), b);
    }

    #[test]
    fn grlex_prefers_degree_then_small_indices() {
        let x0 = Monomial::var(0);
        let x1 = Monomial::var(1);
        assert_eq!(x0.grlex_cmp(&x1), Ordering::Greater);
        assert_eq!(x0.grlex_cmp(&x0.mul(&x0)), Ordering::Less);
        assert_eq!(x0.grlex_cmp(&x0), Ordering::Equal);
        // x0*x3 > x1*x2 since x0 is the largest variable
        assert_eq!(m(&[(0, 1), (3, 1)]).grlex_cmp(&m(&[(1, 1), (2, 1)])), Ordering::Greater);
        // x0*x1 > x0*x2
        assert_eq!(m(&[(0, 1), (1, 1)]).grlex_cmp(&m(&[(0, 1), (2, 1)])), Ordering::Greater);
    }

    #[test]
    fn colon_and_lcm() {
        let a = m(&[(2, 2), (5, 1)]);
        assert_eq!(a.colon_var(5), m(&[(2, 2)]));
        assert_eq!(a.colon_var(2), m(&[(2, 1), (5, 1)]));
        assert_eq!(a.colon_var(7), a);
        assert_eq!(a.lcm(&m(&[(2, 1), (4, 3)])), m(&[(2, 2), (4, 3), (5, 1)]));
        assert!(a.is_coprime(&m(&[(1, 1), (3, 4)])));
    }
}
